#include <stdio.h>
#include <string.h>
#include "zsf.h"

static int check(int ok, const char *what) {
    if (!ok) {
        const char *msg = zsf_last_error();
        fprintf(stderr, "FAIL %s (%s)\n", what, msg ? msg : "no message");
    }
    return ok ? 0 : 1;
}

int main(void) {
    int failures = 0;
    char *s = NULL;

    failures += check(zsf_alpha(17, 6, NULL, &s) == ZSF_STATUS_OK && strcmp(s, "217056") == 0, "alpha");
    zsf_string_free(s);

    ZsfCharPoly *poly = NULL;
    failures += check(zsf_char_poly_new(4, ZSF_POLY_METHOD_AUTO, NULL, &poly) == ZSF_STATUS_OK, "poly");
    failures += check(zsf_char_poly_degree(poly) == 4, "degree");
    failures += check(zsf_char_poly_coefficient(poly, 0, &s) == ZSF_STATUS_OK && strcmp(s, "104") == 0, "coefficient");
    zsf_string_free(s);
    zsf_char_poly_free(poly);

    ZsfConfig cfg = zsf_config_default();
    cfg.tuple_budget = 10;
    failures += check(zsf_alpha(0, 2, &cfg, &s) == ZSF_STATUS_INVALID_ARGUMENT, "invalid");
    failures += check(zsf_last_error() != NULL, "message");

    printf("%d failures\n", failures);
    return failures;
}
