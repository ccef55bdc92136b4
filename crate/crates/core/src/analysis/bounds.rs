use num_integer::Integer;
use num_traits::Zero;

use super::ReportItem;
use crate::arithmetic::{binomial, divisors, euler_phi, gcd, is_prime, Natural};
use crate::counting::{for_each_zero_sum_free, CountGrid};
use crate::error::{invalid, Result};

fn params(n: u64, d: u64) -> String {
    format!("n={n} d={d}")
}

fn check_range(n: u64, d: u64) -> Result<()> {
    if n < 3 || d == 0 || d >= n {
        return Err(invalid(format!(
            "need n >= 3 and 1 <= d < n, got n={n}, d={d}"
        )));
    }
    Ok(())
}

fn upper(claim: &str, n: u64, d: u64, value: &Natural, bound: Natural) -> ReportItem {
    ReportItem::check(
        claim,
        params(n, d),
        format!("<= {bound}"),
        value.to_string(),
        *value <= bound,
    )
}

fn lower(claim: &str, n: u64, d: u64, value: &Natural, bound: Natural) -> ReportItem {
    ReportItem::check(
        claim,
        params(n, d),
        format!(">= {bound}"),
        value.to_string(),
        *value >= bound,
    )
}

/// Upper and lower bounds on `α_n^d` and `β_n^d`, one item per applicable
/// inequality.
pub fn bounds_check(n: u64, d: u64, grid: &CountGrid) -> Result<Vec<ReportItem>> {
    check_range(n, d)?;
    let p = params(n, d);
    let (Some(alpha), Some(beta)) = (grid.alpha(n, d), grid.beta(n, d)) else {
        return Ok(vec![ReportItem::skipped("bounds", p, "table cell missing")]);
    };
    let mut items = vec![ReportItem::check(
        "beta-le-alpha",
        p.clone(),
        "0 <= beta <= alpha",
        format!("beta={beta} alpha={alpha}"),
        beta <= alpha,
    )];
    let big = Natural::from;

    if d >= 3 {
        let bound = big(n - 1).pow((d - 1) as u32) * big(n - 2);
        items.push(upper("alpha-upper", n, d, &alpha, bound));
    }
    if d >= 3 && n % 2 == 1 && is_prime(n) {
        let bound = big(n - 1) * big(n - 2).pow((d - 2) as u32) * big(n - 3);
        items.push(upper("prime-alpha-upper", n, d, &alpha, bound));
        items.push(ReportItem::equality(
            "prime-beta-equals-alpha",
            p.clone(),
            &alpha,
            &beta,
        ));
    }
    for m in divisors(n)? {
        if m == n {
            continue;
        }
        match grid.alpha(m, d) {
            Some(alpha_m) => {
                let bound = big(n / m).pow(d as u32) * alpha_m;
                items.push(
                    lower("divisor-scaling", n, d, &alpha, bound).with_params(format!("{p} m={m}")),
                );
            }
            None => items.push(ReportItem::skipped(
                "divisor-scaling",
                format!("{p} m={m}"),
                "table cell missing",
            )),
        }
    }
    items.push(lower("binomial-lower", n, d, &alpha, binomial(n - 1, d)));
    let bound = binomial(n - 2, d - 1) * euler_phi(n)?;
    items.push(lower("totient-binomial-lower", n, d, &beta, bound));
    Ok(items)
}

/// Unit-action orbits on irreducible tuples: `φ(n) | β_n^d`, the orbit count
/// `β_n^d / φ(n)`, and `C(n-1, d)` orbits when `d > n/2`.
pub fn orbit_check(n: u64, d: u64, grid: &CountGrid) -> Result<Vec<ReportItem>> {
    check_range(n, d)?;
    let p = params(n, d);
    let Some(beta) = grid.beta(n, d) else {
        return Ok(vec![ReportItem::skipped("orbits", p, "table cell missing")]);
    };
    let phi = Natural::from(euler_phi(n)?);
    let (orbits, rem) = beta.div_rem(&phi);
    let mut items = vec![
        ReportItem::check(
            "totient-divides-beta",
            p.clone(),
            format!("{phi} | beta"),
            format!("beta={beta} remainder={rem}"),
            rem.is_zero(),
        ),
        ReportItem::diagnostic("orbit-count", p.clone(), "", orbits.to_string()),
    ];
    if 2 * d > n {
        items.push(ReportItem::equality(
            "orbit-count-binomial",
            p,
            binomial(n - 1, d),
            &orbits,
        ));
    }
    Ok(items)
}

/// Tests `k·x = x` directly against `n / gcd(k-1, n) | gcd(x, n)` for every
/// zero-sum-free `x` and every unit `k`. Tuples with `gcd(x, n) = 1` must
/// have trivial stabilizer.
pub fn stabilizer_check(n: u64, d: u64, tuple_budget: u64) -> Vec<ReportItem> {
    let p = params(n, d);
    if let Err(e) = check_range(n, d) {
        return vec![ReportItem::skipped(
            "stabilizer-criterion",
            p,
            e.to_string(),
        )];
    }
    let units: Vec<u64> = (1..n).filter(|&k| gcd(k, n) == 1).collect();
    let mut pairs = 0u64;
    let mut mismatches = 0u64;
    let mut first_mismatch: Option<String> = None;
    let mut irreducible = 0u64;
    let mut nontrivial_irreducible = 0u64;

    let scan = for_each_zero_sum_free(n, d, tuple_budget, |xs| {
        let g = xs.iter().fold(n, |g, &x| gcd(g, x));
        let mut fixed_by_nonidentity = false;
        for &k in &units {
            pairs += 1;
            let fixes = xs.iter().all(|&x| k * x % n == x);
            let predicted = g % (n / gcd(k - 1, n)) == 0;
            if fixes != predicted {
                mismatches += 1;
                first_mismatch.get_or_insert_with(|| format!("x={xs:?} k={k}"));
            }
            fixed_by_nonidentity |= fixes && k != 1;
        }
        if g == 1 {
            irreducible += 1;
            nontrivial_irreducible += fixed_by_nonidentity as u64;
        }
    });
    if let Err(e) = scan {
        return vec![ReportItem::skipped(
            "stabilizer-criterion",
            p,
            e.to_string(),
        )];
    }
    let observed = match &first_mismatch {
        Some(example) => format!("{mismatches} of {pairs} pairs disagree, first {example}"),
        None => format!("0 of {pairs} pairs disagree"),
    };
    vec![
        ReportItem::check(
            "stabilizer-criterion",
            p.clone(),
            format!("0 of {pairs} pairs disagree"),
            observed,
            mismatches == 0,
        ),
        ReportItem::check(
            "irreducible-trivial-stabilizer",
            p,
            format!("0 of {irreducible} irreducible tuples fixed by a unit k != 1"),
            format!("{nontrivial_irreducible} of {irreducible} irreducible tuples fixed by a unit k != 1"),
            nontrivial_irreducible == 0,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::super::Verdict;
    use super::*;
    use crate::counting::CountConfig;

    fn grid(n_max: u64) -> CountGrid {
        CountGrid::compute(n_max, None, &CountConfig::default())
    }

    #[test]
    fn seven_four() {
        let g = grid(7);
        let items = bounds_check(7, 4, &g).unwrap();
        assert!(
            items.iter().all(|i| i.verdict == Verdict::Pass),
            "{items:#?}"
        );
        let binom = items.iter().find(|i| i.claim == "binomial-lower").unwrap();
        assert_eq!(binom.expected, ">= 15");
        let prime = items
            .iter()
            .find(|i| i.claim == "prime-alpha-upper")
            .unwrap();
        assert_eq!(prime.expected, "<= 600");
    }

    #[test]
    fn divisor_scaling_ten_four() {
        let g = grid(10);
        let items = bounds_check(10, 4, &g).unwrap();
        let five = items.iter().find(|i| i.params == "n=10 d=4 m=5").unwrap();
        assert_eq!(five.expected, ">= 64");
        assert_eq!(five.observed, "1344");
        assert_eq!(five.verdict, Verdict::Pass);
    }

    #[test]
    fn first_column_is_tight() {
        let g = grid(9);
        let items = bounds_check(9, 1, &g).unwrap();
        let binom = items.iter().find(|i| i.claim == "binomial-lower").unwrap();
        assert_eq!(
            (binom.expected.as_str(), binom.observed.as_str()),
            (">= 8", "8")
        );
    }

    #[test]
    fn missing_cells_are_skipped() {
        let g = grid(6);
        let items = bounds_check(9, 3, &g).unwrap();
        assert_eq!(items[0].verdict, Verdict::Skipped);
        assert!(bounds_check(2, 1, &g).is_err());
    }

    #[test]
    fn orbits() {
        let g = grid(10);
        let ten = orbit_check(10, 7, &g).unwrap();
        assert!(ten.iter().all(|i| i.verdict != Verdict::Fail));
        assert_eq!(ten.last().unwrap().observed, "36");
        let six = orbit_check(6, 2, &g).unwrap();
        assert_eq!(six[1].observed, "9");
        let last = orbit_check(9, 8, &g).unwrap();
        assert_eq!(last[1].observed, "1");
    }

    #[test]
    fn stabilizers_small() {
        for n in 3..=9 {
            for d in 1..n.min(5) {
                let items = stabilizer_check(n, d, 1_000_000);
                assert!(
                    items.iter().all(|i| i.verdict == Verdict::Pass),
                    "{items:#?}"
                );
            }
        }
        let refused = stabilizer_check(12, 9, 1000);
        assert_eq!(refused[0].verdict, Verdict::Skipped);
    }

    #[test]
    fn stabilizer_worked_example() {
        // 5·(2, 6) ≡ (2, 6) mod 8, and 8 / gcd(4, 8) = 2 divides gcd(2, 6, 8) = 2
        let (n, k) = (8u64, 5u64);
        assert_eq!((k * 2 % n, k * 6 % n), (2, 6));
        assert_eq!(gcd(2, gcd(6, 8)) % (n / gcd(k - 1, n)), 0);
        // 5·3 ≡ 3 mod 6
        assert_eq!(5 * 3 % 6, 3);
        assert_eq!(3 % (6 / gcd(4, 6)), 0);
    }
}
