use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::reference::{reference_alpha, REFERENCE_N_MAX};
use crate::analysis::{
    bounds_check, eventual_column_check, hypothesis_report, hypothesis_scan, orbit_check,
    stabilizer_check, Report, ReportItem,
};
use crate::arithmetic::{divisors, moebius, Natural};
use crate::counting::{
    alpha_closed_high_d, alpha_dp, alpha_small_d, recursion_identities, CountConfig, CountGrid,
};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Table,
    Bounds,
    Orbits,
    Moebius,
    Formulas,
    Hypotheses,
    Stabilizers,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Table,
        Suite::Bounds,
        Suite::Orbits,
        Suite::Moebius,
        Suite::Formulas,
        Suite::Hypotheses,
        Suite::Stabilizers,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Table => "table",
            Suite::Bounds => "bounds",
            Suite::Orbits => "orbits",
            Suite::Moebius => "moebius",
            Suite::Formulas => "formulas",
            Suite::Hypotheses => "hypotheses",
            Suite::Stabilizers => "stabilizers",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| invalid(format!("unknown suite {s:?}")))
    }
}

fn missing(claim: &str, n: u64, d: u64) -> ReportItem {
    ReportItem::skipped(claim, format!("n={n} d={d}"), "table cell missing")
}

/// Computed `α` against the embedded reference table.
pub fn table_suite(grid: &CountGrid, n_max: u64) -> Vec<ReportItem> {
    let mut items = Vec::new();
    for n in 2..=n_max.min(REFERENCE_N_MAX) {
        for d in 1..n {
            let expected = reference_alpha(n, d).expect("inside reference table");
            items.push(match grid.alpha(n, d) {
                Some(a) => {
                    ReportItem::equality("reference-table", format!("n={n} d={d}"), expected, a)
                }
                None => missing("reference-table", n, d),
            });
        }
    }
    items
}

pub fn bounds_suite(grid: &CountGrid, n_max: u64) -> Result<Vec<ReportItem>> {
    let mut items = Vec::new();
    for n in 3..=n_max {
        for d in 1..n {
            items.extend(bounds_check(n, d, grid)?);
        }
    }
    Ok(items)
}

pub fn orbits_suite(grid: &CountGrid, n_max: u64) -> Result<Vec<ReportItem>> {
    let mut items = Vec::new();
    for n in 3..=n_max {
        for d in 1..n {
            items.extend(orbit_check(n, d, grid)?);
        }
    }
    Ok(items)
}

/// Divisor-sum identity, Möbius inversion against the direct `β`, the
/// `d >= n/2` collapse, and the prime-set recursions.
pub fn moebius_suite(grid: &CountGrid, n_max: u64) -> Result<Vec<ReportItem>> {
    let mut items = Vec::new();
    for n in 2..=n_max {
        for d in 1..n {
            let params = format!("n={n} d={d}");
            let (Some(alpha), Some(beta)) = (grid.alpha(n, d), grid.beta(n, d)) else {
                items.push(missing("divisor-sum", n, d));
                continue;
            };
            let divs = divisors(n)?;
            let betas: Option<Vec<Natural>> = divs.iter().map(|&m| grid.beta(m, d)).collect();
            let alphas: Option<Vec<Natural>> = divs.iter().map(|&m| grid.alpha(m, d)).collect();
            let (Some(betas), Some(alphas)) = (betas, alphas) else {
                items.push(missing("divisor-sum", n, d));
                continue;
            };
            let sum: Natural = betas.iter().sum();
            items.push(ReportItem::equality(
                "divisor-sum",
                params.clone(),
                &alpha,
                sum,
            ));

            let mut inverted = BigInt::zero();
            for (&m, a) in divs.iter().zip(&alphas) {
                inverted += BigInt::from(moebius(n / m)?) * BigInt::from(a.clone());
            }
            items.push(ReportItem::equality(
                "moebius-inversion",
                params.clone(),
                &beta,
                inverted,
            ));

            if 2 * d >= n {
                items.push(ReportItem::equality(
                    "collapse-alpha-equals-beta",
                    params.clone(),
                    &alpha,
                    &beta,
                ));
            }

            let lookup = |m: u64| {
                grid.alpha(m, d)
                    .ok_or_else(|| invalid(format!("table cell n={m}, d={d} missing")))
            };
            match recursion_identities(n, d, &beta, lookup) {
                Ok(r) => {
                    items.push(ReportItem::check(
                        "prime-set-recursion",
                        params.clone(),
                        "holds",
                        if r.general { "holds" } else { "fails" },
                        r.general,
                    ));
                    if let Some(ok) = r.prime_power {
                        let seen = if ok { "holds" } else { "fails" };
                        items.push(ReportItem::check(
                            "prime-power-recursion",
                            params.clone(),
                            "holds",
                            seen,
                            ok,
                        ));
                    }
                    if let Some(ok) = r.semiprime {
                        let seen = if ok { "holds" } else { "fails" };
                        items.push(ReportItem::check(
                            "semiprime-recursion",
                            params.clone(),
                            "holds",
                            seen,
                            ok,
                        ));
                    }
                }
                Err(e) => items.push(ReportItem::skipped(
                    "prime-set-recursion",
                    params,
                    e.to_string(),
                )),
            }
        }
    }
    Ok(items)
}

/// Closed forms against a DP sweep computed for this suite alone, so the
/// comparison never reads a formula-produced cell.
pub fn formulas_suite(n_max: u64, cfg: &CountConfig) -> Vec<ReportItem> {
    let mut items = Vec::new();
    for n in 3..=n_max {
        let sweep = match alpha_dp(n, n - 1, cfg) {
            Ok(v) => v,
            Err(e) => {
                items.push(ReportItem::skipped(
                    "closed-form",
                    format!("n={n}"),
                    e.to_string(),
                ));
                continue;
            }
        };
        for d in 1..n {
            let dp = &sweep[d as usize - 1];
            let params = format!("n={n} d={d}");
            if d <= 3 {
                match alpha_small_d(n, d) {
                    Ok(v) => items.push(ReportItem::equality(
                        "small-d-formula",
                        params.clone(),
                        v,
                        dp,
                    )),
                    Err(e) => items.push(ReportItem::skipped(
                        "small-d-formula",
                        params.clone(),
                        e.to_string(),
                    )),
                }
            }
            if 2 * d > n {
                match alpha_closed_high_d(n, d) {
                    Ok(v) => items.push(ReportItem::equality("high-d-formula", params, v, dp)),
                    Err(e) => {
                        items.push(ReportItem::skipped("high-d-formula", params, e.to_string()))
                    }
                }
            }
        }
    }
    items
}

pub fn hypotheses_suite(grid: &CountGrid, n_max: u64) -> Result<Vec<ReportItem>> {
    let scan = hypothesis_scan(grid, n_max)?;
    let mut items = hypothesis_report(&scan, grid);
    for d in 1..n_max {
        items.extend(eventual_column_check(d, 2, n_max, grid, None));
    }
    Ok(items)
}

pub fn stabilizers_suite(n_max: u64, cfg: &CountConfig) -> Vec<ReportItem> {
    let mut items = Vec::new();
    for n in 3..=n_max {
        for d in 1..n {
            items.extend(stabilizer_check(n, d, cfg.tuple_budget));
        }
    }
    items
}

/// Runs `suites` in the order given; a suite that cannot start (for example
/// on an incomplete table) contributes one skipped item.
pub fn run_suites(
    suites: &[Suite],
    grid: &CountGrid,
    n_max: u64,
    cfg: &CountConfig,
) -> Vec<(Suite, Report)> {
    suites
        .iter()
        .map(|&suite| {
            let items = match suite {
                Suite::Table => Ok(table_suite(grid, n_max)),
                Suite::Bounds => bounds_suite(grid, n_max),
                Suite::Orbits => orbits_suite(grid, n_max),
                Suite::Moebius => moebius_suite(grid, n_max),
                Suite::Formulas => Ok(formulas_suite(n_max, cfg)),
                Suite::Hypotheses => hypotheses_suite(grid, n_max),
                Suite::Stabilizers => Ok(stabilizers_suite(n_max, cfg)),
            };
            let report = match items {
                Ok(items) => items.into_iter().collect(),
                Err(e) => std::iter::once(ReportItem::skipped(
                    suite.as_str(),
                    format!("n<={n_max}"),
                    e.to_string(),
                ))
                .collect(),
            };
            (suite, report)
        })
        .collect()
}
