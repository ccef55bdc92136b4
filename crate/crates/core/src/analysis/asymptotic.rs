use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::hypotheses::eventual_threshold;
use super::ReportItem;
use crate::arithmetic::{zeta_reciprocal_scaled, Natural};
use crate::counting::CountGrid;
use crate::error::Result;

#[derive(Debug, Clone)]
pub struct AsymptoticOptions {
    /// Width of the enclosure for `1/(d! ζ(d))`.
    pub eps: BigRational,
    /// `n` from which `β_n^d / n^d` must clear the `ζ` bound. `None` uses
    /// [`empirical_threshold`].
    pub threshold: Option<u64>,
}

impl Default for AsymptoticOptions {
    fn default() -> Self {
        AsymptoticOptions {
            eps: BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000u64)),
            threshold: None,
        }
    }
}

fn ratio(count: &Natural, n: u64, d: u64) -> f64 {
    let num = BigRational::from_integer(BigInt::from(count.clone()));
    let den = BigRational::from_integer(BigInt::from(Natural::from(n).pow(d as u32)));
    (num / den).to_f64().unwrap_or(f64::NAN)
}

/// `count / n^d >= bound`, exactly.
fn clears(count: &Natural, n: u64, d: u64, bound: &BigRational) -> bool {
    let lhs = BigInt::from(count.clone()) * bound.denom();
    let rhs = bound.numer() * BigInt::from(Natural::from(n).pow(d as u32));
    lhs >= rhs
}

/// Smallest `N` such that `β_n^d / n^d >= bound` for every `N <= n <= n_max`
/// present in the grid; `None` when it fails at `n_max` itself.
pub fn empirical_threshold(
    d: u64,
    n_max: u64,
    grid: &CountGrid,
    bound: &BigRational,
) -> Option<u64> {
    let mut threshold = None;
    for n in (2..=n_max).rev() {
        match grid.beta(n, d) {
            Some(b) if clears(&b, n, d, bound) => threshold = Some(n),
            _ => break,
        }
    }
    threshold
}

/// Ratio series `α_n^d / n^d` and `β_n^d / n^d` for `2 <= n <= n_max`.
///
/// Only two things are asserted: `0 <= β_n^d <= n^d`, and for `d >= 2` that
/// `β_n^d / n^d` is at least the lower end of the `1/(d! ζ(d))` enclosure
/// from the threshold on. Everything else is a diagnostic.
pub fn asymptotic_report(
    d: u64,
    n_max: u64,
    grid: &CountGrid,
    opts: &AsymptoticOptions,
) -> Result<Vec<ReportItem>> {
    let mut items = Vec::new();
    for n in 2..=n_max {
        let params = format!("n={n} d={d}");
        let (Some(a), Some(b)) = (grid.alpha(n, d), grid.beta(n, d)) else {
            items.push(ReportItem::skipped("ratio", params, "table cell missing"));
            continue;
        };
        items.push(ReportItem::diagnostic(
            "ratio",
            params.clone(),
            "",
            format!(
                "alpha/n^d={:.6} beta/n^d={:.6}",
                ratio(&a, n, d),
                ratio(&b, n, d)
            ),
        ));
        let power = Natural::from(n).pow(d as u32);
        items.push(ReportItem::check(
            "beta-ratio-unit-interval",
            params,
            format!("0 <= beta <= {power}"),
            b.to_string(),
            b <= power,
        ));
    }
    if d < 2 {
        return Ok(items);
    }

    let interval = zeta_reciprocal_scaled(d as u32, &opts.eps)?;
    items.push(ReportItem::diagnostic(
        "zeta-reciprocal-enclosure",
        format!("d={d}"),
        "",
        format!("[{:.9}, {:.9}]", interval.lo_f64(), interval.hi_f64()),
    ));
    let threshold = match opts.threshold {
        Some(t) => Some(t),
        None => empirical_threshold(d, n_max, grid, &interval.lo),
    };
    items.push(ReportItem::diagnostic(
        "zeta-bound-threshold",
        format!("d={d} n<={n_max}"),
        "",
        threshold.map_or_else(|| "none in range".to_string(), |t| format!("n>={t}")),
    ));
    if let Some(t) = threshold {
        for n in t.max(2)..=n_max {
            let params = format!("n={n} d={d}");
            match grid.beta(n, d) {
                Some(b) => items.push(ReportItem::check(
                    "beta-ratio-zeta-lower",
                    params,
                    format!(">= {:.9}", interval.lo_f64()),
                    format!("{:.9}", ratio(&b, n, d)),
                    clears(&b, n, d, &interval.lo),
                )),
                None => items.push(ReportItem::skipped(
                    "beta-ratio-zeta-lower",
                    params,
                    "table cell missing",
                )),
            }
        }
    }
    Ok(items)
}

/// Column growth `α_{n+1}^d > α_n^d` asserted for `threshold <= n < n_hi`
/// (default threshold `2^d`); decreases below the threshold are listed as a
/// diagnostic.
pub fn eventual_column_check(
    d: u64,
    n_lo: u64,
    n_hi: u64,
    grid: &CountGrid,
    threshold: Option<u64>,
) -> Vec<ReportItem> {
    let threshold = threshold.unwrap_or_else(|| eventual_threshold(d));
    let mut items = Vec::new();
    let mut differences = Vec::new();
    let mut largest_violation = None;
    for n in n_lo.max(d + 1)..n_hi {
        let params = format!("n={n} d={d}");
        let (Some(x), Some(y)) = (grid.alpha(n, d), grid.alpha(n + 1, d)) else {
            items.push(ReportItem::skipped(
                "eventual-column-step",
                params,
                "table cell missing",
            ));
            continue;
        };
        let diff = BigInt::from(y) - BigInt::from(x);
        let positive = diff > BigInt::zero();
        if !positive {
            largest_violation = Some(n);
        }
        if n >= threshold {
            items.push(ReportItem::check(
                "eventual-column-step",
                params,
                "> 0",
                diff.to_string(),
                positive,
            ));
        }
        differences.push(diff.to_string());
    }
    items.push(ReportItem::diagnostic(
        "column-differences",
        format!("d={d} threshold={threshold}"),
        "",
        differences.join(","),
    ));
    items.push(ReportItem::diagnostic(
        "largest-column-decrease",
        format!("d={d}"),
        "",
        largest_violation.map_or_else(|| "none".to_string(), |n| format!("n={n} -> {}", n + 1)),
    ));
    items
}
