use std::cmp::Ordering;
use std::fmt;

use super::ReportItem;
use crate::arithmetic::{euler_phi, Natural};
use crate::counting::CountGrid;
use crate::error::Result;

/// Which monotonicity statement a finding contradicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FindingKind {
    /// `α_n^d < α_n^{d+1}` for `d + 1 < n/2`, and the reverse above `n/2`.
    Row,
    /// `α_n^d < α_{n+1}^d`.
    Column,
    /// A column violation at or above the eventual-growth threshold.
    EventualColumn,
}

impl FindingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FindingKind::Row => "row",
            FindingKind::Column => "column",
            FindingKind::EventualColumn => "eventual-column",
        }
    }
}

/// Movement observed where the hypothesis predicts the opposite one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Increase,
    Decrease,
    Equal,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Increase => "increase",
            Direction::Decrease => "decrease",
            Direction::Equal => "equal",
        })
    }
}

/// One violated comparison.
///
/// For rows the witness `(n, d)` compares `α_n^d` with `α_n^{d+1}`; for
/// columns it compares `α_n^d` with `α_{n+1}^d`. `values` holds the two
/// counts in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisFinding {
    pub kind: FindingKind,
    pub witness: (u64, u64),
    pub direction: Direction,
    pub values: (Natural, Natural),
}

/// Sign of `α_{n+1}^d - α_n^d` against the sign of
/// `φ(n+1)/φ(n) - (n-d)/n`, for `d > (n+1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnComparison {
    pub n: u64,
    pub d: u64,
    pub observed: Ordering,
    pub criterion: Ordering,
}

impl ColumnComparison {
    pub fn agrees(&self) -> bool {
        self.observed == self.criterion
    }

    pub fn is_tie(&self) -> bool {
        self.criterion == Ordering::Equal
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisScan {
    pub n_max: u64,
    pub findings: Vec<HypothesisFinding>,
    pub comparisons: Vec<ColumnComparison>,
}

impl HypothesisScan {
    pub fn of_kind(&self, kind: FindingKind) -> impl Iterator<Item = &HypothesisFinding> {
        self.findings.iter().filter(move |f| f.kind == kind)
    }

    pub fn contains(&self, kind: FindingKind, witness: (u64, u64)) -> bool {
        self.findings
            .iter()
            .any(|f| f.kind == kind && f.witness == witness)
    }
}

/// Column growth is only demanded from `n >= 2^d` on.
pub(crate) fn eventual_threshold(d: u64) -> u64 {
    1u64.checked_shl(d as u32).unwrap_or(u64::MAX)
}

fn against(expected: Ordering, first: &Natural, second: &Natural) -> Option<Direction> {
    match (expected, second.cmp(first)) {
        (_, Ordering::Equal) => Some(Direction::Equal),
        (Ordering::Greater, Ordering::Less) => Some(Direction::Decrease),
        (Ordering::Less, Ordering::Greater) => Some(Direction::Increase),
        _ => None,
    }
}

/// Row, column and eventual-column violations over `2 <= n <= n_max`, plus
/// the totient-ratio cross-check for every column step with `d > (n+1)/2`.
/// Equal neighbours are reported with [`Direction::Equal`].
pub fn hypothesis_scan(grid: &CountGrid, n_max: u64) -> Result<HypothesisScan> {
    grid.require_complete(2, n_max, None)?;
    let a = |n: u64, d: u64| grid.alpha(n, d).expect("complete table");
    let mut findings = Vec::new();

    for n in 3..=n_max {
        for d in 1..n - 1 {
            let expected = if 2 * (d + 1) < n {
                Ordering::Greater
            } else if 2 * d > n {
                Ordering::Less
            } else {
                continue;
            };
            let (x, y) = (a(n, d), a(n, d + 1));
            if let Some(direction) = against(expected, &x, &y) {
                findings.push(HypothesisFinding {
                    kind: FindingKind::Row,
                    witness: (n, d),
                    direction,
                    values: (x, y),
                });
            }
        }
    }

    for d in 1..n_max {
        for n in d + 1..n_max {
            let (x, y) = (a(n, d), a(n + 1, d));
            if let Some(direction) = against(Ordering::Greater, &x, &y) {
                let kind = if n >= eventual_threshold(d) {
                    FindingKind::EventualColumn
                } else {
                    FindingKind::Column
                };
                findings.push(HypothesisFinding {
                    kind,
                    witness: (n, d),
                    direction,
                    values: (x, y),
                });
            }
        }
    }

    let mut comparisons = Vec::new();
    for n in 2..n_max {
        let phi_n = euler_phi(n)?;
        let phi_next = euler_phi(n + 1)?;
        for d in n.div_ceil(2)..n {
            if 2 * d <= n + 1 {
                continue;
            }
            let lhs = u128::from(phi_next) * u128::from(n);
            let rhs = u128::from(n - d) * u128::from(phi_n);
            comparisons.push(ColumnComparison {
                n,
                d,
                observed: a(n + 1, d).cmp(&a(n, d)),
                criterion: lhs.cmp(&rhs),
            });
        }
    }

    Ok(HypothesisScan {
        n_max,
        findings,
        comparisons,
    })
}

/// Row counterexample stated with the reference table, and the `n` it is
/// claimed to be the smallest for.
const STATED_ROW_COUNTEREXAMPLE: (u64, u64) = (17, 6);
/// Column counterexample stated with the reference table: `α_18^6 < α_17^6`.
const STATED_COLUMN_COUNTEREXAMPLE: (u64, u64) = (17, 6);
/// Columns whose `17 -> 18` step decreases in the reference table.
const REFERENCE_COLUMN_DECREASES: [u64; 2] = [9, 10];

fn sign(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "-",
        Ordering::Equal => "0",
        Ordering::Greater => "+",
    }
}

/// Report items for a scan: every finding as a diagnostic, the stated
/// counterexamples checked against the data, and one item per totient-ratio
/// comparison (ties as diagnostics).
pub fn hypothesis_report(scan: &HypothesisScan, grid: &CountGrid) -> Vec<ReportItem> {
    let mut items = Vec::new();
    for f in &scan.findings {
        let (n, d) = f.witness;
        let (next_n, next_d) = match f.kind {
            FindingKind::Row => (n, d + 1),
            _ => (n + 1, d),
        };
        items.push(ReportItem::diagnostic(
            format!("{}-{}", f.kind.as_str(), f.direction),
            format!("n={n} d={d}"),
            "",
            format!(
                "alpha({n},{d})={} alpha({next_n},{next_d})={}",
                f.values.0, f.values.1
            ),
        ));
    }

    let smallest_row = scan
        .of_kind(FindingKind::Row)
        .filter(|f| f.direction != Direction::Increase)
        .map(|f| f.witness)
        .min();
    items.push(ReportItem::diagnostic(
        "row-smallest-counterexample",
        format!("n<={}", scan.n_max),
        "",
        match smallest_row {
            Some((n, d)) => format!("n={n} d={d}"),
            None => "none".to_string(),
        },
    ));

    if scan.n_max >= 18 {
        let (n, d) = STATED_ROW_COUNTEREXAMPLE;
        let (x, y) = (grid.alpha(n, d), grid.alpha(n, d + 1));
        items.push(ReportItem::check(
            "stated-row-counterexample",
            format!("n={n} d={d}"),
            format!("alpha({n},{d}) > alpha({n},{})", d + 1),
            format!("{} vs {}", show(&x), show(&y)),
            scan.contains(FindingKind::Row, (n, d)),
        ));
        if let Some((sn, sd)) = smallest_row.filter(|&(sn, _)| sn != n) {
            items.push(ReportItem::diagnostic(
                "stated-row-counterexample-is-smallest",
                format!("n={n}"),
                format!("smallest row counterexample at n={n}"),
                format!("smaller counterexample at n={sn} d={sd}"),
            ));
        }

        let (n, d) = STATED_COLUMN_COUNTEREXAMPLE;
        let (x, y) = (grid.alpha(n, d), grid.alpha(n + 1, d));
        let holds = scan.contains(FindingKind::Column, (n, d));
        let observed = format!(
            "alpha({n},{d})={} alpha({},{d})={}{}",
            show(&x),
            n + 1,
            show(&y),
            if holds {
                ""
            } else {
                ": no decrease in the data"
            }
        );
        items.push(ReportItem::diagnostic(
            "stated-column-counterexample",
            format!("n={n} d={d}"),
            format!("alpha({},{d}) < alpha({n},{d})", n + 1),
            observed,
        ));

        let detected: Vec<u64> = REFERENCE_COLUMN_DECREASES
            .iter()
            .copied()
            .filter(|&d| scan.contains(FindingKind::Column, (17, d)))
            .collect();
        items.push(ReportItem::check(
            "column-decrease-17-to-18",
            "n=17",
            format!("d in {REFERENCE_COLUMN_DECREASES:?}"),
            format!("d in {detected:?}"),
            detected == REFERENCE_COLUMN_DECREASES,
        ));
    }

    let low: Vec<(u64, u64)> = scan
        .findings
        .iter()
        .filter(|f| f.kind != FindingKind::Row && f.witness.1 <= 3)
        .map(|f| f.witness)
        .collect();
    items.push(ReportItem::check(
        "low-columns-increasing",
        format!("d<=3 n<={}", scan.n_max),
        "no violations",
        if low.is_empty() {
            "no violations".to_string()
        } else {
            format!("violations at {low:?}")
        },
        low.is_empty(),
    ));

    for c in &scan.comparisons {
        let params = format!("n={} d={}", c.n, c.d);
        let expected = format!("sign {}", sign(c.criterion));
        let observed = format!("sign {}", sign(c.observed));
        if c.is_tie() {
            items.push(ReportItem::diagnostic(
                "totient-ratio-tie",
                params,
                expected,
                observed,
            ));
        } else {
            items.push(ReportItem::check(
                "totient-ratio-column-step",
                params,
                expected,
                observed,
                c.agrees(),
            ));
        }
    }
    items
}

fn show(v: &Option<Natural>) -> String {
    v.as_ref()
        .map_or_else(|| "?".to_string(), ToString::to_string)
}
