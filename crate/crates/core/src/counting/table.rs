use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use super::{
    alpha_closed_high_d, alpha_route, alpha_small_d, beta_moebius, dp, CountConfig, Method,
};
use crate::arithmetic::{euler_phi, Natural};
use crate::error::{invalid, Error, Result};

/// Routes that produced one `(α, β)` cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub alpha: Method,
    pub beta: Method,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.alpha, self.beta)
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| invalid(format!("provenance {s:?} is not of the form alpha/beta")))?;
        Ok(Provenance {
            alpha: a.parse()?,
            beta: b.parse()?,
        })
    }
}

/// Exact `α_n^d` and `β_n^d` for one modulus `n`, keyed by `d`.
///
/// Only `1 ≤ d < n` is stored; larger `d` read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub n: u64,
    pub alpha: BTreeMap<u64, Natural>,
    pub beta: BTreeMap<u64, Natural>,
    pub provenance: BTreeMap<u64, Provenance>,
    /// Cells that could not be computed, with the reason.
    pub refusals: BTreeMap<u64, String>,
}

impl CountTable {
    pub fn new(n: u64) -> Self {
        CountTable {
            n,
            alpha: BTreeMap::new(),
            beta: BTreeMap::new(),
            provenance: BTreeMap::new(),
            refusals: BTreeMap::new(),
        }
    }

    /// Fills `1 ≤ d ≤ min(n-1, d_max)`.
    ///
    /// `α` comes from the closed forms where they apply and from the DP
    /// otherwise; `β` from the gcd-tracking DP, falling back to Möbius
    /// inversion past the state cap. Failures are recorded per cell.
    pub fn compute(n: u64, d_max: u64, cfg: &CountConfig) -> Self {
        let mut table = CountTable::new(n);
        let limit = d_max.min(n.saturating_sub(1));
        if limit == 0 {
            return table;
        }
        let sweep = dp::run(n, limit, true, cfg);
        let (reached, refusal) = match &sweep {
            Ok(outcome) => (
                outcome.counts.alpha.len() as u64,
                outcome.refusal.as_ref().map(ToString::to_string),
            ),
            Err(e) => (0, Some(e.to_string())),
        };
        let dp_value = |d: u64, beta: bool| -> Option<Natural> {
            let outcome = sweep.as_ref().ok()?;
            let column = if beta {
                &outcome.counts.beta
            } else {
                &outcome.counts.alpha
            };
            column.get(d as usize - 1).cloned()
        };

        for d in 1..=limit {
            let alpha: std::result::Result<(Natural, Method), String> = match alpha_route(n, d) {
                Method::SmallD => alpha_small_d(n, d)
                    .map(|v| (v, Method::SmallD))
                    .map_err(|e| e.to_string()),
                Method::HighD => alpha_closed_high_d(n, d)
                    .map(|v| (v, Method::HighD))
                    .map_err(|e| e.to_string()),
                _ => dp_value(d, false).map(|v| (v, Method::Dp)).ok_or_else(|| {
                    refusal
                        .clone()
                        .unwrap_or_else(|| format!("DP did not reach depth {d}"))
                }),
            };
            let beta = if d <= reached {
                Ok((dp_value(d, true).expect("reached depth"), Method::DpGcd))
            } else {
                beta_moebius(n, d, cfg)
                    .map(|v| (v, Method::Moebius))
                    .map_err(|e| e.to_string())
            };
            match (alpha, beta) {
                (Ok((a, am)), Ok((b, bm))) => table.insert(
                    d,
                    a,
                    b,
                    Provenance {
                        alpha: am,
                        beta: bm,
                    },
                ),
                (Err(reason), _) | (_, Err(reason)) => {
                    table.refusals.insert(d, reason);
                }
            }
        }
        table
    }

    pub fn insert(&mut self, d: u64, alpha: Natural, beta: Natural, provenance: Provenance) {
        self.refusals.remove(&d);
        self.alpha.insert(d, alpha);
        self.beta.insert(d, beta);
        self.provenance.insert(d, provenance);
    }

    pub fn alpha_at(&self, d: u64) -> Option<Natural> {
        if d >= self.n {
            return Some(Natural::zero());
        }
        self.alpha.get(&d).cloned()
    }

    pub fn beta_at(&self, d: u64) -> Option<Natural> {
        if d >= self.n {
            return Some(Natural::zero());
        }
        self.beta.get(&d).cloned()
    }

    /// Every `1 ≤ d ≤ min(n-1, d_max)` is present.
    pub fn is_complete(&self, d_max: u64) -> bool {
        (1..=d_max.min(self.n.saturating_sub(1))).all(|d| self.alpha.contains_key(&d))
    }

    /// Violated table invariants, empty when sound.
    pub fn invariant_violations(&self) -> Vec<String> {
        let phi = euler_phi(self.n.max(1)).unwrap_or(1);
        let mut out = Vec::new();
        for (&d, a) in &self.alpha {
            if d >= self.n && !a.is_zero() {
                out.push(format!("alpha[{}][{d}] = {a} but d >= n", self.n));
            }
            if let Some(b) = self.beta.get(&d) {
                if b > a {
                    out.push(format!("beta[{}][{d}] = {b} exceeds alpha = {a}", self.n));
                }
                if d < self.n && !(b % phi).is_zero() {
                    out.push(format!(
                        "phi({}) = {phi} does not divide beta[{d}] = {b}",
                        self.n
                    ));
                }
            }
        }
        out
    }
}

/// One output row of a table sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub n: u64,
    pub d: u64,
    pub alpha: Option<Natural>,
    pub beta: Option<Natural>,
    pub provenance: Option<Provenance>,
}

/// Tables for a contiguous range of moduli.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountGrid {
    tables: BTreeMap<u64, CountTable>,
}

impl CountGrid {
    /// Tables for every `1 ≤ n ≤ n_max`, computed in parallel on the current
    /// rayon pool; the result does not depend on scheduling.
    pub fn compute(n_max: u64, d_max: Option<u64>, cfg: &CountConfig) -> Self {
        Self::compute_moduli((1..=n_max).collect(), d_max, cfg)
    }

    pub fn compute_moduli(moduli: Vec<u64>, d_max: Option<u64>, cfg: &CountConfig) -> Self {
        let tables: Vec<CountTable> = moduli
            .into_par_iter()
            .map(|n| CountTable::compute(n, d_max.unwrap_or(u64::MAX), cfg))
            .collect();
        CountGrid::from_tables(tables)
    }

    pub fn from_tables(tables: impl IntoIterator<Item = CountTable>) -> Self {
        CountGrid {
            tables: tables.into_iter().map(|t| (t.n, t)).collect(),
        }
    }

    pub fn insert(&mut self, table: CountTable) {
        self.tables.insert(table.n, table);
    }

    pub fn table(&self, n: u64) -> Option<&CountTable> {
        self.tables.get(&n)
    }

    pub fn tables(&self) -> impl Iterator<Item = &CountTable> {
        self.tables.values()
    }

    pub fn n_max(&self) -> Option<u64> {
        self.tables.keys().next_back().copied()
    }

    /// `α_n^d`; zero for `n = 1` or `d ≥ n` even when no table is stored.
    pub fn alpha(&self, n: u64, d: u64) -> Option<Natural> {
        if d >= n {
            return Some(Natural::zero());
        }
        self.tables.get(&n)?.alpha_at(d)
    }

    pub fn beta(&self, n: u64, d: u64) -> Option<Natural> {
        if d >= n {
            return Some(Natural::zero());
        }
        self.tables.get(&n)?.beta_at(d)
    }

    pub fn provenance(&self, n: u64, d: u64) -> Option<Provenance> {
        self.tables.get(&n)?.provenance.get(&d).copied()
    }

    /// Rows `(n, d)` for `2 ≤ n`, `1 ≤ d ≤ min(n-1, d_max)`, in `(n, d)` order.
    pub fn cells(&self, d_max: Option<u64>) -> Vec<Cell> {
        let mut out = Vec::new();
        for (&n, table) in &self.tables {
            for d in 1..=d_max.unwrap_or(u64::MAX).min(n.saturating_sub(1)) {
                out.push(Cell {
                    n,
                    d,
                    alpha: table.alpha.get(&d).cloned(),
                    beta: table.beta.get(&d).cloned(),
                    provenance: table.provenance.get(&d).copied(),
                });
            }
        }
        out
    }

    /// Errors unless every `n` in `lo..=hi` has a complete table up to `d_max`.
    pub fn require_complete(&self, lo: u64, hi: u64, d_max: Option<u64>) -> Result<()> {
        for n in lo..=hi {
            let complete = self
                .tables
                .get(&n)
                .is_some_and(|t| t.is_complete(d_max.unwrap_or(u64::MAX)));
            if !complete {
                return Err(invalid(format!(
                    "count table for n={n} is missing or incomplete"
                )));
            }
        }
        Ok(())
    }
}
