//! Forward DP over [`SumState`] frontiers.
//!
//! Each step appends a nonzero residue to every surviving prefix; prefixes
//! sharing a reachable set are merged and their counts added. An optional
//! second key coordinate tracks `gcd(n, x_1, .., x_k)` so that the irreducible
//! counts fall out of the same sweep.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::state::SumState;
use super::CountConfig;
use crate::arithmetic::{gcd, Natural};
use crate::error::{invalid, Error, Result};

/// Per-depth totals; index `d - 1` holds the value for tuples of length `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpCounts {
    pub alpha: Vec<Natural>,
    pub beta: Vec<Natural>,
}

/// A sweep that may have stopped early at the state cap.
#[derive(Debug, Clone)]
pub(crate) struct DpOutcome {
    pub counts: DpCounts,
    pub refusal: Option<Error>,
}

trait Tally: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    /// Returns false on overflow.
    fn accumulate(&mut self, other: &Self) -> bool;
    fn to_natural(&self) -> Natural;
}

impl Tally for u128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn accumulate(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn to_natural(&self) -> Natural {
        Natural::from(*self)
    }
}

impl Tally for Natural {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn accumulate(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }
    fn to_natural(&self) -> Natural {
        self.clone()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    state: SumState,
    content: u64,
}

struct Overflow;

fn sweep<T: Tally>(
    n: u64,
    d_max: u64,
    track_gcd: bool,
    cap: usize,
) -> std::result::Result<DpOutcome, Overflow> {
    let mut frontier: HashMap<Key, T> = HashMap::new();
    frontier.insert(
        Key {
            state: SumState::empty(n),
            content: n,
        },
        T::one(),
    );
    let mut counts = DpCounts {
        alpha: Vec::with_capacity(d_max as usize),
        beta: Vec::with_capacity(d_max as usize),
    };

    for depth in 1..=d_max {
        let mut next: HashMap<Key, T> = HashMap::with_capacity(frontier.len() * 2);
        for (key, count) in &frontier {
            for x in 1..n {
                if !key.state.admits(x) {
                    continue;
                }
                let content = if track_gcd { gcd(key.content, x) } else { n };
                let slot = next
                    .entry(Key {
                        state: key.state.extend(x),
                        content,
                    })
                    .or_insert_with(T::zero);
                if !slot.accumulate(count) {
                    return Err(Overflow);
                }
            }
        }
        if next.len() > cap {
            return Ok(DpOutcome {
                counts,
                refusal: Some(Error::StateBudget {
                    n,
                    depth,
                    reached: depth - 1,
                    states: next.len(),
                    cap,
                }),
            });
        }
        frontier = next;

        let mut alpha = T::zero();
        let mut beta = T::zero();
        for (key, count) in &frontier {
            if !alpha.accumulate(count) {
                return Err(Overflow);
            }
            if key.content == 1 && !beta.accumulate(count) {
                return Err(Overflow);
            }
        }
        counts.alpha.push(alpha.to_natural());
        counts.beta.push(if track_gcd {
            beta.to_natural()
        } else {
            <Natural as Zero>::zero()
        });
    }
    Ok(DpOutcome {
        counts,
        refusal: None,
    })
}

fn check_range(n: u64, d_max: u64) -> Result<()> {
    if n < 2 {
        return Err(invalid(format!("DP needs n >= 2, got {n}")));
    }
    if d_max == 0 || d_max >= n {
        return Err(invalid(format!(
            "DP needs 1 <= d_max <= n-1, got d_max={d_max} for n={n}"
        )));
    }
    Ok(())
}

/// Runs the fixed-width sweep first and promotes to arbitrary precision if any
/// count overflows `u128`.
pub(crate) fn run(n: u64, d_max: u64, track_gcd: bool, cfg: &CountConfig) -> Result<DpOutcome> {
    check_range(n, d_max)?;
    match sweep::<u128>(n, d_max, track_gcd, cfg.state_cap) {
        Ok(outcome) => Ok(outcome),
        Err(Overflow) => match sweep::<Natural>(n, d_max, track_gcd, cfg.state_cap) {
            Ok(outcome) => Ok(outcome),
            Err(Overflow) => unreachable!("arbitrary precision tally cannot overflow"),
        },
    }
}

/// `α_n^d` for every `d ≤ d_max`.
pub fn alpha_dp(n: u64, d_max: u64, cfg: &CountConfig) -> Result<Vec<Natural>> {
    let outcome = run(n, d_max, false, cfg)?;
    match outcome.refusal {
        Some(err) => Err(err),
        None => Ok(outcome.counts.alpha),
    }
}

/// `α_n^d` and `β_n^d` for every `d ≤ d_max` from one gcd-tracking sweep.
pub fn alpha_beta_dp(n: u64, d_max: u64, cfg: &CountConfig) -> Result<DpCounts> {
    let outcome = run(n, d_max, true, cfg)?;
    match outcome.refusal {
        Some(err) => Err(err),
        None => Ok(outcome.counts),
    }
}
