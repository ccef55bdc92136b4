use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::{char_poly, CharPoly, PolyMethod};
use super::rank::determinant_exact;
use crate::arithmetic::{factorize, Natural};
use crate::counting::CountConfig;
use crate::error::{invalid, Result};

/// Largest `|det|` over all `d × d` 0/1 matrices, `d = 1..=6`.
pub const KNOWN_MAX_BINARY_DET: [u64; 6] = [1, 1, 2, 3, 5, 9];

/// Threshold above which every prime `p` satisfies `α_p^d = f_d(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityBound {
    pub d: u32,
    pub max_binary_det: Natural,
    /// `true` when `max_binary_det` is the exact maximum rather than a
    /// Hadamard-type ceiling.
    pub exact: bool,
}

fn ceil_sqrt(x: &Natural) -> Natural {
    let s = x.sqrt();
    if &s * &s < *x {
        s + 1u32
    } else {
        s
    }
}

/// `⌈d^{d/2}⌉`.
pub fn hadamard_ceiling(d: u32) -> Natural {
    ceil_sqrt(&Natural::from(d).pow(d))
}

/// `⌈(d+1)^{(d+1)/2} / 2^d⌉`.
pub fn improved_hadamard_ceiling(d: u32) -> Natural {
    let num = Natural::from(d + 1).pow(d + 1);
    let den = Natural::from(4u32).pow(d);
    ceil_sqrt(&num.div_ceil(&den))
}

pub fn validity_bound(d: u32) -> Result<ValidityBound> {
    if d == 0 {
        return Err(invalid("d must be positive"));
    }
    Ok(match KNOWN_MAX_BINARY_DET.get(d as usize - 1) {
        Some(&v) => ValidityBound {
            d,
            max_binary_det: Natural::from(v),
            exact: true,
        },
        None => ValidityBound {
            d,
            max_binary_det: hadamard_ceiling(d).min(improved_hadamard_ceiling(d)),
            exact: false,
        },
    })
}

/// Exhaustive maximum of `|det|` over `d × d` 0/1 matrices.
///
/// Row order and repeated rows do not change `|det|` away from zero, so only
/// strictly increasing sets of nonzero rows are visited: `C(2^d - 1, d)`
/// determinants instead of `2^{d²}`.
pub fn max_binary_determinant_scan(d: u32) -> Result<u64> {
    if d == 0 || d > 6 {
        return Err(invalid(format!(
            "exhaustive determinant scan supports 1 <= d <= 6, got {d}"
        )));
    }
    fn walk(d: u32, start: u64, chosen: &mut Vec<u64>, best: &mut u64) -> Result<()> {
        if chosen.len() == d as usize {
            let m: Vec<Vec<i64>> = chosen
                .iter()
                .map(|&row| (0..d).map(|i| (row >> i & 1) as i64).collect())
                .collect();
            let det = determinant_exact(&m)?.unsigned_abs() as u64;
            *best = (*best).max(det);
            return Ok(());
        }
        let remaining = d as usize - chosen.len();
        let top = 1u64 << d;
        for row in start..top {
            if top - row < remaining as u64 {
                break;
            }
            chosen.push(row);
            walk(d, row + 1, chosen, best)?;
            chosen.pop();
        }
        Ok(())
    }
    let mut best = 0;
    walk(d, 1, &mut Vec::with_capacity(d as usize), &mut best)?;
    Ok(best)
}

fn smallest_prime_factor(n: u64) -> Result<Option<u64>> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    Ok(factorize(n)?.smallest_prime())
}

/// Whether `α_n^d = f_d(n)` is guaranteed: `n = 1`, or every prime factor of
/// `n` exceeds the largest `d × d` binary determinant.
pub fn is_admissible(n: u64, d: u32) -> Result<bool> {
    let bound = validity_bound(d)?;
    Ok(match smallest_prime_factor(n)? {
        None => true,
        Some(p) => Natural::from(p) > bound.max_binary_det,
    })
}

/// `gcd(n, ⌈d^{d/2}⌉!) = 1`, decided as "no prime factor of `n` is at most
/// `⌈d^{d/2}⌉`" without forming the factorial.
pub fn gcd_factorial_criterion(n: u64, d: u32) -> Result<bool> {
    if d == 0 {
        return Err(invalid("d must be positive"));
    }
    Ok(match smallest_prime_factor(n)? {
        None => true,
        Some(p) => Natural::from(p) > hadamard_ceiling(d),
    })
}

/// Outcome of evaluating `f_d(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prediction {
    /// `n` is admissible, so this is `α_n^d`.
    Guaranteed(Natural),
    /// `f_d(n)`, which need not equal `α_n^d`.
    Inadmissible { unguaranteed: BigInt },
}

impl Prediction {
    pub fn guaranteed(&self) -> Option<&Natural> {
        match self {
            Prediction::Guaranteed(v) => Some(v),
            Prediction::Inadmissible { .. } => None,
        }
    }
}

pub fn predict_alpha_with(poly: &CharPoly, n: u64) -> Result<Prediction> {
    let value = poly.evaluate_at(n);
    if !is_admissible(n, poly.degree())? {
        return Ok(Prediction::Inadmissible {
            unguaranteed: value,
        });
    }
    let natural = value.to_biguint().ok_or_else(|| {
        invalid(format!(
            "f_{}({n}) = {value} is negative on an admissible n",
            poly.degree()
        ))
    })?;
    Ok(Prediction::Guaranteed(natural))
}

pub fn predict_alpha(n: u64, d: u32, cfg: &CountConfig) -> Result<Prediction> {
    let poly = char_poly(d, PolyMethod::Auto, cfg)?;
    predict_alpha_with(&poly, n)
}

impl ValidityBound {
    /// Human-readable admissibility rule.
    pub fn rule(&self) -> String {
        let kind = if self.exact {
            "the largest d x d binary determinant"
        } else {
            "a Hadamard-type ceiling on the largest d x d binary determinant"
        };
        format!(
            "alpha(n, {}) = f_{}(n) whenever n = 1 or every prime factor of n exceeds {} ({kind})",
            self.d, self.d, self.max_binary_det
        )
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.max_binary_det.to_u64()
    }
}
