use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::build_arrangement;
use super::rank::rank_exact;
use super::validity::validity_bound;
use crate::arithmetic::next_prime_after;
use crate::counting::{alpha, CountConfig};
use crate::error::{invalid, Error, Result};

/// Largest `d` for which the subset enumeration is attempted
/// (`2^(2^d - 1)` column subsets).
pub const WHITNEY_MAX_D: u32 = 4;

/// Monic integer polynomial `f_d` of degree `d`, coefficients leading first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    d: u32,
    coefficients: Vec<BigInt>,
}

impl CharPoly {
    /// Validates monicity, degree and the `x^{d-1}` coefficient `-(2^d - 1)`.
    pub fn new(coefficients: Vec<BigInt>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(invalid("characteristic polynomial must have degree >= 1"));
        }
        let poly = CharPoly {
            d: (coefficients.len() - 1) as u32,
            coefficients,
        };
        match poly.invariant_violations().first() {
            Some(msg) => Err(invalid(msg.clone())),
            None => Ok(poly),
        }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `x^power`.
    pub fn coefficient_of(&self, power: u32) -> Option<&BigInt> {
        let idx = (self.d as usize).checked_sub(power as usize)?;
        self.coefficients.get(idx)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_at(&self, n: u64) -> BigInt {
        self.evaluate(&BigInt::from(n))
    }

    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.coefficients.len() != self.d as usize + 1 {
            out.push(format!(
                "expected {} coefficients for degree {}, found {}",
                self.d + 1,
                self.d,
                self.coefficients.len()
            ));
            return out;
        }
        if !self.coefficients[0].is_one() {
            out.push(format!(
                "not monic: leading coefficient {}",
                self.coefficients[0]
            ));
        }
        let expected = -((BigInt::one() << self.d as usize) - BigInt::one());
        if self.coefficients[1] != expected {
            out.push(format!(
                "coefficient of x^{} is {}, expected {expected}",
                self.d - 1,
                self.coefficients[1]
            ));
        }
        out
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = self.d as usize - i;
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if power == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("x")?,
                p => write!(f, "x^{p}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Selects how [`char_poly`] builds `f_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PolyMethod {
    /// Subset enumeration through `d = 4`, interpolation above.
    #[default]
    Auto,
    Whitney,
    Interpolate,
}

impl std::str::FromStr for PolyMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(PolyMethod::Auto),
            "whitney" => Ok(PolyMethod::Whitney),
            "interpolate" => Ok(PolyMethod::Interpolate),
            other => Err(invalid(format!("unknown polynomial method {other:?}"))),
        }
    }
}

/// `f_d` from column-span counts of `H_d`.
///
/// Every nonempty set `P` of hyperplanes contributes `(-1)^{|P|}` to the
/// coefficient of `x^{d - rank P}`; the empty set supplies the leading `x^d`.
pub fn char_poly_whitney(d: u32) -> Result<CharPoly> {
    if d == 0 {
        return Err(invalid("d must be positive"));
    }
    if d > WHITNEY_MAX_D {
        return Err(invalid(format!(
            "subset enumeration is capped at d={WHITNEY_MAX_D}; use interpolation for d={d}"
        )));
    }
    let arrangement = build_arrangement(d)?;
    let vectors: Vec<Vec<i64>> = (0..arrangement.len())
        .map(|k| arrangement.column_vector(k))
        .collect();
    let mut by_power = vec![0i64; d as usize + 1];
    by_power[d as usize] = 1;

    let count = vectors.len();
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(count);
    for mask in 1u64..1 << count {
        rows.clear();
        rows.extend(
            (0..count)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vectors[i].clone()),
        );
        let rank = rank_exact(&rows)?;
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        by_power[d as usize - rank] += sign;
    }
    CharPoly::new(by_power.iter().rev().map(|&c| BigInt::from(c)).collect())
}

/// The `d + 1` smallest primes above the validity bound for `d`.
pub fn interpolation_nodes(d: u32) -> Result<Vec<u64>> {
    let bound = validity_bound(d)?;
    let mut p: u64 = u64::try_from(&bound.max_binary_det)
        .map_err(|_| invalid(format!("validity bound for d={d} exceeds 64 bits")))?;
    let mut nodes = Vec::with_capacity(d as usize + 1);
    for _ in 0..=d {
        p = next_prime_after(p);
        nodes.push(p);
    }
    Ok(nodes)
}

/// Newton divided differences, expanded to monomial coefficients (lowest
/// degree first).
pub(crate) fn newton_interpolate(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let xs: Vec<&BigRational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    let k = points.len();
    for level in 1..k {
        for i in (level..k).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner on the Newton form: c_0 + (x - x_0)(c_1 + (x - x_1)(...))
    let mut poly: Vec<BigRational> = vec![table[k - 1].clone()];
    for i in (0..k - 1).rev() {
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (j, c) in poly.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * xs[i];
        }
        next[0] += &table[i];
        poly = next;
    }
    poly
}

/// `f_d` by interpolating `α_p^d` at `d + 1` primes above the validity bound.
pub fn char_poly_interpolate(d: u32, cfg: &CountConfig) -> Result<CharPoly> {
    if d == 0 {
        return Err(invalid("d must be positive"));
    }
    let nodes = interpolation_nodes(d)?;
    let mut points = Vec::with_capacity(nodes.len());
    for &p in &nodes {
        let value = alpha(p, d as u64, cfg).map_err(|e| Error::InterpolationBudget {
            d,
            prime: p,
            reason: e.to_string(),
        })?;
        points.push((
            BigRational::from_integer(BigInt::from(p)),
            BigRational::from_integer(BigInt::from(value)),
        ));
    }
    let low_first = newton_interpolate(&points);
    let mut coefficients = Vec::with_capacity(low_first.len());
    for (power, c) in low_first.iter().enumerate().rev() {
        if !c.is_integer() {
            return Err(Error::NonIntegralPolynomial(format!(
                "coefficient of x^{power} is {c} for d={d}"
            )));
        }
        coefficients.push(c.to_integer());
    }
    if !coefficients[0].is_one() {
        return Err(Error::NonIntegralPolynomial(format!(
            "leading coefficient {} for d={d}",
            coefficients[0]
        )));
    }
    CharPoly::new(coefficients).map_err(|e| Error::NonIntegralPolynomial(e.to_string()))
}

pub fn char_poly(d: u32, method: PolyMethod, cfg: &CountConfig) -> Result<CharPoly> {
    match method {
        PolyMethod::Whitney => char_poly_whitney(d),
        PolyMethod::Interpolate => char_poly_interpolate(d, cfg),
        PolyMethod::Auto if d <= WHITNEY_MAX_D => char_poly_whitney(d),
        PolyMethod::Auto => char_poly_interpolate(d, cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(p: &CharPoly) -> Vec<i64> {
        p.coefficients()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect()
    }

    #[test]
    fn whitney_small_cases() {
        assert_eq!(coeffs(&char_poly_whitney(1).unwrap()), vec![1, -1]);
        assert_eq!(coeffs(&char_poly_whitney(2).unwrap()), vec![1, -3, 2]);
        assert_eq!(coeffs(&char_poly_whitney(3).unwrap()), vec![1, -7, 15, -9]);
    }

    #[test]
    fn whitney_four() {
        assert_eq!(
            coeffs(&char_poly_whitney(4).unwrap()),
            vec![1, -15, 80, -170, 104]
        );
    }

    #[test]
    fn whitney_cap() {
        assert!(char_poly_whitney(5).is_err());
        assert!(char_poly_whitney(0).is_err());
    }

    #[test]
    fn interpolation_agrees() {
        let cfg = CountConfig::default();
        assert_eq!(interpolation_nodes(3).unwrap(), vec![3, 5, 7, 11]);
        assert_eq!(
            coeffs(&char_poly_interpolate(1, &cfg).unwrap()),
            vec![1, -1]
        );
        for d in 1..=4 {
            assert_eq!(
                char_poly_interpolate(d, &cfg).unwrap(),
                char_poly_whitney(d).unwrap()
            );
        }
    }

    #[test]
    fn interpolation_refuses_past_budget() {
        let cfg = CountConfig {
            state_cap: 2,
            ..CountConfig::default()
        };
        match char_poly_interpolate(4, &cfg) {
            Err(Error::InterpolationBudget { prime, .. }) => assert_eq!(prime, 11),
            other => panic!("expected a refusal, got {other:?}"),
        }
    }

    #[test]
    fn newton_recovers_known_polynomial() {
        // 2x^3 - x + 5 at four points
        let f = |x: i64| 2 * x.pow(3) - x + 5;
        let pts: Vec<_> = [-1i64, 0, 2, 7]
            .iter()
            .map(|&x| {
                (
                    BigRational::from_integer(x.into()),
                    BigRational::from_integer(f(x).into()),
                )
            })
            .collect();
        let got = newton_interpolate(&pts);
        let want: Vec<BigRational> = [5i64, -1, 0, 2]
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn display_and_evaluate() {
        let f4 = char_poly_whitney(4).unwrap();
        assert_eq!(f4.to_string(), "x^4 - 15x^3 + 80x^2 - 170x + 104");
        assert_eq!(f4.evaluate_at(7), BigInt::from(90));
        assert_eq!(f4.evaluate_at(11), BigInt::from(2590));
        assert_eq!(char_poly_whitney(1).unwrap().to_string(), "x - 1");
        assert_eq!(f4.coefficient_of(3), Some(&BigInt::from(-15)));
        assert_eq!(f4.coefficient_of(9), None);
    }

    #[test]
    fn constructor_checks_invariants() {
        let bad = vec![BigInt::from(1), BigInt::from(-6), BigInt::from(2)];
        assert!(CharPoly::new(bad).is_err());
        let not_monic = vec![BigInt::from(2), BigInt::from(-3), BigInt::from(2)];
        assert!(CharPoly::new(not_monic).is_err());
    }
}
