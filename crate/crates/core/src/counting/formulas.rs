use num_bigint::BigInt;

use crate::arithmetic::{binomial, euler_phi, Natural};
use crate::error::{invalid, Result};

/// `φ(n) · C(n-1, d)`, valid for `n/2 < d < n`.
pub fn alpha_closed_high_d(n: u64, d: u64) -> Result<Natural> {
    if n < 3 || 2 * d <= n || d >= n {
        return Err(invalid(format!(
            "closed form needs n >= 3 and n/2 < d < n, got n={n}, d={d}"
        )));
    }
    Ok(binomial(n - 1, d) * euler_phi(n)?)
}

/// Closed forms for `d ∈ {1, 2, 3}`:
/// `n-1`, `(n-1)(n-2)` and `n³ - 7n² + 15n - 10 + [n odd]`.
pub fn alpha_small_d(n: u64, d: u64) -> Result<Natural> {
    if n < 3 {
        return Err(invalid(format!(
            "small-d closed forms need n >= 3, got {n}"
        )));
    }
    let m = BigInt::from(n);
    let value: BigInt = match d {
        1 => &m - 1,
        2 => (&m - 1) * (&m - 2),
        3 => {
            let odd = BigInt::from(n % 2);
            &m * &m * &m - 7 * &m * &m + 15 * &m - 10 + odd
        }
        _ => {
            return Err(invalid(format!(
                "no closed form for d={d}; need d in 1..=3"
            )))
        }
    };
    value
        .to_biguint()
        .ok_or_else(|| invalid(format!("negative closed-form value at n={n}, d={d}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    /// Inclusion–exclusion over the nonzero cube, counted independently of
    /// the simplified cubic.
    fn alpha_three_inclusion_exclusion(n: u64) -> i128 {
        let m = n as i128;
        let theta = if n.is_multiple_of(2) { 1 } else { 0 };
        (m - 1).pow(3) - (3 * (m - 1).pow(2) + (m - 1) * (m - 2) - 3 * (m - 1) + theta)
    }

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn high_d_examples() {
        assert_eq!(alpha_closed_high_d(7, 4).unwrap(), nat(90));
        assert_eq!(alpha_closed_high_d(12, 7).unwrap(), nat(1320));
        for n in 3..40u64 {
            assert_eq!(
                alpha_closed_high_d(n, n - 1).unwrap(),
                nat(euler_phi(n).unwrap())
            );
        }
    }

    #[test]
    fn high_d_rejects_outside_range() {
        assert!(alpha_closed_high_d(12, 6).is_err());
        assert!(alpha_closed_high_d(12, 12).is_err());
        assert!(alpha_closed_high_d(2, 1).is_err());
    }

    #[test]
    fn small_d_examples() {
        assert_eq!(alpha_small_d(6, 3).unwrap(), nat(44));
        assert_eq!(alpha_small_d(9, 1).unwrap(), nat(8));
        assert_eq!(alpha_small_d(5, 3).unwrap(), nat(16));
        assert_eq!(alpha_small_d(3, 3).unwrap(), nat(0));
        assert!(alpha_small_d(6, 4).is_err());
        assert!(alpha_small_d(2, 1).is_err());
    }

    #[test]
    fn cubic_matches_inclusion_exclusion() {
        for n in 3..200u64 {
            let cubic = alpha_small_d(n, 3).unwrap().to_i128().unwrap();
            assert_eq!(cubic, alpha_three_inclusion_exclusion(n), "n={n}");
        }
    }
}
