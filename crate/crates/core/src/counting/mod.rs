//! Exact counts of zero-sum-free (`α`) and irreducible zero-sum-free (`β`)
//! tuples over `Z_n`, by several mutually independent routes.

mod brute;
mod dp;
mod formulas;
mod state;
mod table;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub use brute::{alpha_bruteforce, beta_bruteforce, for_each_zero_sum_free};
pub use dp::{alpha_beta_dp, alpha_dp, DpCounts};
pub use formulas::{alpha_closed_high_d, alpha_small_d};
pub use state::SumState;
pub use table::{Cell, CountGrid, CountTable, Provenance};

use crate::arithmetic::{binomial, divisors, factorize, is_prime, moebius, Natural};
use crate::error::{invalid, Result};

/// Resource limits for the counting routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountConfig {
    /// Largest `n^d` the exhaustive oracle will accept.
    pub tuple_budget: u64,
    /// Largest DP frontier (distinct states at one depth).
    pub state_cap: usize,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            tuple_budget: 100_000_000,
            state_cap: 1 << 26,
        }
    }
}

/// The algorithm that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Method {
    /// `d ≥ n`, so the count is zero.
    Vanishing,
    SmallD,
    HighD,
    Dp,
    DpGcd,
    BruteForce,
    Moebius,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Vanishing => "vanishing",
            Method::SmallD => "closed-small-d",
            Method::HighD => "closed-high-d",
            Method::Dp => "dp",
            Method::DpGcd => "dp-gcd",
            Method::BruteForce => "brute-force",
            Method::Moebius => "moebius",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "vanishing" => Method::Vanishing,
            "closed-small-d" => Method::SmallD,
            "closed-high-d" => Method::HighD,
            "dp" => Method::Dp,
            "dp-gcd" => Method::DpGcd,
            "brute-force" => Method::BruteForce,
            "moebius" => Method::Moebius,
            other => return Err(invalid(format!("unknown method tag {other:?}"))),
        })
    }
}

/// Which route [`alpha`] takes for `(n, d)`: closed forms first, then the DP.
pub fn alpha_route(n: u64, d: u64) -> Method {
    if d >= n {
        Method::Vanishing
    } else if n >= 3 && d <= 3 {
        Method::SmallD
    } else if n >= 3 && 2 * d > n {
        Method::HighD
    } else {
        Method::Dp
    }
}

/// `α_n^d` with the route that produced it.
pub fn alpha_traced(n: u64, d: u64, cfg: &CountConfig) -> Result<(Natural, Method)> {
    if n == 0 || d == 0 {
        return Err(invalid(format!("need n >= 1 and d >= 1, got n={n}, d={d}")));
    }
    let route = alpha_route(n, d);
    let value = match route {
        Method::Vanishing => Natural::zero(),
        Method::SmallD => alpha_small_d(n, d)?,
        Method::HighD => alpha_closed_high_d(n, d)?,
        _ => alpha_dp(n, d, cfg)?.pop().expect("d >= 1 entries"),
    };
    Ok((value, route))
}

pub fn alpha(n: u64, d: u64, cfg: &CountConfig) -> Result<Natural> {
    alpha_traced(n, d, cfg).map(|(v, _)| v)
}

/// `β_n^d` from the gcd-tracking DP, independent of the Möbius route.
pub fn beta_direct(n: u64, d: u64, cfg: &CountConfig) -> Result<Natural> {
    if n == 0 || d == 0 {
        return Err(invalid(format!("need n >= 1 and d >= 1, got n={n}, d={d}")));
    }
    if d >= n {
        return Ok(Natural::zero());
    }
    Ok(alpha_beta_dp(n, d, cfg)?
        .beta
        .pop()
        .expect("d >= 1 entries"))
}

/// `β_n^d = Σ_{m | n} μ(n/m) α_m^d`.
pub fn beta_moebius(n: u64, d: u64, cfg: &CountConfig) -> Result<Natural> {
    if n == 0 || d == 0 {
        return Err(invalid(format!("need n >= 1 and d >= 1, got n={n}, d={d}")));
    }
    let mut total = BigInt::zero();
    for m in divisors(n)? {
        let mu = moebius(n / m)?;
        if mu == 0 {
            continue;
        }
        let a = BigInt::from(alpha(m, d, cfg)?);
        if mu > 0 {
            total += a;
        } else {
            total -= a;
        }
    }
    if total.is_negative() {
        return Err(invalid(format!("Möbius sum went negative at n={n}, d={d}")));
    }
    Ok(total.to_biguint().expect("nonnegative"))
}

/// Outcome of the prime-set recursions for one `(n, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecursionCheck {
    /// `α_n = β_n + Σ_{∅≠S} (-1)^{|S|+1} α_{n_S}` over subsets of the primes of `n`.
    pub general: bool,
    /// `α_{p^t} = β_{p^t} + α_{p^{t-1}}`, when `n` is a prime power.
    pub prime_power: Option<bool>,
    /// `α_{pq} = β_{pq} + α_p + α_q`, when `n` is a product of two distinct primes.
    pub semiprime: Option<bool>,
}

impl RecursionCheck {
    pub fn all_pass(&self) -> bool {
        self.general && self.prime_power.unwrap_or(true) && self.semiprime.unwrap_or(true)
    }
}

pub fn recursion_check(n: u64, d: u64, cfg: &CountConfig) -> Result<RecursionCheck> {
    if n < 2 || d == 0 {
        return Err(invalid(format!("need n >= 2 and d >= 1, got n={n}, d={d}")));
    }
    let beta_n = beta_direct(n, d, cfg)?;
    recursion_identities(n, d, &beta_n, |m| alpha(m, d, cfg))
}

/// The prime-set recursions with `α` supplied by the caller, e.g. from a
/// precomputed table.
pub fn recursion_identities(
    n: u64,
    d: u64,
    beta_n: &Natural,
    alpha_of: impl Fn(u64) -> Result<Natural>,
) -> Result<RecursionCheck> {
    if n < 2 || d == 0 {
        return Err(invalid(format!("need n >= 2 and d >= 1, got n={n}, d={d}")));
    }
    let f = factorize(n)?;
    let primes: Vec<u64> = f.primes().collect();
    let alpha_n = BigInt::from(alpha_of(n)?);
    let beta_n = BigInt::from(beta_n.clone());

    let mut rhs = beta_n.clone();
    for mask in 1u32..1 << primes.len() {
        let (product, size) = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold((1u64, 0u32), |(prod, k), (_, &p)| (prod * p, k + 1));
        let term = BigInt::from(alpha_of(n / product)?);
        if size % 2 == 1 {
            rhs += term;
        } else {
            rhs -= term;
        }
    }
    let general = rhs == alpha_n;

    let prime_power = match f.prime_powers() {
        [(p, _)] => Some(alpha_n == &beta_n + BigInt::from(alpha_of(n / p)?)),
        _ => None,
    };
    let semiprime = match f.prime_powers() {
        [(p, 1), (q, 1)] => {
            Some(alpha_n == &beta_n + BigInt::from(alpha_of(*p)?) + BigInt::from(alpha_of(*q)?))
        }
        _ => None,
    };
    Ok(RecursionCheck {
        general,
        prime_power,
        semiprime,
    })
}

/// One term `C(len, d) · α_p^d` of the Mathieu–Zhao count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MathieuZhaoTerm {
    pub d: u64,
    pub supports: Natural,
    pub alpha: Natural,
    pub product: Natural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MathieuZhaoCount {
    pub p: u64,
    pub len: u64,
    pub terms: Vec<MathieuZhaoTerm>,
    pub total: Natural,
}

/// Number of nonzero vectors in `Z_p^len` whose every support subset has a
/// nonzero sum: `Σ_{d=1}^{len} C(len, d) α_p^d`.
pub fn mathieu_zhao_count(p: u64, len: u64, cfg: &CountConfig) -> Result<MathieuZhaoCount> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(invalid(format!("{p} is not an odd prime")));
    }
    if len == 0 {
        return Err(invalid("tuple length must be positive"));
    }
    let mut terms = Vec::with_capacity(len as usize);
    let mut total = Natural::zero();
    for d in 1..=len {
        let supports = binomial(len, d);
        let a = alpha(p, d, cfg)?;
        let product = &supports * &a;
        total += &product;
        terms.push(MathieuZhaoTerm {
            d,
            supports,
            alpha: a,
            product,
        });
    }
    Ok(MathieuZhaoCount {
        p,
        len,
        terms,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::euler_phi;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn cfg() -> CountConfig {
        CountConfig::default()
    }

    #[test]
    fn dispatcher_examples() {
        assert_eq!(
            alpha_traced(18, 9, &cfg()).unwrap(),
            (nat(162780), Method::Dp)
        );
        assert_eq!(
            alpha_traced(17, 7, &cfg()).unwrap(),
            (nat(208000), Method::Dp)
        );
        assert_eq!(alpha_traced(2, 1, &cfg()).unwrap(), (nat(1), Method::Dp));
        assert_eq!(
            alpha_traced(12, 7, &cfg()).unwrap(),
            (nat(1320), Method::HighD)
        );
        assert_eq!(
            alpha_traced(12, 3, &cfg()).unwrap(),
            (nat(890), Method::SmallD)
        );
        assert_eq!(
            alpha_traced(4, 9, &cfg()).unwrap(),
            (nat(0), Method::Vanishing)
        );
        assert!(alpha(0, 1, &cfg()).is_err());
    }

    #[test]
    fn zero_boundary() {
        for n in 1..=18u64 {
            for d in 1..=20u64 {
                assert_eq!(
                    alpha(n, d, &cfg()).unwrap().is_zero(),
                    d >= n,
                    "n={n} d={d}"
                );
            }
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_direct(6, 2, &cfg()).unwrap(), nat(18));
        assert_eq!(beta_direct(6, 1, &cfg()).unwrap(), nat(2));
        assert_eq!(beta_moebius(4, 2, &cfg()).unwrap(), nat(6));
        assert_eq!(beta_moebius(6, 3, &cfg()).unwrap(), nat(44));
        for p in [3u64, 5, 7, 11, 13] {
            for d in 1..p {
                let a = alpha(p, d, &cfg()).unwrap();
                assert_eq!(beta_direct(p, d, &cfg()).unwrap(), a);
                assert_eq!(beta_moebius(p, d, &cfg()).unwrap(), a);
            }
        }
    }

    #[test]
    fn beta_first_column_is_totient() {
        for n in 2..=30u64 {
            assert_eq!(
                beta_direct(n, 1, &cfg()).unwrap(),
                nat(euler_phi(n).unwrap())
            );
        }
    }

    #[test]
    fn recursion_examples() {
        let r = recursion_check(9, 2, &cfg()).unwrap();
        assert_eq!(beta_direct(9, 2, &cfg()).unwrap(), nat(54));
        assert!(r.general && r.prime_power == Some(true) && r.semiprime.is_none());

        let r = recursion_check(6, 3, &cfg()).unwrap();
        assert!(r.general && r.semiprime == Some(true) && r.prime_power.is_none());

        let r = recursion_check(4, 1, &cfg()).unwrap();
        assert!(r.all_pass());

        let r = recursion_check(30, 3, &cfg()).unwrap();
        assert!(r.general && r.prime_power.is_none() && r.semiprime.is_none());
    }

    #[test]
    fn recursions_hold_through_eighteen() {
        for n in 2..=18u64 {
            for d in 1..n {
                assert!(
                    recursion_check(n, d, &cfg()).unwrap().all_pass(),
                    "n={n} d={d}"
                );
            }
        }
    }

    #[test]
    fn mathieu_zhao_examples() {
        assert_eq!(mathieu_zhao_count(3, 2, &cfg()).unwrap().total, nat(6));
        assert_eq!(mathieu_zhao_count(3, 1, &cfg()).unwrap().total, nat(2));
        let five = mathieu_zhao_count(5, 2, &cfg()).unwrap();
        assert_eq!(five.total, nat(20));
        assert_eq!(five.terms[0].product, nat(8));
        assert_eq!(five.terms[1].product, nat(12));
        assert!(mathieu_zhao_count(2, 2, &cfg()).is_err());
        assert!(mathieu_zhao_count(9, 2, &cfg()).is_err());
    }

    #[test]
    fn method_tags_round_trip() {
        for m in [
            Method::Vanishing,
            Method::SmallD,
            Method::HighD,
            Method::Dp,
            Method::DpGcd,
            Method::BruteForce,
            Method::Moebius,
        ] {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("sage".parse::<Method>().is_err());
    }
}
