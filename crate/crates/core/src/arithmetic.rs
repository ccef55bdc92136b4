//! Exact number-theoretic primitives: totient, Möbius, divisors, binomials
//! and a rational enclosure of `1 / (d! ζ(d))`.
//!
//! Factorization is plain trial division; every modulus handled by this crate
//! is at most a few thousand.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Result};

/// Exact nonnegative count. Every α, β and binomial is carried in this type.
pub type Natural = BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    prime_powers: Vec<(u64, u32)>,
}

impl Factorization {
    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn prime_powers(&self) -> &[(u64, u32)] {
        &self.prime_powers
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.prime_powers.iter().map(|&(p, _)| p)
    }

    pub fn smallest_prime(&self) -> Option<u64> {
        self.prime_powers.first().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.prime_powers.iter().all(|&(_, e)| e == 1)
    }

    pub fn value(&self) -> u64 {
        self.prime_powers.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(invalid("cannot factor 0"));
    }
    let mut rest = n;
    let mut prime_powers = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            prime_powers.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        prime_powers.push((rest, 1));
    }
    Ok(Factorization { prime_powers })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Smallest prime strictly greater than `x`.
pub fn next_prime_after(x: u64) -> u64 {
    let mut candidate = x + 1;
    while !is_prime(candidate) {
        candidate += 1;
    }
    candidate
}

pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(invalid("euler_phi is undefined at 0"));
    }
    let f = factorize(n)?;
    Ok(f.prime_powers
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

pub fn moebius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(invalid("moebius is undefined at 0"));
    }
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.prime_powers.len() % 2 == 0 { 1 } else { -1 })
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(invalid("divisors of 0 are not a finite set"));
    }
    let f = factorize(n)?;
    let mut out = vec![1u64];
    for &(p, e) in f.prime_powers() {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Exact `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    let mut acc = Natural::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> Natural {
    (1..=n).fold(Natural::one(), |acc, i| acc * i)
}

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &RationalInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }
}

/// Encloses `1 / (d! ζ(d))` in an interval of width at most `eps`.
///
/// `ζ(d)` is bracketed by the partial sum `S_N` plus the integral tail bounds
/// `∫_{N+1}^∞ x^{-d} dx ≤ ζ(d) - S_N ≤ ∫_N^∞ x^{-d} dx`; `N` doubles until the
/// reciprocal interval is narrow enough. Each term of `S_N` is rounded
/// outward to a multiple of `2^-P`, which keeps the enclosure rigorous while
/// the denominators stay bounded.
pub fn zeta_reciprocal_scaled(d: u32, eps: &BigRational) -> Result<RationalInterval> {
    if d < 2 {
        return Err(invalid(format!("zeta({d}) diverges; need d >= 2")));
    }
    if !eps.is_positive() {
        return Err(invalid("eps must be positive"));
    }
    let d_factorial = BigRational::from_integer(BigInt::from(factorial(d as u64)));
    let tail = |n: u64| -> BigRational {
        let denom = BigInt::from(d - 1) * BigInt::from(n).pow(d - 1);
        BigRational::new(BigInt::one(), denom)
    };
    // Rounding costs at most N·2^-P, far below eps for any reachable N.
    let inverse_eps_bits = (eps.denom().bits() + 1).saturating_sub(eps.numer().bits());
    let scale = BigInt::one() << (inverse_eps_bits + 96);

    let mut lo_sum = BigInt::zero();
    let mut hi_sum = BigInt::zero();
    let mut terms = 0u64;
    let mut target = 8u64;
    loop {
        while terms < target {
            terms += 1;
            let (q, r) = scale.div_rem(&BigInt::from(terms).pow(d));
            if !r.is_zero() {
                hi_sum += 1;
            }
            lo_sum += &q;
            hi_sum += q;
        }
        let zeta_lo = BigRational::new(lo_sum.clone(), scale.clone()) + tail(terms + 1);
        let zeta_hi = BigRational::new(hi_sum.clone(), scale.clone()) + tail(terms);
        let interval = RationalInterval {
            lo: (&d_factorial * zeta_hi).recip(),
            hi: (&d_factorial * zeta_lo).recip(),
        };
        if &interval.width() <= eps {
            return Ok(interval);
        }
        target *= 2;
    }
}
