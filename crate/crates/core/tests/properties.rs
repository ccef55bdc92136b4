use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use zsf_core::arithmetic::{divisors, euler_phi, gcd, moebius};
use zsf_core::arrangement::{
    build_arrangement, char_poly_whitney, determinant_exact, is_admissible, predict_alpha,
    rank_exact,
};
use zsf_core::counting::{alpha, alpha_dp, beta_direct, CountConfig, SumState};
use zsf_core::Natural;

/// Zero-sum-free `d`-tuples over `Z_n`, counted by listing every tuple and
/// every nonempty subset.
fn naive_counts(n: u64, d: u32) -> (u64, u64) {
    let (mut alpha, mut beta) = (0, 0);
    for code in 0..n.pow(d) {
        let t: Vec<u64> = (0..d).map(|i| code / n.pow(i) % n).collect();
        let free = (1u32..1 << d).all(|mask| {
            (0..d as usize)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| t[i])
                .sum::<u64>()
                % n
                != 0
        });
        if free {
            alpha += 1;
            if t.iter().fold(n, |g, &x| gcd(g, x)) == 1 {
                beta += 1;
            }
        }
    }
    (alpha, beta)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dp_matches_naive(n in 2u64..=9, d in 1u32..=5) {
        prop_assume!((d as u64) < n);
        let cfg = CountConfig::default();
        let (a, b) = naive_counts(n, d);
        prop_assert_eq!(alpha_dp(n, d as u64, &cfg).unwrap()[d as usize - 1].clone(), Natural::from(a));
        prop_assert_eq!(beta_direct(n, d as u64, &cfg).unwrap(), Natural::from(b));
    }

    #[test]
    fn divisor_sum_and_totient(n in 2u64..=30, d in 1u64..=6) {
        let cfg = CountConfig::default();
        let total: Natural = divisors(n).unwrap().iter().map(|&m| beta_direct(m, d, &cfg).unwrap()).sum();
        prop_assert_eq!(total, alpha(n, d, &cfg).unwrap());
        let b = beta_direct(n, d, &cfg).unwrap();
        prop_assert!((b % Natural::from(euler_phi(n).unwrap())).is_zero());
    }

    #[test]
    fn moebius_sums_to_zero(n in 2u64..=500) {
        let s: i64 = divisors(n).unwrap().iter().map(|&m| moebius(m).unwrap() as i64).sum();
        prop_assert_eq!(s, 0);
    }

    #[test]
    fn totient_sums_to_n(n in 1u64..=500) {
        let s: u64 = divisors(n).unwrap().iter().map(|&m| euler_phi(m).unwrap()).sum();
        prop_assert_eq!(s, n);
    }

    #[test]
    fn admissible_predictions_hold(n in 2u64..=30, d in 1u32..=5) {
        let cfg = CountConfig::default();
        if let Some(v) = predict_alpha(n, d, &cfg).unwrap().guaranteed() {
            prop_assert_eq!(v.clone(), alpha(n, d as u64, &cfg).unwrap());
        }
    }

    #[test]
    fn primes_above_bound_admissible(p in prop::sample::select(vec![7u64, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]), d in 1u32..=5) {
        prop_assert!(is_admissible(p, d).unwrap());
    }

    #[test]
    fn rank_is_transpose_invariant(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=4)) {
        let cols: Vec<Vec<i64>> = (0..4).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        prop_assert_eq!(rank_exact(&rows).unwrap(), rank_exact(&cols).unwrap());
    }

    #[test]
    fn determinant_of_binary_within_known_max(bits in prop::collection::vec(any::<bool>(), 16)) {
        let m: Vec<Vec<i64>> = bits.chunks(4).map(|r| r.iter().map(|&b| b as i64).collect()).collect();
        prop_assert!(determinant_exact(&m).unwrap().abs() <= 3);
    }

    #[test]
    fn state_admits_what_it_cannot_reach(n in 3u64..=40, xs in prop::collection::vec(1u64..40, 0..4), y in 1u64..40) {
        let xs: Vec<u64> = xs.into_iter().map(|x| x % n).filter(|&x| x != 0).collect();
        let s = SumState::from_prefix(n, &xs);
        prop_assume!(s.is_some());
        let s = s.unwrap();
        let y = y % n;
        prop_assume!(y != 0);
        let mut sums = vec![0u64];
        for &x in &xs {
            let more: Vec<u64> = sums.iter().map(|s| (s + x) % n).collect();
            sums.extend(more);
        }
        let blocked = sums.iter().any(|&s| (s + y) % n == 0);
        prop_assert_eq!(s.admits(y), !blocked);
    }
}

#[test]
fn whitney_degree_and_leading_terms() {
    for d in 1..=4u32 {
        let f = char_poly_whitney(d).unwrap();
        assert_eq!(f.degree(), d);
        assert_eq!(f.coefficients()[1], BigInt::from(1 - (1i64 << d)));
        // no zero-sum-free tuple of length d exists over Z_1
        assert_eq!(f.evaluate_at(1), BigInt::zero());
        assert_eq!(build_arrangement(d).unwrap().len(), (1usize << d) - 1);
    }
}

/// For fixed `d` the gap `α_p^d - p^d` is `O(p^{d-1})` at primes, with leading
/// term `-(2^d - 1)`.
#[test]
fn prime_gap_scaling() {
    let cfg = CountConfig::default();
    for d in 2..=4u32 {
        for p in [23u64, 29, 31, 37] {
            let a = BigInt::from(alpha(p, d as u64, &cfg).unwrap());
            let gap = BigInt::from(p).pow(d) - a;
            let lead = BigInt::from((1u64 << d) - 1) * BigInt::from(p).pow(d - 1);
            let rest = (gap - lead).magnitude().clone();
            let bound = num_bigint::BigUint::from(p).pow(d - 2) * num_bigint::BigUint::from(200u32);
            assert!(rest <= bound, "d={d} p={p}");
        }
    }
}
