//! Exhaustive reference oracle.
//!
//! Walks the tuple tree in lexicographic order and keeps the full list of
//! `2^k - 1` nonempty subset sums of the current prefix (with multiplicity, no
//! merging). A prefix whose list contains `0` is cut: every extension of it
//! has the same zero sum, so the cut discards only tuples that fail the test.

use crate::arithmetic::{gcd, Natural};
use crate::error::{invalid, Error, Result};

fn check_budget(n: u64, d: u64, budget: u64) -> Result<()> {
    if n == 0 || d == 0 {
        return Err(invalid(format!("need n >= 1 and d >= 1, got n={n}, d={d}")));
    }
    let within = u32::try_from(d)
        .ok()
        .and_then(|d32| n.checked_pow(d32))
        .is_some_and(|size| size <= budget);
    if !within {
        return Err(Error::TupleBudget { n, d, budget });
    }
    Ok(())
}

/// Calls `visit` on every zero-sum-free `d`-tuple over `Z_n` in lexicographic
/// order (residues `0..n`).
pub fn for_each_zero_sum_free(
    n: u64,
    d: u64,
    budget: u64,
    mut visit: impl FnMut(&[u64]),
) -> Result<()> {
    check_budget(n, d, budget)?;
    let mut tuple = Vec::with_capacity(d as usize);
    let mut sums = Vec::with_capacity((1usize << d.min(30)) - 1);
    descend(n, d as usize, &mut tuple, &mut sums, &mut visit);
    Ok(())
}

fn descend(
    n: u64,
    d: usize,
    tuple: &mut Vec<u64>,
    sums: &mut Vec<u64>,
    visit: &mut impl FnMut(&[u64]),
) {
    if tuple.len() == d {
        visit(tuple);
        return;
    }
    for x in 0..n {
        // new subsets are {x} and S ∪ {x} for every earlier subset S
        if x == 0 || sums.iter().any(|&s| (s + x) % n == 0) {
            continue;
        }
        let before = sums.len();
        sums.push(x);
        for i in 0..before {
            let s = (sums[i] + x) % n;
            sums.push(s);
        }
        tuple.push(x);
        descend(n, d, tuple, sums, visit);
        tuple.pop();
        sums.truncate(before);
    }
}

pub fn alpha_bruteforce(n: u64, d: u64, budget: u64) -> Result<Natural> {
    let mut count = 0u64;
    for_each_zero_sum_free(n, d, budget, |_| count += 1)?;
    Ok(Natural::from(count))
}

/// Zero-sum-free tuples with `gcd(x_1, .., x_d, n) = 1`.
pub fn beta_bruteforce(n: u64, d: u64, budget: u64) -> Result<Natural> {
    let mut count = 0u64;
    for_each_zero_sum_free(n, d, budget, |xs| {
        if xs.iter().fold(n, |g, &x| gcd(g, x)) == 1 {
            count += 1;
        }
    })?;
    Ok(Natural::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    const BUDGET: u64 = 100_000_000;

    /// Plain `n^d` enumeration with every subset tested; no cutting.
    fn naive(n: u64, d: u32) -> u64 {
        let total = n.pow(d);
        (0..total)
            .filter(|&code| {
                let xs: Vec<u64> = (0..d).map(|i| code / n.pow(i) % n).collect();
                (1u32..1 << d).all(|mask| {
                    let s: u64 = (0..d as usize)
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| xs[i])
                        .sum();
                    !s.is_multiple_of(n)
                })
            })
            .count() as u64
    }

    #[test]
    fn table_examples() {
        assert_eq!(
            alpha_bruteforce(5, 3, BUDGET).unwrap(),
            Natural::from(16u32)
        );
        assert_eq!(
            alpha_bruteforce(9, 4, BUDGET).unwrap(),
            Natural::from(690u32)
        );
        assert_eq!(alpha_bruteforce(5, 5, BUDGET).unwrap(), Natural::zero());
        assert_eq!(alpha_bruteforce(1, 1, BUDGET).unwrap(), Natural::zero());
    }

    #[test]
    fn cut_search_matches_naive_enumeration() {
        for n in 1..=7u64 {
            for d in 1..=5u32 {
                assert_eq!(
                    alpha_bruteforce(n, d as u64, BUDGET).unwrap(),
                    Natural::from(naive(n, d)),
                    "n={n} d={d}"
                );
            }
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_bruteforce(6, 2, BUDGET).unwrap(), Natural::from(18u32));
        assert_eq!(beta_bruteforce(6, 1, BUDGET).unwrap(), Natural::from(2u32));
        assert_eq!(beta_bruteforce(9, 2, BUDGET).unwrap(), Natural::from(54u32));
        assert_eq!(
            beta_bruteforce(7, 3, BUDGET).unwrap(),
            alpha_bruteforce(7, 3, BUDGET).unwrap()
        );
    }

    #[test]
    fn budget_refusal() {
        assert_eq!(
            alpha_bruteforce(10, 9, BUDGET),
            Err(Error::TupleBudget {
                n: 10,
                d: 9,
                budget: BUDGET
            })
        );
        assert!(alpha_bruteforce(1000, 100, u64::MAX).is_err());
        assert!(alpha_bruteforce(0, 1, BUDGET).is_err());
    }

    #[test]
    fn visits_in_lexicographic_order() {
        let mut seen = Vec::new();
        for_each_zero_sum_free(4, 2, BUDGET, |xs| seen.push(xs.to_vec())).unwrap();
        assert_eq!(
            seen,
            vec![
                vec![1, 1],
                vec![1, 2],
                vec![2, 1],
                vec![2, 3],
                vec![3, 2],
                vec![3, 3]
            ]
        );
    }
}
