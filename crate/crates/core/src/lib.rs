//! Exact counting of zero-sum-free tuples over `Z_n`.
//!
//! * [`arithmetic`]: totient, Möbius, divisors, binomials, `ζ` enclosures.
//! * [`counting`]: `α_n^d` and `β_n^d` by brute force, state DP, closed forms
//!   and Möbius inversion.
//! * [`arrangement`]: the binary subset-sum arrangement `H_d`, exact ranks and
//!   its characteristic polynomial `f_d` by two independent methods.
//! * [`analysis`]: bounds, divisibility, orbit, hypothesis and asymptotic
//!   reports over a [`counting::CountGrid`].
//! * [`cli`]: the `zsf` command-line front end and its result cache.

pub mod analysis;
pub mod arithmetic;
pub mod arrangement;
pub mod cli;
pub mod counting;
pub mod error;

pub use arithmetic::Natural;
pub use error::{Error, Result};
