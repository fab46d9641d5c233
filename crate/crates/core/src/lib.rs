//! Exact algebra engine for partition refutations.
//!
//! Given an integer multiset `W = {w_1, .., w_n}`, this crate decides whether
//! `W` splits into two halves of equal sum, and when it does not, produces a
//! Nullstellensatz certificate: polynomial multipliers that combine the
//! generators `x_i^2 - 1` and the linear form `sum w_i x_i` into the constant
//! `1`, refuting the existence of a partition.
//!
//! The machinery is entirely exact: arbitrary-precision integers and
//! rationals throughout, never floating point.
//!
//! - [`subsets`]: subsets of `{1..n}` as bit masks, graded reverse
//!   lexicographic order, and the even/odd pairing `S <-> S Δ {n}`.
//! - [`algebra`]: sparse multivariate polynomials over big rationals, and the
//!   partition polynomial (the product of all signed weight sums).
//! - [`matrix`]: dense bignum matrices, fraction-free (Bareiss) determinants,
//!   exact linear solving, and Cramer components.
//! - [`partition`]: the partition matrix `Π(W)`, the `2^{n-1}`-square system
//!   relating the certificate unknowns, with its permutation decomposition
//!   and structural property checks.
//! - [`certificate`]: system encoding, the brute-force partition oracle,
//!   certificate assembly, and full symbolic verification.
//!
//! The crate is `no_std`-compatible (`default-features = false`); it only
//! needs `alloc`.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod algebra;
pub mod certificate;
pub mod matrix;
pub mod partition;
pub mod subsets;
pub mod weights;

mod error;

pub use error::SizeLimit;
pub use weights::WeightSet;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
