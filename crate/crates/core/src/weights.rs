//! The integer multiset under refutation.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

/// The ordered weights `w_1..w_n`. Duplicates, zeros, and negative values
/// are all permitted; only `n >= 1` is required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    weights: Vec<BigInt>,
}

impl WeightSet {
    /// Wraps an ordered weight list. Panics on an empty list.
    pub fn new(weights: Vec<BigInt>) -> Self {
        assert!(!weights.is_empty(), "a weight set needs at least one weight");
        WeightSet { weights }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(weights: &[i64]) -> Self {
        Self::new(weights.iter().map(|&w| BigInt::from(w)).collect())
    }

    /// Number of weights `n`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// Always false; the constructor rejects empty lists.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The weight `w_k` for `k` in `1..=n`.
    pub fn weight(&self, k: usize) -> &BigInt {
        &self.weights[k - 1]
    }

    /// All weights in order.
    pub fn weights(&self) -> &[BigInt] {
        &self.weights
    }
}

impl fmt::Display for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}
