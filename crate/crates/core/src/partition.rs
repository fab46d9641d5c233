//! The partition matrix `Π(W)`: construction from the symmetric-difference
//! entry rule, decomposition into commuting permutation matrices, and the
//! structural property checks.
//!
//! Rows are the even-cardinality subsets of `{1..n}`, columns the odd ones,
//! both in descending grevlex order. Cell `(S, S')` holds `w_k` exactly when
//! `S Δ S' = {k}`; every other cell is zero. Row `i` and column `i` always
//! differ by `{n}`, which puts `w_n` on the whole diagonal.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::matrix::IntMatrix;
use crate::subsets::{GrevlexIndex, Subset};
use crate::weights::WeightSet;
use crate::SizeLimit;

/// Default cap on `n` for partition-matrix construction; the matrix side is
/// `2^{n-1}`, so 14 already means an 8192-square bignum matrix.
pub const DEFAULT_MAX_N: usize = 14;

/// The labeled `2^{n-1}`-square matrix of a weight set.
#[derive(Clone, Debug)]
pub struct PartitionMatrix {
    weights: WeightSet,
    index: GrevlexIndex,
    body: IntMatrix,
}

impl PartitionMatrix {
    /// Builds `Π(W)`, refusing `n > 14`.
    pub fn build(weights: &WeightSet) -> Result<Self, SizeLimit> {
        Self::build_with_max(weights, DEFAULT_MAX_N)
    }

    /// Builds `Π(W)` with a caller-chosen cap on `n`.
    pub fn build_with_max(weights: &WeightSet, max_n: usize) -> Result<Self, SizeLimit> {
        let n = weights.len();
        if n < 1 || n > max_n {
            return Err(SizeLimit {
                what: "weight count n",
                requested: n,
                limit: max_n,
            });
        }
        let index = GrevlexIndex::build_with_limit(n as u32, n as u32)?;
        let dim = index.dim();
        let mut body = IntMatrix::zero_with_limit(dim, dim)?;
        // Each row has exactly one w_k cell per k: the column labeled
        // row Δ {k}, which has odd cardinality by construction.
        for (i, row) in index.rows().iter().enumerate() {
            for k in 1..=n as u32 {
                let col = row.symmetric_difference(&Subset::from_elems(n as u32, &[k]));
                let j = index.col_position(&col);
                body.set(i, j, weights.weight(k as usize).clone());
            }
        }
        Ok(PartitionMatrix {
            weights: weights.clone(),
            index,
            body,
        })
    }

    /// The weight count `n`.
    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// The matrix side `2^{n-1}`.
    pub fn dim(&self) -> usize {
        self.index.dim()
    }

    /// The weights the matrix was built from.
    pub fn weights(&self) -> &WeightSet {
        &self.weights
    }

    /// Row and column labels.
    pub fn index(&self) -> &GrevlexIndex {
        &self.index
    }

    /// The numeric matrix.
    pub fn body(&self) -> &IntMatrix {
        &self.body
    }

    /// Entry lookup by labels: `w_k` when `row Δ col = {k}`, else zero.
    ///
    /// Panics when `row` is not even-cardinality, `col` not odd, or the
    /// ambient sizes disagree with the matrix.
    pub fn entry(&self, row: &Subset, col: &Subset) -> BigInt {
        assert_eq!(row.ambient() as usize, self.n(), "ambient size mismatch");
        assert!(row.is_even(), "row labels have even cardinality");
        assert!(!col.is_even(), "column labels have odd cardinality");
        match row.symmetric_difference(col).singleton() {
            Some(k) => self.weights.weight(k as usize).clone(),
            None => BigInt::zero(),
        }
    }

    /// The weight index `k` held positionally by cell `(i, j)`, independent
    /// of the weight values; `None` for structural zeros.
    pub fn weight_index_at(&self, i: usize, j: usize) -> Option<usize> {
        self.index.rows()[i]
            .symmetric_difference(&self.index.cols()[j])
            .singleton()
            .map(|k| k as usize)
    }

    /// Nonzero cells as `(row, col, weight index)`, sorted by row then
    /// column. Exactly `n` cells per row.
    pub fn nonzero_cells(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * self.dim());
        for (i, row) in self.index.rows().iter().enumerate() {
            let mut cells: Vec<(usize, usize)> = (1..=n)
                .map(|k| {
                    let col = row.symmetric_difference(&Subset::from_elems(n as u32, &[k as u32]));
                    (self.index.col_position(&col), k)
                })
                .collect();
            cells.sort_unstable();
            out.extend(cells.into_iter().map(|(j, k)| (i, j, k)));
        }
        out
    }

    /// Splits the matrix into its permutation supports `Π_1..Π_n`, where
    /// `Π_k` marks the cells holding `w_k`.
    pub fn decompose(&self) -> Vec<PermutationPi> {
        let n = self.n();
        (1..=n)
            .map(|k| {
                let images = self
                    .index
                    .rows()
                    .iter()
                    .map(|row| {
                        let col = row
                            .symmetric_difference(&Subset::from_elems(n as u32, &[k as u32]));
                        self.index.col_position(&col)
                    })
                    .collect();
                PermutationPi { k, images }
            })
            .collect()
    }

    /// Runs every structural check and reports each outcome. All checks hold
    /// for any correctly built matrix, whatever the weights; a failure means
    /// the construction (or a tampered copy) is broken.
    pub fn check_properties(&self) -> PropertyReport {
        let n = self.n();
        let dim = self.dim();
        let body = &self.body;
        let wn = self.weights.weight(n);

        let symmetric = (0..dim)
            .all(|i| (i + 1..dim).all(|j| body.get(i, j) == body.get(j, i)));

        let diagonal = (0..dim).all(|i| body.get(i, i) == wn);

        let mut once_rows = true;
        for i in 0..dim {
            let mut seen = alloc::vec![0u32; n + 1];
            for j in 0..dim {
                match self.weight_index_at(i, j) {
                    Some(k) => {
                        seen[k] += 1;
                        if body.get(i, j) != self.weights.weight(k) {
                            once_rows = false;
                        }
                    }
                    None => {
                        if !body.get(i, j).is_zero() {
                            once_rows = false;
                        }
                    }
                }
            }
            once_rows &= seen[1..].iter().all(|&c| c == 1);
        }

        let mut once_cols = true;
        for j in 0..dim {
            let mut seen = alloc::vec![0u32; n + 1];
            for i in 0..dim {
                match self.weight_index_at(i, j) {
                    Some(k) => {
                        seen[k] += 1;
                        if body.get(i, j) != self.weights.weight(k) {
                            once_cols = false;
                        }
                    }
                    None => {
                        if !body.get(i, j).is_zero() {
                            once_cols = false;
                        }
                    }
                }
            }
            once_cols &= seen[1..].iter().all(|&c| c == 1);
        }

        let pis = self.decompose();
        let pi_n_identity = pis[n - 1].is_identity();
        let involutory = pis.iter().all(|p| p.is_involution());
        let commute = (0..n).all(|a| {
            (a + 1..n).all(|b| pis[a].then(&pis[b]) == pis[b].then(&pis[a]))
        });

        // Σ w_k Π_k must rebuild the body cell for cell.
        let mut rebuilt = IntMatrix::zero_with_limit(dim, dim).expect("dim already allocated");
        for p in &pis {
            let w = self.weights.weight(p.weight_index());
            for (i, &j) in p.images().iter().enumerate() {
                let sum = rebuilt.get(i, j) + w;
                rebuilt.set(i, j, sum);
            }
        }
        let reconstructs = rebuilt == *body;

        PropertyReport {
            checks: alloc::vec![
                PropertyCheck { name: "symmetric", passed: symmetric },
                PropertyCheck { name: "diagonal all w_n", passed: diagonal },
                PropertyCheck { name: "each weight once per row", passed: once_rows },
                PropertyCheck { name: "each weight once per column", passed: once_cols },
                PropertyCheck { name: "pi_n is the identity", passed: pi_n_identity },
                PropertyCheck { name: "every pi_k is an involution", passed: involutory },
                PropertyCheck { name: "all pi_k pairs commute", passed: commute },
                PropertyCheck { name: "weighted pi sum rebuilds the matrix", passed: reconstructs },
            ],
        }
    }

    /// Renders the bordered layout: column labels across the top, row labels
    /// down the left, entries aligned.
    pub fn render(&self) -> String {
        let dim = self.dim();
        let row_labels: Vec<String> = self.index.rows().iter().map(crate::subsets::label).collect();
        let col_labels: Vec<String> = self.index.cols().iter().map(crate::subsets::label).collect();
        let mut cells: Vec<Vec<String>> = Vec::with_capacity(dim);
        for i in 0..dim {
            cells.push(
                (0..dim)
                    .map(|j| alloc::format!("{}", self.body.get(i, j)))
                    .collect(),
            );
        }
        let left = row_labels.iter().map(|l| l.len()).max().unwrap_or(0);
        let mut widths: Vec<usize> = col_labels.iter().map(|l| l.len()).collect();
        for row in &cells {
            for (j, c) in row.iter().enumerate() {
                widths[j] = widths[j].max(c.len());
            }
        }
        let mut out = String::new();
        let _ = write!(out, "{:left$} |", "");
        for (j, l) in col_labels.iter().enumerate() {
            let _ = write!(out, " {:>w$}", l, w = widths[j]);
        }
        out.push('\n');
        let total: usize = left + 2 + widths.iter().map(|w| w + 1).sum::<usize>();
        for _ in 0..total {
            out.push('-');
        }
        out.push('\n');
        for i in 0..dim {
            let _ = write!(out, "{:left$} |", row_labels[i]);
            for (j, c) in cells[i].iter().enumerate() {
                let _ = write!(out, " {:>w$}", c, w = widths[j]);
            }
            out.push('\n');
        }
        out
    }
}

/// One permutation support `Π_k` of the matrix, stored as the map from row
/// position to the column position holding `w_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationPi {
    k: usize,
    images: Vec<usize>,
}

impl PermutationPi {
    /// The weight index `k` this permutation marks.
    pub fn weight_index(&self) -> usize {
        self.k
    }

    /// Image of row position `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// All images, indexed by row position.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Side length.
    pub fn dim(&self) -> usize {
        self.images.len()
    }

    /// True when every position maps to itself.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// True when applying the permutation twice is the identity.
    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| self.images[j] == i)
    }

    /// Images of the matrix product `self * other`:
    /// position `i` maps to `other(self(i))`.
    pub fn then(&self, other: &PermutationPi) -> Vec<usize> {
        self.images.iter().map(|&j| other.images[j]).collect()
    }
}

/// Outcome of one structural check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    /// What was checked.
    pub name: &'static str,
    /// Whether it held.
    pub passed: bool,
}

/// Outcomes of the full structural check suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    /// One entry per check, in a fixed order.
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    /// True when every check passed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}
