//! Exact dense linear algebra over big integers and rationals: fraction-free
//! determinants, deterministic exact solving, and Cramer components.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::SizeLimit;

/// Default cap on the matrix side; `O(dim^3)` bignum work and `dim^2`
/// storage make anything larger a deliberate decision.
pub const DEFAULT_MAX_DIM: usize = 1 << 13;

/// A vector of exact rationals.
pub type RationalVector = Vec<BigRational>;

/// The matrix is singular, so the requested solve or Cramer quotient does
/// not exist. For partition matrices this is not a failure: it means the
/// weights are partitionable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularMatrix;

impl fmt::Display for SingularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("matrix is singular")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SingularMatrix {}

/// A square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// An all-zero `dim x dim` matrix, refusing `dim > 2^13`.
    pub fn zero(dim: usize) -> Result<Self, SizeLimit> {
        Self::zero_with_limit(dim, DEFAULT_MAX_DIM)
    }

    /// An all-zero matrix with a caller-chosen dimension cap.
    pub fn zero_with_limit(dim: usize, max_dim: usize) -> Result<Self, SizeLimit> {
        if dim > max_dim {
            return Err(SizeLimit {
                what: "matrix dimension",
                requested: dim,
                limit: max_dim,
            });
        }
        Ok(IntMatrix {
            dim,
            entries: alloc::vec![BigInt::zero(); dim * dim],
        })
    }

    /// The identity matrix.
    pub fn identity(dim: usize) -> Result<Self, SizeLimit> {
        let mut m = Self::zero(dim)?;
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        Ok(m)
    }

    /// Builds from rows; panics unless the rows form a square matrix.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, SizeLimit> {
        let dim = rows.len();
        let mut m = Self::zero(dim)?;
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), dim, "row {i} has the wrong length");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Matrix side length.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    /// Overwrites the entry at `(row, col)`.
    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.entries[row * self.dim + col] = value;
    }

    /// The transposed matrix.
    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix {
            dim: self.dim,
            entries: alloc::vec![BigInt::zero(); self.dim * self.dim],
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// A copy with column `col` replaced by `column`.
    pub fn with_column(&self, col: usize, column: &[BigInt]) -> IntMatrix {
        assert_eq!(column.len(), self.dim, "replacement column length mismatch");
        let mut out = self.clone();
        for (i, v) in column.iter().enumerate() {
            out.set(i, col, v.clone());
        }
        out
    }

    /// Raw entries as comma-separated rows, one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{}", self.get(i, j));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix(dim={})", self.dim)?;
        f.write_str(&self.to_csv())
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so the interleaved
/// divisions are exact and the bignum growth stays polynomial. Row swaps
/// flip the tracked sign; a pivot column with no nonzero entry short-circuits
/// to determinant zero.
pub fn bareiss_determinant(m: &IntMatrix) -> BigInt {
    let n = m.dim;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.entries.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for r in 0..n - 1 {
        if a[r * n + r].is_zero() {
            let Some(p) = (r + 1..n).find(|&i| !a[i * n + r].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(r * n + j, p * n + j);
            }
            negate = !negate;
        }
        for i in r + 1..n {
            // Even rows with a zero leading entry get rescaled by
            // pivot/prev here, so no row may be skipped.
            for j in r + 1..n {
                let t = &a[i * n + j] * &a[r * n + r] - &a[i * n + r] * &a[r * n + j];
                a[i * n + j] = t / &prev;
            }
            a[i * n + r] = BigInt::zero();
        }
        prev = a[r * n + r].clone();
    }
    let det = a[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Solves `A x = rhs` exactly by rational Gaussian elimination.
///
/// Pivoting is deterministic: the first nonzero entry scanning down each
/// column. Exact arithmetic needs no magnitude pivoting, so identical inputs
/// always eliminate identically.
pub fn solve_exact(a: &IntMatrix, rhs: &[BigRational]) -> Result<RationalVector, SingularMatrix> {
    let n = a.dim;
    assert_eq!(rhs.len(), n, "right-hand side length mismatch");
    let mut m: Vec<BigRational> = a
        .entries
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    let mut b: Vec<BigRational> = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r * n + col].is_zero())
            .ok_or(SingularMatrix)?;
        if pivot != col {
            for j in 0..n {
                m.swap(col * n + j, pivot * n + j);
            }
            b.swap(col, pivot);
        }
        for r in col + 1..n {
            if m[r * n + col].is_zero() {
                continue;
            }
            let factor = &m[r * n + col] / &m[col * n + col];
            for j in col..n {
                let delta = &factor * &m[col * n + j];
                m[r * n + j] -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    let mut x = alloc::vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for j in i + 1..n {
            acc -= &m[i * n + j] * &x[j];
        }
        x[i] = acc / &m[i * n + i];
    }
    Ok(x)
}

/// The `j`-th solution component of `A x = rhs` as a quotient of
/// determinants: column `j` of `A` is replaced by `rhs` and both
/// determinants are computed fraction-free.
///
/// Always equal to `solve_exact(a, rhs)[j]`; the two routes share no
/// elimination code, which is what makes the cross-check worth running.
pub fn cramer_component(
    a: &IntMatrix,
    rhs: &[BigRational],
    j: usize,
) -> Result<BigRational, SingularMatrix> {
    let n = a.dim;
    assert_eq!(rhs.len(), n, "right-hand side length mismatch");
    assert!(j < n, "column index out of range");
    let det = bareiss_determinant(a);
    if det.is_zero() {
        return Err(SingularMatrix);
    }
    // Scale the rational column integral; det is linear in the column.
    let mut scale = BigInt::one();
    for v in rhs {
        scale = scale.lcm(v.denom());
    }
    let column: Vec<BigInt> = rhs
        .iter()
        .map(|v| v.numer() * (&scale / v.denom()))
        .collect();
    let numer = bareiss_determinant(&a.with_column(j, &column));
    Ok(BigRational::new(numer, scale * det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn identity_determinant() {
        let m = IntMatrix::identity(8).unwrap();
        assert_eq!(bareiss_determinant(&m), BigInt::one());
    }

    #[test]
    fn two_by_two_weight_matrix() {
        // [[w2, w1], [w1, w2]] with w = (1, 2): det = w2^2 - w1^2 = 3.
        let m = mat(&[&[2, 1], &[1, 2]]);
        assert_eq!(bareiss_determinant(&m), BigInt::from(3));
    }

    #[test]
    fn zero_pivot_needs_row_swap() {
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(bareiss_determinant(&m), BigInt::from(-1));
    }

    #[test]
    fn structurally_singular_short_circuits() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 5]]);
        assert_eq!(bareiss_determinant(&m), BigInt::zero());
    }

    #[test]
    fn empty_matrix_has_unit_determinant() {
        let m = IntMatrix::zero(0).unwrap();
        assert_eq!(bareiss_determinant(&m), BigInt::one());
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let m = IntMatrix::identity(3).unwrap();
        let rhs = vec![rat(1, 2), rat(-3, 1), rat(7, 5)];
        assert_eq!(solve_exact(&m, &rhs).unwrap(), rhs);
    }

    #[test]
    fn solve_detects_singular() {
        let m = mat(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve_exact(&m, &[rat(0, 1), rat(1, 1)]), Err(SingularMatrix));
    }

    #[test]
    fn cramer_on_identity_picks_rhs_component() {
        let m = IntMatrix::identity(4).unwrap();
        let rhs = vec![rat(1, 3), rat(2, 3), rat(-5, 7), rat(0, 1)];
        for j in 0..4 {
            assert_eq!(cramer_component(&m, &rhs, j).unwrap(), rhs[j]);
        }
    }

    #[test]
    fn cramer_rejects_singular() {
        let m = mat(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            cramer_component(&m, &[rat(0, 1), rat(1, 1)], 0),
            Err(SingularMatrix)
        );
    }

    #[test]
    fn dimension_guard() {
        assert!(IntMatrix::zero(DEFAULT_MAX_DIM + 1).is_err());
        assert!(IntMatrix::zero_with_limit(DEFAULT_MAX_DIM + 1, DEFAULT_MAX_DIM + 1).is_ok());
    }

    #[test]
    fn csv_layout() {
        let m = mat(&[&[1, -2], &[3, 4]]);
        assert_eq!(m.to_csv(), "1,-2\n3,4\n");
    }
}
