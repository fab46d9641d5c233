//! Nullstellensatz refutation certificates for non-partitionable weight
//! sets: system encoding, the brute-force partition oracle, certificate
//! assembly from the solved linear system, and full symbolic verification.
//!
//! The certificate identity being produced and checked is
//!
//! ```text
//! 1 = sum_i beta_squares[i] * (x_i^2 - 1)  +  beta_linear * (sum_i w_i x_i)
//! ```
//!
//! where `beta_linear` carries one coefficient `b_S` per odd subset `S` and
//! each `beta_squares[i]` carries the `c_{i,S}` over even subsets avoiding
//! `i`. Solving the partition matrix for the `b` unknowns determines every
//! `c` via `c_{i,S} = -w_i * b_{S ∪ i}`, so the whole certificate follows
//! from one linear solve.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{signed_sums, Monomial, SparsePolynomial};
use crate::matrix::{solve_exact, RationalVector, SingularMatrix};
use crate::partition::PartitionMatrix;
use crate::subsets::Subset;
use crate::weights::WeightSet;

/// The polynomial encoding of a weight set: the sign constraints
/// `x_i^2 - 1` for each weight and the linear form `sum w_i x_i`.
///
/// The system has a common root exactly when some `±1` assignment zeroes the
/// linear form, i.e. when the weights are partitionable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialSystem {
    n: u32,
    generators: Vec<SparsePolynomial>,
}

impl PolynomialSystem {
    /// Variable count `n`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// All `n + 1` generators; the linear form is last.
    pub fn generators(&self) -> &[SparsePolynomial] {
        &self.generators
    }

    /// The generator `x_i^2 - 1`, for `i` in `1..=n`.
    pub fn square_generator(&self, i: u32) -> &SparsePolynomial {
        assert!(i >= 1 && i <= self.n, "generator index out of range");
        &self.generators[(i - 1) as usize]
    }

    /// The linear form `sum w_i x_i`.
    pub fn linear_form(&self) -> &SparsePolynomial {
        &self.generators[self.n as usize]
    }
}

/// Encodes `W` as its polynomial system.
pub fn encode(w: &WeightSet) -> PolynomialSystem {
    let n = w.len() as u32;
    let mut generators = Vec::with_capacity(w.len() + 1);
    for i in 1..=n {
        let mut g = SparsePolynomial::zero(n);
        g.add_term(Monomial::from_factors([(i, 2)]), BigRational::one());
        g.add_term(Monomial::one(), -BigRational::one());
        generators.push(g);
    }
    let mut linear = SparsePolynomial::zero(n);
    for i in 1..=n {
        linear.add_term(
            Monomial::variable(i),
            BigRational::from_integer(w.weight(i as usize).clone()),
        );
    }
    generators.push(linear);
    PolynomialSystem { n, generators }
}

/// An explicit equal-sum split: the side containing `n` and, implicitly, its
/// complement. The constructive disproof of any refutation certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionWitness {
    side: Subset,
}

impl PartitionWitness {
    /// The side of the split holding `n`.
    pub fn side(&self) -> &Subset {
        &self.side
    }

    /// The other side.
    pub fn complement(&self) -> Subset {
        self.side.symmetric_difference(&Subset::full(self.side.ambient()))
    }

    /// Checks the defining equation: both sides sum to the same value.
    pub fn sums_match(&self, w: &WeightSet) -> bool {
        assert_eq!(w.len(), self.side.ambient() as usize);
        let mut diff = BigInt::zero();
        for i in 1..=w.len() {
            if self.side.contains(i as u32) {
                diff += w.weight(i);
            } else {
                diff -= w.weight(i);
            }
        }
        diff.is_zero()
    }
}

/// Renders as `side | complement`, e.g. `{2} | {1}`.
impl fmt::Display for PartitionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.side, self.complement())
    }
}

/// Scans every sign assignment (with `w_n` held positive) and returns the
/// first equal-sum split in lexicographic sign order, or `None` when the
/// weights are not partitionable.
///
/// Enumeration is `2^{n-1}` assignments; the implementation refuses
/// `n > 30`.
pub fn brute_force_partition(w: &WeightSet) -> Option<PartitionWitness> {
    let n = w.len() as u32;
    let low = if n == 1 { 0 } else { (1u32 << (n - 1)) - 1 };
    for (flip, sum) in signed_sums(w) {
        if sum.is_zero() {
            // Positive side: every non-flipped i < n, plus n itself.
            let mask = (!flip & low) | (1 << (n - 1));
            return Some(PartitionWitness {
                side: Subset::from_mask(n, mask),
            });
        }
    }
    None
}

/// Solves `Π(W) · b = e` where `e` is `1` on the row labeled `{}` and `0`
/// elsewhere, yielding the `b_S` coefficients in column-label order.
///
/// A singular matrix means the weights are partitionable and no certificate
/// exists.
pub fn solve_b(pm: &PartitionMatrix) -> Result<RationalVector, SingularMatrix> {
    let dim = pm.dim();
    let empty_row = pm.index().row_position(&Subset::empty(pm.n() as u32));
    let mut rhs = alloc::vec![BigRational::zero(); dim];
    rhs[empty_row] = BigRational::one();
    solve_exact(pm.body(), &rhs)
}

/// The solved `b` vector does not satisfy the certificate equations; only a
/// broken solver can produce this.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InconsistentSolution;

impl fmt::Display for InconsistentSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("b-vector fails the certificate consistency equations")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for InconsistentSolution {}

/// Recovers every `c_{i,S}` from the solved `b` vector as the polynomials
/// `beta_squares[i-1] = sum_S c_{i,S} x^S`, using `c_{i,S} = -w_i b_{S ∪ i}`.
///
/// Before returning, re-derives the equations the `c` unknowns were
/// eliminated from (the constant term must sum to one, every other even
/// monomial to zero) and reports [`InconsistentSolution`] if any fails.
pub fn derive_c(
    pm: &PartitionMatrix,
    b: &[BigRational],
) -> Result<Vec<SparsePolynomial>, InconsistentSolution> {
    let n = pm.n() as u32;
    assert_eq!(b.len(), pm.dim(), "b-vector length mismatch");
    let index = pm.index();
    let weights = pm.weights();

    let mut betas = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let w_i = BigRational::from_integer(weights.weight(i as usize).clone());
        let single = Subset::from_elems(n, &[i]);
        let mut beta = SparsePolynomial::zero(n);
        for s in index.rows() {
            if s.contains(i) {
                continue;
            }
            let b_val = &b[index.col_position(&s.symmetric_difference(&single))];
            beta.add_term(Monomial::squarefree(s), -(&w_i * b_val));
        }
        betas.push(beta);
    }

    // -sum_i c_{i,{}} = 1 (constant term of the certificate).
    let mut const_sum = BigRational::zero();
    for beta in &betas {
        if let Some(c) = beta.coeff(&Monomial::one()) {
            const_sum -= c;
        }
    }
    if !const_sum.is_one() {
        return Err(InconsistentSolution);
    }

    // sum_{j in S} b_{S\j} w_j - sum_{i not in S} c_{i,S} = 0 for even S != {}.
    for s in index.rows() {
        if s.cardinality() == 0 {
            continue;
        }
        let mono = Monomial::squarefree(s);
        let mut acc = BigRational::zero();
        for j in s.iter() {
            let s_minus = s.symmetric_difference(&Subset::from_elems(n, &[j]));
            acc += &b[index.col_position(&s_minus)]
                * &BigRational::from_integer(weights.weight(j as usize).clone());
        }
        for i in 1..=n {
            if s.contains(i) {
                continue;
            }
            if let Some(c) = betas[(i - 1) as usize].coeff(&mono) {
                acc -= c;
            }
        }
        if !acc.is_zero() {
            return Err(InconsistentSolution);
        }
    }

    Ok(betas)
}

/// A complete refutation certificate: the multiplier of each `x_i^2 - 1`
/// and of the linear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    weights: WeightSet,
    beta_squares: Vec<SparsePolynomial>,
    beta_linear: SparsePolynomial,
}

impl Certificate {
    /// Reassembles a certificate from its parts (e.g. a deserialized file).
    ///
    /// Only shape is enforced: one square multiplier per weight and a
    /// matching ambient everywhere; the polynomial content is deliberately
    /// unchecked so that tampered certificates can be represented and then
    /// failed by [`verify_certificate`].
    pub fn from_parts(
        weights: WeightSet,
        beta_squares: Vec<SparsePolynomial>,
        beta_linear: SparsePolynomial,
    ) -> Self {
        let n = weights.len() as u32;
        assert_eq!(beta_squares.len(), weights.len(), "one multiplier per weight");
        assert!(
            beta_squares.iter().all(|p| p.n() == n) && beta_linear.n() == n,
            "ambient variable count mismatch"
        );
        Certificate {
            weights,
            beta_squares,
            beta_linear,
        }
    }

    /// Variable count `n`.
    pub fn n(&self) -> u32 {
        self.weights.len() as u32
    }

    /// The weights the certificate refutes.
    pub fn weights(&self) -> &WeightSet {
        &self.weights
    }

    /// The multiplier of `x_i^2 - 1` at index `i - 1`.
    pub fn beta_squares(&self) -> &[SparsePolynomial] {
        &self.beta_squares
    }

    /// The multiplier of the linear form.
    pub fn beta_linear(&self) -> &SparsePolynomial {
        &self.beta_linear
    }
}

/// The weights admit a partition, so no certificate exists; carries the
/// witness found by the brute-force scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partitionable {
    /// An explicit equal-sum split.
    pub witness: PartitionWitness,
}

impl fmt::Display for Partitionable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "weights are partitionable: {}", self.witness)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Partitionable {}

/// Builds the refutation certificate for the matrix's weights, or reports
/// the partition that rules one out.
///
/// The solve and the coefficient recovery are internally cross-checked; a
/// singular matrix with no brute-force witness (or an inconsistent solve)
/// would be a construction bug and panics.
pub fn build_certificate(pm: &PartitionMatrix) -> Result<Certificate, Partitionable> {
    let b = match solve_b(pm) {
        Ok(b) => b,
        Err(SingularMatrix) => {
            let witness = brute_force_partition(pm.weights())
                .expect("singular partition matrix must come with a partition");
            return Err(Partitionable { witness });
        }
    };
    let beta_squares =
        derive_c(pm, &b).expect("solved b-vector must satisfy the certificate equations");
    let mut beta_linear = SparsePolynomial::zero(pm.n() as u32);
    for (j, col) in pm.index().cols().iter().enumerate() {
        beta_linear.add_term(Monomial::squarefree(col), b[j].clone());
    }
    Ok(Certificate {
        weights: pm.weights().clone(),
        beta_squares,
        beta_linear,
    })
}

/// Outcome of a certificate verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    /// The expansion collapsed to the constant `1`.
    Pass,
    /// The expansion missed `1` by this nonzero residual.
    Fail(SparsePolynomial),
}

impl Verification {
    /// True on [`Verification::Pass`].
    pub fn passed(&self) -> bool {
        matches!(self, Verification::Pass)
    }
}

/// Symbolically expands the certificate against the system and decides
/// whether the result is exactly the constant polynomial `1`.
///
/// This is a full polynomial-identity check, not evaluation at sample
/// points: a pass is decisive.
pub fn verify_certificate(cert: &Certificate, sys: &PolynomialSystem) -> Verification {
    assert_eq!(cert.n(), sys.n(), "certificate and system sizes differ");
    let n = cert.n();
    let mut acc = SparsePolynomial::zero(n);
    for i in 1..=n {
        acc = acc.add(&cert.beta_squares[(i - 1) as usize].mul(sys.square_generator(i)));
    }
    acc = acc.add(&cert.beta_linear.mul(sys.linear_form()));
    let residual = acc.sub(&SparsePolynomial::constant(n, BigRational::one()));
    if residual.is_zero() {
        Verification::Pass
    } else {
        Verification::Fail(residual)
    }
}
