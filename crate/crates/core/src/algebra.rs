//! Exact arithmetic substrate: big rationals, sparse multivariate
//! polynomials, and the partition polynomial.
//!
//! Rationals are [`num_rational::BigRational`]: always reduced, denominator
//! positive, arithmetic exact. Polynomials map monomials to nonzero rational
//! coefficients in a `BTreeMap`, so term iteration is deterministic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::subsets::Subset;
use crate::weights::WeightSet;

/// A product of variable powers, e.g. `x1*x3^2`. Variables are indexed
/// `1..=n`; the empty product is the constant monomial `1`.
///
/// Factors are kept sorted by variable with no zero exponents, so equal
/// monomials are structurally equal and the derived order is a usable
/// (deterministic) map key order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    factors: Vec<(u32, u32)>,
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn one() -> Self {
        Monomial {
            factors: Vec::new(),
        }
    }

    /// The single variable `x_i`.
    pub fn variable(i: u32) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        Monomial {
            factors: alloc::vec![(i, 1)],
        }
    }

    /// Builds from arbitrary `(variable, exponent)` pairs; merges duplicate
    /// variables and drops zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (u32, u32)>>(factors: I) -> Self {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        for (v, e) in factors {
            assert!(v >= 1, "variables are indexed from 1");
            *map.entry(v).or_insert(0) += e;
        }
        Monomial {
            factors: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    /// The square-free monomial `x^S` with one factor per element of `S`.
    pub fn squarefree(s: &Subset) -> Self {
        Monomial {
            factors: s.iter().map(|i| (i, 1)).collect(),
        }
    }

    /// True for the constant monomial.
    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The sorted `(variable, exponent)` factors.
    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// Largest single exponent (0 for the constant monomial).
    pub fn max_exponent(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).max().unwrap_or(0)
    }

    /// Bit mask of the variables present (bit `i - 1` for `x_i`).
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for &(v, _) in &self.factors {
            assert!(v <= 32, "variable index too large for a support mask");
            mask |= 1 << (v - 1);
        }
        mask
    }

    /// Product of two monomials: exponents add.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        factors.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        factors.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        factors.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => {
                    factors.extend(a.by_ref().copied());
                    break;
                }
                (None, Some(_)) => {
                    factors.extend(b.by_ref().copied());
                    break;
                }
                (None, None) => break,
            }
        }
        Monomial { factors }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, &(v, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A multivariate polynomial over `BigRational` with `n` ambient variables,
/// stored sparsely as monomial -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    n: u32,
    terms: BTreeMap<Monomial, BigRational>,
}

impl SparsePolynomial {
    /// The zero polynomial in `n` variables.
    pub fn zero(n: u32) -> Self {
        SparsePolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(n: u32, c: BigRational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::one(), c);
        p
    }

    /// The variable `x_i` as a polynomial.
    pub fn variable(n: u32, i: u32) -> Self {
        assert!(i >= 1 && i <= n, "variable x{i} outside 1..={n}");
        let mut p = Self::zero(n);
        p.add_term(Monomial::variable(i), BigRational::one());
        p
    }

    /// Ambient variable count.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// True for the zero polynomial (empty term map).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the constant polynomial `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.is_one())
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The stored coefficient of `m`, if nonzero.
    pub fn coeff(&self, m: &Monomial) -> Option<&BigRational> {
        self.terms.get(m)
    }

    /// Adds `c * m`, removing the term if it cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        debug_assert!(
            m.factors().iter().all(|&(v, _)| v <= self.n),
            "monomial mentions a variable outside 1..={}",
            self.n
        );
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Termwise sum. Panics when the ambient variable counts differ.
    pub fn add(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.n, other.n, "ambient variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Termwise difference.
    pub fn sub(&self, other: &SparsePolynomial) -> SparsePolynomial {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> SparsePolynomial {
        SparsePolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Distributive product with exponent addition. Panics when the ambient
    /// variable counts differ.
    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.n, other.n, "ambient variable count mismatch");
        let mut out = Self::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Evaluates at the point `x_i = point[i - 1]`.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.n as usize, "point dimension mismatch");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in m.factors() {
                for _ in 0..e {
                    term *= &point[(v - 1) as usize];
                }
            }
            acc += term;
        }
        acc
    }

    /// Iterates terms in map-key order (deterministic, not grevlex).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Terms sorted for display and serialization: descending grevlex of the
    /// monomial's support, then ascending total degree.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|(ma, _), (mb, _)| {
            let sa = Subset::from_mask(self.n.max(1), ma.support_mask());
            let sb = Subset::from_mask(self.n.max(1), mb.support_mask());
            sb.grevlex_cmp(&sa)
                .then(ma.total_degree().cmp(&mb.total_degree()))
        });
        out
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl core::ops::Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: Self) -> SparsePolynomial {
        SparsePolynomial::add(self, rhs)
    }
}

impl core::ops::Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: Self) -> SparsePolynomial {
        SparsePolynomial::sub(self, rhs)
    }
}

impl core::ops::Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: Self) -> SparsePolynomial {
        SparsePolynomial::mul(self, rhs)
    }
}

impl core::ops::Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        SparsePolynomial::neg(self)
    }
}

/// The partition polynomial of `W`, evaluated: one linear-form value
/// `(sum_{i<n} s_i w_i) + w_n` per sign vector `s`, and their product.
///
/// The product is zero exactly when some sign assignment (with `w_n` held
/// positive) sums to zero, i.e. when `W` is partitionable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionPolynomial {
    /// All `2^{n-1}` signed sums, in lexicographic sign order
    /// (`s_1` most significant, `+1` before `-1`).
    pub factors: Vec<BigInt>,
    /// Product of the factors.
    pub value: BigInt,
}

/// Computes the partition polynomial of `W`.
///
/// The sign of `w_n` stays fixed at `+1`, so each two-sided split of the
/// weights is counted once.
pub fn partition_polynomial(w: &WeightSet) -> PartitionPolynomial {
    let mut factors = Vec::with_capacity(1usize << (w.len() - 1));
    let mut value = BigInt::one();
    for (_, sum) in signed_sums(w) {
        value *= &sum;
        factors.push(sum);
    }
    PartitionPolynomial { factors, value }
}

/// Iterates every sign assignment for `w_1..w_{n-1}` (with `w_n` fixed
/// positive) in lexicographic order: `s_1` is the most significant
/// coordinate and `+1` sorts before `-1`.
///
/// Yields `(flip_mask, sum)` where bit `i - 1` of `flip_mask` is set when
/// `s_i = -1`, and `sum = (sum_i s_i w_i) + w_n`.
pub(crate) fn signed_sums(w: &WeightSet) -> impl Iterator<Item = (u32, BigInt)> + '_ {
    let n = w.len();
    assert!(n <= 30, "sign enumeration is limited to n <= 30");
    (0..1u64 << (n - 1)).map(move |m| {
        let mut flip = 0u32;
        for i in 1..n {
            // s_1 is carried by the highest of the n-1 counter bits.
            if m >> (n - 1 - i) & 1 != 0 {
                flip |= 1 << (i - 1);
            }
        }
        let mut sum = w.weight(n).clone();
        for i in 1..n {
            if flip >> (i - 1) & 1 != 0 {
                sum -= w.weight(i);
            } else {
                sum += w.weight(i);
            }
        }
        (flip, sum)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;
    use alloc::vec;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn rational_arithmetic_is_exact_and_canonical() {
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
        assert_eq!(rat(-2550, -51975), rat(34, 693));
        assert_eq!(rat(7, 3) * rat(0, 1), rat(0, 1));
        assert_eq!(rat(34, 693).to_string(), "34/693");
        assert_eq!(rat(5, 1).to_string(), "5");
    }

    #[test]
    fn poly_add_cancels() {
        let n = 2;
        let x1 = SparsePolynomial::variable(n, 1);
        let x2 = SparsePolynomial::variable(n, 2);
        let sum = &(&x1 + &x2) + &(-&x1);
        assert_eq!(sum, x2);

        let zero = SparsePolynomial::zero(n);
        assert_eq!(&x1 + &zero, x1);

        let p = &(&x1 * &x2) + &SparsePolynomial::constant(n, rat(1, 1));
        let q = &(&x1 * &x2) - &SparsePolynomial::constant(n, rat(1, 1));
        let mut expected = SparsePolynomial::zero(n);
        expected.add_term(Monomial::from_factors([(1, 1), (2, 1)]), rat(2, 1));
        assert_eq!(&p + &q, expected);
    }

    #[test]
    fn poly_mul_adds_exponents() {
        let n = 2;
        let x1 = SparsePolynomial::variable(n, 1);
        let x2 = SparsePolynomial::variable(n, 2);
        let sq = &x1 * &x1;
        assert_eq!(
            sq.coeff(&Monomial::from_factors([(1, 2)])),
            Some(&rat(1, 1))
        );

        // (x1 + x2)(x1 - x2) = x1^2 - x2^2
        let prod = &(&x1 + &x2) * &(&x1 - &x2);
        let mut expected = SparsePolynomial::zero(n);
        expected.add_term(Monomial::from_factors([(1, 2)]), rat(1, 1));
        expected.add_term(Monomial::from_factors([(2, 2)]), rat(-1, 1));
        assert_eq!(prod, expected);

        // b1*x1 * w1*x1 = (b1*w1) x1^2, the cross-term shape that puts
        // b_i w_i against the x_i^2 monomial.
        let b1 = rat(2, 7);
        let w1 = rat(3, 1);
        let mut lhs = SparsePolynomial::zero(n);
        lhs.add_term(Monomial::variable(1), b1.clone());
        let mut rhs = SparsePolynomial::zero(n);
        rhs.add_term(Monomial::variable(1), w1.clone());
        let cross = &lhs * &rhs;
        assert_eq!(
            cross.coeff(&Monomial::from_factors([(1, 2)])),
            Some(&(b1 * w1))
        );
    }

    #[test]
    #[should_panic(expected = "ambient variable count mismatch")]
    fn poly_ops_reject_ambient_mismatch() {
        let _ = SparsePolynomial::variable(2, 1).add(&SparsePolynomial::variable(3, 1));
    }

    #[test]
    fn partition_polynomial_golden() {
        let w = WeightSet::from_i64s(&[1, 3, 5, 2]);
        let pp = partition_polynomial(&w);
        assert_eq!(pp.value, BigInt::from(-51975));
        assert_eq!(pp.factors.len(), 8);
        let mut sorted: Vec<i64> = pp.factors.iter().map(|f| i64::try_from(f).unwrap()).collect();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![-7, -5, -1, 1, 3, 5, 9, 11]);
    }

    #[test]
    fn partition_polynomial_zero_for_equal_pair() {
        let pp = partition_polynomial(&WeightSet::from_i64s(&[1, 1]));
        assert_eq!(pp.value, BigInt::from(0));
        let mut sorted = pp.factors.clone();
        sorted.sort();
        assert_eq!(sorted, vec![BigInt::from(0), BigInt::from(2)]);
    }

    #[test]
    fn partition_polynomial_single_weight() {
        let pp = partition_polynomial(&WeightSet::from_i64s(&[5]));
        assert_eq!(pp.factors, vec![BigInt::from(5)]);
        assert_eq!(pp.value, BigInt::from(5));
    }

    #[test]
    fn signed_sums_enumerate_lexicographically() {
        // n = 3: vectors (+,+), (+,-), (-,+), (-,-) in that order.
        let w = WeightSet::from_i64s(&[1, 2, 10]);
        let sums: Vec<(u32, i64)> = signed_sums(&w)
            .map(|(f, s)| (f, i64::try_from(&s).unwrap()))
            .collect();
        assert_eq!(sums, vec![(0b00, 13), (0b10, 9), (0b01, 11), (0b11, 7)]);
    }

    #[test]
    fn display_orders_terms_by_grevlex_support() {
        let mut p = SparsePolynomial::zero(3);
        p.add_term(Monomial::variable(3), rat(1, 2));
        p.add_term(Monomial::from_factors([(1, 1), (2, 1), (3, 1)]), rat(-1, 1));
        p.add_term(Monomial::one(), rat(4, 1));
        assert_eq!(format!("{p}"), "-1*x1*x2*x3 + 1/2*x3 + 4");
    }
}
