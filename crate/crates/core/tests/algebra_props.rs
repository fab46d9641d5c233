//! Arithmetic laws of the exact substrate, plus the equivalence of the
//! partition polynomial with the brute-force partition oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nullpart_core::algebra::{partition_polynomial, Monomial, SparsePolynomial};
use nullpart_core::certificate::brute_force_partition;
use nullpart_core::WeightSet;

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn rational_strategy() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=30).prop_map(|(p, q)| rat(p, q))
}

/// Up to four terms over three variables with exponents at most two.
fn poly_strategy() -> impl Strategy<Value = SparsePolynomial> {
    prop::collection::vec(
        ((1u32..=3, 0u32..=2), (1u32..=3, 0u32..=2), -9i64..=9),
        0..=4,
    )
    .prop_map(|terms| {
        let mut p = SparsePolynomial::zero(3);
        for ((v1, e1), (v2, e2), c) in terms {
            p.add_term(Monomial::from_factors([(v1, e1), (v2, e2)]), rat(c, 1));
        }
        p
    })
}

fn canonical(r: &BigRational) -> bool {
    // Lowest terms with a positive denominator; zero must sit at 0/1.
    r.denom().is_positive() && r.numer().gcd(r.denom()) == BigInt::from(1)
}

proptest! {
    #[test]
    fn rational_results_stay_canonical(a in rational_strategy(), b in rational_strategy()) {
        prop_assert!(canonical(&(&a + &b)));
        prop_assert!(canonical(&(&a * &b)));
        prop_assert!(canonical(&(-&a)));
        if !b.is_zero() {
            prop_assert!(canonical(&(&a / &b)));
            // Division really is the inverse of multiplication, exactly.
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }

    #[test]
    fn polynomial_ring_axioms(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert!(p.add(&p.neg()).is_zero());
    }
}

fn exhaustive_weight_vectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |w| {
                    let mut v = v.clone();
                    v.push(w);
                    v
                })
            })
            .collect();
    }
    out
}

#[test]
fn partition_polynomial_vanishes_iff_partitionable_exhaustive() {
    for n in 1..=4 {
        for ws in exhaustive_weight_vectors(n, 3) {
            let w = WeightSet::from_i64s(&ws);
            let zero = partition_polynomial(&w).value.is_zero();
            let witness = brute_force_partition(&w);
            assert_eq!(zero, witness.is_some(), "W = {ws:?}");
            if let Some(wit) = witness {
                assert!(wit.sums_match(&w), "W = {ws:?}");
            }
        }
    }
}

#[test]
fn partition_polynomial_vanishes_iff_partitionable_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..400 {
        let n = rng.gen_range(1..=10);
        let ws: Vec<i64> = (0..n).map(|_| rng.gen_range(-6..=6)).collect();
        let w = WeightSet::from_i64s(&ws);
        assert_eq!(
            partition_polynomial(&w).value.is_zero(),
            brute_force_partition(&w).is_some(),
            "W = {ws:?}"
        );
    }
}

#[test]
fn partition_polynomial_ignores_sign_of_non_final_weights() {
    // Flipping the sign of any single w_i with i < n permutes the sign
    // vectors, so the product value is unchanged, exactly.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..100 {
        let n = rng.gen_range(2..=9);
        let ws: Vec<i64> = (0..n).map(|_| rng.gen_range(-20..=20)).collect();
        let base = partition_polynomial(&WeightSet::from_i64s(&ws)).value;
        for i in 0..n - 1 {
            let mut flipped = ws.clone();
            flipped[i] = -flipped[i];
            assert_eq!(
                partition_polynomial(&WeightSet::from_i64s(&flipped)).value,
                base,
                "W = {ws:?}, flipped index {i}"
            );
        }
    }
}

#[test]
fn factor_count_is_half_exponential() {
    for n in 1..=10 {
        let w = WeightSet::from_i64s(&vec![1; n]);
        assert_eq!(partition_polynomial(&w).factors.len(), 1 << (n - 1));
    }
}
