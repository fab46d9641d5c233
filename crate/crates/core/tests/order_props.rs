//! Order-theoretic guarantees of the grevlex comparator and the index
//! pairing, checked exhaustively at small ambient sizes.

use core::cmp::Ordering;

use nullpart_core::subsets::{GrevlexIndex, Subset};

fn all_subsets(n: u32) -> Vec<Subset> {
    (0..1u32 << n).map(|m| Subset::from_mask(n, m)).collect()
}

#[test]
fn grevlex_is_a_strict_total_order() {
    for n in 1..=6 {
        let subs = all_subsets(n);
        for a in &subs {
            assert_eq!(a.grevlex_cmp(a), Ordering::Equal);
            for b in &subs {
                let ab = a.grevlex_cmp(b);
                let ba = b.grevlex_cmp(a);
                assert_eq!(ab, ba.reverse(), "antisymmetry at n={n}: {a} vs {b}");
                if ab == Ordering::Equal {
                    assert_eq!(a, b, "only equal sets compare equal");
                }
            }
        }
        // Transitivity over all triples.
        for a in &subs {
            for b in &subs {
                if a.grevlex_cmp(b) != Ordering::Greater {
                    continue;
                }
                for c in &subs {
                    if b.grevlex_cmp(c) == Ordering::Greater {
                        assert_eq!(
                            a.grevlex_cmp(c),
                            Ordering::Greater,
                            "transitivity at n={n}: {a} > {b} > {c}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn higher_cardinality_always_wins() {
    for n in 1..=7 {
        let subs = all_subsets(n);
        for a in &subs {
            for b in &subs {
                if a.cardinality() > b.cardinality() {
                    assert_eq!(a.grevlex_cmp(b), Ordering::Greater);
                }
            }
        }
    }
}

#[test]
fn index_positions_strictly_decrease() {
    for n in 1..=10 {
        let idx = GrevlexIndex::build(n).unwrap();
        for w in idx.rows().windows(2) {
            assert_eq!(w[0].grevlex_cmp(&w[1]), Ordering::Greater);
        }
        for w in idx.cols().windows(2) {
            assert_eq!(w[0].grevlex_cmp(&w[1]), Ordering::Greater);
        }
    }
}

#[test]
fn pairing_is_a_parity_flipping_involution() {
    for n in 1..=10 {
        for s in all_subsets(n) {
            let p = s.pair();
            assert_eq!(p.pair(), s);
            assert_ne!(p.is_even(), s.is_even());
        }
    }
}

#[test]
fn paired_labels_share_their_rank() {
    // The rank of an even subset among the rows equals the rank of its pair
    // among the columns; this is what aligns w_n onto the diagonal.
    for n in 1..=10 {
        let idx = GrevlexIndex::build(n).unwrap();
        for (i, s) in idx.rows().iter().enumerate() {
            assert_eq!(idx.col_position(&s.pair()), i, "n={n}, row {s}");
        }
        for (j, s) in idx.cols().iter().enumerate() {
            assert_eq!(idx.row_position(&s.pair()), j, "n={n}, col {s}");
        }
    }
}
