//! Subsets of `{1..n}` as bit masks, graded reverse lexicographic order, and
//! the even/odd index pairing used by the partition matrix.
//!
//! Elements are the integers `1..=n`; element `i` occupies mask bit `i - 1`.
//! The ambient size `n` is carried explicitly, so the empty set at `n = 4`
//! and at `n = 5` are distinct values and never compare.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::SizeLimit;

/// Largest ambient size a [`Subset`] supports (mask width).
pub const MAX_AMBIENT: u32 = 32;

/// Default limit for [`GrevlexIndex::build`]; the index enumerates all
/// `2^n` subsets, so this caps the enumeration cost.
pub const DEFAULT_MAX_INDEX_N: u32 = 20;

/// A subset of `{1..n}` stored as an `n`-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    mask: u32,
    n: u32,
}

impl Subset {
    /// The empty subset of `{1..n}`.
    pub fn empty(n: u32) -> Self {
        assert!((1..=MAX_AMBIENT).contains(&n), "ambient size out of range");
        Subset { mask: 0, n }
    }

    /// The full subset `{1..n}`.
    pub fn full(n: u32) -> Self {
        let mut s = Subset::empty(n);
        s.mask = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        s
    }

    /// Builds a subset from an explicit mask (bit `i - 1` means `i` is in).
    pub fn from_mask(n: u32, mask: u32) -> Self {
        let full = Subset::full(n);
        assert!(mask & !full.mask == 0, "mask has bits outside 1..={n}");
        Subset { mask, n }
    }

    /// Builds a subset from its elements. Panics on elements outside `1..=n`.
    pub fn from_elems(n: u32, elems: &[u32]) -> Self {
        let mut s = Subset::empty(n);
        for &e in elems {
            assert!(e >= 1 && e <= n, "element {e} outside 1..={n}");
            s.mask |= 1 << (e - 1);
        }
        s
    }

    /// The ambient size `n`.
    pub fn ambient(&self) -> u32 {
        self.n
    }

    /// The raw bit mask.
    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// Number of elements.
    pub fn cardinality(&self) -> u32 {
        self.mask.count_ones()
    }

    /// True when the cardinality is even (the empty set counts as even).
    pub fn is_even(&self) -> bool {
        self.cardinality() % 2 == 0
    }

    /// Membership test for `i` in `1..=n`.
    pub fn contains(&self, i: u32) -> bool {
        i >= 1 && i <= self.n && self.mask & (1 << (i - 1)) != 0
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let mask = self.mask;
        (1..=self.n).filter(move |i| mask & (1 << (i - 1)) != 0)
    }

    /// Elements in exactly one of `self` and `other`.
    ///
    /// Panics when the ambient sizes differ.
    pub fn symmetric_difference(&self, other: &Subset) -> Subset {
        assert_eq!(self.n, other.n, "ambient size mismatch");
        Subset {
            mask: self.mask ^ other.mask,
            n: self.n,
        }
    }

    /// The paired label `S Δ {n}`: adds `n` when absent, removes it when
    /// present. Flips cardinality parity; applying it twice is the identity.
    pub fn pair(&self) -> Subset {
        Subset {
            mask: self.mask ^ (1 << (self.n - 1)),
            n: self.n,
        }
    }

    /// If the subset is a singleton `{k}`, returns `k`.
    pub fn singleton(&self) -> Option<u32> {
        if self.mask.count_ones() == 1 {
            Some(self.mask.trailing_zeros() + 1)
        } else {
            None
        }
    }

    /// Graded reverse lexicographic comparison.
    ///
    /// `S` precedes `S'` (compares `Greater`) when `|S| > |S'|`, or the
    /// cardinalities tie and the largest element on which the two sets differ
    /// belongs to `S'`. Total over subsets of a common ambient; panics when
    /// the ambients differ.
    pub fn grevlex_cmp(&self, other: &Subset) -> Ordering {
        assert_eq!(self.n, other.n, "ambient size mismatch");
        if self.mask == other.mask {
            return Ordering::Equal;
        }
        match self.cardinality().cmp(&other.cardinality()) {
            Ordering::Equal => {
                // Highest differing element; the set NOT holding it wins.
                let top = 31 - (self.mask ^ other.mask).leading_zeros();
                if other.mask & (1 << top) != 0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

/// Renders as a sorted brace list: `{1,2,5}`; the empty set renders as `{}`.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for e in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}@{}", self.n)
    }
}

/// Renders a subset as a brace list string.
pub fn label(s: &Subset) -> String {
    alloc::format!("{s}")
}

/// All even- and all odd-cardinality subsets of `{1..n}`, each list in
/// descending grevlex order.
///
/// Index `i` of the even list (rows) and index `i` of the odd list (columns)
/// always differ by exactly `{n}`, the pairing that puts `w_n` on the
/// diagonal of the partition matrix.
#[derive(Clone, Debug)]
pub struct GrevlexIndex {
    n: u32,
    row_order: Vec<Subset>,
    col_order: Vec<Subset>,
    // Position of each mask in its order vector; shared by parity since
    // row and column masks never collide.
    positions: Vec<u32>,
}

impl GrevlexIndex {
    /// Builds the index for ambient size `n`, refusing `n > 20` (the
    /// enumeration touches all `2^n` subsets).
    pub fn build(n: u32) -> Result<Self, SizeLimit> {
        Self::build_with_limit(n, DEFAULT_MAX_INDEX_N)
    }

    /// Builds the index with a caller-chosen cap on `n`.
    pub fn build_with_limit(n: u32, max_n: u32) -> Result<Self, SizeLimit> {
        if n < 1 || n > max_n.min(MAX_AMBIENT) {
            return Err(SizeLimit {
                what: "ambient size n",
                requested: n as usize,
                limit: max_n.min(MAX_AMBIENT) as usize,
            });
        }
        let half = 1usize << (n - 1);
        let mut row_order = Vec::with_capacity(half);
        let mut col_order = Vec::with_capacity(half);
        for mask in 0..(1u64 << n) {
            let s = Subset { mask: mask as u32, n };
            if s.is_even() {
                row_order.push(s);
            } else {
                col_order.push(s);
            }
        }
        // Descending: index 0 is the grevlex-greatest label.
        row_order.sort_by(|a, b| b.grevlex_cmp(a));
        col_order.sort_by(|a, b| b.grevlex_cmp(a));
        let mut positions = alloc::vec![0u32; 1 << n];
        for (i, s) in row_order.iter().enumerate() {
            positions[s.mask as usize] = i as u32;
        }
        for (i, s) in col_order.iter().enumerate() {
            positions[s.mask as usize] = i as u32;
        }
        Ok(GrevlexIndex {
            n,
            row_order,
            col_order,
            positions,
        })
    }

    /// Ambient size `n`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The matrix side `2^{n-1}`.
    pub fn dim(&self) -> usize {
        1 << (self.n - 1)
    }

    /// Even-cardinality row labels, grevlex-descending; the last is `{}`.
    pub fn rows(&self) -> &[Subset] {
        &self.row_order
    }

    /// Odd-cardinality column labels, grevlex-descending.
    pub fn cols(&self) -> &[Subset] {
        &self.col_order
    }

    /// Position of an even subset among the rows.
    pub fn row_position(&self, s: &Subset) -> usize {
        debug_assert_eq!(s.ambient(), self.n);
        debug_assert!(s.is_even(), "row labels have even cardinality");
        self.positions[s.mask as usize] as usize
    }

    /// Position of an odd subset among the columns.
    pub fn col_position(&self, s: &Subset) -> usize {
        debug_assert_eq!(s.ambient(), self.n);
        debug_assert!(!s.is_even(), "column labels have odd cardinality");
        self.positions[s.mask as usize] as usize
    }
}
