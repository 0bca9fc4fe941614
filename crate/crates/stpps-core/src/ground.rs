//! Ground sets and bitset element subsets.
//!
//! A [`GroundSet`] is a finite labelled vertex/element universe V, optionally
//! carrying two distinguished terminals s and t. An [`ElemSet`] is a subset
//! of element indices stored as a `u64` bitmask, which caps the supported
//! ground-set size at 64 elements; all set algebra (union, intersection,
//! difference, complement, subset tests) is constant-time on the mask.
//!
//! `ElemSet` carries a canonical total order — lexicographic on the sorted
//! element list — used for deterministic tie-breaking whenever function
//! values tie.

use crate::error::{Error, Result};
use std::fmt;

/// Maximum supported ground-set size (bitset width).
pub const MAX_GROUND: usize = 64;

/// A subset of ground-set elements, stored as a bitmask over indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElemSet {
    bits: u64,
}

impl ElemSet {
    /// The empty set.
    #[must_use]
    pub fn empty() -> Self {
        ElemSet { bits: 0 }
    }

    /// The full set {0, …, n−1}.
    ///
    /// # Panics
    /// Panics if `n > 64`.
    #[must_use]
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large for bitset");
        if n == MAX_GROUND {
            ElemSet { bits: u64::MAX }
        } else {
            ElemSet {
                bits: (1u64 << n) - 1,
            }
        }
    }

    /// The singleton {i}.
    #[must_use]
    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_GROUND);
        ElemSet { bits: 1u64 << i }
    }

    /// Builds a set from element indices.
    #[must_use]
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            assert!(i < MAX_GROUND);
            bits |= 1u64 << i;
        }
        ElemSet { bits }
    }

    /// Raw bitmask accessor (stable across the crate for hashing/indexing).
    #[must_use]
    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Reconstructs a set from a raw bitmask.
    #[must_use]
    pub fn from_bits(bits: u64) -> Self {
        ElemSet { bits }
    }

    /// Number of elements.
    #[must_use]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    /// True iff the set is empty.
    #[must_use]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    /// Membership test.
    #[must_use]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_GROUND && self.bits & (1u64 << i) != 0
    }

    /// Set union.
    #[must_use]
    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet {
            bits: self.bits | other.bits,
        }
    }

    /// Set intersection.
    #[must_use]
    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet {
            bits: self.bits & other.bits,
        }
    }

    /// Set difference `self ∖ other`.
    #[must_use]
    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet {
            bits: self.bits & !other.bits,
        }
    }

    /// Complement with respect to the full set of size `n`.
    #[must_use]
    pub fn complement(self, n: usize) -> ElemSet {
        ElemSet {
            bits: ElemSet::full(n).bits & !self.bits,
        }
    }

    /// Adds an element, returning the enlarged set.
    #[must_use]
    pub fn insert(self, i: usize) -> ElemSet {
        self.union(ElemSet::singleton(i))
    }

    /// Subset test `self ⊆ other`.
    #[must_use]
    pub fn is_subset_of(self, other: ElemSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// True iff the two sets share no element.
    #[must_use]
    pub fn is_disjoint(self, other: ElemSet) -> bool {
        self.bits & other.bits == 0
    }

    /// Smallest element, if any.
    #[must_use]
    pub fn min_elem(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Iterates elements in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// True iff `self` and `other` form an intersecting pair: X∩Y, X∖Y and
    /// Y∖X are all nonempty.
    #[must_use]
    pub fn is_intersecting_with(self, other: ElemSet) -> bool {
        !self.intersection(other).is_empty()
            && !self.difference(other).is_empty()
            && !other.difference(self).is_empty()
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElemSet {
    /// Canonical order: lexicographic on the sorted element list, so
    /// {0,5} < {1} and {0} < {0,2}.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        if self.bits == other.bits {
            return Ordering::Equal;
        }
        // All bits below the lowest differing index j agree; the comparison
        // reduces to set-with-j versus its elements above j.
        let j = (self.bits ^ other.bits).trailing_zeros();
        let (with_j, without_j, without_is_self) = if self.bits >> j & 1 == 1 {
            (self.bits, other.bits, false)
        } else {
            (other.bits, self.bits, true)
        };
        let _ = with_j;
        // Elements of the j-free set strictly above j, if any, lose to j;
        // if it has none, it is a strict prefix and sorts first.
        let above = if j == 63 { 0 } else { without_j >> (j + 1) };
        let without_first = above != 0;
        // without_first: the j-free set's next element is > j, so the set
        // containing j is lexicographically smaller.
        match (without_first, without_is_self) {
            (true, true) => Ordering::Greater, // self lacks j, has larger elem
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Less, // self is a strict prefix
            (false, false) => Ordering::Greater,
        }
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A labelled ground set with optional distinguished terminals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    s_index: Option<usize>,
    t_index: Option<usize>,
}

impl GroundSet {
    /// Builds a ground set from distinct labels and optional terminals.
    pub fn new(
        labels: Vec<String>,
        s_index: Option<usize>,
        t_index: Option<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidInput("ground set must be nonempty".into()));
        }
        if n > MAX_GROUND {
            return Err(Error::InvalidInput(format!(
                "ground set size {n} exceeds the supported maximum {MAX_GROUND}"
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::InvalidInput(format!(
                    "duplicate element label {l:?}"
                )));
            }
        }
        for &idx in [&s_index, &t_index].into_iter().flatten() {
            if idx >= n {
                return Err(Error::InvalidInput(format!(
                    "terminal index {idx} out of range for n={n}"
                )));
            }
        }
        if let (Some(s), Some(t)) = (s_index, t_index) {
            if s == t {
                return Err(Error::InvalidInput(
                    "terminals s and t must be distinct".into(),
                ));
            }
        }
        Ok(GroundSet {
            labels,
            s_index,
            t_index,
        })
    }

    /// A ground set with generated labels `v0, v1, …` and no terminals.
    #[must_use]
    pub fn with_default_labels(n: usize) -> Self {
        GroundSet::new((0..n).map(|i| format!("v{i}")).collect(), None, None)
            .expect("generated labels are valid")
    }

    /// A ground set with generated labels and terminals at the given indices.
    pub fn with_terminals(n: usize, s: usize, t: usize) -> Result<Self> {
        GroundSet::new((0..n).map(|i| format!("v{i}")).collect(), Some(s), Some(t))
    }

    /// Number of elements.
    #[must_use]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// The full element set.
    #[must_use]
    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.n())
    }

    /// Display label of element `i`.
    #[must_use]
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// All labels in index order.
    #[must_use]
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of a label, if present.
    #[must_use]
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index of terminal s, if set.
    #[must_use]
    pub fn s_index(&self) -> Option<usize> {
        self.s_index
    }

    /// Index of terminal t, if set.
    #[must_use]
    pub fn t_index(&self) -> Option<usize> {
        self.t_index
    }

    /// Both terminals, or an invalid-input error naming the caller's need.
    pub fn terminals(&self) -> Result<(usize, usize)> {
        match (self.s_index, self.t_index) {
            (Some(s), Some(t)) => Ok((s, t)),
            _ => Err(Error::InvalidInput(
                "this operation requires terminals s and t".into(),
            )),
        }
    }

    /// Formats a set as comma-separated labels.
    #[must_use]
    pub fn format_set(&self, set: ElemSet) -> String {
        set.iter()
            .map(|i| self.label(i).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_algebra() {
        let a = ElemSet::from_indices([0, 2, 5]);
        let b = ElemSet::from_indices([2, 3]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.union(b), ElemSet::from_indices([0, 2, 3, 5]));
        assert_eq!(a.intersection(b), ElemSet::singleton(2));
        assert_eq!(a.difference(b), ElemSet::from_indices([0, 5]));
        assert_eq!(a.complement(6), ElemSet::from_indices([1, 3, 4]));
        assert!(ElemSet::from_indices([0, 2]).is_subset_of(a));
        assert!(!a.is_subset_of(b));
        assert!(a.is_disjoint(ElemSet::from_indices([1, 4])));
        assert_eq!(a.min_elem(), Some(0));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(ElemSet::full(64).len(), 64);
    }

    #[test]
    fn intersecting_pair_predicate() {
        let x = ElemSet::from_indices([0, 1]);
        let y = ElemSet::from_indices([1, 2]);
        assert!(x.is_intersecting_with(y));
        assert!(!x.is_intersecting_with(ElemSet::from_indices([0, 1, 2])));
        assert!(!x.is_intersecting_with(ElemSet::from_indices([2, 3])));
    }

    #[test]
    fn canonical_order_is_lexicographic_on_sorted_lists() {
        let sets = [
            ElemSet::from_indices([0]),
            ElemSet::from_indices([0, 2]),
            ElemSet::from_indices([0, 3]),
            ElemSet::from_indices([0, 5]),
            ElemSet::from_indices([1]),
            ElemSet::from_indices([1, 2]),
            ElemSet::from_indices([2]),
        ];
        for w in sets.windows(2) {
            assert!(w[0] < w[1], "{:?} should sort before {:?}", w[0], w[1]);
        }
        // Cross-check against explicit list comparison on all subsets of
        // {0..5}.
        for x in 1u64..32 {
            for y in 1u64..32 {
                let sx = ElemSet::from_bits(x);
                let sy = ElemSet::from_bits(y);
                let lx: Vec<usize> = sx.iter().collect();
                let ly: Vec<usize> = sy.iter().collect();
                assert_eq!(sx.cmp(&sy), lx.cmp(&ly), "x={sx:?} y={sy:?}");
            }
        }
    }

    #[test]
    fn ground_set_validation() {
        assert!(GroundSet::new(vec![], None, None).is_err());
        assert!(GroundSet::new(vec!["a".into(), "a".into()], None, None).is_err());
        assert!(GroundSet::new(vec!["a".into(), "b".into()], Some(0), Some(0)).is_err());
        assert!(GroundSet::new(vec!["a".into()], Some(1), None).is_err());
        let g = GroundSet::new(vec!["s".into(), "a".into(), "t".into()], Some(0), Some(2)).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.index_of("a"), Some(1));
        assert_eq!(g.terminals().unwrap(), (0, 2));
        assert_eq!(g.format_set(ElemSet::from_indices([0, 2])), "s,t");
    }
}
