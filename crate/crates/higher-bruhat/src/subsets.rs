//! Ground-set subset arithmetic: label sets, lexicographic order, packets,
//! and sequence standardization.
//!
//! A [`LabelSet`] is a set of distinct integer labels drawn from a ground set
//! of at most 64 labels (`0..=63`), stored as a bitset. All collections of
//! label sets throughout the crate are kept in lexicographic order of the
//! sorted element sequences, which is exactly the `Ord` implementation here.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest label (inclusive) that fits in the bitset backing.
pub const MAX_LABEL: u32 = 63;

/// Errors from subset-level operations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SubsetError {
    /// A label outside `0..=63` was supplied.
    #[error("label {0} exceeds the supported maximum of {MAX_LABEL}")]
    LabelTooLarge(u64),
    /// A duplicate entry was supplied where distinct entries are required.
    #[error("duplicate entry {0}")]
    Duplicate(u64),
    /// Two sets of different cardinality were compared lexicographically.
    #[error("cardinality mismatch: {0} vs {1}")]
    CardinalityMismatch(usize, usize),
}

/// A set of distinct integer labels, value-equal and hashed by content.
///
/// Ordering is lexicographic on the strictly increasing element sequence
/// (with a proper prefix ordered first), *not* numeric order of the bitset.
///
/// ```
/// use higher_bruhat::subsets::LabelSet;
/// let a = LabelSet::from_slice(&[1, 4]).unwrap();
/// let b = LabelSet::from_slice(&[2, 3]).unwrap();
/// assert!(a < b); // 14 precedes 23 lexicographically
/// ```
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet {
    bits: u64,
}

impl LabelSet {
    /// The empty set.
    pub const EMPTY: LabelSet = LabelSet { bits: 0 };

    /// Builds a set from arbitrary (unsorted, but distinct) labels.
    pub fn from_slice(labels: &[u32]) -> Result<Self, SubsetError> {
        let mut bits = 0u64;
        for &l in labels {
            if l > MAX_LABEL {
                return Err(SubsetError::LabelTooLarge(u64::from(l)));
            }
            let m = 1u64 << l;
            if bits & m != 0 {
                return Err(SubsetError::Duplicate(u64::from(l)));
            }
            bits |= m;
        }
        Ok(LabelSet { bits })
    }

    /// Builds a singleton set.
    pub fn singleton(label: u32) -> Self {
        assert!(label <= MAX_LABEL);
        LabelSet { bits: 1 << label }
    }

    /// The contiguous ground set `lo..=hi`.
    pub fn interval(lo: u32, hi: u32) -> Self {
        assert!(hi <= MAX_LABEL && lo <= hi + 1);
        if lo > hi {
            return LabelSet::EMPTY;
        }
        let width = hi - lo + 1;
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        LabelSet { bits: mask << lo }
    }

    /// Raw bitset accessor (label `l` is bit `l`).
    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Number of elements.
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    /// True if the set has no elements.
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    /// Membership test.
    pub fn contains(self, label: u32) -> bool {
        label <= MAX_LABEL && self.bits & (1 << label) != 0
    }

    /// Subset test.
    pub fn is_subset_of(self, other: LabelSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Set with `label` added.
    pub fn with(self, label: u32) -> Self {
        assert!(label <= MAX_LABEL);
        LabelSet { bits: self.bits | (1 << label) }
    }

    /// Set with `label` removed.
    pub fn without(self, label: u32) -> Self {
        LabelSet { bits: self.bits & !(1u64 << label) }
    }

    /// Union.
    pub fn union(self, other: LabelSet) -> Self {
        LabelSet { bits: self.bits | other.bits }
    }

    /// Intersection.
    pub fn intersection(self, other: LabelSet) -> Self {
        LabelSet { bits: self.bits & other.bits }
    }

    /// Set difference `self \ other`.
    pub fn difference(self, other: LabelSet) -> Self {
        LabelSet { bits: self.bits & !other.bits }
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<u32> {
        (self.bits != 0).then(|| self.bits.trailing_zeros())
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<u32> {
        (self.bits != 0).then(|| 63 - self.bits.leading_zeros())
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let l = bits.trailing_zeros();
            bits &= bits - 1;
            Some(l)
        })
    }

    /// Elements collected in increasing order.
    pub fn elements(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Number of elements of `self` strictly inside the open interval `(lo, hi)`.
    pub fn count_strictly_between(self, lo: u32, hi: u32) -> usize {
        if lo + 1 >= hi {
            return 0;
        }
        self.intersection(LabelSet::interval(lo + 1, hi - 1)).len()
    }

    /// Number of elements strictly greater than `label`.
    pub fn count_greater_than(self, label: u32) -> usize {
        if label >= MAX_LABEL {
            0
        } else {
            LabelSet { bits: self.bits & !((2u64 << label) - 1) }.len()
        }
    }

    /// Compact digit rendering ("123" for {1,2,3}); only valid for labels <= 9.
    pub fn compact(self) -> String {
        self.iter().map(|l| l.to_string()).collect()
    }
}

impl Ord for LabelSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut x, mut y) = (self.bits, other.bits);
        loop {
            match (x == 0, y == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                (false, false) => {}
            }
            let (i, j) = (x.trailing_zeros(), y.trailing_zeros());
            if i != j {
                return i.cmp(&j);
            }
            x &= x - 1;
            y &= y - 1;
        }
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for LabelSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.elements().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LabelSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(deserializer)?;
        LabelSet::from_slice(&v).map_err(D::Error::custom)
    }
}

/// Lexicographic comparison of two equal-cardinality sets.
///
/// ```
/// use higher_bruhat::subsets::{lex_compare, LabelSet};
/// use std::cmp::Ordering;
/// let a = LabelSet::from_slice(&[1, 2, 3]).unwrap();
/// let b = LabelSet::from_slice(&[1, 2, 4]).unwrap();
/// assert_eq!(lex_compare(a, b).unwrap(), Ordering::Less);
/// ```
pub fn lex_compare(a: LabelSet, b: LabelSet) -> Result<Ordering, SubsetError> {
    if a.len() != b.len() {
        return Err(SubsetError::CardinalityMismatch(a.len(), b.len()));
    }
    Ok(a.cmp(&b))
}

/// A packet: all `(k-1)`-subsets of a `k`-set, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packet {
    /// The generating set.
    pub generator: LabelSet,
    /// All subsets of `generator` of one smaller size, lex-sorted.
    pub members: Vec<LabelSet>,
}

/// The packet of a set: all subsets omitting exactly one element.
///
/// Omitting a *larger* element yields a lexicographically *smaller* subset,
/// so the lex order of the members is the reverse of the order of omitted
/// elements.
///
/// ```
/// use higher_bruhat::subsets::{packet_of, LabelSet};
/// let p = packet_of(LabelSet::from_slice(&[1, 2, 3]).unwrap());
/// let compact: Vec<String> = p.members.iter().map(|m| m.compact()).collect();
/// assert_eq!(compact, ["12", "13", "23"]);
/// ```
pub fn packet_of(generator: LabelSet) -> Packet {
    assert!(!generator.is_empty(), "packet generator must be nonempty");
    let mut omitted = generator.elements();
    omitted.reverse();
    let members: Vec<LabelSet> =
        omitted.into_iter().map(|omit| generator.without(omit)).collect();
    debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
    Packet { generator, members }
}

/// All `k`-subsets of `ground`, in lexicographic order.
pub fn k_subsets(ground: LabelSet, k: usize) -> Vec<LabelSet> {
    let elems = ground.elements();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(elems: &[u32], start: usize, k: usize, current: &mut Vec<u32>, out: &mut Vec<LabelSet>) {
        if current.len() == k {
            out.push(LabelSet::from_slice(current).expect("distinct by construction"));
            return;
        }
        let need = k - current.len();
        for i in start..=elems.len().saturating_sub(need) {
            current.push(elems[i]);
            rec(elems, i + 1, k, current, out);
            current.pop();
        }
    }
    if k <= elems.len() {
        rec(&elems, 0, k, &mut current, &mut out);
    }
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

/// Replaces a sequence of distinct numbers by the permutation of `1..=p`
/// with the same relative order.
///
/// ```
/// use higher_bruhat::subsets::standardize;
/// assert_eq!(standardize(&[5, 2, 9]).unwrap(), vec![2, 1, 3]);
/// ```
pub fn standardize(seq: &[i64]) -> Result<Vec<u32>, SubsetError> {
    let mut sorted: Vec<i64> = seq.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        let dup = sorted.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
        return Err(SubsetError::Duplicate(dup as u64));
    }
    Ok(seq
        .iter()
        .map(|v| (sorted.binary_search(v).expect("present") + 1) as u32)
        .collect())
}
