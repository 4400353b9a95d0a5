//! Small sets of 1-indexed positive integers, packed into a `u64`.
//!
//! Every vertex set in this crate is tiny (desk-scale enumeration), so a
//! bitmask is both the storage format and the canonical cache key. Bit
//! `k - 1` stands for the index `k`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest index an [`IndexSet`] can hold.
pub const MAX_INDEX: usize = 64;

/// A finite set of indices in `1..=64`.
///
/// Ordering is lexicographic on the ascending element sequence, so `{1}`
/// sorts before `{1,2}` which sorts before `{2}`; the empty set is smallest.
/// This is the order used for every sorted table in the crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    /// Wraps a raw mask where bit `k - 1` marks index `k`.
    pub const fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., k}`.
    pub fn prefix(k: usize) -> Result<Self> {
        if k > MAX_INDEX {
            return Err(Error::input(format!("prefix length {k} exceeds {MAX_INDEX}")));
        }
        Ok(IndexSet(low_bits(k)))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut bits = 0u64;
        for k in indices {
            if k == 0 || k > MAX_INDEX {
                return Err(Error::input(format!("index {k} outside 1..={MAX_INDEX}")));
            }
            bits |= 1 << (k - 1);
        }
        Ok(IndexSet(bits))
    }

    pub fn singleton(k: usize) -> Result<Self> {
        Self::from_indices([k])
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, k: usize) -> bool {
        (1..=MAX_INDEX).contains(&k) && self.0 >> (k - 1) & 1 == 1
    }

    pub fn is_subset_of(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: IndexSet) -> bool {
        self.is_subset_of(other) && self != other
    }

    pub fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & !other.0)
    }

    /// Panics if `k` is outside `1..=64`.
    pub fn with(self, k: usize) -> IndexSet {
        assert!((1..=MAX_INDEX).contains(&k), "index {k} out of range");
        IndexSet(self.0 | 1 << (k - 1))
    }

    pub fn without(self, k: usize) -> IndexSet {
        if (1..=MAX_INDEX).contains(&k) {
            IndexSet(self.0 & !(1 << (k - 1)))
        } else {
            self
        }
    }

    /// Largest element, if any.
    pub fn largest(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn smallest(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Ascending iterator over the elements.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Shifts every element up by `offset` (used to place Y-indices after X).
    pub fn shifted(self, offset: usize) -> Result<IndexSet> {
        match self.largest() {
            Some(top) if top + offset > MAX_INDEX => Err(Error::input(format!(
                "shifting by {offset} overflows index range"
            ))),
            _ => Ok(IndexSet(self.0 << offset)),
        }
    }

    /// All subsets of `self`, ordered by size, then lexicographically.
    pub fn subsets_by_size(self) -> Vec<IndexSet> {
        let elems = self.to_vec();
        let mut out = Vec::with_capacity(1 << elems.len());
        for size in 0..=elems.len() {
            out.extend(combinations(&elems, size));
        }
        out
    }

    /// Subsets of `self` of exactly `size` elements in lexicographic order.
    pub fn subsets_of_size(self, size: usize) -> Vec<IndexSet> {
        combinations(&self.to_vec(), size)
    }

    /// `'+'`-joined ascending indices, `'-'` for the empty set.
    pub fn plus_joined(self) -> String {
        self.prefixed_plus_joined("")
    }

    /// Like [`plus_joined`](Self::plus_joined) with a label before each index,
    /// e.g. `"x1+x2"`.
    pub fn prefixed_plus_joined(self, prefix: &str) -> String {
        if self.is_empty() {
            return "-".to_string();
        }
        self.iter()
            .map(|k| format!("{prefix}{k}"))
            .collect::<Vec<_>>()
            .join("+")
    }
}

fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Lexicographic `size`-combinations of `elems` (assumed ascending).
fn combinations(elems: &[usize], size: usize) -> Vec<IndexSet> {
    let n = elems.len();
    if size > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut pos: Vec<usize> = (0..size).collect();
    loop {
        out.push(IndexSet(pos.iter().fold(0u64, |acc, &p| acc | 1 << (elems[p] - 1))));
        // advance the rightmost position that still has room
        let mut k = size;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if pos[k] < n - size + k {
                break;
            }
        }
        pos[k] += 1;
        for t in k + 1..size {
            pos[t] = pos[t - 1] + 1;
        }
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let k = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(k + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for IndexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A vertex subset `W = X' ⊔ Y'` of a bipartite vertex set, kept split by side.
///
/// Equivalently a squarefree multidegree: the indicator vector of `xpart`
/// followed by that of `ypart`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexSubset {
    pub xpart: IndexSet,
    pub ypart: IndexSet,
}

impl VertexSubset {
    pub fn new(xpart: IndexSet, ypart: IndexSet) -> Self {
        VertexSubset { xpart, ypart }
    }

    pub fn from_lists(xs: &[usize], ys: &[usize]) -> Result<Self> {
        Ok(VertexSubset {
            xpart: IndexSet::from_indices(xs.iter().copied())?,
            ypart: IndexSet::from_indices(ys.iter().copied())?,
        })
    }

    pub fn len(&self) -> usize {
        self.xpart.len() + self.ypart.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xpart.is_empty() && self.ypart.is_empty()
    }

    /// Checks `xpart ⊆ {1..n}` and `ypart ⊆ {1..m}`.
    pub fn check_bounds(&self, n: usize, m: usize) -> Result<()> {
        if self.xpart.largest().is_some_and(|k| k > n) || self.ypart.largest().is_some_and(|k| k > m) {
            return Err(Error::input(format!(
                "vertex subset x={} y={} outside bounds n={n}, m={m}",
                self.xpart, self.ypart
            )));
        }
        Ok(())
    }

    /// Flat encoding with X-vertices at `1..n` and Y-vertices at `n+1..n+m`.
    pub fn flatten(&self, n: usize) -> Result<IndexSet> {
        if self.xpart.largest().is_some_and(|k| k > n) {
            return Err(Error::input(format!("x-part {} exceeds n = {n}", self.xpart)));
        }
        Ok(self.xpart.union(self.ypart.shifted(n)?))
    }

    /// Inverse of [`flatten`](Self::flatten).
    pub fn split(flat: IndexSet, n: usize) -> Self {
        let xmask = low_bits(n);
        VertexSubset {
            xpart: IndexSet(flat.0 & xmask),
            ypart: IndexSet(if n >= 64 { 0 } else { flat.0 >> n }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s = IndexSet::from_indices([5, 1, 3]).unwrap();
        assert_eq!(s.to_vec(), vec![1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.largest(), Some(5));
        assert_eq!(s.smallest(), Some(1));
    }

    #[test]
    fn out_of_range_indices_rejected() {
        assert!(IndexSet::from_indices([0]).is_err());
        assert!(IndexSet::from_indices([65]).is_err());
        assert!(IndexSet::from_indices([64]).is_ok());
    }

    #[test]
    fn lexicographic_order() {
        let a = IndexSet::from_indices([1]).unwrap();
        let b = IndexSet::from_indices([1, 2]).unwrap();
        let c = IndexSet::from_indices([2]).unwrap();
        assert!(IndexSet::EMPTY < a && a < b && b < c);
    }

    #[test]
    fn subsets_by_size_counts() {
        let s = IndexSet::prefix(4).unwrap();
        let subs = s.subsets_by_size();
        assert_eq!(subs.len(), 16);
        assert!(subs.windows(2).all(|w| w[0].len() <= w[1].len()));
        assert_eq!(s.subsets_of_size(2).len(), 6);
        assert_eq!(
            s.subsets_of_size(2)[..3],
            [
                IndexSet::from_indices([1, 2]).unwrap(),
                IndexSet::from_indices([1, 3]).unwrap(),
                IndexSet::from_indices([1, 4]).unwrap()
            ]
        );
        assert!(s.subsets_of_size(5).is_empty());
        assert_eq!(s.subsets_of_size(0), vec![IndexSet::EMPTY]);
    }

    #[test]
    fn flatten_and_split() {
        let w = VertexSubset::from_lists(&[1, 3], &[2]).unwrap();
        let flat = w.flatten(3).unwrap();
        assert_eq!(flat.to_vec(), vec![1, 3, 5]);
        assert_eq!(VertexSubset::split(flat, 3), w);
        assert!(w.check_bounds(2, 2).is_err());
        assert!(w.check_bounds(3, 2).is_ok());
    }

    #[test]
    fn rendering() {
        assert_eq!(IndexSet::EMPTY.plus_joined(), "-");
        let s = IndexSet::from_indices([1, 2]).unwrap();
        assert_eq!(s.plus_joined(), "1+2");
        assert_eq!(s.prefixed_plus_joined("x"), "x1+x2");
        assert_eq!(s.to_string(), "{1,2}");
    }
}
