//! Colexicographic order on `d`-subsets of the positive integers, initial
//! segments, and the ideals they generate.

use std::cmp::Ordering;

use serde::Serialize;

use super::ideal::SquarefreeMonomialIdeal;
use super::subset::{IndexSet, MAX_INDEX};
use crate::error::{Error, Result};

/// Colex comparison of two subsets of equal size.
///
/// Writing both as ascending tuples, `A < B` iff at the largest position where
/// they differ `A` has the smaller entry.
pub fn colex_compare(a: IndexSet, b: IndexSet) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::input(format!(
            "colex comparison needs equal sizes, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let at = a.to_vec();
    let bt = b.to_vec();
    for (x, y) in at.iter().rev().zip(bt.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

/// The first `k` subsets of size `d` in colex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColexSegment {
    d: usize,
    supports: Vec<IndexSet>,
}

impl ColexSegment {
    /// Fails only when the segment would need indices beyond 64.
    pub fn new(d: usize, k: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::input("colex segments need degree d >= 1"));
        }
        if d > MAX_INDEX {
            return Err(Error::resource(format!("degree {d} exceeds {MAX_INDEX}")));
        }
        let mut supports = Vec::with_capacity(k);
        if k > 0 {
            // For fixed popcount, increasing mask value is colex order.
            let mut mask: u64 = if d == 64 { u64::MAX } else { (1 << d) - 1 };
            supports.push(IndexSet::from_bits(mask));
            while supports.len() < k {
                mask = next_same_popcount(mask).ok_or_else(|| {
                    Error::resource(format!(
                        "colex segment of {k} {d}-subsets needs indices beyond {MAX_INDEX}"
                    ))
                })?;
                supports.push(IndexSet::from_bits(mask));
            }
        }
        Ok(ColexSegment { d, supports })
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }

    pub fn supports(&self) -> &[IndexSet] {
        &self.supports
    }

    /// Largest index used, 0 for the empty segment.
    pub fn max_index(&self) -> usize {
        self.supports.last().and_then(|s| s.largest()).unwrap_or(0)
    }

    /// The ideal generated by `x_{a_1} ... x_{a_d}` over the segment.
    pub fn ideal(&self) -> SquarefreeMonomialIdeal {
        SquarefreeMonomialIdeal::new(self.max_index(), self.supports.clone())
            .expect("distinct equal-size supports form an antichain")
    }
}

/// Gosper's hack: the next larger integer with the same popcount.
fn next_same_popcount(x: u64) -> Option<u64> {
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

pub fn colex_segment(d: usize, k: usize) -> Result<ColexSegment> {
    ColexSegment::new(d, k)
}

/// The degree-`d` colexsegment-generated ideal with `k` generators.
pub fn colex_ideal(d: usize, k: usize) -> Result<SquarefreeMonomialIdeal> {
    Ok(ColexSegment::new(d, k)?.ideal())
}
