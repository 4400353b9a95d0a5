//! Induced subcomplexes of Stanley–Reisner complexes and their reduced
//! homology over prime fields.

pub mod field;
pub mod matrix;
pub mod slice;

use std::collections::HashMap;

use serde::Serialize;

pub use field::PrimeField;
pub use matrix::{rank_mod_p, FieldMatrix};
pub use slice::{ComplexSlice, DEFAULT_MAX_FACES};

use crate::error::Result;
use crate::model::{IndexSet, SquarefreeMonomialIdeal};

/// The faces of `Δ(ideal)[w]`.
pub fn slice_of_ideal(
    ideal: &SquarefreeMonomialIdeal,
    w: IndexSet,
    max_faces: usize,
) -> Result<ComplexSlice> {
    ComplexSlice::of_ideal(ideal, w, max_faces)
}

/// Simplicial boundary `∂_d` from `d`-faces to `(d-1)`-faces.
///
/// Faces are oriented by ascending vertex order and omitting the vertex in
/// position `k` carries sign `(-1)^k`. `∂_0` is the augmentation onto the
/// one-dimensional space spanned by the empty face.
pub fn boundary_matrix(slice: &ComplexSlice, d: usize, field: PrimeField) -> FieldMatrix {
    let cols = slice.faces(d);
    if d == 0 {
        let mut m = FieldMatrix::zeros(1, cols.len(), field);
        for c in 0..cols.len() {
            m.set(0, c, 1);
        }
        return m;
    }
    let rows = slice.faces(d - 1);
    let row_index: HashMap<IndexSet, usize> =
        rows.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let mut m = FieldMatrix::zeros(rows.len(), cols.len(), field);
    for (c, face) in cols.iter().enumerate() {
        for (pos, v) in face.iter().enumerate() {
            let r = row_index[&face.without(v)];
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            m.set(r, c, field.from_i64(sign));
        }
    }
    m
}

/// Reduced Betti numbers `β̃_d` for `d = -1, 0, 1, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedBettiVector {
    /// `values[k]` is `β̃_{k-1}`.
    values: Vec<usize>,
}

impl ReducedBettiVector {
    pub fn from_values(from_minus_one: Vec<usize>) -> Self {
        let mut values = from_minus_one;
        while values.last() == Some(&0) {
            values.pop();
        }
        ReducedBettiVector { values }
    }

    /// `β̃_d`; zero outside the stored range.
    pub fn get(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.values.get((d + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `(d, β̃_d)` for every nonzero entry.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(k, &v)| (k as isize - 1, v))
    }

    /// `Σ_d (-1)^d β̃_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(d, v)| if d.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

/// Reduced homology ranks via `β̃_d = f_d − rank ∂_d − rank ∂_{d+1}`, with
/// the augmentation included so that `{∅}` has `β̃_{-1} = 1`.
pub fn reduced_betti(slice: &ComplexSlice, field: PrimeField) -> ReducedBettiVector {
    let top = slice.dimension();
    // ranks[d + 1] = rank ∂_d for d = -1..=top+1
    let mut ranks = vec![0usize; (top + 3) as usize];
    for d in 0..=top + 1 {
        ranks[(d + 1) as usize] = rank_mod_p(&boundary_matrix(slice, d as usize, field));
    }
    let values = (-1..=top)
        .map(|d| {
            let k = (d + 1) as usize;
            slice.face_count(d) - ranks[k] - ranks[k + 1]
        })
        .collect();
    ReducedBettiVector::from_values(values)
}
