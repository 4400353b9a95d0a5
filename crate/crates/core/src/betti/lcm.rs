//! Multigraded Betti numbers through the lcm lattice, independent of
//! Stanley–Reisner complexes.
//!
//! For a squarefree multidegree `W`, let `G_W` be the generators whose support
//! lies in `W`. The degree-`W` strand of the Taylor resolution, tensored with
//! the field, is the relative chain complex of the full simplex on `G_W`
//! modulo the subcomplex `Δ_W = { σ ⊆ G_W : lcm(σ) ≠ W }`. When `lcm(G_W) = W`
//! the simplex is a cone, so `β_{i,W}(I) = β̃_{i-1}(Δ_W)`; otherwise the strand
//! is zero.

use crate::error::{Error, Result};
use crate::homology::{reduced_betti, ComplexSlice, PrimeField};
use crate::model::{IndexSet, SquarefreeMonomialIdeal};

pub const DEFAULT_MAX_LCM_GENERATORS: usize = 12;

/// `β_{i,W}(I)` from the lcm lattice. `max_generators` bounds `|G_W|`.
pub fn betti_via_lcm_lattice(
    ideal: &SquarefreeMonomialIdeal,
    i: usize,
    w: IndexSet,
    field: PrimeField,
    max_generators: usize,
) -> Result<usize> {
    if !w.is_subset_of(ideal.vertex_set()) {
        return Err(Error::input(format!("multidegree {w} outside the ideal's variables")));
    }
    let gens: Vec<IndexSet> = ideal
        .generators()
        .iter()
        .copied()
        .filter(|g| g.is_subset_of(w))
        .collect();
    if gens.len() > max_generators {
        return Err(Error::resource(format!(
            "{} generators below {w} exceed the lcm-lattice cap of {max_generators}",
            gens.len()
        )));
    }
    if w.is_empty() || gens.iter().fold(IndexSet::EMPTY, |acc, g| acc.union(*g)) != w {
        return Ok(0);
    }
    let k = gens.len();
    let lcm_of = |sigma: u64| {
        (0..k)
            .filter(|b| sigma >> b & 1 == 1)
            .fold(IndexSet::EMPTY, |acc, b| acc.union(gens[b]))
    };
    let faces = (1..1u64 << k)
        .filter(|&sigma| lcm_of(sigma) != w)
        .map(IndexSet::from_bits);
    let below = ComplexSlice::from_faces(faces)?;
    Ok(reduced_betti(&below, field).get(i as isize - 1))
}
