//! Characteristic dependence: the same complex over several prime fields.
//!
//! The minimal triangulation of the real projective plane has homology that
//! depends on the characteristic; edge ideals of small bipartite graphs do not.
//!
//! cargo run --example multi_prime

use edge_betti::betti::EdgeIdealBetti;
use edge_betti::homology::{reduced_betti, ComplexSlice, PrimeField};
use edge_betti::model::{BipartiteGraph, IndexSet};

fn main() -> edge_betti::Result<()> {
    let facets: Vec<IndexSet> = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
    ]
    .iter()
    .map(|f| IndexSet::from_indices(f.iter().copied()))
    .collect::<edge_betti::Result<_>>()?;
    let rp2 = ComplexSlice::from_facets(&facets, IndexSet::EMPTY);

    let g = BipartiteGraph::from_lists(3, &[vec![1, 2], vec![2, 3], vec![1, 3]])?;
    for p in [2, 3, 5, 32749] {
        let field = PrimeField::new(p)?;
        let h = reduced_betti(&rp2, field);
        let totals = EdgeIdealBetti::new(&g, field).totals()?;
        println!(
            "{:<10} RP^2: b~1 = {}, b~2 = {}   6-cycle edge ideal: {totals:?}",
            field.to_string(),
            h.get(1),
            h.get(2)
        );
    }
    Ok(())
}
