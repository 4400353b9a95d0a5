//! Hochster's formula against the lcm-lattice computation on a few ideals.
//!
//! cargo run --example lcm_cross_check

use edge_betti::betti::{betti_via_lcm_lattice, HochsterEngine};
use edge_betti::homology::PrimeField;
use edge_betti::model::{colex_ideal, edge_ideal_of, BipartiteGraph, IndexSet, SquarefreeMonomialIdeal};

fn compare(name: &str, ideal: SquarefreeMonomialIdeal) -> edge_betti::Result<()> {
    let engine = HochsterEngine::new(ideal.clone(), PrimeField::GF2);
    let mut lcm_totals: Vec<usize> = Vec::new();
    for bits in 0..1u64 << ideal.nvars() {
        let w = IndexSet::from_bits(bits);
        for i in 0..ideal.nvars() {
            let a = engine.multigraded(i, w)?;
            let b = betti_via_lcm_lattice(&ideal, i, w, PrimeField::GF2, 12)?;
            assert_eq!(a, b, "{name}: beta_{i},{w}");
            if b != 0 {
                if lcm_totals.len() <= i {
                    lcm_totals.resize(i + 1, 0);
                }
                lcm_totals[i] += b;
            }
        }
    }
    println!("{name:<24} hochster {:?}  lcm lattice {lcm_totals:?}", engine.totals()?);
    Ok(())
}

fn main() -> edge_betti::Result<()> {
    compare("K_{2,2}", edge_ideal_of(&BipartiteGraph::complete(2, 2)?))?;
    compare("P4", edge_ideal_of(&BipartiteGraph::from_lists(2, &[vec![1], vec![1, 2]])?))?;
    compare("two 2-stars", edge_ideal_of(&BipartiteGraph::from_lists(4, &[vec![1, 2], vec![3, 4]])?))?;
    compare("colex(2, 4)", colex_ideal(2, 4)?)?;
    compare("colex(3, 4)", colex_ideal(3, 4)?)?;
    Ok(())
}
