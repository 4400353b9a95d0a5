//! Constructive homology witnesses: for each Y1 inside N(x1) a set Y' and a
//! nonzero class in the independence complex on X ∪ Y'.
//!
//! cargo run --example homology_witness

use edge_betti::homology::PrimeField;
use edge_betti::model::BipartiteGraph;
use edge_betti::theorems::{find_homology_witness, witness_summary};
use edge_betti::Caps;

fn main() -> edge_betti::Result<()> {
    let g = BipartiteGraph::from_lists(4, &[vec![1, 2], vec![3, 4]])?;
    let caps = Caps::default();
    for y1 in g.neighbors(1).subsets_by_size().into_iter().filter(|s| !s.is_empty()) {
        let w = find_homology_witness(&g, 1, y1, PrimeField::GF2, &caps)?;
        println!("Y1={y1}: {w}");
        for level in w.trace.iter().rev() {
            println!("    depth {} {:?} Y'={} j={}", level.depth, level.case, level.yprime, level.j);
        }
    }

    let g = BipartiteGraph::from_lists(3, &[vec![1, 2], vec![2, 3], vec![1, 2, 3]])?;
    let summary = witness_summary(&g, PrimeField::GF2, &caps)?;
    println!("x1 = {}", summary.x1);
    for (t, coverage, expected, betti) in summary.rows {
        println!("  t={t}: {coverage} witnesses, C(deg, t) = {expected}, Betti number {betti}");
    }
    Ok(())
}
