//! Colexsegment ideals and the colex lower bound on total Betti numbers.
//!
//! cargo run --example colex_bound

use edge_betti::betti::{EdgeIdealBetti, HochsterEngine};
use edge_betti::homology::PrimeField;
use edge_betti::model::{colex_segment, BipartiteGraph};
use edge_betti::theorems::{check_colex_bound, CheckOptions};

fn main() -> edge_betti::Result<()> {
    for k in 1..=6 {
        let seg = colex_segment(2, k)?;
        let gens: Vec<String> = seg.supports().iter().map(|s| s.prefixed_plus_joined("x")).collect();
        let totals = HochsterEngine::new(seg.ideal(), PrimeField::GF2).totals()?;
        println!("k={k}: {:<40} totals {totals:?}", gens.join(" "));
    }

    let g = BipartiteGraph::from_lists(4, &[vec![1, 2], vec![3, 4]])?;
    let report = check_colex_bound(&g, PrimeField::GF2, &CheckOptions::default());
    println!();
    println!("two disjoint 2-stars: {:?}", EdgeIdealBetti::new(&g, PrimeField::GF2).totals()?);
    println!("colex bound: {:?}", report.status);
    for r in &report.strict {
        println!("  beta_{} = {} > {}", r.i, r.lhs, r.rhs);
    }
    Ok(())
}
