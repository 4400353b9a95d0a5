//! The Ferrers lower bound, on one graph and exhaustively over all 3 x 3 graphs.
//!
//! cargo run --release --example verify_lower_bound

use edge_betti::homology::PrimeField;
use edge_betti::model::BipartiteGraph;
use edge_betti::theorems::{check_lower_bound, run_suite, CheckOptions, SuiteCheck, SuiteOptions};

fn main() -> edge_betti::Result<()> {
    let g = BipartiteGraph::from_lists(4, &[vec![1, 2], vec![3, 4]])?;
    let report = check_lower_bound(&g, PrimeField::GF2, &CheckOptions::default());
    println!("{:?}, {} strict comparisons", report.status, report.strict.len());
    for r in &report.strict {
        let xs = r.xpart.map(|x| x.prefixed_plus_joined("x")).unwrap_or_default();
        println!("  i={} {xs}: {} > {}", r.i, r.lhs, r.rhs);
    }

    let suite = run_suite(3, 3, SuiteCheck::Bound, PrimeField::GF2, &SuiteOptions::default())?;
    println!(
        "all 3 x 3 graphs: {} checked, {} hold, {} violated",
        suite.graphs, suite.holds, suite.violated
    );
    Ok(())
}
