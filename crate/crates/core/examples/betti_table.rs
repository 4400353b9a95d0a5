//! Multigraded, Z^n-graded and total Betti numbers of the edge ideal of a path.
//!
//! cargo run --example betti_table

use edge_betti::betti::EdgeIdealBetti;
use edge_betti::homology::PrimeField;
use edge_betti::model::BipartiteGraph;

fn main() -> edge_betti::Result<()> {
    // x1 - y1 - x2 - y2
    let p4 = BipartiteGraph::from_lists(2, &[vec![1], vec![1, 2]])?;
    let table = EdgeIdealBetti::new(&p4, PrimeField::GF2).table()?;

    print!("{}", table.to_text());
    println!();
    print!("{}", table.to_csv());
    println!();
    print!("{}", table.zn_csv());
    println!();
    print!("{}", table.total_csv());
    Ok(())
}
