//! Equality with the Ferrers ideal everywhere exactly for nearly row-nested graphs.
//!
//! cargo run --release --example equality_suite

use edge_betti::homology::PrimeField;
use edge_betti::model::{enumerate_bipartite, EnumerateOptions};
use edge_betti::theorems::{check_equality_characterization, CheckOptions};

fn main() -> edge_betti::Result<()> {
    let options = EnumerateOptions { no_isolated_x: true, dedupe: true, ..Default::default() };
    let (mut nested, mut other) = (0, 0);
    for g in enumerate_bipartite(3, 3, options)? {
        let e = check_equality_characterization(&g, PrimeField::GF2, &CheckOptions::default())?;
        assert!(e.consistent(), "inconsistent on\n{}", g.to_text());
        if e.nearly_row_nested {
            nested += 1;
        } else {
            other += 1;
            let lists: Vec<Vec<usize>> = g.neighborhoods().iter().map(|s| s.to_vec()).collect();
            println!("not nearly row-nested: {lists:?}, {} differing entries", e.differences.len());
        }
    }
    println!("isomorphism classes: {nested} nearly row-nested, {other} not");
    Ok(())
}
