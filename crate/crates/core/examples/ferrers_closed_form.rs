//! Ferrers graph of a degree profile, and its closed-form Z^n-graded Betti
//! numbers compared against Hochster's formula.
//!
//! cargo run --example ferrers_closed_form

use edge_betti::betti::{ferrers_betti_zn, EdgeIdealBetti};
use edge_betti::homology::PrimeField;
use edge_betti::model::BipartiteGraph;

fn main() -> edge_betti::Result<()> {
    // degrees 3, 1, 2 in some arbitrary arrangement
    let g = BipartiteGraph::from_lists(3, &[vec![1, 2, 3], vec![2], vec![1, 3]])?;
    let f = g.ferrers();
    println!("Ferrers graph of degree profile {:?}:", g.degrees());
    print!("{}", f.to_text());

    let betti = EdgeIdealBetti::new(&f, PrimeField::GF2);
    println!("i  X'        closed  hochster");
    for xs in f.x_set().subsets_by_size().into_iter().filter(|s| !s.is_empty()) {
        let row = betti.zn_row(xs)?;
        for (i, &h) in row.iter().enumerate() {
            let c = ferrers_betti_zn(&f, i, xs)?;
            if c != 0 || h != 0 {
                println!("{i}  {:<8}  {c:>6}  {h:>8}", xs.prefixed_plus_joined("x"));
                assert_eq!(c, h as u64);
            }
        }
    }
    Ok(())
}
