//! Exhaustive enumeration of small bipartite graphs, labeled and up to isomorphism.
//!
//! cargo run --example enumerate_graphs

use edge_betti::model::{enumerate_bipartite, EnumerateOptions};

fn main() -> edge_betti::Result<()> {
    for (n, m) in [(2, 2), (2, 3), (3, 3)] {
        let all = enumerate_bipartite(n, m, EnumerateOptions::default())?.count();
        let no_iso = EnumerateOptions { no_isolated_x: true, ..Default::default() };
        let covered = enumerate_bipartite(n, m, no_iso)?.count();
        let classes = enumerate_bipartite(n, m, EnumerateOptions { dedupe: true, ..Default::default() })?.count();
        println!("{n} x {m}: {all} labeled, {covered} without isolated x, {classes} up to relabeling");
    }

    println!();
    let dedupe = EnumerateOptions { dedupe: true, ..Default::default() };
    for g in enumerate_bipartite(2, 2, dedupe)? {
        println!("{}", g.to_text());
    }
    Ok(())
}
