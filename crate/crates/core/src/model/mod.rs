//! Graphs, subsets, ideals, Ferrers graphs, colex segments and enumeration.

pub mod colex;
pub mod enumerate;
pub mod graph;
pub mod ideal;
pub mod subset;

pub use colex::{colex_compare, colex_ideal, colex_segment, ColexSegment};
pub use enumerate::{enumerate_bipartite, EnumerateOptions, GraphStream};
pub use graph::{BipartiteGraph, InducedSubgraph};
pub use ideal::SquarefreeMonomialIdeal;
pub use subset::{IndexSet, VertexSubset};

/// Edge ideal of `g`, with X-vertices at flat indices `1..n` and Y-vertices at `n+1..n+m`.
pub fn edge_ideal_of(g: &BipartiteGraph) -> SquarefreeMonomialIdeal {
    SquarefreeMonomialIdeal::edge_ideal(g)
}

/// The Ferrers graph sharing the X-degree sequence of `g`.
pub fn ferrers_of(g: &BipartiteGraph) -> BipartiteGraph {
    g.ferrers()
}
