//! Multigraded Betti numbers of edge ideals of bipartite graphs.
//!
//! Betti numbers are computed from Hochster's formula
//! `β_{i,W}(I) = β̃_{|W|-i-2}(Δ(I)[W])`, with the reduced homology of each
//! induced subcomplex taken over a prime field `GF(p)` by exact elimination.
//! On top of that sit harnesses comparing a graph's edge ideal with the
//! Ferrers ideal of the same X-degree profile and with the degree-2
//! colexsegment ideal of the same size, and a constructive finder for the
//! homology classes behind the Ferrers lower bound.
//!
//! Modules:
//!
//! - [`model`]: vertex subsets, bipartite graphs, squarefree ideals, colex
//!   segments, graph enumeration.
//! - [`homology`]: prime fields, boundary matrices, reduced Betti numbers.
//! - [`betti`]: the Hochster engine, tables, the Ferrers closed form and an
//!   independent lcm-lattice oracle.
//! - [`theorems`]: lower-bound checks, suites and witnesses.
//! - [`cli`]: the `edge-betti` command line.
//!
//! The `examples/` directory has one runnable program per capability:
//! `betti_table`, `ferrers_closed_form`, `colex_bound`, `verify_lower_bound`,
//! `equality_suite`, `homology_witness`, `enumerate_graphs`, `lcm_cross_check`
//! and `multi_prime`.
//!
//! ```
//! use edge_betti::betti::EdgeIdealBetti;
//! use edge_betti::homology::PrimeField;
//! use edge_betti::model::BipartiteGraph;
//!
//! let k22 = BipartiteGraph::complete(2, 2).unwrap();
//! let totals = EdgeIdealBetti::new(&k22, PrimeField::GF2).totals().unwrap();
//! assert_eq!(totals, vec![4, 4, 1]);
//! ```

pub mod betti;
pub mod caps;
pub mod cli;
pub mod error;
pub mod homology;
pub mod model;
pub mod theorems;

pub use caps::Caps;
pub use error::{Error, Result};
