//! Betti numbers of squarefree monomial ideals: Hochster's formula, the
//! `Z^n`-graded and total views, the Ferrers closed form, and an lcm-lattice
//! cross-check.

pub mod engine;
pub mod ferrers;
pub mod lcm;
pub mod table;

pub use engine::{
    betti_multigraded, betti_total, betti_zn, projective_dimension, EdgeIdealBetti, HochsterEngine,
};
pub use ferrers::{binomial, ferrers_betti_zn};
pub use lcm::betti_via_lcm_lattice;
pub use table::BettiTable;
