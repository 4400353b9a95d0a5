//! Verification harnesses: the Ferrers lower bound, its equality
//! characterization, the colex lower bound, and the constructive witnesses.

pub mod bounds;
pub mod suite;
pub mod witness;

pub use bounds::{
    check_colex_bound, check_equality_characterization, check_lower_bound, BoundRecord, CheckOptions,
    EqualityCheck, Status, VerificationReport,
};
pub use suite::{run_check, run_suite, Counterexample, GraphOutcome, SuiteCheck, SuiteOptions, SuiteReport};
pub use witness::{
    default_x1, find_homology_witness, witness_coverage, witness_summary, TraceLevel, WitnessCase,
    WitnessResult, WitnessSummary,
};
