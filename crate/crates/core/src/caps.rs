use serde::Serialize;

use crate::homology::DEFAULT_MAX_FACES;
use crate::model::enumerate::DEFAULT_MAX_CELLS;

/// Resource caps shared by every computation. All are plain limits; exceeding
/// one yields [`Error::Resource`](crate::Error::Resource) or
/// [`Error::Config`](crate::Error::Config), never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Nonempty faces per induced complex.
    pub max_faces: usize,
    /// Variables allowed when summing over every vertex subset.
    pub max_total_vars: usize,
    /// Y-vertices allowed when summing over every Y-part.
    pub max_zn_y: usize,
    /// Generators (inside the multidegree) for the lcm-lattice oracle.
    pub max_lcm_generators: usize,
    /// Candidate Y-vertices for the exhaustive minimum hitting-set search.
    pub max_hitting_candidates: usize,
    /// `n * m` for graph enumeration.
    pub max_enum_cells: usize,
    /// Largest side length accepted by the verification suites.
    pub max_suite_side: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_faces: DEFAULT_MAX_FACES,
            max_total_vars: 20,
            max_zn_y: 20,
            max_lcm_generators: 12,
            max_hitting_candidates: 20,
            max_enum_cells: DEFAULT_MAX_CELLS,
            max_suite_side: 4,
        }
    }
}
