use std::collections::HashMap;
use std::sync::Mutex;

use super::table::BettiTable;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::homology::{reduced_betti, slice_of_ideal, PrimeField, ReducedBettiVector};
use crate::model::{edge_ideal_of, BipartiteGraph, IndexSet, SquarefreeMonomialIdeal, VertexSubset};

/// Multigraded Betti numbers of a squarefree monomial ideal by Hochster's
/// formula, `β_{i,W}(I) = β̃_{|W|-i-2}(Δ(I)[W])`.
///
/// Reduced homology of each induced complex is cached by vertex set. The
/// cache may be filled from several threads; a racing recomputation stores an
/// identical value.
pub struct HochsterEngine {
    ideal: SquarefreeMonomialIdeal,
    field: PrimeField,
    caps: Caps,
    cache: Mutex<HashMap<IndexSet, ReducedBettiVector>>,
}

impl HochsterEngine {
    pub fn new(ideal: SquarefreeMonomialIdeal, field: PrimeField) -> Self {
        Self::with_caps(ideal, field, Caps::default())
    }

    pub fn with_caps(ideal: SquarefreeMonomialIdeal, field: PrimeField, caps: Caps) -> Self {
        HochsterEngine { ideal, field, caps, cache: Mutex::new(HashMap::new()) }
    }

    pub fn ideal(&self) -> &SquarefreeMonomialIdeal {
        &self.ideal
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    /// `β̃_*(Δ(I)[W])`.
    pub fn reduced_betti(&self, w: IndexSet) -> Result<ReducedBettiVector> {
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(&w) {
            return Ok(hit.clone());
        }
        let slice = slice_of_ideal(&self.ideal, w, self.caps.max_faces)?;
        let betti = reduced_betti(&slice, self.field);
        self.cache
            .lock()
            .expect("cache poisoned")
            .entry(w)
            .or_insert_with(|| betti.clone());
        Ok(betti)
    }

    /// `β_{i,W}(I)` for a flat vertex set `W`.
    pub fn multigraded(&self, i: usize, w: IndexSet) -> Result<usize> {
        if !w.is_subset_of(self.ideal.vertex_set()) {
            return Err(Error::input(format!(
                "multidegree {w} outside the {} variables",
                self.ideal.nvars()
            )));
        }
        let dim = w.len() as isize - i as isize - 2;
        if dim < -1 {
            return Ok(0);
        }
        Ok(self.reduced_betti(w)?.get(dim))
    }

    fn check_total_cap(&self) -> Result<()> {
        if self.ideal.nvars() > self.caps.max_total_vars {
            return Err(Error::resource(format!(
                "summing over all subsets of {} variables exceeds the cap of {}",
                self.ideal.nvars(),
                self.caps.max_total_vars
            )));
        }
        Ok(())
    }

    /// Every nonzero `(i, W, β_{i,W})`, `W` in increasing mask order.
    pub fn nonzero_entries(&self) -> Result<Vec<(usize, IndexSet, usize)>> {
        self.check_total_cap()?;
        let mut out = Vec::new();
        for bits in 0..1u64 << self.ideal.nvars() {
            let w = IndexSet::from_bits(bits);
            for (d, rank) in self.reduced_betti(w)?.nonzero() {
                // the empty set contributes β̃_{-1} = 1 at i = -1, i.e. to S/I only
                let i = w.len() as isize - 2 - d;
                if i >= 0 {
                    out.push((i as usize, w, rank));
                }
            }
        }
        Ok(out)
    }

    /// `β_j(I) = Σ_W β_{j,W}(I)`.
    pub fn total(&self, j: usize) -> Result<usize> {
        Ok(self.totals()?.get(j).copied().unwrap_or(0))
    }

    /// `[β_0, β_1, ..., β_pd]`; empty for the zero ideal.
    pub fn totals(&self) -> Result<Vec<usize>> {
        let mut totals: Vec<usize> = Vec::new();
        for (i, _, rank) in self.nonzero_entries()? {
            if totals.len() <= i {
                totals.resize(i + 1, 0);
            }
            totals[i] += rank;
        }
        Ok(totals)
    }

    /// Largest `j` with `β_j ≠ 0`; `None` for the zero ideal.
    pub fn projective_dimension(&self) -> Result<Option<usize>> {
        Ok(self.totals()?.len().checked_sub(1))
    }

    /// Full multigraded table; vertices `1..=n_x` are reported as the X-part
    /// and the rest as the Y-part.
    pub fn table(&self, n_x: usize) -> Result<BettiTable> {
        let n_x = n_x.min(self.ideal.nvars());
        let mut table = BettiTable::new(self.field, n_x, self.ideal.nvars() - n_x);
        for (i, w, rank) in self.nonzero_entries()? {
            table.insert(i, VertexSubset::split(w, n_x), rank);
        }
        Ok(table)
    }
}

/// Betti numbers of the edge ideal of a bipartite graph, with the
/// `Z^n`-grading that records only the X-part of a multidegree.
pub struct EdgeIdealBetti {
    graph: BipartiteGraph,
    engine: HochsterEngine,
}

impl EdgeIdealBetti {
    pub fn new(graph: &BipartiteGraph, field: PrimeField) -> Self {
        Self::with_caps(graph, field, Caps::default())
    }

    pub fn with_caps(graph: &BipartiteGraph, field: PrimeField, caps: Caps) -> Self {
        EdgeIdealBetti {
            graph: graph.clone(),
            engine: HochsterEngine::with_caps(edge_ideal_of(graph), field, caps),
        }
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn engine(&self) -> &HochsterEngine {
        &self.engine
    }

    pub fn multigraded(&self, i: usize, w: &VertexSubset) -> Result<usize> {
        w.check_bounds(self.graph.n(), self.graph.m())?;
        self.engine.multigraded(i, w.flatten(self.graph.n())?)
    }

    fn check_zn(&self, xs: IndexSet) -> Result<()> {
        let (n, m) = (self.graph.n(), self.graph.m());
        if xs.largest().is_some_and(|k| k > n) {
            return Err(Error::input(format!("{xs} exceeds n = {n}")));
        }
        if m > self.engine.caps.max_zn_y {
            return Err(Error::resource(format!(
                "summing over 2^{m} Y-parts exceeds the cap of {} Y-vertices",
                self.engine.caps.max_zn_y
            )));
        }
        Ok(())
    }

    /// `β_{i,X',•}(I) = Σ_{Y' ⊆ Y} β_{i,X' ⊔ Y'}(I)`.
    ///
    /// Y-parts are visited by size, then lexicographically.
    pub fn zn(&self, i: usize, xs: IndexSet) -> Result<usize> {
        self.check_zn(xs)?;
        let mut sum = 0;
        for ys in self.graph.y_set().subsets_by_size() {
            sum += self.multigraded(i, &VertexSubset::new(xs, ys))?;
        }
        Ok(sum)
    }

    /// `[β_{0,X',•}, β_{1,X',•}, ..., β_{n+m-2,X',•}]` in one pass over the Y-parts.
    pub fn zn_row(&self, xs: IndexSet) -> Result<Vec<usize>> {
        self.check_zn(xs)?;
        let n = self.graph.n();
        let mut row = vec![0usize; (n + self.graph.m()).saturating_sub(1)];
        for ys in self.graph.y_set().subsets_by_size() {
            let w = VertexSubset::new(xs, ys).flatten(n)?;
            for (d, rank) in self.engine.reduced_betti(w)?.nonzero() {
                let i = w.len() as isize - 2 - d;
                if i >= 0 {
                    row[i as usize] += rank;
                }
            }
        }
        Ok(row)
    }

    /// Every nonzero `(i, X', β_{i,X',•})` with `X'` nonempty, sorted.
    pub fn zn_entries(&self) -> Result<Vec<(usize, IndexSet, usize)>> {
        let n = self.graph.n();
        let top = (n + self.graph.m()).saturating_sub(2);
        let mut out = Vec::new();
        for xs in self.graph.x_set().subsets_by_size().into_iter().filter(|s| !s.is_empty()) {
            for i in 0..=top {
                let v = self.zn(i, xs)?;
                if v != 0 {
                    out.push((i, xs, v));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn totals(&self) -> Result<Vec<usize>> {
        self.engine.totals()
    }

    pub fn table(&self) -> Result<BettiTable> {
        self.engine.table(self.graph.n())
    }
}

/// `β_{i,W}(I)` for a flat multidegree `W`.
pub fn betti_multigraded(
    ideal: &SquarefreeMonomialIdeal,
    i: usize,
    w: IndexSet,
    field: PrimeField,
) -> Result<usize> {
    HochsterEngine::new(ideal.clone(), field).multigraded(i, w)
}

/// `β_{i,X',•}` of the edge ideal of `g`.
pub fn betti_zn(g: &BipartiteGraph, i: usize, xs: IndexSet, field: PrimeField) -> Result<usize> {
    EdgeIdealBetti::new(g, field).zn(i, xs)
}

/// Total Betti number `β_j(I)`.
pub fn betti_total(ideal: &SquarefreeMonomialIdeal, j: usize, field: PrimeField) -> Result<usize> {
    HochsterEngine::new(ideal.clone(), field).total(j)
}

/// Largest `j` with `β_j(I) ≠ 0`, or `None` for the zero ideal.
pub fn projective_dimension(ideal: &SquarefreeMonomialIdeal, field: PrimeField) -> Result<Option<usize>> {
    HochsterEngine::new(ideal.clone(), field).projective_dimension()
}
