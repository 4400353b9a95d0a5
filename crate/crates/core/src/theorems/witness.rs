//! Constructive homology witnesses behind the Ferrers lower bound.
//!
//! Given `x1` whose neighborhood properly contains no other neighborhood and a
//! nonempty `Y1 ⊆ N(x1)`, the finder produces `Y' ⊆ Y` and `j ≥ 0` with
//! `Y' ∩ N(x1) = Y1`, `|Y'| = |Y1| + j` and `β̃_j(Γ[X ∪ Y']) ≥ 1`, where `Γ` is
//! the independence complex of the graph.
//!
//! The construction recurses on the size of a minimum set of Y-vertices
//! outside the current `N(x1)` that meets every neighborhood different from
//! `N(x1)`. With hitting set `{v_1, ..., v_r}`, the recursion runs on the
//! induced subgraph on `(X − N(v_r)) ∪ Y1 ∪ {v_1, ..., v_{r-1}}` and returns
//! extra vertices `S`; then either `β̃_{|S|}(Γ[X ∪ Y1 ∪ S]) ≠ 0` (case 1) or
//! `v_r` is added and the class moves up one dimension (case 2). Each level is
//! certified by a direct homology computation.

use std::fmt;

use serde::Serialize;

use crate::betti::{binomial, EdgeIdealBetti, HochsterEngine};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::homology::PrimeField;
use crate::model::{edge_ideal_of, BipartiteGraph, IndexSet, VertexSubset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessCase {
    /// Every remaining neighborhood equals the current `N(x1)`.
    Base,
    /// The recursive class survives in the larger complex.
    SameDimension,
    /// The class dies and `v_r` pushes it up one dimension.
    RaisedDimension,
}

/// One level of the recursion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceLevel {
    pub depth: usize,
    /// X-vertices of the current induced subgraph.
    pub xs: IndexSet,
    /// Y-vertices of the current induced subgraph.
    pub ys: IndexSet,
    /// `X_1`: X-vertices whose current neighborhood equals that of `x1`.
    pub x1_class: IndexSet,
    /// Minimum hitting set, ascending; its last element plays the role of `v_r`.
    pub hitting_set: Vec<usize>,
    pub case: WitnessCase,
    pub yprime: IndexSet,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessResult {
    pub x1: usize,
    pub y1: IndexSet,
    pub yprime: IndexSet,
    pub j: usize,
    /// Outermost level last.
    pub trace: Vec<TraceLevel>,
    pub verified: bool,
}

impl fmt::Display for WitnessResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y'={} j={} verified={}", self.yprime, self.j, self.verified)
    }
}

fn render_trace(trace: &[TraceLevel]) -> String {
    trace
        .iter()
        .map(|t| {
            format!(
                "  depth {}: X={} Y={} X1={} hitting={:?} case={:?} Y'={} j={}",
                t.depth, t.xs, t.ys, t.x1_class, t.hitting_set, t.case, t.yprime, t.j
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// The harness's default choice of `x1`: minimum degree, lowest index on ties.
pub fn default_x1(g: &BipartiteGraph) -> Option<usize> {
    (1..=g.n()).min_by_key(|&i| (g.degree(i), i))
}

struct Finder<'a> {
    graph: &'a BipartiteGraph,
    engine: HochsterEngine,
    x1: usize,
    y1: IndexSet,
    caps: Caps,
}

impl Finder<'_> {
    /// `β̃_j(Γ[xs ∪ ys])` on the whole graph's independence complex.
    fn homology(&self, xs: IndexSet, ys: IndexSet, j: usize) -> Result<usize> {
        let w = VertexSubset::new(xs, ys).flatten(self.graph.n())?;
        Ok(self.engine.reduced_betti(w)?.get(j as isize))
    }

    fn minimum_hitting_set(&self, candidates: IndexSet, targets: &[IndexSet]) -> Result<Option<IndexSet>> {
        if candidates.len() > self.caps.max_hitting_candidates {
            return Err(Error::resource(format!(
                "hitting-set search over {} candidates exceeds the cap of {}",
                candidates.len(),
                self.caps.max_hitting_candidates
            )));
        }
        for size in 0..=candidates.len() {
            for h in candidates.subsets_of_size(size) {
                if targets.iter().all(|t| !t.intersection(h).is_empty()) {
                    return Ok(Some(h));
                }
            }
        }
        Ok(None)
    }

    fn certification_error(&self, message: String, trace: &[TraceLevel]) -> Error {
        Error::WitnessCertification { message, trace: render_trace(trace) }
    }

    fn solve(&self, xs: IndexSet, ys: IndexSet, depth: usize, trace: &mut Vec<TraceLevel>) -> Result<(IndexSet, usize)> {
        let nb = |x: usize| self.graph.neighbors(x).intersection(ys);
        let n1 = nb(self.x1);
        let x1_class = IndexSet::from_indices(xs.iter().filter(|&x| nb(x) == n1))?;
        let rest = xs.difference(x1_class);

        let (yprime, j, case, hitting) = if rest.is_empty() {
            (self.y1, 0, WitnessCase::Base, IndexSet::EMPTY)
        } else {
            let targets: Vec<IndexSet> = rest.iter().map(|x| nb(x).difference(n1)).collect();
            let hitting = self
                .minimum_hitting_set(ys.difference(n1), &targets)?
                .ok_or_else(|| {
                    self.certification_error(
                        format!("no hitting set at depth {depth}: some neighborhood is contained in N(x1)"),
                        trace,
                    )
                })?;
            let v_last = hitting.largest().expect("rest is nonempty so the hitting set is too");
            let blocked = self.graph.y_neighbors(v_last).intersection(xs);
            let sub_ys = self.y1.union(hitting.without(v_last));
            let (sub_yprime, sub_j) = self.solve(xs.difference(blocked), sub_ys, depth + 1, trace)?;
            let extra = sub_yprime.difference(self.y1);
            if extra.len() != sub_j {
                return Err(self.certification_error(
                    format!("inner witness at depth {} has |S| = {} but j = {sub_j}", depth + 1, extra.len()),
                    trace,
                ));
            }
            let same = self.y1.union(extra);
            if self.homology(xs, same, sub_j)? != 0 {
                (same, sub_j, WitnessCase::SameDimension, hitting)
            } else {
                (same.with(v_last), sub_j + 1, WitnessCase::RaisedDimension, hitting)
            }
        };

        trace.push(TraceLevel {
            depth,
            xs,
            ys,
            x1_class,
            hitting_set: hitting.to_vec(),
            case,
            yprime,
            j,
        });
        if self.homology(xs, yprime, j)? == 0 {
            return Err(self.certification_error(
                format!("reduced homology of Γ[X ∪ {yprime}] vanishes in dimension {j} at depth {depth}"),
                trace,
            ));
        }
        Ok((yprime, j))
    }
}

fn check_preconditions(g: &BipartiteGraph, x1: usize, y1: IndexSet) -> Result<()> {
    if x1 == 0 || x1 > g.n() {
        return Err(Error::input(format!("x1 = {x1} is not an X-vertex (n = {})", g.n())));
    }
    if let Some(i) = (1..=g.n()).find(|&i| g.degree(i) == 0) {
        return Err(Error::input(format!("x{i} is isolated")));
    }
    let n1 = g.neighbors(x1);
    if let Some(i) = (1..=g.n()).find(|&i| g.neighbors(i).is_proper_subset_of(n1)) {
        return Err(Error::input(format!(
            "N(x{x1}) = {n1} properly contains N(x{i}) = {}",
            g.neighbors(i)
        )));
    }
    if y1.is_empty() {
        return Err(Error::input("Y1 must be nonempty"));
    }
    if !y1.is_subset_of(n1) {
        return Err(Error::input(format!("Y1 = {y1} is not contained in N(x{x1}) = {n1}")));
    }
    Ok(())
}

pub fn find_homology_witness(
    g: &BipartiteGraph,
    x1: usize,
    y1: IndexSet,
    field: PrimeField,
    caps: &Caps,
) -> Result<WitnessResult> {
    check_preconditions(g, x1, y1)?;
    let finder = Finder {
        graph: g,
        engine: HochsterEngine::with_caps(edge_ideal_of(g), field, *caps),
        x1,
        y1,
        caps: *caps,
    };
    witness_with(&finder)
}

fn witness_with(finder: &Finder<'_>) -> Result<WitnessResult> {
    let mut trace = Vec::new();
    let (yprime, j) = finder.solve(finder.graph.x_set(), finder.graph.y_set(), 0, &mut trace)?;
    let n1 = finder.graph.neighbors(finder.x1);
    let verified = yprime.intersection(n1) == finder.y1
        && yprime.len() == finder.y1.len() + j
        && finder.homology(finder.graph.x_set(), yprime, j)? >= 1;
    if !verified {
        return Err(finder.certification_error(
            format!("returned Y' = {yprime}, j = {j} fails the witness contract"),
            &trace,
        ));
    }
    Ok(WitnessResult { x1: finder.x1, y1: finder.y1, yprime, j, trace, verified })
}

/// Runs the finder for every `Y1 ⊆ N(x1)` with `|Y1| = t` and returns the
/// number of certified witnesses. Distinct `Y1` give witnesses with distinct
/// `Y' ∩ N(x1)`, so the count is a lower bound for `β_{t+n-2, X, •}(I)`.
pub fn witness_coverage(
    g: &BipartiteGraph,
    x1: usize,
    t: usize,
    field: PrimeField,
    caps: &Caps,
) -> Result<usize> {
    if x1 == 0 || x1 > g.n() {
        return Err(Error::input(format!("x1 = {x1} is not an X-vertex")));
    }
    let n1 = g.neighbors(x1);
    if t == 0 || t > n1.len() {
        return Err(Error::input(format!("t = {t} outside 1..={}", n1.len())));
    }
    let engine = HochsterEngine::with_caps(edge_ideal_of(g), field, *caps);
    let mut finder = Finder { graph: g, engine, x1, y1: IndexSet::EMPTY, caps: *caps };
    let mut count = 0;
    for y1 in n1.subsets_of_size(t) {
        check_preconditions(g, x1, y1)?;
        finder.y1 = y1;
        if witness_with(&finder)?.verified {
            count += 1;
        }
    }
    Ok(count)
}

/// Summary of all witness checks on one graph with the default `x1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSummary {
    pub x1: usize,
    /// `(t, coverage, C(deg x1, t), β_{t+n-2,X,•}(I))` for `t = 1..=deg x1`.
    pub rows: Vec<(usize, usize, u64, usize)>,
}

impl WitnessSummary {
    pub fn consistent(&self) -> bool {
        self.rows
            .iter()
            .all(|&(_, cov, expected, betti)| cov as u64 == expected && betti >= cov)
    }
}

/// Coverage and bound consistency for every `t` at the default `x1`.
pub fn witness_summary(g: &BipartiteGraph, field: PrimeField, caps: &Caps) -> Result<WitnessSummary> {
    let x1 = default_x1(g).ok_or_else(|| Error::input("graph has no X-vertices"))?;
    let betti = EdgeIdealBetti::with_caps(g, field, *caps);
    let row = betti.zn_row(g.x_set())?;
    let deg = g.degree(x1);
    let mut rows = Vec::new();
    for t in 1..=deg {
        let coverage = witness_coverage(g, x1, t, field, caps)?;
        let i = t + g.n() - 2;
        rows.push((t, coverage, binomial(deg as u64, t as i64)?, row.get(i).copied().unwrap_or(0)));
    }
    Ok(WitnessSummary { x1, rows })
}
