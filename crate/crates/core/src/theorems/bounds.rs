use std::time::{Duration, Instant};

use serde::Serialize;

use crate::betti::{ferrers_betti_zn, EdgeIdealBetti, HochsterEngine};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::homology::PrimeField;
use crate::model::{colex_ideal, BipartiteGraph, IndexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Holds,
    Violated,
    Skipped,
}

/// One compared pair. `xpart` is `None` for comparisons of total Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub i: usize,
    pub xpart: Option<IndexSet>,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub graph: BipartiteGraph,
    pub status: Status,
    /// Pairs with `lhs < rhs`; nonempty exactly when the status is `VIOLATED`.
    pub violations: Vec<BoundRecord>,
    /// Pairs with `lhs > rhs`.
    pub strict: Vec<BoundRecord>,
    pub field: PrimeField,
    pub skip_reason: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn from_records(
        graph: &BipartiteGraph,
        field: PrimeField,
        records: Vec<BoundRecord>,
        started: Instant,
    ) -> Self {
        let (violations, rest): (Vec<_>, Vec<_>) = records.into_iter().partition(|r| r.lhs < r.rhs);
        let strict = rest.into_iter().filter(|r| r.lhs > r.rhs).collect();
        VerificationReport {
            graph: graph.clone(),
            status: if violations.is_empty() { Status::Holds } else { Status::Violated },
            violations,
            strict,
            field,
            skip_reason: None,
            elapsed: started.elapsed(),
        }
    }

    fn skipped(graph: &BipartiteGraph, field: PrimeField, reason: String, started: Instant) -> Self {
        VerificationReport {
            graph: graph.clone(),
            status: Status::Skipped,
            violations: Vec::new(),
            strict: Vec::new(),
            field,
            skip_reason: Some(reason),
            elapsed: started.elapsed(),
        }
    }

    /// True when every compared pair was equal.
    pub fn is_tight(&self) -> bool {
        self.status == Status::Holds && self.strict.is_empty()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub caps: Caps,
    /// Run the equality check even when some X-vertex is isolated.
    pub allow_isolated_x: bool,
    /// Added to every nonzero closed-form value. Only for exercising the
    /// violation path in tests; a nonzero bias makes the bound false.
    #[doc(hidden)]
    pub closed_form_bias: u64,
}

fn biased(value: u64, options: &CheckOptions) -> u64 {
    if value == 0 {
        value
    } else {
        value + options.closed_form_bias
    }
}

/// Every `(i, X')` comparison of `β_{i,X',•}(I)` with the Ferrers closed form.
fn ferrers_records(
    g: &BipartiteGraph,
    field: PrimeField,
    options: &CheckOptions,
) -> Result<Vec<BoundRecord>> {
    let betti = EdgeIdealBetti::with_caps(g, field, options.caps);
    let top = (g.n() + g.m()).saturating_sub(2);
    let mut records = Vec::new();
    for xs in g.x_set().subsets_by_size().into_iter().filter(|s| !s.is_empty()) {
        let row = betti.zn_row(xs)?;
        for i in 0..=top {
            let lhs = row.get(i).copied().unwrap_or(0) as u64;
            let rhs = biased(ferrers_betti_zn(g, i, xs)?, options);
            records.push(BoundRecord { i, xpart: Some(xs), lhs, rhs });
        }
    }
    Ok(records)
}

/// Compares `β_{i,X',•}` of the edge ideal of `g` with that of its Ferrers
/// ideal, for every nonempty `X'` and every `i` in `0..=n+m-2`.
pub fn check_lower_bound(g: &BipartiteGraph, field: PrimeField, options: &CheckOptions) -> VerificationReport {
    let started = Instant::now();
    match ferrers_records(g, field, options) {
        Ok(records) => VerificationReport::from_records(g, field, records, started),
        Err(e) => VerificationReport::skipped(g, field, e.to_string(), started),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityCheck {
    /// `β_{i,X',•}(I) = β_{i,X',•}(J)` at every compared `(i, X')`.
    pub equal_everywhere: bool,
    pub nearly_row_nested: bool,
    /// Pairs where the two sides differ.
    pub differences: Vec<BoundRecord>,
}

impl EqualityCheck {
    /// Whether equality everywhere coincides with nearly-row-nestedness.
    pub fn consistent(&self) -> bool {
        self.equal_everywhere == self.nearly_row_nested
    }
}

/// Tests "equality everywhere ⇔ nearly row-nested" on one graph.
pub fn check_equality_characterization(
    g: &BipartiteGraph,
    field: PrimeField,
    options: &CheckOptions,
) -> Result<EqualityCheck> {
    if g.has_isolated_x() && !options.allow_isolated_x {
        return Err(Error::input(
            "graph has an isolated X-vertex; enable allow_isolated_x to check it anyway",
        ));
    }
    let differences: Vec<BoundRecord> = ferrers_records(g, field, options)?
        .into_iter()
        .filter(|r| r.lhs != r.rhs)
        .collect();
    Ok(EqualityCheck {
        equal_everywhere: differences.is_empty(),
        nearly_row_nested: g.is_nearly_row_nested(),
        differences,
    })
}

/// Compares total Betti numbers of the edge ideal of `g` with those of the
/// degree-2 colexsegment ideal having the same number of generators.
pub fn check_colex_bound(g: &BipartiteGraph, field: PrimeField, options: &CheckOptions) -> VerificationReport {
    let started = Instant::now();
    let run = || -> Result<Vec<BoundRecord>> {
        let ours = EdgeIdealBetti::with_caps(g, field, options.caps).totals()?;
        let colex = HochsterEngine::with_caps(colex_ideal(2, g.edge_count())?, field, options.caps)
            .totals()?;
        let len = ours.len().max(colex.len());
        Ok((0..len)
            .map(|j| BoundRecord {
                i: j,
                xpart: None,
                lhs: ours.get(j).copied().unwrap_or(0) as u64,
                rhs: biased(colex.get(j).copied().unwrap_or(0) as u64, options),
            })
            .collect())
    };
    match run() {
        Ok(records) => VerificationReport::from_records(g, field, records, started),
        Err(e) => VerificationReport::skipped(g, field, e.to_string(), started),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::from_indices(v.iter().copied()).unwrap()
    }

    fn p4() -> BipartiteGraph {
        BipartiteGraph::from_lists(2, &[vec![1], vec![1, 2]]).unwrap()
    }

    fn split() -> BipartiteGraph {
        BipartiteGraph::from_lists(4, &[vec![1, 2], vec![3, 4]]).unwrap()
    }

    #[test]
    fn lower_bound_examples() {
        let opts = CheckOptions::default();
        let r = check_lower_bound(&p4(), PrimeField::GF2, &opts);
        assert_eq!(r.status, Status::Holds);
        assert!(r.is_tight());

        let r = check_lower_bound(&split(), PrimeField::GF2, &opts);
        assert_eq!(r.status, Status::Holds);
        assert!(r.strict.contains(&BoundRecord { i: 1, xpart: Some(set(&[1, 2])), lhs: 4, rhs: 2 }));

        let r = check_lower_bound(&BipartiteGraph::complete(2, 2).unwrap(), PrimeField::GF2, &opts);
        assert!(r.is_tight());
    }

    #[test]
    fn biased_closed_form_is_violated() {
        let opts = CheckOptions { closed_form_bias: 1, ..Default::default() };
        let r = check_lower_bound(&p4(), PrimeField::GF2, &opts);
        assert_eq!(r.status, Status::Violated);
        assert!(r.violations.iter().all(|v| v.lhs < v.rhs));
    }

    #[test]
    fn caps_skip() {
        let opts = CheckOptions { caps: Caps { max_zn_y: 1, ..Default::default() }, ..Default::default() };
        let r = check_lower_bound(&p4(), PrimeField::GF2, &opts);
        assert_eq!(r.status, Status::Skipped);
        assert!(r.skip_reason.is_some());
    }

    #[test]
    fn equality_examples() {
        let opts = CheckOptions::default();
        let e = check_equality_characterization(&p4(), PrimeField::GF2, &opts).unwrap();
        assert!(e.equal_everywhere && e.nearly_row_nested && e.consistent());

        let e = check_equality_characterization(&split(), PrimeField::GF2, &opts).unwrap();
        assert!(!e.equal_everywhere && !e.nearly_row_nested && e.consistent());

        let two = BipartiteGraph::from_lists(2, &[vec![1], vec![2]]).unwrap();
        let e = check_equality_characterization(&two, PrimeField::GF2, &opts).unwrap();
        assert!(e.equal_everywhere && e.nearly_row_nested);

        let iso = BipartiteGraph::from_lists(1, &[vec![1], vec![]]).unwrap();
        assert!(check_equality_characterization(&iso, PrimeField::GF2, &opts).is_err());
        let allow = CheckOptions { allow_isolated_x: true, ..Default::default() };
        assert!(check_equality_characterization(&iso, PrimeField::GF2, &allow).is_ok());
    }

    #[test]
    fn colex_examples() {
        let opts = CheckOptions::default();
        let r = check_colex_bound(&p4(), PrimeField::GF2, &opts);
        assert_eq!(r.status, Status::Holds);
        assert!(r.is_tight());

        let r = check_colex_bound(&split(), PrimeField::GF2, &opts);
        assert_eq!(r.status, Status::Holds);
        let pairs: Vec<(u64, u64)> = r.strict.iter().map(|s| (s.lhs, s.rhs)).collect();
        assert_eq!(pairs, vec![(6, 4), (4, 1), (1, 0)]);

        let r = check_colex_bound(&BipartiteGraph::complete(1, 1).unwrap(), PrimeField::GF2, &opts);
        assert!(r.is_tight());
    }
}
