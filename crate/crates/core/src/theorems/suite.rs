use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::bounds::{check_colex_bound, check_equality_characterization, check_lower_bound, BoundRecord, CheckOptions, Status};
use super::witness::witness_summary;
use crate::error::{Error, Result};
use crate::homology::PrimeField;
use crate::model::{enumerate_bipartite, BipartiteGraph, EnumerateOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteCheck {
    /// Ferrers lower bound on every `Z^n`-graded Betti number.
    Bound,
    /// Equality everywhere ⇔ nearly row-nested.
    Equality,
    /// Total Betti numbers dominate those of the colex ideal.
    Colex,
    /// Witness finder coverage at the default `x1`.
    Witness,
}

impl FromStr for SuiteCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bound" => Ok(SuiteCheck::Bound),
            "equality" => Ok(SuiteCheck::Equality),
            "colex" => Ok(SuiteCheck::Colex),
            "witness" => Ok(SuiteCheck::Witness),
            other => Err(Error::input(format!("unknown check {other:?}"))),
        }
    }
}

impl fmt::Display for SuiteCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SuiteCheck::Bound => "bound",
            SuiteCheck::Equality => "equality",
            SuiteCheck::Colex => "colex",
            SuiteCheck::Witness => "witness",
        };
        f.write_str(name)
    }
}

/// Outcome of one check on one graph.
#[derive(Clone, Debug, Serialize)]
pub struct GraphOutcome {
    pub status: Status,
    pub records: Vec<BoundRecord>,
    pub message: Option<String>,
}

impl GraphOutcome {
    fn skipped(reason: impl Into<String>) -> Self {
        GraphOutcome { status: Status::Skipped, records: Vec::new(), message: Some(reason.into()) }
    }
}

/// Runs `check` on a single graph.
pub fn run_check(g: &BipartiteGraph, check: SuiteCheck, field: PrimeField, options: &CheckOptions) -> GraphOutcome {
    match check {
        SuiteCheck::Bound | SuiteCheck::Colex => {
            let report = if check == SuiteCheck::Bound {
                check_lower_bound(g, field, options)
            } else {
                check_colex_bound(g, field, options)
            };
            GraphOutcome { status: report.status, records: report.violations, message: report.skip_reason }
        }
        SuiteCheck::Equality => {
            if g.has_isolated_x() && !options.allow_isolated_x {
                return GraphOutcome::skipped("isolated X-vertex");
            }
            match check_equality_characterization(g, field, options) {
                Ok(e) if e.consistent() => GraphOutcome { status: Status::Holds, records: Vec::new(), message: None },
                Ok(e) => GraphOutcome {
                    status: Status::Violated,
                    message: Some(format!(
                        "equal everywhere = {}, nearly row-nested = {}",
                        e.equal_everywhere, e.nearly_row_nested
                    )),
                    records: e.differences,
                },
                Err(e) => GraphOutcome::skipped(e.to_string()),
            }
        }
        SuiteCheck::Witness => {
            if g.n() == 0 || g.has_isolated_x() {
                return GraphOutcome::skipped("needs X-vertices, none isolated");
            }
            match witness_summary(g, field, &options.caps) {
                Ok(s) if s.consistent() => GraphOutcome { status: Status::Holds, records: Vec::new(), message: None },
                Ok(s) => GraphOutcome {
                    status: Status::Violated,
                    records: Vec::new(),
                    message: Some(format!("x1 = {}, (t, coverage, expected, betti) = {:?}", s.x1, s.rows)),
                },
                Err(e @ Error::WitnessCertification { .. }) => GraphOutcome {
                    status: Status::Violated,
                    records: Vec::new(),
                    message: Some(e.to_string()),
                },
                Err(e) => GraphOutcome::skipped(e.to_string()),
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    /// Position in the enumeration stream.
    pub index: usize,
    /// The graph in graph text format.
    pub graph: String,
    pub records: Vec<BoundRecord>,
    pub message: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub n: usize,
    pub m: usize,
    pub check: SuiteCheck,
    pub field: PrimeField,
    pub graphs: usize,
    pub holds: usize,
    pub violated: usize,
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn all_hold(&self) -> bool {
        self.violated == 0
    }

    /// Violating `(i, X', lhs, rhs)` rows of every counterexample.
    pub fn violations_csv(&self) -> String {
        let mut out = String::from("index,i,xpart,lhs,rhs\n");
        for c in &self.counterexamples {
            for r in &c.records {
                let xs = r.xpart.map_or_else(|| "*".to_string(), |x| x.plus_joined());
                out.push_str(&format!("{},{},{},{},{}\n", c.index, r.i, xs, r.lhs, r.rhs));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    pub enumerate: EnumerateOptions,
    pub check: CheckOptions,
}

/// Streams every enumerated graph through `check` and tallies the results.
/// Graphs are checked in parallel; the report is assembled in stream order.
pub fn run_suite(n: usize, m: usize, check: SuiteCheck, field: PrimeField, options: &SuiteOptions) -> Result<SuiteReport> {
    let side = options.check.caps.max_suite_side;
    if n > side || m > side {
        return Err(Error::config(format!("suite sides {n} x {m} exceed the cap of {side}")));
    }
    let graphs: Vec<BipartiteGraph> = enumerate_bipartite(n, m, options.enumerate)?.collect();
    let outcomes: Vec<GraphOutcome> = graphs
        .par_iter()
        .map(|g| run_check(g, check, field, &options.check))
        .collect();

    let mut report = SuiteReport {
        n,
        m,
        check,
        field,
        graphs: graphs.len(),
        holds: 0,
        violated: 0,
        skipped: 0,
        counterexamples: Vec::new(),
    };
    for (index, (g, outcome)) in graphs.iter().zip(outcomes).enumerate() {
        match outcome.status {
            Status::Holds => report.holds += 1,
            Status::Skipped => report.skipped += 1,
            Status::Violated => {
                report.violated += 1;
                report.counterexamples.push(Counterexample {
                    index,
                    graph: g.to_text(),
                    records: outcome.records,
                    message: outcome.message,
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites() {
        let opts = SuiteOptions::default();
        let r = run_suite(2, 2, SuiteCheck::Bound, PrimeField::GF2, &opts).unwrap();
        assert_eq!((r.graphs, r.holds, r.violated), (16, 16, 0));

        let no_iso = SuiteOptions {
            enumerate: EnumerateOptions { no_isolated_x: true, ..Default::default() },
            ..Default::default()
        };
        let r = run_suite(2, 2, SuiteCheck::Equality, PrimeField::GF2, &no_iso).unwrap();
        assert_eq!((r.graphs, r.holds, r.violated), (9, 9, 0));

        let r = run_suite(1, 1, SuiteCheck::Colex, PrimeField::GF2, &opts).unwrap();
        assert_eq!((r.graphs, r.holds), (2, 2));
    }

    #[test]
    fn biased_suite_reports_counterexamples() {
        let opts = SuiteOptions {
            check: CheckOptions { closed_form_bias: 1, ..Default::default() },
            ..Default::default()
        };
        let r = run_suite(1, 1, SuiteCheck::Bound, PrimeField::GF2, &opts).unwrap();
        assert_eq!(r.violated, 1);
        assert_eq!(r.counterexamples[0].graph, "1 1\n1 1\n");
        assert_eq!(r.counterexamples[0].index, 1);
        assert!(r.violations_csv().starts_with("index,i,xpart,lhs,rhs\n1,0,1,1,2\n"));
    }

    #[test]
    fn guard() {
        assert!(matches!(
            run_suite(5, 1, SuiteCheck::Bound, PrimeField::GF2, &SuiteOptions::default()),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn check_names_round_trip() {
        for c in [SuiteCheck::Bound, SuiteCheck::Equality, SuiteCheck::Colex, SuiteCheck::Witness] {
            assert_eq!(c.to_string().parse::<SuiteCheck>().unwrap(), c);
        }
        assert!("nope".parse::<SuiteCheck>().is_err());
    }
}
