//! The `edge-betti` command line.
//!
//! Betti numbers follow the orientation `β_{i,W}(I) = β̃_{|W|-i-2}(Γ[W])`,
//! where `Γ` is the independence complex of the graph.
//!
//! Exit codes: 0 on success with every check holding, 1 when a check found a
//! violation (the certificate is printed), 2 on usage or parse errors, 3 when a
//! resource or configuration guard tripped.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::betti::{ferrers_betti_zn, EdgeIdealBetti, HochsterEngine};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::homology::{PrimeField, DEFAULT_MAX_FACES};
use crate::model::enumerate::DEFAULT_MAX_CELLS;
use crate::model::{colex_segment, enumerate_bipartite, BipartiteGraph, EnumerateOptions, IndexSet};
use crate::theorems::{
    check_colex_bound, check_equality_characterization, check_lower_bound, default_x1,
    find_homology_witness, run_suite, witness_coverage, witness_summary, BoundRecord, CheckOptions,
    Status, SuiteCheck, SuiteOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

/// Betti numbers of bipartite edge ideals and lower-bound checks.
///
/// Multigraded Betti numbers use β_{i,W}(I) = β̃_{|W|-i-2}(Γ[W]) with Γ the
/// independence complex. Tables default to CSV; reports default to text.
#[derive(Debug, Parser)]
#[command(name = "edge-betti", version)]
pub struct CommandSpec {
    #[command(subcommand)]
    pub command: Command,

    /// Output format [default: csv for tables, text for reports]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Coefficient field GF(P) [default: 2]
    #[arg(long, global = true, conflicts_with = "primes")]
    pub prime: Option<u64>,

    /// Comma-separated primes; results are reported per prime with an agreement flag
    #[arg(long, global = true, value_delimiter = ',')]
    pub primes: Vec<u64>,

    /// Maximum number of faces of one induced complex
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_FACES, value_parser = positive)]
    pub cap_faces: usize,

    /// Maximum n*m for graph enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CELLS, value_parser = positive)]
    pub cap_cells: usize,

    /// Maximum number of variables when summing over all multidegrees
    #[arg(long, global = true, default_value_t = 20, value_parser = positive)]
    pub cap_vars: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multigraded, Z^n-graded or total Betti table of a graph's edge ideal
    Betti {
        #[command(flatten)]
        input: InputArg,
        /// Total Betti numbers only
        #[arg(long, conflicts_with = "zn")]
        total: bool,
        /// Z^n-graded Betti numbers (summed over the Y-part)
        #[arg(long)]
        zn: bool,
    },
    /// Ferrers graph of a degree profile and its closed-form Z^n table
    Ferrers {
        #[command(flatten)]
        input: InputArg,
        /// Cross-check the closed form against Hochster's formula
        #[arg(long)]
        check: bool,
    },
    /// Colexsegment ideal and its total Betti numbers
    Colex {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        count: usize,
    },
    /// Check a lower bound on one graph (--input) or on all graphs of a shape (--n, --m)
    Verify {
        #[arg(long, value_enum)]
        check: CheckKind,
        #[arg(long, conflicts_with_all = ["n", "m"], required_unless_present_all = ["n", "m"])]
        input: Option<PathBuf>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        m: Option<usize>,
        #[command(flatten)]
        shape: ShapeArgs,
        /// Run the equality check on graphs with isolated X-vertices
        #[arg(long)]
        allow_isolated_x: bool,
        #[arg(long, hide = true, default_value_t = 0)]
        debug_closed_form_bias: u64,
    },
    /// Homology witnesses for the Ferrers lower bound
    Witness {
        #[command(flatten)]
        input: InputArg,
        /// X-vertex to build witnesses for [default: a minimum-degree vertex]
        #[arg(long)]
        x1: Option<usize>,
        /// Comma-separated Y1 inside N(x1)
        #[arg(long, value_delimiter = ',', conflicts_with = "t")]
        y1: Vec<usize>,
        /// Count witnesses over all Y1 of this size
        #[arg(long)]
        t: Option<usize>,
    },
    /// Stream all bipartite graphs with the given side sizes
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        shape: ShapeArgs,
    },
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Graph text file: "n m" then one "i j" line per edge
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct ShapeArgs {
    /// Skip graphs with an isolated X-vertex
    #[arg(long)]
    pub no_isolated_x: bool,
    /// One graph per isomorphism class (relabeling X and Y)
    #[arg(long)]
    pub dedupe: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Bound,
    Equality,
    Colex,
    Witness,
}

impl From<CheckKind> for SuiteCheck {
    fn from(c: CheckKind) -> Self {
        match c {
            CheckKind::Bound => SuiteCheck::Bound,
            CheckKind::Equality => SuiteCheck::Equality,
            CheckKind::Colex => SuiteCheck::Colex,
            CheckKind::Witness => SuiteCheck::Witness,
        }
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Reads a graph in graph text format.
pub fn parse_graph_file(path: &Path) -> Result<BipartiteGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    BipartiteGraph::from_text(&text)
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::WitnessCertification { .. } => EXIT_VIOLATION,
        Error::Input(_) | Error::Parse { .. } | Error::Io(_) => EXIT_USAGE,
        Error::Config(_) | Error::Resource(_) => EXIT_RESOURCE,
    }
}

/// Parses `args`, runs the command and returns the exit code. Data goes to
/// `out`; errors and timings go to `diag`.
pub fn run<I, T>(args: I, out: &mut dyn Write, diag: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CommandSpec::try_parse_from(args) {
        Ok(spec) => dispatch(&spec, out, diag),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { diag.write_all(rendered.as_bytes()) };
            code
        }
    }
}

/// Runs a parsed command.
pub fn dispatch(spec: &CommandSpec, out: &mut dyn Write, diag: &mut dyn Write) -> i32 {
    let started = Instant::now();
    let fields = match fields(spec) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(diag, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let ctx = Context { spec, fields, caps: caps(spec) };
    let result = ctx.execute();
    let code = match result {
        Ok(Outcome { text, violated }) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            if violated {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(diag, "error: {e}");
            exit_code(&e)
        }
    };
    let _ = writeln!(diag, "elapsed: {:.3}s", started.elapsed().as_secs_f64());
    code
}

fn fields(spec: &CommandSpec) -> Result<Vec<PrimeField>> {
    let primes = if !spec.primes.is_empty() {
        spec.primes.clone()
    } else {
        vec![spec.prime.unwrap_or(2)]
    };
    let mut out = Vec::new();
    for p in primes {
        let p = u32::try_from(p).map_err(|_| Error::Config(format!("{p} is too large for a prime field")))?;
        let f = PrimeField::new(p)?;
        if !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

fn caps(spec: &CommandSpec) -> Caps {
    Caps {
        max_faces: spec.cap_faces,
        max_total_vars: spec.cap_vars,
        max_enum_cells: spec.cap_cells,
        ..Caps::default()
    }
}

struct Outcome {
    text: String,
    violated: bool,
}

struct Context<'a> {
    spec: &'a CommandSpec,
    fields: Vec<PrimeField>,
    caps: Caps,
}

/// One prime's rendering plus the value compared across primes.
struct PerPrime<K> {
    field: PrimeField,
    key: K,
    csv: String,
    json: serde_json::Value,
    text: String,
    violated: bool,
}

impl Context<'_> {
    fn format(&self, default: Format) -> Format {
        self.spec.format.unwrap_or(default)
    }

    fn execute(&self) -> Result<Outcome> {
        match &self.spec.command {
            Command::Betti { input, total, zn } => self.betti(&input.input, *total, *zn),
            Command::Ferrers { input, check } => self.ferrers(&input.input, *check),
            Command::Colex { degree, count } => self.colex(*degree, *count),
            Command::Verify { check, input, n, m, shape, allow_isolated_x, debug_closed_form_bias } => {
                let options = CheckOptions {
                    caps: self.caps,
                    allow_isolated_x: *allow_isolated_x,
                    closed_form_bias: *debug_closed_form_bias,
                };
                match (input, n, m) {
                    (Some(path), _, _) => self.verify_one(*check, &parse_graph_file(path)?, &options),
                    (None, Some(n), Some(m)) => self.verify_suite(*check, *n, *m, shape, &options),
                    _ => Err(Error::Input("verify needs --input or both --n and --m".into())),
                }
            }
            Command::Witness { input, x1, y1, t } => self.witness(&parse_graph_file(&input.input)?, *x1, y1, *t),
            Command::Enumerate { n, m, shape } => self.enumerate(*n, *m, shape),
        }
    }

    /// Single prime: the plain rendering. Several primes: per-prime sections
    /// and an agreement flag over the compared keys.
    fn combine<K: PartialEq>(&self, default: Format, runs: Vec<PerPrime<K>>) -> Outcome {
        let violated = runs.iter().any(|r| r.violated);
        let format = self.format(default);
        if runs.len() == 1 {
            let r = runs.into_iter().next().expect("one run");
            let text = match format {
                Format::Csv => r.csv,
                Format::Json => pretty(&r.json),
                Format::Text => r.text,
            };
            return Outcome { text, violated };
        }
        let agree = runs.windows(2).all(|w| w[0].key == w[1].key);
        let text = match format {
            Format::Csv => {
                let mut s = String::new();
                for r in &runs {
                    let mut lines = r.csv.lines();
                    let header = lines.next().unwrap_or("");
                    if s.is_empty() {
                        let _ = writeln!(s, "p,{header}");
                    }
                    for l in lines {
                        let _ = writeln!(s, "{},{l}", r.field.modulus());
                    }
                }
                let _ = writeln!(s, "# agree={agree}");
                s
            }
            Format::Json => {
                let per: Vec<serde_json::Value> = runs
                    .iter()
                    .map(|r| json!({ "prime": r.field.modulus(), "result": r.json }))
                    .collect();
                pretty(&json!({ "per_prime": per, "agree": agree }))
            }
            Format::Text => {
                let mut s = String::new();
                for r in &runs {
                    let _ = writeln!(s, "== {} ==", r.field);
                    s.push_str(&r.text);
                }
                let _ = writeln!(s, "agree: {agree}");
                s
            }
        };
        Outcome { text, violated }
    }

    fn betti(&self, path: &Path, total: bool, zn: bool) -> Result<Outcome> {
        let g = parse_graph_file(path)?;
        let mut runs = Vec::new();
        for &field in &self.fields {
            let table = EdgeIdealBetti::with_caps(&g, field, self.caps).table()?;
            let json: serde_json::Value = serde_json::from_str(&table.to_json()).expect("table json");
            let (csv, json) = if total {
                (table.total_csv(), json["total"].clone())
            } else if zn {
                (table.zn_csv(), json["zn"].clone())
            } else {
                (table.to_csv(), json)
            };
            let text = if total {
                let t: Vec<String> = table.totals().iter().map(|v| v.to_string()).collect();
                format!("total Betti numbers over {field}: ({})\n", t.join(", "))
            } else if zn {
                let mut s = format!("Z^n-graded Betti numbers over {field}\n");
                for ((i, xs), r) in table.zn_view() {
                    let _ = writeln!(s, "  beta[{i}, {}] = {r}", xs.prefixed_plus_joined("x"));
                }
                s
            } else {
                table.to_text()
            };
            let key: Vec<_> = table.entries().collect();
            runs.push(PerPrime { field, key, csv, json, text, violated: false });
        }
        Ok(self.combine(Format::Csv, runs))
    }

    fn ferrers(&self, path: &Path, check: bool) -> Result<Outcome> {
        let g = parse_graph_file(path)?;
        let f = g.ferrers();
        let top = (f.n() + f.m()).saturating_sub(2);
        let mut closed = Vec::new();
        for xs in f.x_set().subsets_by_size().into_iter().filter(|s| !s.is_empty()) {
            for i in 0..=top {
                let v = ferrers_betti_zn(&f, i, xs)?;
                if v != 0 {
                    closed.push((i, xs, v));
                }
            }
        }
        closed.sort();

        let mut runs = Vec::new();
        let fields: Vec<PrimeField> = if check { self.fields.clone() } else { vec![self.fields[0]] };
        for field in fields {
            let mismatches: Vec<(usize, IndexSet, u64, u64)> = if check {
                let betti = EdgeIdealBetti::with_caps(&f, field, self.caps);
                let mut bad = Vec::new();
                for xs in f.x_set().subsets_by_size().into_iter().filter(|s| !s.is_empty()) {
                    let row = betti.zn_row(xs)?;
                    for i in 0..=top {
                        let h = row.get(i).copied().unwrap_or(0) as u64;
                        let c = ferrers_betti_zn(&f, i, xs)?;
                        if h != c {
                            bad.push((i, xs, c, h));
                        }
                    }
                }
                bad
            } else {
                Vec::new()
            };

            let mut csv = String::from("i,xpart,rank\n");
            for (i, xs, v) in &closed {
                let _ = writeln!(csv, "{i},{},{v}", xs.plus_joined());
            }
            let mut text = format!("Ferrers graph\n{}closed-form Z^n-graded Betti numbers\n", f.to_text());
            for (i, xs, v) in &closed {
                let _ = writeln!(text, "  beta[{i}, {}] = {v}", xs.prefixed_plus_joined("x"));
            }
            if check {
                let _ = writeln!(text, "check over {field}: {}", if mismatches.is_empty() { "MATCH" } else { "MISMATCH" });
                for (i, xs, c, h) in &mismatches {
                    let _ = writeln!(text, "  beta[{i}, {}]: closed form {c}, Hochster {h}", xs.prefixed_plus_joined("x"));
                }
            }
            let json = json!({
                "graph": f,
                "closed_form": closed.iter().map(|(i, xs, v)| json!({ "i": i, "xpart": xs, "rank": v })).collect::<Vec<_>>(),
                "check": if check {
                    json!({
                        "field": field,
                        "match": mismatches.is_empty(),
                        "mismatches": mismatches.iter().map(|(i, xs, c, h)| json!({ "i": i, "xpart": xs, "closed_form": c, "hochster": h })).collect::<Vec<_>>(),
                    })
                } else {
                    serde_json::Value::Null
                },
            });
            let violated = !mismatches.is_empty();
            runs.push(PerPrime { field, key: mismatches.is_empty(), csv, json, text, violated });
        }
        Ok(self.combine(Format::Csv, runs))
    }

    fn colex(&self, degree: usize, count: usize) -> Result<Outcome> {
        let segment = colex_segment(degree, count)?;
        let mut runs = Vec::new();
        for &field in &self.fields {
            let totals = HochsterEngine::with_caps(segment.ideal(), field, self.caps).totals()?;
            let mut csv = String::from("i,rank\n");
            for (i, r) in totals.iter().enumerate() {
                let _ = writeln!(csv, "{i},{r}");
            }
            let gens: Vec<String> = segment.supports().iter().map(|s| s.prefixed_plus_joined("x")).collect();
            let t: Vec<String> = totals.iter().map(|v| v.to_string()).collect();
            let text = format!(
                "colex segment of degree {degree}, {count} generators: {}\ntotal Betti numbers over {field}: ({})\n",
                gens.join(" "),
                t.join(", ")
            );
            let json = json!({
                "degree": degree,
                "count": count,
                "generators": segment.supports(),
                "field": field,
                "total": totals,
            });
            runs.push(PerPrime { field, key: totals, csv, json, text, violated: false });
        }
        Ok(self.combine(Format::Csv, runs))
    }

    fn verify_one(&self, check: CheckKind, g: &BipartiteGraph, options: &CheckOptions) -> Result<Outcome> {
        let mut runs = Vec::new();
        for &field in &self.fields {
            let run = match check {
                CheckKind::Bound | CheckKind::Colex => {
                    let report = if check == CheckKind::Bound {
                        check_lower_bound(g, field, options)
                    } else {
                        check_colex_bound(g, field, options)
                    };
                    let text = format!(
                        "{} over {field}: {}\n{}",
                        SuiteCheck::from(check),
                        status_name(report.status),
                        records_text(&report.violations, report.skip_reason.as_deref())
                    );
                    PerPrime {
                        field,
                        key: (report.status, report.violations.clone(), report.strict.clone()),
                        csv: records_csv(&report.violations),
                        json: serde_json::to_value(&report).expect("report json"),
                        text,
                        violated: report.status == Status::Violated,
                    }
                }
                CheckKind::Equality => {
                    let e = check_equality_characterization(g, field, options)?;
                    let status = if e.consistent() { Status::Holds } else { Status::Violated };
                    let text = format!(
                        "equality over {field}: {}\nequal everywhere: {}\nnearly row-nested: {}\n{}",
                        status_name(status),
                        e.equal_everywhere,
                        e.nearly_row_nested,
                        records_text(&e.differences, None)
                    );
                    let mut json = serde_json::to_value(&e).expect("equality json");
                    json["status"] = serde_json::to_value(status).expect("status json");
                    PerPrime {
                        field,
                        key: (status, e.differences.clone(), Vec::new()),
                        csv: records_csv(&e.differences),
                        json,
                        text,
                        violated: status == Status::Violated,
                    }
                }
                CheckKind::Witness => {
                    let s = witness_summary(g, field, &self.caps)?;
                    let status = if s.consistent() { Status::Holds } else { Status::Violated };
                    let mut csv = String::from("t,coverage,expected,betti\n");
                    let mut text = format!("witness over {field}: {}\nx1 = {}\n", status_name(status), s.x1);
                    for &(t, cov, exp, b) in &s.rows {
                        let _ = writeln!(csv, "{t},{cov},{exp},{b}");
                        let _ = writeln!(text, "  t={t} coverage={cov} expected={exp} betti={b}");
                    }
                    let mut json = serde_json::to_value(&s).expect("summary json");
                    json["status"] = serde_json::to_value(status).expect("status json");
                    let key = s.rows.iter().map(|&(t, c, e, b)| BoundRecord { i: t, xpart: None, lhs: c as u64, rhs: e.max(b as u64) }).collect();
                    PerPrime { field, key: (status, key, Vec::new()), csv, json, text, violated: status == Status::Violated }
                }
            };
            runs.push(run);
        }
        Ok(self.combine(Format::Text, runs))
    }

    fn verify_suite(&self, check: CheckKind, n: usize, m: usize, shape: &ShapeArgs, options: &CheckOptions) -> Result<Outcome> {
        let suite_options = SuiteOptions {
            enumerate: EnumerateOptions { no_isolated_x: shape.no_isolated_x, dedupe: shape.dedupe, max_cells: self.caps.max_enum_cells },
            check: *options,
        };
        let mut runs = Vec::new();
        for &field in &self.fields {
            let r = run_suite(n, m, check.into(), field, &suite_options)?;
            let mut text = format!(
                "{} on {n} x {m} over {field}: {}\ngraphs: {}  holds: {}  violated: {}  skipped: {}\n",
                r.check,
                if r.all_hold() { "HOLDS" } else { "VIOLATED" },
                r.graphs,
                r.holds,
                r.violated,
                r.skipped
            );
            for c in &r.counterexamples {
                let _ = writeln!(text, "counterexample #{}:\n{}", c.index, c.graph.trim_end());
                if let Some(msg) = &c.message {
                    let _ = writeln!(text, "  {msg}");
                }
                text.push_str(&records_text(&c.records, None));
            }
            let key = (r.holds, r.violated, r.skipped, r.counterexamples.iter().map(|c| (c.index, c.records.clone())).collect::<Vec<_>>());
            runs.push(PerPrime {
                field,
                key,
                csv: r.violations_csv(),
                json: serde_json::to_value(&r).expect("suite json"),
                text,
                violated: !r.all_hold(),
            });
        }
        Ok(self.combine(Format::Text, runs))
    }

    fn witness(&self, g: &BipartiteGraph, x1: Option<usize>, y1: &[usize], t: Option<usize>) -> Result<Outcome> {
        let x1 = match x1 {
            Some(x) => x,
            None => default_x1(g).ok_or_else(|| Error::Input("graph has no X-vertices".into()))?,
        };
        let mut runs = Vec::new();
        for &field in &self.fields {
            let run = if !y1.is_empty() {
                let y1 = IndexSet::from_indices(y1.iter().copied())?;
                let w = find_homology_witness(g, x1, y1, field, &self.caps)?;
                PerPrime {
                    field,
                    key: vec![(w.yprime, w.j)],
                    csv: format!("x1,y1,yprime,j,verified\n{},{},{},{},{}\n", w.x1, w.y1.plus_joined(), w.yprime.plus_joined(), w.j, w.verified),
                    json: serde_json::to_value(&w).expect("witness json"),
                    text: format!("{w}\n"),
                    violated: !w.verified,
                }
            } else if let Some(t) = t {
                let coverage = witness_coverage(g, x1, t, field, &self.caps)?;
                let expected = crate::betti::binomial(g.degree(x1) as u64, t as i64)?;
                PerPrime {
                    field,
                    key: vec![(IndexSet::EMPTY, coverage)],
                    csv: format!("x1,t,coverage,expected\n{x1},{t},{coverage},{expected}\n"),
                    json: json!({ "x1": x1, "t": t, "coverage": coverage, "expected": expected }),
                    text: format!("x1={x1} t={t} coverage={coverage} expected={expected}\n"),
                    violated: coverage as u64 != expected,
                }
            } else {
                let deg = g.degree(x1);
                if deg == 0 {
                    return Err(Error::Input(format!("x{x1} is isolated")));
                }
                let mut csv = String::from("x1,t,coverage,expected\n");
                let mut text = String::new();
                let mut rows = Vec::new();
                let mut violated = false;
                for t in 1..=deg {
                    let coverage = witness_coverage(g, x1, t, field, &self.caps)?;
                    let expected = crate::betti::binomial(deg as u64, t as i64)?;
                    violated |= coverage as u64 != expected;
                    let _ = writeln!(csv, "{x1},{t},{coverage},{expected}");
                    let _ = writeln!(text, "x1={x1} t={t} coverage={coverage} expected={expected}");
                    rows.push(json!({ "t": t, "coverage": coverage, "expected": expected }));
                }
                PerPrime {
                    field,
                    key: vec![(IndexSet::EMPTY, rows.len())],
                    csv,
                    json: json!({ "x1": x1, "rows": rows }),
                    text,
                    violated,
                }
            };
            runs.push(run);
        }
        Ok(self.combine(Format::Text, runs))
    }

    fn enumerate(&self, n: usize, m: usize, shape: &ShapeArgs) -> Result<Outcome> {
        let options = EnumerateOptions { no_isolated_x: shape.no_isolated_x, dedupe: shape.dedupe, max_cells: self.caps.max_enum_cells };
        let stream = enumerate_bipartite(n, m, options)?;
        let mut s = String::new();
        match self.format(Format::Text) {
            Format::Text => {
                for (k, g) in stream.enumerate() {
                    if k > 0 {
                        s.push('\n');
                    }
                    s.push_str(&g.to_text());
                }
            }
            Format::Csv => {
                s.push_str("index,i,j\n");
                for (k, g) in stream.enumerate() {
                    for (i, j) in g.edges() {
                        let _ = writeln!(s, "{k},{i},{j}");
                    }
                }
            }
            Format::Json => {
                for g in stream {
                    s.push_str(&serde_json::to_string(&g).expect("graph json"));
                    s.push('\n');
                }
            }
        }
        Ok(Outcome { text: s, violated: false })
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Holds => "HOLDS",
        Status::Violated => "VIOLATED",
        Status::Skipped => "SKIPPED",
    }
}

fn xpart_label(r: &BoundRecord) -> String {
    r.xpart.map_or_else(|| "*".to_string(), |x| x.plus_joined())
}

fn records_csv(records: &[BoundRecord]) -> String {
    let mut s = String::from("i,xpart,lhs,rhs\n");
    for r in records {
        let _ = writeln!(s, "{},{},{},{}", r.i, xpart_label(r), r.lhs, r.rhs);
    }
    s
}

fn records_text(records: &[BoundRecord], skip: Option<&str>) -> String {
    let mut s = String::new();
    if let Some(reason) = skip {
        let _ = writeln!(s, "skipped: {reason}");
    }
    for r in records {
        let label = r.xpart.map_or_else(|| "total".to_string(), |x| x.prefixed_plus_joined("x"));
        let _ = writeln!(s, "  i={} {label}: {} vs {}", r.i, r.lhs, r.rhs);
    }
    s
}
