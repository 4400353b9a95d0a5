use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::homology::PrimeField;
use crate::model::{IndexSet, VertexSubset};

/// Nonzero multigraded Betti numbers `β_{i,W}` keyed by `(i, X', Y')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    field: PrimeField,
    n: usize,
    m: usize,
    entries: BTreeMap<(usize, VertexSubset), usize>,
}

#[derive(Serialize)]
struct EntryRow {
    i: usize,
    xpart: IndexSet,
    ypart: IndexSet,
    rank: usize,
}

#[derive(Serialize)]
struct ZnRow {
    i: usize,
    xpart: IndexSet,
    rank: usize,
}

#[derive(Serialize)]
struct TotalRow {
    i: usize,
    rank: usize,
}

#[derive(Serialize)]
struct TableDoc {
    field: PrimeField,
    n: usize,
    m: usize,
    multigraded: Vec<EntryRow>,
    zn: Vec<ZnRow>,
    total: Vec<TotalRow>,
}

impl BettiTable {
    pub fn new(field: PrimeField, n: usize, m: usize) -> Self {
        BettiTable { field, n, m, entries: BTreeMap::new() }
    }

    /// Records `β_{i,W} = rank`; zero ranks are not stored.
    pub fn insert(&mut self, i: usize, w: VertexSubset, rank: usize) {
        if rank == 0 {
            self.entries.remove(&(i, w));
        } else {
            self.entries.insert((i, w), rank);
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn get(&self, i: usize, w: &VertexSubset) -> usize {
        self.entries.get(&(i, *w)).copied().unwrap_or(0)
    }

    /// Nonzero entries sorted by `(i, X', Y')`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, VertexSubset, usize)> + '_ {
        self.entries.iter().map(|(&(i, w), &r)| (i, w, r))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_{i,X',•}`.
    pub fn zn(&self, i: usize, xs: IndexSet) -> usize {
        self.entries()
            .filter(|(k, w, _)| *k == i && w.xpart == xs)
            .map(|(_, _, r)| r)
            .sum()
    }

    /// Nonzero `Z^n`-graded values keyed by `(i, X')`.
    pub fn zn_view(&self) -> BTreeMap<(usize, IndexSet), usize> {
        let mut out = BTreeMap::new();
        for (i, w, r) in self.entries() {
            *out.entry((i, w.xpart)).or_insert(0) += r;
        }
        out
    }

    /// `[β_0, ..., β_pd]`.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, _, r) in self.entries() {
            if out.len() <= i {
                out.resize(i + 1, 0);
            }
            out[i] += r;
        }
        out
    }

    pub fn total(&self, i: usize) -> usize {
        self.totals().get(i).copied().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.totals().len().checked_sub(1)
    }

    /// `i,xpart,ypart,rank` rows, subsets `'+'`-joined and `'-'` when empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,xpart,ypart,rank\n");
        for (i, w, r) in self.entries() {
            writeln!(out, "{i},{},{},{r}", w.xpart.plus_joined(), w.ypart.plus_joined())
                .expect("writing to a String");
        }
        out
    }

    pub fn zn_csv(&self) -> String {
        let mut out = String::from("i,xpart,rank\n");
        for ((i, xs), r) in self.zn_view() {
            writeln!(out, "{i},{},{r}", xs.plus_joined()).expect("writing to a String");
        }
        out
    }

    pub fn total_csv(&self) -> String {
        let mut out = String::from("i,rank\n");
        for (i, r) in self.totals().into_iter().enumerate() {
            writeln!(out, "{i},{r}").expect("writing to a String");
        }
        out
    }

    /// Human-readable listing with `x`/`y` labels.
    pub fn to_text(&self) -> String {
        let mut out = format!("multigraded Betti numbers over {}\n", self.field);
        for (i, w, r) in self.entries() {
            let label = match (w.xpart.is_empty(), w.ypart.is_empty()) {
                (_, true) => w.xpart.prefixed_plus_joined("x"),
                (true, false) => w.ypart.prefixed_plus_joined("y"),
                (false, false) => format!(
                    "{}+{}",
                    w.xpart.prefixed_plus_joined("x"),
                    w.ypart.prefixed_plus_joined("y")
                ),
            };
            writeln!(out, "  beta[{i}, {label}] = {r}").expect("writing to a String");
        }
        let totals: Vec<String> = self.totals().iter().map(|t| t.to_string()).collect();
        writeln!(out, "total: ({})", totals.join(", ")).expect("writing to a String");
        out
    }

    /// One JSON document with the multigraded, `Z^n` and total views.
    pub fn to_json(&self) -> String {
        let doc = TableDoc {
            field: self.field,
            n: self.n,
            m: self.m,
            multigraded: self
                .entries()
                .map(|(i, w, rank)| EntryRow { i, xpart: w.xpart, ypart: w.ypart, rank })
                .collect(),
            zn: self
                .zn_view()
                .into_iter()
                .map(|((i, xpart), rank)| ZnRow { i, xpart, rank })
                .collect(),
            total: self
                .totals()
                .into_iter()
                .enumerate()
                .map(|(i, rank)| TotalRow { i, rank })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serializes")
    }
}
