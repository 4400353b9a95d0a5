//! Bipartite graphs on `X ⊔ Y`, stored as one neighborhood set per X-vertex.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::subset::{IndexSet, VertexSubset, MAX_INDEX};
use crate::error::{Error, Result};

/// A bipartite graph with X-vertices `x_1..x_n` and Y-vertices `y_1..y_m`.
///
/// `nbrs[i - 1]` is `N(x_i)`, a subset of `{1..m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BipartiteGraph {
    n: usize,
    m: usize,
    nbrs: Vec<IndexSet>,
}

/// Result of [`BipartiteGraph::induced_subgraph`]: the relabeled subgraph and
/// the map back to the original vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: BipartiteGraph,
    /// `x_labels[k - 1]` is the original index of the new `x_k`.
    pub x_labels: Vec<usize>,
    /// `y_labels[k - 1]` is the original index of the new `y_k`.
    pub y_labels: Vec<usize>,
}

impl BipartiteGraph {
    pub fn new(n: usize, m: usize, nbrs: Vec<IndexSet>) -> Result<Self> {
        if nbrs.len() != n {
            return Err(Error::input(format!(
                "expected {n} neighborhoods, got {}",
                nbrs.len()
            )));
        }
        if n + m > MAX_INDEX {
            return Err(Error::input(format!("graphs limited to {MAX_INDEX} vertices in total")));
        }
        for (i, nb) in nbrs.iter().enumerate() {
            if nb.largest().is_some_and(|j| j > m) {
                return Err(Error::input(format!("N(x{}) = {nb} exceeds m = {m}", i + 1)));
            }
        }
        Ok(BipartiteGraph { n, m, nbrs })
    }

    /// Builds a graph from 1-indexed neighbor lists, e.g. `[[1], [1, 2]]`.
    pub fn from_lists<L: AsRef<[usize]>>(m: usize, lists: &[L]) -> Result<Self> {
        let nbrs = lists
            .iter()
            .map(|l| IndexSet::from_indices(l.as_ref().iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lists.len(), m, nbrs)
    }

    /// Graph on `n` X-vertices and the smallest `m` covering every listed neighbor.
    pub fn from_lists_tight<L: AsRef<[usize]>>(lists: &[L]) -> Result<Self> {
        let m = lists
            .iter()
            .flat_map(|l| l.as_ref().iter().copied())
            .max()
            .unwrap_or(0);
        Self::from_lists(m, lists)
    }

    pub fn from_edges(n: usize, m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut nbrs = vec![IndexSet::EMPTY; n];
        for &(i, j) in edges {
            if i == 0 || i > n || j == 0 || j > m {
                return Err(Error::input(format!("edge ({i}, {j}) outside {n}x{m}")));
            }
            nbrs[i - 1] = nbrs[i - 1].with(j);
        }
        Self::new(n, m, nbrs)
    }

    /// `K_{n,m}`.
    pub fn complete(n: usize, m: usize) -> Result<Self> {
        Self::new(n, m, vec![IndexSet::prefix(m)?; n])
    }

    pub fn empty(n: usize, m: usize) -> Result<Self> {
        Self::new(n, m, vec![IndexSet::EMPTY; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn x_set(&self) -> IndexSet {
        IndexSet::prefix(self.n).expect("n bounded at construction")
    }

    pub fn y_set(&self) -> IndexSet {
        IndexSet::prefix(self.m).expect("m bounded at construction")
    }

    pub fn neighborhoods(&self) -> &[IndexSet] {
        &self.nbrs
    }

    /// `N(x_i)`, 1-indexed. Panics if `i` is out of range.
    pub fn neighbors(&self, i: usize) -> IndexSet {
        self.nbrs[i - 1]
    }

    /// `N(y_j)` as a subset of `{1..n}`.
    pub fn y_neighbors(&self, j: usize) -> IndexSet {
        let mut out = IndexSet::EMPTY;
        for (i, nb) in self.nbrs.iter().enumerate() {
            if nb.contains(j) {
                out = out.with(i + 1);
            }
        }
        out
    }

    pub fn degree(&self, i: usize) -> usize {
        self.nbrs[i - 1].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nbrs.iter().map(|nb| nb.len()).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(|nb| nb.len()).sum()
    }

    /// Edges `(i, j)` sorted by `(i, j)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.nbrs
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| nb.iter().map(move |j| (i + 1, j)))
            .collect()
    }

    pub fn has_isolated_x(&self) -> bool {
        self.nbrs.iter().any(|nb| nb.is_empty())
    }

    /// Induced subgraph on `W`, relabeled to consecutive indices on each side.
    pub fn induced_subgraph(&self, w: &VertexSubset) -> Result<InducedSubgraph> {
        w.check_bounds(self.n, self.m)?;
        let x_labels = w.xpart.to_vec();
        let y_labels = w.ypart.to_vec();
        let nbrs = x_labels
            .iter()
            .map(|&i| {
                let kept = self.nbrs[i - 1].intersection(w.ypart);
                IndexSet::from_indices(
                    y_labels
                        .iter()
                        .enumerate()
                        .filter(|(_, &j)| kept.contains(j))
                        .map(|(k, _)| k + 1),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(InducedSubgraph {
            graph: BipartiteGraph::new(x_labels.len(), y_labels.len(), nbrs)?,
            x_labels,
            y_labels,
        })
    }

    /// Minimum degree over the X-vertices in `xs`.
    pub fn mindeg(&self, xs: IndexSet) -> Result<usize> {
        if xs.is_empty() {
            return Err(Error::input("mindeg of an empty vertex set"));
        }
        if xs.largest().is_some_and(|i| i > self.n) {
            return Err(Error::input(format!("{xs} exceeds n = {}", self.n)));
        }
        Ok(xs.iter().map(|i| self.degree(i)).min().unwrap_or(0))
    }

    /// The Ferrers (left-justified) graph with the same X-degree sequence:
    /// `x_i` is joined to `y_1..y_{deg x_i}`.
    pub fn ferrers(&self) -> BipartiteGraph {
        let nbrs = self
            .nbrs
            .iter()
            .map(|nb| IndexSet::prefix(nb.len()).expect("degree bounded by m"))
            .collect();
        BipartiteGraph { n: self.n, m: self.m, nbrs }
    }

    pub fn is_ferrers(&self) -> bool {
        self.nbrs.iter().all(|nb| *nb == IndexSet::prefix(nb.len()).expect("bounded"))
    }

    /// Nearly row-nested: a neighborhood of strictly smaller degree is contained
    /// in every neighborhood of larger degree, and for each occurring degree
    /// `c` the common intersection of the degree-`c` neighborhoods has at least
    /// `c - 1` elements.
    pub fn is_nearly_row_nested(&self) -> bool {
        for a in &self.nbrs {
            for b in &self.nbrs {
                if a.len() < b.len() && !a.is_proper_subset_of(*b) {
                    return false;
                }
            }
        }
        let mut degrees = self.degrees();
        degrees.sort_unstable();
        degrees.dedup();
        degrees.into_iter().all(|c| {
            let common = self
                .nbrs
                .iter()
                .filter(|nb| nb.len() == c)
                .fold(self.y_set(), |acc, nb| acc.intersection(*nb));
            common.len() + 1 >= c
        })
    }

    /// Applies vertex relabelings: new `x_k` is old `x_{x_perm[k-1]}`, and old
    /// `y_j` becomes new `y_{y_perm[j-1]}`.
    pub fn permuted(&self, x_perm: &[usize], y_perm: &[usize]) -> Result<BipartiteGraph> {
        if !is_permutation(x_perm, self.n) || !is_permutation(y_perm, self.m) {
            return Err(Error::input("not a permutation of the vertex side"));
        }
        let nbrs = x_perm
            .iter()
            .map(|&i| IndexSet::from_indices(self.nbrs[i - 1].iter().map(|j| y_perm[j - 1])))
            .collect::<Result<Vec<_>>>()?;
        BipartiteGraph::new(self.n, self.m, nbrs)
    }

    /// Adds an isolated Y-vertex `y_{m+1}`.
    pub fn with_isolated_y(&self) -> Result<BipartiteGraph> {
        BipartiteGraph::new(self.n, self.m + 1, self.nbrs.clone())
    }

    /// Graph text format: `"n m"` then one `"i j"` line per edge sorted by `(i, j)`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (i, j) in self.edges() {
            writeln!(out, "{i} {j}").expect("writing to a String");
        }
        out
    }

    /// Parses the graph text format. Blank lines and `#` comments are skipped;
    /// duplicate edges are rejected.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(header, hline, "header")?;
        if n.saturating_add(m) > MAX_INDEX {
            return Err(Error::Parse {
                line: hline,
                message: format!("graphs limited to {MAX_INDEX} vertices in total"),
            });
        }

        let mut nbrs = vec![IndexSet::EMPTY; n];
        for (lineno, line) in lines {
            let (i, j) = parse_pair(line, lineno, "edge")?;
            if i == 0 || i > n || j == 0 || j > m {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("edge ({i}, {j}) out of range for {n} x {m}"),
                });
            }
            if nbrs[i - 1].contains(j) {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("duplicate edge ({i}, {j})"),
                });
            }
            nbrs[i - 1] = nbrs[i - 1].with(j);
        }
        Ok(BipartiteGraph { n, m, nbrs })
    }
}

fn parse_pair(line: &str, lineno: usize, what: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse {
        line: lineno,
        message: format!("malformed {what} line {line:?}, expected two non-negative integers"),
    };
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let b = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

fn is_permutation(p: &[usize], k: usize) -> bool {
    let mut seen = vec![false; k];
    p.len() == k
        && p.iter().all(|&v| {
            (1..=k).contains(&v) && !std::mem::replace(&mut seen[v - 1], true)
        })
}

impl FromStr for BipartiteGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_text(s)
    }
}
