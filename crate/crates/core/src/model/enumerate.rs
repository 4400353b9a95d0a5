//! Exhaustive enumeration of small bipartite graphs.

use super::graph::BipartiteGraph;
use super::subset::IndexSet;
use crate::error::{Error, Result};

/// Default cap on `n * m`, i.e. on the number of potential edges.
pub const DEFAULT_MAX_CELLS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Skip graphs with an X-vertex of degree 0.
    pub no_isolated_x: bool,
    /// Emit one representative per orbit under relabeling of X and of Y.
    pub dedupe: bool,
    pub max_cells: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { no_isolated_x: false, dedupe: false, max_cells: DEFAULT_MAX_CELLS }
    }
}

/// Deterministic stream over all `2^(n m)` graphs on `n + m` labeled vertices.
///
/// Graph number `c` has row `i` equal to bits `m (n - i) .. m (n - i + 1)` of
/// `c`, so the stream is lexicographic in the tuple of row masks. Callers can
/// shard the stream by index.
pub fn enumerate_bipartite(n: usize, m: usize, options: EnumerateOptions) -> Result<GraphStream> {
    let cells = n.saturating_mul(m);
    if cells > options.max_cells || cells >= 64 {
        return Err(Error::config(format!(
            "enumeration of {n} x {m} graphs exceeds the cap of {} cells",
            options.max_cells.min(63)
        )));
    }
    let y_perms = if options.dedupe { permutations(m) } else { Vec::new() };
    Ok(GraphStream { n, m, next: 0, end: 1u64 << cells, options, y_perms })
}

pub struct GraphStream {
    n: usize,
    m: usize,
    next: u64,
    end: u64,
    options: EnumerateOptions,
    y_perms: Vec<Vec<usize>>,
}

impl GraphStream {
    fn rows(&self, code: u64) -> Vec<u64> {
        let row_mask = (1u64 << self.m) - 1;
        (0..self.n)
            .map(|i| code >> (self.m * (self.n - 1 - i)) & row_mask)
            .collect()
    }
}

impl Iterator for GraphStream {
    type Item = BipartiteGraph;

    fn next(&mut self) -> Option<BipartiteGraph> {
        while self.next < self.end {
            let code = self.next;
            self.next += 1;
            let rows = self.rows(code);
            if self.options.no_isolated_x && rows.contains(&0) {
                continue;
            }
            if self.options.dedupe && canonical_rows(&rows, &self.y_perms) != rows {
                continue;
            }
            let nbrs = rows.into_iter().map(IndexSet::from_bits).collect();
            return Some(BipartiteGraph::new(self.n, self.m, nbrs).expect("rows fit in m bits"));
        }
        None
    }
}

/// Lexicographically least row tuple over all relabelings of X and Y.
///
/// Minimizing over X-permutations is the same as sorting the rows, so only
/// the `m!` Y-permutations are searched explicitly.
pub fn canonical_rows(rows: &[u64], y_perms: &[Vec<usize>]) -> Vec<u64> {
    y_perms
        .iter()
        .map(|perm| {
            let mut permuted: Vec<u64> = rows.iter().map(|&r| permute_bits(r, perm)).collect();
            permuted.sort_unstable();
            permuted
        })
        .min()
        .unwrap_or_else(|| rows.to_vec())
}

/// Row masks of a graph: bit `j - 1` of row `i - 1` is the edge `x_i y_j`.
pub fn row_masks(g: &BipartiteGraph) -> Vec<u64> {
    g.neighborhoods().iter().map(|nb| nb.bits()).collect()
}

fn permute_bits(row: u64, perm: &[usize]) -> u64 {
    perm.iter()
        .enumerate()
        .filter(|(j, _)| row >> j & 1 == 1)
        .fold(0, |acc, (_, &target)| acc | 1 << target)
}

/// All permutations of `0..k` (as images of each position).
pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    heap_permute(k, &mut current, &mut out);
    out
}

fn heap_permute(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, a, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let all = enumerate_bipartite(2, 2, EnumerateOptions::default()).unwrap();
        assert_eq!(all.count(), 16);
        let opts = EnumerateOptions { no_isolated_x: true, ..Default::default() };
        assert_eq!(enumerate_bipartite(2, 2, opts).unwrap().count(), 9);
        let single: Vec<_> = enumerate_bipartite(1, 1, EnumerateOptions::default()).unwrap().collect();
        assert_eq!(single.len(), 2);
        assert_eq!(single[0].edge_count(), 0);
        assert_eq!(single[1].edge_count(), 1);
        assert_eq!(enumerate_bipartite(0, 3, EnumerateOptions::default()).unwrap().count(), 1);
    }

    #[test]
    fn guard() {
        assert!(matches!(
            enumerate_bipartite(4, 5, EnumerateOptions::default()),
            Err(Error::Config(_))
        ));
        let wide = EnumerateOptions { max_cells: 20, ..Default::default() };
        assert!(enumerate_bipartite(4, 5, wide).is_ok());
    }

    #[test]
    fn order_is_lexicographic_in_rows() {
        let graphs: Vec<_> = enumerate_bipartite(2, 2, EnumerateOptions::default())
            .unwrap()
            .map(|g| row_masks(&g))
            .collect();
        assert!(graphs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(graphs[1], vec![0, 1]);
        assert_eq!(graphs[4], vec![1, 0]);
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(3).len(), 6);
        let mut p = permutations(4);
        p.sort();
        p.dedup();
        assert_eq!(p.len(), 24);
    }

    #[test]
    fn dedupe_small_counts() {
        // bipartite graphs with labeled sides up to relabeling within sides:
        // 1x1 -> 2, 2x2 -> 7 (0,1 edge,2 disjoint,2 sharing x,2 sharing y,P4,K22)
        let opts = EnumerateOptions { dedupe: true, ..Default::default() };
        assert_eq!(enumerate_bipartite(1, 1, opts).unwrap().count(), 2);
        assert_eq!(enumerate_bipartite(2, 2, opts).unwrap().count(), 7);
    }
}
