//! Oracles and property bodies shared by the property tests and the
//! acceptance runner. Nothing here calls into the library's homology code.

#![allow(dead_code, clippy::needless_range_loop)]

pub mod props;

use edge_betti::model::{BipartiteGraph, IndexSet};

/// Rank of a dense matrix over GF(p), by plain row reduction.
pub fn rank_naive(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for c in 0..ncols {
            rows[rank][c] = rows[rank][c] * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..ncols {
                    rows[r][c] = (rows[r][c] + p * p - factor * rows[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `β̃_d` for `d = -1..` of the complex of subsets of `vertices` passing
/// `is_face`, by enumerating every subset and building the full chain complex.
pub fn reduced_betti_naive(vertices: u64, is_face: impl Fn(u64) -> bool, p: u64) -> Vec<usize> {
    let verts: Vec<u32> = (0..64).filter(|b| vertices >> b & 1 == 1).collect();
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); verts.len() + 1];
    for sub in 0..1u64 << verts.len() {
        let mask = verts
            .iter()
            .enumerate()
            .filter(|(k, _)| sub >> k & 1 == 1)
            .fold(0u64, |acc, (_, &b)| acc | 1 << b);
        if is_face(mask) {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    // rank of the map from size-s faces to size-(s-1) faces
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || s >= by_size.len() || by_size[s].is_empty() || by_size[s - 1].is_empty() {
            return 0;
        }
        let lower = &by_size[s - 1];
        let rows: Vec<Vec<u64>> = lower
            .iter()
            .map(|&l| {
                by_size[s]
                    .iter()
                    .map(|&u| {
                        if l & u != l {
                            return 0;
                        }
                        let removed = u & !l;
                        let pos = (u & (removed - 1)).count_ones();
                        if pos % 2 == 0 { 1 } else { p - 1 }
                    })
                    .collect()
            })
            .collect();
        rank_naive(rows, p)
    };
    let mut out = Vec::new();
    for s in 0..by_size.len() {
        out.push(by_size[s].len() - boundary_rank(s) - boundary_rank(s + 1));
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

pub fn get_reduced(v: &[usize], d: isize) -> usize {
    if d < -1 {
        0
    } else {
        v.get((d + 1) as usize).copied().unwrap_or(0)
    }
}

/// `β_{i,W}` of the ideal with generator masks `gens` (bit k-1 = variable k).
pub fn betti_naive(gens: &[u64], w: u64, i: usize, p: u64) -> usize {
    let v = reduced_betti_naive(w, |s| gens.iter().all(|&g| g & s != g), p);
    get_reduced(&v, w.count_ones() as isize - i as isize - 2)
}

pub fn edge_masks(g: &BipartiteGraph) -> Vec<u64> {
    g.edges()
        .into_iter()
        .map(|(i, j)| 1u64 << (i - 1) | 1u64 << (g.n() + j - 1))
        .collect()
}

/// `β_{i,X',•}` of the edge ideal by summing the naive oracle over all Y-parts.
pub fn betti_zn_naive(g: &BipartiteGraph, i: usize, xs: IndexSet, p: u64) -> usize {
    let gens = edge_masks(g);
    (0..1u64 << g.m())
        .map(|ys| betti_naive(&gens, xs.bits() | ys << g.n(), i, p))
        .sum()
}

/// Total Betti numbers `[β_0, ..]` from the naive oracle.
pub fn totals_naive(gens: &[u64], nvars: usize, p: u64) -> Vec<usize> {
    let mut out = vec![0usize; nvars];
    for w in 0..1u64 << nvars {
        for (i, slot) in out.iter_mut().enumerate() {
            *slot += betti_naive(gens, w, i, p);
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

pub fn binom(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    (0..b).fold(1u64, |acc, k| acc * (a - k) / (k + 1))
}

/// First `k` of all `d`-subsets of `1..=N` (N large enough), sorted by
/// comparing the descending tuples lexicographically.
pub fn colex_prefix_naive(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut n = d;
    while (binom(n as u64, d as u64) as usize) < k {
        n += 1;
    }
    let mut all: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, d, cur, out);
            cur.pop();
        }
    }
    rec(1, n, d, &mut cur, &mut all);
    all.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    all.truncate(k);
    all
}

pub fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in all_permutations(k - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, k);
            out.push(p);
        }
    }
    out
}

/// Orbit invariant: the smallest edge list over all `n! m!` relabelings.
pub fn orbit_key(g: &BipartiteGraph) -> Vec<(usize, usize)> {
    let mut best: Option<Vec<(usize, usize)>> = None;
    for xp in all_permutations(g.n()) {
        for yp in all_permutations(g.m()) {
            let mut e: Vec<(usize, usize)> = g.edges().iter().map(|&(i, j)| (xp[i - 1], yp[j - 1])).collect();
            e.sort();
            if best.as_ref().is_none_or(|b| e < *b) {
                best = Some(e);
            }
        }
    }
    best.unwrap_or_default()
}

/// Every graph with the given sides, in no particular order.
pub fn all_graphs(n: usize, m: usize) -> Vec<BipartiteGraph> {
    (0..1u64 << (n * m))
        .map(|code| {
            let lists: Vec<Vec<usize>> = (0..n)
                .map(|i| (0..m).filter(|j| code >> (i * m + j) & 1 == 1).map(|j| j + 1).collect())
                .collect();
            BipartiteGraph::from_lists(m, &lists).unwrap()
        })
        .collect()
}
