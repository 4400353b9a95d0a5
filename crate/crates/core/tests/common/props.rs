//! Property bodies and their input strategies.

use edge_betti::betti::{betti_via_lcm_lattice, ferrers_betti_zn, EdgeIdealBetti, HochsterEngine};
use edge_betti::homology::{boundary_matrix, reduced_betti, ComplexSlice, PrimeField};
use edge_betti::model::{
    colex_compare, colex_segment, edge_ideal_of, enumerate_bipartite, BipartiteGraph, EnumerateOptions, IndexSet,
    SquarefreeMonomialIdeal,
};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use super::{all_graphs, all_permutations, betti_naive, colex_prefix_naive, orbit_key, reduced_betti_naive};

pub type PropResult = Result<(), TestCaseError>;

pub fn arb_field() -> impl Strategy<Value = PrimeField> {
    prop::sample::select(vec![2u32, 3, 5, 32749]).prop_map(|p| PrimeField::new(p).unwrap())
}

/// A complex given by up to 6 random facets on vertices `1..=7`.
pub fn arb_complex() -> impl Strategy<Value = ComplexSlice> {
    prop::collection::vec(1u64..1 << 7, 0..6)
        .prop_map(|facets| ComplexSlice::from_facets(&facets.into_iter().map(IndexSet::from_bits).collect::<Vec<_>>(), IndexSet::EMPTY))
}

/// A squarefree ideal with at most `max_gens` generators on at most `max_vars` variables.
pub fn arb_ideal(max_vars: usize, max_gens: usize) -> impl Strategy<Value = SquarefreeMonomialIdeal> {
    (1..=max_vars).prop_flat_map(move |nvars| {
        prop::collection::vec(1u64..1 << nvars, 0..=max_gens).prop_map(move |gens| {
            let supports: Vec<IndexSet> = gens.into_iter().map(IndexSet::from_bits).collect();
            SquarefreeMonomialIdeal::minimalized(nvars, &supports).unwrap()
        })
    })
}

pub fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_n, 1..=max_m).prop_flat_map(|(n, m)| {
        prop::collection::vec(0u64..1 << m, n).prop_map(move |rows| {
            BipartiteGraph::new(n, m, rows.into_iter().map(IndexSet::from_bits).collect()).unwrap()
        })
    })
}

/// Graphs in which every X-vertex has a neighbor.
pub fn arb_covered_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_n, 1..=max_m).prop_flat_map(|(n, m)| {
        prop::collection::vec(1u64..1 << m, n).prop_map(move |rows| {
            BipartiteGraph::new(n, m, rows.into_iter().map(IndexSet::from_bits).collect()).unwrap()
        })
    })
}

pub fn boundary_squares_to_zero(c: &ComplexSlice, field: PrimeField) -> PropResult {
    for d in 1..=(c.dimension() + 1).max(1) as usize {
        let prod = boundary_matrix(c, d - 1, field).mul(&boundary_matrix(c, d, field));
        prop_assert!(prod.is_zero(), "d = {} over {}", d, field);
    }
    Ok(())
}

pub fn euler_identity(c: &ComplexSlice, field: PrimeField) -> PropResult {
    let f_alt: i64 = c
        .f_vector()
        .iter()
        .enumerate()
        .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
        .sum();
    prop_assert_eq!(f_alt - 1, reduced_betti(c, field).euler_characteristic());
    Ok(())
}

/// Rank-nullity bound and agreement with the naive oracle.
pub fn betti_matches_naive(c: &ComplexSlice, field: PrimeField) -> PropResult {
    let ours = reduced_betti(c, field);
    let naive = reduced_betti_naive(c.vertices().bits(), |s| c.contains(IndexSet::from_bits(s)), field.modulus() as u64);
    for d in -1..=c.dimension() + 1 {
        prop_assert_eq!(ours.get(d), super::get_reduced(&naive, d), "d = {}", d);
    }
    for d in 0..=c.dimension().max(0) as usize {
        let r = edge_betti::homology::rank_mod_p(&boundary_matrix(c, d, field))
            + edge_betti::homology::rank_mod_p(&boundary_matrix(c, d + 1, field));
        prop_assert!(r <= c.face_count(d as isize));
    }
    Ok(())
}

/// Coning a complex over a fresh apex kills all reduced homology.
pub fn cone_vanishing(c: &ComplexSlice, field: PrimeField) -> PropResult {
    let apex = 8;
    let mut facets: Vec<IndexSet> = c.maximal_faces().into_iter().map(|f| f.with(apex)).collect();
    if facets.is_empty() {
        facets.push(IndexSet::singleton(apex).unwrap());
    }
    let cone = ComplexSlice::from_facets(&facets, IndexSet::EMPTY);
    prop_assert_eq!(cone.cone_apex().is_some(), true);
    prop_assert!(reduced_betti(&cone, field).is_acyclic());
    Ok(())
}

pub fn generator_axiom(ideal: &SquarefreeMonomialIdeal, field: PrimeField) -> PropResult {
    let engine = HochsterEngine::new(ideal.clone(), field);
    for bits in 0..1u64 << ideal.nvars() {
        let w = IndexSet::from_bits(bits);
        let expected = usize::from(ideal.is_generator(w));
        prop_assert_eq!(engine.multigraded(0, w).unwrap(), expected, "W = {}", w);
    }
    Ok(())
}

/// Hochster engine, lcm-lattice oracle and the naive oracle agree on every `(i, W)`.
pub fn oracles_agree(ideal: &SquarefreeMonomialIdeal, field: PrimeField) -> PropResult {
    let engine = HochsterEngine::new(ideal.clone(), field);
    let gens: Vec<u64> = ideal.generators().iter().map(|g| g.bits()).collect();
    // a linear generator x_v gives the slice {∅} on W = {v}, so the band is one wider
    let slack = if ideal.generators().iter().any(|g| g.len() == 1) { 1 } else { 2 };
    for bits in 0..1u64 << ideal.nvars() {
        let w = IndexSet::from_bits(bits);
        for i in 0..=ideal.nvars() {
            let h = engine.multigraded(i, w).unwrap();
            let l = betti_via_lcm_lattice(ideal, i, w, field, 12).unwrap();
            prop_assert_eq!(h, l, "lcm: i = {}, W = {}", i, w);
            if bits.count_ones() <= 6 {
                prop_assert_eq!(h, betti_naive(&gens, bits, i, field.modulus() as u64), "naive: i = {}, W = {}", i, w);
            }
            if h != 0 {
                prop_assert!(i + slack <= w.len(), "vanishing band: i = {}, W = {}", i, w);
            }
        }
    }
    Ok(())
}

/// `Σ_{X'} β_{i,X',•} = β_i`, and multigraded entries lie in the vanishing band.
pub fn partition_identity(g: &BipartiteGraph, field: PrimeField) -> PropResult {
    let betti = EdgeIdealBetti::new(g, field);
    let totals = betti.totals().unwrap();
    let mut sums = vec![0usize; g.n() + g.m()];
    for xs in g.x_set().subsets_by_size() {
        for (i, v) in betti.zn_row(xs).unwrap().into_iter().enumerate() {
            sums[i] += v;
        }
    }
    while sums.last() == Some(&0) {
        sums.pop();
    }
    prop_assert_eq!(sums, totals);
    for (i, w, _) in betti.engine().nonzero_entries().unwrap() {
        prop_assert!(i + 2 <= w.len() && w.len() <= 2 * i + 2, "i = {}, W = {}", i, w);
    }
    Ok(())
}

pub fn low_index_vanishing(g: &BipartiteGraph, field: PrimeField) -> PropResult {
    let betti = EdgeIdealBetti::new(g, field);
    for xs in g.x_set().subsets_by_size().into_iter().filter(|s| s.len() >= 2) {
        let row = betti.zn_row(xs).unwrap();
        for i in 0..xs.len() - 1 {
            prop_assert_eq!(row.get(i).copied().unwrap_or(0), 0, "i = {}, X' = {}", i, xs);
        }
    }
    Ok(())
}

pub fn isolated_y_invariance(g: &BipartiteGraph, field: PrimeField) -> PropResult {
    let a = EdgeIdealBetti::new(g, field);
    let h = g.with_isolated_y().unwrap();
    let b = EdgeIdealBetti::new(&h, field);
    for xs in g.x_set().subsets_by_size() {
        let mut ra = a.zn_row(xs).unwrap();
        let mut rb = b.zn_row(xs).unwrap();
        ra.resize(g.n() + g.m() + 1, 0);
        rb.resize(g.n() + g.m() + 1, 0);
        prop_assert_eq!(ra, rb, "X' = {}", xs);
    }
    Ok(())
}

/// The closed form equals Hochster on the Ferrers graph `N(x_i) = {1..λ_i}`.
pub fn ferrers_closed_form(profile: &[usize], m: usize, field: PrimeField) -> PropResult {
    let lists: Vec<Vec<usize>> = profile.iter().map(|&l| (1..=l).collect()).collect();
    let f = BipartiteGraph::from_lists(m, &lists).unwrap();
    prop_assert!(f.is_ferrers());
    let betti = EdgeIdealBetti::new(&f, field);
    for xs in f.x_set().subsets_by_size().into_iter().filter(|s| !s.is_empty()) {
        let row = betti.zn_row(xs).unwrap();
        for i in 0..f.n() + f.m() {
            let h = row.get(i).copied().unwrap_or(0) as u64;
            prop_assert_eq!(ferrers_betti_zn(&f, i, xs).unwrap(), h, "profile {:?}, i = {}, X' = {}", profile, i, xs);
        }
    }
    Ok(())
}

pub fn ferrers_idempotent(g: &BipartiteGraph) -> PropResult {
    let f = g.ferrers();
    prop_assert_eq!(f.ferrers(), f.clone());
    prop_assert!(f.is_ferrers());
    let mut a = g.degrees();
    let mut b = f.degrees();
    a.sort_unstable();
    b.sort_unstable();
    prop_assert_eq!(a, b);
    Ok(())
}

pub fn edge_ideal_is_antichain(g: &BipartiteGraph) -> PropResult {
    let ideal = edge_ideal_of(g);
    prop_assert_eq!(ideal.generators().len(), g.edge_count());
    let rebuilt = SquarefreeMonomialIdeal::new(ideal.nvars(), ideal.generators().to_vec());
    prop_assert!(rebuilt.is_ok());
    prop_assert!(ideal.generators().iter().all(|s| s.len() == 2));
    Ok(())
}

pub fn colex_initial_segment(d: usize, k: usize) -> PropResult {
    let seg = colex_segment(d, k).unwrap();
    let ours: Vec<Vec<usize>> = seg.supports().iter().map(|s| s.to_vec()).collect();
    prop_assert_eq!(ours, colex_prefix_naive(d, k), "d = {}, k = {}", d, k);
    Ok(())
}

/// Trichotomy and transitivity of colex order on all 2-subsets of `1..=6`.
pub fn colex_total_order() -> PropResult {
    let pairs: Vec<IndexSet> = IndexSet::prefix(6).unwrap().subsets_of_size(2);
    for &a in &pairs {
        for &b in &pairs {
            let ab = colex_compare(a, b).unwrap();
            prop_assert_eq!(ab, colex_compare(b, a).unwrap().reverse());
            prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
            for &c in &pairs {
                if ab.is_lt() && colex_compare(b, c).unwrap().is_lt() {
                    prop_assert!(colex_compare(a, c).unwrap().is_lt());
                }
            }
        }
    }
    Ok(())
}

pub fn nearly_row_nested_relabeling(g: &BipartiteGraph) -> PropResult {
    let base = g.is_nearly_row_nested();
    for xp in all_permutations(g.n()) {
        for yp in all_permutations(g.m()) {
            prop_assert_eq!(g.permuted(&xp, &yp).unwrap().is_nearly_row_nested(), base);
        }
    }
    Ok(())
}

/// Dedupe emits exactly one graph per orbit, checked against brute-force orbits.
pub fn dedupe_orbits(n: usize, m: usize) -> PropResult {
    let options = EnumerateOptions { dedupe: true, ..Default::default() };
    let reps: Vec<BipartiteGraph> = enumerate_bipartite(n, m, options).unwrap().collect();
    let mut rep_keys: Vec<_> = reps.iter().map(orbit_key).collect();
    rep_keys.sort();
    let before = rep_keys.len();
    rep_keys.dedup();
    prop_assert_eq!(before, rep_keys.len(), "two representatives share an orbit");
    let mut all_keys: Vec<_> = all_graphs(n, m).iter().map(orbit_key).collect();
    all_keys.sort();
    all_keys.dedup();
    prop_assert_eq!(rep_keys, all_keys);
    Ok(())
}

pub fn text_round_trip(g: &BipartiteGraph) -> PropResult {
    prop_assert_eq!(BipartiteGraph::from_text(&g.to_text()).unwrap(), g.clone());
    Ok(())
}
