use serde::Serialize;

use super::graph::BipartiteGraph;
use super::subset::{IndexSet, MAX_INDEX};
use crate::error::{Error, Result};

/// A squarefree monomial ideal, given by the supports of its minimal generators.
///
/// Generators are kept sorted (lexicographically by support) and form an
/// antichain under inclusion.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SquarefreeMonomialIdeal {
    nvars: usize,
    gens: Vec<IndexSet>,
}

impl SquarefreeMonomialIdeal {
    /// Validates that `gens` is a nonempty-support antichain over `1..=nvars`.
    pub fn new(nvars: usize, gens: Vec<IndexSet>) -> Result<Self> {
        if nvars > MAX_INDEX {
            return Err(Error::input(format!("at most {MAX_INDEX} variables supported")));
        }
        for g in &gens {
            if g.is_empty() {
                return Err(Error::input("the unit ideal (empty support) is not supported"));
            }
            if g.largest().is_some_and(|v| v > nvars) {
                return Err(Error::input(format!("generator {g} exceeds nvars = {nvars}")));
            }
        }
        let mut gens = gens;
        gens.sort();
        if gens.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("duplicate generator"));
        }
        for a in &gens {
            for b in &gens {
                if a.is_proper_subset_of(*b) {
                    return Err(Error::input(format!(
                        "generators are not minimal: {a} divides {b}"
                    )));
                }
            }
        }
        Ok(SquarefreeMonomialIdeal { nvars, gens })
    }

    /// Keeps only the inclusion-minimal supports, dropping duplicates.
    pub fn minimalized(nvars: usize, supports: &[IndexSet]) -> Result<Self> {
        let mut kept: Vec<IndexSet> = Vec::new();
        for s in supports {
            if !supports.iter().any(|t| t.is_proper_subset_of(*s)) && !kept.contains(s) {
                kept.push(*s);
            }
        }
        Self::new(nvars, kept)
    }

    /// The edge ideal: one generator `x_i y_j` per edge, with `x_i` at flat
    /// index `i` and `y_j` at flat index `n + j`.
    pub fn edge_ideal(g: &BipartiteGraph) -> Self {
        let n = g.n();
        let gens = g
            .edges()
            .into_iter()
            .map(|(i, j)| IndexSet::from_bits(1 << (i - 1) | 1 << (n + j - 1)))
            .collect();
        SquarefreeMonomialIdeal::new(n + g.m(), gens).expect("edge supports form an antichain")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[IndexSet] {
        &self.gens
    }

    pub fn vertex_set(&self) -> IndexSet {
        IndexSet::prefix(self.nvars).expect("nvars bounded at construction")
    }

    /// True iff `face` contains no generator support.
    pub fn is_face(&self, face: IndexSet) -> bool {
        !self.gens.iter().any(|g| g.is_subset_of(face))
    }

    /// Generators whose support lies inside `w`.
    pub fn generators_within(&self, w: IndexSet) -> Vec<IndexSet> {
        self.gens.iter().copied().filter(|g| g.is_subset_of(w)).collect()
    }

    pub fn is_generator(&self, w: IndexSet) -> bool {
        self.gens.binary_search(&w).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::from_indices(v.iter().copied()).unwrap()
    }

    #[test]
    fn edge_ideal_examples() {
        let e = BipartiteGraph::complete(1, 1).unwrap();
        let i = SquarefreeMonomialIdeal::edge_ideal(&e);
        assert_eq!(i.nvars(), 2);
        assert_eq!(i.generators(), &[set(&[1, 2])]);

        let k22 = SquarefreeMonomialIdeal::edge_ideal(&BipartiteGraph::complete(2, 2).unwrap());
        assert_eq!(
            k22.generators(),
            &[set(&[1, 3]), set(&[1, 4]), set(&[2, 3]), set(&[2, 4])]
        );

        let p4 = BipartiteGraph::from_lists(2, &[vec![1], vec![1, 2]]).unwrap();
        let i = SquarefreeMonomialIdeal::edge_ideal(&p4);
        assert_eq!(i.generators(), &[set(&[1, 3]), set(&[2, 3]), set(&[2, 4])]);
    }

    #[test]
    fn antichain_enforced() {
        assert!(SquarefreeMonomialIdeal::new(3, vec![set(&[1]), set(&[1, 2])]).is_err());
        assert!(SquarefreeMonomialIdeal::new(3, vec![set(&[1, 2]), set(&[1, 2])]).is_err());
        assert!(SquarefreeMonomialIdeal::new(2, vec![set(&[1, 3])]).is_err());
        assert!(SquarefreeMonomialIdeal::new(2, vec![IndexSet::EMPTY]).is_err());
        let i = SquarefreeMonomialIdeal::minimalized(3, &[set(&[1, 2]), set(&[1]), set(&[1])]).unwrap();
        assert_eq!(i.generators(), &[set(&[1])]);
    }

    #[test]
    fn faces() {
        let i = SquarefreeMonomialIdeal::new(3, vec![set(&[1, 2])]).unwrap();
        assert!(i.is_face(set(&[1, 3])));
        assert!(!i.is_face(set(&[1, 2, 3])));
        assert!(i.is_face(IndexSet::EMPTY));
        assert!(i.is_generator(set(&[1, 2])));
        assert_eq!(i.generators_within(set(&[1, 3])), vec![]);
    }
}
