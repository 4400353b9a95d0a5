use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{IndexSet, SquarefreeMonomialIdeal};

/// Default cap on the number of nonempty faces a slice may hold.
pub const DEFAULT_MAX_FACES: usize = 1 << 24;

/// A finite simplicial complex on a vertex set `W`, stored dimension by
/// dimension. `faces_by_dim[d]` lists the `(d+1)`-element faces in
/// lexicographic order; the empty face is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSlice {
    vertices: IndexSet,
    faces_by_dim: Vec<Vec<IndexSet>>,
}

impl ComplexSlice {
    /// Induced subcomplex `Δ(I)[W]`: subsets of `W` containing no generator
    /// support of `ideal`.
    pub fn of_ideal(ideal: &SquarefreeMonomialIdeal, w: IndexSet, max_faces: usize) -> Result<Self> {
        if !w.is_subset_of(ideal.vertex_set()) {
            return Err(Error::input(format!(
                "vertex set {w} outside the {} variables of the ideal",
                ideal.nvars()
            )));
        }
        let relevant = ideal.generators_within(w);
        // Every maximal proper subset of a candidate is already known to be a
        // face, so the only generator it can contain is itself.
        let is_nonface = |s: IndexSet| relevant.binary_search(&s).is_ok();

        let mut total = 0usize;
        let mut faces_by_dim: Vec<Vec<IndexSet>> = Vec::new();
        let mut layer: Vec<IndexSet> = w
            .iter()
            .map(|v| IndexSet::from_bits(1 << (v - 1)))
            .filter(|s| !is_nonface(*s))
            .collect();
        while !layer.is_empty() {
            total += layer.len();
            if total > max_faces {
                return Err(Error::resource(format!(
                    "induced complex on {w} has more than {max_faces} faces"
                )));
            }
            let known: HashSet<IndexSet> = layer.iter().copied().collect();
            let mut next = Vec::new();
            for &face in &layer {
                let top = face.largest().unwrap_or(0);
                for v in w.iter().filter(|&v| v > top) {
                    let cand = face.with(v);
                    let closed = cand.iter().all(|u| known.contains(&cand.without(u)));
                    if closed && !is_nonface(cand) {
                        next.push(cand);
                    }
                }
            }
            next.sort();
            faces_by_dim.push(std::mem::replace(&mut layer, next));
        }
        Ok(ComplexSlice { vertices: w, faces_by_dim })
    }

    /// Downward closure of `facets`, on the union of their vertices plus `extra`.
    pub fn from_facets(facets: &[IndexSet], extra_vertices: IndexSet) -> Self {
        let mut all: HashSet<IndexSet> = HashSet::new();
        for &f in facets {
            let mut sub = f.bits();
            // all nonempty submasks of f
            while sub != 0 {
                all.insert(IndexSet::from_bits(sub));
                sub = (sub - 1) & f.bits();
            }
        }
        for v in extra_vertices {
            all.insert(IndexSet::singleton(v).expect("in range"));
        }
        let vertices = all.iter().fold(extra_vertices, |acc, f| acc.union(*f));
        let top = all.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut faces_by_dim = vec![Vec::new(); top];
        for f in all {
            faces_by_dim[f.len() - 1].push(f);
        }
        for layer in &mut faces_by_dim {
            layer.sort();
        }
        ComplexSlice { vertices, faces_by_dim }
    }

    /// Wraps an explicit face list, which must be closed under taking subsets.
    pub fn from_faces<I: IntoIterator<Item = IndexSet>>(faces: I) -> Result<Self> {
        let mut faces_by_dim: Vec<Vec<IndexSet>> = Vec::new();
        let mut vertices = IndexSet::EMPTY;
        for f in faces.into_iter().filter(|f| !f.is_empty()) {
            if faces_by_dim.len() < f.len() {
                faces_by_dim.resize(f.len(), Vec::new());
            }
            faces_by_dim[f.len() - 1].push(f);
            vertices = vertices.union(f);
        }
        for layer in &mut faces_by_dim {
            layer.sort();
            layer.dedup();
        }
        let slice = ComplexSlice { vertices, faces_by_dim };
        for d in 1..slice.faces_by_dim.len() {
            for f in slice.faces(d) {
                if let Some(u) = f.iter().find(|&u| !slice.contains(f.without(u))) {
                    return Err(Error::input(format!(
                        "face list not closed: {f} present without {}",
                        f.without(u)
                    )));
                }
            }
        }
        Ok(slice)
    }

    pub fn vertices(&self) -> IndexSet {
        self.vertices
    }

    /// Top dimension, `-1` for the complex `{∅}`.
    pub fn dimension(&self) -> isize {
        self.faces_by_dim.len() as isize - 1
    }

    /// Faces of dimension `d` (empty for `d` above the top dimension).
    pub fn faces(&self, d: usize) -> &[IndexSet] {
        self.faces_by_dim.get(d).map_or(&[], Vec::as_slice)
    }

    /// Number of faces of dimension `d`, counting the empty face at `d = -1`.
    pub fn face_count(&self, d: isize) -> usize {
        match d {
            -1 => 1,
            d if d < -1 => 0,
            d => self.faces(d as usize).len(),
        }
    }

    /// `f_0, f_1, ...` (the empty face is not included).
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, face: IndexSet) -> bool {
        face.is_empty()
            || self
                .faces_by_dim
                .get(face.len() - 1)
                .is_some_and(|l| l.binary_search(&face).is_ok())
    }

    /// Faces not contained in any larger face.
    pub fn maximal_faces(&self) -> Vec<IndexSet> {
        let mut out = Vec::new();
        for (d, layer) in self.faces_by_dim.iter().enumerate() {
            let above = self.faces(d + 1);
            for &f in layer {
                if !above.iter().any(|g| f.is_subset_of(*g)) {
                    out.push(f);
                }
            }
        }
        out
    }

    /// A vertex lying in every maximal face, if the complex is a nonempty cone.
    pub fn cone_apex(&self) -> Option<usize> {
        let maximal = self.maximal_faces();
        if maximal.is_empty() {
            return None;
        }
        let common = maximal.iter().fold(self.vertices, |acc, f| acc.intersection(*f));
        common.smallest()
    }

    /// Text dump: one `"dim d: v1 v2 ..."` line per nonempty face, by dimension
    /// then lexicographically.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (d, layer) in self.faces_by_dim.iter().enumerate() {
            for f in layer {
                let vs: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                writeln!(out, "dim {d}: {}", vs.join(" ")).expect("writing to a String");
            }
        }
        out
    }
}
