use crate::error::{Error, Result};
use crate::model::{BipartiteGraph, IndexSet};

/// Exact binomial coefficient; `C(a, b) = 0` when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> Result<u64> {
    if b < 0 || b as u64 > a {
        return Ok(0);
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc: u128 = 1;
    for k in 0..b {
        // acc * (a - k) / (k + 1) stays integral at every step
        acc = acc * (a - k) as u128 / (k + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::resource(format!("C({a}, {b}) overflows 64 bits")));
        }
    }
    Ok(acc as u64)
}

/// Closed-form `β_{i,X',•}` of a Ferrers ideal: `C(mindeg(X'), i - |X'| + 2)`
/// for `i >= |X'| - 1`, and 0 below that.
///
/// The degree sequence of `g` is all that matters, so `g` may be any graph
/// with the Ferrers graph's X-degrees (in particular the original graph).
pub fn ferrers_betti_zn(g: &BipartiteGraph, i: usize, xs: IndexSet) -> Result<u64> {
    let mindeg = g.mindeg(xs)?;
    let size = xs.len() as i64;
    let i = i as i64;
    if i < size - 1 {
        return Ok(0);
    }
    binomial(mindeg as u64, i - size + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::from_indices(v.iter().copied()).unwrap()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(5, -1).unwrap(), 0);
        assert_eq!(binomial(5, 6).unwrap(), 0);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(62, 31).unwrap(), 465428353255261088);
        assert!(binomial(200, 100).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let k22 = BipartiteGraph::complete(2, 2).unwrap();
        assert_eq!(ferrers_betti_zn(&k22, 0, set(&[1])).unwrap(), 2);
        assert_eq!(ferrers_betti_zn(&k22, 1, set(&[1, 2])).unwrap(), 2);
        assert_eq!(ferrers_betti_zn(&k22, 0, set(&[1, 2])).unwrap(), 0);
        assert_eq!(ferrers_betti_zn(&k22, 2, set(&[1, 2])).unwrap(), 1);
        assert_eq!(ferrers_betti_zn(&k22, 3, set(&[1, 2])).unwrap(), 0);
        assert!(ferrers_betti_zn(&k22, 0, IndexSet::EMPTY).is_err());
    }

    #[test]
    fn isolated_rows_vanish() {
        let g = BipartiteGraph::from_lists(2, &[vec![1, 2], vec![]]).unwrap();
        for i in 0..5 {
            assert_eq!(ferrers_betti_zn(&g, i, set(&[1, 2])).unwrap(), 0);
            assert_eq!(ferrers_betti_zn(&g, i, set(&[2])).unwrap(), 0);
        }
    }
}
