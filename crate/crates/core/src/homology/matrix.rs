use std::fmt::Write as _;

use super::field::PrimeField;

/// Dense row-major matrix over GF(p); entries are always reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    field: PrimeField,
    entries: Vec<u32>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize, field: PrimeField) -> Self {
        FieldMatrix { rows, cols, field, entries: vec![0; rows * cols] }
    }

    /// Builds from signed integer rows, reducing mod p. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>], field: PrimeField) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols, field);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, field.from_i64(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * self.cols + c] = v % self.field.modulus();
    }

    /// Matrix product `self * rhs`. Panics on dimension or field mismatch.
    pub fn mul(&self, rhs: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        assert_eq!(self.field, rhs.field, "field mismatch");
        let f = self.field;
        let mut out = FieldMatrix::zeros(self.rows, rhs.cols, f);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let idx = r * rhs.cols + c;
                    out.entries[idx] = f.add(out.entries[idx], f.mul(a, rhs.get(k, c)));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    /// `"rows cols"` header then one line of space-separated residues per row.
    pub fn dump(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(out, "{}", row.join(" ")).expect("writing to a String");
        }
        out
    }
}

/// Rank over GF(p) by Gaussian elimination on a copy of the matrix.
pub fn rank_mod_p(m: &FieldMatrix) -> usize {
    let f = m.field;
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.entries.clone();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if pivot != rank {
            for k in 0..cols {
                a.swap(pivot * cols + k, rank * cols + k);
            }
        }
        let inv = f.inv(a[rank * cols + c]);
        for k in c..cols {
            a[rank * cols + k] = f.mul(a[rank * cols + k], inv);
        }
        for r in rank + 1..rows {
            let factor = a[r * cols + c];
            if factor == 0 {
                continue;
            }
            for k in c..cols {
                let sub = f.mul(factor, a[rank * cols + k]);
                a[r * cols + k] = f.sub(a[r * cols + k], sub);
            }
        }
        rank += 1;
    }
    rank
}
