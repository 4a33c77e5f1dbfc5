//! Coordinate-sparse linear maps, used for structure tensors.

use std::collections::BTreeMap;

use super::field::Field;
use super::matrix::Matrix;

/// A linear map stored column by column: `col(j)` lists the nonzero
/// coordinates of the image of basis vector j, sorted by row index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMap<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, F::Elem)>>,
}

impl<F: Field> SparseMap<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        SparseMap { field: field.clone(), rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for j in 0..n {
            m.columns[j].push((j, field.one()));
        }
        m
    }

    pub fn from_dense(m: &Matrix<F>) -> Self {
        let f = m.field();
        let mut s = Self::zeros(f, m.rows(), m.cols());
        for i in 0..m.rows() {
            for (j, a) in m.row(i).iter().enumerate() {
                if !f.is_zero(a) {
                    s.columns[j].push((i, a.clone()));
                }
            }
        }
        s
    }

    /// Builds from dense column vectors.
    pub fn from_columns(field: &F, rows: usize, cols: impl IntoIterator<Item = Vec<F::Elem>>) -> Self {
        let columns: Vec<Vec<(usize, F::Elem)>> = cols
            .into_iter()
            .map(|c| {
                assert_eq!(c.len(), rows, "column length");
                sparsify(field, &c)
            })
            .collect();
        SparseMap { field: field.clone(), rows, cols: columns.len(), columns }
    }

    /// Builds from `(row, col, coeff)` triples; duplicates add up.
    pub fn from_triples(field: &F, rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, F::Elem)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, F::Elem>> = vec![BTreeMap::new(); cols];
        for (i, j, c) in entries {
            assert!(i < rows && j < cols, "triple out of range");
            let e = acc[j].entry(i).or_insert_with(|| field.zero());
            *e = field.add(e, &c);
        }
        let columns = acc
            .into_iter()
            .map(|c| c.into_iter().filter(|(_, a)| !field.is_zero(a)).collect())
            .collect();
        SparseMap { field: field.clone(), rows, cols, columns }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn col(&self, j: usize) -> &[(usize, F::Elem)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(&self.field, self.rows, self.cols);
        for (j, c) in self.columns.iter().enumerate() {
            for (i, a) in c {
                m.set(*i, j, a.clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for (j, c) in self.columns.iter().enumerate() {
            for (i, a) in c {
                t.columns[*i].push((j, a.clone()));
            }
        }
        t
    }

    /// Image of a dense vector.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (i, a) in &self.columns[j] {
                f.add_mul_assign(&mut out[*i], a, x);
            }
        }
        out
    }

    /// Adds `c · col(j)` into a dense accumulator.
    pub fn accumulate_col(&self, out: &mut [F::Elem], j: usize, c: &F::Elem) {
        for (i, a) in &self.columns[j] {
            self.field.add_mul_assign(&mut out[*i], a, c);
        }
    }

    /// `self ∘ other` (other applied first).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "compose shape");
        let f = &self.field;
        let cols = (0..other.cols).map(|j| {
            let mut acc = vec![f.zero(); self.rows];
            for (k, b) in &other.columns[j] {
                self.accumulate_col(&mut acc, *k, b);
            }
            acc
        });
        Self::from_columns(f, self.rows, cols.collect::<Vec<_>>())
    }
}

/// Dense scratch vector that remembers which slots it touched, so large but
/// sparse sums cost only their support.
pub struct Accumulator<F: Field> {
    field: F,
    vals: Vec<F::Elem>,
    seen: Vec<bool>,
    touched: Vec<usize>,
}

impl<F: Field> Accumulator<F> {
    pub fn new(field: &F, len: usize) -> Self {
        Accumulator { field: field.clone(), vals: vec![field.zero(); len], seen: vec![false; len], touched: Vec::new() }
    }

    /// `self[i] += a * b`
    pub fn add_mul(&mut self, i: usize, a: &F::Elem, b: &F::Elem) {
        if !self.seen[i] {
            self.seen[i] = true;
            self.touched.push(i);
        }
        self.field.add_mul_assign(&mut self.vals[i], a, b);
    }

    /// Nonzero entries sorted by index; leaves the accumulator empty.
    pub fn drain(&mut self) -> Vec<(usize, F::Elem)> {
        self.touched.sort_unstable();
        let zero = self.field.zero();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.seen[i] = false;
            let v = std::mem::replace(&mut self.vals[i], zero.clone());
            if !self.field.is_zero(&v) {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

pub fn sparsify<F: Field>(f: &F, v: &[F::Elem]) -> Vec<(usize, F::Elem)> {
    v.iter().enumerate().filter(|(_, a)| !f.is_zero(a)).map(|(i, a)| (i, a.clone())).collect()
}
