//! Dense matrices and incremental row reduction.

use super::field::Field;

/// Dense row-major matrix. A matrix of a linear map X → Y has shape dim Y × dim X;
/// column j is the image of the j-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix { field: field.clone(), rows: n, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: &F, rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        Matrix { field: field.clone(), rows, cols, data: vals.iter().map(|v| field.from_i64(*v)).collect() }
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
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }
    pub fn add_at(&mut self, i: usize, j: usize, v: &F::Elem) {
        let k = i * self.cols + j;
        self.data[k] = self.field.add(&self.data[k], v);
    }
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn row_mut(&mut self, i: usize) -> &mut [F::Elem] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }
    pub fn col(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn row_vectors(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let na = f.neg(a);
                let (orow, brow) = (i * other.cols, k * other.cols);
                f.sub_scaled_row(&mut out.data[orow..orow + other.cols], &na, &other.data[brow..brow + other.cols]);
            }
        }
        out
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape");
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !f.is_zero(a) {
                    f.add_mul_assign(o, a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape");
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| f.mul(a, c)).collect() }
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| f.neg(a)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(&self.field, self.rows)
    }

    /// Kronecker product; the basis of X⊗Y is ordered with the Y index fastest.
    pub fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack rows");
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Reduced row echelon form: leftmost pivots, scaled to one.
    pub fn rref(&self) -> Echelon<F> {
        let mut e = Echelon::new(&self.field, self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.field, n));
        let e = aug.rref();
        if e.rank() < n || e.pivots()[n - 1] != n - 1 {
            return None;
        }
        let rows = e.rows().iter().map(|r| r[n..].to_vec()).collect();
        Some(Self::from_rows(&self.field, n, rows))
    }

    pub fn format_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|a| self.field.format(a)).collect()).collect()
    }
}

/// A growing set of rows kept in reduced row echelon form. Rows can be fed one
/// at a time, so tall constraint systems never need to be materialized.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    cols: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<F::Elem>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, cols: usize) -> Self {
        Echelon { field: field.clone(), cols, pivots: Vec::new(), rows: Vec::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    /// Reduces `v` against the current rows in place; afterwards `v` vanishes on
    /// every pivot column.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (p, r) in self.pivots.iter().zip(&self.rows) {
            if !f.is_zero(&v[*p]) {
                let c = v[*p].clone();
                f.sub_scaled_row(&mut v[*p..], &c, &r[*p..]);
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds a row; returns the new pivot column if the rank grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> Option<usize> {
        assert_eq!(v.len(), self.cols, "echelon row length");
        self.reduce(&mut v);
        let f = self.field.clone();
        let lead = v.iter().position(|x| !f.is_zero(x))?;
        let inv = f.inv(&v[lead]).expect("nonzero pivot");
        if !f.is_one(&inv) {
            for x in v[lead..].iter_mut() {
                if !f.is_zero(x) {
                    *x = f.mul(x, &inv);
                }
            }
        }
        for r in self.rows.iter_mut() {
            if !f.is_zero(&r[lead]) {
                let c = r[lead].clone();
                f.sub_scaled_row(&mut r[lead..], &c, &v[lead..]);
            }
        }
        let pos = self.pivots.partition_point(|p| *p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, v);
        Some(lead)
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(&self.field, self.cols, self.rows.clone())
    }

    /// Basis of the right null space {x : R x = 0}, itself returned in RREF.
    pub fn null_space(&self) -> Echelon<F> {
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for p in &self.pivots {
            is_pivot[*p] = true;
        }
        let mut out = Echelon::new(f, self.cols);
        // Feeding free columns from right to left keeps the result close to
        // reduced form and the insertions cheap.
        for free in (0..self.cols).rev().filter(|c| !is_pivot[*c]) {
            let mut x = vec![f.zero(); self.cols];
            x[free] = f.one();
            for (p, r) in self.pivots.iter().zip(&self.rows) {
                if !f.is_zero(&r[free]) {
                    x[*p] = f.neg(&r[free]);
                }
            }
            out.insert(x);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::{PrimeField, Rationals};

    #[test]
    fn rref_pivot_convention() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, 2, 3, &[0, 2, 4, 1, 1, 1]);
        let e = m.rref();
        assert_eq!(e.pivots(), &[0, 1]);
        assert_eq!(e.to_matrix(), Matrix::from_i64(&q, 2, 3, &[1, 0, -1, 0, 1, 2]));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_i64(&f, 2, 2, &[1, 2, 3, 4]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = Matrix::from_i64(&f, 2, 2, &[1, 2, 2, 4]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn null_space_is_rref_and_annihilated() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, 2, 4, &[1, 1, 0, 1, 0, 0, 1, 2]);
        let k = m.rref().null_space();
        assert_eq!(k.rank(), 2);
        let km = k.to_matrix();
        assert!(m.mul(&km.transpose()).is_zero());
        assert_eq!(km.rref().to_matrix(), km);
    }

    #[test]
    fn kron_ordering() {
        let q = Rationals;
        let a = Matrix::from_i64(&q, 1, 2, &[1, 2]);
        let b = Matrix::from_i64(&q, 2, 1, &[3, 4]);
        assert_eq!(a.kron(&b), Matrix::from_i64(&q, 2, 2, &[3, 6, 4, 8]));
    }
}
