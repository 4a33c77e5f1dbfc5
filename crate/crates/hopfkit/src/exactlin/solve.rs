//! Linear systems.

use super::field::Field;
use super::matrix::{Echelon, Matrix};
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Solution<F: Field> {
    /// One particular solution per right-hand-side column, free variables zero.
    pub particular: Matrix<F>,
    pub kernel: Subspace<F>,
}

/// Solves `A·X = B`. The particular solution sets every free variable to zero,
/// so the output only depends on the row space of `[A | B]`.
pub fn solve_linear<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<Solution<F>> {
    if a.rows() != b.rows() {
        return Err(Error::Shape(format!("A has {} rows, b has {}", a.rows(), b.rows())));
    }
    let f = a.field();
    let n = a.cols();
    let mut particular = Matrix::zeros(f, n, b.cols());
    for k in 0..b.cols() {
        let mut sys = AffineSystem::new(f, n);
        for i in 0..a.rows() {
            sys.push_dense(a.row(i), b.get(i, k).clone());
        }
        let x = sys.particular()?;
        for (i, v) in x.into_iter().enumerate() {
            particular.set(i, k, v);
        }
    }
    Ok(Solution { particular, kernel: Subspace::kernel(a) })
}

/// An affine system in `n` unknowns, fed row by row.
#[derive(Clone, Debug)]
pub struct AffineSystem<F: Field> {
    field: F,
    n: usize,
    ech: Echelon<F>,
    inconsistent: bool,
}

impl<F: Field> AffineSystem<F> {
    pub fn new(field: &F, n: usize) -> Self {
        AffineSystem { field: field.clone(), n, ech: Echelon::new(field, n + 1), inconsistent: false }
    }

    pub fn unknowns(&self) -> usize {
        self.n
    }

    /// Adds `Σ coeffs[i]·x_i = rhs`.
    pub fn push_dense(&mut self, coeffs: &[F::Elem], rhs: F::Elem) {
        let mut row = coeffs.to_vec();
        row.push(rhs);
        self.push_row(row);
    }

    /// Adds `Σ c·x_i = rhs` for sparse `(i, c)` entries (repeated indices add up).
    pub fn push_sparse(&mut self, coeffs: &[(usize, F::Elem)], rhs: F::Elem) {
        let f = &self.field;
        let mut row = vec![f.zero(); self.n + 1];
        for (i, c) in coeffs {
            row[*i] = f.add(&row[*i], c);
        }
        row[self.n] = rhs;
        self.push_row(row);
    }

    fn push_row(&mut self, row: Vec<F::Elem>) {
        if self.inconsistent || row.iter().all(|x| self.field.is_zero(x)) {
            return;
        }
        if let Some(p) = self.ech.insert(row) {
            if p == self.n {
                self.inconsistent = true;
            }
        }
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    pub fn particular(&self) -> Result<Vec<F::Elem>> {
        if self.inconsistent {
            return Err(Error::Inconsistent);
        }
        let f = &self.field;
        let mut x = vec![f.zero(); self.n];
        for (p, r) in self.ech.pivots().iter().zip(self.ech.rows()) {
            x[*p] = r[self.n].clone();
        }
        Ok(x)
    }

    /// Solution set of the homogeneous part.
    pub fn kernel(&self) -> Subspace<F> {
        let rows = self
            .ech
            .rows()
            .iter()
            .zip(self.ech.pivots())
            .filter(|(_, p)| **p < self.n)
            .map(|(r, _)| r[..self.n].to_vec())
            .collect::<Vec<_>>();
        let m = Matrix::from_rows(&self.field, self.n, rows);
        Subspace::kernel(&m)
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::{PrimeField, Rationals};

    #[test]
    fn identity_system() {
        let q = Rationals;
        let s = solve_linear(&Matrix::identity(&q, 2), &Matrix::from_i64(&q, 2, 1, &[1, 0])).unwrap();
        assert_eq!(s.particular, Matrix::from_i64(&q, 2, 1, &[1, 0]));
        assert_eq!(s.kernel.dim(), 0);
    }

    #[test]
    fn zero_system_inconsistent() {
        let q = Rationals;
        let r = solve_linear(&Matrix::zeros(&q, 1, 1), &Matrix::from_i64(&q, 1, 1, &[1]));
        assert!(matches!(r, Err(Error::Inconsistent)));
    }

    #[test]
    fn three_times_five_mod_seven() {
        let f = PrimeField::new(7).unwrap();
        let s = solve_linear(&Matrix::from_i64(&f, 1, 1, &[3]), &Matrix::from_i64(&f, 1, 1, &[1])).unwrap();
        assert_eq!(*s.particular.get(0, 0), 5);
        // independent check: enumerate the residues
        let hits: Vec<u64> = (0..7).filter(|x| (3 * x) % 7 == 1).collect();
        assert_eq!(hits, vec![5]);
    }
}
