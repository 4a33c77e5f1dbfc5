//! Subspaces of a coordinate space, stored by their RREF basis.

use super::field::Field;
use super::matrix::{Echelon, Matrix};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    ech: Echelon<F>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ech.cols() == other.ech.cols() && self.ech.rows() == other.ech.rows()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceOp {
    Sum,
    Intersect,
    QuotientBasis,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace { ech: Echelon::new(field, ambient) }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Self::from_vectors(field, ambient, (0..ambient).map(|i| unit(field, ambient, i)))
    }

    pub fn from_vectors(field: &F, ambient: usize, vs: impl IntoIterator<Item = Vec<F::Elem>>) -> Self {
        let mut ech = Echelon::new(field, ambient);
        for v in vs {
            if ech.rank() == ambient {
                break;
            }
            ech.insert(v);
        }
        Subspace { ech }
    }

    pub fn from_echelon(ech: Echelon<F>) -> Self {
        Subspace { ech }
    }

    /// Column space of a matrix.
    pub fn image(m: &Matrix<F>) -> Self {
        Self::from_vectors(m.field(), m.rows(), m.columns())
    }

    /// Null space of a matrix.
    pub fn kernel(m: &Matrix<F>) -> Self {
        Subspace { ech: m.rref().null_space() }
    }

    pub fn field(&self) -> &F {
        self.ech.field()
    }

    pub fn ambient(&self) -> usize {
        self.ech.cols()
    }
    pub fn dim(&self) -> usize {
        self.ech.rank()
    }
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        self.ech.rows()
    }
    pub fn pivots(&self) -> &[usize] {
        self.ech.pivots()
    }
    pub fn echelon(&self) -> &Echelon<F> {
        &self.ech
    }
    pub fn basis_matrix(&self) -> Matrix<F> {
        self.ech.to_matrix()
    }
    /// Inclusion map K^dim → ambient (basis vectors as columns).
    pub fn inclusion(&self) -> Matrix<F> {
        Matrix::from_columns(self.field(), self.ambient(), self.basis())
    }

    pub fn contains_vector(&self, v: &[F::Elem]) -> bool {
        self.ech.contains(v)
    }

    pub fn contains(&self, other: &Self) -> bool {
        other.basis().iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut ech = self.ech.clone();
        for v in other.basis() {
            ech.insert(v.clone());
        }
        Ok(Subspace { ech })
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field();
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Ok(Self::zero(f, self.ambient()));
        }
        // x = Σ aᵢuᵢ = Σ bⱼvⱼ  ⇔  [Uᵀ | −Vᵀ](a,b) = 0
        let ut = Matrix::from_columns(f, self.ambient(), self.basis());
        let vt = Matrix::from_columns(f, self.ambient(), other.basis()).neg();
        let k = Subspace::kernel(&ut.hstack(&vt));
        let vs = k.basis().iter().map(|c| ut.apply(&c[..a])).collect::<Vec<_>>();
        Ok(Self::from_vectors(f, self.ambient(), vs))
    }

    /// A complement of `self` inside `v` made of RREF rows of `v` whose pivots are
    /// not pivots of `self`.
    pub fn quotient_basis(&self, v: &Self) -> Result<Self> {
        self.check(v)?;
        if !v.contains(self) {
            return Err(Error::Input("quotient_basis: U is not contained in V".into()));
        }
        let mine = self.pivots();
        let vs = v
            .pivots()
            .iter()
            .zip(v.basis())
            .filter(|(p, _)| !mine.contains(p))
            .map(|(_, r)| r.clone());
        Ok(Self::from_vectors(self.field(), self.ambient(), vs))
    }

    /// Coordinates of the image of `x` in ambient/self, on the non-pivot unit
    /// vectors (the canonical complement).
    pub fn quotient_coords(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        let mut w = x.to_vec();
        self.ech.reduce(&mut w);
        let piv = self.pivots();
        w.into_iter().enumerate().filter(|(i, _)| !piv.contains(i)).map(|(_, a)| a).collect()
    }

    /// Non-pivot columns, the canonical complement used for quotients.
    pub fn complement_indices(&self) -> Vec<usize> {
        let piv = self.pivots();
        (0..self.ambient()).filter(|i| !piv.contains(i)).collect()
    }

    /// Projection matrix ambient → ambient/self in complement coordinates.
    pub fn quotient_projection(&self) -> Matrix<F> {
        let f = self.field();
        let n = self.ambient();
        let cols = (0..n).map(|i| self.quotient_coords(&unit(f, n, i))).collect::<Vec<_>>();
        Matrix::from_columns(f, n - self.dim(), &cols)
    }

    /// Coordinates of a vector of `self` in its RREF basis.
    pub fn coords(&self, x: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains_vector(x) {
            return None;
        }
        Some(self.pivots().iter().map(|p| x[*p].clone()).collect())
    }

    pub fn apply_op(&self, op: SubspaceOp, other: &Self) -> Result<Self> {
        match op {
            SubspaceOp::Sum => self.sum(other),
            SubspaceOp::Intersect => self.intersect(other),
            SubspaceOp::QuotientBasis => self.quotient_basis(other),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::Shape(format!("ambient dims {} vs {}", self.ambient(), other.ambient())));
        }
        Ok(())
    }
}

pub fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}
