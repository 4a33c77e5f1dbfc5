//! Exact linear algebra over ℚ and 𝔽_p.

pub mod field;
pub mod matrix;
pub mod solve;
pub mod sparse;
pub mod subspace;

pub use field::{is_prime, Field, PrimeField, Rationals, ScalarField};
pub use matrix::{Echelon, Matrix};
pub use solve::{solve_linear, AffineSystem, Solution};
pub use sparse::{sparsify, Accumulator, SparseMap};
pub use subspace::{unit, Subspace, SubspaceOp};

pub fn vzero<F: Field>(f: &F, n: usize) -> Vec<F::Elem> {
    vec![f.zero(); n]
}

pub fn vadd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vsub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vscale<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|x| f.mul(c, x)).collect()
}

pub fn vneg<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|x| f.neg(x)).collect()
}

pub fn vis_zero<F: Field>(f: &F, a: &[F::Elem]) -> bool {
    a.iter().all(|x| f.is_zero(x))
}

/// `acc += c·a`
pub fn vaxpy<F: Field>(f: &F, acc: &mut [F::Elem], c: &F::Elem, a: &[F::Elem]) {
    if f.is_zero(c) {
        return;
    }
    for (x, y) in acc.iter_mut().zip(a) {
        if !f.is_zero(y) {
            f.add_mul_assign(x, c, y);
        }
    }
}

/// Tensor product of coordinate vectors, second index fastest.
pub fn vtensor<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); a.len() * b.len()];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !f.is_zero(y) {
                out[i * b.len() + j] = f.mul(x, y);
            }
        }
    }
    out
}

/// Dot product.
pub fn vdot<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    let mut acc = f.zero();
    for (x, y) in a.iter().zip(b) {
        if !f.is_zero(x) && !f.is_zero(y) {
            f.add_mul_assign(&mut acc, x, y);
        }
    }
    acc
}

pub fn format_vec<F: Field>(f: &F, a: &[F::Elem]) -> Vec<String> {
    a.iter().map(|x| f.format(x)).collect()
}
