//! Shared helpers for integration tests: random invertible matrices, algebras in
//! a random basis, and a naive Hochschild oracle over 𝔽_p.
#![allow(dead_code)]

use hopfkit::algcore::{AlgebraObject, BimoduleObject};
use hopfkit::examples::{diagonal_algebra, group_algebra, matrix_algebra, truncated_polynomial, upper_triangular};
use hopfkit::exactlin::{Field, Matrix, PrimeField, Rationals};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_invertible<F: Field>(f: &F, n: usize, rng: &mut ChaCha8Rng) -> Matrix<F> {
    loop {
        let m = Matrix::from_fn(f, n, n, |_, _| f.from_i64(rng.gen_range(-2..=2)));
        if m.rank() == n {
            return m;
        }
    }
}

/// The same algebra written in the basis given by the columns of `q`.
pub fn conjugate_algebra<F: Field>(a: &AlgebraObject<F>, q: &Matrix<F>) -> AlgebraObject<F> {
    let f = &a.field;
    let qi = q.inverse().unwrap();
    let labels = (0..a.dim).map(|i| format!("b{i}")).collect();
    AlgebraObject::from_products(f, labels, qi.apply(&a.unit), |i, j| qi.apply(&a.mul_vec(&q.col(i), &q.col(j)))).unwrap()
}

/// One of a handful of small algebra families, in a random basis.
pub fn random_algebra<F: Field>(f: &F, rng: &mut ChaCha8Rng) -> AlgebraObject<F> {
    let a = match rng.gen_range(0..6) {
        0 => truncated_polynomial(f, rng.gen_range(1..=3)).unwrap(),
        1 => upper_triangular(f, 2).unwrap(),
        2 => diagonal_algebra(f, rng.gen_range(1..=3)).unwrap(),
        3 => group_algebra(f, rng.gen_range(2..=3)).unwrap().alg().clone(),
        4 => matrix_algebra(f, 1).unwrap(),
        _ => truncated_polynomial(f, 2).unwrap().tensor(&truncated_polynomial(f, 2).unwrap()),
    };
    let q = random_invertible(f, a.dim, rng);
    conjugate_algebra(&a, &q)
}

/// A or A* as a bimodule, in a random basis.
pub fn random_bimodule<F: Field>(a: &AlgebraObject<F>, rng: &mut ChaCha8Rng) -> BimoduleObject<F> {
    let m = if rng.gen_bool(0.5) { BimoduleObject::regular(a) } else { BimoduleObject::dual_of_regular(a) };
    let p = random_invertible(&a.field, m.dim, rng);
    m.change_basis(a.dim, a.dim, &p)
}

pub fn random_matrix<F: Field>(f: &F, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix<F> {
    Matrix::from_fn(f, rows, cols, |_, _| f.from_i64(rng.gen_range(-3..=3)))
}

/// Structure constants copied into plain integer arrays, reduced mod p when
/// `p` is nonzero.
pub struct Raw {
    pub p: u64,
    pub n: usize,
    pub d: usize,
    /// mul[i][j][k]: coefficient of e_k in e_i e_j
    pub mul: Vec<Vec<Vec<i64>>>,
    /// left[a][i][j]: coefficient of m_i in e_a·m_j
    pub left: Vec<Vec<Vec<i64>>>,
    pub right: Vec<Vec<Vec<i64>>>,
}

fn raw_with<F: Field>(f: &F, p: u64, a: &AlgebraObject<F>, m: &BimoduleObject<F>, conv: impl Fn(&F::Elem) -> i64) -> Raw {
    let n = a.dim;
    let d = m.dim;
    let mul = (0..n)
        .map(|i| (0..n).map(|j| a.mul_vec(&a.basis(i), &a.basis(j)).iter().map(&conv).collect()).collect())
        .collect();
    let ops = |right: bool| {
        (0..n)
            .map(|x| {
                let op = if right { m.right_op(n, &a.basis(x)) } else { m.left_op(n, &a.basis(x)) };
                (0..d).map(|i| op.row(i).iter().map(&conv).collect()).collect()
            })
            .collect()
    };
    let _ = f;
    Raw { p, n, d, mul, left: ops(false), right: ops(true) }
}

pub fn raw(f: &PrimeField, a: &AlgebraObject<PrimeField>, m: &BimoduleObject<PrimeField>) -> Raw {
    raw_with(f, f.modulus(), a, m, |c| *c as i64)
}

/// Over ℚ; all structure constants must be integers.
pub fn raw_q(a: &AlgebraObject<Rationals>, m: &BimoduleObject<Rationals>) -> Raw {
    raw_with(&Rationals, 0, a, m, |c| {
        assert!(c.is_integer(), "non-integer structure constant");
        i64::try_from(c.to_integer()).expect("small structure constant")
    })
}

impl Raw {
    /// Dense matrix of bᵏ: C(A^⊗k, M) → C(A^⊗(k+1), M), both flattened as
    /// (m, a₁…a_k) ↦ m·nᵏ + index(a₁…a_k), straight from the defining sums.
    pub fn coboundary_matrix(&self, k: usize) -> Vec<Vec<i64>> {
        let (n, d) = (self.n, self.d);
        let src = n.pow(k as u32);
        let tgt = n.pow(k as u32 + 1);
        let mut out = vec![vec![0i64; d * src]; d * tgt];
        let add = |row: &mut Vec<i64>, col: usize, c: i64| row[col] += c;
        for t in 0..tgt {
            // digits of the (k+1)-tuple, most significant first
            let mut digits = vec![0usize; k + 1];
            let mut r = t;
            for slot in digits.iter_mut().rev() {
                *slot = r % n;
                r /= n;
            }
            let idx = |ds: &[usize]| ds.iter().fold(0, |acc, x| acc * n + x);
            for i in 0..d {
                let row = &mut out[i * tgt + t];
                // a₀·f(a₁…a_k)
                for j in 0..d {
                    let c = self.left[digits[0]][i][j];
                    if c != 0 {
                        add(row, j * src + idx(&digits[1..]), c);
                    }
                }
                // Σ (−1)^s f(…, a_s a_{s+1}, …)
                for s in 0..k {
                    let sign = if (s + 1) % 2 == 1 { -1 } else { 1 };
                    for (q, c) in self.mul[digits[s]][digits[s + 1]].iter().enumerate() {
                        if *c != 0 {
                            let mut ds = digits[..s].to_vec();
                            ds.push(q);
                            ds.extend_from_slice(&digits[s + 2..]);
                            add(row, i * src + idx(&ds), c * sign);
                        }
                    }
                }
                // (−1)^{k+1} f(a₀…a_{k−1})·a_k
                let sign = if (k + 1) % 2 == 1 { -1 } else { 1 };
                for j in 0..d {
                    let c = self.right[digits[k]][i][j];
                    if c != 0 {
                        add(row, j * src + idx(&digits[..k]), c * sign);
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self, m: Vec<Vec<i64>>) -> usize {
        if self.p == 0 {
            rank_over_q(m)
        } else {
            let p = self.p as i64;
            rank_mod_p(m.into_iter().map(|r| r.into_iter().map(|x| x.rem_euclid(p) as u64).collect()).collect(), self.p)
        }
    }
}

/// Fraction-free (Bareiss) elimination over the integers.
pub fn rank_over_q(m: Vec<Vec<i64>>) -> usize {
    let mut m: Vec<Vec<i128>> = m.into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        for r in rank + 1..m.len() {
            for k in c + 1..cols {
                m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
    }
    rank
}

pub fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let pw = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = pw(m[rank][c], p - 2);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let factor = m[r][c];
                let src = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&src) {
                    *x = (*x + p - factor * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// dim Hᵏ from ranks of the oracle matrices (k ≤ 2).
pub fn oracle_cohomology_dim(r: &Raw, k: usize) -> usize {
    let dim_ck = r.d * r.n.pow(k as u32);
    let rk = r.rank(r.coboundary_matrix(k));
    let rprev = if k == 0 { 0 } else { r.rank(r.coboundary_matrix(k - 1)) };
    dim_ck - rk - rprev
}
