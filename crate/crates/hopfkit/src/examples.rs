//! Built-in test corpus: group algebras and their duals, Sweedler's algebra,
//! Taft algebras, the pointed Hopf algebras H(a) of dimension p⁴, and a few
//! plain algebras.

use std::collections::BTreeMap;

use crate::algcore::AlgebraObject;
use crate::cocore::CoalgebraObject;
use crate::error::{Error, Result};
use crate::exactlin::{unit, vtensor, Field, Matrix, SparseMap};
use crate::hopfcore::{tensor_square_product, upgrade_to_hopf, BialgebraObject, HopfObject};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum ExampleSpec {
    GroupAlgebra { n: usize },
    DualGroupAlgebra { n: usize },
    SweedlerH4,
    Taft { n: usize, lambda: String },
    Ha { p: u64, lambda: String, a: String },
}

pub fn builtin<F: Field>(spec: &ExampleSpec, f: &F) -> Result<HopfObject<F>> {
    match spec {
        ExampleSpec::GroupAlgebra { n } => group_algebra(f, *n),
        ExampleSpec::DualGroupAlgebra { n } => dual_group_algebra(f, *n),
        ExampleSpec::SweedlerH4 => sweedler_h4(f),
        ExampleSpec::Taft { n, lambda } => taft(f, *n, &f.parse(lambda)?),
        ExampleSpec::Ha { p, lambda, a } => build_ha(f, *p, &f.parse(lambda)?, &f.parse(a)?),
    }
}

fn power_label(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn monomial_label(parts: &[(&str, usize)]) -> String {
    let s: String = parts.iter().map(|(b, e)| power_label(b, *e)).collect();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Builds Δ, ε and the antipode by multiplicative extension: basis element k
/// equals the product of the generators listed in `words[k]`.
pub fn extend_from_words<F: Field>(
    alg: &AlgebraObject<F>,
    words: &[Vec<usize>],
    gen_comul: &[Vec<(usize, F::Elem)>],
    gen_counit: &[F::Elem],
    gen_antipode: &[Vec<F::Elem>],
) -> Result<(CoalgebraObject<F>, Matrix<F>)> {
    let f = &alg.field;
    let n = alg.dim;
    let one2 = crate::exactlin::sparsify(f, &vtensor(f, &alg.unit, &alg.unit));
    let mut comul_cols = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    let mut s_cols = Vec::with_capacity(n);
    for w in words {
        let mut d = one2.clone();
        let mut e = f.one();
        let mut s = alg.unit.clone();
        for &g in w {
            d = tensor_square_product(alg, &d, &gen_comul[g]).into_iter().collect();
            e = f.mul(&e, &gen_counit[g]);
            s = alg.mul_vec(&gen_antipode[g], &s);
        }
        let mut dense = vec![f.zero(); n * n];
        for (p, c) in d {
            dense[p] = c;
        }
        comul_cols.push(dense);
        counit.push(e);
        s_cols.push(s);
    }
    let coalg = CoalgebraObject::new(f, alg.labels.clone(), SparseMap::from_columns(f, n * n, comul_cols), counit)?;
    Ok((coalg, Matrix::from_columns(f, n, &s_cols)))
}

fn finish<F: Field>(alg: AlgebraObject<F>, coalg: CoalgebraObject<F>, s: Matrix<F>) -> Result<HopfObject<F>> {
    let b = BialgebraObject::new(alg, coalg)?;
    b.validate().ensure("builtin bialgebra")?;
    upgrade_to_hopf(&b, Some(&s))
}

/// K[Zₙ] with basis 1, g, …, g^{n−1}.
pub fn group_algebra<F: Field>(f: &F, n: usize) -> Result<HopfObject<F>> {
    if n == 0 {
        return Err(Error::Input("group order must be positive".into()));
    }
    let labels = (0..n).map(|i| monomial_label(&[("g", i)])).collect::<Vec<_>>();
    let alg = AlgebraObject::from_products(f, labels.clone(), unit(f, n, 0), |i, j| unit(f, n, (i + j) % n))?;
    let coalg = CoalgebraObject::from_coproducts(f, labels, vec![f.one(); n], |i| unit(f, n * n, i * n + i))?;
    let s = Matrix::from_fn(f, n, n, |r, c| if r == (n - c) % n { f.one() } else { f.zero() });
    finish(alg, coalg, s)
}

/// K^{Zₙ}, the dual of K[Zₙ], on the dual basis.
pub fn dual_group_algebra<F: Field>(f: &F, n: usize) -> Result<HopfObject<F>> {
    let h = group_algebra(f, n)?.dual();
    h.validate().ensure("dual group algebra")?;
    Ok(h)
}

/// Taft algebra: gⁿ = 1, xⁿ = 0, xg = λgx, Δg = g⊗g, Δx = x⊗1 + g⊗x.
/// Basis gⁱxʲ at index j·n + i.
pub fn taft<F: Field>(f: &F, n: usize, lambda: &F::Elem) -> Result<HopfObject<F>> {
    check_root(f, n as u64, lambda)?;
    let dim = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    let labels = (0..dim).map(|k| monomial_label(&[("g", k % n), ("x", k / n)])).collect::<Vec<_>>();
    let alg = AlgebraObject::from_products(f, labels, unit(f, dim, 0), |u, v| {
        let (a, b) = (u % n, u / n);
        let (c, d) = (v % n, v / n);
        let mut out = vec![f.zero(); dim];
        if b + d < n {
            // x^b g^c = λ^{bc} g^c x^b
            out[idx((a + c) % n, b + d)] = f.pow(lambda, (b * c) as u64);
        }
        out
    })?;
    let (g, x) = (idx(1, 0), idx(0, 1));
    let words = (0..dim).map(|k| [vec![0; k % n], vec![1; k / n]].concat()).collect::<Vec<_>>();
    let gen_comul = vec![vec![(g * dim + g, f.one())], vec![(x * dim, f.one()), (g * dim + x, f.one())]];
    let ginv = idx(n - 1, 0);
    let s_x = crate::exactlin::vneg(f, &alg.mul_vec(&unit(f, dim, ginv), &unit(f, dim, x)));
    let gen_antipode = vec![unit(f, dim, ginv), s_x];
    let (coalg, s) = extend_from_words(&alg, &words, &gen_comul, &[f.one(), f.zero()], &gen_antipode)?;
    finish(alg, coalg, s)
}

/// Sweedler's four-dimensional algebra on 1, g, x, gx: xg = −gx, x² = 0,
/// Δx = x⊗1 + g⊗x, S(x) = −gx.
pub fn sweedler_h4<F: Field>(f: &F) -> Result<HopfObject<F>> {
    taft(f, 2, &f.from_i64(-1))
}

fn check_root<F: Field>(f: &F, n: u64, lambda: &F::Elem) -> Result<()> {
    if n < 2 {
        return Err(Error::Input("root order must be at least 2".into()));
    }
    if !f.is_one(&f.pow(lambda, n)) {
        return Err(Error::Input(format!("λ^{n} ≠ 1")));
    }
    for d in 1..n {
        if n.is_multiple_of(d) && f.is_one(&f.pow(lambda, d)) {
            return Err(Error::Input(format!("λ is not a primitive {n}-th root of unity")));
        }
    }
    Ok(())
}

/// H(a) for an odd prime p: c^{p²} = 1, x₁ᵖ = x₂ᵖ = cᵖ − 1, x₁c = λ⁻¹cx₁,
/// x₂c = λcx₂, x₂x₁ = λx₁x₂ + a(c² − 1), c grouplike, xᵢ (c,1)-primitive.
/// Basis cⁱx₁ʲx₂ʳ at index (i·p + j)·p + r. Any field with a primitive p-th
/// root λ will do, finite ones included.
pub fn build_ha<F: Field>(f: &F, p: u64, lambda: &F::Elem, a: &F::Elem) -> Result<HopfObject<F>> {
    if p < 3 || !crate::exactlin::is_prime(p) {
        return Err(Error::Input("p must be an odd prime".into()));
    }
    if f.characteristic() == p {
        return Err(Error::Input("characteristic must differ from p".into()));
    }
    if f.is_zero(a) {
        return Err(Error::Input("a must be nonzero".into()));
    }
    check_root(f, p, lambda)?;
    let nf = HaNormalForm::new(f, p as usize, lambda, a);
    let dim = nf.dim();
    let pp = p as usize;
    let labels = (0..dim)
        .map(|k| {
            let (i, j, r) = nf.split(k);
            monomial_label(&[("c", i), ("x1", j), ("x2", r)])
        })
        .collect::<Vec<_>>();
    let words = (0..dim)
        .map(|k| {
            let (i, j, r) = nf.split(k);
            [vec![0; i], vec![1; j], vec![2; r]].concat()
        })
        .collect::<Vec<_>>();
    let alg = AlgebraObject::from_products(f, labels, unit(f, dim, 0), |u, v| {
        let mut cur = BTreeMap::from([(u, f.one())]);
        for &g in &words[v] {
            cur = nf.right_mul(&cur, g);
        }
        let mut out = vec![f.zero(); dim];
        for (k, c) in cur {
            out[k] = c;
        }
        out
    })?;
    let c = nf.index(1, 0, 0);
    let x1 = nf.index(0, 1, 0);
    let x2 = nf.index(0, 0, 1);
    let gen_comul = vec![
        vec![(c * dim + c, f.one())],
        vec![(c * dim + x1, f.one()), (x1 * dim, f.one())],
        vec![(c * dim + x2, f.one()), (x2 * dim, f.one())],
    ];
    let cinv = nf.index(pp * pp - 1, 0, 0);
    let s_of = |x: usize| crate::exactlin::vneg(f, &alg.mul_vec(&unit(f, dim, cinv), &unit(f, dim, x)));
    let gen_antipode = vec![unit(f, dim, cinv), s_of(x1), s_of(x2)];
    let (coalg, s) = extend_from_words(&alg, &words, &gen_comul, &[f.one(), f.zero(), f.zero()], &gen_antipode)?;
    finish(alg, coalg, s)
}

/// Right multiplication by generators on normal-form monomials of H(a).
struct HaNormalForm<'a, F: Field> {
    f: &'a F,
    p: usize,
    lambda: F::Elem,
    lambda_inv: F::Elem,
    a: F::Elem,
}

impl<'a, F: Field> HaNormalForm<'a, F> {
    fn new(f: &'a F, p: usize, lambda: &F::Elem, a: &F::Elem) -> Self {
        let lambda_inv = f.inv(lambda).expect("λ is a root of unity");
        HaNormalForm { f, p, lambda: lambda.clone(), lambda_inv, a: a.clone() }
    }
    fn dim(&self) -> usize {
        self.p.pow(4)
    }
    fn index(&self, i: usize, j: usize, r: usize) -> usize {
        ((i % (self.p * self.p)) * self.p + j) * self.p + r
    }
    fn split(&self, k: usize) -> (usize, usize, usize) {
        (k / (self.p * self.p), (k / self.p) % self.p, k % self.p)
    }

    fn add(&self, acc: &mut BTreeMap<usize, F::Elem>, k: usize, c: F::Elem) {
        let f = self.f;
        let e = acc.entry(k).or_insert_with(|| f.zero());
        *e = f.add(e, &c);
        if f.is_zero(e) {
            acc.remove(&k);
        }
    }

    fn right_mul(&self, x: &BTreeMap<usize, F::Elem>, g: usize) -> BTreeMap<usize, F::Elem> {
        let mut out = BTreeMap::new();
        for (k, c) in x {
            for (m, d) in self.mono_times(*k, g) {
                self.add(&mut out, m, self.f.mul(c, &d));
            }
        }
        out
    }

    /// (cⁱx₁ʲx₂ʳ)·generator, generators 0 = c, 1 = x₁, 2 = x₂.
    fn mono_times(&self, k: usize, g: usize) -> BTreeMap<usize, F::Elem> {
        let f = self.f;
        let p = self.p;
        let (i, j, r) = self.split(k);
        let mut out = BTreeMap::new();
        match g {
            0 => {
                // x₁ʲx₂ʳc = λ^{r−j} c x₁ʲx₂ʳ
                let coef = f.mul(&f.pow(&self.lambda, r as u64), &f.pow(&self.lambda_inv, j as u64));
                self.add(&mut out, self.index(i + 1, j, r), coef);
            }
            2 => {
                if r + 1 < p {
                    self.add(&mut out, self.index(i, j, r + 1), f.one());
                } else {
                    // x₂ᵖ = cᵖ − 1, and x₁ʲcᵖ = cᵖx₁ʲ since λᵖ = 1
                    self.add(&mut out, self.index(i + p, j, 0), f.one());
                    self.add(&mut out, self.index(i, j, 0), f.neg(&f.one()));
                }
            }
            1 if r == 0 => {
                if j + 1 < p {
                    self.add(&mut out, self.index(i, j + 1, 0), f.one());
                } else {
                    self.add(&mut out, self.index(i + p, 0, 0), f.one());
                    self.add(&mut out, self.index(i, 0, 0), f.neg(&f.one()));
                }
            }
            1 => {
                // m'x₂x₁ = λ(m'x₁)x₂ + a m'c² − a m'
                let base = BTreeMap::from([(self.index(i, j, r - 1), f.one())]);
                let t = self.right_mul(&self.right_mul(&base, 1), 2);
                for (m, c) in t {
                    self.add(&mut out, m, f.mul(&self.lambda, &c));
                }
                let t = self.right_mul(&self.right_mul(&base, 0), 0);
                for (m, c) in t {
                    self.add(&mut out, m, f.mul(&self.a, &c));
                }
                self.add(&mut out, self.index(i, j, r - 1), f.neg(&self.a));
            }
            _ => unreachable!("three generators"),
        }
        out
    }
}

/// K[x]/(xⁿ) on 1, x, …, x^{n−1}.
pub fn truncated_polynomial<F: Field>(f: &F, n: usize) -> Result<AlgebraObject<F>> {
    let labels = (0..n).map(|i| monomial_label(&[("x", i)])).collect();
    AlgebraObject::from_products(f, labels, unit(f, n, 0), |i, j| {
        let mut v = vec![f.zero(); n];
        if i + j < n {
            v[i + j] = f.one();
        }
        v
    })
}

/// Upper-triangular n×n matrices on the units e_{ij}, i ≤ j, in row order.
pub fn upper_triangular<F: Field>(f: &F, n: usize) -> Result<AlgebraObject<F>> {
    let pairs = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect::<Vec<_>>();
    matrix_units(f, n, &pairs)
}

/// Full n×n matrices on the units e_{ij} in row order.
pub fn matrix_algebra<F: Field>(f: &F, n: usize) -> Result<AlgebraObject<F>> {
    let pairs = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect::<Vec<_>>();
    matrix_units(f, n, &pairs)
}

/// Diagonal n×n matrices.
pub fn diagonal_algebra<F: Field>(f: &F, n: usize) -> Result<AlgebraObject<F>> {
    let pairs = (0..n).map(|i| (i, i)).collect::<Vec<_>>();
    matrix_units(f, n, &pairs)
}

fn matrix_units<F: Field>(f: &F, n: usize, pairs: &[(usize, usize)]) -> Result<AlgebraObject<F>> {
    let d = pairs.len();
    let pos = |ij: (usize, usize)| pairs.iter().position(|&q| q == ij);
    let labels = pairs.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)).collect();
    let mut one = vec![f.zero(); d];
    for i in 0..n {
        one[pos((i, i)).expect("diagonal units present")] = f.one();
    }
    AlgebraObject::from_products(f, labels, one, |a, b| {
        let (i, j) = pairs[a];
        let (k, l) = pairs[b];
        let mut v = vec![f.zero(); d];
        if j == k {
            v[pos((i, l)).expect("closed under products")] = f.one();
        }
        v
    })
}
