//! Smash products, Yetter–Drinfeld quadruples (both variants), bosonization
//! and extraction of quadruples from split bialgebras.

use crate::algcore::AlgebraObject;
use crate::cocore::CoalgebraObject;
use crate::error::{Error, Result};
use crate::exactlin::{unit, vaxpy, vtensor, Field, Matrix, SparseMap, Subspace};
use crate::hopfcore::{BialgebraObject, HopfObject};
use crate::monocat::YDObject;
use crate::report::Report;

/// Names of the eleven relations of a quadruple, in order.
pub const QUADRUPLE_AXIOMS: [&str; 11] = [
    "counit is a Yetter-Drinfeld morphism",
    "counit is an algebra map",
    "comultiplication is colinear",
    "cocycle is colinear",
    "comultiplication is multiplicative",
    "cocycle condition",
    "twisted linearity",
    "twisted coassociativity",
    "cocycle compatibility",
    "comultiplication is counital",
    "cocycle is counital",
];

/// Names of the eleven relations of a dual quadruple, in order.
pub const DUAL_QUADRUPLE_AXIOMS: [&str; 11] = [
    "unit is invariant and coinvariant",
    "unit is grouplike",
    "multiplication is linear",
    "cocycle is linear",
    "multiplication is a coalgebra map",
    "cocycle condition",
    "twisted colinearity",
    "twisted associativity",
    "cocycle compatibility",
    "multiplication is unital",
    "cocycle is unital",
];

/// (R, ε, δ, ω) over H: R an algebra in ᴴᴴYD, δ: R → R⊗R (dim R² × dim R),
/// ω: H → R⊗R (dim R² × dim H).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDQuadruple<F: Field> {
    pub h: HopfObject<F>,
    pub yd: YDObject<F>,
    pub alg: AlgebraObject<F>,
    pub epsilon: Vec<F::Elem>,
    pub delta: Matrix<F>,
    pub omega: Matrix<F>,
}

/// (R, 1, m, ξ) over H: R a coalgebra in ᴴᴴYD, m: R⊗R → R (dim R × dim R²),
/// ξ: R⊗R → H (dim H × dim R²).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualYDQuadruple<F: Field> {
    pub h: HopfObject<F>,
    pub yd: YDObject<F>,
    pub coalg: CoalgebraObject<F>,
    pub one: Vec<F::Elem>,
    pub m: Matrix<F>,
    pub xi: Matrix<F>,
}

/// Precomputed actions and coactions on basis vectors of a YD module.
struct Yd<'a, F: Field> {
    h: &'a HopfObject<F>,
    f: F,
    n: usize,
    r: usize,
    /// act[l][c] = ^{e_l} e_c
    act: Vec<Vec<Vec<F::Elem>>>,
    /// coact[c] = Σ κ e_l ⊗ e_v as (l, v, κ)
    coact: Vec<Vec<(usize, usize, F::Elem)>>,
}

impl<'a, F: Field> Yd<'a, F> {
    fn new(h: &'a HopfObject<F>, yd: &YDObject<F>) -> Self {
        let f = h.field().clone();
        let n = h.dim();
        let r = yd.dim;
        let act = (0..n).map(|l| (0..r).map(|c| yd.act(&h.basis(l), &unit(&f, r, c))).collect()).collect();
        let coact = (0..r).map(|c| yd.coaction.col(c).iter().map(|(p, k)| (p / r, p % r, k.clone())).collect()).collect();
        Yd { h, f, n, r, act, coact }
    }

    fn act_vec(&self, hv: &[F::Elem], x: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.f;
        let mut out = vec![f.zero(); self.r];
        for (l, a) in hv.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
            for (c, b) in x.iter().enumerate().filter(|(_, b)| !f.is_zero(b)) {
                vaxpy(f, &mut out, &f.mul(a, b), &self.act[l][c]);
            }
        }
        out
    }

    /// ρ on R: vector of H⊗R (index l·r + v).
    fn coact_vec(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.f;
        let mut out = vec![f.zero(); self.n * self.r];
        for (c, a) in x.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
            for (l, v, k) in &self.coact[c] {
                f.add_mul_assign(&mut out[l * self.r + v], a, k);
            }
        }
        out
    }

    /// ʰ(x⊗y) = ^{h₁}x ⊗ ^{h₂}y on R⊗R.
    fn act2(&self, hv: &[F::Elem], x: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.f;
        let (n, r) = (self.n, self.r);
        let mut out = vec![f.zero(); r * r];
        for (l, a) in hv.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
            for (p, c) in self.h.comul_basis(l) {
                let (l1, l2) = (p / n, p % n);
                let ac = f.mul(a, c);
                for (q, b) in x.iter().enumerate().filter(|(_, b)| !f.is_zero(b)) {
                    let t = vtensor(f, &self.act[l1][q / r], &self.act[l2][q % r]);
                    vaxpy(f, &mut out, &f.mul(&ac, b), &t);
                }
            }
        }
        out
    }

    /// ρ on R⊗R: x⊗y ↦ x₋₁y₋₁ ⊗ x₀ ⊗ y₀, index (l·r + i)·r + j.
    fn coact2(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.f;
        let (n, r) = (self.n, self.r);
        let mut out = vec![f.zero(); n * r * r];
        for (q, b) in x.iter().enumerate().filter(|(_, b)| !f.is_zero(b)) {
            for (l1, v1, k1) in &self.coact[q / r] {
                for (l2, v2, k2) in &self.coact[q % r] {
                    let hh = self.h.mul_vec(&self.h.basis(*l1), &self.h.basis(*l2));
                    let c = f.mul(b, &f.mul(k1, k2));
                    for (l, z) in hh.iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
                        f.add_mul_assign(&mut out[(l * r + v1) * r + v2], &c, z);
                    }
                }
            }
        }
        out
    }

    /// (a⊗b)(c⊗d) = a(^{b₋₁}c) ⊗ b₀d in the braided algebra R⊗R.
    fn braided_mul(&self, alg: &AlgebraObject<F>, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.f;
        let r = self.r;
        let mut out = vec![f.zero(); r * r];
        for (p, xv) in x.iter().enumerate().filter(|(_, v)| !f.is_zero(v)) {
            let (a, b) = (p / r, p % r);
            for (q, yv) in y.iter().enumerate().filter(|(_, v)| !f.is_zero(v)) {
                let (c, d) = (q / r, q % r);
                for (l, v, k) in &self.coact[b] {
                    let left = alg.mul_vec(&alg.basis(a), &self.act[*l][c]);
                    let right = alg.mul_vec(&alg.basis(*v), &alg.basis(d));
                    vaxpy(f, &mut out, &f.mul(&f.mul(xv, yv), k), &vtensor(f, &left, &right));
                }
            }
        }
        out
    }

    /// δ_{R⊗R}(r⊗s) = r₁ ⊗ ^{r₂₋₁}s₁ ⊗ r₂₀ ⊗ s₂, as a vector of (R⊗R)⊗(R⊗R).
    fn braided_comul(&self, c: &CoalgebraObject<F>, x: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.f;
        let r = self.r;
        let rr = r * r;
        let mut out = vec![f.zero(); rr * rr];
        for (p, xv) in x.iter().enumerate().filter(|(_, v)| !f.is_zero(v)) {
            let (a, b) = (p / r, p % r);
            for (pa, ca) in c.comul_basis(a) {
                let (a1, a2) = (pa / r, pa % r);
                for (l, v, k) in &self.coact[a2] {
                    for (pb, cb) in c.comul_basis(b) {
                        let (b1, b2) = (pb / r, pb % r);
                        let coef = f.mul(&f.mul(xv, ca), &f.mul(k, cb));
                        for (s, z) in self.act[*l][b1].iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
                            let idx = (a1 * r + s) * rr + v * r + b2;
                            f.add_mul_assign(&mut out[idx], &coef, z);
                        }
                    }
                }
            }
        }
        out
    }
}

/// m(e_a ⊗ v) for m: R⊗R → W.
fn apply_on_slot<F: Field>(f: &F, m: &Matrix<F>, a: usize, r: usize, v: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); m.rows()];
    for (s, c) in v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
        for (i, o) in out.iter_mut().enumerate() {
            f.add_mul_assign(o, c, m.get(i, a * r + s));
        }
    }
    out
}

fn apply_cols<F: Field>(f: &F, m: &Matrix<F>, x: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); m.rows()];
    for (j, c) in x.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
        for (i, o) in out.iter_mut().enumerate() {
            let v = m.get(i, j);
            if !f.is_zero(v) {
                f.add_mul_assign(o, c, v);
            }
        }
    }
    out
}

/// Structure checks for R as an algebra in ᴴᴴYD.
pub fn validate_yd_algebra<F: Field>(h: &HopfObject<F>, yd: &YDObject<F>, alg: &AlgebraObject<F>) -> Report {
    let mut rep = Report::new();
    rep.absorb("module: ", yd.validate(h));
    rep.absorb("algebra: ", alg.validate());
    if yd.dim != alg.dim {
        rep.fail("dimensions", format!("module {} vs algebra {}", yd.dim, alg.dim));
        return rep;
    }
    let t = Yd::new(h, yd);
    let f = h.field();
    let r = alg.dim;
    let mut wl = None;
    let mut wc = None;
    for a in 0..r {
        for b in 0..r {
            let ab = alg.mul_vec(&alg.basis(a), &alg.basis(b));
            if wl.is_none() {
                for l in 0..t.n {
                    let lhs = t.act_vec(&h.basis(l), &ab);
                    let both = t.act2(&h.basis(l), &vtensor(f, &alg.basis(a), &alg.basis(b)));
                    if lhs != apply_cols(f, &alg.mul.to_dense(), &both) {
                        wl = Some(format!("(h{l}, r{a}, r{b})"));
                        break;
                    }
                }
            }
            if wc.is_none() {
                let lhs = t.coact_vec(&ab);
                let co = t.coact2(&vtensor(f, &alg.basis(a), &alg.basis(b)));
                let mut rhs = vec![f.zero(); t.n * r];
                for l in 0..t.n {
                    let slice = &co[l * r * r..(l + 1) * r * r];
                    let m = apply_cols(f, &alg.mul.to_dense(), slice);
                    rhs[l * r..(l + 1) * r].clone_from_slice(&m);
                }
                if lhs != rhs {
                    wc = Some(format!("(r{a}, r{b})"));
                }
            }
        }
    }
    rep.record("multiplication is linear", wl);
    rep.record("multiplication is colinear", wc);
    let one = &alg.unit;
    let mut w = None;
    for l in 0..t.n {
        if t.act_vec(&h.basis(l), one) != crate::exactlin::vscale(f, &h.counit()[l], one) {
            w = Some(format!("h{l}"));
            break;
        }
    }
    rep.record("unit is invariant", w);
    rep.check("unit is coinvariant", t.coact_vec(one) == vtensor(f, &h.one(), one), || "ρ(1) ≠ 1⊗1".into());
    rep
}

/// Structure checks for R as a coalgebra in ᴴᴴYD.
pub fn validate_yd_coalgebra<F: Field>(h: &HopfObject<F>, yd: &YDObject<F>, c: &CoalgebraObject<F>) -> Report {
    let mut rep = Report::new();
    rep.absorb("module: ", yd.validate(h));
    rep.absorb("coalgebra: ", c.validate());
    if yd.dim != c.dim {
        rep.fail("dimensions", format!("module {} vs coalgebra {}", yd.dim, c.dim));
        return rep;
    }
    let t = Yd::new(h, yd);
    let f = h.field();
    let r = c.dim;
    let mut wl = None;
    let mut wc = None;
    let mut we = None;
    for a in 0..r {
        let ea = c.basis(a);
        let da = c.comul_vec(&ea);
        for l in 0..t.n {
            let hl = h.basis(l);
            if wl.is_none() && c.comul_vec(&t.act_vec(&hl, &ea)) != t.act2(&hl, &da) {
                wl = Some(format!("(h{l}, r{a})"));
            }
            if we.is_none() && c.counit_of(&t.act_vec(&hl, &ea)) != f.mul(&h.counit()[l], &c.counit[a]) {
                we = Some(format!("(h{l}, r{a})"));
            }
        }
        // (H⊗δ)ρ = ρ_{R⊗R}δ
        let co = t.coact_vec(&ea);
        let mut lhs = vec![f.zero(); t.n * r * r];
        for (p, k) in co.iter().enumerate().filter(|(_, k)| !f.is_zero(k)) {
            let (l, v) = (p / r, p % r);
            vaxpy(f, &mut lhs, k, &vtensor(f, &h.basis(l), &c.comul_vec(&c.basis(v))));
        }
        if wc.is_none() && lhs != t.coact2(&da) {
            wc = Some(format!("r{a}"));
        }
        let mut ce = vec![f.zero(); t.n];
        for (p, k) in co.iter().enumerate().filter(|(_, k)| !f.is_zero(k)) {
            f.add_mul_assign(&mut ce[p / r], k, &c.counit[p % r]);
        }
        if we.is_none() && ce != crate::exactlin::vscale(f, &c.counit[a], &h.one()) {
            we = Some(format!("coaction at r{a}"));
        }
    }
    rep.record("comultiplication is linear", wl);
    rep.record("comultiplication is colinear", wc);
    rep.record("counit is a Yetter-Drinfeld morphism", we);
    rep
}

fn first_failure(
    count: usize,
    bad: impl FnMut(usize) -> Option<String>,
) -> Option<String> {
    (0..count).find_map(bad)
}

impl<F: Field> YDQuadruple<F> {
    pub fn field(&self) -> &F {
        self.h.field()
    }
    pub fn r_dim(&self) -> usize {
        self.alg.dim
    }

    fn shapes(&self) -> Option<String> {
        let (r, n) = (self.alg.dim, self.h.dim());
        if self.yd.dim != r || self.epsilon.len() != r || self.delta.rows() != r * r || self.delta.cols() != r {
            return Some("R data shapes".into());
        }
        if self.omega.rows() != r * r || self.omega.cols() != n {
            return Some("ω shape".into());
        }
        None
    }

    /// ω(h) = ε(h)·1⊗1 for every h.
    pub fn omega_is_trivial(&self) -> bool {
        let f = self.field();
        let one = vtensor(f, &self.alg.unit, &self.alg.unit);
        (0..self.h.dim()).all(|l| self.omega.col(l) == crate::exactlin::vscale(f, &self.h.counit()[l], &one))
    }

    /// Prerequisites (prefixed "R: ") and the eleven relations by name.
    pub fn validate(&self) -> Report {
        let mut rep = Report::new();
        if let Some(w) = self.shapes() {
            rep.fail("shapes", w);
            return rep;
        }
        rep.absorb("R: ", validate_yd_algebra(&self.h, &self.yd, &self.alg));
        let h = &self.h;
        let f = h.field().clone();
        let t = Yd::new(h, &self.yd);
        let (r, n) = (self.alg.dim, h.dim());
        let alg = &self.alg;
        let eps = |x: &[F::Elem]| crate::exactlin::vdot(&f, &self.epsilon, x);
        let delta = |x: &[F::Elem]| self.delta.apply(x);
        let omega = |x: &[F::Elem]| self.omega.apply(x);
        let bm = |x: &[F::Elem], y: &[F::Elem]| t.braided_mul(alg, x, y);
        let er = |i: usize| unit(&f, r, i);
        let eh = |i: usize| unit(&f, n, i);
        let one_one = vtensor(&f, &alg.unit, &alg.unit);

        // counit is a morphism of YD modules
        let w = first_failure(r, |a| {
            for l in 0..n {
                if eps(&t.act[l][a]) != f.mul(&self.epsilon[a], &h.counit()[l]) {
                    return Some(format!("ε(ʰr) at (h{l}, r{a})"));
                }
            }
            let mut s = vec![f.zero(); n];
            for (l, v, k) in &t.coact[a] {
                f.add_mul_assign(&mut s[*l], k, &self.epsilon[*v]);
            }
            (s != crate::exactlin::vscale(&f, &self.epsilon[a], &h.one())).then(|| format!("r₋₁ε(r₀) at r{a}"))
        });
        rep.record(QUADRUPLE_AXIOMS[0], w);

        let w = first_failure(r, |a| {
            (0..r)
                .find(|&b| eps(&alg.mul_vec(&er(a), &er(b))) != f.mul(&self.epsilon[a], &self.epsilon[b]))
                .map(|b| format!("ε(rs) at (r{a}, r{b})"))
        })
        .or_else(|| (!f.is_one(&eps(&alg.unit))).then(|| "ε(1) ≠ 1".to_string()));
        rep.record(QUADRUPLE_AXIOMS[1], w);

        let w = first_failure(r, |a| {
            let mut rhs = vec![f.zero(); n * r * r];
            for (l, v, k) in &t.coact[a] {
                vaxpy(&f, &mut rhs, k, &vtensor(&f, &eh(*l), &delta(&er(*v))));
            }
            (t.coact2(&delta(&er(a))) != rhs).then(|| format!("r{a}"))
        });
        rep.record(QUADRUPLE_AXIOMS[2], w);

        let w = first_failure(n, |k| {
            let mut rhs = vec![f.zero(); n * r * r];
            for (h1, h2, h3, c) in h.comul2_basis(k) {
                let adj = h.mul_vec(&eh(h1), &h.s(&eh(h3)));
                vaxpy(&f, &mut rhs, &c, &vtensor(&f, &adj, &omega(&eh(h2))));
            }
            (t.coact2(&omega(&eh(k))) != rhs).then(|| format!("h{k}"))
        });
        rep.record(QUADRUPLE_AXIOMS[3], w);

        let w = first_failure(r, |a| {
            (0..r)
                .find(|&b| delta(&alg.mul_vec(&er(a), &er(b))) != bm(&delta(&er(a)), &delta(&er(b))))
                .map(|b| format!("δ(rs) at (r{a}, r{b})"))
        })
        .or_else(|| (delta(&alg.unit) != one_one).then(|| "δ(1) ≠ 1⊗1".to_string()));
        rep.record(QUADRUPLE_AXIOMS[4], w);

        let w = first_failure(n, |a| {
            (0..n)
                .find(|&b| {
                    let lhs = omega(&h.mul_vec(&eh(a), &eh(b)));
                    let mut rhs = vec![f.zero(); r * r];
                    for (p, c) in h.comul_basis(a) {
                        let term = bm(&omega(&eh(p / n)), &t.act2(&eh(p % n), &omega(&eh(b))));
                        vaxpy(&f, &mut rhs, c, &term);
                    }
                    lhs != rhs
                })
                .map(|b| format!("ω(hk) at (h{a}, h{b})"))
        })
        .or_else(|| (omega(&h.one()) != one_one).then(|| "ω(1) ≠ 1⊗1".to_string()));
        rep.record(QUADRUPLE_AXIOMS[5], w);

        let w = first_failure(n, |l| {
            (0..r)
                .find(|&a| {
                    let mut lhs = vec![f.zero(); r * r];
                    let mut rhs = vec![f.zero(); r * r];
                    for (p, c) in h.comul_basis(l) {
                        let (l1, l2) = (p / n, p % n);
                        vaxpy(&f, &mut lhs, c, &bm(&delta(&t.act[l1][a]), &omega(&eh(l2))));
                        vaxpy(&f, &mut rhs, c, &bm(&omega(&eh(l1)), &t.act2(&eh(l2), &delta(&er(a)))));
                    }
                    lhs != rhs
                })
                .map(|a| format!("(h{l}, r{a})"))
        });
        rep.record(QUADRUPLE_AXIOMS[6], w);

        let w = first_failure(r, |a| {
            let d = delta(&er(a));
            let mut lhs = vec![f.zero(); r * r * r];
            let mut rhs = vec![f.zero(); r * r * r];
            for (p, c) in d.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                let (a1, a2) = (p / r, p % r);
                vaxpy(&f, &mut lhs, c, &vtensor(&f, &er(a1), &delta(&er(a2))));
                for (l, v, k) in &t.coact[a2] {
                    let x = bm(&delta(&er(a1)), &omega(&eh(*l)));
                    vaxpy(&f, &mut rhs, &f.mul(c, k), &vtensor(&f, &x, &er(*v)));
                }
            }
            (lhs != rhs).then(|| format!("r{a}"))
        });
        rep.record(QUADRUPLE_AXIOMS[7], w);

        let w = first_failure(n, |k| {
            let mut lhs = vec![f.zero(); r * r * r];
            let mut rhs = vec![f.zero(); r * r * r];
            for (p, c) in h.comul_basis(k) {
                let (k1, k2) = (p / n, p % n);
                let om = omega(&eh(k1));
                for (q, w) in om.iter().enumerate().filter(|(_, w)| !f.is_zero(w)) {
                    let (x, y) = (q / r, q % r);
                    let cw = f.mul(c, w);
                    let inner = bm(&delta(&er(y)), &omega(&eh(k2)));
                    vaxpy(&f, &mut lhs, &cw, &vtensor(&f, &er(x), &inner));
                    for (l, v, kk) in &t.coact[y] {
                        let hk = h.mul_vec(&eh(*l), &eh(k2));
                        let left = bm(&delta(&er(x)), &omega(&hk));
                        vaxpy(&f, &mut rhs, &f.mul(&cw, kk), &vtensor(&f, &left, &er(*v)));
                    }
                }
            }
            (lhs != rhs).then(|| format!("h{k}"))
        });
        rep.record(QUADRUPLE_AXIOMS[8], w);

        let w = first_failure(r, |a| {
            let d = delta(&er(a));
            let mut left = vec![f.zero(); r];
            let mut right = vec![f.zero(); r];
            for (p, c) in d.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                f.add_mul_assign(&mut left[p % r], c, &self.epsilon[p / r]);
                f.add_mul_assign(&mut right[p / r], c, &self.epsilon[p % r]);
            }
            (left != er(a) || right != er(a)).then(|| format!("r{a}"))
        });
        rep.record(QUADRUPLE_AXIOMS[9], w);

        let w = first_failure(n, |l| {
            let o = omega(&eh(l));
            let mut left = vec![f.zero(); r];
            let mut right = vec![f.zero(); r];
            for (p, c) in o.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                f.add_mul_assign(&mut left[p % r], c, &self.epsilon[p / r]);
                f.add_mul_assign(&mut right[p / r], c, &self.epsilon[p % r]);
            }
            let target = crate::exactlin::vscale(&f, &h.counit()[l], &alg.unit);
            (left != target || right != target).then(|| format!("h{l}"))
        });
        rep.record(QUADRUPLE_AXIOMS[10], w);
        rep
    }

    /// Only the eleven relations (prerequisites dropped).
    pub fn axiom_report(&self) -> Report {
        let mut rep = self.validate();
        rep.checks.retain(|c| QUADRUPLE_AXIOMS.contains(&c.name.as_str()) || c.name == "shapes");
        rep
    }
}

impl<F: Field> DualYDQuadruple<F> {
    pub fn field(&self) -> &F {
        self.h.field()
    }
    pub fn r_dim(&self) -> usize {
        self.coalg.dim
    }

    fn shapes(&self) -> Option<String> {
        let (r, n) = (self.coalg.dim, self.h.dim());
        if self.yd.dim != r || self.one.len() != r || self.m.rows() != r || self.m.cols() != r * r {
            return Some("R data shapes".into());
        }
        if self.xi.rows() != n || self.xi.cols() != r * r {
            return Some("ξ shape".into());
        }
        None
    }

    /// ξ(r⊗s) = ε(r)ε(s)·1_H for all r, s.
    pub fn xi_is_trivial(&self) -> bool {
        let f = self.field();
        let r = self.coalg.dim;
        (0..r * r).all(|p| {
            let c = f.mul(&self.coalg.counit[p / r], &self.coalg.counit[p % r]);
            self.xi.col(p) == crate::exactlin::vscale(f, &c, &self.h.one())
        })
    }

    pub fn validate(&self) -> Report {
        let mut rep = Report::new();
        if let Some(w) = self.shapes() {
            rep.fail("shapes", w);
            return rep;
        }
        rep.absorb("R: ", validate_yd_coalgebra(&self.h, &self.yd, &self.coalg));
        let h = &self.h;
        let f = h.field().clone();
        let t = Yd::new(h, &self.yd);
        let (r, n) = (self.coalg.dim, h.dim());
        let c = &self.coalg;
        let mm = |x: &[F::Elem]| self.m.apply(x);
        let xi = |x: &[F::Elem]| self.xi.apply(x);
        let er = |i: usize| unit(&f, r, i);
        let eh = |i: usize| unit(&f, n, i);
        let rr = r * r;
        let one = &self.one;
        let split = |v: &[F::Elem]| -> Vec<(usize, usize, F::Elem)> {
            v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(p, c)| (p / rr, p % rr, c.clone())).collect()
        };

        let mut w = (0..n).find(|&l| t.act_vec(&eh(l), one) != crate::exactlin::vscale(&f, &h.counit()[l], one)).map(|l| format!("ʰ1 at h{l}"));
        if w.is_none() && t.coact_vec(one) != vtensor(&f, &h.one(), one) {
            w = Some("ρ(1) ≠ 1⊗1".into());
        }
        rep.record(DUAL_QUADRUPLE_AXIOMS[0], w);

        let w = (c.comul_vec(one) != vtensor(&f, one, one))
            .then(|| "δ(1) ≠ 1⊗1".to_string())
            .or_else(|| (!f.is_one(&c.counit_of(one))).then(|| "ε(1) ≠ 1".to_string()));
        rep.record(DUAL_QUADRUPLE_AXIOMS[1], w);

        let w = first_failure(n, |l| {
            (0..rr)
                .find(|&p| t.act_vec(&eh(l), &mm(&unit(&f, rr, p))) != mm(&t.act2(&eh(l), &unit(&f, rr, p))))
                .map(|p| format!("(h{l}, r{}⊗r{})", p / r, p % r))
        });
        rep.record(DUAL_QUADRUPLE_AXIOMS[2], w);

        let w = first_failure(n, |l| {
            (0..rr)
                .find(|&p| {
                    let lhs = xi(&t.act2(&eh(l), &unit(&f, rr, p)));
                    let mut rhs = vec![f.zero(); n];
                    for (q, cc) in h.comul_basis(l) {
                        let v = h.mul_vec(&h.mul_vec(&eh(q / n), &xi(&unit(&f, rr, p))), &h.s(&eh(q % n)));
                        vaxpy(&f, &mut rhs, cc, &v);
                    }
                    lhs != rhs
                })
                .map(|p| format!("(h{l}, r{}⊗r{})", p / r, p % r))
        });
        rep.record(DUAL_QUADRUPLE_AXIOMS[3], w);

        let w = first_failure(rr, |p| {
            let x = unit(&f, rr, p);
            let lhs = c.comul_vec(&mm(&x));
            let mut rhs = vec![f.zero(); rr];
            for (a, b, k) in split(&t.braided_comul(c, &x)) {
                vaxpy(&f, &mut rhs, &k, &vtensor(&f, &mm(&unit(&f, rr, a)), &mm(&unit(&f, rr, b))));
            }
            if lhs != rhs {
                return Some(format!("δm at r{}⊗r{}", p / r, p % r));
            }
            (c.counit_of(&mm(&x)) != f.mul(&c.counit[p / r], &c.counit[p % r])).then(|| format!("εm at r{}⊗r{}", p / r, p % r))
        });
        rep.record(DUAL_QUADRUPLE_AXIOMS[4], w);

        let w = first_failure(rr, |p| {
            let x = unit(&f, rr, p);
            let lhs = h.coalg().comul_vec(&xi(&x));
            let mut rhs = vec![f.zero(); n * n];
            for (a, b, k) in split(&t.braided_comul(c, &x)) {
                let xa = xi(&unit(&f, rr, a));
                let co = t.coact2(&unit(&f, rr, b));
                for (q, z) in co.iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
                    let (l, y) = (q / rr, q % rr);
                    let left = h.mul_vec(&xa, &eh(l));
                    vaxpy(&f, &mut rhs, &f.mul(&k, z), &vtensor(&f, &left, &xi(&unit(&f, rr, y))));
                }
            }
            if lhs != rhs {
                return Some(format!("Δξ at r{}⊗r{}", p / r, p % r));
            }
            (h.counit_of(&xi(&x)) != f.mul(&c.counit[p / r], &c.counit[p % r])).then(|| format!("εξ at r{}⊗r{}", p / r, p % r))
        });
        rep.record(DUAL_QUADRUPLE_AXIOMS[5], w);

        let w = first_failure(rr, |p| {
            let x = unit(&f, rr, p);
            let mut lhs = vec![f.zero(); n * r];
            let mut rhs = vec![f.zero(); n * r];
            for (a, b, k) in split(&t.braided_comul(c, &x)) {
                let ma = mm(&unit(&f, rr, a));
                let xb = xi(&unit(&f, rr, b));
                // c_{R,H}(m(X) ⊗ ξ(Y)) = m(X)₋₁ξ(Y) ⊗ m(X)₀
                let co = t.coact_vec(&ma);
                for (q, z) in co.iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
                    let hh = h.mul_vec(&eh(q / r), &xb);
                    vaxpy(&f, &mut lhs, &f.mul(&k, z), &vtensor(&f, &hh, &er(q % r)));
                }
                let xa = xi(&unit(&f, rr, a));
                let co2 = t.coact2(&unit(&f, rr, b));
                for (q, z) in co2.iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
                    let (l, y) = (q / rr, q % rr);
                    let hh = h.mul_vec(&xa, &eh(l));
                    vaxpy(&f, &mut rhs, &f.mul(&k, z), &vtensor(&f, &hh, &mm(&unit(&f, rr, y))));
                }
            }
            (lhs != rhs).then(|| format!("r{}⊗r{}", p / r, p % r))
        });
        rep.record(DUAL_QUADRUPLE_AXIOMS[6], w);

        let w = first_failure(rr * r, |p| {
            let (a, b, cc) = (p / rr, (p / r) % r, p % r);
            let lhs = mm(&vtensor(&f, &er(a), &mm(&vtensor(&f, &er(b), &er(cc)))));
            let mut rhs = vec![f.zero(); r];
            for (x, y, k) in split(&t.braided_comul(c, &vtensor(&f, &er(a), &er(b)))) {
                let mx = mm(&unit(&f, rr, x));
                let acted = t.act_vec(&xi(&unit(&f, rr, y)), &er(cc));
                vaxpy(&f, &mut rhs, &k, &mm(&vtensor(&f, &mx, &acted)));
            }
            (lhs != rhs).then(|| format!("(r{a}, r{b}, r{cc})"))
        });
        rep.record(DUAL_QUADRUPLE_AXIOMS[7], w);

        let w = first_failure(rr * r, |p| {
            let (a, b, cc) = (p / rr, (p / r) % r, p % r);
            let mut lhs = vec![f.zero(); n];
            for (x, y, k) in split(&t.braided_comul(c, &vtensor(&f, &er(b), &er(cc)))) {
                let first = xi(&vtensor(&f, &er(a), &mm(&unit(&f, rr, x))));
                vaxpy(&f, &mut lhs, &k, &h.mul_vec(&first, &xi(&unit(&f, rr, y))));
            }
            let mut rhs = vec![f.zero(); n];
            for (x, y, k) in split(&t.braided_comul(c, &vtensor(&f, &er(a), &er(b)))) {
                let mx = mm(&unit(&f, rr, x));
                let xy = xi(&unit(&f, rr, y));
                for (l, z) in xy.iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
                    for (q, d) in h.comul_basis(l) {
                        let acted = t.act_vec(&eh(q / n), &er(cc));
                        let first = xi(&vtensor(&f, &mx, &acted));
                        vaxpy(&f, &mut rhs, &f.mul(&k, &f.mul(z, d)), &h.mul_vec(&first, &eh(q % n)));
                    }
                }
            }
            (lhs != rhs).then(|| format!("(r{a}, r{b}, r{cc})"))
        });
        rep.record(DUAL_QUADRUPLE_AXIOMS[8], w);

        let w = first_failure(r, |a| {
            (mm(&vtensor(&f, &er(a), one)) != er(a) || mm(&vtensor(&f, one, &er(a))) != er(a)).then(|| format!("r{a}"))
        });
        rep.record(DUAL_QUADRUPLE_AXIOMS[9], w);

        let w = first_failure(r, |a| {
            let target = crate::exactlin::vscale(&f, &c.counit[a], &h.one());
            (xi(&vtensor(&f, &er(a), one)) != target || xi(&vtensor(&f, one, &er(a))) != target).then(|| format!("r{a}"))
        });
        rep.record(DUAL_QUADRUPLE_AXIOMS[10], w);
        rep
    }

    pub fn axiom_report(&self) -> Report {
        let mut rep = self.validate();
        rep.checks.retain(|c| DUAL_QUADRUPLE_AXIOMS.contains(&c.name.as_str()) || c.name == "shapes");
        rep
    }
}

fn smash_labels(r: &[String], h: &[String]) -> Vec<String> {
    r.iter().flat_map(|a| h.iter().map(move |b| format!("{a}#{b}"))).collect()
}

/// A basis vector that is a coordinate vector keeps that label; others get `r{i}`.
fn coinvariant_labels<F: Field>(f: &F, labels: &[String], basis: &[Vec<F::Elem>]) -> Vec<String> {
    basis
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let nz = v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect::<Vec<_>>();
            match nz.as_slice() {
                [(j, c)] if f.is_one(c) => labels[*j].clone(),
                _ => format!("r{i}"),
            }
        })
        .collect()
}

/// R#H with (r#h)(s#k) = r(^{h₁}s) # h₂k, for R an H-module algebra.
pub fn smash_algebra<F: Field>(r: &AlgebraObject<F>, yd: &YDObject<F>, h: &HopfObject<F>) -> Result<AlgebraObject<F>> {
    let rep = validate_yd_algebra(h, yd, r);
    let needed = ["module: left module", "algebra: ", "multiplication is linear", "unit is invariant"];
    if let Some(c) = rep.checks.iter().find(|c| !c.passed && needed.iter().any(|n| c.name.starts_with(n))) {
        return Err(Error::InvalidObject(format!("R: {} ({})", c.name, c.witness.clone().unwrap_or_default())));
    }
    let out = smash_algebra_raw(r, yd, h)?;
    out.validate().ensure("smash product")?;
    Ok(out)
}

fn smash_algebra_raw<F: Field>(r: &AlgebraObject<F>, yd: &YDObject<F>, h: &HopfObject<F>) -> Result<AlgebraObject<F>> {
    let f = h.field();
    let (dr, n) = (r.dim, h.dim());
    let t = Yd::new(h, yd);
    let unit_v = vtensor(f, &r.unit, &h.one());
    AlgebraObject::from_products(f, smash_labels(&r.labels, h.labels()), unit_v, |p, q| {
        let (a, l) = (p / n, p % n);
        let (b, k) = (q / n, q % n);
        let mut v = vec![f.zero(); dr * n];
        for (s, c) in h.comul_basis(l) {
            let left = r.mul_vec(&r.basis(a), &t.act[s / n][b]);
            let right = h.mul_vec(&h.basis(s % n), &h.basis(k));
            vaxpy(f, &mut v, c, &vtensor(f, &left, &right));
        }
        v
    })
}

/// C#H with Δ(c#h) = c₁ # (c₂)₋₁h₁ ⊗ (c₂)₀ # h₂ and ε(c#h) = ε(c)ε(h), for C a
/// left H-comodule coalgebra (`coaction` rows l·dim C + v).
pub fn smash_coalgebra<F: Field>(c: &CoalgebraObject<F>, coaction: &SparseMap<F>, h: &HopfObject<F>) -> Result<CoalgebraObject<F>> {
    c.validate().ensure("C")?;
    let out = smash_coalgebra_raw(c, coaction, h)?;
    out.validate().ensure("smash coproduct")?;
    Ok(out)
}

fn smash_coalgebra_raw<F: Field>(c: &CoalgebraObject<F>, coaction: &SparseMap<F>, h: &HopfObject<F>) -> Result<CoalgebraObject<F>> {
    let f = h.field();
    let (dc, n) = (c.dim, h.dim());
    if coaction.rows() != n * dc || coaction.cols() != dc {
        return Err(Error::Shape("coaction shape".into()));
    }
    let de = dc * n;
    let counit = (0..de).map(|p| f.mul(&c.counit[p / n], &h.counit()[p % n])).collect::<Vec<_>>();
    CoalgebraObject::from_coproducts(f, smash_labels(&c.labels, h.labels()), counit, |p| {
        let (a, l) = (p / n, p % n);
        let mut v = vec![f.zero(); de * de];
        for (q, c1) in c.comul_basis(a) {
            let (a1, a2) = (q / dc, q % dc);
            for (s, c2) in coaction.col(a2) {
                let (g, x) = (s / dc, s % dc);
                for (u, c3) in h.comul_basis(l) {
                    let (l1, l2) = (u / n, u % n);
                    let gh = h.mul_vec(&h.basis(g), &h.basis(l1));
                    let coef = f.mul(c1, &f.mul(c2, c3));
                    for (z, hv) in gh.iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
                        let left = a1 * n + z;
                        let right = x * n + l2;
                        f.add_mul_assign(&mut v[left * de + right], &coef, hv);
                    }
                }
            }
        }
        v
    })
}

/// A bialgebra on R⊗H together with π(r#h) = ε(r)h and σ(h) = 1#h.
#[derive(Clone, Debug)]
pub struct Bosonization<F: Field> {
    pub bialg: BialgebraObject<F>,
    /// R#H → H
    pub pi: Matrix<F>,
    /// H → R#H
    pub sigma: Matrix<F>,
    pub report: Report,
}

fn pi_sigma<F: Field>(h: &HopfObject<F>, r_counit: &[F::Elem], r_one: &[F::Elem]) -> (Matrix<F>, Matrix<F>) {
    let f = h.field();
    let n = h.dim();
    let r = r_counit.len();
    let pi = Matrix::from_fn(f, n, r * n, |l, p| if p % n == l { r_counit[p / n].clone() } else { f.zero() });
    let sigma = Matrix::from_fn(f, r * n, n, |p, l| if p % n == l { r_one[p / n].clone() } else { f.zero() });
    (pi, sigma)
}

/// The bicomodule coactions A → A⊗H and A → H⊗A induced by π.
fn induced_coactions<F: Field>(a: &BialgebraObject<F>, pi: &Matrix<F>) -> (Matrix<F>, Matrix<F>) {
    let f = a.field();
    let d = a.dim();
    let id = Matrix::identity(f, d);
    let co = a.coalg.comul.to_dense();
    (id.kron(pi).mul(&co), pi.kron(&id).mul(&co))
}

/// Checks that (π, σ) split a bialgebra the way bosonizations do: π a
/// bialgebra map, σ a bicolinear algebra map, πσ = id.
pub fn split_report<F: Field>(a: &BialgebraObject<F>, h: &HopfObject<F>, pi: &Matrix<F>, sigma: &Matrix<F>, sigma_coalgebra: bool) -> Report {
    let f = a.field();
    let mut rep = Report::new();
    rep.check("π∘σ = id", pi.mul(sigma).is_identity(), || "composite is not the identity".into());
    rep.record("π is an algebra map", a.alg.is_algebra_map_to(h.alg(), pi));
    rep.record("π is a coalgebra map", a.coalg.is_coalgebra_map_to(h.coalg(), pi));
    rep.record("σ is an algebra map", h.alg().is_algebra_map_to(&a.alg, sigma));
    if sigma_coalgebra {
        rep.record("σ is a coalgebra map", h.coalg().is_coalgebra_map_to(&a.coalg, sigma));
    }
    let (rho_r, rho_l) = induced_coactions(a, pi);
    let hid = Matrix::identity(f, h.dim());
    let dh = h.coalg().comul.to_dense();
    rep.check("σ is right colinear", rho_r.mul(sigma) == sigma.kron(&hid).mul(&dh), || "ρʳσ ≠ (σ⊗H)Δ".into());
    rep.check("σ is left colinear", rho_l.mul(sigma) == hid.kron(sigma).mul(&dh), || "ρˡσ ≠ (H⊗σ)Δ".into());
    rep
}

/// Checks for the dual split: σ a bialgebra map, π a coalgebra map that is
/// H-bilinear for the actions through σ.
pub fn dual_split_report<F: Field>(a: &BialgebraObject<F>, h: &HopfObject<F>, pi: &Matrix<F>, sigma: &Matrix<F>, pi_algebra: bool) -> Report {
    let mut rep = Report::new();
    rep.check("π∘σ = id", pi.mul(sigma).is_identity(), || "composite is not the identity".into());
    rep.record("σ is an algebra map", h.alg().is_algebra_map_to(&a.alg, sigma));
    rep.record("σ is a coalgebra map", h.coalg().is_coalgebra_map_to(&a.coalg, sigma));
    rep.record("π is a coalgebra map", a.coalg.is_coalgebra_map_to(h.coalg(), pi));
    if pi_algebra {
        rep.record("π is an algebra map", a.alg.is_algebra_map_to(h.alg(), pi));
    }
    let mut wl = None;
    let mut wr = None;
    for l in 0..h.dim() {
        let s = sigma.col(l);
        for j in 0..a.dim() {
            let e = a.alg.basis(j);
            if wl.is_none() && pi.apply(&a.alg.mul_vec(&s, &e)) != h.mul_vec(&h.basis(l), &pi.apply(&e)) {
                wl = Some(format!("({}, {})", h.labels()[l], a.labels()[j]));
            }
            if wr.is_none() && pi.apply(&a.alg.mul_vec(&e, &s)) != h.mul_vec(&pi.apply(&e), &h.basis(l)) {
                wr = Some(format!("({}, {})", a.labels()[j], h.labels()[l]));
            }
        }
    }
    rep.record("π is left linear", wl);
    rep.record("π is right linear", wr);
    rep
}

/// On R#1 ⊂ R#H: right coinvariance, ρ(r#1) = r₋₁ ⊗ r₀#1 through π and
/// σ(h₁)(r#1)σ(Sh₂) = ʰr#1.
fn induced_structure_report<F: Field>(a: &BialgebraObject<F>, h: &HopfObject<F>, pi: &Matrix<F>, sigma: &Matrix<F>, yd: &YDObject<F>) -> Report {
    let f = h.field();
    let n = h.dim();
    let r = yd.dim;
    let (rho_r, rho_l) = induced_coactions(a, pi);
    let embed = |x: &[F::Elem]| vtensor(f, x, &h.one());
    let mut rep = Report::new();
    let (mut wc, mut wl, mut wa) = (None, None, None);
    for i in 0..r {
        let ri = embed(&unit(f, r, i));
        if wc.is_none() && rho_r.apply(&ri) != vtensor(f, &ri, &h.one()) {
            wc = Some(format!("r{i}"));
        }
        let co = yd.coact(&unit(f, r, i));
        let mut want = vec![f.zero(); n * a.dim()];
        for (p, k) in co.iter().enumerate().filter(|(_, k)| !f.is_zero(k)) {
            vaxpy(f, &mut want, k, &vtensor(f, &h.basis(p / r), &embed(&unit(f, r, p % r))));
        }
        if wl.is_none() && rho_l.apply(&ri) != want {
            wl = Some(format!("r{i}"));
        }
        for l in 0..n {
            let mut got = vec![f.zero(); a.dim()];
            for (p, c) in h.comul_basis(l) {
                let left = a.alg.mul_vec(&sigma.col(p / n), &ri);
                vaxpy(f, &mut got, c, &a.alg.mul_vec(&left, &sigma.apply(&h.s(&h.basis(p % n)))));
            }
            if wa.is_none() && got != embed(&yd.act(&h.basis(l), &unit(f, r, i))) {
                wa = Some(format!("(h{l}, r{i})"));
            }
        }
    }
    rep.record("R#1 is right coinvariant", wc);
    rep.record("induced coaction on R agrees", wl);
    rep.record("induced action on R agrees", wa);
    rep
}

/// R#H with the smash product and Δ(r#h) = δ̃¹(r#h₁) # δ̃²(r#h₁)₋₁h₂ ⊗ δ̃²(r#h₁)₀ # h₃,
/// δ̃(r#h) = δ(r)ω(h). Refuses invalid quadruples.
pub fn bosonize<F: Field>(q: &YDQuadruple<F>) -> Result<Bosonization<F>> {
    q.validate().ensure("quadruple")?;
    let b = bosonization_candidate(q)?;
    b.report.ensure("bosonization")?;
    Ok(b)
}

/// The bosonization formulas applied to arbitrary data of the right shape,
/// with the bialgebra and splitting checks collected rather than enforced.
pub fn bosonization_candidate<F: Field>(q: &YDQuadruple<F>) -> Result<Bosonization<F>> {
    if let Some(w) = q.shapes() {
        return Err(Error::Shape(w));
    }
    let h = &q.h;
    let f = h.field();
    let (r, n) = (q.alg.dim, h.dim());
    let alg = smash_algebra_raw(&q.alg, &q.yd, h)?;
    let t = Yd::new(h, &q.yd);
    let de = r * n;
    let counit = (0..de).map(|p| f.mul(&q.epsilon[p / n], &h.counit()[p % n])).collect::<Vec<_>>();
    let labels = alg.labels.clone();
    let coalg = CoalgebraObject::from_coproducts(f, labels, counit, |p| {
        let (a, l) = (p / n, p % n);
        let mut v = vec![f.zero(); de * de];
        for (h1, h2, h3, c) in h.comul2_basis(l) {
            let dt = t.braided_mul(&q.alg, &q.delta.col(a), &q.omega.col(h1));
            for (s, z) in dt.iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
                let (x, y) = (s / r, s % r);
                for (g, w, k) in &t.coact[y] {
                    let gh = h.mul_vec(&h.basis(*g), &h.basis(h2));
                    let coef = f.mul(&c, &f.mul(z, k));
                    for (u, hv) in gh.iter().enumerate().filter(|(_, hv)| !f.is_zero(hv)) {
                        let left = x * n + u;
                        let right = w * n + h3;
                        f.add_mul_assign(&mut v[left * de + right], &coef, hv);
                    }
                }
            }
        }
        v
    })?;
    let bialg = BialgebraObject::new(alg, coalg)?;
    let (pi, sigma) = pi_sigma(h, &q.epsilon, &q.alg.unit);
    let mut report = bialg.validate();
    report.absorb("", split_report(&bialg, h, &pi, &sigma, false));
    report.absorb("", induced_structure_report(&bialg, h, &pi, &sigma, &q.yd));
    Ok(Bosonization { bialg, pi, sigma, report })
}

/// The smash coproduct R#H with unit 1#1 and
/// (r#h)(s#k) = m(r₁ ⊗ ^{r₂₋₁h₁}s₁) # ξ(r₂₀ ⊗ ^{h₂}s₂)h₃k.
pub fn dual_bosonize<F: Field>(q: &DualYDQuadruple<F>) -> Result<Bosonization<F>> {
    q.validate().ensure("dual quadruple")?;
    let b = dual_bosonization_candidate(q)?;
    b.report.ensure("dual bosonization")?;
    Ok(b)
}

/// Dual counterpart of [`bosonization_candidate`].
pub fn dual_bosonization_candidate<F: Field>(q: &DualYDQuadruple<F>) -> Result<Bosonization<F>> {
    if let Some(w) = q.shapes() {
        return Err(Error::Shape(w));
    }
    let h = &q.h;
    let f = h.field();
    let (r, n) = (q.coalg.dim, h.dim());
    let coalg = smash_coalgebra_raw(&q.coalg, &q.yd.coaction, h)?;
    let t = Yd::new(h, &q.yd);
    let de = r * n;
    // products only need basis data; cache the pieces
    let comul2 = (0..n).map(|l| h.comul2_basis(l)).collect::<Vec<_>>();
    let unit_v = vtensor(f, &q.one, &h.one());
    let alg = AlgebraObject::from_products(f, coalg.labels.clone(), unit_v, |p, s| {
        let (a, l) = (p / n, p % n);
        let (b, k) = (s / n, s % n);
        let mut v = vec![f.zero(); de];
        for (pa, ca) in q.coalg.comul_basis(a) {
            let (a1, a2) = (pa / r, pa % r);
            for (g, x, kg) in &t.coact[a2] {
                for (l1, l2, l3, cl) in &comul2[l] {
                    let gl = h.mul_vec(&h.basis(*g), &h.basis(*l1));
                    for (pb, cb) in q.coalg.comul_basis(b) {
                        let (b1, b2) = (pb / r, pb % r);
                        let coef = f.mul(&f.mul(ca, kg), &f.mul(cl, cb));
                        let rpart = apply_on_slot(f, &q.m, a1, r, &t.act_vec(&gl, &unit(f, r, b1)));
                        let xi = apply_on_slot(f, &q.xi, *x, r, &t.act[*l2][b2]);
                        let hpart = h.mul_vec(&h.mul_vec(&xi, &h.basis(*l3)), &h.basis(k));
                        vaxpy(f, &mut v, &coef, &vtensor(f, &rpart, &hpart));
                    }
                }
            }
        }
        v
    })?;
    let bialg = BialgebraObject::new(alg, coalg)?;
    let (pi, sigma) = pi_sigma(h, &q.coalg.counit, &q.one);
    let mut report = bialg.validate();
    report.absorb("", dual_split_report(&bialg, h, &pi, &sigma, false));
    report.absorb("", induced_structure_report(&bialg, h, &pi, &sigma, &q.yd));
    Ok(Bosonization { bialg, pi, sigma, report })
}

/// Right coinvariants {a : (A⊗π)Δa = a⊗1}.
pub fn coinvariants_of<F: Field>(a: &BialgebraObject<F>, h: &HopfObject<F>, pi: &Matrix<F>) -> Subspace<F> {
    let f = a.field();
    let d = a.dim();
    let n = h.dim();
    let (rho_r, _) = induced_coactions(a, pi);
    let one = h.one();
    let m = Matrix::from_fn(f, d * n, d, |row, j| {
        let (x, l) = (row / n, row % n);
        let v = rho_r.get(row, j).clone();
        if x == j {
            f.sub(&v, &one[l])
        } else {
            v
        }
    });
    Subspace::kernel(&m)
}

struct Split<F: Field> {
    r: Subspace<F>,
    coords: Box<dyn Fn(&[F::Elem]) -> Result<Vec<F::Elem>>>,
    phi_inv: Matrix<F>,
}

fn prepare_split<F: Field>(a: &BialgebraObject<F>, h: &HopfObject<F>, pi: &Matrix<F>, sigma: &Matrix<F>) -> Result<Split<F>> {
    let f = a.field().clone();
    let (d, n) = (a.dim(), h.dim());
    let rsp = coinvariants_of(a, h, pi);
    let k = rsp.dim();
    if k * n != d {
        return Err(Error::Verification(format!("dim R · dim H = {} ≠ dim A = {d}", k * n)));
    }
    // φ(r⊗h) = r·σ(h)
    let cols = (0..k * n).map(|p| a.alg.mul_vec(&rsp.basis()[p / n], &sigma.col(p % n))).collect::<Vec<_>>();
    let phi = Matrix::from_columns(&f, d, &cols);
    let phi_inv = phi.inverse().ok_or_else(|| Error::Verification("φ: R⊗H → A is not invertible".into()))?;
    let rs = rsp.clone();
    let coords = Box::new(move |v: &[F::Elem]| rs.coords(v).ok_or_else(|| Error::Verification("vector leaves R".into())));
    Ok(Split { r: rsp, coords, phi_inv })
}

fn coords_tensor<F: Field>(f: &F, outer: usize, inner_dim: usize, v: &[F::Elem], coords: &dyn Fn(&[F::Elem]) -> Result<Vec<F::Elem>>) -> Result<Vec<F::Elem>> {
    let mut out = Vec::new();
    for o in 0..outer {
        out.extend(coords(&v[o * inner_dim..(o + 1) * inner_dim])?);
    }
    let _ = f;
    Ok(out)
}

/// YD structure on R: ʰr = σ(h₁)rσ(Sh₂), ρ(r) = π(r₁) ⊗ r₂.
fn yd_on_coinvariants<F: Field>(a: &BialgebraObject<F>, h: &HopfObject<F>, pi: &Matrix<F>, sigma: &Matrix<F>, sp: &Split<F>) -> Result<YDObject<F>> {
    let f = a.field();
    let (d, n) = (a.dim(), h.dim());
    let k = sp.r.dim();
    let mut act_cols = Vec::new();
    for l in 0..n {
        for i in 0..k {
            let mut v = vec![f.zero(); d];
            for (p, c) in h.comul_basis(l) {
                let left = a.alg.mul_vec(&sigma.col(p / n), &sp.r.basis()[i]);
                let prod = a.alg.mul_vec(&left, &sigma.apply(&h.s(&h.basis(p % n))));
                vaxpy(f, &mut v, c, &prod);
            }
            act_cols.push((sp.coords)(&v)?);
        }
    }
    let (_, rho_l) = induced_coactions(a, pi);
    let mut co_cols = Vec::new();
    for i in 0..k {
        let v = rho_l.apply(&sp.r.basis()[i]);
        co_cols.push(coords_tensor(f, n, d, &v, &*sp.coords)?);
    }
    let yd = YDObject { dim: k, action: SparseMap::from_columns(f, k, act_cols), coaction: SparseMap::from_columns(f, n * k, co_cols) };
    yd.validate(h).ensure("Yetter-Drinfeld structure on R")?;
    Ok(yd)
}

/// (R, ε, δ, ω) from a bialgebra A split by a bialgebra map π: A → H and a
/// bicolinear algebra section σ. R = A^{co H} in its RREF basis,
/// δ = (ϑ⊗ϑ)Δ|_R and ω = (ϑ⊗ϑ)Δσ with ϑ = (R⊗ε)φ⁻¹.
pub fn extract_quadruple<F: Field>(a: &BialgebraObject<F>, h: &HopfObject<F>, pi: &Matrix<F>, sigma: &Matrix<F>) -> Result<YDQuadruple<F>> {
    split_report(a, h, pi, sigma, false).ensure("split premises").map_err(|e| Error::Input(e.to_string()))?;
    let f = a.field().clone();
    let (d, n) = (a.dim(), h.dim());
    let sp = prepare_split(a, h, pi, sigma)?;
    let k = sp.r.dim();
    let yd = yd_on_coinvariants(a, h, pi, sigma, &sp)?;
    let basis = sp.r.basis().to_vec();
    let unit_r = (sp.coords)(&a.alg.unit)?;
    let alg = AlgebraObject::from_products(&f, coinvariant_labels(&f, a.labels(), &basis), unit_r.clone(), |i, j| {
        (sp.coords)(&a.alg.mul_vec(&basis[i], &basis[j])).unwrap_or_else(|_| vec![f.zero(); k])
    })?;
    for i in 0..k {
        for j in 0..k {
            (sp.coords)(&a.alg.mul_vec(&basis[i], &basis[j])).map_err(|_| Error::Verification("R is not a subalgebra".into()))?;
        }
    }
    // ϑ: A → R, (R⊗ε)φ⁻¹
    let theta = Matrix::from_fn(&f, k, d, |i, j| {
        let mut s = f.zero();
        for l in 0..n {
            f.add_mul_assign(&mut s, sp.phi_inv.get(i * n + l, j), &h.counit()[l]);
        }
        s
    });
    let tt = theta.kron(&theta);
    let co = a.coalg.comul.to_dense();
    let delta = tt.mul(&co).mul(&sp.r.inclusion());
    let omega = tt.mul(&co).mul(sigma);
    let epsilon = basis.iter().map(|b| a.coalg.counit_of(b)).collect();
    let q = YDQuadruple { h: h.clone(), yd, alg, epsilon, delta, omega };
    q.validate().ensure("extracted quadruple")?;
    Ok(q)
}

/// (R, 1, m, ξ) from a bialgebra A with a bialgebra injection σ: H → A and an
/// H-bilinear coalgebra retraction π. R = A^{co H}, δ(r) = r₁σSπ(r₂) ⊗ r₃,
/// m = (R⊗ε)φ⁻¹(rs) and ξ = (ε_R⊗H)φ⁻¹(rs).
pub fn extract_dual_quadruple<F: Field>(a: &BialgebraObject<F>, h: &HopfObject<F>, pi: &Matrix<F>, sigma: &Matrix<F>) -> Result<DualYDQuadruple<F>> {
    dual_split_report(a, h, pi, sigma, false).ensure("split premises").map_err(|e| Error::Input(e.to_string()))?;
    let f = a.field().clone();
    let (d, n) = (a.dim(), h.dim());
    let sp = prepare_split(a, h, pi, sigma)?;
    let k = sp.r.dim();
    let yd = yd_on_coinvariants(a, h, pi, sigma, &sp)?;
    let basis = sp.r.basis().to_vec();
    let spi = sigma.mul(&h.antipode).mul(pi);
    let mut comul_cols = Vec::new();
    for b in &basis {
        let mut v = vec![f.zero(); d * d];
        let dv = a.coalg.comul_vec(b);
        for (p, c) in dv.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
            let (x, y) = (p / d, p % d);
            for (q, c2) in a.coalg.comul_basis(y) {
                let left = a.alg.mul_vec(&a.alg.basis(x), &spi.col(q / d));
                vaxpy(&f, &mut v, &f.mul(c, c2), &vtensor(&f, &left, &a.alg.basis(q % d)));
            }
        }
        // both legs lie in R
        let mut out = vec![f.zero(); k * k];
        let first = (0..d).map(|x| (0..d).map(|y| v[x * d + y].clone()).collect::<Vec<_>>()).collect::<Vec<_>>();
        // v = Σ_x e_x ⊗ row_x; express row_x in R, then the x-column combination in R
        let rows_in_r = first.iter().map(|row| (sp.coords)(row)).collect::<Result<Vec<_>>>()?;
        for j in 0..k {
            let col = (0..d).map(|x| rows_in_r[x][j].clone()).collect::<Vec<_>>();
            let cj = (sp.coords)(&col)?;
            for i in 0..k {
                out[i * k + j] = cj[i].clone();
            }
        }
        comul_cols.push(out);
    }
    let counit = basis.iter().map(|b| a.coalg.counit_of(b)).collect();
    let coalg = CoalgebraObject::new(&f, coinvariant_labels(&f, a.labels(), &basis), SparseMap::from_columns(&f, k * k, comul_cols), counit)?;
    let one = (sp.coords)(&a.alg.unit)?;
    let mut m_cols = Vec::new();
    let mut xi_cols = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let prod = sp.phi_inv.apply(&a.alg.mul_vec(&basis[i], &basis[j]));
            let mut mv = vec![f.zero(); k];
            let mut xv = vec![f.zero(); n];
            for (p, c) in prod.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                let (x, l) = (p / n, p % n);
                f.add_mul_assign(&mut mv[x], c, &h.counit()[l]);
                f.add_mul_assign(&mut xv[l], c, &coalg.counit[x]);
            }
            m_cols.push(mv);
            xi_cols.push(xv);
        }
    }
    let q = DualYDQuadruple {
        h: h.clone(),
        yd,
        coalg,
        one,
        m: Matrix::from_columns(&f, k, &m_cols),
        xi: Matrix::from_columns(&f, n, &xi_cols),
    };
    q.validate().ensure("extracted dual quadruple")?;
    Ok(q)
}

/// φ: R⊗H → A, r⊗h ↦ rσ(h), in the RREF basis of the coinvariants.
pub fn phi_matrix<F: Field>(a: &BialgebraObject<F>, h: &HopfObject<F>, pi: &Matrix<F>, sigma: &Matrix<F>) -> Result<Matrix<F>> {
    let sp = prepare_split(a, h, pi, sigma)?;
    Ok(sp.phi_inv.inverse().expect("inverse of an inverse"))
}

/// The trivial quadruple R = K over H.
pub fn trivial_quadruple<F: Field>(h: &HopfObject<F>) -> YDQuadruple<F> {
    let f = h.field();
    let n = h.dim();
    let omega = Matrix::from_fn(f, 1, n, |_, l| h.counit()[l].clone());
    YDQuadruple {
        h: h.clone(),
        yd: YDObject::trivial(h),
        alg: AlgebraObject::ground(f),
        epsilon: vec![f.one()],
        delta: Matrix::identity(f, 1),
        omega,
    }
}

/// The trivial dual quadruple R = K over H.
pub fn trivial_dual_quadruple<F: Field>(h: &HopfObject<F>) -> DualYDQuadruple<F> {
    let f = h.field();
    let n = h.dim();
    DualYDQuadruple {
        h: h.clone(),
        yd: YDObject::trivial(h),
        coalg: CoalgebraObject::ground(f),
        one: vec![f.one()],
        m: Matrix::identity(f, 1),
        xi: Matrix::from_columns(f, n, &[h.one()]),
    }
}
