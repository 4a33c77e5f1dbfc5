//! Ambient monoidal categories (vector spaces, H-comodules, H-bicomodules,
//! H-modules, H-bimodules), their objects, and category-constrained Hom-spaces.
//! Also Yetter–Drinfeld modules and the Hopf-bimodule correspondence.

use std::collections::BTreeMap;

use crate::algcore::{AlgebraObject, BimoduleObject};
use crate::cocore::dualize_coalgebra;
use crate::error::{Error, Result};
use crate::exactlin::{unit, vaxpy, vdot, vtensor, AffineSystem, Field, Matrix, SparseMap, Subspace};
use crate::hopfcore::{check_ad_invariance, HopfObject, IntegralWitness};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CtxKind {
    Vect,
    ComodR,
    BicomodHH,
    ModR,
    BimodHH,
}

#[derive(Clone, Debug)]
pub struct CategoryContext<F: Field> {
    pub kind: CtxKind,
    pub hopf: Option<HopfObject<F>>,
    gens: Vec<usize>,
    dual_gens: Vec<usize>,
}

impl<F: Field> CategoryContext<F> {
    pub fn vect() -> Self {
        CategoryContext { kind: CtxKind::Vect, hopf: None, gens: Vec::new(), dual_gens: Vec::new() }
    }

    pub fn new(kind: CtxKind, hopf: Option<HopfObject<F>>) -> Result<Self> {
        match (kind, hopf) {
            (CtxKind::Vect, _) => Ok(Self::vect()),
            (_, None) => Err(Error::Input(format!("{kind:?} needs a Hopf algebra"))),
            (_, Some(h)) => {
                h.validate().ensure("context Hopf algebra")?;
                let gens = h.alg().generator_indices();
                let dual_gens = dualize_coalgebra(h.coalg()).generator_indices();
                Ok(CategoryContext { kind, hopf: Some(h), gens, dual_gens })
            }
        }
    }

    pub fn h(&self) -> Result<&HopfObject<F>> {
        self.hopf.as_ref().ok_or_else(|| Error::Input("context has no Hopf algebra".into()))
    }

    pub fn h_dim(&self) -> usize {
        self.hopf.as_ref().map_or(0, |h| h.dim())
    }

    /// Algebra generators of H (basis indices).
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Algebra generators of H* (dual-basis indices).
    pub fn dual_generators(&self) -> &[usize] {
        &self.dual_gens
    }

    pub fn needs_right_coaction(&self) -> bool {
        matches!(self.kind, CtxKind::ComodR | CtxKind::BicomodHH)
    }
    pub fn needs_left_coaction(&self) -> bool {
        self.kind == CtxKind::BicomodHH
    }
    pub fn needs_right_action(&self) -> bool {
        matches!(self.kind, CtxKind::ModR | CtxKind::BimodHH)
    }
    pub fn needs_left_action(&self) -> bool {
        self.kind == CtxKind::BimodHH
    }
}

/// A vector space with optional H-(co)actions.
///
/// Index conventions: right coaction V → V⊗H has row `v·h + l`; left coaction
/// V → H⊗V has row `l·dim + v`; left action H⊗V → V has column `l·dim + v`;
/// right action V⊗H → V has column `v·h + l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatObject<F: Field> {
    pub dim: usize,
    pub h_dim: usize,
    pub right_coaction: Option<SparseMap<F>>,
    pub left_coaction: Option<SparseMap<F>>,
    pub left_action: Option<SparseMap<F>>,
    pub right_action: Option<SparseMap<F>>,
}

impl<F: Field> CatObject<F> {
    pub fn plain(dim: usize) -> Self {
        CatObject { dim, h_dim: 0, right_coaction: None, left_coaction: None, left_action: None, right_action: None }
    }

    /// The unit object K with trivial structures.
    pub fn trivial(h: &HopfObject<F>) -> Self {
        let f = h.field();
        let n = h.dim();
        let u = SparseMap::from_columns(f, n, [h.one()]);
        let e = SparseMap::from_columns(f, 1, h.counit().iter().map(|c| vec![c.clone()]).collect::<Vec<_>>());
        CatObject { dim: 1, h_dim: n, right_coaction: Some(u.clone()), left_coaction: Some(u), left_action: Some(e.clone()), right_action: Some(e) }
    }

    /// H with Δ as both coactions and multiplication as both actions.
    pub fn regular(h: &HopfObject<F>) -> Self {
        CatObject {
            dim: h.dim(),
            h_dim: h.dim(),
            right_coaction: Some(h.coalg().comul.clone()),
            left_coaction: Some(h.coalg().comul.clone()),
            left_action: Some(h.alg().mul.clone()),
            right_action: Some(h.alg().mul.clone()),
        }
    }

    /// Keeps only the structures listed.
    pub fn only(&self, rco: bool, lco: bool, lact: bool, ract: bool) -> Self {
        CatObject {
            dim: self.dim,
            h_dim: self.h_dim,
            right_coaction: self.right_coaction.clone().filter(|_| rco),
            left_coaction: self.left_coaction.clone().filter(|_| lco),
            left_action: self.left_action.clone().filter(|_| lact),
            right_action: self.right_action.clone().filter(|_| ract),
        }
    }

    /// Keeps the structures `ctx` needs.
    pub fn for_context(&self, ctx: &CategoryContext<F>) -> Self {
        self.only(ctx.needs_right_coaction(), ctx.needs_left_coaction(), ctx.needs_left_action(), ctx.needs_right_action())
    }

    pub fn rco(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.right_coaction.as_ref().expect("right coaction").apply(v)
    }
    pub fn lco(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.left_coaction.as_ref().expect("left coaction").apply(v)
    }
    pub fn lact(&self, h: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.left_action.as_ref().expect("left action").field().clone();
        self.left_action.as_ref().unwrap().apply(&vtensor(&f, h, v))
    }
    pub fn ract(&self, v: &[F::Elem], h: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.right_action.as_ref().expect("right action").field().clone();
        self.right_action.as_ref().unwrap().apply(&vtensor(&f, v, h))
    }

    /// (id⊗e^l)ρ for the right coaction.
    pub fn right_coaction_op(&self, l: usize) -> SparseMap<F> {
        let m = self.right_coaction.as_ref().expect("right coaction");
        let h = self.h_dim;
        slice_op(m, self.dim, |p| (p % h == l).then_some(p / h))
    }
    /// (e^l⊗id)ρ for the left coaction.
    pub fn left_coaction_op(&self, l: usize) -> SparseMap<F> {
        let m = self.left_coaction.as_ref().expect("left coaction");
        let d = self.dim;
        slice_op(m, d, |p| (p / d == l).then_some(p % d))
    }
    /// v ↦ e_l·v.
    pub fn left_action_op(&self, l: usize) -> SparseMap<F> {
        let m = self.left_action.as_ref().expect("left action");
        let f = m.field();
        let cols = (0..self.dim).map(|j| {
            let mut c = vec![f.zero(); self.dim];
            m.accumulate_col(&mut c, l * self.dim + j, &f.one());
            c
        });
        SparseMap::from_columns(f, self.dim, cols.collect::<Vec<_>>())
    }
    /// v ↦ v·e_l.
    pub fn right_action_op(&self, l: usize) -> SparseMap<F> {
        let m = self.right_action.as_ref().expect("right action");
        let f = m.field();
        let cols = (0..self.dim).map(|j| {
            let mut c = vec![f.zero(); self.dim];
            m.accumulate_col(&mut c, j * self.h_dim + l, &f.one());
            c
        });
        SparseMap::from_columns(f, self.dim, cols.collect::<Vec<_>>())
    }

    fn require(&self, ctx: &CategoryContext<F>) -> Result<()> {
        let missing = (ctx.needs_right_coaction() && self.right_coaction.is_none())
            || (ctx.needs_left_coaction() && self.left_coaction.is_none())
            || (ctx.needs_left_action() && self.left_action.is_none())
            || (ctx.needs_right_action() && self.right_action.is_none());
        if missing {
            return Err(Error::InvalidObject(format!("object lacks structure required by {:?}", ctx.kind)));
        }
        if ctx.kind != CtxKind::Vect && self.h_dim != ctx.h_dim() {
            return Err(Error::InvalidObject("object is over a different Hopf algebra".into()));
        }
        Ok(())
    }

    /// One operator per generator whose commutation characterizes morphisms in
    /// `ctx`: coaction slices by generators of H*, actions by generators of H.
    /// Paired with the scalar each operator takes on the unit object.
    pub fn constraint_ops(&self, ctx: &CategoryContext<F>) -> Result<Vec<(SparseMap<F>, F::Elem)>> {
        self.require(ctx)?;
        let mut out = Vec::new();
        if ctx.kind == CtxKind::Vect {
            return Ok(out);
        }
        let h = ctx.h()?;
        if ctx.needs_right_coaction() {
            for &l in ctx.dual_generators() {
                out.push((self.right_coaction_op(l), h.one()[l].clone()));
            }
        }
        if ctx.needs_left_coaction() {
            for &l in ctx.dual_generators() {
                out.push((self.left_coaction_op(l), h.one()[l].clone()));
            }
        }
        if ctx.needs_left_action() {
            for &l in ctx.generators() {
                out.push((self.left_action_op(l), h.counit()[l].clone()));
            }
        }
        if ctx.needs_right_action() {
            for &l in ctx.generators() {
                out.push((self.right_action_op(l), h.counit()[l].clone()));
            }
        }
        Ok(out)
    }

    /// Operators whose common kernel is the space of (co)invariants, i.e. the
    /// image of Hom_ctx(K, X).
    pub fn coinvariance_ops(&self, ctx: &CategoryContext<F>) -> Vec<Matrix<F>> {
        let ops = self.constraint_ops(ctx).expect("object valid in context");
        ops.into_iter()
            .map(|(op, s)| {
                let d = op.to_dense();
                let id = Matrix::identity(d.field(), self.dim).scale(&s);
                d.sub(&id)
            })
            .collect()
    }

    pub fn invariants(&self, ctx: &CategoryContext<F>) -> Result<Subspace<F>> {
        self.constraint_ops(ctx)?;
        let f = match &ctx.hopf {
            Some(h) => h.field().clone(),
            None => return Err(Error::Input("vector spaces have no invariants to compute".into())),
        };
        let m = self.coinvariance_ops(ctx).into_iter().fold(Matrix::zeros(&f, 0, self.dim), |a, b| a.vstack(&b));
        Ok(Subspace::kernel(&m))
    }

    /// X⊗Y with diagonal structures (those present on both factors).
    pub fn tensor(&self, other: &Self, ctx: &CategoryContext<F>) -> Self {
        let (dx, dy) = (self.dim, other.dim);
        let d = dx * dy;
        let h = match &ctx.hopf {
            Some(h) if ctx.kind != CtxKind::Vect => h,
            _ => return Self::plain(d),
        };
        let f = h.field();
        let n = h.dim();
        let mut out = Self::plain(d);
        out.h_dim = n;
        if let (Some(a), Some(b)) = (&self.right_coaction, &other.right_coaction) {
            let mut t = Vec::new();
            for i in 0..dx {
                for j in 0..dy {
                    for (p, c) in a.col(i) {
                        for (q, e) in b.col(j) {
                            let ce = f.mul(c, e);
                            for (l, g) in h.alg().mul_basis(p % n, q % n) {
                                t.push((((p / n) * dy + q / n) * n + l, i * dy + j, f.mul(&ce, g)));
                            }
                        }
                    }
                }
            }
            out.right_coaction = Some(SparseMap::from_triples(f, d * n, d, t));
        }
        if let (Some(a), Some(b)) = (&self.left_coaction, &other.left_coaction) {
            let mut t = Vec::new();
            for i in 0..dx {
                for j in 0..dy {
                    for (p, c) in a.col(i) {
                        for (q, e) in b.col(j) {
                            let ce = f.mul(c, e);
                            for (l, g) in h.alg().mul_basis(p / dx, q / dy) {
                                t.push((l * d + (p % dx) * dy + q % dy, i * dy + j, f.mul(&ce, g)));
                            }
                        }
                    }
                }
            }
            out.left_coaction = Some(SparseMap::from_triples(f, n * d, d, t));
        }
        if let (Some(a), Some(b)) = (&self.left_action, &other.left_action) {
            let mut t = Vec::new();
            for l in 0..n {
                for (p, c) in h.comul_basis(l) {
                    for i in 0..dx {
                        for j in 0..dy {
                            for (x, e) in a.col((p / n) * dx + i) {
                                for (y, g) in b.col((p % n) * dy + j) {
                                    t.push((x * dy + y, l * d + i * dy + j, f.mul(&f.mul(c, e), g)));
                                }
                            }
                        }
                    }
                }
            }
            out.left_action = Some(SparseMap::from_triples(f, d, n * d, t));
        }
        if let (Some(a), Some(b)) = (&self.right_action, &other.right_action) {
            let mut t = Vec::new();
            for l in 0..n {
                for (p, c) in h.comul_basis(l) {
                    for i in 0..dx {
                        for j in 0..dy {
                            for (x, e) in a.col(i * n + p / n) {
                                for (y, g) in b.col(j * n + p % n) {
                                    t.push((x * dy + y, (i * dy + j) * n + l, f.mul(&f.mul(c, e), g)));
                                }
                            }
                        }
                    }
                }
            }
            out.right_action = Some(SparseMap::from_triples(f, d, d * n, t));
        }
        out
    }

    /// X⊕Y, basis of X first.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (d1, d2) = (self.dim, other.dim);
        let d = d1 + d2;
        let n = self.h_dim.max(other.h_dim);
        let mut out = Self::plain(d);
        out.h_dim = n;
        let both = |a: &Option<SparseMap<F>>, b: &Option<SparseMap<F>>| match (a, b) {
            (Some(a), Some(b)) => Some((a.clone(), b.clone())),
            _ => None,
        };
        if let Some((a, b)) = both(&self.right_coaction, &other.right_coaction) {
            let f = a.field().clone();
            let mut t = Vec::new();
            for j in 0..d1 {
                for (p, c) in a.col(j) {
                    t.push((*p, j, c.clone()));
                }
            }
            for j in 0..d2 {
                for (p, c) in b.col(j) {
                    t.push(((p / n + d1) * n + p % n, d1 + j, c.clone()));
                }
            }
            out.right_coaction = Some(SparseMap::from_triples(&f, d * n, d, t));
        }
        if let Some((a, b)) = both(&self.left_coaction, &other.left_coaction) {
            let f = a.field().clone();
            let mut t = Vec::new();
            for j in 0..d1 {
                for (p, c) in a.col(j) {
                    t.push(((p / d1) * d + p % d1, j, c.clone()));
                }
            }
            for j in 0..d2 {
                for (p, c) in b.col(j) {
                    t.push(((p / d2) * d + d1 + p % d2, d1 + j, c.clone()));
                }
            }
            out.left_coaction = Some(SparseMap::from_triples(&f, n * d, d, t));
        }
        if let Some((a, b)) = both(&self.left_action, &other.left_action) {
            let f = a.field().clone();
            let mut t = Vec::new();
            for l in 0..n {
                for j in 0..d1 {
                    for (p, c) in a.col(l * d1 + j) {
                        t.push((*p, l * d + j, c.clone()));
                    }
                }
                for j in 0..d2 {
                    for (p, c) in b.col(l * d2 + j) {
                        t.push((d1 + p, l * d + d1 + j, c.clone()));
                    }
                }
            }
            out.left_action = Some(SparseMap::from_triples(&f, d, n * d, t));
        }
        if let Some((a, b)) = both(&self.right_action, &other.right_action) {
            let f = a.field().clone();
            let mut t = Vec::new();
            for l in 0..n {
                for j in 0..d1 {
                    for (p, c) in a.col(j * n + l) {
                        t.push((*p, j * n + l, c.clone()));
                    }
                }
                for j in 0..d2 {
                    for (p, c) in b.col(j * n + l) {
                        t.push((d1 + p, (d1 + j) * n + l, c.clone()));
                    }
                }
            }
            out.right_action = Some(SparseMap::from_triples(&f, d, d * n, t));
        }
        out
    }

    /// Moves every structure along `inc: new → old` and `proj: old → new`
    /// (the caller guarantees compatibility; check with `is_morphism`).
    pub fn transport(&self, inc: &Matrix<F>, proj: &Matrix<F>) -> Self {
        let f = inc.field();
        let k = inc.cols();
        let n = self.h_dim;
        let mut out = Self::plain(k);
        out.h_dim = n;
        let inc_cols = inc.columns();
        if let Some(m) = &self.right_coaction {
            let cols = inc_cols.iter().map(|v| {
                let r = m.apply(v);
                let mut o = vec![f.zero(); k * n];
                for l in 0..n {
                    let slice = (0..self.dim).map(|x| r[x * n + l].clone()).collect::<Vec<_>>();
                    for (a, c) in proj.apply(&slice).into_iter().enumerate() {
                        o[a * n + l] = c;
                    }
                }
                o
            });
            out.right_coaction = Some(SparseMap::from_columns(f, k * n, cols.collect::<Vec<_>>()));
        }
        if let Some(m) = &self.left_coaction {
            let cols = inc_cols.iter().map(|v| {
                let r = m.apply(v);
                let mut o = vec![f.zero(); n * k];
                for l in 0..n {
                    let slice = r[l * self.dim..(l + 1) * self.dim].to_vec();
                    for (a, c) in proj.apply(&slice).into_iter().enumerate() {
                        o[l * k + a] = c;
                    }
                }
                o
            });
            out.left_coaction = Some(SparseMap::from_columns(f, n * k, cols.collect::<Vec<_>>()));
        }
        if self.left_action.is_some() {
            let cols = (0..n * k).map(|p| proj.apply(&self.lact(&unit(f, n, p / k), &inc_cols[p % k])));
            out.left_action = Some(SparseMap::from_columns(f, k, cols.collect::<Vec<_>>()));
        }
        if self.right_action.is_some() {
            let cols = (0..k * n).map(|p| proj.apply(&self.ract(&inc_cols[p / n], &unit(f, n, p % n))));
            out.right_action = Some(SparseMap::from_columns(f, k, cols.collect::<Vec<_>>()));
        }
        out
    }

    /// The subobject on `s` (RREF basis), checked to be stable.
    pub fn sub_object(&self, s: &Subspace<F>, ctx: &CategoryContext<F>) -> Result<Self> {
        let f = s.field();
        let inc = s.inclusion();
        let proj = Matrix::from_fn(f, s.dim(), self.dim, |i, j| if s.pivots()[i] == j { f.one() } else { f.zero() });
        let sub = self.transport(&inc, &proj);
        if let Some(w) = is_morphism(ctx, &sub, self, &inc) {
            return Err(Error::InvalidObject(format!("subspace is not a subobject: {w}")));
        }
        Ok(sub)
    }

    /// The quotient object on the canonical complement of `s`, with projection.
    pub fn quotient_object(&self, s: &Subspace<F>, ctx: &CategoryContext<F>) -> Result<(Self, Matrix<F>)> {
        let f = s.field();
        let keep = s.complement_indices();
        let lift = Matrix::from_fn(f, self.dim, keep.len(), |i, j| if keep[j] == i { f.one() } else { f.zero() });
        let proj = s.quotient_projection();
        let q = self.transport(&lift, &proj);
        if let Some(w) = is_morphism(ctx, self, &q, &proj) {
            return Err(Error::InvalidObject(format!("subspace is not a subobject: {w}")));
        }
        Ok((q, proj))
    }

    /// Structure axioms for everything present, plus the compatibilities
    /// between them (bicomodule, bimodule, Hopf bimodule).
    pub fn validate(&self, h: &HopfObject<F>) -> Report {
        let f = h.field();
        let n = h.dim();
        let d = self.dim;
        let mut rep = Report::new();
        let e = |i| unit(f, d, i);
        if self.right_coaction.is_some() {
            let mut w = None;
            for v in 0..d {
                let r = self.rco(&e(v));
                let mut lhs = vec![f.zero(); d * n * n];
                let mut rhs = vec![f.zero(); d * n * n];
                let mut counit = vec![f.zero(); d];
                for (p, c) in crate::exactlin::sparsify(f, &r) {
                    let (x, l) = (p / n, p % n);
                    for (q, g) in crate::exactlin::sparsify(f, &self.rco(&e(x))) {
                        f.add_mul_assign(&mut lhs[q * n + l], &c, &g);
                    }
                    for (q, g) in h.comul_basis(l) {
                        f.add_mul_assign(&mut rhs[x * n * n + q], &c, g);
                    }
                    f.add_mul_assign(&mut counit[x], &c, &h.counit()[l]);
                }
                if lhs != rhs || counit != e(v) {
                    w = Some(format!("v{v}"));
                    break;
                }
            }
            rep.record("right comodule", w);
        }
        if self.left_coaction.is_some() {
            let mut w = None;
            for v in 0..d {
                let r = self.lco(&e(v));
                let mut lhs = vec![f.zero(); n * n * d];
                let mut rhs = vec![f.zero(); n * n * d];
                let mut counit = vec![f.zero(); d];
                for (p, c) in crate::exactlin::sparsify(f, &r) {
                    let (l, x) = (p / d, p % d);
                    for (q, g) in h.comul_basis(l) {
                        f.add_mul_assign(&mut lhs[q * d + x], &c, g);
                    }
                    for (q, g) in crate::exactlin::sparsify(f, &self.lco(&e(x))) {
                        f.add_mul_assign(&mut rhs[l * n * d + q], &c, &g);
                    }
                    f.add_mul_assign(&mut counit[x], &c, &h.counit()[l]);
                }
                if lhs != rhs || counit != e(v) {
                    w = Some(format!("v{v}"));
                    break;
                }
            }
            rep.record("left comodule", w);
        }
        if self.right_coaction.is_some() && self.left_coaction.is_some() {
            // (ρˡ⊗H)ρʳ = (H⊗ρʳ)ρˡ in H⊗V⊗H
            let w = (0..d).find(|&v| self.left_then_right(h, &e(v)) != self.right_then_left(h, &e(v)));
            rep.record("bicomodule", w.map(|v| format!("v{v}")));
        }
        if self.left_action.is_some() {
            let mut w = None;
            'l: for a in 0..n {
                for b in 0..n {
                    let ab = h.mul_vec(&h.basis(a), &h.basis(b));
                    for v in 0..d {
                        if self.lact(&ab, &e(v)) != self.lact(&h.basis(a), &self.lact(&h.basis(b), &e(v))) {
                            w = Some(format!("({}, {}, v{v})", h.labels()[a], h.labels()[b]));
                            break 'l;
                        }
                    }
                }
            }
            if w.is_none() {
                w = (0..d).find(|&v| self.lact(&h.one(), &e(v)) != e(v)).map(|v| format!("unit on v{v}"));
            }
            rep.record("left module", w);
        }
        if self.right_action.is_some() {
            let mut w = None;
            'r: for a in 0..n {
                for b in 0..n {
                    let ab = h.mul_vec(&h.basis(a), &h.basis(b));
                    for v in 0..d {
                        if self.ract(&e(v), &ab) != self.ract(&self.ract(&e(v), &h.basis(a)), &h.basis(b)) {
                            w = Some(format!("(v{v}, {}, {})", h.labels()[a], h.labels()[b]));
                            break 'r;
                        }
                    }
                }
            }
            if w.is_none() {
                w = (0..d).find(|&v| self.ract(&e(v), &h.one()) != e(v)).map(|v| format!("unit on v{v}"));
            }
            rep.record("right module", w);
        }
        if self.left_action.is_some() && self.right_action.is_some() {
            let mut w = None;
            'm: for a in 0..n {
                for b in 0..n {
                    for v in 0..d {
                        let l = self.ract(&self.lact(&h.basis(a), &e(v)), &h.basis(b));
                        let r = self.lact(&h.basis(a), &self.ract(&e(v), &h.basis(b)));
                        if l != r {
                            w = Some(format!("({}, v{v}, {})", h.labels()[a], h.labels()[b]));
                            break 'm;
                        }
                    }
                }
            }
            rep.record("bimodule", w);
        }
        // coactions are module maps (Hopf-module compatibility)
        for (co_right, act_left) in [(true, true), (true, false), (false, true), (false, false)] {
            let co = if co_right { &self.right_coaction } else { &self.left_coaction };
            let act = if act_left { &self.left_action } else { &self.right_action };
            if co.is_none() || act.is_none() {
                continue;
            }
            let mut w = None;
            'c: for a in 0..n {
                for v in 0..d {
                    let lhs = if act_left { self.coact(h, co_right, &self.lact(&h.basis(a), &e(v))) } else { self.coact(h, co_right, &self.ract(&e(v), &h.basis(a))) };
                    let rhs = self.act_on_coaction(h, co_right, act_left, a, &e(v));
                    if lhs != rhs {
                        w = Some(format!("({}, v{v})", h.labels()[a]));
                        break 'c;
                    }
                }
            }
            let name = format!(
                "{} coaction is {} linear",
                if co_right { "right" } else { "left" },
                if act_left { "left" } else { "right" }
            );
            rep.record(name, w);
        }
        rep
    }

    fn coact(&self, _h: &HopfObject<F>, right: bool, v: &[F::Elem]) -> Vec<F::Elem> {
        if right {
            self.rco(v)
        } else {
            self.lco(v)
        }
    }

    /// The diagonal action of e_a on ρ(v) in V⊗H or H⊗V.
    fn act_on_coaction(&self, h: &HopfObject<F>, co_right: bool, act_left: bool, a: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = h.field();
        let n = h.dim();
        let d = self.dim;
        let act_v = |b: usize, x: usize| if act_left { self.lact(&h.basis(b), &unit(f, d, x)) } else { self.ract(&unit(f, d, x), &h.basis(b)) };
        let act_h = |b: usize, l: usize| if act_left { h.mul_vec(&h.basis(b), &h.basis(l)) } else { h.mul_vec(&h.basis(l), &h.basis(b)) };
        let mut out = vec![f.zero(); d * n];
        for (p, c) in crate::exactlin::sparsify(f, &self.coact(h, co_right, v)) {
            for (q, g) in h.comul_basis(a) {
                let (a1, a2) = (q / n, q % n);
                let t = if co_right {
                    let (x, l) = (p / n, p % n);
                    vtensor(f, &act_v(a1, x), &act_h(a2, l))
                } else {
                    let (l, x) = (p / d, p % d);
                    vtensor(f, &act_h(a1, l), &act_v(a2, x))
                };
                vaxpy(f, &mut out, &f.mul(&c, g), &t);
            }
        }
        out
    }

    /// (ρˡ⊗H)ρʳ(v) in H⊗V⊗H, index (l·dim + x)·h + k.
    pub fn left_then_right(&self, h: &HopfObject<F>, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = h.field();
        let n = h.dim();
        let d = self.dim;
        let mut out = vec![f.zero(); n * d * n];
        for (p, c) in crate::exactlin::sparsify(f, &self.rco(v)) {
            let (x, k) = (p / n, p % n);
            for (q, g) in self.left_coaction.as_ref().unwrap().col(x) {
                f.add_mul_assign(&mut out[q * n + k], &c, g);
            }
        }
        out
    }

    /// (H⊗ρʳ)ρˡ(v) in H⊗V⊗H.
    pub fn right_then_left(&self, h: &HopfObject<F>, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = h.field();
        let n = h.dim();
        let d = self.dim;
        let mut out = vec![f.zero(); n * d * n];
        for (p, c) in crate::exactlin::sparsify(f, &self.lco(v)) {
            let (l, x) = (p / d, p % d);
            for (q, g) in self.right_coaction.as_ref().unwrap().col(x) {
                f.add_mul_assign(&mut out[l * d * n + q], &c, g);
            }
        }
        out
    }
}

fn slice_op<F: Field>(m: &SparseMap<F>, dim: usize, pick: impl Fn(usize) -> Option<usize>) -> SparseMap<F> {
    let f = m.field();
    let t = (0..dim).flat_map(|j| m.col(j).iter().filter_map(|(p, c)| pick(*p).map(|v| (v, j, c.clone()))).collect::<Vec<_>>());
    SparseMap::from_triples(f, dim, dim, t)
}

/// Full-structure check that `f: X → Y` (dim Y × dim X) is a morphism in `ctx`.
pub fn is_morphism<F: Field>(ctx: &CategoryContext<F>, x: &CatObject<F>, y: &CatObject<F>, f: &Matrix<F>) -> Option<String> {
    if f.rows() != y.dim || f.cols() != x.dim {
        return Some("shape".into());
    }
    if ctx.kind == CtxKind::Vect {
        return None;
    }
    let h = ctx.hopf.as_ref()?;
    let fld = h.field();
    let n = h.dim();
    let idh = Matrix::identity(fld, n);
    for j in 0..x.dim {
        let ej = unit(fld, x.dim, j);
        let fe = f.apply(&ej);
        if ctx.needs_right_coaction() && y.rco(&fe) != f.kron(&idh).apply(&x.rco(&ej)) {
            return Some(format!("not right colinear at basis {j}"));
        }
        if ctx.needs_left_coaction() && y.lco(&fe) != idh.kron(f).apply(&x.lco(&ej)) {
            return Some(format!("not left colinear at basis {j}"));
        }
        for l in 0..n {
            let hl = unit(fld, n, l);
            if ctx.needs_left_action() && y.lact(&hl, &fe) != f.apply(&x.lact(&hl, &ej)) {
                return Some(format!("not left linear at basis {j}"));
            }
            if ctx.needs_right_action() && y.ract(&fe, &hl) != f.apply(&x.ract(&ej, &hl)) {
                return Some(format!("not right linear at basis {j}"));
            }
        }
    }
    None
}

/// Adds the rows of f·P − Q·f = rhs (f: dx → dy, unknown index i·dx + l).
pub fn push_intertwiner_rows<F: Field>(
    sys: &mut AffineSystem<F>,
    offset: usize,
    dx: usize,
    dy: usize,
    p: &SparseMap<F>,
    q: &SparseMap<F>,
    rhs: Option<&Matrix<F>>,
) {
    let f = p.field();
    let qt = q.transpose();
    for i in 0..dy {
        for j in 0..dx {
            let mut row: BTreeMap<usize, F::Elem> = BTreeMap::new();
            for (l, c) in p.col(j) {
                let e = row.entry(offset + i * dx + l).or_insert_with(|| f.zero());
                *e = f.add(e, c);
            }
            for (l, c) in qt.col(i) {
                let e = row.entry(offset + l * dx + j).or_insert_with(|| f.zero());
                *e = f.sub(e, c);
            }
            let r = rhs.map_or_else(|| f.zero(), |m| m.get(i, j).clone());
            sys.push_sparse(&row.into_iter().filter(|(_, c)| !f.is_zero(c)).collect::<Vec<_>>(), r);
        }
    }
}

/// Extra linearity required of Hom-space elements.
pub enum HomExtra<'a, F: Field> {
    None,
    /// A-bilinearity for the given A-bimodule structures on source and target.
    BimoduleOver { a: &'a AlgebraObject<F>, source: &'a BimoduleObject<F>, target: &'a BimoduleObject<F> },
}

#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix<F>>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// All operator pairs whose commutation defines morphisms X → Y.
pub fn morphism_constraints<F: Field>(
    ctx: &CategoryContext<F>,
    x: &CatObject<F>,
    y: &CatObject<F>,
    extra: &HomExtra<'_, F>,
) -> Result<Vec<(SparseMap<F>, SparseMap<F>)>> {
    let ox = x.constraint_ops(ctx)?;
    let oy = y.constraint_ops(ctx)?;
    let mut pairs = ox.into_iter().zip(oy).map(|((a, _), (b, _))| (a, b)).collect::<Vec<_>>();
    if let HomExtra::BimoduleOver { a, source, target } = extra {
        if source.dim != x.dim || target.dim != y.dim {
            return Err(Error::Shape("bimodule structure dimension".into()));
        }
        for g in a.generator_indices() {
            let e = a.basis(g);
            pairs.push((SparseMap::from_dense(&source.left_op(a.dim, &e)), SparseMap::from_dense(&target.left_op(a.dim, &e))));
            pairs.push((SparseMap::from_dense(&source.right_op(a.dim, &e)), SparseMap::from_dense(&target.right_op(a.dim, &e))));
        }
    }
    Ok(pairs)
}

pub fn hom_space<F: Field>(ctx: &CategoryContext<F>, x: &CatObject<F>, y: &CatObject<F>, extra: HomExtra<'_, F>) -> Result<HomSpace<F>> {
    let f = ctx_field(ctx, x, y)?;
    let (dx, dy) = (x.dim, y.dim);
    let pairs = morphism_constraints(ctx, x, y, &extra)?;
    let mut sys = AffineSystem::new(&f, dx * dy);
    for (p, q) in &pairs {
        push_intertwiner_rows(&mut sys, 0, dx, dy, p, q, None);
    }
    let basis = sys
        .kernel()
        .basis()
        .iter()
        .map(|v| Matrix::from_fn(&f, dy, dx, |i, l| v[i * dx + l].clone()))
        .collect::<Vec<_>>();
    for m in &basis {
        if let Some(w) = is_morphism(ctx, x, y, m) {
            return Err(Error::Verification(format!("hom-space basis element: {w}")));
        }
        if let HomExtra::BimoduleOver { a, source, target } = &extra {
            if let Some(w) = bilinearity_failure(a, source, target, m) {
                return Err(Error::Verification(format!("hom-space basis element: {w}")));
            }
        }
    }
    Ok(HomSpace { source_dim: dx, target_dim: dy, basis })
}

fn ctx_field<F: Field>(ctx: &CategoryContext<F>, x: &CatObject<F>, y: &CatObject<F>) -> Result<F> {
    if let Some(h) = &ctx.hopf {
        return Ok(h.field().clone());
    }
    for o in [x, y] {
        if let Some(m) = [&o.right_coaction, &o.left_coaction, &o.left_action, &o.right_action].into_iter().flatten().next() {
            return Ok(m.field().clone());
        }
    }
    Err(Error::Input("cannot infer the field; use hom_space_vect".into()))
}

/// Hom in vector spaces, with optional bilinearity.
pub fn hom_space_over<F: Field>(field: &F, ctx: &CategoryContext<F>, x: &CatObject<F>, y: &CatObject<F>, extra: HomExtra<'_, F>) -> Result<HomSpace<F>> {
    if ctx.hopf.is_some() {
        return hom_space(ctx, x, y, extra);
    }
    let (dx, dy) = (x.dim, y.dim);
    let pairs = morphism_constraints(ctx, x, y, &extra)?;
    let mut sys = AffineSystem::new(field, dx * dy);
    for (p, q) in &pairs {
        push_intertwiner_rows(&mut sys, 0, dx, dy, p, q, None);
    }
    let basis = sys
        .kernel()
        .basis()
        .iter()
        .map(|v| Matrix::from_fn(field, dy, dx, |i, l| v[i * dx + l].clone()))
        .collect::<Vec<_>>();
    if let HomExtra::BimoduleOver { a, source, target } = &extra {
        for m in &basis {
            if let Some(w) = bilinearity_failure(a, source, target, m) {
                return Err(Error::Verification(format!("hom-space basis element: {w}")));
            }
        }
    }
    Ok(HomSpace { source_dim: dx, target_dim: dy, basis })
}

pub fn bilinearity_failure<F: Field>(a: &AlgebraObject<F>, x: &BimoduleObject<F>, y: &BimoduleObject<F>, m: &Matrix<F>) -> Option<String> {
    for i in 0..a.dim {
        let e = a.basis(i);
        if m.mul(&x.left_op(a.dim, &e)) != y.left_op(a.dim, &e).mul(m) {
            return Some(format!("not left {}-linear", a.labels[i]));
        }
        if m.mul(&x.right_op(a.dim, &e)) != y.right_op(a.dim, &e).mul(m) {
            return Some(format!("not right {}-linear", a.labels[i]));
        }
    }
    None
}

/// A left–left Yetter–Drinfeld module: `action` H⊗V → V (column `l·dim + v`),
/// `coaction` V → H⊗V (row `l·dim + v`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDObject<F: Field> {
    pub dim: usize,
    pub action: SparseMap<F>,
    pub coaction: SparseMap<F>,
}

impl<F: Field> YDObject<F> {
    /// K with ʰv = ε(h)v and v ↦ 1⊗v.
    pub fn trivial(h: &HopfObject<F>) -> Self {
        let t = CatObject::trivial(h);
        YDObject { dim: 1, action: t.left_action.unwrap(), coaction: t.left_coaction.unwrap() }
    }

    pub fn act(&self, h: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        self.action.apply(&vtensor(self.action.field(), h, v))
    }
    pub fn coact(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.coaction.apply(v)
    }

    pub fn as_cat_object(&self, h_dim: usize) -> CatObject<F> {
        CatObject {
            dim: self.dim,
            h_dim,
            right_coaction: None,
            left_coaction: Some(self.coaction.clone()),
            left_action: Some(self.action.clone()),
            right_action: None,
        }
    }

    pub fn validate(&self, h: &HopfObject<F>) -> Report {
        let mut rep = self.as_cat_object(h.dim()).validate(h);
        rep.checks.retain(|c| c.name == "left module" || c.name == "left comodule");
        let f = h.field();
        let n = h.dim();
        let d = self.dim;
        let mut w = None;
        'y: for a in 0..n {
            let d2 = h.comul2_basis(a);
            for v in 0..d {
                let ev = unit(f, d, v);
                let lhs = self.coact(&self.act(&h.basis(a), &ev));
                let mut rhs = vec![f.zero(); n * d];
                let co = crate::exactlin::sparsify(f, &self.coact(&ev));
                for (h1, h2, h3, c) in &d2 {
                    let s3 = h.antipode.col(*h3);
                    for (p, g) in &co {
                        let (l, x) = (p / d, p % d);
                        let left = h.mul_vec(&h.mul_vec(&h.basis(*h1), &h.basis(l)), &s3);
                        let right = self.act(&h.basis(*h2), &unit(f, d, x));
                        vaxpy(f, &mut rhs, &f.mul(c, g), &vtensor(f, &left, &right));
                    }
                }
                if lhs != rhs {
                    w = Some(format!("({}, v{v})", h.labels()[a]));
                    break 'y;
                }
            }
        }
        rep.record("Yetter-Drinfeld compatibility", w);
        rep
    }

    /// V⊗W with h(v⊗w) = h₁v⊗h₂w and v⊗w ↦ v₋₁w₋₁⊗v₀⊗w₀.
    pub fn tensor(&self, other: &Self, h: &HopfObject<F>) -> Self {
        let a = self.as_cat_object(h.dim());
        let b = other.as_cat_object(h.dim());
        let ctx = CategoryContext { kind: CtxKind::BimodHH, hopf: Some(h.clone()), gens: vec![], dual_gens: vec![] };
        let t = a.tensor(&b, &ctx);
        YDObject { dim: t.dim, action: t.left_action.unwrap(), coaction: t.left_coaction.unwrap() }
    }
}

/// c(v⊗w) = Σ v₋₁·w ⊗ v₀, as a (dim W·dim V) × (dim V·dim W) matrix.
pub fn braiding<F: Field>(v: &YDObject<F>, w: &YDObject<F>, h: &HopfObject<F>) -> Matrix<F> {
    let f = h.field();
    let (dv, dw) = (v.dim, w.dim);
    let cols = (0..dv * dw)
        .map(|p| {
            let (i, j) = (p / dw, p % dw);
            let mut out = vec![f.zero(); dw * dv];
            for (q, c) in v.coaction.col(i) {
                let (l, x) = (q / dv, q % dv);
                let hw = w.act(&h.basis(l), &unit(f, dw, j));
                vaxpy(f, &mut out, c, &vtensor(f, &hw, &unit(f, dv, x)));
            }
            out
        })
        .collect::<Vec<_>>();
    Matrix::from_columns(f, dw * dv, &cols)
}

/// Right coinvariants: kernel of ρʳ − (·⊗1), RREF basis.
pub fn right_coinvariants<F: Field>(v: &CatObject<F>, h: &HopfObject<F>) -> Subspace<F> {
    let f = h.field();
    let n = h.dim();
    let d = v.dim;
    let cols = (0..d)
        .map(|j| {
            let mut r = v.rco(&unit(f, d, j));
            for (l, u) in h.one().iter().enumerate() {
                r[j * n + l] = f.sub(&r[j * n + l], u);
            }
            r
        })
        .collect::<Vec<_>>();
    Subspace::kernel(&Matrix::from_columns(f, d * n, &cols))
}

/// V^{co H} with ʰv = h₁·v·S(h₂) and the restricted left coaction.
pub fn yd_from_hopf_bimodule<F: Field>(v: &CatObject<F>, h: &HopfObject<F>) -> Result<(YDObject<F>, Subspace<F>)> {
    if v.right_coaction.is_none() || v.left_coaction.is_none() || v.left_action.is_none() || v.right_action.is_none() {
        return Err(Error::InvalidObject("Hopf bimodule needs both actions and both coactions".into()));
    }
    v.validate(h).ensure("Hopf bimodule")?;
    let f = h.field();
    let n = h.dim();
    let co = right_coinvariants(v, h);
    let k = co.dim();
    let coords = |x: &[F::Elem]| co.coords(x).ok_or_else(|| Error::Verification("image leaves the coinvariants".into()));
    let mut acols = Vec::with_capacity(n * k);
    for l in 0..n {
        for b in co.basis() {
            let mut out = vec![f.zero(); v.dim];
            for (p, c) in h.comul_basis(l) {
                let t = v.ract(&v.lact(&h.basis(p / n), b), &h.antipode.col(p % n));
                vaxpy(f, &mut out, c, &t);
            }
            acols.push(coords(&out)?);
        }
    }
    let mut ccols = Vec::with_capacity(k);
    for b in co.basis() {
        let r = v.lco(b);
        let mut out = Vec::with_capacity(n * k);
        for l in 0..n {
            out.extend(coords(&r[l * v.dim..(l + 1) * v.dim])?);
        }
        ccols.push(out);
    }
    let yd = YDObject { dim: k, action: SparseMap::from_columns(f, k, acols), coaction: SparseMap::from_columns(f, n * k, ccols) };
    Ok((yd, co))
}

/// W⊗H with h(w⊗k) = h₁w⊗h₂k, (w⊗k)h = w⊗kh, ρˡ = w₋₁k₁⊗w₀⊗k₂, ρʳ = w⊗k₁⊗k₂.
pub fn hopf_bimodule_from_yd<F: Field>(w: &YDObject<F>, h: &HopfObject<F>) -> CatObject<F> {
    let f = h.field();
    let n = h.dim();
    let dw = w.dim;
    let d = dw * n;
    let mut la = Vec::new();
    let mut ra = Vec::new();
    let mut lc = Vec::new();
    let mut rc = Vec::new();
    for x in 0..dw {
        for k in 0..n {
            let col = x * n + k;
            for l in 0..n {
                for (p, c) in h.comul_basis(l) {
                    let (h1, h2) = (p / n, p % n);
                    for (y, e) in w.action.col(h1 * dw + x) {
                        for (m, g) in h.alg().mul_basis(h2, k) {
                            la.push((y * n + m, l * d + col, f.mul(&f.mul(c, e), g)));
                        }
                    }
                }
                for (m, g) in h.alg().mul_basis(k, l) {
                    ra.push((x * n + m, col * n + l, g.clone()));
                }
            }
            for (p, c) in h.comul_basis(k) {
                let (k1, k2) = (p / n, p % n);
                rc.push(((x * n + k1) * n + k2, col, c.clone()));
                for (q, e) in w.coaction.col(x) {
                    let (l, y) = (q / dw, q % dw);
                    for (m, g) in h.alg().mul_basis(l, k1) {
                        lc.push((m * d + y * n + k2, col, f.mul(&f.mul(c, e), g)));
                    }
                }
            }
        }
    }
    CatObject {
        dim: d,
        h_dim: n,
        right_coaction: Some(SparseMap::from_triples(f, d * n, d, rc)),
        left_coaction: Some(SparseMap::from_triples(f, n * d, d, lc)),
        left_action: Some(SparseMap::from_triples(f, d, n * d, la)),
        right_action: Some(SparseMap::from_triples(f, d, d * n, ra)),
    }
}

/// φ_V(v⊗h) = v·h from V^{co H}⊗H to V, with its inverse; both checked to be
/// morphisms of Hopf bimodules.
pub fn phi_iso<F: Field>(v: &CatObject<F>, h: &HopfObject<F>) -> Result<(Matrix<F>, Matrix<F>)> {
    let (yd, co) = yd_from_hopf_bimodule(v, h)?;
    let src = hopf_bimodule_from_yd(&yd, h);
    let f = h.field();
    let n = h.dim();
    let cols = (0..src.dim).map(|p| v.ract(&co.basis()[p / n], &h.basis(p % n))).collect::<Vec<_>>();
    let phi = Matrix::from_columns(f, v.dim, &cols);
    let inv = phi.inverse().ok_or_else(|| Error::Verification("φ_V is not bijective".into()))?;
    let ctx = CategoryContext { kind: CtxKind::BicomodHH, hopf: Some(h.clone()), gens: vec![], dual_gens: vec![] };
    let full = |ctx: &CategoryContext<F>, k: CtxKind| CategoryContext { kind: k, ..ctx.clone() };
    for k in [CtxKind::BicomodHH, CtxKind::BimodHH] {
        let c = full(&ctx, k);
        if let Some(w) = is_morphism(&c, &src, v, &phi) {
            return Err(Error::Verification(format!("φ_V: {w}")));
        }
        if let Some(w) = is_morphism(&c, v, &src, &inv) {
            return Err(Error::Verification(format!("φ_V⁻¹: {w}")));
        }
    }
    Ok((phi, inv))
}

/// The object H⊗M⊗H of _A^H𝔐_A^H: free coactions on the outer factors and
/// A acting diagonally through its coactions.
pub fn induced_object<F: Field>(h: &HopfObject<F>, a: &AlgebraObject<F>, a_obj: &CatObject<F>, m_obj: &CatObject<F>, m_bimod: &BimoduleObject<F>) -> (CatObject<F>, BimoduleObject<F>) {
    let f = h.field();
    let n = h.dim();
    let dm = m_obj.dim;
    let d = n * dm * n;
    let idx = |x: usize, m: usize, y: usize| (x * dm + m) * n + y;
    let mut lc = Vec::new();
    let mut rc = Vec::new();
    for x in 0..n {
        for m in 0..dm {
            for y in 0..n {
                for (p, c) in h.comul_basis(x) {
                    lc.push(((p / n) * d + idx(p % n, m, y), idx(x, m, y), c.clone()));
                }
                for (p, c) in h.comul_basis(y) {
                    rc.push((idx(x, m, p / n) * n + p % n, idx(x, m, y), c.clone()));
                }
            }
        }
    }
    // a ↦ a₋₁⊗a₀⊗a₁
    let a3 = (0..a.dim).map(|i| a_obj.left_then_right(h, &a.basis(i))).collect::<Vec<_>>();
    let da = a.dim;
    let mut la = Vec::new();
    let mut ra = Vec::new();
    for i in 0..da {
        for (q, c) in crate::exactlin::sparsify(f, &a3[i]) {
            let (al, a0, ar) = (q / (da * n), (q / n) % da, q % n);
            for x in 0..n {
                for m in 0..dm {
                    for y in 0..n {
                        let am = m_bimod.act_left(da, &a.basis(a0), &unit(f, dm, m));
                        let ma = m_bimod.act_right(da, &unit(f, dm, m), &a.basis(a0));
                        for (xx, e1) in h.alg().mul_basis(al, x) {
                            for (yy, e2) in h.alg().mul_basis(ar, y) {
                                let ce = f.mul(&f.mul(&c, e1), e2);
                                for (mm, g) in crate::exactlin::sparsify(f, &am) {
                                    la.push((idx(*xx, mm, *yy), i * d + idx(x, m, y), f.mul(&ce, &g)));
                                }
                            }
                        }
                        for (xx, e1) in h.alg().mul_basis(x, al) {
                            for (yy, e2) in h.alg().mul_basis(y, ar) {
                                let ce = f.mul(&f.mul(&c, e1), e2);
                                for (mm, g) in crate::exactlin::sparsify(f, &ma) {
                                    ra.push((idx(*xx, mm, *yy), idx(x, m, y) * da + i, f.mul(&ce, &g)));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let obj = CatObject {
        dim: d,
        h_dim: n,
        right_coaction: Some(SparseMap::from_triples(f, d * n, d, rc)),
        left_coaction: Some(SparseMap::from_triples(f, n * d, d, lc)),
        left_action: None,
        right_action: None,
    };
    let bim = BimoduleObject { dim: d, left: SparseMap::from_triples(f, d, da * d, la), right: SparseMap::from_triples(f, d, d * da, ra) };
    (obj, bim)
}

/// μ_M(h⊗m⊗k) = λ(S(h) m₋₁) m₀ λ(m₁ S(k)), verified to be a bicolinear
/// A-bimodule map with μ_M∘σ_M = id where σ_M(m) = m₋₁⊗m₀⊗m₁.
pub fn integral_retraction<F: Field>(
    h: &HopfObject<F>,
    lambda: &IntegralWitness<F>,
    a: &AlgebraObject<F>,
    a_obj: &CatObject<F>,
    m_obj: &CatObject<F>,
    m_bimod: &BimoduleObject<F>,
) -> Result<Matrix<F>> {
    if !check_ad_invariance(h, lambda)? {
        return Err(Error::NotNormalized("λ is not ad-invariant".into()));
    }
    let f = h.field();
    let n = h.dim();
    let dm = m_obj.dim;
    let lam = |x: &[F::Elem]| vdot(f, &lambda.coeffs, x);
    let cols = (0..n * dm * n)
        .map(|p| {
            let (x, m, y) = (p / (dm * n), (p / n) % dm, p % n);
            let t = m_obj.left_then_right(h, &unit(f, dm, m));
            let mut out = vec![f.zero(); dm];
            let sx = h.antipode.col(x);
            let sy = h.antipode.col(y);
            for (q, c) in crate::exactlin::sparsify(f, &t) {
                let (l, m0, r) = (q / (dm * n), (q / n) % dm, q % n);
                let a1 = lam(&h.mul_vec(&sx, &h.basis(l)));
                let a2 = lam(&h.mul_vec(&h.basis(r), &sy));
                out[m0] = f.add(&out[m0], &f.mul(&c, &f.mul(&a1, &a2)));
            }
            out
        })
        .collect::<Vec<_>>();
    let mu = Matrix::from_columns(f, dm, &cols);
    let sigma_cols = (0..dm).map(|m| m_obj.left_then_right(h, &unit(f, dm, m))).collect::<Vec<_>>();
    let sigma = Matrix::from_columns(f, n * dm * n, &sigma_cols);
    if !mu.mul(&sigma).is_identity() {
        return Err(Error::Verification("μ_M∘σ_M ≠ id".into()));
    }
    let (g, g_bimod) = induced_object(h, a, a_obj, m_obj, m_bimod);
    let ctx = CategoryContext { kind: CtxKind::BicomodHH, hopf: Some(h.clone()), gens: vec![], dual_gens: vec![] };
    let m_co = m_obj.only(true, true, false, false);
    if let Some(w) = is_morphism(&ctx, &g, &m_co, &mu) {
        return Err(Error::Verification(format!("μ_M: {w}")));
    }
    if let Some(w) = bilinearity_failure(a, &g_bimod, m_bimod, &mu) {
        return Err(Error::Verification(format!("μ_M: {w}")));
    }
    Ok(mu)
}
