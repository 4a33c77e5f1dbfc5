//! The relative Hochschild complex in low degrees, square-zero extensions and
//! lifting algebra maps through the tower A/Jⁿ.

use serde::Serialize;

use crate::algcore::{product_space, quotient_algebra, AlgebraObject, BimoduleObject, IdealData};
use crate::error::{Error, Result};
use crate::exactlin::{solve_linear, unit, AffineSystem, Field, Matrix, SparseMap, Subspace};
use crate::monocat::{is_morphism, morphism_constraints, push_intertwiner_rows, CatObject, CategoryContext, HomExtra, HomSpace};
use crate::report::Report;

/// An algebra together with the object structure it carries in a context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtxAlgebra<F: Field> {
    pub alg: AlgebraObject<F>,
    pub obj: CatObject<F>,
}

impl<F: Field> CtxAlgebra<F> {
    pub fn plain(alg: AlgebraObject<F>) -> Self {
        let obj = CatObject::plain(alg.dim);
        CtxAlgebra { alg, obj }
    }

    pub fn field(&self) -> &F {
        &self.alg.field
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    /// A^⊗n as an object (n = 0 gives the unit object).
    pub fn power(&self, ctx: &CategoryContext<F>, n: usize) -> CatObject<F> {
        let mut out = unit_object(ctx);
        for k in 0..n {
            out = if k == 0 { self.obj.clone() } else { out.tensor(&self.obj, ctx) };
        }
        out
    }

    pub fn validate(&self, ctx: &CategoryContext<F>) -> Report {
        let mut rep = Report::new();
        rep.absorb("algebra: ", self.alg.validate());
        if let Some(h) = &ctx.hopf {
            rep.absorb("object: ", self.obj.for_context(ctx).validate(h));
        }
        if self.obj.constraint_ops(ctx).is_err() {
            rep.fail("object structure", "missing structure for context");
            return rep;
        }
        rep.record("multiplication is a morphism", is_morphism(ctx, &self.power(ctx, 2), &self.obj, &self.alg.mul.to_dense()));
        let u = Matrix::from_columns(self.field(), self.dim(), std::slice::from_ref(&self.alg.unit));
        rep.record("unit is a morphism", is_morphism(ctx, &unit_object(ctx), &self.obj, &u));
        rep
    }
}

/// An A-bimodule together with its object structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtxBimodule<F: Field> {
    pub bimod: BimoduleObject<F>,
    pub obj: CatObject<F>,
}

impl<F: Field> CtxBimodule<F> {
    pub fn plain(bimod: BimoduleObject<F>) -> Self {
        let obj = CatObject::plain(bimod.dim);
        CtxBimodule { bimod, obj }
    }

    pub fn regular(a: &CtxAlgebra<F>) -> Self {
        CtxBimodule { bimod: BimoduleObject::regular(&a.alg), obj: a.obj.clone() }
    }

    pub fn dim(&self) -> usize {
        self.bimod.dim
    }

    pub fn validate(&self, ctx: &CategoryContext<F>, a: &CtxAlgebra<F>) -> Report {
        let mut rep = Report::new();
        rep.absorb("bimodule: ", self.bimod.validate(&a.alg, &a.alg));
        if let Some(h) = &ctx.hopf {
            rep.absorb("object: ", self.obj.for_context(ctx).validate(h));
        }
        if self.obj.constraint_ops(ctx).is_err() {
            rep.fail("object structure", "missing structure for context");
            return rep;
        }
        let am = a.obj.tensor(&self.obj, ctx);
        let ma = self.obj.tensor(&a.obj, ctx);
        rep.record("left action is a morphism", is_morphism(ctx, &am, &self.obj, &self.bimod.left.to_dense()));
        rep.record("right action is a morphism", is_morphism(ctx, &ma, &self.obj, &self.bimod.right.to_dense()));
        rep
    }
}

/// The unit object of the context.
pub fn unit_object<F: Field>(ctx: &CategoryContext<F>) -> CatObject<F> {
    match &ctx.hopf {
        Some(h) => CatObject::trivial(h).for_context(ctx),
        None => CatObject::plain(1),
    }
}

fn flatten<F: Field>(m: &Matrix<F>) -> Vec<F::Elem> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

fn unflatten<F: Field>(f: &F, rows: usize, cols: usize, v: &[F::Elem]) -> Matrix<F> {
    Matrix::from_fn(f, rows, cols, |i, l| v[i * cols + l].clone())
}

struct Actions<F: Field> {
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
}

fn actions<F: Field>(a: &AlgebraObject<F>, m: &BimoduleObject<F>) -> Actions<F> {
    Actions {
        left: (0..a.dim).map(|i| m.left_op(a.dim, &a.basis(i))).collect(),
        right: (0..a.dim).map(|i| m.right_op(a.dim, &a.basis(i))).collect(),
    }
}

fn col_combo<F: Field>(f: &F, m: &Matrix<F>, terms: &[(usize, F::Elem)], offset: impl Fn(usize) -> usize) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); m.rows()];
    for (k, c) in terms {
        let j = offset(*k);
        for (i, o) in out.iter_mut().enumerate() {
            f.add_mul_assign(o, c, m.get(i, j));
        }
    }
    out
}

/// bⁿ on an n-cochain f: A^⊗n → M given as a dim M × (dim A)ⁿ matrix.
///
/// b⁰(m)(a) = a·m − m·a,
/// b¹(f)(a,b) = a·f(b) − f(ab) + f(a)·b,
/// b²(f)(a,b,c) = a·f(b,c) − f(ab,c) + f(a,bc) − f(a,b)·c.
pub fn differential<F: Field>(a: &AlgebraObject<F>, m: &BimoduleObject<F>, n: usize, f: &Matrix<F>) -> Result<Matrix<F>> {
    let fl = &a.field;
    let da = a.dim;
    let d = m.dim;
    if n > 2 {
        return Err(Error::Unsupported(format!("degree {n}; only 0, 1, 2 are implemented")));
    }
    if f.rows() != d || f.cols() != da.pow(n as u32) {
        return Err(Error::Shape(format!("{n}-cochain must be {}x{}, got {}x{}", d, da.pow(n as u32), f.rows(), f.cols())));
    }
    let act = actions(a, m);
    let out_cols = da.pow(n as u32 + 1);
    let mut cols = Vec::with_capacity(out_cols);
    for k in 0..out_cols {
        let v = match n {
            0 => {
                let x = f.col(0);
                let l = act.left[k].apply(&x);
                let r = act.right[k].apply(&x);
                crate::exactlin::vsub(fl, &l, &r)
            }
            1 => {
                let (x, y) = (k / da, k % da);
                let mut v = act.left[x].apply(&f.col(y));
                let prod = col_combo(fl, f, a.mul_basis(x, y), |j| j);
                v = crate::exactlin::vsub(fl, &v, &prod);
                crate::exactlin::vadd(fl, &v, &act.right[y].apply(&f.col(x)))
            }
            _ => {
                let (x, y, z) = (k / (da * da), (k / da) % da, k % da);
                let mut v = act.left[x].apply(&f.col(y * da + z));
                v = crate::exactlin::vsub(fl, &v, &col_combo(fl, f, a.mul_basis(x, y), |j| j * da + z));
                v = crate::exactlin::vadd(fl, &v, &col_combo(fl, f, a.mul_basis(y, z), |j| x * da + j));
                crate::exactlin::vsub(fl, &v, &act.right[z].apply(&f.col(x * da + y)))
            }
        };
        cols.push(v);
    }
    Ok(Matrix::from_columns(fl, d, &cols))
}

/// Cⁿ = Hom_ctx(A^⊗n, M).
pub fn cochain_space<F: Field>(ctx: &CategoryContext<F>, a: &CtxAlgebra<F>, m: &CtxBimodule<F>, n: usize) -> Result<HomSpace<F>> {
    if n > 3 {
        return Err(Error::Unsupported(format!("cochains of degree {n}")));
    }
    crate::monocat::hom_space_over(a.field(), ctx, &a.power(ctx, n), &m.obj, HomExtra::None)
}

/// Hⁿ with chosen representatives. Cocycles and coboundaries are subspaces of
/// all linear maps A^⊗n → M, flattened row-major (entry (i, l) at i·(dim A)ⁿ + l).
#[derive(Clone, Debug)]
pub struct Cohomology<F: Field> {
    pub degree: usize,
    pub dimension: usize,
    pub representatives: Vec<Matrix<F>>,
    pub cocycles: Subspace<F>,
    pub coboundaries: Subspace<F>,
    pub normalized: bool,
    target_dim: usize,
    source_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologySummary {
    pub degree: usize,
    pub dimension: usize,
    pub cocycles_dim: usize,
    pub coboundaries_dim: usize,
    pub normalized_representatives: bool,
    pub representatives: Vec<Vec<Vec<String>>>,
}

impl<F: Field> Cohomology<F> {
    pub fn summary(&self) -> CohomologySummary {
        CohomologySummary {
            degree: self.degree,
            dimension: self.dimension,
            cocycles_dim: self.cocycles.dim(),
            coboundaries_dim: self.coboundaries.dim(),
            normalized_representatives: self.normalized,
            representatives: self.representatives.iter().map(|m| m.format_rows()).collect(),
        }
    }

    /// Coordinates of the class of a cocycle on the representatives.
    pub fn class_coordinates(&self, omega: &Matrix<F>) -> Result<Vec<F::Elem>> {
        if omega.rows() != self.target_dim || omega.cols() != self.source_dim {
            return Err(Error::Shape("cochain shape".into()));
        }
        let f = self.cocycles.field();
        let v = flatten(omega);
        if !self.cocycles.contains_vector(&v) {
            return Err(Error::NotCocycle(format!("degree-{} cochain is not a cocycle in the context", self.degree)));
        }
        let r = self.representatives.len();
        let mut cols = self.representatives.iter().map(flatten).collect::<Vec<_>>();
        cols.extend(self.coboundaries.basis().iter().cloned());
        let mut sys = AffineSystem::new(f, cols.len());
        for (row, rhs) in v.iter().enumerate() {
            let coeffs = cols.iter().enumerate().map(|(j, c)| (j, c[row].clone())).collect::<Vec<_>>();
            sys.push_sparse(&coeffs, rhs.clone());
        }
        let x = sys.particular()?;
        Ok(x[..r].to_vec())
    }

    pub fn is_trivial_class(&self, omega: &Matrix<F>) -> Result<bool> {
        let f = self.cocycles.field();
        Ok(self.class_coordinates(omega)?.iter().all(|c| f.is_zero(c)))
    }
}

/// Zⁿ and Bⁿ inside the flattened space of all maps, from the images of
/// cochain bases.
fn cocycles_and_coboundaries<F: Field>(
    ctx: &CategoryContext<F>,
    a: &CtxAlgebra<F>,
    m: &CtxBimodule<F>,
    n: usize,
) -> Result<(Subspace<F>, Subspace<F>)> {
    let f = a.field();
    let c_n = cochain_space(ctx, a, m, n)?;
    let imgs = c_n.basis.iter().map(|b| differential(&a.alg, &m.bimod, n, b).map(|x| flatten(&x))).collect::<Result<Vec<_>>>()?;
    let big = m.dim() * a.dim().pow(n as u32 + 1);
    let comb = Matrix::from_columns(f, big, &imgs);
    let ker = Subspace::kernel(&comb);
    let flat = c_n.basis.iter().map(flatten).collect::<Vec<_>>();
    let amb = m.dim() * a.dim().pow(n as u32);
    let z = Subspace::from_vectors(
        f,
        amb,
        ker.basis().iter().map(|k| {
            let mut v = vec![f.zero(); amb];
            for (c, b) in k.iter().zip(&flat) {
                if !f.is_zero(c) {
                    crate::exactlin::vaxpy(f, &mut v, c, b);
                }
            }
            v
        }),
    );
    let bsp = if n == 0 {
        Subspace::zero(f, amb)
    } else {
        let c_prev = cochain_space(ctx, a, m, n - 1)?;
        let imgs = c_prev.basis.iter().map(|b| differential(&a.alg, &m.bimod, n - 1, b).map(|x| flatten(&x))).collect::<Result<Vec<_>>>()?;
        Subspace::from_vectors(f, amb, imgs)
    };
    if !z.contains(&bsp) {
        return Err(Error::Verification("coboundaries are not cocycles".into()));
    }
    Ok((z, bsp))
}

/// Hⁿ(A, M) relative to the context, for n ≤ 2. Degree-2 representatives are
/// normalized (ω(1,·) = ω(·,1) = 0) when normalized cocycles cover every class.
pub fn cohomology<F: Field>(ctx: &CategoryContext<F>, a: &CtxAlgebra<F>, m: &CtxBimodule<F>, n: usize) -> Result<Cohomology<F>> {
    if n > 2 {
        return Err(Error::Unsupported(format!("degree {n}; only 0, 1, 2 are implemented")));
    }
    let f = a.field();
    let (z, b) = cocycles_and_coboundaries(ctx, a, m, n)?;
    let dimension = z.dim() - b.dim();
    let src = a.dim().pow(n as u32);
    let d = m.dim();
    let mut normalized = false;
    let mut reps_space = b.quotient_basis(&z)?;
    if n == 2 {
        let nz = normalized_subspace(a, d)?.intersect(&z)?;
        let nb = nz.intersect(&b)?;
        if nz.dim() - nb.dim() == dimension {
            reps_space = nb.quotient_basis(&nz)?;
            normalized = true;
        }
    }
    let representatives = reps_space.basis().iter().map(|v| unflatten(f, d, src, v)).collect::<Vec<_>>();
    Ok(Cohomology { degree: n, dimension, representatives, cocycles: z, coboundaries: b, normalized, target_dim: d, source_dim: src })
}

/// {ω : ω(1⊗a) = 0 = ω(a⊗1)} in flattened coordinates.
fn normalized_subspace<F: Field>(a: &CtxAlgebra<F>, d: usize) -> Result<Subspace<F>> {
    let f = a.field();
    let n = a.dim();
    let u = &a.alg.unit;
    let mut rows = Vec::new();
    for i in 0..d {
        for b in 0..n {
            let mut left = vec![f.zero(); d * n * n];
            let mut right = vec![f.zero(); d * n * n];
            for (x, c) in u.iter().enumerate() {
                if !f.is_zero(c) {
                    left[i * n * n + x * n + b] = c.clone();
                    right[i * n * n + b * n + x] = c.clone();
                }
            }
            rows.push(left);
            rows.push(right);
        }
    }
    Ok(Subspace::kernel(&Matrix::from_rows(f, d * n * n, rows)))
}

/// Solves b¹τ = ω for τ ∈ Hom_ctx(A, M); `None` when ω is not a coboundary of
/// a morphism. Free variables are set to zero.
pub fn solve_coboundary<F: Field>(
    ctx: &CategoryContext<F>,
    a: &CtxAlgebra<F>,
    m: &CtxBimodule<F>,
    omega: &Matrix<F>,
) -> Result<Option<Matrix<F>>> {
    let f = a.field();
    let n = a.dim();
    let d = m.dim();
    if omega.rows() != d || omega.cols() != n * n {
        return Err(Error::Shape(format!("2-cochain must be {d}x{}", n * n)));
    }
    let mut sys = AffineSystem::new(f, d * n);
    for (p, q) in morphism_constraints(ctx, &a.obj, &m.obj, &HomExtra::None)? {
        push_intertwiner_rows(&mut sys, 0, n, d, &p, &q, None);
    }
    push_b1_rows(&mut sys, &a.alg, &m.bimod, omega);
    if !sys.is_consistent() {
        return Ok(None);
    }
    let tau = unflatten(f, d, n, &sys.particular()?);
    if differential(&a.alg, &m.bimod, 1, &tau)? != *omega || is_morphism(ctx, &a.obj, &m.obj, &tau).is_some() {
        return Err(Error::Verification("coboundary solution".into()));
    }
    Ok(Some(tau))
}

/// Rows of b¹τ = ω, unknown τ[i][l] at i·dim A + l.
fn push_b1_rows<F: Field>(sys: &mut AffineSystem<F>, a: &AlgebraObject<F>, m: &BimoduleObject<F>, omega: &Matrix<F>) {
    let f = &a.field;
    let n = a.dim;
    let d = m.dim;
    let act = actions(a, m);
    for x in 0..n {
        for y in 0..n {
            for i in 0..d {
                let mut row: Vec<(usize, F::Elem)> = Vec::new();
                for j in 0..d {
                    let c = act.left[x].get(i, j);
                    if !f.is_zero(c) {
                        row.push((j * n + y, c.clone()));
                    }
                    let c = act.right[y].get(i, j);
                    if !f.is_zero(c) {
                        row.push((j * n + x, c.clone()));
                    }
                }
                for (k, c) in a.mul_basis(x, y) {
                    row.push((i * n + k, f.neg(c)));
                }
                sys.push_sparse(&row, omega.get(i, x * n + y).clone());
            }
        }
    }
}

/// Replaces a 2-cocycle by a cohomologous normalized one: ω − b¹τ with
/// τ ∈ Hom_ctx(A, M) and τ(1) = ω(1,1). Returns the new cocycle and τ.
pub fn normalize_cocycle<F: Field>(
    ctx: &CategoryContext<F>,
    a: &CtxAlgebra<F>,
    m: &CtxBimodule<F>,
    omega: &Matrix<F>,
) -> Result<(Matrix<F>, Matrix<F>)> {
    let f = a.field();
    let n = a.dim();
    let d = m.dim();
    let b2 = differential(&a.alg, &m.bimod, 2, omega)?;
    if !b2.is_zero() {
        return Err(Error::NotCocycle("b²ω ≠ 0".into()));
    }
    let u = &a.alg.unit;
    let uu = crate::exactlin::vtensor(f, u, u);
    let m11 = omega.apply(&uu);
    let mut sys = AffineSystem::new(f, d * n);
    for (p, q) in morphism_constraints(ctx, &a.obj, &m.obj, &HomExtra::None)? {
        push_intertwiner_rows(&mut sys, 0, n, d, &p, &q, None);
    }
    for (i, target) in m11.iter().enumerate() {
        let row = u.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(l, c)| (i * n + l, c.clone())).collect::<Vec<_>>();
        sys.push_sparse(&row, target.clone());
    }
    let tau = unflatten(f, d, n, &sys.particular().map_err(|_| Error::NotNormalized("no morphism τ with τ(1) = ω(1,1)".into()))?);
    let out = omega.sub(&differential(&a.alg, &m.bimod, 1, &tau)?);
    if !normalized_subspace(a, d)?.contains_vector(&flatten(&out)) {
        return Err(Error::Verification("normalization".into()));
    }
    Ok((out, tau))
}

/// A square-zero extension 0 → M → E → A → 0 in the context.
#[derive(Clone, Debug)]
pub struct ExtensionData<F: Field> {
    pub e: CtxAlgebra<F>,
    /// E → A, dim A × dim E.
    pub pi: Matrix<F>,
    /// M → E, dim E × dim M.
    pub i: Matrix<F>,
    pub m: CtxBimodule<F>,
}

impl<F: Field> ExtensionData<F> {
    fn field(&self) -> &F {
        self.e.field()
    }

    /// A linear section of π (free variables zero).
    pub fn linear_section(&self) -> Result<Matrix<F>> {
        let f = self.field();
        let id = Matrix::identity(f, self.pi.rows());
        Ok(solve_linear(&self.pi, &id)?.particular)
    }

    /// i⁺: coordinates on M of vectors in the image of i.
    pub fn kernel_coords(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let f = self.field();
        let d = self.m.dim();
        let mut sys = AffineSystem::new(f, d);
        for (r, x) in v.iter().enumerate() {
            sys.push_dense(self.i.row(r), x.clone());
        }
        sys.particular().map_err(|_| Error::Verification("vector is not in the image of i".into()))
    }

    fn kernel_coords_matrix(&self, m: &Matrix<F>) -> Result<Matrix<F>> {
        let cols = m.columns().iter().map(|c| self.kernel_coords(c)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.field(), self.m.dim(), &cols))
    }

    /// The bimodule structure M inherits from E: a·m = σ(a)i(m), m·a = i(m)σ(a).
    pub fn induced_bimodule(&self) -> Result<BimoduleObject<F>> {
        let f = self.field().clone();
        let s = self.linear_section()?;
        let da = self.pi.rows();
        let d = self.m.dim();
        let e = &self.e.alg;
        let mut l = Vec::new();
        for x in 0..da {
            for j in 0..d {
                l.push(self.kernel_coords(&e.mul_vec(&s.col(x), &self.i.col(j)))?);
            }
        }
        let mut r = Vec::new();
        for j in 0..d {
            for x in 0..da {
                r.push(self.kernel_coords(&e.mul_vec(&self.i.col(j), &s.col(x)))?);
            }
        }
        Ok(BimoduleObject { dim: d, left: SparseMap::from_columns(&f, d, l), right: SparseMap::from_columns(&f, d, r) })
    }

    pub fn validate(&self, ctx: &CategoryContext<F>, a: &CtxAlgebra<F>) -> Report {
        let f = self.field().clone();
        let mut rep = Report::new();
        rep.absorb("E: ", self.e.validate(ctx));
        let (de, da, d) = (self.e.dim(), a.dim(), self.m.dim());
        if self.pi.rows() != da || self.pi.cols() != de || self.i.rows() != de || self.i.cols() != d {
            rep.fail("shapes", format!("π {}x{}, i {}x{}", self.pi.rows(), self.pi.cols(), self.i.rows(), self.i.cols()));
            return rep;
        }
        rep.record("π is an algebra map", self.e.alg.is_algebra_map_to(&a.alg, &self.pi));
        rep.check("π∘i = 0", self.pi.mul(&self.i).is_zero(), || "nonzero composite".into());
        rep.check("i injective", self.i.rank() == d, || format!("rank {}", self.i.rank()));
        rep.check("exact", self.pi.rank() == da && de == da + d, || format!("dim E = {de}, dim A = {da}, dim M = {d}"));
        let mut sq = None;
        'sq: for x in 0..d {
            for y in 0..d {
                if !self.e.alg.mul_vec(&self.i.col(x), &self.i.col(y)).iter().all(|c| f.is_zero(c)) {
                    sq = Some(format!("m{x}·m{y} ≠ 0"));
                    break 'sq;
                }
            }
        }
        rep.record("M² = 0", sq);
        rep.record("π is a morphism", is_morphism(ctx, &self.e.obj, &a.obj, &self.pi));
        rep.record("i is a morphism", is_morphism(ctx, &self.m.obj, &self.e.obj, &self.i));
        match self.induced_bimodule() {
            Ok(b) => rep.check("induced bimodule matches M", b == self.m.bimod || same_bimodule(&f, &b, &self.m.bimod), || {
                "actions differ".into()
            }),
            Err(e) => rep.fail("induced bimodule matches M", e.to_string()),
        }
        rep
    }
}

fn same_bimodule<F: Field>(_f: &F, x: &BimoduleObject<F>, y: &BimoduleObject<F>) -> bool {
    x.dim == y.dim && x.left.to_dense() == y.left.to_dense() && x.right.to_dense() == y.right.to_dense()
}

/// E_ω = A ⊕ M with (a,m)(a',m') = (aa', m·a' + a·m' − ω(a,a')) and unit (1, ω(1,1)).
pub fn extension_from_cocycle<F: Field>(
    ctx: &CategoryContext<F>,
    a: &CtxAlgebra<F>,
    m: &CtxBimodule<F>,
    omega: &Matrix<F>,
) -> Result<ExtensionData<F>> {
    let f = a.field().clone();
    let (n, d) = (a.dim(), m.dim());
    if omega.rows() != d || omega.cols() != n * n {
        return Err(Error::Shape(format!("2-cochain must be {d}x{}", n * n)));
    }
    if !differential(&a.alg, &m.bimod, 2, omega)?.is_zero() {
        return Err(Error::NotCocycle("b²ω ≠ 0".into()));
    }
    if let Some(w) = is_morphism(ctx, &a.power(ctx, 2), &m.obj, omega) {
        return Err(Error::NotCocycle(format!("ω is not a morphism: {w}")));
    }
    let de = n + d;
    let mut labels = a.alg.labels.clone();
    labels.extend((0..d).map(|j| format!("m{j}")));
    let uu = crate::exactlin::vtensor(&f, &a.alg.unit, &a.alg.unit);
    let mut unit_e = a.alg.unit.clone();
    unit_e.extend(omega.apply(&uu));
    let e_alg = AlgebraObject::from_products(&f, labels, unit_e, |x, y| {
        let mut v = vec![f.zero(); de];
        match (x < n, y < n) {
            (true, true) => {
                for (k, c) in a.alg.mul_basis(x, y) {
                    v[*k] = c.clone();
                }
                for j in 0..d {
                    v[n + j] = f.neg(omega.get(j, x * n + y));
                }
            }
            (true, false) => {
                for (j, c) in m.bimod.act_left(n, &a.alg.basis(x), &unit(&f, d, y - n)).into_iter().enumerate() {
                    v[n + j] = c;
                }
            }
            (false, true) => {
                for (j, c) in m.bimod.act_right(n, &unit(&f, d, x - n), &a.alg.basis(y)).into_iter().enumerate() {
                    v[n + j] = c;
                }
            }
            (false, false) => {}
        }
        v
    })?;
    let pi = Matrix::from_fn(&f, n, de, |i, j| if i == j { f.one() } else { f.zero() });
    let i = Matrix::from_fn(&f, de, d, |r, j| if r == n + j { f.one() } else { f.zero() });
    let ext = ExtensionData { e: CtxAlgebra { alg: e_alg, obj: a.obj.direct_sum(&m.obj) }, pi, i, m: m.clone() };
    ext.validate(ctx, a).ensure("extension from cocycle")?;
    Ok(ext)
}

/// A section s: X → E of a surjective morphism p: E → X inside the context,
/// written s = s₀ + i∘t with s₀ a linear section and t: X → ker p solving the
/// intertwining conditions.
pub fn ctx_section<F: Field>(
    ctx: &CategoryContext<F>,
    x: &CatObject<F>,
    e: &CatObject<F>,
    p: &Matrix<F>,
    s0: Option<&Matrix<F>>,
) -> Result<Matrix<F>> {
    let f = p.field().clone();
    let (dx, de) = (x.dim, e.dim);
    if p.rows() != dx || p.cols() != de {
        return Err(Error::Shape("projection shape".into()));
    }
    let s0 = match s0 {
        Some(s) => s.clone(),
        None => solve_linear(p, &Matrix::identity(&f, dx)).map_err(|_| Error::Input("projection is not surjective".into()))?.particular,
    };
    if !p.mul(&s0).is_identity() {
        return Err(Error::Input("s₀ is not a section".into()));
    }
    let ker = Subspace::kernel(p);
    let dk = ker.dim();
    let kobj = e.sub_object(&ker, ctx)?;
    let inc = ker.inclusion();
    let ox = x.constraint_ops(ctx)?;
    let oe = e.constraint_ops(ctx)?;
    let ok = kobj.constraint_ops(ctx)?;
    let mut sys = AffineSystem::new(&f, dk * dx);
    for (((gx, _), (ge, _)), (gk, _)) in ox.iter().zip(&oe).zip(&ok) {
        // i(g_K t − t g_X) = s₀ g_X − g_E s₀
        let gxd = gx.to_dense();
        let dmat = s0.mul(&gxd).sub(&ge.to_dense().mul(&s0));
        let coords = Matrix::from_fn(&f, dk, dx, |r, c| dmat.get(ker.pivots()[r], c).clone());
        if inc.mul(&coords) != dmat {
            return Err(Error::Input("projection is not a morphism".into()));
        }
        push_intertwiner_rows(&mut sys, 0, dx, dk, gx, gk, Some(&coords.neg()));
    }
    if !sys.is_consistent() {
        return Err(Error::NoSection("the projection does not split in the context".into()));
    }
    let t = unflatten(&f, dk, dx, &sys.particular()?);
    let s = s0.add(&inc.mul(&t));
    if !p.mul(&s).is_identity() {
        return Err(Error::Verification("section does not split the projection".into()));
    }
    if let Some(w) = is_morphism(ctx, x, e, &s) {
        return Err(Error::Verification(format!("section is not a morphism: {w}")));
    }
    Ok(s)
}

/// σ' = 2σ − m_E(σ⊗σ)(A⊗u), i.e. σ'(a) = 2σ(a) − σ(a)σ(1). Unital whenever
/// πσ = id and the kernel squares to zero.
pub fn unitalize<F: Field>(e: &AlgebraObject<F>, a_unit: &[F::Elem], sigma: &Matrix<F>) -> Matrix<F> {
    let f = &e.field;
    let s1 = sigma.apply(a_unit);
    let two = f.from_i64(2);
    let cols = sigma
        .columns()
        .iter()
        .map(|c| crate::exactlin::vsub(f, &crate::exactlin::vscale(f, &two, c), &e.mul_vec(c, &s1)))
        .collect::<Vec<_>>();
    Matrix::from_columns(f, sigma.rows(), &cols)
}

/// θ_σ = σ∘m_A − m_E(σ⊗σ), a dim E × (dim A)² matrix.
pub fn curvature<F: Field>(a: &AlgebraObject<F>, e: &AlgebraObject<F>, sigma: &Matrix<F>) -> Matrix<F> {
    let f = &a.field;
    let n = a.dim;
    let sc = sigma.columns();
    let cols = (0..n * n)
        .map(|k| {
            let (x, y) = (k / n, k % n);
            let ab = col_combo(f, sigma, a.mul_basis(x, y), |j| j);
            crate::exactlin::vsub(f, &ab, &e.mul_vec(&sc[x], &sc[y]))
        })
        .collect::<Vec<_>>();
    Matrix::from_columns(f, sigma.rows(), &cols)
}

/// The cocycle an extension determines through a unital section in the context.
#[derive(Clone, Debug)]
pub struct ExtensionCocycle<F: Field> {
    pub omega: Matrix<F>,
    pub section: Matrix<F>,
}

/// ω = i⁻¹θ_σ for a unital morphism section σ (one is found if not given).
pub fn cocycle_of_extension<F: Field>(
    ctx: &CategoryContext<F>,
    a: &CtxAlgebra<F>,
    ext: &ExtensionData<F>,
    sigma: Option<&Matrix<F>>,
) -> Result<ExtensionCocycle<F>> {
    let s = match sigma {
        Some(s) => {
            if !ext.pi.mul(s).is_identity() {
                return Err(Error::Input("σ is not a section of π".into()));
            }
            if let Some(w) = is_morphism(ctx, &a.obj, &ext.e.obj, s) {
                return Err(Error::Input(format!("σ is not a morphism: {w}")));
            }
            s.clone()
        }
        None => ctx_section(ctx, &a.obj, &ext.e.obj, &ext.pi, None)?,
    };
    let s = unitalize(&ext.e.alg, &a.alg.unit, &s);
    if s.apply(&a.alg.unit) != ext.e.alg.unit {
        return Err(Error::Verification("unitalized section is not unital".into()));
    }
    let theta = curvature(&a.alg, &ext.e.alg, &s);
    if !ext.pi.mul(&theta).is_zero() {
        return Err(Error::Verification("curvature does not land in M".into()));
    }
    let omega = ext.kernel_coords_matrix(&theta)?;
    if !differential(&a.alg, &ext.m.bimod, 2, &omega)?.is_zero() {
        return Err(Error::Verification("extension cocycle is not closed".into()));
    }
    Ok(ExtensionCocycle { omega, section: s })
}

/// Turns a unital section into an algebra section σ + i∘τ with b¹τ = ω, or
/// reports the obstruction class.
pub fn correct_section<F: Field>(
    ctx: &CategoryContext<F>,
    a: &CtxAlgebra<F>,
    ext: &ExtensionData<F>,
    sigma: Option<&Matrix<F>>,
) -> Result<Matrix<F>> {
    let c = cocycle_of_extension(ctx, a, ext, sigma)?;
    match solve_coboundary(ctx, a, &ext.m, &c.omega)? {
        Some(tau) => {
            let s = c.section.add(&ext.i.mul(&tau));
            if let Some(w) = a.alg.is_algebra_map_to(&ext.e.alg, &s) {
                return Err(Error::Verification(format!("corrected section: {w}")));
            }
            Ok(s)
        }
        None => {
            let coh = cohomology(ctx, a, &ext.m, 2)?;
            let f = a.field();
            let class = coh.class_coordinates(&c.omega)?.iter().map(|x| f.format(x)).collect();
            Err(Error::Obstructed { step: 0, class })
        }
    }
}

/// Looks for an algebra morphism f: E₁ → E₂ with π₂f = π₁ and f∘i₁ = i₂ (both
/// extensions of A by the same M). The condition is linear in the free part τ.
pub fn extensions_equivalent<F: Field>(
    ctx: &CategoryContext<F>,
    a: &CtxAlgebra<F>,
    e1: &ExtensionData<F>,
    e2: &ExtensionData<F>,
) -> Result<Option<Matrix<F>>> {
    let f = a.field().clone();
    let (n, d) = (a.dim(), e1.m.dim());
    if e2.m.dim() != d || e1.pi.rows() != n || e2.pi.rows() != n {
        return Err(Error::Shape("extensions of different objects".into()));
    }
    let (d1, d2) = (e1.e.dim(), e2.e.dim());
    let s1 = e1.linear_section()?;
    let s2 = e2.linear_section()?;
    // r₁ = i₁⁺(id − s₁π₁)
    let proj = Matrix::identity(&f, d1).sub(&s1.mul(&e1.pi));
    let r1 = e1.kernel_coords_matrix(&proj)?;
    let f0 = s2.mul(&e1.pi).add(&e2.i.mul(&r1));
    // G_u = i₂ E_u π₁, u = (i, l) ↦ i·n + l
    let gens = (0..d * n)
        .map(|u| {
            let (i, l) = (u / n, u % n);
            Matrix::from_fn(&f, d2, d1, |r, c| f.mul(e2.i.get(r, i), e1.pi.get(l, c)))
        })
        .collect::<Vec<_>>();
    let mut sys = AffineSystem::new(&f, d * n);
    let alg1 = &e1.e.alg;
    let alg2 = &e2.e.alg;
    let f0c = f0.columns();
    for x in 0..d1 {
        for y in 0..d1 {
            let xy = alg1.mul_vec(&alg1.basis(x), &alg1.basis(y));
            let base = crate::exactlin::vsub(&f, &f0.apply(&xy), &alg2.mul_vec(&f0c[x], &f0c[y]));
            let contrib = gens
                .iter()
                .map(|g| {
                    let v = crate::exactlin::vsub(&f, &g.apply(&xy), &alg2.mul_vec(&f0c[x], &g.col(y)));
                    crate::exactlin::vsub(&f, &v, &alg2.mul_vec(&g.col(x), &f0c[y]))
                })
                .collect::<Vec<_>>();
            for k in 0..d2 {
                let row = contrib.iter().enumerate().map(|(u, v)| (u, v[k].clone())).collect::<Vec<_>>();
                sys.push_sparse(&row, f.neg(&base[k]));
            }
        }
    }
    let o1 = e1.e.obj.constraint_ops(ctx)?;
    let o2 = e2.e.obj.constraint_ops(ctx)?;
    for ((g1, _), (g2, _)) in o1.iter().zip(&o2) {
        let (g1, g2) = (g1.to_dense(), g2.to_dense());
        let base = g2.mul(&f0).sub(&f0.mul(&g1));
        let contrib = gens.iter().map(|g| g2.mul(g).sub(&g.mul(&g1))).collect::<Vec<_>>();
        for r in 0..d2 {
            for c in 0..d1 {
                let row = contrib.iter().enumerate().map(|(u, m)| (u, m.get(r, c).clone())).collect::<Vec<_>>();
                sys.push_sparse(&row, f.neg(base.get(r, c)));
            }
        }
    }
    if !sys.is_consistent() {
        return Ok(None);
    }
    let tau = sys.particular()?;
    let mut map = f0;
    for (u, c) in tau.iter().enumerate() {
        if !f.is_zero(c) {
            map = map.add(&gens[u].scale(c));
        }
    }
    if let Some(w) = alg1.is_algebra_map_to(alg2, &map) {
        return Err(Error::Verification(format!("equivalence: {w}")));
    }
    if e2.pi.mul(&map) != e1.pi || map.mul(&e1.i) != e2.i || is_morphism(ctx, &e1.e.obj, &e2.e.obj, &map).is_some() {
        return Err(Error::Verification("equivalence does not commute with the sequences".into()));
    }
    Ok(Some(map))
}

/// Dimensions seen while lifting: one entry per tower step r (A/J^{r+1} → A/J^r).
#[derive(Clone, Debug, Serialize)]
pub struct TowerStep {
    pub step: usize,
    pub source_dim: usize,
    pub kernel_dim: usize,
}

#[derive(Clone, Debug)]
pub struct TowerLift<F: Field> {
    /// B → A, dim A × dim B.
    pub map: Matrix<F>,
    pub steps: Vec<TowerStep>,
}

/// Lifts an algebra morphism f: B → A/J (in the context) to B → A, one
/// square-zero step A/J^{r+1} → A/J^r at a time. J must be nilpotent and its
/// powers subobjects; `f` is written in the complement coordinates of
/// `quotient_algebra(A, J)`.
pub fn lift_through_tower<F: Field>(
    ctx: &CategoryContext<F>,
    a: &CtxAlgebra<F>,
    j: &IdealData<F>,
    b: &CtxAlgebra<F>,
    f_map: &Matrix<F>,
) -> Result<TowerLift<F>> {
    let fl = a.field().clone();
    let mut powers = vec![j.subspace.clone()];
    while powers.last().unwrap().dim() > 0 {
        if powers.len() > a.dim() + 1 {
            return Err(Error::NotNilpotentWithin(a.dim() + 1));
        }
        let next = product_space(&a.alg, powers.last().unwrap(), &j.subspace);
        if next == *powers.last().unwrap() {
            return Err(Error::NotNilpotentWithin(powers.len()));
        }
        powers.push(next);
    }
    let quot = |s: &Subspace<F>| -> Result<(CtxAlgebra<F>, Vec<usize>)> {
        let (q, _) = quotient_algebra(&a.alg, &IdealData { subspace: s.clone(), witness: None })?;
        let (obj, _) = a.obj.quotient_object(s, ctx)?;
        Ok((CtxAlgebra { alg: q, obj }, s.complement_indices()))
    };
    let (mut x, mut keep_x) = quot(&powers[0])?;
    if f_map.rows() != x.dim() || f_map.cols() != b.dim() {
        return Err(Error::Shape(format!("f must be {}x{}", x.dim(), b.dim())));
    }
    if let Some(w) = b.alg.is_algebra_map_to(&x.alg, f_map) {
        return Err(Error::Input(format!("f is not an algebra map: {w}")));
    }
    if let Some(w) = is_morphism(ctx, &b.obj, &x.obj, f_map) {
        return Err(Error::Input(format!("f is not a morphism: {w}")));
    }
    let mut fr = f_map.clone();
    let mut steps = Vec::new();
    for (r, pw) in powers.iter().enumerate().skip(1) {
        let (e, keep_e) = quot(pw)?;
        let prev = &powers[r - 1];
        // p: A/J^{r+1} → A/J^r and the coordinate section s₀
        let p = Matrix::from_columns(&fl, x.dim(), &keep_e.iter().map(|&k| prev.quotient_coords(&unit(&fl, a.dim(), k))).collect::<Vec<_>>());
        let s0 = Matrix::from_fn(&fl, e.dim(), x.dim(), |row, col| if keep_e[row] == keep_x[col] { fl.one() } else { fl.zero() });
        let s = ctx_section(ctx, &x.obj, &e.obj, &p, Some(&s0)).map_err(|err| match err {
            Error::NoSection(w) => Error::NoSection(format!("tower step {r}: {w}")),
            other => other,
        })?;
        let g0 = unitalize(&e.alg, &x.alg.unit, &s).mul(&fr);
        let ker = Subspace::kernel(&p);
        let kobj = e.obj.sub_object(&ker, ctx)?;
        let inc = ker.inclusion();
        let kc = |v: &[F::Elem]| ker.pivots().iter().map(|&q| v[q].clone()).collect::<Vec<_>>();
        let dk = ker.dim();
        let g0c = g0.columns();
        let nb = b.dim();
        let mut left = Vec::new();
        for y in 0..nb {
            for k in 0..dk {
                left.push(kc(&e.alg.mul_vec(&g0c[y], &ker.basis()[k])));
            }
        }
        let mut right = Vec::new();
        for k in 0..dk {
            for y in 0..nb {
                right.push(kc(&e.alg.mul_vec(&ker.basis()[k], &g0c[y])));
            }
        }
        let m = CtxBimodule {
            bimod: BimoduleObject { dim: dk, left: SparseMap::from_columns(&fl, dk, left), right: SparseMap::from_columns(&fl, dk, right) },
            obj: kobj,
        };
        let theta = curvature(&b.alg, &e.alg, &g0);
        if !p.mul(&theta).is_zero() {
            return Err(Error::Verification(format!("tower step {r}: curvature leaves the kernel")));
        }
        let omega = Matrix::from_columns(&fl, dk, &theta.columns().iter().map(|c| kc(c)).collect::<Vec<_>>());
        let next = match solve_coboundary(ctx, b, &m, &omega)? {
            Some(tau) => g0.add(&inc.mul(&tau)),
            None => {
                let class = match cohomology(ctx, b, &m, 2) {
                    Ok(coh) => coh.class_coordinates(&omega)?.iter().map(|c| fl.format(c)).collect(),
                    Err(_) => Vec::new(),
                };
                return Err(Error::Obstructed { step: r, class });
            }
        };
        if let Some(w) = b.alg.is_algebra_map_to(&e.alg, &next) {
            return Err(Error::Verification(format!("tower step {r}: {w}")));
        }
        if let Some(w) = is_morphism(ctx, &b.obj, &e.obj, &next) {
            return Err(Error::Verification(format!("tower step {r}: {w}")));
        }
        if p.mul(&next) != fr {
            return Err(Error::Verification(format!("tower step {r}: lift does not cover the previous map")));
        }
        steps.push(TowerStep { step: r, source_dim: x.dim(), kernel_dim: dk });
        fr = next;
        x = e;
        keep_x = keep_e;
    }
    if x.dim() != a.dim() {
        return Err(Error::Verification("tower did not reach A".into()));
    }
    Ok(TowerLift { map: fr, steps })
}
