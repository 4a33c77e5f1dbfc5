//! Finite-dimensional associative algebras given by structure constants.

use crate::error::{Error, Result};
use crate::exactlin::{unit, vaxpy, vis_zero, vsub, Field, Matrix, SparseMap, Subspace};
use crate::monocat::{CatObject, CategoryContext};
use crate::report::Report;

/// (A, m, u): `mul` maps A⊗A → A (column `i·dim + j` is eᵢ·eⱼ), `unit` is u(1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraObject<F: Field> {
    pub field: F,
    pub dim: usize,
    pub labels: Vec<String>,
    pub mul: SparseMap<F>,
    pub unit: Vec<F::Elem>,
}

impl<F: Field> AlgebraObject<F> {
    pub fn new(field: &F, labels: Vec<String>, mul: SparseMap<F>, unit: Vec<F::Elem>) -> Result<Self> {
        let dim = labels.len();
        if mul.rows() != dim || mul.cols() != dim * dim || unit.len() != dim {
            return Err(Error::Shape(format!(
                "algebra of dim {dim}: mul {}x{}, unit {}",
                mul.rows(),
                mul.cols(),
                unit.len()
            )));
        }
        Ok(AlgebraObject { field: field.clone(), dim, labels, mul, unit })
    }

    /// Builds from a closure giving eᵢ·eⱼ as a dense vector.
    pub fn from_products(
        field: &F,
        labels: Vec<String>,
        unit: Vec<F::Elem>,
        mut prod: impl FnMut(usize, usize) -> Vec<F::Elem>,
    ) -> Result<Self> {
        let n = labels.len();
        let cols = (0..n * n).map(|k| prod(k / n, k % n)).collect::<Vec<_>>();
        Self::new(field, labels, SparseMap::from_columns(field, n, cols), unit)
    }

    /// The one-dimensional algebra K.
    pub fn ground(field: &F) -> Self {
        Self::from_products(field, vec!["1".into()], vec![field.one()], |_, _| vec![field.one()]).unwrap()
    }

    pub fn one(&self) -> Vec<F::Elem> {
        self.unit.clone()
    }

    pub fn basis(&self, i: usize) -> Vec<F::Elem> {
        unit(&self.field, self.dim, i)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        self.mul.col(i * self.dim + j)
    }

    pub fn mul_vec(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                self.mul.accumulate_col(&mut out, i * self.dim + j, &ab);
            }
        }
        out
    }

    /// Matrix of L_x : a ↦ x·a.
    pub fn left_mul_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let cols = (0..self.dim).map(|j| self.mul_vec(x, &self.basis(j))).collect::<Vec<_>>();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Matrix of R_x : a ↦ a·x.
    pub fn right_mul_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let cols = (0..self.dim).map(|j| self.mul_vec(&self.basis(j), x)).collect::<Vec<_>>();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn mul_matrix(&self) -> Matrix<F> {
        self.mul.to_dense()
    }

    pub fn validate(&self) -> Report {
        let f = &self.field;
        let n = self.dim;
        let mut rep = Report::new();
        let mut witness = None;
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = self.mul_basis(i, j);
                for k in 0..n {
                    let mut left = vec![f.zero(); n];
                    for (l, c) in ij {
                        self.mul.accumulate_col(&mut left, l * n + k, c);
                    }
                    let mut right = vec![f.zero(); n];
                    for (l, c) in self.mul_basis(j, k) {
                        self.mul.accumulate_col(&mut right, i * n + l, c);
                    }
                    if left != right {
                        witness = Some(format!("({}, {}, {})", self.labels[i], self.labels[j], self.labels[k]));
                        break 'assoc;
                    }
                }
            }
        }
        rep.record("associativity", witness);
        let mut witness = None;
        for i in 0..n {
            let e = self.basis(i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                witness = Some(self.labels[i].clone());
                break;
            }
        }
        rep.record("unit", witness);
        rep
    }

    pub fn is_valid(&self) -> bool {
        self.validate().all_passed()
    }

    /// Basis indices that generate the algebra, chosen greedily in basis order.
    pub fn generator_indices(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.generated_subalgebra(&gens);
        for i in 0..self.dim {
            if span.dim() == self.dim {
                break;
            }
            if !span.contains_vector(&self.basis(i)) {
                gens.push(i);
                span = self.generated_subalgebra(&gens);
            }
        }
        gens
    }

    fn generated_subalgebra(&self, gens: &[usize]) -> Subspace<F> {
        let f = &self.field;
        let mut s = Subspace::from_vectors(f, self.dim, [self.unit.clone()]);
        let rights = gens.iter().map(|g| self.right_mul_matrix(&self.basis(*g))).collect::<Vec<_>>();
        loop {
            let before = s.dim();
            let new = s
                .basis()
                .iter()
                .flat_map(|v| rights.iter().map(move |r| r.apply(v)))
                .collect::<Vec<_>>();
            for v in new {
                s = s.sum(&Subspace::from_vectors(f, self.dim, [v])).unwrap();
            }
            if s.dim() == before {
                return s;
            }
        }
    }

    pub fn opposite(&self) -> Self {
        let n = self.dim;
        Self::from_products(&self.field, self.labels.clone(), self.unit.clone(), |i, j| {
            let mut v = vec![self.field.zero(); n];
            self.mul.accumulate_col(&mut v, j * n + i, &self.field.one());
            v
        })
        .unwrap()
    }

    /// A⊗B with componentwise product.
    pub fn tensor(&self, other: &Self) -> Self {
        let f = &self.field;
        let (n, m) = (self.dim, other.dim);
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        let unit = crate::exactlin::vtensor(f, &self.unit, &other.unit);
        Self::from_products(f, labels, unit, |p, q| {
            let (i, k) = (p / m, p % m);
            let (j, l) = (q / m, q % m);
            let mut v = vec![f.zero(); n * m];
            for (a, c) in self.mul_basis(i, j) {
                for (b, d) in other.mul_basis(k, l) {
                    f.add_mul_assign(&mut v[a * m + b], c, d);
                }
            }
            v
        })
        .unwrap()
    }

    /// Is the linear map `f: A → B` (dim B × dim A) unital and multiplicative?
    pub fn is_algebra_map_to(&self, target: &Self, map: &Matrix<F>) -> Option<String> {
        if map.apply(&self.unit) != target.unit {
            return Some("unit not preserved".into());
        }
        for i in 0..self.dim {
            let fi = map.col(i);
            for j in 0..self.dim {
                let lhs = map.apply(&self.mul_vec(&self.basis(i), &self.basis(j)));
                let rhs = target.mul_vec(&fi, &map.col(j));
                if lhs != rhs {
                    return Some(format!("f({}·{}) ≠ f·f", self.labels[i], self.labels[j]));
                }
            }
        }
        None
    }
}

/// An (A,B)-bimodule: `left` maps A⊗M → M (column `a·dim + m`), `right` maps
/// M⊗B → M (column `m·dim_B + b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleObject<F: Field> {
    pub dim: usize,
    pub left: SparseMap<F>,
    pub right: SparseMap<F>,
}

impl<F: Field> BimoduleObject<F> {
    pub fn act_left(&self, a_dim: usize, a: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.left.field();
        let mut out = vec![f.zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in m.iter().enumerate() {
                if !f.is_zero(y) {
                    self.left.accumulate_col(&mut out, i * self.dim + j, &f.mul(x, y));
                }
            }
        }
        debug_assert_eq!(self.left.cols(), a_dim * self.dim);
        out
    }

    pub fn act_right(&self, b_dim: usize, m: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.right.field();
        let mut out = vec![f.zero(); self.dim];
        for (i, x) in m.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !f.is_zero(y) {
                    self.right.accumulate_col(&mut out, i * b_dim + j, &f.mul(x, y));
                }
            }
        }
        out
    }

    /// Matrix of m ↦ a·m.
    pub fn left_op(&self, a_dim: usize, a: &[F::Elem]) -> Matrix<F> {
        let f = self.left.field();
        let cols = (0..self.dim).map(|j| self.act_left(a_dim, a, &unit(f, self.dim, j))).collect::<Vec<_>>();
        Matrix::from_columns(f, self.dim, &cols)
    }

    /// Matrix of m ↦ m·b.
    pub fn right_op(&self, b_dim: usize, b: &[F::Elem]) -> Matrix<F> {
        let f = self.right.field();
        let cols = (0..self.dim).map(|j| self.act_right(b_dim, &unit(f, self.dim, j), b)).collect::<Vec<_>>();
        Matrix::from_columns(f, self.dim, &cols)
    }

    /// The regular bimodule A.
    pub fn regular(a: &AlgebraObject<F>) -> Self {
        let n = a.dim;
        let right = SparseMap::from_columns(&a.field, n, (0..n * n).map(|k| a.mul_vec(&a.basis(k / n), &a.basis(k % n))).collect::<Vec<_>>());
        BimoduleObject { dim: n, left: a.mul.clone(), right }
    }

    /// The dual bimodule A*: (a·φ)(x) = φ(x·a), (φ·b)(x) = φ(b·x).
    pub fn dual_of_regular(a: &AlgebraObject<F>) -> Self {
        let f = &a.field;
        let n = a.dim;
        let l = (0..n * n)
            .map(|k| {
                let (ai, phi) = (k / n, k % n);
                (0..n).map(|x| coeff(f, &a.mul_vec(&a.basis(x), &a.basis(ai)), phi)).collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let r = (0..n * n)
            .map(|k| {
                let (phi, bi) = (k / n, k % n);
                (0..n).map(|x| coeff(f, &a.mul_vec(&a.basis(bi), &a.basis(x)), phi)).collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        BimoduleObject { dim: n, left: SparseMap::from_columns(f, n, l), right: SparseMap::from_columns(f, n, r) }
    }

    /// The bimodule K^d with a·m = χ(a)m = m·a for a character χ.
    pub fn trivial(a: &AlgebraObject<F>, chi: &[F::Elem], d: usize) -> Self {
        let f = &a.field;
        let n = a.dim;
        let l = (0..n * d).map(|k| crate::exactlin::vscale(f, &chi[k / d], &unit(f, d, k % d))).collect::<Vec<_>>();
        let r = (0..d * n).map(|k| crate::exactlin::vscale(f, &chi[k % n], &unit(f, d, k / n))).collect::<Vec<_>>();
        BimoduleObject { dim: d, left: SparseMap::from_columns(f, d, l), right: SparseMap::from_columns(f, d, r) }
    }

    /// Conjugates the bimodule by an invertible change of basis `p` (new = p·old).
    pub fn change_basis(&self, a_dim: usize, b_dim: usize, p: &Matrix<F>) -> Self {
        let f = self.left.field();
        let pinv = p.inverse().expect("invertible change of basis");
        let d = self.dim;
        let l = (0..a_dim * d)
            .map(|k| p.apply(&self.act_left(a_dim, &unit(f, a_dim, k / d), &pinv.col(k % d))))
            .collect::<Vec<_>>();
        let r = (0..d * b_dim)
            .map(|k| p.apply(&self.act_right(b_dim, &pinv.col(k / b_dim), &unit(f, b_dim, k % b_dim))))
            .collect::<Vec<_>>();
        BimoduleObject { dim: d, left: SparseMap::from_columns(f, d, l), right: SparseMap::from_columns(f, d, r) }
    }

    pub fn validate(&self, a: &AlgebraObject<F>, b: &AlgebraObject<F>) -> Report {
        let f = &a.field;
        let mut rep = Report::new();
        let d = self.dim;
        let e = |i| unit(f, d, i);
        let mut w = None;
        'l: for i in 0..a.dim {
            for j in 0..a.dim {
                let ab = a.mul_vec(&a.basis(i), &a.basis(j));
                for k in 0..d {
                    let lhs = self.act_left(a.dim, &ab, &e(k));
                    let rhs = self.act_left(a.dim, &a.basis(i), &self.act_left(a.dim, &a.basis(j), &e(k)));
                    if lhs != rhs {
                        w = Some(format!("({}, {}, m{k})", a.labels[i], a.labels[j]));
                        break 'l;
                    }
                }
            }
        }
        rep.record("left associativity", w);
        let mut w = None;
        'r: for k in 0..d {
            for i in 0..b.dim {
                for j in 0..b.dim {
                    let ab = b.mul_vec(&b.basis(i), &b.basis(j));
                    let lhs = self.act_right(b.dim, &e(k), &ab);
                    let rhs = self.act_right(b.dim, &self.act_right(b.dim, &e(k), &b.basis(i)), &b.basis(j));
                    if lhs != rhs {
                        w = Some(format!("(m{k}, {}, {})", b.labels[i], b.labels[j]));
                        break 'r;
                    }
                }
            }
        }
        rep.record("right associativity", w);
        let mut w = None;
        for k in 0..d {
            if self.act_left(a.dim, &a.unit, &e(k)) != e(k) || self.act_right(b.dim, &e(k), &b.unit) != e(k) {
                w = Some(format!("m{k}"));
                break;
            }
        }
        rep.record("unit actions", w);
        let mut w = None;
        'm: for i in 0..a.dim {
            for k in 0..d {
                for j in 0..b.dim {
                    let lhs = self.act_right(b.dim, &self.act_left(a.dim, &a.basis(i), &e(k)), &b.basis(j));
                    let rhs = self.act_left(a.dim, &a.basis(i), &self.act_right(b.dim, &e(k), &b.basis(j)));
                    if lhs != rhs {
                        w = Some(format!("({}, m{k}, {})", a.labels[i], b.labels[j]));
                        break 'm;
                    }
                }
            }
        }
        rep.record("middle compatibility", w);
        rep
    }
}

fn coeff<F: Field>(f: &F, v: &[F::Elem], i: usize) -> F::Elem {
    v.get(i).cloned().unwrap_or_else(|| f.zero())
}

/// A two-sided ideal, optionally remembering the map it was generated by.
#[derive(Clone, Debug)]
pub struct IdealData<F: Field> {
    pub subspace: Subspace<F>,
    pub witness: Option<Matrix<F>>,
}

impl<F: Field> IdealData<F> {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn from_subspace(a: &AlgebraObject<F>, s: Subspace<F>) -> Result<Self> {
        check_ideal(a, &s)?;
        Ok(IdealData { subspace: s, witness: None })
    }
}

/// Im Λ_f with Λ_f = m(m⊗A)(A⊗f⊗A): the two-sided ideal generated by the image of `f`.
pub fn ideal_generated_by<F: Field>(a: &AlgebraObject<F>, f: &Matrix<F>) -> Result<IdealData<F>> {
    if f.rows() != a.dim {
        return Err(Error::Shape(format!("generator map has {} rows, algebra dim {}", f.rows(), a.dim)));
    }
    let seed = Subspace::image(f);
    let s = two_sided_closure(a, &seed);
    check_ideal(a, &s)?;
    Ok(IdealData { subspace: s, witness: Some(f.clone()) })
}

/// A·S·A for a subspace S.
pub fn two_sided_closure<F: Field>(a: &AlgebraObject<F>, s: &Subspace<F>) -> Subspace<F> {
    let fld = &a.field;
    let rights = (0..a.dim).map(|j| a.right_mul_matrix(&a.basis(j))).collect::<Vec<_>>();
    let sa = Subspace::from_vectors(
        fld,
        a.dim,
        s.basis().iter().flat_map(|v| rights.iter().map(move |r| r.apply(v))).collect::<Vec<_>>(),
    );
    let lefts = (0..a.dim).map(|i| a.left_mul_matrix(&a.basis(i))).collect::<Vec<_>>();
    Subspace::from_vectors(
        fld,
        a.dim,
        sa.basis().iter().flat_map(|v| lefts.iter().map(move |l| l.apply(v))).collect::<Vec<_>>(),
    )
}

pub fn check_ideal<F: Field>(a: &AlgebraObject<F>, s: &Subspace<F>) -> Result<()> {
    if s.ambient() != a.dim {
        return Err(Error::Shape("ideal ambient dimension".into()));
    }
    for v in s.basis() {
        for i in 0..a.dim {
            let e = a.basis(i);
            if !s.contains_vector(&a.mul_vec(&e, v)) || !s.contains_vector(&a.mul_vec(v, &e)) {
                return Err(Error::NotIdeal(format!("not closed under multiplication by {}", a.labels[i])));
            }
        }
    }
    Ok(())
}

/// Span of all products x·y, x ∈ U, y ∈ V.
pub fn product_space<F: Field>(a: &AlgebraObject<F>, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
    let f = &a.field;
    let vm = Matrix::from_columns(f, a.dim, v.basis());
    let mut out = Subspace::zero(f, a.dim);
    let mut ech = out.echelon().clone();
    for x in u.basis() {
        if ech.rank() == a.dim {
            break;
        }
        let prod = a.left_mul_matrix(x).mul(&vm);
        for c in prod.columns() {
            ech.insert(c);
        }
    }
    out = Subspace::from_echelon(ech);
    out
}

#[derive(Clone, Debug)]
pub struct NilpotencyData<F: Field> {
    /// `powers[k]` is I^(k+1); the list ends with the first zero power.
    pub powers: Vec<Subspace<F>>,
    /// Least n ≥ 2 with Iⁿ = 0.
    pub nilpotency_index: usize,
}

/// Powers Iⁿ = Im(mₙ i^⊗n), with I¹ := I, reported until they vanish.
pub fn ideal_power_nilpotency<F: Field>(a: &AlgebraObject<F>, ideal: &IdealData<F>, max_n: usize) -> Result<NilpotencyData<F>> {
    let i1 = ideal.subspace.clone();
    let mut powers = vec![i1.clone()];
    let mut n = 1;
    loop {
        let last = powers.last().unwrap();
        if last.dim() == 0 && n >= 2 {
            return Ok(NilpotencyData { powers, nilpotency_index: n });
        }
        if n >= max_n {
            return Err(Error::NotNilpotentWithin(max_n));
        }
        let next = product_space(a, last, &i1);
        if next == *last && next.dim() > 0 {
            return Err(Error::NotNilpotentWithin(max_n));
        }
        powers.push(next);
        n += 1;
    }
}

/// The Jacobson radical. Without a candidate it is the radical of the trace
/// form (valid in characteristic 0 or above the dimension); with a candidate
/// it certifies: nilpotent ideal whose quotient has a separability idempotent.
pub fn radical<F: Field>(a: &AlgebraObject<F>, candidate: Option<&IdealData<F>>) -> Result<IdealData<F>> {
    match candidate {
        Some(c) => {
            check_ideal(a, &c.subspace).map_err(|e| Error::CertificationFailed(format!("candidate is not an ideal: {e}")))?;
            ideal_power_nilpotency(a, c, a.dim + 2)
                .map_err(|e| Error::CertificationFailed(format!("candidate not nilpotent: {e}")))?;
            let (q, _) = quotient_algebra(a, c)?;
            let vect = CategoryContext::vect();
            separability_idempotent(&q, &vect, &CatObject::plain(q.dim))
                .map_err(|_| Error::CertificationFailed("quotient is not separable".into()))?;
            Ok(c.clone())
        }
        None => {
            let ch = a.field.characteristic();
            if ch != 0 && ch <= a.dim as u64 {
                return Err(Error::SmallCharUnsupported { char: ch, dim: a.dim });
            }
            let g = trace_form(a);
            let rad = Subspace::kernel(&g);
            let ideal = IdealData::from_subspace(a, rad)?;
            ideal_power_nilpotency(a, &ideal, a.dim + 2)?;
            Ok(ideal)
        }
    }
}

/// Gram matrix of (a, b) ↦ Tr(L_{ab}).
pub fn trace_form<F: Field>(a: &AlgebraObject<F>) -> Matrix<F> {
    let f = &a.field;
    let n = a.dim;
    let traces = (0..n)
        .map(|k| {
            let mut t = f.zero();
            for l in 0..n {
                for (r, c) in a.mul_basis(k, l) {
                    if *r == l {
                        t = f.add(&t, c);
                    }
                }
            }
            t
        })
        .collect::<Vec<_>>();
    Matrix::from_fn(f, n, n, |i, j| {
        let mut s = f.zero();
        for (k, c) in a.mul_basis(i, j) {
            f.add_mul_assign(&mut s, c, &traces[*k]);
        }
        s
    })
}

/// A/I on the canonical complement (non-pivot basis vectors of I) together with
/// the projection A → A/I.
pub fn quotient_algebra<F: Field>(a: &AlgebraObject<F>, ideal: &IdealData<F>) -> Result<(AlgebraObject<F>, Matrix<F>)> {
    check_ideal(a, &ideal.subspace)?;
    let s = &ideal.subspace;
    let keep = s.complement_indices();
    let labels = keep.iter().map(|i| a.labels[*i].clone()).collect();
    let unit = s.quotient_coords(&a.unit);
    let q = AlgebraObject::from_products(&a.field, labels, unit, |i, j| {
        s.quotient_coords(&a.mul_vec(&a.basis(keep[i]), &a.basis(keep[j])))
    })?;
    let proj = s.quotient_projection();
    if let Some(w) = a.is_algebra_map_to(&q, &proj) {
        return Err(Error::Verification(format!("quotient projection: {w}")));
    }
    Ok((q, proj))
}

/// e ∈ A⊗A with m(e) = 1 and (a⊗1)e = e(1⊗a), coinvariant for the coactions the
/// context requires on A⊗A. The output is re-verified by contraction.
pub fn separability_idempotent<F: Field>(a: &AlgebraObject<F>, ctx: &CategoryContext<F>, structure: &CatObject<F>) -> Result<Vec<F::Elem>> {
    let f = &a.field;
    let n = a.dim;
    let nn = n * n;
    let mut sys = crate::exactlin::AffineSystem::new(f, nn);
    // m(e) = 1
    let mut rows = vec![Vec::new(); n];
    for p in 0..nn {
        for (k, c) in a.mul.col(p) {
            rows[*k].push((p, c.clone()));
        }
    }
    for (k, r) in rows.iter().enumerate() {
        sys.push_sparse(r, a.unit[k].clone());
    }
    // (g⊗1)e − e(1⊗g) = 0 for algebra generators g
    for g in a.generator_indices() {
        let lg = a.left_mul_matrix(&a.basis(g));
        let rg = a.right_mul_matrix(&a.basis(g));
        // coefficient of e_{pq} in output (r,s): lg[r,p]δ_{qs} − δ_{pr} rg[s,q]
        for r in 0..n {
            for s in 0..n {
                let mut row = Vec::new();
                for p in 0..n {
                    let c = lg.get(r, p);
                    if !f.is_zero(c) {
                        row.push((p * n + s, c.clone()));
                    }
                }
                for q in 0..n {
                    let c = rg.get(s, q);
                    if !f.is_zero(c) {
                        row.push((r * n + q, f.neg(c)));
                    }
                }
                sys.push_sparse(&row, f.zero());
            }
        }
    }
    // coinvariance of e under the context's coactions on A⊗A
    let tensor = structure.tensor(structure, ctx);
    for op in tensor.coinvariance_ops(ctx) {
        for r in 0..nn {
            let row = (0..nn)
                .filter_map(|p| {
                    let c = op.get(r, p);
                    (!f.is_zero(c)).then(|| (p, c.clone()))
                })
                .collect::<Vec<_>>();
            sys.push_sparse(&row, f.zero());
        }
    }
    let e = sys.particular().map_err(|_| Error::NotSeparable)?;
    if !verify_separability_idempotent(a, &e) {
        return Err(Error::Verification("separability idempotent failed re-check".into()));
    }
    Ok(e)
}

/// Independent contraction check of m(e) = 1 and (a⊗1)e = e(1⊗a) for all basis a.
pub fn verify_separability_idempotent<F: Field>(a: &AlgebraObject<F>, e: &[F::Elem]) -> bool {
    let f = &a.field;
    let n = a.dim;
    if a.mul.apply(e) != a.unit {
        return false;
    }
    for g in 0..n {
        let mut lhs = vec![f.zero(); n * n];
        let mut rhs = vec![f.zero(); n * n];
        for p in 0..n {
            for q in 0..n {
                let c = &e[p * n + q];
                if f.is_zero(c) {
                    continue;
                }
                for (r, d) in a.mul_basis(g, p) {
                    f.add_mul_assign(&mut lhs[r * n + q], c, d);
                }
                for (s, d) in a.mul_basis(q, g) {
                    f.add_mul_assign(&mut rhs[p * n + s], c, d);
                }
            }
        }
        if !vis_zero(f, &vsub(f, &lhs, &rhs)) {
            return false;
        }
    }
    true
}

/// Elementwise helper: Σ cᵢ·vᵢ.
pub fn combine<F: Field>(f: &F, n: usize, terms: &[(F::Elem, Vec<F::Elem>)]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); n];
    for (c, v) in terms {
        vaxpy(f, &mut out, c, v);
    }
    out
}
