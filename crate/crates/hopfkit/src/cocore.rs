//! Finite-dimensional coalgebras: validation, duality, wedges, coradical.

use crate::algcore::{radical, separability_idempotent, AlgebraObject};
use crate::error::{Error, Result};
use crate::exactlin::{unit, Accumulator, Field, Matrix, SparseMap, Subspace};
use crate::monocat::{CatObject, CategoryContext};
use crate::report::Report;

/// (C, Δ, ε): `comul` maps C → C⊗C (row index `i·dim + j` for eᵢ⊗eⱼ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraObject<F: Field> {
    pub field: F,
    pub dim: usize,
    pub labels: Vec<String>,
    pub comul: SparseMap<F>,
    pub counit: Vec<F::Elem>,
}

impl<F: Field> CoalgebraObject<F> {
    pub fn new(field: &F, labels: Vec<String>, comul: SparseMap<F>, counit: Vec<F::Elem>) -> Result<Self> {
        let dim = labels.len();
        if comul.rows() != dim * dim || comul.cols() != dim || counit.len() != dim {
            return Err(Error::Shape(format!(
                "coalgebra of dim {dim}: comul {}x{}, counit {}",
                comul.rows(),
                comul.cols(),
                counit.len()
            )));
        }
        Ok(CoalgebraObject { field: field.clone(), dim, labels, comul, counit })
    }

    pub fn from_coproducts(
        field: &F,
        labels: Vec<String>,
        counit: Vec<F::Elem>,
        coprod: impl FnMut(usize) -> Vec<F::Elem>,
    ) -> Result<Self> {
        let n = labels.len();
        let cols = (0..n).map(coprod).collect::<Vec<_>>();
        Self::new(field, labels, SparseMap::from_columns(field, n * n, cols), counit)
    }

    pub fn ground(field: &F) -> Self {
        Self::from_coproducts(field, vec!["1".into()], vec![field.one()], |_| vec![field.one()]).unwrap()
    }

    pub fn basis(&self, i: usize) -> Vec<F::Elem> {
        unit(&self.field, self.dim, i)
    }

    /// Δ(eᵢ) as sparse `(i·dim + j, coeff)` pairs.
    pub fn comul_basis(&self, i: usize) -> &[(usize, F::Elem)] {
        self.comul.col(i)
    }

    pub fn comul_vec(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.comul.apply(x)
    }

    pub fn counit_of(&self, x: &[F::Elem]) -> F::Elem {
        crate::exactlin::vdot(&self.field, &self.counit, x)
    }

    pub fn validate(&self) -> Report {
        let f = &self.field;
        let n = self.dim;
        let mut rep = Report::new();
        let mut w = None;
        let mut lhs = Accumulator::new(f, n * n * n);
        let mut rhs = Accumulator::new(f, n * n * n);
        for k in 0..n {
            // (Δ⊗id)Δ vs (id⊗Δ)Δ on eₖ in C⊗C⊗C
            for (p, c) in self.comul_basis(k) {
                let (i, j) = (p / n, p % n);
                for (q, d) in self.comul_basis(i) {
                    lhs.add_mul(q * n + j, c, d);
                }
                for (q, d) in self.comul_basis(j) {
                    rhs.add_mul(i * n * n + q, c, d);
                }
            }
            if lhs.drain() != rhs.drain() {
                w = Some(self.labels[k].clone());
                break;
            }
        }
        rep.record("coassociativity", w);
        let mut w = None;
        for k in 0..n {
            let mut l = vec![f.zero(); n];
            let mut r = vec![f.zero(); n];
            for (p, c) in self.comul_basis(k) {
                let (i, j) = (p / n, p % n);
                f.add_mul_assign(&mut l[j], c, &self.counit[i]);
                f.add_mul_assign(&mut r[i], c, &self.counit[j]);
            }
            if l != self.basis(k) || r != self.basis(k) {
                w = Some(self.labels[k].clone());
                break;
            }
        }
        rep.record("counit", w);
        rep
    }

    pub fn is_valid(&self) -> bool {
        self.validate().all_passed()
    }

    /// Is `map: C → D` (dim D × dim C) a coalgebra map?
    pub fn is_coalgebra_map_to(&self, target: &Self, map: &Matrix<F>) -> Option<String> {
        let f = &self.field;
        for k in 0..self.dim {
            let img = map.col(k);
            let lhs = target.comul_vec(&img);
            let mut rhs = vec![f.zero(); target.dim * target.dim];
            for (p, c) in self.comul_basis(k) {
                let (i, j) = (p / self.dim, p % self.dim);
                let t = crate::exactlin::vtensor(f, &map.col(i), &map.col(j));
                crate::exactlin::vaxpy(f, &mut rhs, c, &t);
            }
            if lhs != rhs {
                return Some(format!("Δ∘f ≠ (f⊗f)∘Δ on {}", self.labels[k]));
            }
            if target.counit_of(&img) != self.counit[k] {
                return Some(format!("ε∘f ≠ ε on {}", self.labels[k]));
            }
        }
        None
    }

    /// Restriction to a subcoalgebra, in the RREF basis of `d`.
    pub fn restrict(&self, d: &Subspace<F>) -> Result<Self> {
        if let Some(w) = subcoalgebra_failure(self, d) {
            return Err(Error::InvalidObject(format!("not a subcoalgebra: {w}")));
        }
        let f = &self.field;
        let k = d.dim();
        let labels = (0..k).map(|i| format!("d{i}")).collect();
        let counit = d.basis().iter().map(|v| self.counit_of(v)).collect();
        let dd = tensor_subspace_coords(self, d);
        Self::from_coproducts(f, labels, counit, |i| dd(&self.comul_vec(&d.basis()[i])))
    }
}

/// Coordinates of a vector of D⊗D ⊆ C⊗C in the product of RREF bases.
fn tensor_subspace_coords<'a, F: Field>(c: &'a CoalgebraObject<F>, d: &'a Subspace<F>) -> impl Fn(&[F::Elem]) -> Vec<F::Elem> + 'a {
    move |v: &[F::Elem]| {
        let n = c.dim;
        let piv = d.pivots();
        let k = d.dim();
        let mut out = vec![c.field.zero(); k * k];
        for (a, pa) in piv.iter().enumerate() {
            for (b, pb) in piv.iter().enumerate() {
                out[a * k + b] = v[pa * n + pb].clone();
            }
        }
        out
    }
}

/// The dual coalgebra of an algebra: Δ(eᵏ) = Σ c^k_{ij} eⁱ⊗eʲ.
pub fn dualize_algebra<F: Field>(a: &AlgebraObject<F>) -> CoalgebraObject<F> {
    let labels = a.labels.iter().map(|l| undual_label(l)).collect();
    CoalgebraObject::new(&a.field, labels, a.mul.transpose(), a.unit.clone()).unwrap()
}

/// The dual algebra of a coalgebra: (eⁱ·eʲ)(eₖ) = coefficient of eᵢ⊗eⱼ in Δ(eₖ).
pub fn dualize_coalgebra<F: Field>(c: &CoalgebraObject<F>) -> AlgebraObject<F> {
    let labels = c.labels.iter().map(|l| undual_label(l)).collect();
    AlgebraObject::new(&c.field, labels, c.comul.transpose(), c.counit.clone()).unwrap()
}

/// `l` ↦ `l*` and `l*` ↦ `l`, so double duals keep their labels.
pub fn undual_label(l: &str) -> String {
    l.strip_suffix('*').map(|s| s.to_string()).unwrap_or_else(|| format!("{l}*"))
}

pub fn subcoalgebra_failure<F: Field>(c: &CoalgebraObject<F>, d: &Subspace<F>) -> Option<String> {
    let n = c.dim;
    let q = d.quotient_projection();
    for v in d.basis() {
        let dv = c.comul_vec(v);
        // (q⊗id)Δ(v) = 0 and (id⊗q)Δ(v) = 0
        for i in 0..n {
            let left = (0..n).map(|j| dv[i * n + j].clone()).collect::<Vec<_>>();
            if !crate::exactlin::vis_zero(&c.field, &q.apply(&left)) {
                return Some("Δ(D) ⊄ C⊗D".into());
            }
            let right = (0..n).map(|j| dv[j * n + i].clone()).collect::<Vec<_>>();
            if !crate::exactlin::vis_zero(&c.field, &q.apply(&right)) {
                return Some("Δ(D) ⊄ D⊗C".into());
            }
        }
    }
    None
}

/// X ∧ Y = Δ⁻¹(X⊗C + C⊗Y) = Ker((q_X⊗q_Y)Δ).
pub fn wedge_of<F: Field>(c: &CoalgebraObject<F>, x: &Subspace<F>, y: &Subspace<F>) -> Subspace<F> {
    let f = &c.field;
    let n = c.dim;
    let qx = x.quotient_projection();
    let qy = y.quotient_projection();
    let (rx, ry) = (qx.rows(), qy.rows());
    if rx == 0 || ry == 0 {
        return Subspace::full(f, n);
    }
    let qxc = qx.columns();
    let qyc = qy.columns();
    let cols = (0..n)
        .map(|k| {
            let mut v = vec![f.zero(); rx * ry];
            for (p, coef) in c.comul_basis(k) {
                let (i, j) = (p / n, p % n);
                for (a, xa) in qxc[i].iter().enumerate() {
                    if f.is_zero(xa) {
                        continue;
                    }
                    let xa = f.mul(xa, coef);
                    for (b, yb) in qyc[j].iter().enumerate() {
                        if !f.is_zero(yb) {
                            f.add_mul_assign(&mut v[a * ry + b], &xa, yb);
                        }
                    }
                }
            }
            v
        })
        .collect::<Vec<_>>();
    Subspace::kernel(&Matrix::from_columns(f, rx * ry, &cols))
}

/// D∧D for a subcoalgebra D.
pub fn wedge<F: Field>(d: &Subspace<F>, c: &CoalgebraObject<F>) -> Result<Subspace<F>> {
    if let Some(w) = subcoalgebra_failure(c, d) {
        return Err(Error::InvalidObject(format!("wedge: {w}")));
    }
    let out = wedge_of(c, d, d);
    debug_assert!(out.contains(d));
    if let Some(w) = subcoalgebra_failure(c, &out) {
        return Err(Error::Verification(format!("wedge result: {w}")));
    }
    Ok(out)
}

/// The coradical C₀. Without a candidate: (rad C*)^⊥. With a candidate D: D
/// must be a subcoalgebra with separable dual algebra whose wedge tower
/// exhausts C.
pub fn coradical<F: Field>(c: &CoalgebraObject<F>, candidate: Option<&Subspace<F>>) -> Result<Subspace<F>> {
    let f = &c.field;
    match candidate {
        Some(d) => {
            let sub = c
                .restrict(d)
                .map_err(|e| Error::CertificationFailed(format!("candidate: {e}")))?;
            let dual = dualize_coalgebra(&sub);
            separability_idempotent(&dual, &CategoryContext::vect(), &CatObject::plain(dual.dim))
                .map_err(|_| Error::CertificationFailed("candidate is not cosemisimple".into()))?;
            let filt = coradical_filtration(c, d)?;
            if !filt.exhausts {
                return Err(Error::CertificationFailed("wedge tower does not exhaust the coalgebra".into()));
            }
            Ok(d.clone())
        }
        None => {
            let ch = f.characteristic();
            if ch != 0 && ch <= c.dim as u64 {
                return Err(Error::SmallCharUnsupported { char: ch, dim: c.dim });
            }
            let dual = dualize_coalgebra(c);
            let rad = radical(&dual, None)?;
            Ok(annihilator(f, c.dim, &rad.subspace))
        }
    }
}

/// {x : φ(x) = 0 for all φ ∈ S}, functionals written in the dual basis.
pub fn annihilator<F: Field>(f: &F, n: usize, s: &Subspace<F>) -> Subspace<F> {
    let m = Matrix::from_rows(f, n, s.basis().to_vec());
    Subspace::kernel(&m)
}

#[derive(Clone, Debug)]
pub struct FiltrationData<F: Field> {
    pub steps: Vec<Subspace<F>>,
    pub exhausts: bool,
}

impl<F: Field> FiltrationData<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.dim()).collect()
    }
}

/// C_{n+1} = Δ⁻¹(C⊗C_n + C₀⊗C), iterated until it stops growing.
pub fn coradical_filtration<F: Field>(c: &CoalgebraObject<F>, c0: &Subspace<F>) -> Result<FiltrationData<F>> {
    if let Some(w) = subcoalgebra_failure(c, c0) {
        return Err(Error::InvalidObject(format!("C0: {w}")));
    }
    let mut steps = vec![c0.clone()];
    loop {
        let last = steps.last().unwrap();
        if last.dim() == c.dim {
            return Ok(FiltrationData { steps, exhausts: true });
        }
        let next = wedge_of(c, c0, last);
        if next.dim() == last.dim() {
            return Ok(FiltrationData { steps, exhausts: false });
        }
        steps.push(next);
    }
}

/// For connected C = ⊕ with C₀ = K c₀: checks Δ(c) − c⊗c₀ − c₀⊗c ∈ C_{n−1}⊗C_{n−1}
/// for every c ∈ C_n, n ≥ 1, and the degree-one formula
/// Δ(c) = c⊗c₀ + c₀⊗c − ε(c) c₀⊗c₀ on C₁.
pub fn connected_filtration_check<F: Field>(c: &CoalgebraObject<F>, filt: &FiltrationData<F>) -> Result<Report> {
    let f = &c.field;
    let n = c.dim;
    let c0s = &filt.steps[0];
    if c0s.dim() != 1 {
        return Err(Error::InvalidObject("coalgebra is not connected".into()));
    }
    let mut g = c0s.basis()[0].clone();
    let e = c.counit_of(&g);
    let ei = f.inv(&e).ok_or_else(|| Error::InvalidObject("C0 is not spanned by a grouplike".into()))?;
    g = crate::exactlin::vscale(f, &ei, &g);
    if c.comul_vec(&g) != crate::exactlin::vtensor(f, &g, &g) {
        return Err(Error::InvalidObject("C0 is not spanned by a grouplike".into()));
    }
    let mut rep = Report::new();
    for step in 1..filt.steps.len() {
        let prev = &filt.steps[step - 1];
        let mut w = None;
        for v in filt.steps[step].basis() {
            let mut d = c.comul_vec(v);
            let a = crate::exactlin::vtensor(f, v, &g);
            let b = crate::exactlin::vtensor(f, &g, v);
            for i in 0..n * n {
                d[i] = f.sub(&f.sub(&d[i], &a[i]), &b[i]);
            }
            if !in_tensor_square(f, n, prev, &d) {
                w = Some(format!("basis vector of C_{step}"));
                break;
            }
            if step == 1 {
                let gg = crate::exactlin::vtensor(f, &g, &g);
                let eps = c.counit_of(v);
                let expect = crate::exactlin::vscale(f, &f.neg(&eps), &gg);
                if d != expect {
                    w = Some("degree-one formula".into());
                    break;
                }
            }
        }
        rep.record(format!("filtration identity at step {step}"), w);
    }
    Ok(rep)
}

/// Is `v` ∈ U⊗U ⊆ K^n⊗K^n?
pub fn in_tensor_square<F: Field>(f: &F, n: usize, u: &Subspace<F>, v: &[F::Elem]) -> bool {
    in_tensor_product(f, n, u, u, v)
}

/// Is `v` ∈ U⊗V ⊆ K^n⊗K^n?
pub fn in_tensor_product<F: Field>(f: &F, n: usize, u: &Subspace<F>, w: &Subspace<F>, v: &[F::Elem]) -> bool {
    let qu = u.quotient_projection();
    let qw = w.quotient_projection();
    for i in 0..n {
        let row = (0..n).map(|j| v[i * n + j].clone()).collect::<Vec<_>>();
        if !crate::exactlin::vis_zero(f, &qw.apply(&row)) {
            return false;
        }
        let col = (0..n).map(|j| v[j * n + i].clone()).collect::<Vec<_>>();
        if !crate::exactlin::vis_zero(f, &qu.apply(&col)) {
            return false;
        }
    }
    true
}
