//! Bialgebras and Hopf algebras: compatibility, antipodes, integrals.

use std::collections::BTreeMap;

use crate::algcore::AlgebraObject;
use crate::cocore::{dualize_algebra, dualize_coalgebra, CoalgebraObject};
use crate::error::{Error, Result};
use crate::exactlin::{unit, vaxpy, vtensor, Accumulator, AffineSystem, Field, Matrix, Subspace};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraObject<F: Field> {
    pub alg: AlgebraObject<F>,
    pub coalg: CoalgebraObject<F>,
}

impl<F: Field> BialgebraObject<F> {
    pub fn new(alg: AlgebraObject<F>, coalg: CoalgebraObject<F>) -> Result<Self> {
        if alg.dim != coalg.dim {
            return Err(Error::Shape(format!("algebra dim {} vs coalgebra dim {}", alg.dim, coalg.dim)));
        }
        Ok(BialgebraObject { alg, coalg })
    }

    pub fn field(&self) -> &F {
        &self.alg.field
    }
    pub fn dim(&self) -> usize {
        self.alg.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.alg.labels
    }

    pub fn validate(&self) -> Report {
        let mut rep = Report::new();
        rep.absorb("algebra: ", self.alg.validate());
        rep.absorb("coalgebra: ", self.coalg.validate());
        rep.absorb("", self.compatibility());
        rep
    }

    pub fn is_valid(&self) -> bool {
        self.validate().all_passed()
    }

    /// Δ and ε are algebra maps. Multiplicativity of Δ is self-dual, so it is
    /// checked on whichever of A, A* has the sparser comultiplication.
    pub fn compatibility(&self) -> Report {
        let f = self.field();
        let n = self.dim();
        let mut rep = Report::new();
        let one = &self.alg.unit;
        rep.check("comultiplication unital", self.coalg.comul_vec(one) == vtensor(f, one, one), || "Δ(1) ≠ 1⊗1".into());
        rep.check("counit unital", f.is_one(&self.coalg.counit_of(one)), || "ε(1) ≠ 1".into());
        let wd = if self.coalg.comul.nnz() > self.alg.mul.nnz() {
            self.dual().comul_failure().map(|(i, j)| format!("({}, {})", self.labels()[i], self.labels()[j]) + " in the dual")
        } else {
            self.comul_failure().map(|(i, j)| format!("({}, {})", self.labels()[i], self.labels()[j]))
        };
        rep.record("comultiplication multiplicative", wd);
        let mut we = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let mut e = f.zero();
                for (k, c) in self.alg.mul_basis(i, j) {
                    f.add_mul_assign(&mut e, c, &self.coalg.counit[*k]);
                }
                if e != f.mul(&self.coalg.counit[i], &self.coalg.counit[j]) {
                    we = Some(format!("({}, {})", self.labels()[i], self.labels()[j]));
                    break 'outer;
                }
            }
        }
        rep.record("counit multiplicative", we);
        rep
    }

    /// First basis pair with Δ(eᵢeⱼ) ≠ Δ(eᵢ)Δ(eⱼ).
    fn comul_failure(&self) -> Option<(usize, usize)> {
        let f = self.field();
        let n = self.dim();
        let mut lhs = Accumulator::new(f, n * n);
        let mut rhs = Accumulator::new(f, n * n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.alg.mul_basis(i, j) {
                    for (p, d) in self.coalg.comul_basis(*k) {
                        lhs.add_mul(*p, c, d);
                    }
                }
                accumulate_tensor_square_product(&mut rhs, &self.alg, self.coalg.comul_basis(i), self.coalg.comul_basis(j));
                if lhs.drain() != rhs.drain() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn dual(&self) -> Self {
        BialgebraObject { alg: dualize_coalgebra(&self.coalg), coalg: dualize_algebra(&self.alg) }
    }

    /// (f*g)(x) = f(x₁)g(x₂) for f, g: C → A as matrices.
    pub fn convolve(&self, f: &Matrix<F>, g: &Matrix<F>) -> Matrix<F> {
        convolve(&self.coalg, &self.alg, f, g)
    }

    /// x ↦ ε(x)1.
    pub fn unit_counit(&self) -> Matrix<F> {
        let n = self.dim();
        Matrix::from_fn(self.field(), n, n, |i, j| self.field().mul(&self.alg.unit[i], &self.coalg.counit[j]))
    }
}

/// Product in A⊗A of two sparse tensors.
pub fn tensor_square_product<F: Field>(a: &AlgebraObject<F>, x: &[(usize, F::Elem)], y: &[(usize, F::Elem)]) -> Vec<(usize, F::Elem)> {
    let mut acc = Accumulator::new(&a.field, a.dim * a.dim);
    accumulate_tensor_square_product(&mut acc, a, x, y);
    acc.drain()
}

fn accumulate_tensor_square_product<F: Field>(out: &mut Accumulator<F>, a: &AlgebraObject<F>, x: &[(usize, F::Elem)], y: &[(usize, F::Elem)]) {
    let f = &a.field;
    let n = a.dim;
    for (p, c) in x {
        let (i1, i2) = (p / n, p % n);
        for (q, d) in y {
            let (j1, j2) = (q / n, q % n);
            let cd = f.mul(c, d);
            for (k1, e1) in a.mul_basis(i1, j1) {
                let ce = f.mul(&cd, e1);
                for (k2, e2) in a.mul_basis(i2, j2) {
                    out.add_mul(k1 * n + k2, &ce, e2);
                }
            }
        }
    }
}

/// Convolution product on Hom(C, A).
pub fn convolve<F: Field>(c: &CoalgebraObject<F>, a: &AlgebraObject<F>, f: &Matrix<F>, g: &Matrix<F>) -> Matrix<F> {
    let fld = &a.field;
    let fc = f.columns();
    let gc = g.columns();
    let cols = (0..c.dim)
        .map(|k| {
            let mut out = vec![fld.zero(); a.dim];
            for (p, coef) in c.comul_basis(k) {
                let prod = a.mul_vec(&fc[p / c.dim], &gc[p % c.dim]);
                vaxpy(fld, &mut out, coef, &prod);
            }
            out
        })
        .collect::<Vec<_>>();
    Matrix::from_columns(fld, a.dim, &cols)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfObject<F: Field> {
    pub bialg: BialgebraObject<F>,
    pub antipode: Matrix<F>,
}

impl<F: Field> HopfObject<F> {
    pub fn field(&self) -> &F {
        self.bialg.field()
    }
    pub fn dim(&self) -> usize {
        self.bialg.dim()
    }
    pub fn labels(&self) -> &[String] {
        self.bialg.labels()
    }
    pub fn alg(&self) -> &AlgebraObject<F> {
        &self.bialg.alg
    }
    pub fn coalg(&self) -> &CoalgebraObject<F> {
        &self.bialg.coalg
    }
    pub fn one(&self) -> Vec<F::Elem> {
        self.alg().unit.clone()
    }
    pub fn basis(&self, i: usize) -> Vec<F::Elem> {
        unit(self.field(), self.dim(), i)
    }
    pub fn mul_vec(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        self.alg().mul_vec(x, y)
    }
    pub fn comul_basis(&self, i: usize) -> &[(usize, F::Elem)] {
        self.coalg().comul_basis(i)
    }
    pub fn counit(&self) -> &[F::Elem] {
        &self.coalg().counit
    }
    pub fn counit_of(&self, x: &[F::Elem]) -> F::Elem {
        self.coalg().counit_of(x)
    }
    pub fn s(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.antipode.apply(x)
    }

    /// Builds and verifies.
    pub fn new(bialg: BialgebraObject<F>, antipode: Matrix<F>) -> Result<Self> {
        let h = HopfObject { bialg, antipode };
        if let Some(w) = h.antipode_failure() {
            return Err(Error::Verification(format!("antipode: {w}")));
        }
        Ok(h)
    }

    pub fn antipode_failure(&self) -> Option<String> {
        let n = self.dim();
        if self.antipode.rows() != n || self.antipode.cols() != n {
            return Some("antipode shape".into());
        }
        let ue = self.bialg.unit_counit();
        let id = Matrix::identity(self.field(), n);
        let l = self.bialg.convolve(&self.antipode, &id);
        if l != ue {
            return Some(format!("m(S⊗id)Δ ≠ uε at {}", first_bad_col(&l, &ue, self.labels())));
        }
        let r = self.bialg.convolve(&id, &self.antipode);
        if r != ue {
            return Some(format!("m(id⊗S)Δ ≠ uε at {}", first_bad_col(&r, &ue, self.labels())));
        }
        None
    }

    pub fn validate(&self) -> Report {
        let mut rep = self.bialg.validate();
        rep.record("antipode", self.antipode_failure());
        rep
    }

    pub fn is_valid(&self) -> bool {
        self.validate().all_passed()
    }

    pub fn dual(&self) -> Self {
        HopfObject { bialg: self.bialg.dual(), antipode: self.antipode.transpose() }
    }

    /// Δ²(eₖ) = Σ c · e_a⊗e_b⊗e_c as `(a, b, c, coeff)`.
    pub fn comul2_basis(&self, k: usize) -> Vec<(usize, usize, usize, F::Elem)> {
        let f = self.field();
        let n = self.dim();
        let mut acc = BTreeMap::new();
        for (p, c) in self.comul_basis(k) {
            let (i, j) = (p / n, p % n);
            for (q, d) in self.comul_basis(i) {
                let e = acc.entry((q / n, q % n, j)).or_insert_with(|| f.zero());
                f.add_mul_assign(e, c, d);
            }
        }
        acc.into_iter().filter(|(_, v)| !f.is_zero(v)).map(|((a, b, c), v)| (a, b, c, v)).collect()
    }
}

fn first_bad_col<F: Field>(a: &Matrix<F>, b: &Matrix<F>, labels: &[String]) -> String {
    (0..a.cols()).find(|&j| a.col(j) != b.col(j)).map(|j| labels[j].clone()).unwrap_or_default()
}

/// Takes a hint (verified) or solves S*id = uε = id*S in dim² unknowns.
pub fn upgrade_to_hopf<F: Field>(b: &BialgebraObject<F>, hint: Option<&Matrix<F>>) -> Result<HopfObject<F>> {
    if let Some(s) = hint {
        return HopfObject::new(b.clone(), s.clone()).map_err(|_| Error::NoAntipode);
    }
    let f = b.field();
    let n = b.dim();
    let mut sys = AffineSystem::new(f, n * n);
    // unknown index l·n + i is the coefficient of e_l in S(e_i)
    for left in [true, false] {
        for k in 0..n {
            let mut rows: Vec<BTreeMap<usize, F::Elem>> = vec![BTreeMap::new(); n];
            for (p, c) in b.coalg.comul_basis(k) {
                let (i, j) = (p / n, p % n);
                for l in 0..n {
                    let (prod, var) = if left { (b.alg.mul_basis(l, j), l * n + i) } else { (b.alg.mul_basis(i, l), l * n + j) };
                    for (r, d) in prod {
                        let e = rows[*r].entry(var).or_insert_with(|| f.zero());
                        f.add_mul_assign(e, c, d);
                    }
                }
            }
            for (r, row) in rows.into_iter().enumerate() {
                let rhs = f.mul(&b.coalg.counit[k], &b.alg.unit[r]);
                sys.push_sparse(&row.into_iter().collect::<Vec<_>>(), rhs);
            }
        }
    }
    let x = sys.particular().map_err(|_| Error::NoAntipode)?;
    let s = Matrix::from_fn(f, n, n, |l, i| x[l * n + i].clone());
    HopfObject::new(b.clone(), s).map_err(|_| Error::NoAntipode)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Side {
    Left,
    Right,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum IntegralLocation {
    InH,
    InDual,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralWitness<F: Field> {
    pub location: IntegralLocation,
    pub side: Side,
    /// Element of H, or a functional in the dual basis.
    pub coeffs: Vec<F::Elem>,
    /// ε(t), resp. λ(1), after scaling.
    pub normalization: F::Elem,
    pub normalized: bool,
    /// Dimension of the solution space.
    pub space_dim: usize,
}

/// Solves h·t = ε(h)t (resp. t·h) on algebra generators; `InDual` runs the
/// same system on H*. Scales to ε(t) = 1, resp. λ(1) = 1, when possible.
pub fn find_integral<F: Field>(h: &HopfObject<F>, location: IntegralLocation, side: Side) -> Option<IntegralWitness<F>> {
    let dual;
    let target = match location {
        IntegralLocation::InH => h,
        IntegralLocation::InDual => {
            dual = h.dual();
            &dual
        }
    };
    let space = integral_space(target.alg(), &target.coalg().counit, side);
    let v = space.basis().first()?.clone();
    let f = h.field();
    let e = target.counit_of(&v);
    let (coeffs, normalization, normalized) = match f.inv(&e) {
        Some(ei) => (crate::exactlin::vscale(f, &ei, &v), f.one(), true),
        None => (v, e, false),
    };
    Some(IntegralWitness { location, side, coeffs, normalization, normalized, space_dim: space.dim() })
}

/// {t : g t = ε(g) t} (left) or {t : t g = ε(g) t} (right) over generators g.
pub fn integral_space<F: Field>(a: &AlgebraObject<F>, counit: &[F::Elem], side: Side) -> Subspace<F> {
    let f = &a.field;
    let n = a.dim;
    let mut blocks = Vec::new();
    for g in a.generator_indices() {
        let eg = Matrix::identity(f, n).scale(&counit[g]);
        if matches!(side, Side::Left | Side::Both) {
            blocks.push(a.left_mul_matrix(&a.basis(g)).sub(&eg));
        }
        if matches!(side, Side::Right | Side::Both) {
            blocks.push(a.right_mul_matrix(&a.basis(g)).sub(&eg));
        }
    }
    let m = blocks.into_iter().fold(Matrix::zeros(f, 0, n), |acc, b| acc.vstack(&b));
    Subspace::kernel(&m)
}

/// Re-checks the integral identity on every basis element.
pub fn verify_integral<F: Field>(h: &HopfObject<F>, w: &IntegralWitness<F>) -> bool {
    let dual;
    let target = match w.location {
        IntegralLocation::InH => h,
        IntegralLocation::InDual => {
            dual = h.dual();
            &dual
        }
    };
    let f = h.field();
    (0..h.dim()).all(|i| {
        let b = target.basis(i);
        let e = crate::exactlin::vscale(f, &target.counit()[i], &w.coeffs);
        let l = matches!(w.side, Side::Right) || target.mul_vec(&b, &w.coeffs) == e;
        let r = matches!(w.side, Side::Left) || target.mul_vec(&w.coeffs, &b) == e;
        l && r
    })
}

fn require_normalized<F: Field>(w: &IntegralWitness<F>) -> Result<()> {
    if !w.normalized {
        return Err(Error::NotNormalized("integral is not normalized".into()));
    }
    Ok(())
}

/// λ(h₁ x S h₂) = ε(h)λ(x) = λ(S h₁ x h₂) for all basis h, x.
pub fn check_ad_invariance<F: Field>(h: &HopfObject<F>, lambda: &IntegralWitness<F>) -> Result<bool> {
    require_normalized(lambda)?;
    if lambda.location != IntegralLocation::InDual {
        return Err(Error::Input("ad-invariance needs a functional".into()));
    }
    let f = h.field();
    let n = h.dim();
    let lam = |v: &[F::Elem]| crate::exactlin::vdot(f, &lambda.coeffs, v);
    for hi in 0..n {
        for x in 0..n {
            let xb = h.basis(x);
            let mut a = vec![f.zero(); n];
            let mut b = vec![f.zero(); n];
            for (p, c) in h.comul_basis(hi) {
                let (i, j) = (p / n, p % n);
                let t = h.mul_vec(&h.mul_vec(&h.basis(i), &xb), &h.antipode.col(j));
                vaxpy(f, &mut a, c, &t);
                let t = h.mul_vec(&h.mul_vec(&h.antipode.col(i), &xb), &h.basis(j));
                vaxpy(f, &mut b, c, &t);
            }
            let expect = f.mul(&h.counit()[hi], &lambda.coeffs[x]);
            if lam(&a) != expect || lam(&b) != expect {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Σ t₁ S(t₃) ⊗ t₂ = 1⊗t.
pub fn check_ad_coinvariance<F: Field>(h: &HopfObject<F>, t: &IntegralWitness<F>) -> Result<bool> {
    require_normalized(t)?;
    if t.location != IntegralLocation::InH {
        return Err(Error::Input("ad-coinvariance needs an element of H".into()));
    }
    let f = h.field();
    let n = h.dim();
    let mut lhs = vec![f.zero(); n * n];
    for (k, tk) in t.coeffs.iter().enumerate() {
        if f.is_zero(tk) {
            continue;
        }
        for (a, b, c, coef) in h.comul2_basis(k) {
            let left = h.mul_vec(&h.basis(a), &h.antipode.col(c));
            let term = vtensor(f, &left, &h.basis(b));
            vaxpy(f, &mut lhs, &f.mul(tk, &coef), &term);
        }
    }
    Ok(lhs == vtensor(f, &h.one(), &t.coeffs))
}
