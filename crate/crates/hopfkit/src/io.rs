//! JSON structure files. Tensors are sparse `[i, j, k, "coeff"]` lists with
//! inputs before outputs: `mul` has eᵢ·eⱼ ∋ c·e_k, `comul` has Δ(eᵢ) ∋ c·eⱼ⊗e_k.
//! Coefficients are strings so that exactness survives JSON.

use serde::{Deserialize, Serialize};

use crate::algcore::{AlgebraObject, BimoduleObject};
use crate::cocore::CoalgebraObject;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, PrimeField, ScalarField, SparseMap, Subspace};
use crate::hopfcore::{BialgebraObject, HopfObject};
use crate::monocat::{CatObject, CategoryContext, CtxKind, YDObject};
use crate::report::Report;
use crate::smashboso::{Bosonization, DualYDQuadruple, YDQuadruple};
use crate::splitpipe::{Quadruple, SplitReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

impl FieldSpec {
    pub fn of<F: Field>(f: &F) -> Self {
        match f.descriptor() {
            ScalarField::Rationals => FieldSpec::Q,
            ScalarField::PrimeField(p) => FieldSpec::Fp { p },
        }
    }

    pub fn prime_field(&self) -> Result<Option<PrimeField>> {
        match self {
            FieldSpec::Q => Ok(None),
            FieldSpec::Fp { p } => PrimeField::new(*p).map(Some),
        }
    }
}

/// `[i, j, k, "coeff"]`
pub type Entry = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Structures {
    /// The Hopf algebra the structures refer to.
    pub hopf: Option<Box<StructureFile>>,
    /// ρ(e_v) ∋ c·e_w⊗h_l as `[v, w, l, c]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_coaction: Option<Vec<Entry>>,
    /// ρ(e_v) ∋ c·h_l⊗e_w as `[v, l, w, c]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_coaction: Option<Vec<Entry>>,
    /// h_l·e_v ∋ c·e_w as `[l, v, w, c]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_action: Option<Vec<Entry>>,
    /// e_v·h_l ∋ c·e_w as `[v, l, w, c]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_action: Option<Vec<Entry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comul: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    /// Row-major.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structures: Option<Structures>,
}

/// A bimodule over the algebra of another file: aᵢ·m_v ∋ c·m_w as
/// `[i, v, w, c]`, m_v·aᵢ ∋ c·m_w as `[v, i, w, c]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub algebra_dim: usize,
    pub left: Vec<Entry>,
    pub right: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structures: Option<Structures>,
}

/// A subspace of K^dim spanned by `vectors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub vectors: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadrupleBody {
    /// "primal" or "dual".
    pub kind: String,
    pub h: StructureFile,
    /// R with its Yetter–Drinfeld structure under `structures` (left action
    /// and left coaction); an algebra for primal, a coalgebra for dual.
    pub r: StructureFile,
    /// ε (primal) or the unit 1 (dual).
    pub vector: Vec<String>,
    /// δ: R → R⊗R as `[r, s, t, c]` (primal) or m: R⊗R → R as `[r, s, t, c]` (dual).
    pub map: Vec<Entry>,
    /// ω: H → R⊗R as `[h, s, t, c]` (primal) or ξ: R⊗R → H as `[r, s, h, c]` (dual).
    pub cocycle: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadrupleFile {
    pub quadruple: QuadrupleBody,
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
}

/// Pretty JSON with arrays of scalars kept on one line, newline-terminated.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let v = serde_json::to_value(v).expect("serializable");
    let mut s = String::new();
    write_value(&mut s, &v, 0);
    s.push('\n');
    s
}

fn is_flat(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        serde_json::Value::Object(o) => o.is_empty(),
        _ => true,
    }
}

fn write_value(s: &mut String, v: &serde_json::Value, depth: usize) {
    use serde_json::Value;
    let pad = |d: usize| "  ".repeat(d);
    match v {
        _ if is_flat(v) => s.push_str(&serde_json::to_string(v).expect("serializable")),
        Value::Array(a) => {
            s.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                s.push_str(&pad(depth + 1));
                write_value(s, x, depth + 1);
                s.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            s.push_str(&pad(depth));
            s.push(']');
        }
        Value::Object(o) => {
            s.push_str("{\n");
            for (i, (k, x)) in o.iter().enumerate() {
                s.push_str(&pad(depth + 1));
                s.push_str(&serde_json::to_string(k).expect("serializable"));
                s.push_str(": ");
                write_value(s, x, depth + 1);
                s.push_str(if i + 1 < o.len() { ",\n" } else { "\n" });
            }
            s.push_str(&pad(depth));
            s.push('}');
        }
        _ => unreachable!(),
    }
}

/// Reads just the field of any of the file kinds.
pub fn peek_field(text: &str) -> Result<FieldSpec> {
    #[derive(Deserialize)]
    struct Peek {
        field: Option<FieldSpec>,
        quadruple: Option<PeekQ>,
    }
    #[derive(Deserialize)]
    struct PeekQ {
        h: Peek2,
    }
    #[derive(Deserialize)]
    struct Peek2 {
        field: FieldSpec,
    }
    let p: Peek = from_json(text)?;
    p.field.or(p.quadruple.map(|q| q.h.field)).ok_or_else(|| Error::Parse("missing field \"field\"".into()))
}

fn check_field<F: Field>(f: &F, spec: &FieldSpec) -> Result<()> {
    if FieldSpec::of(f) != *spec {
        return Err(Error::Input(format!("field mismatch: expected {:?}, file has {spec:?}", FieldSpec::of(f))));
    }
    Ok(())
}

fn coeff<F: Field>(f: &F, s: &str, what: &str) -> Result<F::Elem> {
    f.parse(s).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn vector<F: Field>(f: &F, v: &[String], n: usize, what: &str) -> Result<Vec<F::Elem>> {
    if v.len() != n {
        return Err(Error::Parse(format!("{what}: expected {n} entries, found {}", v.len())));
    }
    v.iter().map(|s| coeff(f, s, what)).collect()
}

/// Builds a sparse map from entries; `place(i, j, k)` gives (row, col).
fn sparse<F: Field>(f: &F, entries: &[Entry], bounds: [usize; 3], rows: usize, cols: usize, what: &str, place: impl Fn(usize, usize, usize) -> (usize, usize)) -> Result<SparseMap<F>> {
    let mut trip = Vec::new();
    for (n, (i, j, k, c)) in entries.iter().enumerate() {
        if *i >= bounds[0] || *j >= bounds[1] || *k >= bounds[2] {
            return Err(Error::Parse(format!("{what}[{n}]: index out of range")));
        }
        let (r, col) = place(*i, *j, *k);
        trip.push((r, col, coeff(f, c, &format!("{what}[{n}]"))?));
    }
    Ok(SparseMap::from_triples(f, rows, cols, trip))
}

fn entries<F: Field>(m: &SparseMap<F>, split: impl Fn(usize, usize) -> (usize, usize, usize)) -> Vec<Entry> {
    let f = m.field();
    let mut out = Vec::new();
    for col in 0..m.cols() {
        for (row, c) in m.col(col) {
            if !f.is_zero(c) {
                let (i, j, k) = split(*row, col);
                out.push((i, j, k, f.format(c)));
            }
        }
    }
    out.sort();
    out
}

fn strings<F: Field>(f: &F, v: &[F::Elem]) -> Vec<String> {
    v.iter().map(|c| f.format(c)).collect()
}

pub fn matrix_rows<F: Field>(m: &Matrix<F>) -> Vec<Vec<String>> {
    m.format_rows()
}

fn matrix_from_rows<F: Field>(f: &F, rows: &[Vec<String>], r: usize, c: usize, what: &str) -> Result<Matrix<F>> {
    if rows.len() != r {
        return Err(Error::Parse(format!("{what}: expected {r} rows")));
    }
    let rows = rows.iter().map(|row| vector(f, row, c, what)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(f, c, rows))
}

impl StructureFile {
    fn check_basis(&self) -> Result<()> {
        if self.basis.len() != self.dim {
            return Err(Error::Parse(format!("basis: expected {} labels, found {}", self.dim, self.basis.len())));
        }
        Ok(())
    }

    pub fn algebra<F: Field>(&self, f: &F) -> Result<AlgebraObject<F>> {
        check_field(f, &self.field)?;
        self.check_basis()?;
        let n = self.dim;
        let mul = self.mul.as_ref().ok_or_else(|| Error::Input("file has no \"mul\"".into()))?;
        let unit = self.unit.as_ref().ok_or_else(|| Error::Input("file has no \"unit\"".into()))?;
        let m = sparse(f, mul, [n, n, n], n, n * n, "mul", |i, j, k| (k, i * n + j))?;
        AlgebraObject::new(f, self.basis.clone(), m, vector(f, unit, n, "unit")?)
    }

    pub fn coalgebra<F: Field>(&self, f: &F) -> Result<CoalgebraObject<F>> {
        check_field(f, &self.field)?;
        self.check_basis()?;
        let n = self.dim;
        let comul = self.comul.as_ref().ok_or_else(|| Error::Input("file has no \"comul\"".into()))?;
        let counit = self.counit.as_ref().ok_or_else(|| Error::Input("file has no \"counit\"".into()))?;
        let d = sparse(f, comul, [n, n, n], n * n, n, "comul", |i, j, k| (j * n + k, i))?;
        CoalgebraObject::new(f, self.basis.clone(), d, vector(f, counit, n, "counit")?)
    }

    pub fn bialgebra<F: Field>(&self, f: &F) -> Result<BialgebraObject<F>> {
        BialgebraObject::new(self.algebra(f)?, self.coalgebra(f)?)
    }

    pub fn antipode_matrix<F: Field>(&self, f: &F) -> Result<Option<Matrix<F>>> {
        self.antipode.as_ref().map(|rows| matrix_from_rows(f, rows, self.dim, self.dim, "antipode")).transpose()
    }

    /// Needs an antipode in the file.
    pub fn hopf<F: Field>(&self, f: &F) -> Result<HopfObject<F>> {
        let b = self.bialgebra(f)?;
        let s = self.antipode_matrix(f)?.ok_or_else(|| Error::Input("file has no \"antipode\"".into()))?;
        HopfObject::new(b, s).map_err(|e| Error::InvalidObject(e.to_string()))
    }

    pub fn from_algebra<F: Field>(a: &AlgebraObject<F>) -> Self {
        let n = a.dim;
        StructureFile {
            field: FieldSpec::of(&a.field),
            dim: n,
            basis: a.labels.clone(),
            mul: Some(entries(&a.mul, |row, col| (col / n, col % n, row))),
            unit: Some(strings(&a.field, &a.unit)),
            comul: None,
            counit: None,
            antipode: None,
            structures: None,
        }
    }

    pub fn from_coalgebra<F: Field>(c: &CoalgebraObject<F>) -> Self {
        let n = c.dim;
        StructureFile {
            field: FieldSpec::of(&c.field),
            dim: n,
            basis: c.labels.clone(),
            mul: None,
            unit: None,
            comul: Some(entries(&c.comul, |row, col| (col, row / n, row % n))),
            counit: Some(strings(&c.field, &c.counit)),
            antipode: None,
            structures: None,
        }
    }

    pub fn from_bialgebra<F: Field>(b: &BialgebraObject<F>) -> Self {
        let c = Self::from_coalgebra(&b.coalg);
        StructureFile { comul: c.comul, counit: c.counit, ..Self::from_algebra(&b.alg) }
    }

    pub fn from_hopf<F: Field>(h: &HopfObject<F>) -> Self {
        StructureFile { antipode: Some(matrix_rows(&h.antipode)), ..Self::from_bialgebra(&h.bialg) }
    }

    /// The object structures declared in the file, over the file's Hopf algebra.
    pub fn cat_object<F: Field>(&self, f: &F, ctx: &CategoryContext<F>) -> Result<CatObject<F>> {
        structures_object(f, self.dim, self.structures.as_ref(), ctx)
    }
}

impl Structures {
    pub fn from_object<F: Field>(h: &HopfObject<F>, obj: &CatObject<F>) -> Self {
        let (d, n) = (obj.dim, obj.h_dim);
        Structures {
            hopf: Some(Box::new(StructureFile::from_hopf(h))),
            right_coaction: obj.right_coaction.as_ref().map(|m| entries(m, |row, col| (col, row / n, row % n))),
            left_coaction: obj.left_coaction.as_ref().map(|m| entries(m, |row, col| (col, row / d, row % d))),
            left_action: obj.left_action.as_ref().map(|m| entries(m, |row, col| (col / d, col % d, row))),
            right_action: obj.right_action.as_ref().map(|m| entries(m, |row, col| (col / n, col % n, row))),
        }
    }
}

/// Context for a file: `kind` over the Hopf algebra declared in `structures`.
pub fn context_for<F: Field>(f: &F, kind: CtxKind, s: Option<&Structures>) -> Result<CategoryContext<F>> {
    if kind == CtxKind::Vect {
        return Ok(CategoryContext::vect());
    }
    let h = s.and_then(|s| s.hopf.as_ref()).ok_or_else(|| Error::Input("context needs \"structures\".\"hopf\"".into()))?;
    CategoryContext::new(kind, Some(h.hopf(f)?))
}

fn structures_object<F: Field>(f: &F, d: usize, s: Option<&Structures>, ctx: &CategoryContext<F>) -> Result<CatObject<F>> {
    let n = ctx.h_dim();
    let mut obj = CatObject::plain(d);
    obj.h_dim = n;
    let Some(s) = s else {
        return if ctx.kind == CtxKind::Vect { Ok(obj) } else { Err(Error::Input("file has no \"structures\"".into())) };
    };
    if let Some(e) = &s.right_coaction {
        obj.right_coaction = Some(sparse(f, e, [d, d, n], d * n, d, "right_coaction", |v, w, l| (w * n + l, v))?);
    }
    if let Some(e) = &s.left_coaction {
        obj.left_coaction = Some(sparse(f, e, [d, n, d], n * d, d, "left_coaction", |v, l, w| (l * d + w, v))?);
    }
    if let Some(e) = &s.left_action {
        obj.left_action = Some(sparse(f, e, [n, d, d], d, n * d, "left_action", |l, v, w| (w, l * d + v))?);
    }
    if let Some(e) = &s.right_action {
        obj.right_action = Some(sparse(f, e, [d, n, d], d, d * n, "right_action", |v, l, w| (w, v * n + l))?);
    }
    Ok(obj)
}

impl BimoduleFile {
    pub fn bimodule<F: Field>(&self, f: &F, a: &AlgebraObject<F>) -> Result<BimoduleObject<F>> {
        check_field(f, &self.field)?;
        if self.algebra_dim != a.dim {
            return Err(Error::Input(format!("bimodule is over a {}-dimensional algebra, file algebra has {}", self.algebra_dim, a.dim)));
        }
        let (d, k) = (self.dim, a.dim);
        let left = sparse(f, &self.left, [k, d, d], d, k * d, "left", |i, v, w| (w, i * d + v))?;
        let right = sparse(f, &self.right, [d, k, d], d, d * k, "right", |v, i, w| (w, v * k + i))?;
        Ok(BimoduleObject { dim: d, left, right })
    }

    pub fn cat_object<F: Field>(&self, f: &F, ctx: &CategoryContext<F>) -> Result<CatObject<F>> {
        structures_object(f, self.dim, self.structures.as_ref(), ctx)
    }

    pub fn from_bimodule<F: Field>(f: &F, a_dim: usize, m: &BimoduleObject<F>) -> Self {
        let d = m.dim;
        BimoduleFile {
            field: FieldSpec::of(f),
            dim: d,
            algebra_dim: a_dim,
            left: entries(&m.left, |row, col| (col / d, col % d, row)),
            right: entries(&m.right, |row, col| (col / a_dim, col % a_dim, row)),
            structures: None,
        }
    }
}

impl SubspaceFile {
    pub fn subspace<F: Field>(&self, f: &F, ambient: usize) -> Result<Subspace<F>> {
        check_field(f, &self.field)?;
        if self.dim != ambient {
            return Err(Error::Input(format!("subspace lives in dimension {}, expected {ambient}", self.dim)));
        }
        let vs = self.vectors.iter().enumerate().map(|(i, v)| vector(f, v, ambient, &format!("vectors[{i}]"))).collect::<Result<Vec<_>>>()?;
        Ok(Subspace::from_vectors(f, ambient, vs))
    }

    pub fn from_subspace<F: Field>(s: &Subspace<F>) -> Self {
        let f = s.field();
        SubspaceFile { field: FieldSpec::of(f), dim: s.ambient(), vectors: s.basis().iter().map(|v| strings(f, v)).collect() }
    }
}

fn yd_structures<F: Field>(h: &HopfObject<F>, yd: &YDObject<F>) -> Structures {
    Structures::from_object(h, &yd.as_cat_object(h.dim()))
}

fn yd_from_structures<F: Field>(f: &F, r: &StructureFile, h: &HopfObject<F>) -> Result<YDObject<F>> {
    let ctx = CategoryContext::new(CtxKind::BimodHH, Some(h.clone()))?;
    let obj = structures_object(f, r.dim, r.structures.as_ref(), &ctx)?;
    match (obj.left_action, obj.left_coaction) {
        (Some(action), Some(coaction)) => Ok(YDObject { dim: r.dim, action, coaction }),
        _ => Err(Error::Input("R needs left_action and left_coaction".into())),
    }
}

fn tensor_entries<F: Field>(m: &Matrix<F>, split: impl Fn(usize, usize) -> (usize, usize, usize)) -> Vec<Entry> {
    entries(&SparseMap::from_dense(m), split)
}

impl QuadrupleFile {
    pub fn from_primal<F: Field>(q: &YDQuadruple<F>) -> Self {
        let f = q.field();
        let r = q.alg.dim;
        let mut rf = StructureFile::from_algebra(&q.alg);
        rf.structures = Some(yd_structures(&q.h, &q.yd));
        QuadrupleFile {
            quadruple: QuadrupleBody {
                kind: "primal".into(),
                h: StructureFile::from_hopf(&q.h),
                r: rf,
                vector: strings(f, &q.epsilon),
                map: tensor_entries(&q.delta, |row, col| (col, row / r, row % r)),
                cocycle: tensor_entries(&q.omega, |row, col| (col, row / r, row % r)),
            },
        }
    }

    pub fn from_dual<F: Field>(q: &DualYDQuadruple<F>) -> Self {
        let f = q.field();
        let r = q.coalg.dim;
        let mut rf = StructureFile::from_coalgebra(&q.coalg);
        rf.structures = Some(yd_structures(&q.h, &q.yd));
        QuadrupleFile {
            quadruple: QuadrupleBody {
                kind: "dual".into(),
                h: StructureFile::from_hopf(&q.h),
                r: rf,
                vector: strings(f, &q.one),
                map: tensor_entries(&q.m, |row, col| (col / r, col % r, row)),
                cocycle: tensor_entries(&q.xi, |row, col| (col / r, col % r, row)),
            },
        }
    }

    pub fn is_dual(&self) -> Result<bool> {
        match self.quadruple.kind.as_str() {
            "primal" => Ok(false),
            "dual" => Ok(true),
            k => Err(Error::Parse(format!("quadruple.kind: unknown kind {k:?}"))),
        }
    }

    pub fn primal<F: Field>(&self, f: &F) -> Result<YDQuadruple<F>> {
        if self.is_dual()? {
            return Err(Error::Input("quadruple is dual".into()));
        }
        let b = &self.quadruple;
        let h = b.h.hopf(f)?;
        let n = h.dim();
        let alg = b.r.algebra(f)?;
        let r = alg.dim;
        let yd = yd_from_structures(f, &b.r, &h)?;
        let epsilon = vector(f, &b.vector, r, "vector")?;
        let delta = sparse(f, &b.map, [r, r, r], r * r, r, "map", |i, s, t| (s * r + t, i))?.to_dense();
        let omega = sparse(f, &b.cocycle, [n, r, r], r * r, n, "cocycle", |l, s, t| (s * r + t, l))?.to_dense();
        Ok(YDQuadruple { h, yd, alg, epsilon, delta, omega })
    }

    pub fn dual<F: Field>(&self, f: &F) -> Result<DualYDQuadruple<F>> {
        if !self.is_dual()? {
            return Err(Error::Input("quadruple is primal".into()));
        }
        let b = &self.quadruple;
        let h = b.h.hopf(f)?;
        let n = h.dim();
        let coalg = b.r.coalgebra(f)?;
        let r = coalg.dim;
        let yd = yd_from_structures(f, &b.r, &h)?;
        let one = vector(f, &b.vector, r, "vector")?;
        let m = sparse(f, &b.map, [r, r, r], r, r * r, "map", |s, t, i| (i, s * r + t))?.to_dense();
        let xi = sparse(f, &b.cocycle, [r, r, n], n, r * r, "cocycle", |s, t, l| (l, s * r + t))?.to_dense();
        Ok(DualYDQuadruple { h, yd, coalg, one, m, xi })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

pub fn report_records(r: &Report) -> Vec<CheckRecord> {
    r.checks.iter().map(|c| CheckRecord { name: c.name.clone(), passed: c.passed, witness: c.witness.clone() }).collect()
}

/// A readable linear combination, with 𝔽_p residues above p/2 shown negative.
pub fn format_combination<F: Field>(f: &F, labels: &[String], v: &[F::Elem]) -> String {
    let mut terms = Vec::new();
    for (i, c) in v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
        let (neg, mag) = signed(f, c);
        let body = if f.is_one(&mag) {
            labels[i].clone()
        } else if labels[i] == "1" {
            f.format(&mag)
        } else {
            format!("{}·{}", f.format(&mag), labels[i])
        };
        terms.push((neg, body));
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (neg, body)) in terms.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => s.push_str(&format!("-{body}")),
            (0, false) => s.push_str(&body),
            (_, true) => s.push_str(&format!(" - {body}")),
            (_, false) => s.push_str(&format!(" + {body}")),
        }
    }
    s
}

fn signed<F: Field>(f: &F, c: &F::Elem) -> (bool, F::Elem) {
    match f.descriptor() {
        ScalarField::PrimeField(p) => {
            let v: u64 = f.format(c).parse().unwrap_or(0);
            if v > p / 2 {
                (true, f.neg(c))
            } else {
                (false, c.clone())
            }
        }
        ScalarField::Rationals => {
            if f.format(c).starts_with('-') {
                (true, f.neg(c))
            } else {
                (false, c.clone())
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub input: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitReportFile {
    pub side: crate::splitpipe::SplitSide,
    pub level: crate::splitpipe::SplitLevel,
    pub ctx: CtxKind,
    pub h: StructureFile,
    pub pi: Vec<Vec<String>>,
    pub sigma: Vec<Vec<String>>,
    pub r_basis: Vec<TableEntry>,
    pub quadruple: QuadrupleFile,
    /// Non-trivial values of ω or ξ in readable form.
    pub cocycle_table: Vec<TableEntry>,
    pub cocycle_trivial: bool,
    pub bosonization: StructureFile,
    pub iso: Vec<Vec<String>>,
    pub ledger: Vec<CheckRecord>,
    pub uniqueness_claimed: bool,
}

impl SplitReportFile {
    pub fn new<F: Field>(a_labels: &[String], rep: &SplitReport<F>) -> Self {
        let f = rep.h.field();
        let r_basis = rep
            .r_space
            .basis()
            .iter()
            .enumerate()
            .map(|(i, v)| TableEntry { input: format!("r{i}"), value: format_combination(f, a_labels, v) })
            .collect();
        let (quadruple, cocycle_table, cocycle_trivial) = match &rep.quadruple {
            Quadruple::Primal(q) => (QuadrupleFile::from_primal(q), omega_table(q), q.omega_is_trivial()),
            Quadruple::Dual(q) => (QuadrupleFile::from_dual(q), xi_table(q), q.xi_is_trivial()),
        };
        SplitReportFile {
            side: rep.side,
            level: rep.level,
            ctx: rep.ctx,
            h: StructureFile::from_hopf(&rep.h),
            pi: matrix_rows(&rep.pi),
            sigma: matrix_rows(&rep.sigma),
            r_basis,
            quadruple,
            cocycle_table,
            cocycle_trivial,
            bosonization: bosonization_file(&rep.bosonization),
            iso: matrix_rows(&rep.iso),
            ledger: report_records(&rep.ledger),
            uniqueness_claimed: false,
        }
    }
}

pub fn bosonization_file<F: Field>(b: &Bosonization<F>) -> StructureFile {
    StructureFile::from_bialgebra(&b.bialg)
}

fn tensor_labels(labels: &[String]) -> Vec<String> {
    labels.iter().flat_map(|a| labels.iter().map(move |b| format!("{a}⊗{b}"))).collect()
}

/// ω(h) ≠ ε(h)1⊗1.
fn omega_table<F: Field>(q: &YDQuadruple<F>) -> Vec<TableEntry> {
    let f = q.field();
    let tl = tensor_labels(&q.alg.labels);
    let one = crate::exactlin::vtensor(f, &q.alg.unit, &q.alg.unit);
    (0..q.h.dim())
        .filter_map(|l| {
            let v = q.omega.col(l);
            (v != crate::exactlin::vscale(f, &q.h.counit()[l], &one)).then(|| TableEntry { input: format!("ω({})", q.h.labels()[l]), value: format_combination(f, &tl, &v) })
        })
        .collect()
}

/// ξ(r⊗s) ≠ ε(r)ε(s)1.
fn xi_table<F: Field>(q: &DualYDQuadruple<F>) -> Vec<TableEntry> {
    let f = q.field();
    let r = q.coalg.dim;
    let labels = &q.coalg.labels;
    (0..r * r)
        .filter_map(|p| {
            let v = q.xi.col(p);
            let e = f.mul(&q.coalg.counit[p / r], &q.coalg.counit[p % r]);
            (v != crate::exactlin::vscale(f, &e, &q.h.one()))
                .then(|| TableEntry { input: format!("ξ({}⊗{})", labels[p / r], labels[p % r]), value: format_combination(f, q.h.labels(), &v) })
        })
        .collect()
}

/// Runs `body` with the concrete field named by `spec`.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec.prime_field()? {
            None => {
                let $f = $crate::exactlin::Rationals;
                $body
            }
            Some(p) => {
                let $f = p;
                $body
            }
        }
    };
}
