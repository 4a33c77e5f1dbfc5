//! End-to-end splitting: certify a radical coideal or a coradical
//! sub-bialgebra, build the (co)linear section or retraction through the
//! square-zero tower, extract the quadruple, bosonize, and check the result
//! against the input.

use serde::Serialize;

use crate::algcore::{check_ideal, ideal_power_nilpotency, product_space, quotient_algebra, separability_idempotent, AlgebraObject, IdealData};
use crate::cocore::{annihilator, coradical, coradical_filtration, dualize_coalgebra, in_tensor_square, subcoalgebra_failure, wedge_of, CoalgebraObject};
use crate::error::{Error, Result};
use crate::exactlin::{unit, vaxpy, vtensor, Field, Matrix, SparseMap, Subspace};
use crate::hochschild::{lift_through_tower, CtxAlgebra, TowerStep};
use crate::hopfcore::{find_integral, upgrade_to_hopf, BialgebraObject, HopfObject, IntegralLocation, Side};
use crate::monocat::{CatObject, CategoryContext, CtxKind};
use crate::report::Report;
use crate::smashboso::{
    bosonize, coinvariants_of, dual_bosonize, dual_split_report, extract_dual_quadruple, extract_quadruple, phi_matrix, split_report, Bosonization, DualYDQuadruple,
    YDQuadruple,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitSide {
    Radical,
    Coradical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitLevel {
    Comodule,
    Bicomodule,
}

/// A bialgebra together with a certified radical coideal J (H = A/J) or a
/// certified coradical sub-bialgebra C₀ (H = C₀).
#[derive(Clone, Debug)]
pub struct CertifiedInput<F: Field> {
    pub side: SplitSide,
    pub a: BialgebraObject<F>,
    pub h: HopfObject<F>,
    /// J or C₀.
    pub subspace: Subspace<F>,
    /// Radical side: the projection A → H. Coradical side: the inclusion H → A.
    pub structure_map: Matrix<F>,
    pub report: Report,
}

#[derive(Clone, Debug)]
pub struct SplitMaps<F: Field> {
    pub level: SplitLevel,
    pub ctx: CtxKind,
    /// A → H
    pub pi: Matrix<F>,
    /// H → A
    pub sigma: Matrix<F>,
    pub steps: Vec<TowerStep>,
    pub report: Report,
}

#[derive(Clone, Debug)]
pub enum Quadruple<F: Field> {
    Primal(YDQuadruple<F>),
    Dual(DualYDQuadruple<F>),
}

#[derive(Clone, Debug)]
pub struct SplitReport<F: Field> {
    pub side: SplitSide,
    pub level: SplitLevel,
    pub ctx: CtxKind,
    pub h: HopfObject<F>,
    pub pi: Matrix<F>,
    pub sigma: Matrix<F>,
    /// Coinvariants R ⊆ A in RREF basis.
    pub r_space: Subspace<F>,
    pub quadruple: Quadruple<F>,
    pub bosonization: Bosonization<F>,
    /// φ: R#H → A, r#h ↦ rσ(h).
    pub iso: Matrix<F>,
    pub ledger: Report,
}

/// (p⊗p)Δ(v) for a linear map p.
fn push_comul<F: Field>(c: &CoalgebraObject<F>, p: &Matrix<F>, v: &[F::Elem]) -> Vec<F::Elem> {
    let f = &c.field;
    let n = c.dim;
    let k = p.rows();
    let cols = p.columns();
    let mut out = vec![f.zero(); k * k];
    for (q, z) in c.comul_vec(v).iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
        vaxpy(f, &mut out, z, &vtensor(f, &cols[q / n], &cols[q % n]));
    }
    out
}

pub fn coideal_failure<F: Field>(a: &BialgebraObject<F>, j: &Subspace<F>) -> Option<String> {
    let f = a.field();
    let q = j.quotient_projection();
    for (i, v) in j.basis().iter().enumerate() {
        if !f.is_zero(&a.coalg.counit_of(v)) {
            return Some(format!("ε ≠ 0 on basis vector {i}"));
        }
        if !crate::exactlin::vis_zero(f, &push_comul(&a.coalg, &q, v)) {
            return Some(format!("Δ(J) ⊄ J⊗A + A⊗J at basis vector {i}"));
        }
    }
    None
}

/// A/J as a bialgebra on the complement coordinates, with the projection.
pub fn quotient_bialgebra<F: Field>(a: &BialgebraObject<F>, j: &Subspace<F>) -> Result<(BialgebraObject<F>, Matrix<F>)> {
    if let Some(w) = coideal_failure(a, j) {
        return Err(Error::CertificationFailed(format!("not a coideal: {w}")));
    }
    let (q, proj) = quotient_algebra(&a.alg, &IdealData { subspace: j.clone(), witness: None })?;
    let keep = j.complement_indices();
    let counit = keep.iter().map(|i| a.coalg.counit[*i].clone()).collect();
    let coalg = CoalgebraObject::from_coproducts(a.field(), q.labels.clone(), counit, |t| push_comul(&a.coalg, &proj, &a.alg.basis(keep[t])))?;
    let b = BialgebraObject::new(q, coalg)?;
    b.validate().ensure("quotient bialgebra")?;
    Ok((b, proj))
}

fn sub_labels<F: Field>(f: &F, labels: &[String], basis: &[Vec<F::Elem>]) -> Vec<String> {
    basis
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let nz = v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect::<Vec<_>>();
            match nz.as_slice() {
                [(j, c)] if f.is_one(c) => labels[*j].clone(),
                _ => format!("d{i}"),
            }
        })
        .collect()
}

/// A sub-bialgebra D ⊆ A on the RREF basis of D, with the inclusion.
pub fn sub_bialgebra<F: Field>(a: &BialgebraObject<F>, d: &Subspace<F>) -> Result<(BialgebraObject<F>, Matrix<F>)> {
    let f = a.field();
    let mut coalg = a.coalg.restrict(d).map_err(|e| Error::CertificationFailed(e.to_string()))?;
    let labels = sub_labels(f, a.labels(), d.basis());
    coalg.labels = labels.clone();
    let coords = |v: &[F::Elem]| d.coords(v).ok_or_else(|| Error::CertificationFailed("not a subalgebra".into()));
    let unit = coords(&a.alg.unit)?;
    let mut table = Vec::new();
    for x in d.basis() {
        for y in d.basis() {
            table.push(coords(&a.alg.mul_vec(x, y))?);
        }
    }
    let k = d.dim();
    let alg = AlgebraObject::from_products(f, labels, unit, |i, j| table[i * k + j].clone())?;
    let b = BialgebraObject::new(alg, coalg)?;
    b.validate().ensure("sub-bialgebra")?;
    Ok((b, d.inclusion()))
}

/// Semisimplicity and cosemisimplicity of H, read off normalized integrals.
fn integral_verdicts<F: Field>(h: &HopfObject<F>, rep: &mut Report) {
    let t = find_integral(h, IntegralLocation::InH, Side::Left).is_some_and(|t| t.normalized);
    let l = find_integral(h, IntegralLocation::InDual, Side::Left).is_some_and(|l| l.normalized);
    rep.pass(format!("integral verdict: H semisimple = {t}"));
    rep.pass(format!("integral verdict: H cosemisimple = {l}"));
}

/// Certifies the data for a split. Radical side: `candidate` is a nilpotent
/// ideal and coideal with separable Hopf quotient. Coradical side: a
/// sub-bialgebra certified as the coradical.
pub fn certify_split_input<F: Field>(a: &BialgebraObject<F>, side: SplitSide, candidate: &Subspace<F>) -> Result<CertifiedInput<F>> {
    a.validate().ensure("input bialgebra").map_err(|e| Error::CertificationFailed(e.to_string()))?;
    if candidate.ambient() != a.dim() {
        return Err(Error::Shape("candidate ambient dimension".into()));
    }
    let mut report = Report::new();
    let vect = CategoryContext::vect();
    match side {
        SplitSide::Radical => {
            check_ideal(&a.alg, candidate).map_err(|e| Error::CertificationFailed(e.to_string()))?;
            report.pass("ideal");
            if let Some(w) = coideal_failure(a, candidate) {
                return Err(Error::CertificationFailed(format!("not a coideal: {w}")));
            }
            report.pass("coideal");
            let nil = ideal_power_nilpotency(&a.alg, &IdealData { subspace: candidate.clone(), witness: None }, a.dim() + 2)
                .map_err(|e| Error::CertificationFailed(e.to_string()))?;
            report.pass(format!("nilpotent of index {}", nil.nilpotency_index));
            let (q, proj) = quotient_bialgebra(a, candidate)?;
            let h = upgrade_to_hopf(&q, None).map_err(|_| Error::CertificationFailed("quotient has no antipode".into()))?;
            report.pass("quotient is a Hopf algebra");
            separability_idempotent(h.alg(), &vect, &CatObject::plain(h.dim()))
                .map_err(|_| Error::CertificationFailed("quotient is not separable".into()))?;
            report.pass("quotient is separable");
            integral_verdicts(&h, &mut report);
            Ok(CertifiedInput { side, a: a.clone(), h, subspace: candidate.clone(), structure_map: proj, report })
        }
        SplitSide::Coradical => {
            if let Some(w) = subcoalgebra_failure(&a.coalg, candidate) {
                return Err(Error::CertificationFailed(format!("not a subcoalgebra: {w}")));
            }
            let (b, inc) = sub_bialgebra(a, candidate)?;
            report.pass("sub-bialgebra");
            coradical(&a.coalg, Some(candidate))?;
            report.pass("coradical");
            let h = upgrade_to_hopf(&b, None).map_err(|_| Error::CertificationFailed("coradical has no antipode".into()))?;
            report.pass("coradical is a Hopf algebra");
            integral_verdicts(&h, &mut report);
            Ok(CertifiedInput { side, a: a.clone(), h, subspace: candidate.clone(), structure_map: inc, report })
        }
    }
}

fn ctx_kind(level: SplitLevel) -> CtxKind {
    match level {
        SplitLevel::Comodule => CtxKind::ComodR,
        SplitLevel::Bicomodule => CtxKind::BicomodHH,
    }
}

/// A as an H-bicomodule through p: (A⊗p)Δ and (p⊗A)Δ.
fn induced_bicomodule<F: Field>(a: &BialgebraObject<F>, p: &Matrix<F>) -> CatObject<F> {
    let f = a.field();
    let n = a.dim();
    let k = p.rows();
    let cols = p.columns();
    let mut rc = Vec::new();
    let mut lc = Vec::new();
    for i in 0..n {
        for (q, c) in a.coalg.comul_basis(i) {
            let (x, y) = (q / n, q % n);
            for (l, z) in cols[y].iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
                rc.push((x * k + l, i, f.mul(c, z)));
            }
            for (l, z) in cols[x].iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
                lc.push((l * n + y, i, f.mul(c, z)));
            }
        }
    }
    CatObject {
        dim: n,
        h_dim: k,
        right_coaction: Some(SparseMap::from_triples(f, n * k, n, rc)),
        left_coaction: Some(SparseMap::from_triples(f, k * n, n, lc)),
        left_action: None,
        right_action: None,
    }
}

/// A* as an H*-bicomodule, dual to A as an H-bimodule through the inclusion s.
fn dual_of_induced_bimodule<F: Field>(a: &BialgebraObject<F>, s: &Matrix<F>) -> CatObject<F> {
    let f = a.field();
    let n = a.dim();
    let k = s.cols();
    let sc = s.columns();
    let mut la = Vec::new();
    let mut ra = Vec::new();
    for l in 0..k {
        for v in 0..n {
            let e = a.alg.basis(v);
            la.push(a.alg.mul_vec(&sc[l], &e));
            ra.push((v, l, a.alg.mul_vec(&e, &sc[l])));
        }
    }
    // left action column l·n + v, right action column v·k + l
    let left = SparseMap::from_columns(f, n, la);
    let mut rcols = vec![Vec::new(); n * k];
    for (v, l, col) in ra {
        rcols[v * k + l] = col;
    }
    let right = SparseMap::from_columns(f, n, rcols);
    CatObject { dim: n, h_dim: k, right_coaction: Some(right.transpose()), left_coaction: Some(left.transpose()), left_action: None, right_action: None }
}

fn split_checks<F: Field>(cert: &CertifiedInput<F>, level: SplitLevel, pi: &Matrix<F>, sigma: &Matrix<F>) -> Report {
    let (a, h) = (&cert.a, &cert.h);
    let mut rep = match (cert.side, level) {
        (SplitSide::Radical, SplitLevel::Bicomodule) => split_report(a, h, pi, sigma, false),
        (SplitSide::Coradical, SplitLevel::Bicomodule) => dual_split_report(a, h, pi, sigma, false),
        (SplitSide::Radical, SplitLevel::Comodule) => {
            let mut r = split_report(a, h, pi, sigma, false);
            r.checks.retain(|c| c.name != "σ is left colinear");
            r
        }
        (SplitSide::Coradical, SplitLevel::Comodule) => {
            let mut r = dual_split_report(a, h, pi, sigma, false);
            r.checks.retain(|c| c.name != "π is left linear");
            r
        }
    };
    let expected = match cert.side {
        SplitSide::Radical => pi == &cert.structure_map,
        SplitSide::Coradical => sigma == &cert.structure_map,
    };
    rep.check("maps match the certified structure", expected, || "structure map changed".into());
    rep
}

/// Radical side: an algebra section σ of A → A/J, colinear at `level`.
/// Coradical side: a coalgebra retraction π of C₀ ⊆ A, linear at `level`,
/// obtained from the radical-side lift for A* and J = C₀^⊥ over H*.
pub fn split<F: Field>(cert: &CertifiedInput<F>, level: SplitLevel) -> Result<SplitMaps<F>> {
    let f = cert.a.field().clone();
    let kind = ctx_kind(level);
    let k = cert.h.dim();
    let (pi, sigma, steps) = match cert.side {
        SplitSide::Radical => {
            let ctx = CategoryContext::new(kind, Some(cert.h.clone()))?;
            let a = CtxAlgebra { alg: cert.a.alg.clone(), obj: induced_bicomodule(&cert.a, &cert.structure_map) };
            let b = CtxAlgebra { alg: cert.h.alg().clone(), obj: CatObject::regular(&cert.h) };
            let j = IdealData { subspace: cert.subspace.clone(), witness: None };
            let lift = lift_through_tower(&ctx, &a, &j, &b, &Matrix::identity(&f, k))?;
            (cert.structure_map.clone(), lift.map, lift.steps)
        }
        SplitSide::Coradical => {
            let hd = cert.h.dual();
            let ctx = CategoryContext::new(kind, Some(hd.clone()))?;
            let n = cert.a.dim();
            let a = CtxAlgebra { alg: dualize_coalgebra(&cert.a.coalg), obj: dual_of_induced_bimodule(&cert.a, &cert.structure_map) };
            let b = CtxAlgebra { alg: hd.alg().clone(), obj: CatObject::regular(&hd) };
            let jsp = annihilator(&f, n, &cert.subspace);
            let keep = jsp.complement_indices();
            // A*/J → H*: restriction of coordinate functionals to C₀
            let basis = cert.subspace.basis();
            let restrict = Matrix::from_fn(&f, k, keep.len(), |l, t| basis[l][keep[t]].clone());
            let f_map = restrict.inverse().ok_or_else(|| Error::Verification("A*/C₀^⊥ ≇ H*".into()))?;
            let j = IdealData { subspace: jsp, witness: None };
            let lift = lift_through_tower(&ctx, &a, &j, &b, &f_map)?;
            (lift.map.transpose(), cert.structure_map.clone(), lift.steps)
        }
    };
    let report = split_checks(cert, level, &pi, &sigma);
    report.ensure("split").map_err(|e| Error::Verification(e.to_string()))?;
    Ok(SplitMaps { level, ctx: kind, pi, sigma, steps, report })
}

/// Extracts the quadruple, bosonizes it and checks that φ: R#H → A is a
/// bialgebra isomorphism. Needs bicomodule-level maps.
pub fn reconstruct_and_verify<F: Field>(cert: &CertifiedInput<F>, maps: &SplitMaps<F>) -> Result<SplitReport<F>> {
    if maps.level != SplitLevel::Bicomodule {
        return Err(Error::Input("reconstruction needs bicomodule-level maps".into()));
    }
    let (a, h) = (&cert.a, &cert.h);
    let mut ledger = Report::new();
    ledger.absorb("certificate: ", cert.report.clone());
    ledger.absorb("split: ", maps.report.clone());
    let (quadruple, bos) = match cert.side {
        SplitSide::Radical => {
            let q = extract_quadruple(a, h, &maps.pi, &maps.sigma)?;
            ledger.absorb("quadruple: ", q.validate());
            let b = bosonize(&q)?;
            let sigma_coalg = h.coalg().is_coalgebra_map_to(&a.coalg, &maps.sigma).is_none();
            ledger.check("σ is a coalgebra map iff ω is trivial", sigma_coalg == q.omega_is_trivial(), || format!("σ coalgebra map: {sigma_coalg}"));
            (Quadruple::Primal(q), b)
        }
        SplitSide::Coradical => {
            let q = extract_dual_quadruple(a, h, &maps.pi, &maps.sigma)?;
            ledger.absorb("quadruple: ", q.validate());
            let b = dual_bosonize(&q)?;
            let pi_alg = a.alg.is_algebra_map_to(h.alg(), &maps.pi).is_none();
            ledger.check("π is an algebra map iff ξ is trivial", pi_alg == q.xi_is_trivial(), || format!("π algebra map: {pi_alg}"));
            (Quadruple::Dual(q), b)
        }
    };
    ledger.absorb("bosonization: ", bos.report.clone());
    let iso = phi_matrix(a, h, &maps.pi, &maps.sigma)?;
    ledger.check("φ is bijective", iso.inverse().is_some(), || "singular".into());
    ledger.record("φ is an algebra map", bos.bialg.alg.is_algebra_map_to(&a.alg, &iso));
    ledger.record("φ is a coalgebra map", bos.bialg.coalg.is_coalgebra_map_to(&a.coalg, &iso));
    ledger.ensure("reconstruction").map_err(|e| Error::Verification(e.to_string()))?;
    let r_space = coinvariants_of(a, h, &maps.pi);
    Ok(SplitReport { side: cert.side, level: maps.level, ctx: maps.ctx, h: h.clone(), pi: maps.pi.clone(), sigma: maps.sigma.clone(), r_space, quadruple, bosonization: bos, iso, ledger })
}

/// Certify, split at `level` and, at bicomodule level, reconstruct.
pub fn run_split<F: Field>(a: &BialgebraObject<F>, side: SplitSide, candidate: &Subspace<F>, level: SplitLevel) -> Result<(CertifiedInput<F>, SplitMaps<F>, Option<SplitReport<F>>)> {
    let cert = certify_split_input(a, side, candidate)?;
    let maps = split(&cert, level)?;
    let rep = match level {
        SplitLevel::Bicomodule => Some(reconstruct_and_verify(&cert, &maps)?),
        SplitLevel::Comodule => None,
    };
    Ok((cert, maps, rep))
}

/// Antipode of A from one of A/J: with S₀ = s∘S_{A/J}∘p for the coordinate
/// section s, id*S₀ = uε + ν where ν maps into J and is convolution
/// nilpotent, so S = S₀ * Σ (−ν)^{*k}.
pub fn hopf_upgrade<F: Field>(a: &BialgebraObject<F>, j: &Subspace<F>) -> Result<HopfObject<F>> {
    let f = a.field();
    let n = a.dim();
    check_ideal(&a.alg, j)?;
    let nil = ideal_power_nilpotency(&a.alg, &IdealData { subspace: j.clone(), witness: None }, n + 2)?;
    let (q, proj) = quotient_bialgebra(a, j)?;
    let hq = upgrade_to_hopf(&q, None)?;
    let keep = j.complement_indices();
    let lift = Matrix::from_fn(f, n, keep.len(), |i, t| if keep[t] == i { f.one() } else { f.zero() });
    let s0 = lift.mul(&hq.antipode).mul(&proj);
    let ue = a.unit_counit();
    let id = Matrix::identity(f, n);
    let nu = a.convolve(&id, &s0).sub(&ue);
    let minus_nu = nu.neg();
    let mut inv = ue.clone();
    let mut term = ue.clone();
    for _ in 1..nil.nilpotency_index {
        term = a.convolve(&term, &minus_nu);
        inv = inv.add(&term);
    }
    let s = a.convolve(&s0, &inv);
    HopfObject::new(a.clone(), s).map_err(|_| Error::NoAntipode)
}

/// Checks on the coradical filtration of A against the split: dim C_n =
/// dim R_n · dim H, the membership Δ(r) ∈ Σ r₋₁⊗r₀ + r⊗1 + C_{n−1}⊗C_{n−1}
/// on a basis of R_n = R ∩ C_n, and C₁ = C₀ + Σ_g (Kg ∧ K1)·H when C₀ is
/// spanned by grouplikes.
pub fn corad_filtration_smash_check<F: Field>(a: &BialgebraObject<F>, rep: &SplitReport<F>) -> Result<Report> {
    if rep.side != SplitSide::Coradical {
        return Err(Error::Input("needs a coradical-side report".into()));
    }
    let f = a.field();
    let n = a.dim();
    let k = rep.h.dim();
    let c0 = Subspace::image(&rep.sigma);
    let filt = coradical_filtration(&a.coalg, &c0)?;
    let mut out = Report::new();
    out.check("filtration exhausts A", filt.exhausts, || format!("dims {:?}", filt.dims()));
    let sp = rep.sigma.mul(&rep.pi);
    for (step, cn) in filt.steps.iter().enumerate() {
        let rn = rep.r_space.intersect(cn)?;
        out.check(format!("dim C_{step} = dim R_{step} · dim H"), cn.dim() == rn.dim() * k, || format!("{} vs {}·{k}", cn.dim(), rn.dim()));
        if step == 0 {
            continue;
        }
        let prev = &filt.steps[step - 1];
        let mut w = None;
        for (i, r) in rn.basis().iter().enumerate() {
            let mut d = a.coalg.comul_vec(r);
            let rho = push_left(a, &sp, r);
            let r1 = vtensor(f, r, &a.alg.unit);
            for t in 0..n * n {
                d[t] = f.sub(&f.sub(&d[t], &rho[t]), &r1[t]);
            }
            if !in_tensor_square(f, n, prev, &d) {
                w = Some(format!("basis vector {i} of R_{step}"));
                break;
            }
        }
        out.record(format!("coproduct of R_{step} modulo C_{}", step - 1), w);
    }
    if filt.steps.len() > 1 {
        let grouplike = |v: &[F::Elem]| a.coalg.comul_vec(v) == vtensor(f, v, v);
        let gs = c0.basis().iter().filter(|v| grouplike(v)).cloned().collect::<Vec<_>>();
        if gs.len() == c0.dim() {
            let one = Subspace::from_vectors(f, n, [a.alg.unit.clone()]);
            let mut sum = c0.clone();
            for g in gs {
                let kg = Subspace::from_vectors(f, n, [g]);
                let wedge = wedge_of(&a.coalg, &kg, &one);
                sum = sum.sum(&product_space(&a.alg, &wedge, &c0))?;
            }
            out.check("C₁ = C₀ + Σ (Kg ∧ K1)·H", sum == filt.steps[1], || format!("dims {} vs {}", sum.dim(), filt.steps[1].dim()));
        } else {
            out.fail("C₁ = C₀ + Σ (Kg ∧ K1)·H", "coradical is not spanned by grouplikes; unsupported");
        }
    }
    Ok(out)
}

/// (p⊗A)Δ(v) for p: A → A.
fn push_left<F: Field>(a: &BialgebraObject<F>, p: &Matrix<F>, v: &[F::Elem]) -> Vec<F::Elem> {
    let f = a.field();
    let n = a.dim();
    let cols = p.columns();
    let mut out = vec![f.zero(); n * n];
    for (q, z) in a.coalg.comul_vec(v).iter().enumerate().filter(|(_, z)| !f.is_zero(z)) {
        vaxpy(f, &mut out, z, &vtensor(f, &cols[q / n], &unit(f, n, q % n)));
    }
    out
}
