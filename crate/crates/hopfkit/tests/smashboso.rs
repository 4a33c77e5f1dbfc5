use hopfkit::algcore::AlgebraObject;
use hopfkit::cocore::CoalgebraObject;
use hopfkit::examples::{group_algebra, sweedler_h4};
use hopfkit::exactlin::{unit, Field, Matrix, Rationals, SparseMap};
use hopfkit::hopfcore::{BialgebraObject, HopfObject};
use hopfkit::monocat::YDObject;
use hopfkit::smashboso::*;

type Q = Rationals;

/// R = span{1, y} over ℚ[Z₂] with ᵍy = −y and ρ(y) = g⊗y.
fn dual_number_yd(q: &Q) -> YDObject<Q> {
    let action = SparseMap::from_triples(q, 2, 4, [(0, 0, q.one()), (1, 1, q.one()), (0, 2, q.one()), (1, 3, q.from_i64(-1))]);
    let coaction = SparseMap::from_triples(q, 4, 2, [(0, 0, q.one()), (3, 1, q.one())]);
    YDObject { dim: 2, action, coaction }
}

fn hand_quadruple() -> YDQuadruple<Q> {
    let q = Rationals;
    let h = group_algebra(&q, 2).unwrap();
    let alg = AlgebraObject::from_products(&q, vec!["1".into(), "y".into()], unit(&q, 2, 0), |i, j| {
        if i + j < 2 { unit(&q, 2, i + j) } else { vec![q.zero(); 2] }
    })
    .unwrap();
    let delta = Matrix::from_i64(&q, 4, 2, &[1, 0, 0, 1, 0, 1, 0, 0]);
    let omega = Matrix::from_i64(&q, 4, 2, &[1, 1, 0, 0, 0, 0, 0, 0]);
    YDQuadruple { h, yd: dual_number_yd(&q), alg, epsilon: vec![q.one(), q.zero()], delta, omega }
}

fn hand_dual_quadruple() -> DualYDQuadruple<Q> {
    let q = Rationals;
    let h = group_algebra(&q, 2).unwrap();
    let comul = SparseMap::from_triples(&q, 4, 2, [(0, 0, q.one()), (1, 1, q.one()), (2, 1, q.one())]);
    let coalg = CoalgebraObject::new(&q, vec!["1".into(), "y".into()], comul, vec![q.one(), q.zero()]).unwrap();
    let m = Matrix::from_i64(&q, 2, 4, &[1, 0, 0, 0, 0, 1, 1, 0]);
    let xi = Matrix::from_i64(&q, 2, 4, &[1, 0, 0, 0, 0, 0, 0, 0]);
    DualYDQuadruple { h, yd: dual_number_yd(&q), coalg, one: unit(&q, 2, 0), m, xi }
}

/// 1#1 ↦ 1, 1#g ↦ g, y#1 ↦ x, y#g ↦ xg = −gx.
fn to_sweedler(q: &Q) -> Matrix<Q> {
    Matrix::from_i64(q, 4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1])
}

fn assert_bialgebra_iso(src: &BialgebraObject<Q>, dst: &HopfObject<Q>, map: &Matrix<Q>) {
    assert!(map.inverse().is_some());
    assert_eq!(src.alg.is_algebra_map_to(dst.alg(), map), None);
    assert_eq!(src.coalg.is_coalgebra_map_to(dst.coalg(), map), None);
}

/// π(gⁱxʲ) = δ_{j0}gⁱ and the inclusion σ.
fn h4_split(q: &Q) -> (Matrix<Q>, Matrix<Q>) {
    let pi = Matrix::from_i64(q, 2, 4, &[1, 0, 0, 0, 0, 1, 0, 0]);
    (pi.clone(), pi.transpose())
}

#[test]
fn hand_quadruple_is_valid_and_bosonizes_to_sweedler() {
    let q = Rationals;
    let quad = hand_quadruple();
    let rep = quad.validate();
    assert!(rep.all_passed(), "{:?}", rep.lines());
    assert!(quad.omega_is_trivial());
    let b = bosonize(&quad).unwrap();
    assert_bialgebra_iso(&b.bialg, &sweedler_h4(&q).unwrap(), &to_sweedler(&q));
}

#[test]
fn hand_dual_quadruple_is_valid_and_bosonizes_to_sweedler() {
    let q = Rationals;
    let quad = hand_dual_quadruple();
    let rep = quad.validate();
    assert!(rep.all_passed(), "{:?}", rep.lines());
    assert!(quad.xi_is_trivial());
    let b = dual_bosonize(&quad).unwrap();
    assert_bialgebra_iso(&b.bialg, &sweedler_h4(&q).unwrap(), &to_sweedler(&q));
}

#[test]
fn trivial_quadruples_pass() {
    let q = Rationals;
    let h = sweedler_h4(&q).unwrap();
    assert!(trivial_quadruple(&h).validate().all_passed());
    assert!(trivial_dual_quadruple(&h).validate().all_passed());
    let b = bosonize(&trivial_quadruple(&h)).unwrap();
    assert_bialgebra_iso(&b.bialg, &h, &Matrix::identity(&q, 4));
}

#[test]
fn sweedler_radical_split_round_trips() {
    let q = Rationals;
    let a = sweedler_h4(&q).unwrap();
    let h = group_algebra(&q, 2).unwrap();
    let (pi, sigma) = h4_split(&q);
    let quad = extract_quadruple(&a.bialg, &h, &pi, &sigma).unwrap();
    assert_eq!(quad.r_dim(), 2);
    assert!(quad.omega_is_trivial());
    let hand = hand_quadruple();
    assert_eq!((&quad.delta, &quad.omega, &quad.epsilon), (&hand.delta, &hand.omega, &hand.epsilon));
    assert_eq!((&quad.yd, &quad.alg.mul), (&hand.yd, &hand.alg.mul));
    let b = bosonize(&quad).unwrap();
    let phi = phi_matrix(&a.bialg, &h, &pi, &sigma).unwrap();
    assert_bialgebra_iso(&b.bialg, &a, &phi);
    // extraction from the bosonization gives the same data back
    let again = extract_quadruple(&b.bialg, &h, &b.pi, &b.sigma).unwrap();
    assert_eq!(again.delta, quad.delta);
    assert_eq!(again.omega, quad.omega);
    assert_eq!(again.epsilon, quad.epsilon);
    assert_eq!(again.yd, quad.yd);
}

#[test]
fn sweedler_coradical_split_round_trips() {
    let q = Rationals;
    let a = sweedler_h4(&q).unwrap();
    let h = group_algebra(&q, 2).unwrap();
    let (pi, sigma) = h4_split(&q);
    let quad = extract_dual_quadruple(&a.bialg, &h, &pi, &sigma).unwrap();
    assert!(quad.xi_is_trivial());
    let b = dual_bosonize(&quad).unwrap();
    let phi = phi_matrix(&a.bialg, &h, &pi, &sigma).unwrap();
    assert_bialgebra_iso(&b.bialg, &a, &phi);
    let again = extract_dual_quadruple(&b.bialg, &h, &b.pi, &b.sigma).unwrap();
    assert_eq!(again.m, quad.m);
    assert_eq!(again.xi, quad.xi);
    assert_eq!(again.coalg.comul, quad.coalg.comul);
}

#[test]
fn identity_split_gives_trivial_quadruple() {
    let q = Rationals;
    let h = sweedler_h4(&q).unwrap();
    let id = Matrix::identity(&q, 4);
    let quad = extract_quadruple(&h.bialg, &h, &id, &id).unwrap();
    assert_eq!(quad.r_dim(), 1);
    assert!(quad.omega_is_trivial());
}

#[test]
fn non_colinear_section_is_refused() {
    let q = Rationals;
    let a = sweedler_h4(&q).unwrap();
    let h = group_algebra(&q, 2).unwrap();
    let (pi, _) = h4_split(&q);
    // σ(g) = g + x is an algebra map with πσ = id but not colinear
    let sigma = Matrix::from_i64(&q, 4, 2, &[1, 0, 0, 1, 0, 1, 0, 0]);
    assert!(extract_quadruple(&a.bialg, &h, &pi, &sigma).is_err());
}

/// Every single-entry perturbation of ε, δ and ω.
fn mutations(base: &YDQuadruple<Q>) -> Vec<YDQuadruple<Q>> {
    let q = Rationals;
    let mut out = vec![];
    for i in 0..base.epsilon.len() {
        let mut m = base.clone();
        m.epsilon[i] = q.add(&m.epsilon[i], &q.one());
        out.push(m);
    }
    for r in 0..base.delta.rows() {
        for c in 0..base.delta.cols() {
            let mut m = base.clone();
            m.delta.add_at(r, c, &q.one());
            out.push(m);
        }
        for c in 0..base.omega.cols() {
            let mut m = base.clone();
            m.omega.add_at(r, c, &q.one());
            out.push(m);
        }
    }
    out
}

#[test]
fn every_axiom_is_detected_and_mutants_do_not_bosonize() {
    let base = hand_quadruple();
    let mut seen = [false; 11];
    for m in mutations(&base) {
        let rep = m.validate();
        for (k, name) in QUADRUPLE_AXIOMS.iter().enumerate() {
            if rep.passed(name) == Some(false) {
                seen[k] = true;
            }
        }
        let b = bosonization_candidate(&m).unwrap();
        assert_eq!(rep.all_passed(), b.report.all_passed());
        assert!(bosonize(&m).is_err());
    }
    assert_eq!(seen, [true; 11]);
}

#[test]
fn dual_mutants_do_not_bosonize() {
    let q = Rationals;
    let base = hand_dual_quadruple();
    for r in 0..2 {
        for c in 0..4 {
            let mut m = base.clone();
            m.m.add_at(r, c, &q.one());
            assert!(!m.validate().all_passed());
            assert!(!dual_bosonization_candidate(&m).unwrap().report.all_passed());
            let mut m = base.clone();
            m.xi.add_at(r, c, &q.one());
            assert!(!m.validate().all_passed());
            assert!(!dual_bosonization_candidate(&m).unwrap().report.all_passed());
        }
    }
}
