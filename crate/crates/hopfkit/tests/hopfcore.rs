use hopfkit::algcore::{separability_idempotent, AlgebraObject};
use hopfkit::cocore::CoalgebraObject;
use hopfkit::examples::{build_ha, dual_group_algebra, group_algebra, sweedler_h4, taft};
use hopfkit::exactlin::{unit, Field, Matrix, PrimeField, Rationals, SparseMap};
use hopfkit::hopfcore::*;
use hopfkit::monocat::{CatObject, CategoryContext};
use hopfkit::Error;
use proptest::prelude::*;

fn r(n: i64) -> <Rationals as Field>::Elem {
    Rationals.from_i64(n)
}

/// Δ(eᵢeⱼ) = Δ(eᵢ)Δ(eⱼ) on every pair, with dense vectors throughout.
fn naive_comul_multiplicative<F: Field>(b: &BialgebraObject<F>) -> bool {
    let f = b.field();
    let n = b.dim();
    let a = &b.alg;
    let c = &b.coalg;
    for i in 0..n {
        for j in 0..n {
            let lhs = c.comul_vec(&a.mul_vec(&a.basis(i), &a.basis(j)));
            let (di, dj) = (c.comul_vec(&a.basis(i)), c.comul_vec(&a.basis(j)));
            let mut rhs = vec![f.zero(); n * n];
            for p in 0..n * n {
                for r in 0..n * n {
                    if f.is_zero(&di[p]) || f.is_zero(&dj[r]) {
                        continue;
                    }
                    let cr = f.mul(&di[p], &dj[r]);
                    let x = a.mul_vec(&a.basis(p / n), &a.basis(r / n));
                    let y = a.mul_vec(&a.basis(p % n), &a.basis(r % n));
                    for k in 0..n {
                        for l in 0..n {
                            let t = f.mul(&x[k], &y[l]);
                            f.add_mul_assign(&mut rhs[k * n + l], &cr, &t);
                        }
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn with_comul<F: Field>(b: &BialgebraObject<F>, comul: Matrix<F>) -> BialgebraObject<F> {
    let c = &b.coalg;
    let coalg = CoalgebraObject::new(&c.field, c.labels.clone(), SparseMap::from_dense(&comul), c.counit.clone()).unwrap();
    BialgebraObject::new(b.alg.clone(), coalg).unwrap()
}

fn with_mul<F: Field>(b: &BialgebraObject<F>, mul: Matrix<F>) -> BialgebraObject<F> {
    let a = &b.alg;
    let alg = AlgebraObject::new(&a.field, a.labels.clone(), SparseMap::from_dense(&mul), a.unit.clone()).unwrap();
    BialgebraObject::new(alg, b.coalg.clone()).unwrap()
}

#[test]
fn compatibility_agrees_with_naive_check_on_both_sides() {
    let q = Rationals;
    let h4 = sweedler_h4(&q).unwrap().bialg;
    // H₄ is checked directly, its dual through the dual
    for b in [h4.clone(), h4.dual()] {
        assert_eq!(b.compatibility().passed("comultiplication multiplicative"), Some(true));
        let comul = b.coalg.comul.to_dense();
        let mul = b.alg.mul.to_dense();
        let mut broken = 0;
        for r in 0..comul.rows() {
            for c in 0..comul.cols() {
                let mut m = comul.clone();
                m.add_at(r, c, &q.one());
                let mb = with_comul(&b, m);
                let naive = naive_comul_multiplicative(&mb);
                broken += usize::from(!naive);
                assert_eq!(mb.compatibility().passed("comultiplication multiplicative"), Some(naive));
            }
        }
        for r in 0..mul.rows() {
            for c in 0..mul.cols() {
                let mut m = mul.clone();
                m.add_at(r, c, &q.one());
                let mb = with_mul(&b, m);
                let naive = naive_comul_multiplicative(&mb);
                broken += usize::from(!naive);
                assert_eq!(mb.compatibility().passed("comultiplication multiplicative"), Some(naive));
            }
        }
        assert!(broken > 0);
    }
}

#[test]
fn unit_checks_keep_their_names_on_the_dual_side() {
    let q = Rationals;
    let b = sweedler_h4(&q).unwrap().bialg.dual();
    // ε(1) stays 1 but Δ(1) picks up an extra term
    let one = b.alg.unit.clone();
    let idx = one.iter().position(|c| !q.is_zero(c)).unwrap();
    let mut comul = b.coalg.comul.to_dense();
    comul.add_at(idx * 4 + (idx + 1) % 4, idx, &q.one());
    let rep = with_comul(&b, comul).compatibility();
    assert_eq!(rep.passed("comultiplication unital"), Some(false));
    assert_eq!(rep.passed("counit multiplicative"), Some(true));
}

#[test]
fn antipodes() {
    let q = Rationals;
    let k = group_algebra(&q, 1).unwrap();
    let s = upgrade_to_hopf(&k.bialg, None).unwrap();
    assert!(s.antipode.is_identity());
    let z2 = group_algebra(&q, 2).unwrap();
    let s = upgrade_to_hopf(&z2.bialg, None).unwrap();
    // g = g⁻¹
    assert!(s.antipode.is_identity());
    let h4 = sweedler_h4(&q).unwrap();
    let s = upgrade_to_hopf(&h4.bialg, None).unwrap();
    assert_eq!(s.antipode, h4.antipode);
    // S(x) = −gx
    assert_eq!(s.s(&unit(&q, 4, 2)), vec![r(0), r(0), r(0), r(-1)]);
    assert!(matches!(upgrade_to_hopf(&h4.bialg, Some(&Matrix::identity(&q, 4))), Err(Error::NoAntipode)));
}

#[test]
fn ha_antipode_from_hint() {
    let f = PrimeField::new(7).unwrap();
    // λ = 2 has order 3 mod 7
    let h = build_ha(&f, 3, &2, &1).unwrap();
    let up = upgrade_to_hopf(&h.bialg, Some(&h.antipode)).unwrap();
    assert!(up.antipode_failure().is_none());
}

#[test]
fn a_bialgebra_without_antipode() {
    // the monoid {1, x} with x² = x: a bialgebra, but x has no inverse
    let q = Rationals;
    let mul = SparseMap::from_triples(&q, 2, 4, [(0, 0, r(1)), (1, 1, r(1)), (1, 2, r(1)), (1, 3, r(1))]);
    let alg = AlgebraObject::new(&q, vec!["1".into(), "x".into()], mul, unit(&q, 2, 0)).unwrap();
    let comul = SparseMap::from_triples(&q, 4, 2, [(0, 0, r(1)), (3, 1, r(1))]);
    let coalg = CoalgebraObject::new(&q, vec!["1".into(), "x".into()], comul, vec![r(1), r(1)]).unwrap();
    let b = BialgebraObject::new(alg, coalg).unwrap();
    assert!(b.is_valid());
    assert!(matches!(upgrade_to_hopf(&b, None), Err(Error::NoAntipode)));
}

#[test]
fn integrals_of_small_group_algebras() {
    let q = Rationals;
    let k = group_algebra(&q, 1).unwrap();
    let t = find_integral(&k, IntegralLocation::InH, Side::Both).unwrap();
    assert_eq!(t.coeffs, vec![r(1)]);
    assert!(t.normalized);
    for n in 2..=6 {
        let h = group_algebra(&q, n).unwrap();
        let t = find_integral(&h, IntegralLocation::InH, Side::Both).unwrap();
        assert_eq!(t.coeffs, vec![Rationals.div(&r(1), &r(n as i64)).unwrap(); n]);
        assert!(verify_integral(&h, &t));
        assert!(check_ad_coinvariance(&h, &t).unwrap());
        let lam = find_integral(&h, IntegralLocation::InDual, Side::Both).unwrap();
        assert_eq!(lam.coeffs, unit(&q, n, 0));
        assert!(check_ad_invariance(&h, &lam).unwrap());
    }
    let f2 = PrimeField::new(2).unwrap();
    let h = group_algebra(&f2, 2).unwrap();
    let t = find_integral(&h, IntegralLocation::InH, Side::Left).unwrap();
    assert_eq!(t.coeffs, vec![1, 1]);
    assert_eq!(t.normalization, 0);
    assert!(!t.normalized);
    assert!(verify_integral(&h, &t));
    assert!(matches!(check_ad_coinvariance(&h, &t), Err(Error::NotNormalized(_))));
}

#[test]
fn h4_integrals_are_not_two_sided() {
    let q = Rationals;
    let h4 = sweedler_h4(&q).unwrap();
    let left = find_integral(&h4, IntegralLocation::InH, Side::Left).unwrap();
    let right = find_integral(&h4, IntegralLocation::InH, Side::Right).unwrap();
    assert_eq!(left.space_dim, 1);
    assert!(!left.normalized);
    assert_ne!(integral_space(h4.alg(), h4.counit(), Side::Left), integral_space(h4.alg(), h4.counit(), Side::Right));
    assert!(verify_integral(&h4, &right));
    assert_eq!(integral_space(h4.alg(), h4.counit(), Side::Both).dim(), 0);
}

fn cyclic_maschke<F: Field>(f: &F, n: usize) -> (bool, bool) {
    let h = group_algebra(f, n).unwrap();
    let t = find_integral(&h, IntegralLocation::InH, Side::Both).unwrap();
    let sep = separability_idempotent(h.alg(), &CategoryContext::vect(), &CatObject::plain(n));
    (t.normalized, sep.is_ok())
}

#[test]
fn maschke_consistency() {
    for n in 1..=6 {
        let (a, b) = cyclic_maschke(&Rationals, n);
        assert!(a && b, "Q[Z{n}]");
        for p in [2u64, 3, 5, 7] {
            let f = PrimeField::new(p).unwrap();
            let (a, b) = cyclic_maschke(&f, n);
            assert_eq!(a, b, "F{p}[Z{n}]");
            assert_eq!(a, !(n as u64).is_multiple_of(p), "F{p}[Z{n}]");
        }
    }
}

fn involution<F: Field>(h: &HopfObject<F>) -> bool {
    h.antipode.mul(&h.antipode).is_identity()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn antipode_is_an_involution(n in 1usize..=6, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let q = Rationals;
        let h = group_algebra(&q, n).unwrap();
        prop_assert!(involution(&h));
        prop_assert!(involution(&dual_group_algebra(&q, n).unwrap()));
        let f = PrimeField::new(p).unwrap();
        prop_assert!(involution(&group_algebra(&f, n).unwrap()));
        let d = dual_group_algebra(&f, n).unwrap();
        prop_assert!(involution(&d));
        // the solved antipode agrees with the built one
        prop_assert_eq!(upgrade_to_hopf(&d.bialg, None).unwrap().antipode, d.antipode);
    }

    #[test]
    fn integral_spaces_are_lines(n in 1usize..=6, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let f = PrimeField::new(p).unwrap();
        for h in [group_algebra(&f, n).unwrap(), dual_group_algebra(&f, n).unwrap()] {
            for loc in [IntegralLocation::InH, IntegralLocation::InDual] {
                for side in [Side::Left, Side::Right, Side::Both] {
                    let w = find_integral(&h, loc, side).unwrap();
                    prop_assert_eq!(w.space_dim, 1);
                    prop_assert!(verify_integral(&h, &w));
                }
            }
        }
    }

    #[test]
    fn taft_integral_spaces_are_lines(n in 2usize..=3) {
        // a primitive n-th root in F₇: 6 for n = 2, 2 for n = 3
        let f = PrimeField::new(7).unwrap();
        let root = if n == 2 { 6 } else { 2 };
        let h = taft(&f, n, &root).unwrap();
        for side in [Side::Left, Side::Right] {
            for loc in [IntegralLocation::InH, IntegralLocation::InDual] {
                let w = find_integral(&h, loc, side).unwrap();
                prop_assert_eq!(w.space_dim, 1);
                prop_assert!(verify_integral(&h, &w));
            }
        }
    }
}
