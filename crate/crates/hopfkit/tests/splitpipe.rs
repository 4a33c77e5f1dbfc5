use hopfkit::examples::{build_ha, group_algebra, sweedler_h4};
use hopfkit::exactlin::{unit, Field, Matrix, PrimeField, Rationals, Subspace};
use hopfkit::splitpipe::*;

fn span<F: Field>(f: &F, n: usize, idx: &[usize]) -> Subspace<F> {
    Subspace::from_vectors(f, n, idx.iter().map(|i| unit(f, n, *i)))
}

#[test]
fn sweedler_radical_side() {
    let q = Rationals;
    let a = sweedler_h4(&q).unwrap();
    let (cert, maps, rep) = run_split(&a.bialg, SplitSide::Radical, &span(&q, 4, &[2, 3]), SplitLevel::Bicomodule).unwrap();
    assert_eq!(cert.h.dim(), 2);
    // σ(g) = g
    assert_eq!(maps.sigma.col(1), unit(&q, 4, 1));
    let rep = rep.unwrap();
    assert!(rep.ledger.all_passed(), "{:?}", rep.ledger.lines());
    match &rep.quadruple {
        Quadruple::Primal(qd) => assert!(qd.omega_is_trivial()),
        _ => panic!("expected a primal quadruple"),
    }
    // σ is a coalgebra map here
    assert_eq!(cert.h.coalg().is_coalgebra_map_to(&a.bialg.coalg, &maps.sigma), None);
}

#[test]
fn sweedler_comodule_level_section() {
    let q = Rationals;
    let a = sweedler_h4(&q).unwrap();
    let (_, maps, rep) = run_split(&a.bialg, SplitSide::Radical, &span(&q, 4, &[2, 3]), SplitLevel::Comodule).unwrap();
    assert!(rep.is_none());
    assert!(maps.report.all_passed());
    assert!(maps.pi.mul(&maps.sigma).is_identity());
}

#[test]
fn sweedler_coradical_side() {
    let q = Rationals;
    let a = sweedler_h4(&q).unwrap();
    let (cert, maps, rep) = run_split(&a.bialg, SplitSide::Coradical, &span(&q, 4, &[0, 1]), SplitLevel::Bicomodule).unwrap();
    let rep = rep.unwrap();
    assert!(rep.ledger.all_passed(), "{:?}", rep.ledger.lines());
    // π(gⁱxʲ) = δ_{j0}gⁱ
    assert_eq!(maps.pi, Matrix::from_i64(&q, 2, 4, &[1, 0, 0, 0, 0, 1, 0, 0]));
    let check = corad_filtration_smash_check(&cert.a, &rep).unwrap();
    assert!(check.all_passed(), "{:?}", check.lines());
}

#[test]
fn semisimple_input_splits_trivially() {
    let q = Rationals;
    let h = group_algebra(&q, 3).unwrap();
    let (_, maps, rep) = run_split(&h.bialg, SplitSide::Radical, &Subspace::zero(&q, 3), SplitLevel::Bicomodule).unwrap();
    assert!(maps.sigma.is_identity());
    assert_eq!(rep.unwrap().r_space.dim(), 1);
    let (_, maps, _) = run_split(&h.bialg, SplitSide::Coradical, &Subspace::full(&q, 3), SplitLevel::Bicomodule).unwrap();
    assert!(maps.pi.is_identity());
}

#[test]
fn wrong_candidates_are_refused() {
    let q = Rationals;
    let a = sweedler_h4(&q).unwrap();
    // span{x} is not an ideal; span{1, x} is not a subcoalgebra
    assert!(certify_split_input(&a.bialg, SplitSide::Radical, &span(&q, 4, &[2])).is_err());
    assert!(certify_split_input(&a.bialg, SplitSide::Coradical, &span(&q, 4, &[0, 2])).is_err());
    // span{1} is a subcoalgebra but not the coradical
    assert!(certify_split_input(&a.bialg, SplitSide::Coradical, &span(&q, 4, &[0])).is_err());
}

#[test]
fn hopf_upgrade_recovers_sweedler_antipode() {
    let q = Rationals;
    let a = sweedler_h4(&q).unwrap();
    let h = hopf_upgrade(&a.bialg, &span(&q, 4, &[2, 3])).unwrap();
    assert_eq!(h.antipode, a.antipode);
    let h = hopf_upgrade(&a.bialg, &Subspace::zero(&q, 4)).unwrap();
    assert_eq!(h.antipode, a.antipode);
}

#[test]
fn ha_upgrade_through_dual_matches_builtin() {
    let f = PrimeField::new(7).unwrap();
    let a = build_ha(&f, 3, &2, &1).unwrap();
    let c0 = Subspace::from_vectors(&f, 81, (0..9).map(|i| unit(&f, 81, 9 * i)));
    let dual = a.bialg.dual();
    let j = hopfkit::cocore::annihilator(&f, 81, &c0);
    let up = hopf_upgrade(&dual, &j).unwrap();
    assert_eq!(up.antipode.transpose(), a.antipode);
}

#[test]
fn ha_coradical_split_flagship() {
    let f = PrimeField::new(7).unwrap();
    let t = std::time::Instant::now();
    let a = build_ha(&f, 3, &2, &1).unwrap();
    let c0 = Subspace::from_vectors(&f, 81, (0..9).map(|i| unit(&f, 81, 9 * i)));
    let (cert, maps, rep) = run_split(&a.bialg, SplitSide::Coradical, &c0, SplitLevel::Bicomodule).unwrap();
    eprintln!("split {:?} steps {:?}", t.elapsed(), maps.steps);
    let rep = rep.unwrap();
    assert!(rep.ledger.all_passed(), "{:?}", rep.ledger.failures());
    let Quadruple::Dual(qd) = &rep.quadruple else { panic!("expected a dual quadruple") };
    assert!(!qd.xi_is_trivial());
    // ξ(x₂⊗x₁) = a(c² − 1)
    let pos = |l: &str| qd.coalg.labels.iter().position(|x| x == l).unwrap();
    let xi = qd.xi.col(pos("x2") * 9 + pos("x1"));
    let hpos = |l: &str| cert.h.labels().iter().position(|x| x == l).unwrap();
    let mut want = vec![0u64; 9];
    want[hpos("1")] = 6;
    want[hpos("c^2")] = 1;
    assert_eq!(xi, want);
    let check = corad_filtration_smash_check(&cert.a, &rep).unwrap();
    eprintln!("{:?} total {:?}", check.lines(), t.elapsed());
    assert!(check.all_passed());
}
