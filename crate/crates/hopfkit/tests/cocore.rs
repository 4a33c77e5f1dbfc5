mod common;

use common::*;
use hopfkit::algcore::AlgebraObject;
use hopfkit::cocore::*;
use hopfkit::examples::{group_algebra, matrix_algebra, sweedler_h4, taft, truncated_polynomial};
use hopfkit::exactlin::{unit, Field, Rationals, Subspace};
use hopfkit::splitpipe::{run_split, Quadruple, SplitLevel, SplitSide};
use hopfkit::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn span<F: Field>(f: &F, n: usize, idx: &[usize]) -> Subspace<F> {
    Subspace::from_vectors(f, n, idx.iter().map(|i| unit(f, n, *i)))
}

#[test]
fn duals_of_small_algebras() {
    let q = Rationals;
    let k = dualize_algebra(&AlgebraObject::ground(&q));
    assert!(k.validate().all_passed());
    assert_eq!(k.comul_basis(0), &[(0, q.one())]);
    // functions on Z₂: δ_g·δ_h = [g = h] δ_g
    let z2 = group_algebra(&q, 2).unwrap();
    let fun = dualize_coalgebra(z2.coalg());
    for i in 0..2 {
        for j in 0..2 {
            let want = if i == j { unit(&q, 2, i) } else { vec![q.zero(); 2] };
            assert_eq!(fun.mul_vec(&unit(&q, 2, i), &unit(&q, 2, j)), want);
        }
    }
    assert_eq!(fun.unit, vec![q.one(), q.one()]);
    let h4 = sweedler_h4(&q).unwrap();
    assert!(h4.bialg.dual().validate().all_passed());
}

#[test]
fn double_dual_is_the_identity() {
    let q = Rationals;
    let h = taft(&q, 2, &q.from_i64(-1)).unwrap();
    let dd = h.bialg.dual().dual();
    assert_eq!(dd, h.bialg);
}

#[test]
fn wedges() {
    let q = Rationals;
    let h4 = sweedler_h4(&q).unwrap();
    let c = h4.coalg();
    assert_eq!(wedge(&Subspace::full(&q, 4), c).unwrap().dim(), 4);
    assert_eq!(wedge(&span(&q, 4, &[0, 1]), c).unwrap().dim(), 4);
    // span{x} is not a subcoalgebra
    assert!(wedge(&span(&q, 4, &[2]), c).is_err());
    let z2 = group_algebra(&q, 2).unwrap();
    assert_eq!(wedge(&span(&q, 2, &[0]), z2.coalg()).unwrap(), span(&q, 2, &[0]));
}

#[test]
fn coradicals() {
    let q = Rationals;
    let m2 = dualize_algebra(&matrix_algebra(&q, 2).unwrap());
    assert_eq!(coradical(&m2, None).unwrap().dim(), 4);
    let h4 = sweedler_h4(&q).unwrap();
    let c0 = coradical(h4.coalg(), None).unwrap();
    assert_eq!(c0, span(&q, 4, &[0, 1]));
    assert_eq!(coradical(h4.coalg(), Some(&c0)).unwrap(), c0);
    assert!(matches!(coradical(h4.coalg(), Some(&span(&q, 4, &[0]))), Err(Error::CertificationFailed(_))));
}

#[test]
fn filtrations() {
    let q = Rationals;
    let z3 = group_algebra(&q, 3).unwrap();
    assert_eq!(coradical_filtration(z3.coalg(), &Subspace::full(&q, 3)).unwrap().dims(), [3]);
    let h4 = sweedler_h4(&q).unwrap();
    let filt = coradical_filtration(h4.coalg(), &span(&q, 4, &[0, 1])).unwrap();
    assert_eq!(filt.dims(), [2, 4]);
    assert!(filt.exhausts);
}

#[test]
fn connected_coalgebras() {
    let q = Rationals;
    let k = dualize_algebra(&AlgebraObject::ground(&q));
    let filt = coradical_filtration(&k, &Subspace::full(&q, 1)).unwrap();
    assert!(connected_filtration_check(&k, &filt).unwrap().all_passed());
    // divided powers: the dual of K[x]/(x⁴)
    let c = dualize_algebra(&truncated_polynomial(&q, 4).unwrap());
    let filt = coradical_filtration(&c, &span(&q, 4, &[0])).unwrap();
    assert_eq!(filt.dims(), [1, 2, 3, 4]);
    assert!(connected_filtration_check(&c, &filt).unwrap().all_passed());
    // the diagram of H₄ from the coradical split
    let h4 = sweedler_h4(&q).unwrap();
    let (_, _, rep) = run_split(&h4.bialg, SplitSide::Coradical, &span(&q, 4, &[0, 1]), SplitLevel::Bicomodule).unwrap();
    let Quadruple::Dual(qd) = rep.unwrap().quadruple else { panic!("expected a dual quadruple") };
    let r0 = Subspace::from_vectors(&q, 2, [qd.one.clone()]);
    let filt = coradical_filtration(&qd.coalg, &r0).unwrap();
    assert_eq!(filt.dims(), [1, 2]);
    assert!(connected_filtration_check(&qd.coalg, &filt).unwrap().all_passed());
    // not connected
    let filt = coradical_filtration(h4.coalg(), &span(&q, 4, &[0, 1])).unwrap();
    assert!(connected_filtration_check(h4.coalg(), &filt).is_err());
}

/// Duals of the random algebra families.
fn random_coalgebra(rng: &mut ChaCha8Rng) -> CoalgebraObject<Rationals> {
    dualize_algebra(&random_algebra(&Rationals, rng))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn wedge_contains_and_is_monotone(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_coalgebra(&mut rng);
        let c0 = coradical(&c, None).unwrap();
        let filt = coradical_filtration(&c, &c0).unwrap();
        prop_assert!(filt.exhausts);
        for (i, d) in filt.steps.iter().enumerate() {
            prop_assert!(subcoalgebra_failure(&c, d).is_none());
            let w = wedge(d, &c).unwrap();
            prop_assert!(w.contains(d));
            if let Some(bigger) = filt.steps.get(i + 1) {
                prop_assert!(bigger.contains(d));
                prop_assert!(wedge(bigger, &c).unwrap().contains(&w));
            }
        }
    }

    #[test]
    fn filtration_is_multiplicative_for_wedge(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_coalgebra(&mut rng);
        let c0 = coradical(&c, None).unwrap();
        let filt = coradical_filtration(&c, &c0).unwrap();
        let last = filt.steps.len() - 1;
        for m in 0..filt.steps.len() {
            for n in 0..filt.steps.len() {
                let w = wedge_of(&c, &filt.steps[m], &filt.steps[n]);
                prop_assert!(filt.steps[(m + n + 1).min(last)].contains(&w));
            }
        }
    }

    #[test]
    fn certified_and_computed_coradicals_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_coalgebra(&mut rng);
        let computed = coradical(&c, None).unwrap();
        prop_assert_eq!(coradical(&c, Some(&computed)).unwrap(), computed);
    }

    #[test]
    fn double_dual_of_random_algebra(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_algebra(&Rationals, &mut rng);
        let c = dualize_algebra(&a);
        prop_assert!(c.validate().all_passed());
        prop_assert_eq!(dualize_coalgebra(&c), a);
    }
}
