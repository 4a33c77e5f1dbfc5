mod common;

use common::*;
use hopfkit::algcore::*;
use hopfkit::examples::{diagonal_algebra, group_algebra, truncated_polynomial, upper_triangular};
use hopfkit::exactlin::{unit, Field, Matrix, PrimeField, Rationals, SparseMap, Subspace};
use hopfkit::monocat::{CatObject, CategoryContext};
use hopfkit::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q(n: i64) -> <Rationals as Field>::Elem {
    Rationals.from_i64(n)
}

fn half() -> <Rationals as Field>::Elem {
    Rationals.div(&q(1), &q(2)).unwrap()
}

#[test]
fn small_algebras_validate() {
    let f = Rationals;
    assert!(AlgebraObject::ground(&f).validate().all_passed());
    let dual_numbers = truncated_polynomial(&f, 2).unwrap();
    assert!(dual_numbers.validate().all_passed());
    // x·x = 0 by hand
    assert!(dual_numbers.mul_vec(&unit(&f, 2, 1), &unit(&f, 2, 1)).iter().all(|c| f.is_zero(c)));
}

#[test]
fn missing_unit_is_reported() {
    let f = Rationals;
    // e₀e₀ = e₁ and every other product zero; e₀ claimed as unit
    let mul = SparseMap::from_triples(&f, 2, 4, [(1, 0, q(1))]);
    let a = AlgebraObject::new(&f, vec!["e0".into(), "e1".into()], mul, unit(&f, 2, 0)).unwrap();
    let rep = a.validate();
    assert_eq!(rep.passed("unit"), Some(false));
    assert_eq!(rep.passed("associativity"), Some(true));
}

#[test]
fn generated_ideals() {
    let f = Rationals;
    let a = truncated_polynomial(&f, 2).unwrap();
    assert_eq!(ideal_generated_by(&a, &Matrix::zeros(&f, 2, 1)).unwrap().dim(), 0);
    let x = ideal_generated_by(&a, &Matrix::from_i64(&f, 2, 1, &[0, 1])).unwrap();
    assert_eq!(x.subspace, Subspace::from_vectors(&f, 2, [unit(&f, 2, 1)]));
    let z2 = group_algebra(&f, 2).unwrap().alg().clone();
    let i = ideal_generated_by(&z2, &Matrix::from_i64(&f, 2, 1, &[-1, 1])).unwrap();
    assert_eq!(i.subspace, Subspace::from_vectors(&f, 2, [vec![q(-1), q(1)]]));
}

#[test]
fn nilpotency_indices() {
    let f = Rationals;
    let a = truncated_polynomial(&f, 3).unwrap();
    let zero = IdealData::from_subspace(&a, Subspace::zero(&f, 3)).unwrap();
    assert_eq!(ideal_power_nilpotency(&a, &zero, 5).unwrap().nilpotency_index, 2);
    let x = ideal_generated_by(&a, &Matrix::from_i64(&f, 3, 1, &[0, 1, 0])).unwrap();
    let nil = ideal_power_nilpotency(&a, &x, 5).unwrap();
    assert_eq!(nil.nilpotency_index, 3);
    assert_eq!(nil.powers[1], Subspace::from_vectors(&f, 3, [unit(&f, 3, 2)]));
    let z2 = group_algebra(&f, 2).unwrap().alg().clone();
    let g1 = ideal_generated_by(&z2, &Matrix::from_i64(&f, 2, 1, &[-1, 1])).unwrap();
    assert!(matches!(ideal_power_nilpotency(&z2, &g1, 6), Err(Error::NotNilpotentWithin(_))));
}

#[test]
fn radicals() {
    let f = Rationals;
    let z3 = group_algebra(&f, 3).unwrap().alg().clone();
    assert_eq!(radical(&z3, None).unwrap().dim(), 0);
    let a = truncated_polynomial(&f, 2).unwrap();
    assert_eq!(radical(&a, None).unwrap().subspace, Subspace::from_vectors(&f, 2, [unit(&f, 2, 1)]));
    // certification in small characteristic
    let f2 = PrimeField::new(2).unwrap();
    let t = upper_triangular(&f2, 2).unwrap();
    assert!(matches!(radical(&t, None), Err(Error::SmallCharUnsupported { .. })));
    let strict = IdealData::from_subspace(&t, Subspace::from_vectors(&f2, 3, [unit(&f2, 3, 1)])).unwrap();
    assert_eq!(radical(&t, Some(&strict)).unwrap().dim(), 1);
    let zero = IdealData::from_subspace(&t, Subspace::zero(&f2, 3)).unwrap();
    assert!(matches!(radical(&t, Some(&zero)), Err(Error::CertificationFailed(_))));
}

#[test]
fn separability_idempotents() {
    let f = Rationals;
    let ctx = CategoryContext::vect();
    let k = AlgebraObject::ground(&f);
    assert_eq!(separability_idempotent(&k, &ctx, &CatObject::plain(1)).unwrap(), vec![q(1)]);
    let z2 = group_algebra(&f, 2).unwrap().alg().clone();
    let e = separability_idempotent(&z2, &ctx, &CatObject::plain(2)).unwrap();
    assert_eq!(e, vec![half(), q(0), q(0), half()]);
    let f2 = PrimeField::new(2).unwrap();
    let z2 = group_algebra(&f2, 2).unwrap().alg().clone();
    assert!(matches!(separability_idempotent(&z2, &CategoryContext::vect(), &CatObject::plain(2)), Err(Error::NotSeparable)));
}

#[test]
fn quotients() {
    let f = Rationals;
    let a = truncated_polynomial(&f, 2).unwrap();
    let zero = IdealData::from_subspace(&a, Subspace::zero(&f, 2)).unwrap();
    let (qa, p) = quotient_algebra(&a, &zero).unwrap();
    assert_eq!(qa.dim, 2);
    assert!(p.is_identity());
    let x = radical(&a, None).unwrap();
    let (qa, p) = quotient_algebra(&a, &x).unwrap();
    assert_eq!(qa.dim, 1);
    assert!(qa.validate().all_passed());
    assert_eq!(a.is_algebra_map_to(&qa, &p), None);
}

/// Contraction of e ∈ A⊗A against the structure constants, by hand.
fn contraction_ok<F: Field>(a: &AlgebraObject<F>, e: &[F::Elem]) -> bool {
    let f = &a.field;
    let n = a.dim;
    let mut m = vec![f.zero(); n];
    for p in 0..n * n {
        for (k, c) in a.mul_basis(p / n, p % n) {
            f.add_mul_assign(&mut m[*k], c, &e[p]);
        }
    }
    if m != a.unit {
        return false;
    }
    for x in 0..n {
        let mut lhs = vec![f.zero(); n * n];
        let mut rhs = vec![f.zero(); n * n];
        for p in 0..n * n {
            let (i, j) = (p / n, p % n);
            for (k, c) in a.mul_basis(x, i) {
                f.add_mul_assign(&mut lhs[k * n + j], c, &e[p]);
            }
            for (k, c) in a.mul_basis(j, x) {
                f.add_mul_assign(&mut rhs[i * n + k], c, &e[p]);
            }
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn radical_is_nilpotent_with_separable_quotient(seed in any::<u64>()) {
        let f = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_algebra(&f, &mut rng);
        let rad = radical(&a, None).unwrap();
        for v in rad.subspace.basis() {
            for i in 0..a.dim {
                prop_assert!(rad.subspace.contains_vector(&a.mul_vec(&a.basis(i), v)));
                prop_assert!(rad.subspace.contains_vector(&a.mul_vec(v, &a.basis(i))));
            }
        }
        prop_assert!(ideal_power_nilpotency(&a, &rad, a.dim + 2).is_ok());
        let (qa, _) = quotient_algebra(&a, &rad).unwrap();
        let e = separability_idempotent(&qa, &CategoryContext::vect(), &CatObject::plain(qa.dim)).unwrap();
        prop_assert!(contraction_ok(&qa, &e));
        prop_assert!(verify_separability_idempotent(&qa, &e));
    }

    #[test]
    fn generated_ideal_is_closed(seed in any::<u64>()) {
        let f = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_algebra(&f, &mut rng);
        let g = random_matrix(&f, a.dim, 1, &mut rng);
        let i = ideal_generated_by(&a, &g).unwrap();
        prop_assert!(i.subspace.contains(&Subspace::image(&g)));
        prop_assert!(check_ideal(&a, &i.subspace).is_ok());
    }

    /// A character χ of a diagonal algebra with χ(f) = 0 kills the ideal ⟨f⟩.
    #[test]
    fn character_killing_generator_kills_ideal(seed in any::<u64>(), n in 2usize..=4, k in 0usize..4) {
        let f = Rationals;
        let k = k % n;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = diagonal_algebra(&f, n).unwrap();
        let p = random_invertible(&f, n, &mut rng);
        let a = conjugate_algebra(&d, &p);
        // χ_k in the new basis: x ↦ (P x)_k
        let chi = Matrix::from_rows(&f, n, vec![p.row(k).to_vec()]);
        let target = AlgebraObject::ground(&f);
        prop_assert_eq!(a.is_algebra_map_to(&target, &chi), None);
        let mut g = random_matrix(&f, n, 1, &mut rng).col(0);
        // push g into ker χ
        let pinv = p.inverse().unwrap();
        let mut coords = p.apply(&g);
        coords[k] = f.zero();
        g = pinv.apply(&coords);
        let ideal = ideal_generated_by(&a, &Matrix::from_columns(&f, n, &[g])).unwrap();
        for v in ideal.subspace.basis() {
            prop_assert!(f.is_zero(&chi.apply(v)[0]));
        }
    }
}
