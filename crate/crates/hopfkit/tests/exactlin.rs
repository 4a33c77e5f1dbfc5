use hopfkit::exactlin::*;
use hopfkit::Error;
use proptest::prelude::*;

fn small_matrix<F: Field>(f: &F, rows: usize, cols: usize, vals: &[i64]) -> Matrix<F> {
    Matrix::from_fn(f, rows, cols, |i, j| f.from_i64(vals[(i * cols + j) % vals.len()]))
}

#[test]
fn identity_system() {
    let q = Rationals;
    let s = solve_linear(&Matrix::identity(&q, 2), &Matrix::from_i64(&q, 2, 1, &[1, 0])).unwrap();
    assert_eq!(s.particular, Matrix::from_i64(&q, 2, 1, &[1, 0]));
    assert_eq!(s.kernel.dim(), 0);
}

#[test]
fn zero_times_x_is_never_one() {
    let q = Rationals;
    let r = solve_linear(&Matrix::zeros(&q, 1, 1), &Matrix::from_i64(&q, 1, 1, &[1]));
    assert!(matches!(r, Err(Error::Inconsistent)));
}

#[test]
fn three_x_is_one_mod_seven() {
    let f = PrimeField::new(7).unwrap();
    let s = solve_linear(&Matrix::from_i64(&f, 1, 1, &[3]), &Matrix::from_i64(&f, 1, 1, &[1])).unwrap();
    // the inverse by enumeration
    let inv = (0..7u64).find(|x| 3 * x % 7 == 1).unwrap();
    assert_eq!(*s.particular.get(0, 0), inv);
    assert_eq!(inv, 5);
}

#[test]
fn subspace_examples() {
    let q = Rationals;
    let e1 = Subspace::from_vectors(&q, 2, [unit(&q, 2, 0)]);
    let e2 = Subspace::from_vectors(&q, 2, [unit(&q, 2, 1)]);
    let full = Subspace::full(&q, 2);
    assert_eq!(e1.sum(&e2).unwrap(), full);
    assert_eq!(e1.intersect(&e1).unwrap(), e1);
    let c = e1.quotient_basis(&full).unwrap();
    assert_eq!(c, e2);
    assert_eq!(e1.sum(&c).unwrap().dim(), 2);
    assert!(e2.quotient_basis(&e1).is_err());
}

#[test]
fn rationals_are_canonical() {
    let q = Rationals;
    let a = q.parse("2/4").unwrap();
    assert_eq!(q.format(&a), "1/2");
    assert_eq!(q.format(&q.parse("-6/3").unwrap()), "-2");
    assert!(q.parse("1/0").is_err());
    assert_eq!(q.inv(&q.zero()), None);
}

#[test]
fn prime_field_residues() {
    let f = PrimeField::new(7).unwrap();
    assert_eq!(f.from_i64(-1), 6);
    assert_eq!(f.parse("-3").unwrap(), 4);
    assert!(PrimeField::new(9).is_err());
    let big = PrimeField::new((1u64 << 61) - 1).unwrap();
    let x = big.from_i64(-2);
    assert_eq!(big.mul(&x, &big.inv(&x).unwrap()), 1);
}

fn vals() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 1..30)
}

proptest! {
    #[test]
    fn rank_plus_nullity(rows in 1usize..6, cols in 1usize..6, v in vals()) {
        let q = Rationals;
        let a = small_matrix(&q, rows, cols, &v);
        prop_assert_eq!(a.rank() + Subspace::kernel(&a).dim(), cols);
        let f = PrimeField::new(5).unwrap();
        let a = small_matrix(&f, rows, cols, &v);
        prop_assert_eq!(a.rank() + Subspace::kernel(&a).dim(), cols);
    }

    #[test]
    fn solutions_check_by_multiplication(rows in 1usize..6, cols in 1usize..6, v in vals(), x in vals()) {
        let q = Rationals;
        let a = small_matrix(&q, rows, cols, &v);
        // a consistent right-hand side b = A·x₀
        let x0 = small_matrix(&q, cols, 1, &x);
        let b = a.mul(&x0);
        let s = solve_linear(&a, &b).unwrap();
        prop_assert_eq!(a.mul(&s.particular), b);
        for k in s.kernel.basis() {
            prop_assert!(a.apply(k).iter().all(|c| q.is_zero(c)));
        }
        // the same input gives the same output
        let again = solve_linear(&a, &a.mul(&x0)).unwrap();
        prop_assert_eq!(again.particular, s.particular);
    }

    #[test]
    fn subspace_operations(n in 1usize..6, u in vals(), v in vals(), ku in 0usize..4, kv in 0usize..4) {
        let f = PrimeField::new(3).unwrap();
        let mu = small_matrix(&f, ku.min(n), n, &u);
        let mv = small_matrix(&f, kv.min(n), n, &v);
        let su = Subspace::from_vectors(&f, n, mu.row_vectors());
        let sv = Subspace::from_vectors(&f, n, mv.row_vectors());
        let s1 = su.sum(&sv).unwrap();
        prop_assert_eq!(&s1, &sv.sum(&su).unwrap());
        prop_assert!(s1.contains(&su) && s1.contains(&sv));
        prop_assert_eq!(su.sum(&su).unwrap(), su.clone());
        let i = su.intersect(&sv).unwrap();
        prop_assert_eq!(&i, &sv.intersect(&su).unwrap());
        prop_assert!(su.contains(&i) && sv.contains(&i));
        prop_assert_eq!(s1.dim() + i.dim(), su.dim() + sv.dim());
        let c = su.quotient_basis(&s1).unwrap();
        prop_assert_eq!(c.dim() + su.dim(), s1.dim());
        prop_assert_eq!(su.sum(&c).unwrap(), s1);
    }

    #[test]
    fn inverse_is_two_sided(n in 1usize..5, v in vals()) {
        let q = Rationals;
        let a = small_matrix(&q, n, n, &v);
        match a.inverse() {
            Some(b) => {
                prop_assert!(a.mul(&b).is_identity());
                prop_assert!(b.mul(&a).is_identity());
            }
            None => prop_assert!(a.rank() < n),
        }
    }

    #[test]
    fn rref_rows_are_reduced(rows in 1usize..6, cols in 1usize..6, v in vals()) {
        let q = Rationals;
        let e = small_matrix(&q, rows, cols, &v).rref();
        for (r, &p) in e.pivots().iter().enumerate() {
            prop_assert!(q.is_one(&e.rows()[r][p]));
            prop_assert!(e.rows()[r][..p].iter().all(|c| q.is_zero(c)));
            for (s, row) in e.rows().iter().enumerate() {
                if s != r {
                    prop_assert!(q.is_zero(&row[p]));
                }
            }
        }
        prop_assert!(e.pivots().windows(2).all(|w| w[0] < w[1]));
    }
}
