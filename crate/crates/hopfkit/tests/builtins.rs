use hopfkit::examples::*;
use hopfkit::exactlin::{Field, Matrix, PrimeField, Rationals};

#[test]
fn sweedler_is_valid_with_expected_antipode() {
    let q = Rationals;
    let h = sweedler_h4(&q).unwrap();
    assert_eq!(h.labels(), ["1", "g", "x", "gx"]);
    assert!(h.is_valid());
    // S(x) = −gx
    assert_eq!(h.antipode.col(2), vec![q.zero(), q.zero(), q.zero(), q.from_i64(-1)]);
}

#[test]
fn ha_builds_and_validates() {
    let f = PrimeField::new(7).unwrap();
    let t = std::time::Instant::now();
    let h = build_ha(&f, 3, &2, &1).unwrap();
    eprintln!("build {:?}", t.elapsed());
    assert_eq!(h.dim(), 81);
    assert!(h.is_valid());
    let _ = Matrix::<PrimeField>::identity(&f, 1);
}
