use rowcox::field::Rational;
use rowcox::homology::{coxeter_matrix, grade_bijection, is_auslander_regular, rowmotion_coxeter_report, BQAlgebra};
use rowcox::linalg::{IntPolynomial, RationalMatrix};
use rowcox::poset::Poset;

fn six() -> Poset {
    let labels = ["1", "2", "3", "4", "5", "6"];
    let covers = [("1", "2"), ("1", "3"), ("2", "4"), ("2", "5"), ("3", "4"), ("3", "5"), ("4", "6"), ("5", "6")];
    Poset::from_covers(&labels, &covers).unwrap()
}

#[test]
fn six_element_poset_tables() {
    let alg = BQAlgebra::incidence(&six());
    let verdict = is_auslander_regular::<Rational>(&alg).unwrap();
    assert!(verdict.regular);
    let r = grade_bijection::<Rational>(&alg).unwrap();
    assert_eq!(r.permutation.image(), &[5, 2, 1, 4, 3, 0]);
    let c = coxeter_matrix::<Rational>(&alg).unwrap();
    let table2 = RationalMatrix::from_i64_rows(&[
        &[-1, -1, -1, -1, -1, -1],
        &[1, 0, 1, 0, 0, 0],
        &[1, 1, 0, 0, 0, 0],
        &[-1, 0, 0, 0, 1, 0],
        &[-1, 0, 0, 1, 0, 0],
        &[1, 0, 0, 0, 0, 0],
    ]);
    assert_eq!(c, table2);
    let report = rowmotion_coxeter_report(&c, &r.permutation).unwrap();
    assert_eq!(report.minimal_polynomial, IntPolynomial::from_i64(&[1, -1, -1, 1]));
    assert!(!report.involution);
}
