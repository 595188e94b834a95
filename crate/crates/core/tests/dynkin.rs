use rayon::prelude::*;

use rowcox::dynkin::{
    ar_formula_violations, auslander_coxeter, endomorphism_grade_bijection, knit, verify_nrf_identity, DynkinSpec,
    DynkinType, NrfData,
};
use rowcox::field::Rational;
use rowcox::linalg::{minimal_polynomial, IntPolynomial, RationalMatrix};

fn orientations(types: &[DynkinType]) -> Vec<DynkinSpec> {
    types.iter().flat_map(|&t| DynkinSpec::all_orientations(t)).collect()
}

#[test]
fn every_orientation_up_to_rank_six_satisfies_the_odd_identity() {
    let types = [
        DynkinType::A(1),
        DynkinType::A(2),
        DynkinType::A(3),
        DynkinType::A(4),
        DynkinType::A(5),
        DynkinType::A(6),
        DynkinType::D(4),
        DynkinType::D(5),
        DynkinType::D(6),
        DynkinType::E(6),
    ];
    let square = IntPolynomial::from_i64(&[1, 2, 1]);
    orientations(&types).par_iter().for_each(|spec| {
        let alg = spec.algebra().unwrap();
        let data = knit::<Rational>(&alg).unwrap();
        assert_eq!(data.len(), spec.kind.positive_roots(), "{spec}");
        assert!((0..data.len()).all(|i| data.hom_dims[i][i] == 1), "{spec}");
        auslander_coxeter(&alg, &data).unwrap_or_else(|e| panic!("{spec}: {e}"));
        let report = verify_nrf_identity(&NrfData::from_file(&data.to_nrf()).unwrap()).unwrap();
        assert!(report.passed, "{spec}");
        assert!(report.minimal_polynomial.divides(&square), "{spec}: {}", report.minimal_polynomial);
    });
}

#[test]
fn ar_formula_holds_for_small_types() {
    let mut specs = orientations(&[DynkinType::A(1), DynkinType::A(2), DynkinType::A(3), DynkinType::A(4), DynkinType::D(4)]);
    specs.extend(["D5:alternating", "E6"].map(|s| s.parse::<DynkinSpec>().unwrap()));
    specs.par_iter().for_each(|spec| {
        let alg = spec.algebra().unwrap();
        let data = knit::<Rational>(&alg).unwrap();
        assert_eq!(ar_formula_violations(&alg, &data).unwrap(), Vec::<(usize, usize)>::new(), "{spec}");
    });
}

#[test]
fn exceptional_types_knit_completely() {
    for (spec, count) in [("E7", 63), ("E8:alternating", 120)] {
        let spec: DynkinSpec = spec.parse().unwrap();
        let alg = spec.algebra().unwrap();
        let data = knit::<Rational>(&alg).unwrap();
        assert_eq!(data.len(), count);
        let ac = auslander_coxeter(&alg, &data).unwrap();
        let gb = endomorphism_grade_bijection(&data).unwrap();
        let product = gb.permutation.times_inverse(&ac.coxeter).unwrap();
        let shifted = product.add(&RationalMatrix::identity(count)).unwrap();
        assert!(shifted.mul_ok(&shifted).is_zero(), "{spec}");
    }
}

#[test]
fn a2_auslander_algebra_by_hand() {
    let alg = "A2".parse::<DynkinSpec>().unwrap().algebra().unwrap();
    let data = knit::<Rational>(&alg).unwrap();
    let ac = auslander_coxeter(&alg, &data).unwrap();
    assert_eq!(ac.cartan, RationalMatrix::from_i64_rows(&[&[1, 0, 1], &[1, 1, 0], &[0, 0, 1]]));
    let gb = endomorphism_grade_bijection(&data).unwrap();
    // P1 -> I1, P2 -> P1, I1 -> P2
    assert_eq!(gb.permutation.image(), &[2, 0, 1]);
    assert_eq!(gb.grades, vec![0, 0, 2]);
    let product = gb.permutation.times_inverse(&ac.coxeter).unwrap();
    assert_eq!(minimal_polynomial(&product).unwrap(), IntPolynomial::from_i64(&[1, 2, 1]));
}

#[test]
fn a1_is_its_own_auslander_algebra() {
    let alg = "A1".parse::<DynkinSpec>().unwrap().algebra().unwrap();
    let data = knit::<Rational>(&alg).unwrap();
    assert_eq!(data.len(), 1);
    let ac = auslander_coxeter(&alg, &data).unwrap();
    assert_eq!(ac.coxeter, RationalMatrix::from_i64_rows(&[&[-1]]));
    assert_eq!(endomorphism_grade_bijection(&data).unwrap().permutation.image(), &[0]);
}
