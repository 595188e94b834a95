use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use rowcox::field::{Fp, Rational};
use rowcox::homology::{
    cartan_matrix, cograde, coxeter_from_injectives, coxeter_matrix, grade, is_auslander_regular, k0_class,
    minimal_injective_coresolution, minimal_projective_resolution, BQAlgebra, QuiverRep,
};
use rowcox::linalg::coxeter_from_cartan;
use rowcox::poset::{labeled_posets, order_ideals, random_poset, Poset};

fn poset(n: usize, seed: u64) -> Poset {
    random_poset(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn modules(alg: &BQAlgebra) -> Vec<QuiverRep<Rational>> {
    let mut out = Vec::new();
    for v in 0..alg.len() {
        out.push(QuiverRep::simple(alg, v));
        out.push(QuiverRep::projective(alg, v));
        out.push(QuiverRep::injective(alg, v));
    }
    out.push(QuiverRep::regular(alg));
    out
}

#[test]
fn cartan_is_zeta_up_to_six_elements() {
    let posets: Vec<Poset> = (0..=6).flat_map(labeled_posets).collect();
    assert_eq!(posets.len(), 1 + 1 + 3 + 19 + 219 + 4231 + 130023);
    let bad = posets
        .par_iter()
        .filter(|p| {
            let alg = BQAlgebra::incidence(p);
            let m = cartan_matrix::<Rational>(&alg).unwrap();
            (0..p.len()).any(|i| (0..p.len()).any(|j| m[(i, j)] != Rational::integer(p.leq(i, j) as i64)))
        })
        .count();
    assert_eq!(bad, 0);
}

#[test]
fn coxeter_routes_agree_on_small_posets_and_lattices() {
    let posets: Vec<Poset> = (0..=4).flat_map(labeled_posets).collect();
    posets.par_iter().for_each(|p| {
        coxeter_matrix::<Rational>(&BQAlgebra::incidence(p)).unwrap_or_else(|e| panic!("{p:?}: {e}"));
        if p.len() <= 3 {
            let l = order_ideals(p).unwrap().as_poset();
            coxeter_matrix::<Rational>(&BQAlgebra::incidence(&l)).unwrap_or_else(|e| panic!("J({p:?}): {e}"));
        }
    });
}

#[test]
fn incidence_algebras_of_small_posets_have_auslander_regular_ideal_lattices() {
    for p in (0..=4).flat_map(labeled_posets) {
        let alg = BQAlgebra::incidence(&order_ideals(&p).unwrap().as_poset());
        assert!(is_auslander_regular::<Rational>(&alg).unwrap().regular, "{p:?}");
    }
}

#[test]
fn prime_fields_reproduce_rational_coxeter_on_lattices() {
    for p in (0..=3).flat_map(labeled_posets) {
        let alg = BQAlgebra::incidence(&order_ideals(&p).unwrap().as_poset());
        let q = coxeter_from_injectives::<Rational>(&alg).unwrap();
        assert_eq!(coxeter_from_injectives::<Fp<2>>(&alg).unwrap(), q);
        assert_eq!(coxeter_from_injectives::<Fp<7>>(&alg).unwrap(), q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn resolutions_are_exact_with_zero_euler_characteristic(n in 1usize..=6, seed in any::<u64>()) {
        let alg = BQAlgebra::incidence(&poset(n, seed));
        for x in modules(&alg) {
            let res = minimal_projective_resolution(&alg, &x).unwrap();
            let c = res.to_complex(&alg);
            prop_assert!(c.is_complex(&alg));
            prop_assert!(c.is_exact());
            prop_assert!(c.euler_characteristic().iter().all(|&e| e == 0));
            let co = minimal_injective_coresolution(&alg, &x).unwrap().to_complex(&alg);
            prop_assert!(co.is_complex(&alg));
            prop_assert!(co.is_exact());
            prop_assert!(co.euler_characteristic().iter().all(|&e| e == 0));
        }
    }

    #[test]
    fn k0_class_recovers_dimension_vectors(n in 1usize..=6, seed in any::<u64>()) {
        let alg = BQAlgebra::incidence(&poset(n, seed));
        let projectives: Vec<QuiverRep<Rational>> = (0..alg.len()).map(|v| QuiverRep::projective(&alg, v)).collect();
        for x in modules(&alg) {
            let class = k0_class(&alg, &x).unwrap();
            for w in 0..alg.len() {
                let total: i64 = (0..alg.len()).map(|v| class[v] * projectives[v].dim(w) as i64).sum();
                prop_assert_eq!(total, x.dim(w) as i64);
            }
        }
        let sum = QuiverRep::<Rational>::simple(&alg, 0).direct_sum(&QuiverRep::injective(&alg, n - 1));
        let parts: Vec<i64> = k0_class(&alg, &QuiverRep::<Rational>::simple(&alg, 0)).unwrap()
            .iter()
            .zip(k0_class(&alg, &QuiverRep::<Rational>::injective(&alg, n - 1)).unwrap())
            .map(|(a, b)| a + b)
            .collect();
        prop_assert_eq!(k0_class(&alg, &sum).unwrap(), parts);
    }

    #[test]
    fn coxeter_is_minus_injective_classes(n in 1usize..=6, seed in any::<u64>()) {
        let alg = BQAlgebra::incidence(&poset(n, seed));
        let cartan = cartan_matrix::<Rational>(&alg).unwrap();
        prop_assert_eq!(coxeter_from_cartan(&cartan).unwrap(), coxeter_from_injectives::<Rational>(&alg).unwrap());
    }

    #[test]
    fn projectives_have_grade_zero_and_injectives_cograde_zero(n in 1usize..=6, seed in any::<u64>()) {
        let alg = BQAlgebra::incidence(&poset(n, seed));
        for v in 0..alg.len() {
            prop_assert_eq!(grade(&alg, &QuiverRep::<Rational>::projective(&alg, v)).unwrap(), 0);
            prop_assert_eq!(cograde(&alg, &QuiverRep::<Rational>::injective(&alg, v)).unwrap(), 0);
        }
    }
}
