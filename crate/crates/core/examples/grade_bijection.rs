//! Auslander regularity, the grade bijection and the rowmotion Coxeter
//! transformation of a six-element poset that is not a lattice.
//!
//! cargo run --example grade_bijection

use rowcox::field::Rational;
use rowcox::homology::{coxeter_matrix, grade_bijection, is_auslander_regular, rowmotion_coxeter_report, BQAlgebra};
use rowcox::poset::Poset;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let labels = ["1", "2", "3", "4", "5", "6"];
    let covers = [("1", "2"), ("1", "3"), ("2", "4"), ("2", "5"), ("3", "4"), ("3", "5"), ("4", "6"), ("5", "6")];
    let p = Poset::from_covers(&labels, &covers)?;
    let alg = BQAlgebra::incidence(&p);

    let verdict = is_auslander_regular::<Rational>(&alg)?;
    println!("Auslander regular: {} (global dimension {})", verdict.regular, verdict.global_dimension);

    let gb = grade_bijection::<Rational>(&alg)?;
    for v in 0..alg.len() {
        let w = gb.permutation.apply(v);
        println!("  S{} -> S{}  grade {} = cograde {}", alg.label(v), alg.label(w), gb.grades[v], gb.cogrades[v]);
    }

    let c = coxeter_matrix::<Rational>(&alg)?;
    println!("Coxeter matrix:\n{c:?}");
    let report = rowmotion_coxeter_report(&c, &gb.permutation)?;
    println!("R^-1 C:\n{:?}", report.product);
    println!("minimal polynomial: {}", report.minimal_polynomial);
    println!("(R^-1 C)^2 = id: {}", report.involution);
    Ok(())
}
