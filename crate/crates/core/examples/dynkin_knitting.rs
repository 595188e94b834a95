//! Knits the Auslander-Reiten quiver of a Dynkin quiver and checks
//! (C R^-1 + id)^2 = 0 for its Auslander algebra.
//!
//! cargo run --example dynkin_knitting -- D4:alternating

use rowcox::dynkin::{auslander_coxeter, endomorphism_grade_bijection, knit, DynkinSpec};
use rowcox::field::Rational;
use rowcox::linalg::{check_nilpotent_shift, minimal_polynomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec: DynkinSpec = std::env::args().nth(1).as_deref().unwrap_or("A3:alternating").parse()?;
    let alg = spec.algebra()?;
    let data = knit::<Rational>(&alg)?;
    println!("{spec}: {} indecomposables ({} positive roots)", data.len(), spec.kind.positive_roots());
    let tau = data.tau();
    for i in 0..data.len() {
        let show = |x: Option<usize>| x.map_or("-".to_string(), |j| data.labels[j].clone());
        println!(
            "  {:<8} dim {:?}  generation {}  tau {}  nu {}",
            data.labels[i],
            data.modules[i].dims(),
            data.generation[i],
            show(tau[i]),
            show(data.nu[i]),
        );
    }

    let ac = auslander_coxeter(&alg, &data)?;
    let gb = endomorphism_grade_bijection(&data)?;
    let product = gb.permutation.times_inverse(&ac.coxeter)?;
    println!("minimal polynomial of C R^-1: {}", minimal_polynomial(&product)?);
    println!("(C R^-1 + id)^2 = 0: {}", check_nilpotent_shift(&product)?);
    Ok(())
}
