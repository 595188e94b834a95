//! A minimal projective resolution over the incidence algebra of the Boolean
//! lattice on three atoms, with Ext groups read off from it.
//!
//! cargo run --example projective_resolution

use rowcox::field::Rational;
use rowcox::homology::{minimal_injective_coresolution, minimal_projective_resolution, BQAlgebra, QuiverRep};
use rowcox::poset::{order_ideals, Poset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = Poset::antichain(&["x1", "x2", "x3"]);
    let alg = BQAlgebra::incidence(&order_ideals(&p)?.as_poset());
    println!("vertices: {:?}", alg.labels());

    let v = alg.vertex("{x1,x2}")?;
    let injective = QuiverRep::<Rational>::injective(&alg, v);
    println!("injective at {{x1,x2}} has dimension vector {:?}", injective.dims());

    let res = minimal_projective_resolution(&alg, &injective)?;
    for (k, term) in res.terms().iter().enumerate() {
        let names: Vec<String> = term.iter().map(|&x| format!("P{}", alg.label(x))).collect();
        println!("  P_{k} = {}", names.join(" + "));
    }
    assert!(res.to_complex(&alg).is_exact());

    let top = QuiverRep::<Rational>::simple(&alg, alg.vertex("{x1,x2,x3}")?);
    let regular = QuiverRep::<Rational>::regular(&alg);
    let simple_res = minimal_projective_resolution(&alg, &top)?;
    println!("dim Ext^k(S_top, A) = {:?}", simple_res.ext_dims(&alg, &regular));

    let co = minimal_injective_coresolution(&alg, &regular)?;
    println!("injective coresolution of A has length {}", co.length());
    for (k, term) in co.sorted_terms().iter().enumerate() {
        let names: Vec<String> = term.iter().map(|&x| format!("I{}", alg.label(x))).collect();
        println!("  I^{k} = {}", names.join(" + "));
    }
    Ok(())
}
