//! Non-distributive lattices fail Auslander regularity; the verdict names the
//! first injective term whose projective dimension is too large.
//!
//! cargo run --example auslander_witness

use rowcox::corpus;
use rowcox::field::Rational;
use rowcox::homology::{is_auslander_regular, BQAlgebra};
use rowcox::poset::{Poset, PosetFile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["posets/m3.json", "posets/n5.json", "posets/boolean3.json"] {
        let file: PosetFile = serde_json::from_str(corpus::get(name).ok_or("missing corpus file")?)?;
        let p = Poset::from_file(&file)?;
        let alg = BQAlgebra::incidence(&p);
        let verdict = is_auslander_regular::<Rational>(&alg)?;
        println!("{name}: {:?}, Auslander regular: {}", p.lattice_tests(), verdict.regular);
        for (k, term) in verdict.coresolution.iter().enumerate() {
            let pdims: Vec<String> = term.iter().map(|&x| format!("I{}:{}", alg.label(x), verdict.injective_pdims[x])).collect();
            println!("  I^{k}: {}", pdims.join(" "));
        }
        if let Some(w) = verdict.witness {
            println!("  witness: I{} in degree {} has projective dimension {}", alg.label(w.vertex), w.degree, w.projective_dimension);
        }
    }
    Ok(())
}
