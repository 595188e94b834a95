//! Order ideals of a poset, the lattice they form, and rowmotion orbits.
//!
//! cargo run --example order_ideals

use rowcox::poset::{join_irreducibles, order_ideals, Poset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the "zigzag" a < c > b < d
    let p = Poset::from_covers(&["a", "b", "c", "d"], &[("c", "a"), ("c", "b"), ("d", "b")])?;
    let lattice = order_ideals(&p)?;
    println!("{} order ideals:", lattice.len());
    for i in 0..lattice.len() {
        let ideal = lattice.ideal(i);
        let top = p.format_set(ideal.max_antichain(&p).members());
        println!("  {:<12} maximal elements {top}", lattice.label(i));
    }

    let rho = lattice.rowmotion_matrix();
    println!("rowmotion has order {}", rho.order());
    for orbit in rho.cycles() {
        let labels: Vec<String> = orbit.iter().map(|&i| lattice.label(i)).collect();
        println!("  orbit: {}", labels.join(" -> "));
    }

    let as_poset = lattice.as_poset();
    println!("lattice tests on J(P): {:?}", as_poset.lattice_tests());
    let birkhoff = join_irreducibles(&as_poset)?;
    let names: Vec<&str> = birkhoff.elements.iter().map(|&x| as_poset.label(x)).collect();
    println!("join-irreducibles: {}", names.join(", "));
    assert_eq!(birkhoff.rowmotion_on_lattice(), rho);
    Ok(())
}
