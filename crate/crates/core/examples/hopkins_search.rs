//! Checks (rho^-1 C)^2 = id on the lattice of order ideals of every labeled
//! poset up to a size, then on a seeded random sample.
//!
//! cargo run --release --example hopkins_search -- 5

use rowcox::poset::DEFAULT_IDEAL_CAP;
use rowcox::search::{run_search, SearchPlan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_size = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let plans = [
        SearchPlan::Enumerate { max_size },
        SearchPlan::Random { count: 200, min_size: 6, max_size: 7, seed: 1 },
    ];
    for plan in plans {
        let outcome = run_search(&plan, DEFAULT_IDEAL_CAP)?;
        println!("{plan:?}");
        for t in &outcome.by_size {
            println!("  size {}: {}/{} posets pass", t.size, t.passed, t.posets);
        }
        println!("  largest lattice: {}, violations: {}", outcome.largest_lattice, outcome.violations.len());
        for v in &outcome.violations {
            println!("  counterexample: {:?}\n{:?}", v.poset, v.residual);
        }
    }
    Ok(())
}
