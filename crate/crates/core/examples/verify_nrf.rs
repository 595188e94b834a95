//! Runs the parity identity on the bundled NRF data files, one of which is
//! deliberately corrupted.
//!
//! cargo run --example verify_nrf

use rowcox::corpus;
use rowcox::dynkin::{verify_nrf_identity, NrfData, NrfFile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, text) in corpus::NRF {
        let file: NrfFile = serde_json::from_str(text)?;
        let report = verify_nrf_identity(&NrfData::from_file(&file)?)?;
        println!("{name}: n = {}, {} -> {}", report.n, report.identity, if report.passed { "holds" } else { "fails" });
        println!("  minimal polynomial of C R^-1: {}", report.minimal_polynomial);
        if let Some(w) = report.witness {
            println!("  residual:\n{w:?}");
        }
    }
    Ok(())
}
