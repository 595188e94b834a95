//! Drives commands through the library entry point and prints the
//! structured and human renderings of one report.
//!
//! cargo run --example reports

use rowcox::cli::{render, run, Command, OutputFormat, RunConfig};
use rowcox::corpus;
use rowcox::report::Report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = RunConfig::new(Command::Auslander { input: corpus::path("posets/chain3.json"), ideals: false });
    let report = run(&config)?;
    let json = render(&report, OutputFormat::Structured);
    println!("{json}");
    assert_eq!(Report::from_json(&json)?, report);
    println!("{}", render(&report, OutputFormat::Human));

    for (name, _) in corpus::NRF {
        let r = run(&RunConfig::new(Command::VerifyNrf { input: corpus::path(name) }))?;
        println!("{name}: exit code {}", r.exit_code());
    }
    Ok(())
}
