use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rowcox::cli::{render, run, Command, OutputFormat, RunConfig};
use rowcox::poset::DEFAULT_IDEAL_CAP;
use rowcox::search::SearchPlan;

/// Exact rowmotion, Coxeter and grade-bijection checks.
#[derive(Parser)]
#[command(name = "rowcox", version)]
struct Cli {
    /// Field characteristic for homological computations (0 = rationals).
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Maximum number of order ideals to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_IDEAL_CAP)]
    ideal_cap: usize,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Subcommand)]
enum Sub {
    /// List the order ideals of a poset.
    Ideals { file: PathBuf },
    /// Rowmotion on order ideals, with orbits.
    Rowmotion { file: PathBuf },
    /// Cartan and Coxeter matrices, grade bijection and R^-1 C.
    Coxeter {
        file: PathBuf,
        /// Use the lattice of order ideals of the poset.
        #[arg(long)]
        ideals: bool,
    },
    /// Auslander regularity, witness and grade data.
    Auslander {
        file: PathBuf,
        #[arg(long)]
        ideals: bool,
    },
    /// Check (rho^-1 C)^2 = id on J(P) for many posets P.
    HopkinsSearch(SearchArgs),
    /// Knit a Dynkin quiver and check its Auslander algebra.
    Dynkin {
        /// Inline spec such as `D4:alternating`, or a JSON file.
        spec: String,
        /// Also write the knitted data in the NRF file format.
        #[arg(long)]
        emit_nrf: Option<PathBuf>,
    },
    /// Check the parity identity on an NRF data file.
    VerifyNrf { file: PathBuf },
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["enumerate", "random"])))]
struct SearchArgs {
    /// Every labeled poset with at most N elements.
    #[arg(long, value_name = "N", conflicts_with_all = ["size", "seed"])]
    enumerate: Option<usize>,
    /// Number of random posets.
    #[arg(long, value_name = "COUNT", requires_all = ["size", "seed"])]
    random: Option<usize>,
    /// Poset size `N` or range `N-M` for random sampling.
    #[arg(long, value_parser = parse_range)]
    size: Option<(usize, usize)>,
    #[arg(long)]
    seed: Option<u64>,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once('-') {
        Some((a, b)) => Ok((num(a)?, num(b)?)),
        None => num(s).map(|n| (n, n)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Sub::Ideals { file } => Command::Ideals { input: file },
        Sub::Rowmotion { file } => Command::Rowmotion { input: file },
        Sub::Coxeter { file, ideals } => Command::Coxeter { input: file, ideals },
        Sub::Auslander { file, ideals } => Command::Auslander { input: file, ideals },
        Sub::HopkinsSearch(args) => {
            let plan = match (args.enumerate, args.random, args.size, args.seed) {
                (Some(max_size), ..) => SearchPlan::Enumerate { max_size },
                (None, Some(count), Some((min_size, max_size)), Some(seed)) => {
                    SearchPlan::Random { count, min_size, max_size, seed }
                }
                _ => unreachable!("clap enforces the argument groups"),
            };
            Command::HopkinsSearch { plan }
        }
        Sub::Dynkin { spec, emit_nrf } => Command::Dynkin { spec, emit_nrf },
        Sub::VerifyNrf { file } => Command::VerifyNrf { input: file },
    };
    let format = match cli.format {
        Format::Human => OutputFormat::Human,
        Format::Structured => OutputFormat::Structured,
    };
    let config = RunConfig { command, characteristic: cli.characteristic, ideal_cap: cli.ideal_cap, format };
    match run(&config) {
        Ok(report) => {
            print!("{}", render(&report, format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
