use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use icosa::commands::{self, Outcome, EXIT_INPUT};
use icosa::verify::VerifyConfig;
use icosa::InputError;
use icosa_core::classify::{Backend, EnumerationConfig, Strategy};

#[derive(Parser)]
#[command(name = "icosa", version, about = "Local constraints for symmetric-cube matched GL(2) parameters")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Pruned,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Roots,
    Cyclo,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a pair of unramified parameters.
    Classify {
        #[arg(long)]
        input: PathBuf,
        /// Exit 1 unless the cube match and the sym^5 identity both hold.
        #[arg(long)]
        strict: bool,
    },
    /// Run seeded verification campaigns.
    Verify {
        /// clebsch-gordon, lambda2-sym3, power-relations, arch, tempered or all.
        #[arg(long, default_value = "all")]
        identity: String,
        #[arg(long, default_value_t = 500)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest root-of-unity order in the exhaustive sweeps.
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
        max_order: u64,
    },
    /// Exhaustive census of symmetric-cube matches among roots of unity.
    Enumerate {
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
        max_order: u64,
        /// Restrict to trivial central characters.
        #[arg(long)]
        w_trivial: bool,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        central_max_order: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Pruned)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = BackendArg::Roots)]
        backend: BackendArg,
    },
    /// Build the binary icosahedral group and check its signature identities.
    Demo,
    /// Print an Euler factor and its Dirichlet coefficients.
    Lfactor {
        #[arg(long)]
        input: PathBuf,
        /// Residue field size; overrides "q" in the input.
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q: Option<u64>,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
    },
}

fn run(command: Command) -> Result<Outcome, InputError> {
    match command {
        Command::Classify { input, strict } => commands::classify(&commands::read_input(&input)?, strict),
        Command::Verify {
            identity,
            trials,
            seed,
            max_order,
        } => commands::verify(
            &identity,
            &VerifyConfig {
                trials,
                seed,
                max_order,
            },
        ),
        Command::Enumerate {
            max_order,
            w_trivial,
            central_max_order,
            strategy,
            backend,
        } => commands::enumerate(&EnumerationConfig {
            max_order,
            w_trivial,
            central_max_order,
            strategy: match strategy {
                StrategyArg::Pruned => Strategy::Pruned,
                StrategyArg::Brute => Strategy::BruteForce,
            },
            backend: match backend {
                BackendArg::Roots => Backend::Roots,
                BackendArg::Cyclo => Backend::Cyclo,
            },
        }),
        Command::Demo => commands::demo(),
        Command::Lfactor { input, q, terms } => {
            commands::lfactor(&commands::read_input(&input)?, q, terms as usize)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.report).expect("reports serialize")
                ),
                Format::Text => print!("{}", outcome.text),
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("icosa: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
