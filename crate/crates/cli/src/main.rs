use std::path::PathBuf;
use std::process::ExitCode;

use blockalg_cli::commands::{self, AnalyzeArgs, CliError, Output, EXIT_INPUT};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "blockalg", version, about = "Exact computations in the Block Lie algebra B(Z) and its Verma modules")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the irreducible quotient is quasifinite.
    Analyze {
        weight: PathBuf,
        #[arg(long = "max-deg", default_value_t = 8)]
        max_deg: usize,
        #[arg(long = "j-set", default_value = "-2..2", allow_hyphen_values = true)]
        j_set: String,
        /// Index of the last series coefficient.
        #[arg(long, default_value_t = 24)]
        terms: usize,
        /// Largest number of certificate rows allowed.
        #[arg(long)]
        window: Option<usize>,
    },
    /// Evaluate a Lie expression, or apply words to the highest weight vector.
    Act {
        weight: PathBuf,
        expr: String,
    },
    /// Coefficients of the Sigma generating series.
    Series {
        weight: PathBuf,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "j_set")]
        j: Option<i64>,
        #[arg(long = "j-set", allow_hyphen_values = true)]
        j_set: Option<String>,
        #[arg(long, default_value_t = 24)]
        terms: usize,
    },
    /// Classify a total order on Z^r.
    Order { order: PathBuf },
    /// Run the randomized cross-checks.
    Selftest {
        #[arg(long, default_value = "0x5eed", value_parser = parse_seed)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    }
    .map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Analyze { weight, max_deg, j_set, terms, window } => {
            let w = commands::read_weight(weight)?;
            let args = AnalyzeArgs {
                max_degree: *max_deg,
                j_set: commands::parse_j_set(j_set)?,
                terms: *terms,
                max_rows: *window,
            };
            commands::analyze(&w, &args)
        }
        Command::Act { weight, expr } => commands::act(&commands::read_weight(weight)?, expr),
        Command::Series { weight, j, j_set, terms } => {
            let w = commands::read_weight(weight)?;
            let js = match (j, j_set) {
                (Some(j), _) => vec![*j],
                (None, Some(s)) => commands::parse_j_set(s)?,
                (None, None) => vec![0],
            };
            commands::series(&w, &js, *terms)
        }
        Command::Order { order } => commands::order(order),
        Command::Selftest { seed, trials } => commands::selftest(*seed, *trials),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json values print")),
            }
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
