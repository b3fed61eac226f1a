use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use qjudge_cli::{
    check_axioms, emit_report, parse_scenario, render_axioms_check, run_scenario, ReportFormat,
};
use qjudge_core::quantum::{make_basis, make_qubit, Amplitude};

/// Single-qubit measurement scenarios and the judgements they justify.
#[derive(Parser)]
#[command(name = "qjudge", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and print its report.
    Run {
        /// Scenario file path.
        file: PathBuf,
        /// Seed for the measurement random source.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of trials; frequencies are aggregated when greater than 1.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        /// Report format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print both insider axioms with derivations and classical statuses.
    CheckAxioms {
        /// Basis angles gamma and phi in radians (defaults to 0 0).
        #[arg(long, num_args = 2, value_names = ["GAMMA", "PHI"])]
        basis: Option<Vec<f64>>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Run {
            file,
            seed,
            trials,
            format,
        } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(text) => text,
                Err(err) => {
                    eprintln!("error: cannot read {}: {err}", file.display());
                    return ExitCode::from(1);
                }
            };
            let mut scenario = match parse_scenario(&text) {
                Ok(scenario) => scenario,
                Err(err) => {
                    eprintln!("error: {}: {err}", file.display());
                    return ExitCode::from(1);
                }
            };
            scenario.seed = seed;
            scenario.trials = trials;
            match run_scenario(&scenario) {
                Ok(report) => {
                    let format = match format {
                        Format::Text => ReportFormat::Text,
                        Format::Json => ReportFormat::Json,
                    };
                    print!("{}", emit_report(&report, format));
                    ExitCode::SUCCESS
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    ExitCode::from(u8::try_from(err.exit_code()).unwrap_or(1))
                }
            }
        }
        Command::CheckAxioms { basis } => {
            let (gamma, phi) = match basis.as_deref() {
                Some([gamma, phi]) => (*gamma, *phi),
                _ => (0.0, 0.0),
            };
            let basis = match make_basis(gamma, phi, "A") {
                Ok(basis) => basis,
                Err(err) => {
                    eprintln!("error: {err}");
                    return ExitCode::from(1);
                }
            };
            let s = std::f64::consts::FRAC_1_SQRT_2;
            let qubit = make_qubit(Amplitude::new(s, 0.0), Amplitude::new(s, 0.0))
                .expect("the plus state is normalized");
            match check_axioms(qubit, &basis) {
                Ok(check) => {
                    print!("{}", render_axioms_check(&check));
                    ExitCode::SUCCESS
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
