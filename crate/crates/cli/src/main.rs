use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qhopf_cli::config::{default_q_values, Command, Format, Mode, NRange, QValue, RunConfig, SideChoice, Suite};
use qhopf_cli::run;

/// Exact spectra, Yang-Mills checks and structural verification for the
/// quantum Hopf fibration.
#[derive(Parser)]
#[command(name = "qhopf", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Left and right Laplacian eigenvalues against the closed forms.
    Spectrum(Common),
    /// Run verification suites; exits nonzero on any failure.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[command(flatten)]
        common: Common,
    },
    /// The closed-form tables with per-row check counts.
    Table(Common),
    /// Yang-Mills and matter equation residuals.
    YmCheck(Common),
    /// Haar state on (gamma gamma*)^k for k up to the filtration.
    Haar(Common),
    /// The calibrated calculus conventions.
    Conventions(Common),
}

#[derive(Args)]
struct Common {
    /// Winding numbers, `a..b` inclusive or a single integer.
    #[arg(long, allow_hyphen_values = true, default_value = "-2..2")]
    n: NRange,
    /// Largest exponent |a|, k, l in the reported spectra.
    #[arg(long, default_value_t = 3)]
    filtration: u32,
    /// Extra chain length assembled beyond the filtration.
    #[arg(long, default_value_t = 2)]
    buffer: u32,
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    /// Sample points, repeatable; rationals (`9/10`) or decimals (`0.9`).
    #[arg(long = "q", allow_hyphen_values = true)]
    q: Vec<QValue>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, value_enum, default_value = "both")]
    side: SideChoice,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

impl Common {
    fn into_config(self, command: Command) -> RunConfig {
        RunConfig {
            command,
            n_range: self.n,
            filtration: self.filtration,
            buffer: self.buffer,
            mode: self.mode,
            sides: self.side,
            q_values: if self.q.is_empty() { default_q_values() } else { self.q },
            format: self.format,
            output: self.output,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.verb {
        Verb::Spectrum(c) => c.into_config(Command::Spectrum),
        Verb::Verify { suite, common } => common.into_config(Command::Verify(suite)),
        Verb::Table(c) => c.into_config(Command::Table),
        Verb::YmCheck(c) => c.into_config(Command::YmCheck),
        Verb::Haar(c) => c.into_config(Command::Haar),
        Verb::Conventions(c) => c.into_config(Command::Conventions),
    };
    let outcome = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("qhopf {}: {e}", cfg.command.name());
            return ExitCode::from(2);
        }
    };
    let written = match &cfg.output {
        Some(p) => std::fs::write(p, &outcome.text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{}", outcome.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("qhopf {}: {e}", cfg.command.name());
        return ExitCode::from(2);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        eprintln!("qhopf {}: verification mismatch", cfg.command.name());
        ExitCode::from(1)
    }
}
