//! `kfc`: knot Floer complex toolkit.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kfc::commands::{self, CfdFormat};
use kfc::input::{sources, Source};
use kfc::{selftest, CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "kfc", version, about = "Knot Floer complexes, surgery, bypass triangles, splices and type-D modules")]
struct Cli {
    /// Emit a single JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Use a bundled fixture (UNKNOT, TREF_A, TREF_B, FIG8) as an input; repeatable.
    #[arg(long = "fixture", value_name = "NAME", global = true)]
    fixtures: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check gradings, d^2 = 0 relations and the involution.
    Validate { files: Vec<PathBuf> },
    /// Ranks of knot Floer homology per Alexander grading.
    Hfk { files: Vec<PathBuf> },
    /// Ranks of the n-surgery cones per grading, and their total.
    Surgery {
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<i64>,
        files: Vec<PathBuf>,
    },
    /// Triangle ranks, map ranks and exactness checks.
    Triangles { files: Vec<PathBuf> },
    /// Normalized duality blocks, X matrices and classification.
    Blocks { files: Vec<PathBuf> },
    /// Splice matrix rank and estimates for two knots.
    Splice {
        #[arg(long)]
        details: bool,
        files: Vec<PathBuf>,
    },
    /// Type-D module of the knot complement.
    Cfd {
        #[arg(long = "truncate", default_value_t = 0)]
        truncation: u32,
        #[arg(long)]
        simplify: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        files: Vec<PathBuf>,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
}

fn dispatch(cli: &Cli, inputs: &[Source]) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Validate { .. } => commands::validate(inputs),
        Command::Hfk { .. } => commands::hfk(inputs),
        Command::Surgery { n, s, .. } => commands::surgery(inputs, *n, *s),
        Command::Triangles { .. } => commands::triangles(inputs),
        Command::Blocks { .. } => commands::blocks(inputs),
        Command::Splice { details, .. } => commands::splice(inputs, *details),
        Command::Cfd { truncation, simplify, format, .. } => {
            let format = match format {
                Format::Json => CfdFormat::Json,
                Format::Dot => CfdFormat::Dot,
            };
            commands::cfd(inputs, *truncation, *simplify, format)
        }
        Command::Selftest => Ok(selftest::selftest()),
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Validate { .. } => "validate",
        Command::Hfk { .. } => "hfk",
        Command::Surgery { .. } => "surgery",
        Command::Triangles { .. } => "triangles",
        Command::Blocks { .. } => "blocks",
        Command::Splice { .. } => "splice",
        Command::Cfd { .. } => "cfd",
        Command::Selftest => "selftest",
    }
}

fn files(command: &Command) -> &[PathBuf] {
    match command {
        Command::Validate { files }
        | Command::Hfk { files }
        | Command::Surgery { files, .. }
        | Command::Triangles { files }
        | Command::Blocks { files }
        | Command::Splice { files, .. }
        | Command::Cfd { files, .. } => files,
        Command::Selftest => &[],
    }
}

fn emit(outcome: &Outcome, json: bool) {
    let mut out = std::io::stdout().lock();
    let text = if json { outcome.report.to_json() } else { outcome.text.clone() };
    let _ = out.write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = sources(&cli.fixtures, files(&cli.command)).and_then(|inputs| {
        dispatch(&cli, &inputs).or_else(|e| match e {
            CliError::Invalid { name, report } => {
                Ok(commands::invalid_input(command_name(&cli.command), &inputs, &name, &report))
            }
            other => Err(other),
        })
    });
    match result {
        Ok(outcome) => {
            emit(&outcome, cli.json);
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("kfc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
