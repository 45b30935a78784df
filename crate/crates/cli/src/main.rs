use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tinvariant::UnitConvention;

mod commands;

#[derive(Parser, Debug)]
#[command(name = "tinv", version, about = "Exact t-invariants of lens spaces and small Seifert manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Unit-fiber convention for the closed form, e.g. `p+++:folded`,
    /// `frozen` or `printed`.
    #[arg(long, global = true, default_value = "frozen")]
    convention: String,

    /// Seed for the randomized checks in `selfcheck`.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// t by both routes, H1 and the closed-form case of a presentation
    /// such as "-1; (2,1) (2,1) (3,2)".
    Compute {
        #[arg(allow_hyphen_values = true)]
        presentation: String,
    },
    /// Word, class and vector of a single fiber.
    Classify {
        #[arg(allow_hyphen_values = true)]
        alpha: i64,
        #[arg(allow_hyphen_values = true)]
        beta: i64,
    },
    /// All 364 unordered class triples with a census of values.
    Sweep,
    /// Manifolds with equal H1 told apart by t.
    Table,
    /// Every acceptance check with pass/fail.
    Selfcheck,
    /// The five constants and the twelve labeled vectors.
    DumpConstants,
    /// Closed form vs tensor route over the sweep. With --output, writes
    /// both `<stem>.txt` and `<stem>.json`.
    Reconcile,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A failed run: exit 1 for bad input, 2 for an internal inconsistency.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Inconsistent(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Inconsistent(_) => 2,
        }
    }
}

impl From<tinvariant::Error> for Failure {
    fn from(e: tinvariant::Error) -> Self {
        match e {
            tinvariant::Error::Orbit(_) | tinvariant::Error::Reconcile(_) => Failure::Inconsistent(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Rendered report plus an optional inconsistency found while producing it.
pub struct Outcome {
    pub body: String,
    pub inconsistency: Option<String>,
}

impl Outcome {
    pub fn ok(body: String) -> Outcome {
        Outcome { body, inconsistency: None }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let convention: UnitConvention = cli.convention.parse()?;
    let fmt = cli.format;
    match &cli.command {
        Command::Compute { presentation } => commands::compute(presentation, convention, fmt),
        Command::Classify { alpha, beta } => commands::classify(*alpha, *beta, fmt),
        Command::Sweep => commands::sweep(fmt),
        Command::Table => commands::table(fmt),
        Command::Selfcheck => commands::selfcheck(cli.seed, fmt),
        Command::DumpConstants => commands::dump_constants(fmt),
        Command::Reconcile => {
            let (text, json, outcome) = commands::reconcile()?;
            if let Some(path) = &cli.output {
                fs::write(path.with_extension("txt"), &text)?;
                fs::write(path.with_extension("json"), &json)?;
                return Ok(Outcome { body: String::new(), inconsistency: outcome });
            }
            let body = if fmt == Format::Json { json } else { text };
            Ok(Outcome { body, inconsistency: outcome })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(f) => {
            match &f {
                Failure::Invalid(m) => eprintln!("error: {m}"),
                Failure::Inconsistent(m) => eprintln!("inconsistency: {m}"),
            }
            return ExitCode::from(f.code());
        }
    };
    let written = match (&cli.output, &cli.command) {
        (Some(_), Command::Reconcile) => Ok(()),
        (Some(path), _) => fs::write(path, &outcome.body),
        (None, _) => io::stdout().write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match outcome.inconsistency {
        Some(m) => {
            eprintln!("inconsistency: {m}");
            ExitCode::from(2)
        }
        None => ExitCode::SUCCESS,
    }
}
