use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use fatcat_cli::builtins::BUILTINS;
use fatcat_cli::{load_spec, run_suite, SuiteOptions, SUITES};
use fatcat_core::double::CellPredicate;
use fatcat_core::instances::Limits;

#[derive(Parser)]
#[command(
    name = "fatcat",
    version,
    about = "Exhaustive law checks for fat categories and friends"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite on a document.
    Check {
        /// axioms, lemma1, interchange, enrichment, coherence-base,
        /// coherence-fat, crossed-module or biholonomy.
        suite: String,
        /// A JSON document path, or builtin:NAME.
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Largest hom-set (and GL group) allowed before enumeration.
        #[arg(long)]
        max_size: Option<usize>,
        /// Cell predicate for the enrichment suite.
        #[arg(long, default_value = "two-sided-translation")]
        predicate: String,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Print a document as JSON.
    Export {
        #[arg(long)]
        input: String,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// List builtins, suites and predicates.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn limits(max_size: Option<usize>) -> Limits {
    let mut l = Limits::default();
    if let Some(n) = max_size {
        l.max_hom = n;
    }
    l
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check {
            suite,
            input,
            format,
            max_size,
            predicate,
            timings,
        } => {
            let opts = SuiteOptions {
                input: input.clone(),
                predicate,
                limits: limits(max_size),
            };
            let start = Instant::now();
            let outcome =
                load_spec(&input, &opts.limits).and_then(|doc| run_suite(&doc, &suite, &opts));
            let mut report = match outcome {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            if timings {
                report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            match format {
                Format::Json => emit(&(report.to_json() + "\n")),
                Format::Table => emit(&report.to_table()),
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Export { input, max_size } => match load_spec(&input, &limits(max_size)) {
            Ok(doc) => {
                emit(&(doc.to_json() + "\n"));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::List => {
            let mut text = String::from("builtins:\n");
            for (name, about) in BUILTINS {
                text += &format!("  {name:<20} {about}\n");
            }
            text += &format!("suites: {}\n", SUITES.join(", "));
            text += &format!("predicates: {}\n", CellPredicate::names().join(", "));
            emit(&text);
            ExitCode::SUCCESS
        }
    }
}

/// A closed pipe on stdout is not an error worth a panic.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}
