//! Command-line front end.
//!
//! Exit statuses: 0 success, 1 verification mismatch or failed bracket
//! check, 2 usage errors (bad flags, unknown fixture), 3 domain errors
//! (invalid labels or sizes).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use multiplex::formats::{self, ArrowsMode};
use multiplex::{catalog, verify, CliError};
use multiplex_core::{
    check_sl2_triples, generate_multiplet, matrixreal, multiplet_size, ParabolicSpec,
};

#[derive(Parser)]
#[command(
    name = "multiplex",
    version,
    about = "Exact multiplet combinatorics for sl(N,R) with a maximal parabolic subalgebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Arrows {
    All,
    Covering,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the multiplet of an inducing signature and print it.
    Compute {
        /// Matrix size N of sl(N,R).
        #[arg(long = "matrix-size")]
        matrix_size: usize,
        /// Removed simple-root index k of the maximal parabolic.
        #[arg(long = "remove")]
        remove: usize,
        /// Comma-separated non-negative inducing labels (N-1 of them).
        #[arg(long = "labels")]
        labels: String,
        /// Output format.
        #[arg(long = "format", value_enum, default_value = "table")]
        format: Format,
        /// Arrow set: every shift or the transitive reduction (table/dot).
        #[arg(long = "arrows", value_enum, default_value = "all")]
        arrows: Arrows,
        /// Write to a file instead of standard output.
        #[arg(long = "out")]
        out: Option<PathBuf>,
    },
    /// Check a bundled reference table against freshly generated data.
    Verify {
        /// Table name, e.g. sl6-main (see --help for the full list).
        #[arg(long = "fixture")]
        fixture: String,
        /// Comma-separated labels; replaces the default sampled assignments.
        #[arg(long = "labels")]
        labels: Option<String>,
        /// Seed for the sampled assignments.
        #[arg(long = "seed", default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// Print the number of members of a generic multiplet.
    Size {
        #[arg(long = "matrix-size")]
        matrix_size: usize,
        #[arg(long = "remove")]
        remove: usize,
    },
    /// Print the dimensions of the parabolic pieces m, a, n.
    Dims {
        #[arg(long = "matrix-size")]
        matrix_size: usize,
        #[arg(long = "remove")]
        remove: usize,
        /// Also verify the sl(2) triple bracket relations.
        #[arg(long = "check-brackets")]
        check_brackets: bool,
    },
}

fn parse_labels(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| CliError::Usage(format!("invalid label '{tok}': expected an integer")))
        })
        .collect()
}

fn emit(body: String, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
    }
}

fn run() -> Result<u8, CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute {
            matrix_size,
            remove,
            labels,
            format,
            arrows,
            out,
        } => {
            let labels = parse_labels(&labels)?;
            let spec = ParabolicSpec::new(matrix_size, remove)?;
            let multiplet = generate_multiplet(&spec, &labels)?;
            let mode = match arrows {
                Arrows::All => ArrowsMode::All,
                Arrows::Covering => ArrowsMode::Covering,
            };
            let body = match format {
                Format::Table => formats::render_table(&multiplet, mode),
                Format::Json => formats::render_json(&multiplet),
                Format::Dot => formats::render_dot(&multiplet, mode),
            };
            emit(body, out.as_ref())?;
            Ok(0)
        }
        Command::Verify {
            fixture,
            labels,
            seed,
        } => {
            let table = catalog::load(&fixture)?;
            let labels = labels.as_deref().map(parse_labels).transpose()?;
            let report = verify::verify(&table, labels.as_deref(), seed)?;
            print!("{}", report.render());
            Ok(if report.ok() { 0 } else { 1 })
        }
        Command::Size {
            matrix_size,
            remove,
        } => {
            let spec = ParabolicSpec::new(matrix_size, remove)?;
            println!("{}", multiplet_size(&spec));
            Ok(0)
        }
        Command::Dims {
            matrix_size,
            remove,
            check_brackets,
        } => {
            let spec = ParabolicSpec::new(matrix_size, remove)?;
            let d = matrixreal::parabolic_dimensions(&spec);
            println!("m: {}  a: {}  n: {}", d.m_dim, d.a_dim, d.n_dim);
            if check_brackets {
                let report = check_sl2_triples(matrix_size)?;
                for check in &report.checks {
                    println!(
                        "sl(2) triple j={}: {}",
                        check.index,
                        if check.all_ok() { "ok" } else { "FAILED" }
                    );
                }
                if !report.all_ok() {
                    println!("bracket checks: FAILED");
                    return Ok(1);
                }
                println!("bracket checks: all passed");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
