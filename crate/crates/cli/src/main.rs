//! `nicebase`: command-line front end.
//!
//! Exit status is 0 for a positive verdict, 1 for a negative one and 2 for
//! usage or input errors. Reports go to standard output; timing and
//! diagnostics to standard error.

mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "nicebase",
    version,
    about = "Exact decisions about nice bases of Lie algebras"
)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether the defining basis of an algebra is nice.
    Check { file: String },
    /// Pre-Einstein derivation of an algebra in a nice basis, or verify a candidate.
    PreEinstein {
        file: String,
        /// Comma-separated diagonal to verify against the full derivation algebra.
        #[arg(long, allow_hyphen_values = true)]
        verify: Option<String>,
    },
    /// Number of nice bases of a direct sum by the product rule.
    NuProduct {
        #[arg(required = true, num_args = 2..)]
        files: Vec<String>,
    },
    /// Nice bases of the almost abelian algebra R f x|_A R^n.
    Aa { matrix: String },
    /// Graph Lie algebra and its nice-basis verdict.
    Graph {
        file: String,
        /// Write the structure constants to this file.
        #[arg(long, value_name = "OUT")]
        emit_algebra: Option<String>,
        /// Construct and verify a nice basis.
        #[arg(long)]
        nice: bool,
    },
    /// Reproduce the table of three-dimensional algebras, or classify one.
    Catalog3 {
        #[arg(long, value_name = "FILE")]
        classify: Option<String>,
    },
    /// Run the reproduction suite.
    Reproduce {
        #[arg(long, value_name = "ID")]
        criterion: Option<u8>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut echo = vec!["nicebase".to_string()];
    echo.extend(std::env::args().skip(1));
    let start = Instant::now();
    let result = match &cli.command {
        Command::Check { file } => commands::check(echo, file),
        Command::PreEinstein { file, verify } => commands::pre_einstein(echo, file, verify.as_deref()),
        Command::NuProduct { files } => commands::nu_product(echo, files),
        Command::Aa { matrix } => commands::aa(echo, matrix),
        Command::Graph {
            file,
            emit_algebra,
            nice,
        } => commands::graph(echo, file, emit_algebra.as_deref(), *nice),
        Command::Catalog3 { classify } => commands::catalog3(echo, classify.as_deref()),
        Command::Reproduce { criterion } => commands::reproduce(echo, *criterion),
    };
    eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    match result {
        Ok(report) => {
            let text = if cli.json {
                report.render_json()
            } else {
                report.render_text()
            };
            print!("{text}");
            ExitCode::from(report.outcome.exit_code() as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
