//! `psnf`: weight matrices of partitions and their Smith normal form.
//!
//! Exit codes: 0 on success, 1 for usage and parse errors, 2 when a
//! computed identity or certificate fails to verify.

mod commands;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CliError, Output};

#[derive(Parser, Debug)]
#[command(name = "psnf", version, about = "Smith normal form of partition weight matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Variable names: row-major letters a, b, c, ... or x<row>_<col>.
    #[arg(long, value_enum, default_value_t = NamingArg::Coords, global = true)]
    naming: NamingArg,
    /// Write the output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum NamingArg {
    Letters,
    Coords,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Recurrence,
    Inductive,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the weight polynomial of every cell of the extended diagram.
    Weights {
        /// Comma separated parts, e.g. "3,2"; "" for the empty partition.
        partition: String,
        #[command(flatten)]
        common: Common,
    },
    /// Compute and verify the Smith normal form of a weight matrix.
    Snf {
        partition: String,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Both)]
        algorithm: AlgorithmArg,
        /// Use the D x E rectangle anchored at (1,1) (inductive algorithm only).
        #[arg(long, num_args = 2, value_names = ["D", "E"])]
        rect: Option<Vec<usize>>,
        #[command(flatten)]
        common: Common,
    },
    /// Print the tau family and the residual of the row relation per column.
    Recurrence {
        partition: String,
        /// Column index, or "all".
        #[arg(long, default_value = "all")]
        j: String,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate q-Catalan numbers and check the staircase normal forms.
    Qcatalan {
        n_max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run every consistency check over all partitions up to a size.
    Selftest {
        max_size: usize,
        /// Disable data-parallel execution.
        #[arg(long)]
        sequential: bool,
        #[command(flatten)]
        common: Common,
    },
}

fn dispatch(command: Command) -> (Common, Result<Output, CliError>) {
    match command {
        Command::Weights { partition, common } => {
            let r = commands::weights(&partition, common.naming, common.format);
            (common, r)
        }
        Command::Snf { partition, algorithm, rect, common } => {
            let rect = rect.map(|v| (v[0], v[1]));
            let r = commands::snf(&partition, algorithm, rect, common.naming, common.format);
            (common, r)
        }
        Command::Recurrence { partition, j, common } => {
            let r = commands::recurrence(&partition, &j, common.naming, common.format);
            (common, r)
        }
        Command::Qcatalan { n_max, common } => {
            let r = commands::qcatalan(n_max, common.format);
            (common, r)
        }
        Command::Selftest { max_size, sequential, common } => {
            let r = commands::selftest(max_size, sequential, common.format);
            (common, r)
        }
    }
}

fn emit(text: &str, out: Option<&str>) -> std::io::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let (common, result) = dispatch(cli.command);
    let (output, code) = match result {
        Ok(output) => output.into_parts(),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&output, common.out.as_deref()) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
