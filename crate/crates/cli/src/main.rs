//! `hanoi-trees`: spanning-tree counts, entropy and degree distributions of
//! Tower-of-Hanoi graphs.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod commands;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hanoi-trees", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Export the graph H_n.
    Graph {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
        format: GraphFormat,
    },
    /// Sizes of the spanning-tree and spanning-forest classes.
    Count {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = CountMethod::Recursive)]
        method: CountMethod,
    },
    /// Spanning-tree entropy ln(s_n) / 3^n, or its limit with `--n inf`.
    Entropy {
        #[arg(long)]
        n: String,
        #[arg(long)]
        float: bool,
    },
    /// Exact degree distributions.
    Degree {
        #[arg(long)]
        n: u32,
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        vertex: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
        /// Render probabilities as floats with 17 significant digits.
        #[arg(long)]
        float: bool,
    },
    /// Cross-check recursions, closed forms and brute-force references.
    Verify {
        #[arg(long)]
        n: u32,
    },
    /// Uniform spanning-tree sampling at one vertex.
    Sample {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        vertex: String,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the per-sample degrees to this CSV file.
        #[arg(long)]
        csv: Option<std::path::PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    EdgeList,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum CountMethod {
    Recursive,
    Closed,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
}

/// Failure classes mapped onto exit codes.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verification(String),
}

impl From<hanoi_trees::Error> for Failure {
    fn from(e: hanoi_trees::Error) -> Self {
        match e {
            hanoi_trees::Error::Inconsistency { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let limits = commands::Limits::from_env();
    let result = match cli.command {
        Command::Graph { n, format } => {
            commands::graph(n, matches!(format, GraphFormat::Json), &limits)
        }
        Command::Count { n, method } => commands::count(n, method, &limits),
        Command::Entropy { n, float } => commands::entropy(&n, float),
        Command::Degree {
            n,
            vertex,
            all,
            format,
            float,
        } => commands::degree(n, vertex.as_deref(), all, format, float, &limits),
        Command::Verify { n } => verify::run(n, &limits),
        Command::Sample {
            n,
            vertex,
            samples,
            seed,
            csv,
        } => commands::sample(n, &vertex, samples, seed, csv.as_deref(), &limits),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
