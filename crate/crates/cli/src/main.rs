use std::path::PathBuf;
use std::process::ExitCode;

use casson_cli::{parse_krange, run, Action, Command, Format};
use casson_core::splice::KRange;
use clap::{Parser, Subcommand};

/// Exact SL(2,C) Casson invariants of homology spheres.
#[derive(Debug, Parser)]
#[command(name = "casson", version)]
struct Cli {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Knot invariant file to load (repeatable)
    #[arg(long = "data", value_name = "FILE", global = true)]
    data: Vec<PathBuf>,

    /// Range A..B of k used by condition checks
    #[arg(long, value_name = "A..B", global = true, allow_hyphen_values = true, value_parser = parse_krange)]
    krange: Option<KRange>,

    #[command(subcommand)]
    action: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Evaluate λ on a manifold expression and print its certificate
    Eval { expr: String },
    /// Tabulate the splice conditions for two knots in S3
    Check { knot1: String, knot2: String },
    /// Compare the character-count oracle with the closed form
    Verify {
        #[arg(long, value_name = "N", default_value_t = 1000)]
        max_product: u64,
    },
    /// Show the Σ(2,3,5,7) non-additivity example
    Demo,
    /// Load an invariant file and report what it contains
    LoadProbe { path: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let action = match cli.action {
        Sub::Eval { expr } => Action::Eval(expr),
        Sub::Check { knot1, knot2 } => Action::Check { knot1, knot2 },
        Sub::Verify { max_product } => Action::Verify { max_product },
        Sub::Demo => Action::Demo,
        Sub::LoadProbe { path } => Action::LoadProbe(path),
    };
    let cmd = Command {
        action,
        format: if cli.json { Format::Json } else { Format::Text },
        data_files: cli.data,
        krange: cli.krange,
    };
    let out = run(&cmd);
    if out.exit_code == casson_cli::EXIT_ERROR {
        eprint!("{}", out.output);
    } else {
        print!("{}", out.output);
    }
    ExitCode::from(out.exit_code as u8)
}
