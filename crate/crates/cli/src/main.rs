//! `liegrad`: analyses of Lie algebras graded by finite groups.
//!
//! Exit codes: 0 success, 1 parse error (including unreadable input and bad
//! command lines), 2 precondition error, 3 invariant violation. Nothing is
//! written to standard output or `--out` unless the command succeeds.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use liegrad_core::{Error, ErrorClass};

#[derive(Parser, Debug)]
#[command(name = "liegrad", version, about = "Exact analysis of Lie algebras graded by finite groups")]
struct Cli {
    /// machine-readable JSON on standard output
    #[arg(long, global = true)]
    json: bool,
    /// also write the JSON document to this path
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// largest group order accepted from input documents
    #[arg(long, global = true, default_value_t = liegrad_core::groups::DEFAULT_MAX_ORDER, value_name = "K")]
    max_group_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// check the algebra (antisymmetry, Jacobi) and the grading
    Validate { input: PathBuf },
    /// support, its commutativity and the subgroup it generates
    Support { input: PathBuf },
    /// solvable radical with its graded components
    Radical { input: PathBuf },
    /// homogeneous Levi subalgebra
    Levi { input: PathBuf },
    /// graded-simple blocks of a semisimple graded algebra
    Decompose { input: PathBuf },
    /// whether the grading is graded-simple, with a reason
    GradedSimple { input: PathBuf },
    /// commutativity of degrees along nonzero chain products, and of fiber ideals
    LemmaCheck {
        input: PathBuf,
        #[arg(long, default_value_t = 3, value_name = "M")]
        max_chain: usize,
    },
    /// the dual-group action of an abelian grading, as an automorphism-family document
    Dualize { input: PathBuf },
    /// the eigenspace grading of an automorphism family
    Grade { input: PathBuf },
    /// radical, Levi subalgebra and blocks with re-checkable certificates
    Report { input: PathBuf },
    /// built-in fixtures
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// fixture names and descriptions
    List,
    /// a fixture as a job document
    Emit {
        name: String,
        /// rewrite on a pseudorandom degree-preserving basis
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e.class() {
        ErrorClass::Parse => 1,
        ErrorClass::Precondition => 2,
        ErrorClass::Invariant => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &out.document) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if cli.json {
                print!("{}", out.document);
            } else {
                print!("{}", out.human);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
