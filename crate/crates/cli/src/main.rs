use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nilcap::scramble::scramble;
use nilcap::LieAlgebra;
use nilcap_cli::claims::verify_all;
use nilcap_cli::expr::parse_algebra;
use nilcap_cli::file::AlgebraFile;
use nilcap_cli::report::{analyze, MethodArg};

const OK: u8 = 0;
const INVALID: u8 = 1;
const USAGE: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "nilcap",
    version,
    about = "Schur multipliers and capability of Lie algebras over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and check the Jacobi identity.
    Validate { file: PathBuf },
    /// Report dimensions, multiplier and capability of a file or builtin expression.
    Analyze {
        /// Path to an algebra file, or an expression such as "H(2)+A(3)".
        input: String,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Print a builtin algebra in a seeded random basis as an algebra file.
    Scramble {
        expr: String,
        #[arg(long)]
        seed: u64,
    },
    /// Recompute the published dimensions and verdicts.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
}

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn load_file(path: &Path) -> Result<LieAlgebra, (u8, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| (USAGE, format!("cannot read {}: {e}", path.display())))?;
    AlgebraFile::parse(&text)
        .and_then(|f| f.to_algebra())
        .map_err(|e| (INVALID, format!("invalid [{}]: {e}", e.kind())))
}

fn validate(path: &Path) -> ExitCode {
    match load_file(path) {
        Ok(l) => {
            println!(
                "valid: dim {}, dim L^2 {}, nilpotent {}",
                l.dim(),
                l.derived_subalgebra().dim(),
                l.is_nilpotent()
            );
            ExitCode::from(OK)
        }
        Err((code, message)) => fail(code, message),
    }
}

fn run_analyze(input: &str, method: MethodArg, json: bool) -> ExitCode {
    let path = Path::new(input);
    let algebra = if path.is_file() {
        load_file(path)
    } else {
        parse_algebra(input).map_err(|e| (USAGE, format!("expression: {e}")))
    };
    let algebra = match algebra {
        Ok(l) => l,
        Err((code, message)) => return fail(code, message),
    };
    match analyze(input, &algebra, method) {
        Ok(report) if json => {
            println!("{}", report.to_json());
            ExitCode::from(OK)
        }
        Ok(report) => {
            print!("{}", report.to_text());
            ExitCode::from(OK)
        }
        Err(e) => fail(INTERNAL, e),
    }
}

fn run_scramble(expr: &str, seed: u64) -> ExitCode {
    match parse_algebra(expr) {
        Ok(l) => {
            let (scrambled, _) = scramble(&l, seed);
            println!("{}", AlgebraFile::from_algebra(&scrambled).to_json());
            ExitCode::from(OK)
        }
        Err(e) => fail(USAGE, format!("expression: {e}")),
    }
}

fn verify_paper(json: bool) -> ExitCode {
    let claims = match verify_all() {
        Ok(c) => c,
        Err(e) => return fail(INTERNAL, e),
    };
    let passed = claims.iter().filter(|c| c.pass).count();
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&claims).expect("claims always serialize")
        );
    } else {
        let width = claims
            .iter()
            .map(|c| c.claim.chars().count())
            .max()
            .unwrap_or(0);
        println!(
            "{:<4}  {:<width$}  {:<14}  computed",
            "", "claim", "expected"
        );
        for c in &claims {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            let pad = width - c.claim.chars().count();
            println!(
                "{mark}  {}{}  {:<14}  {}",
                c.claim,
                " ".repeat(pad),
                c.expected,
                c.computed
            );
        }
        println!("{passed}/{} claims pass", claims.len());
    }
    if passed == claims.len() {
        ExitCode::from(OK)
    } else {
        ExitCode::from(INTERNAL)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Validate { file } => validate(&file),
        Command::Analyze {
            input,
            method,
            json,
        } => run_analyze(&input, method, json),
        Command::Scramble { expr, seed } => run_scramble(&expr, seed),
        Command::VerifyPaper { json } => verify_paper(json),
    }
}
