//! `qline`: command-line front end for the qudit-line library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    FlipSign,
    Symmetric,
}

#[derive(Debug, Parser)]
#[command(name = "qline", version, about = "Pauli-group commutation as geometry of the projective line over Z_d")]
pub struct Cli {
    /// Output format; `dot` is accepted only by `graph`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Cross-check commutation with the exact matrix model.
    #[arg(long, global = true)]
    pub matrix: bool,

    /// Also count by exhaustive enumeration (d <= 32).
    #[arg(long, global = true)]
    pub brute: bool,

    /// Render operators as `w^a X^b Z^c`.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Comma-separated list of checks for `verify`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub checks: Option<Vec<String>>,

    /// Replace the bilinear form used by `verify` with a known-wrong one.
    #[arg(long, global = true, value_enum, hide = true)]
    pub fault: Option<Fault>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factorization, unit count and CRT idempotents of d.
    Factor { d: u64 },
    /// Perp-set of (b,c) and its decomposition into points.
    Perp { d: u64, b: u64, c: u64 },
    /// All points of the projective line over Z_d.
    Points { d: u64 },
    /// Commutator of w^a X^b Z^c and w^a2 X^b2 Z^c2.
    Commute {
        d: u64,
        a: u64,
        b: u64,
        c: u64,
        a2: u64,
        b2: u64,
        c2: u64,
    },
    /// Number of operators commuting with X^b Z^c (square-free d).
    Count { d: u64, b: u64, c: u64 },
    /// Neighbour graph of the projective line.
    Graph { d: u64 },
    /// Run the exhaustive verification checks.
    Verify { d: u64 },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
