use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gencartan::arith::{c_pr, is_prime, r_ell, theta};
use gencartan::cartan::cartan_suite;
use gencartan::linalg::{parse_matrix, snf};
use gencartan::partitions::{enumerate_partitions, is_ell_singular};
use gencartan::reduction::reduction_suite;
use gencartan::wreath::{verify_wreath_laws, verify_x_general, verify_x_prime_power};
use gencartan::VerificationReport;
use rayon::prelude::*;

const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Parser)]
#[command(name = "gencartan", version, about = "Invariant factors of generalised Cartan matrices of symmetric groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification grid and print one report per check.
    Verify {
        #[command(subcommand)]
        target: Target,
        /// Also write every report as a JSON array.
        #[arg(long, global = true)]
        json: Option<PathBuf>,
    },
    /// Print an invariant over all partitions as CSV.
    Table(TableArgs),
    /// Print the invariant factors of an integer matrix file, one per line.
    Snf { path: PathBuf },
}

#[derive(Subcommand)]
enum Target {
    /// X_{ℓ,w} for w ≤ w-max: prime-power form with --p/--r, general ℓ with --ell.
    X {
        #[arg(long, conflicts_with = "ell", requires = "r")]
        p: Option<u64>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, required_unless_present = "p")]
        ell: Option<u64>,
        #[arg(long)]
        w_max: usize,
    },
    /// Cartan matrices of S_n for n ≤ n-max, optionally block by block.
    Cartan {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        blockwise: bool,
    },
    /// The p-power reduction checks for w ≤ w-max.
    Reduction {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        w_max: usize,
    },
    /// Randomised laws of the wreath operator.
    WreathOps {
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Theta,
    Cpr,
    Rell,
}

#[derive(Args)]
struct TableArgs {
    kind: TableKind,
    #[arg(long)]
    ell: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    r: Option<u32>,
    /// Degree for theta and cpr.
    #[arg(long)]
    w: Option<usize>,
    /// Degree for rell.
    #[arg(long)]
    n: Option<usize>,
}

struct UsageError(String);

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, UsageError> {
    value.ok_or_else(|| usage(format!("missing --{flag}")))
}

fn require_prime(p: u64) -> Result<(), UsageError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(usage(format!("{p} is not prime")))
    }
}

fn collect_reports(target: Target) -> Result<Vec<VerificationReport>, UsageError> {
    Ok(match target {
        Target::X { p: Some(p), r, w_max, .. } => {
            require_prime(p)?;
            let r = require(r, "r")?;
            (0..=w_max).into_par_iter().map(|w| verify_x_prime_power(p, r, w)).collect()
        }
        Target::X { ell, w_max, .. } => {
            let ell = require(ell, "ell")?;
            (0..=w_max).into_par_iter().map(|w| verify_x_general(ell, w)).collect()
        }
        Target::Cartan { ell, n_max, blockwise } => {
            if ell < 2 {
                return Err(usage(format!("--ell must be at least 2, got {ell}")));
            }
            let per_n: Vec<Vec<VerificationReport>> = (0..=n_max)
                .into_par_iter()
                .map(|n| cartan_suite(ell, n, blockwise).expect("ell >= 2"))
                .collect();
            per_n.into_iter().flatten().collect()
        }
        Target::Reduction { p, r, w_max } => {
            require_prime(p)?;
            let per_w: Vec<Vec<VerificationReport>> = (0..=w_max)
                .into_par_iter()
                .map(|w| reduction_suite(p, r, w).expect("p is prime"))
                .collect();
            per_w.into_iter().flatten().collect()
        }
        Target::WreathOps { trials, seed } => verify_wreath_laws(trials, seed),
    })
}

fn run_verify(target: Target, json: Option<PathBuf>) -> Result<ExitCode, UsageError> {
    let reports = collect_reports(target)?;
    let mut out = io::stdout().lock();
    for r in &reports {
        // a closed pipe is not worth a panic
        let _ = writeln!(out, "{r}");
    }
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&reports).expect("reports serialise");
        fs::write(&path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if reports.iter().all(VerificationReport::passed) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_table(args: TableArgs) -> Result<ExitCode, UsageError> {
    let rows: Vec<(String, String)> = match args.kind {
        TableKind::Theta => {
            let ell = require(args.ell, "ell")?;
            let w = require(args.w, "w")?;
            enumerate_partitions(w).iter().map(|l| (l.to_string(), theta(l, ell).to_string())).collect()
        }
        TableKind::Cpr => {
            let p = require(args.p, "p")?;
            require_prime(p)?;
            let r = require(args.r, "r")?;
            let w = require(args.w, "w")?;
            enumerate_partitions(w).iter().map(|l| (l.to_string(), c_pr(l, p, r).to_string())).collect()
        }
        TableKind::Rell => {
            let ell = require(args.ell, "ell")?;
            if ell == 0 {
                return Err(usage("--ell must be positive for rell"));
            }
            let n = require(args.n, "n")?;
            enumerate_partitions(n)
                .iter()
                .filter(|l| !is_ell_singular(l, ell as usize))
                .map(|l| (l.to_string(), r_ell(l, ell).to_string()))
                .collect()
        }
    };
    let mut writer = csv::Writer::from_writer(io::stdout().lock());
    let write = |writer: &mut csv::Writer<_>| -> csv::Result<()> {
        writer.write_record(["partition", "value"])?;
        for (p, v) in &rows {
            writer.write_record([p, v])?;
        }
        writer.flush()?;
        Ok(())
    };
    write(&mut writer).map_err(|e| usage(format!("cannot write table: {e}")))?;
    Ok(ExitCode::SUCCESS)
}

fn run_snf(path: PathBuf) -> Result<ExitCode, UsageError> {
    let text = fs::read_to_string(&path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let matrix = parse_matrix(&text).map_err(|e| usage(e.to_string()))?;
    let matrix = matrix.to_integer().map_err(|e| usage(e.to_string()))?;
    let mut out = io::stdout().lock();
    for d in snf(&matrix).factors {
        let _ = writeln!(out, "{d}");
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { target, json } => run_verify(target, json),
        Command::Table(args) => run_table(args),
        Command::Snf { path } => run_snf(path),
    };
    result.unwrap_or_else(|UsageError(msg)| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    })
}
