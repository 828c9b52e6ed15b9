use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tlzero::campaign::{self, Options, DEFAULT_NMAX, DEFAULT_SEED};
use tlzero::hecke::BraidWord;
use tlzero::report::VerificationReport;

/// Verify claims about the Temperley-Lieb algebra at loop value zero.
#[derive(Parser)]
#[command(name = "tlzero", version)]
struct Cli {
    /// Write the JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Seed for random braid campaigns.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Print only the summary line.
    #[arg(long, global = true)]
    quiet: bool,
    /// Record wall-clock time per check (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
    /// Draw diagrams as ASCII art where a command lists them.
    #[arg(long, global = true)]
    draw: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension table for a range such as `4..6` or a single `n`.
    Dims { range: String },
    /// The exact sequence of standard modules on `n` strands.
    Exact { n: usize },
    /// The quiver equivalence on `n` strands.
    Quiver { n: usize },
    /// Specht modules over GF(2) on `n` points.
    Specht { n: usize },
    /// Jones polynomial of a braid closure, e.g. `1,1,1 --strands 2`.
    Jones {
        #[arg(allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: usize,
    },
    /// Every check.
    All {
        #[arg(long, default_value_t = DEFAULT_NMAX)]
        nmax: usize,
    },
}

fn parse_range(s: &str) -> Option<(usize, usize)> {
    match s.split_once("..") {
        Some((a, b)) => {
            let lo = a.trim().parse().ok()?;
            let hi = b.trim().trim_start_matches('=').parse().ok()?;
            (lo <= hi).then_some((lo, hi))
        }
        None => s.trim().parse().ok().map(|n| (n, n)),
    }
}

fn finish(cli: &Cli, report: &VerificationReport, extra: &str) -> ExitCode {
    if !cli.quiet {
        print!("{extra}");
        print!("{}", report.to_table());
    } else {
        let fails = report.failures().count();
        println!("{} claims, {} failed", report.claims.len(), fails);
    }
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options { seed: cli.seed, timings: cli.timings };
    match &cli.command {
        Command::Dims { range } => {
            let Some((lo, hi)) = parse_range(range) else {
                return usage(&format!("bad range `{range}`, expected e.g. 4..6"));
            };
            let (report, table) = campaign::cmd_dims(lo, hi, cli.draw);
            finish(&cli, &report, &table)
        }
        Command::Exact { n } => finish(&cli, &campaign::cmd_exact(*n, &opts), ""),
        Command::Quiver { n } => {
            if *n < 2 || n % 2 == 1 {
                return usage("the quiver equivalence needs an even n >= 2");
            }
            finish(&cli, &campaign::cmd_quiver(*n, &opts), "")
        }
        Command::Specht { n } => {
            if *n == 0 || *n > 16 {
                return usage("specht needs 1 <= n <= 16");
            }
            finish(&cli, &campaign::cmd_specht(*n, &opts), "")
        }
        Command::Jones { braid, strands } => {
            let word = match BraidWord::parse(*strands, braid) {
                Ok(w) => w,
                Err(e) => return usage(&e.to_string()),
            };
            match campaign::cmd_jones(&word) {
                Ok((report, value)) => {
                    let head = match value {
                        Some(v) => format!("V = {}\n", v.jones),
                        None => "V undefined: numerator not divisible by 1 + t\n".to_string(),
                    };
                    finish(&cli, &report, &head)
                }
                Err(e) => usage(&e.to_string()),
            }
        }
        Command::All { nmax } => finish(&cli, &campaign::cmd_all(*nmax, &opts), ""),
    }
}
