//! `dlforge`: runs verification suites and small Dyer-Lashof computations.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dlforge::dyer_lashof::{display_poly, parse_expression, DlContext, Normalizer};
use dlforge::verify::{run_suite, Format, VerifyConfig};

#[derive(Parser)]
#[command(name = "dlforge", version, about = "Exact verification of Dyer-Lashof computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named suite, or `all`.
    Run {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        truncation: Option<u32>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value = "text")]
        format: Format,
        #[arg(long)]
        parallel: bool,
        /// Key-value config file; command-line flags override it.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Print the normal form of an expression.
    Normalize {
        #[arg(long)]
        context: PathBuf,
        #[arg(long)]
        expr: String,
        /// Refuse operations that need more than an E_n structure.
        #[arg(long)]
        window: Option<u32>,
        /// With --window, also refuse the top operation of E_n.
        #[arg(long, requires = "window")]
        strict: bool,
    },
    /// Print the least E_n level the normalization needs, with its witness.
    EnLevel {
        #[arg(long)]
        context: PathBuf,
        #[arg(long)]
        expr: String,
    },
}

enum Failure {
    Usage(String),
    Checks,
}

fn load_context(path: &PathBuf) -> Result<DlContext, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    DlContext::parse(&text).map_err(|e| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let usage = |e: &dyn std::fmt::Display| Failure::Usage(e.to_string());
    match cli.command {
        Command::Run { suite, max_degree, truncation, report, format, parallel, config } => {
            let mut cfg = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| usage(&e))?;
                    VerifyConfig::parse(&text).map_err(|e| usage(&e))?
                }
                None => VerifyConfig::default(),
            };
            if let Some(d) = max_degree {
                cfg.max_degree = d;
            }
            if let Some(t) = truncation {
                cfg.truncation = t;
            }
            cfg.parallel |= parallel;
            let r = run_suite(&suite, &cfg).map_err(|e| usage(&e))?;
            match report {
                Some(path) => {
                    r.emit(&path, format).map_err(|e| usage(&e))?;
                    println!("{}: {}", r.suite, r.overall.label());
                }
                None => print!("{}", r.render(format)),
            }
            if r.passed() {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Normalize { context, expr, window, strict } => {
            let ctx = load_context(&context)?;
            let e = parse_expression(&expr, &ctx).map_err(|e| usage(&e))?;
            let normalizer = match window {
                Some(n) if strict => Normalizer::new(&ctx).with_strict_window(n),
                Some(n) => Normalizer::new(&ctx).with_window(n),
                None => Normalizer::new(&ctx),
            };
            let n = normalizer.normalize(&e).map_err(|e| usage(&e))?;
            println!("{}", display_poly(&n.poly, &ctx));
            Ok(())
        }
        Command::EnLevel { context, expr } => {
            let ctx = load_context(&context)?;
            let e = parse_expression(&expr, &ctx).map_err(|e| usage(&e))?;
            let (level, witness) = Normalizer::new(&ctx).min_en_level(&e).map_err(|e| usage(&e))?;
            match witness {
                Some(a) => println!("E{level} (Q{} on degree {})", a.s, a.degree),
                None => println!("E{level}"),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
