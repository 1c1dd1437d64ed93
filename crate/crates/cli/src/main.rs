//! `knotmeta`: command-line frontend for the metabelian census, the Riley
//! section of two-bridge knots and the A-polynomial analyzer.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{Failure, Source};
use report::Format;

#[derive(Parser, Debug)]
#[command(name = "knotmeta", version, about = "Exact metabelian and Riley-section computations for knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Knot or A-polynomial JSON file.
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,

    /// Two-bridge parameter p (odd).
    #[arg(short, global = true, allow_negative_numbers = true)]
    p: Option<i64>,

    /// Two-bridge parameter q (odd, coprime to p).
    #[arg(short, global = true, allow_negative_numbers = true)]
    q: Option<i64>,

    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,

    /// Also check the relator over indeterminate t.
    #[arg(long, global = true)]
    general_t: bool,

    /// Treat every analyzed A-polynomial as belonging to a small knot.
    #[arg(long, global = true)]
    small: bool,

    /// Largest p in a sweep.
    #[arg(long, global = true)]
    p_max: Option<i64>,

    /// Print approximate roots of phi(-1,u).
    #[arg(long, global = true)]
    approx_roots: bool,

    /// Candidate rotation vector for meta-verify, e.g. "1/3,2/3".
    #[arg(long, global = true)]
    theta: Option<String>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Knot determinant |Delta(-1)|.
    Det,
    /// Number of irreducible metabelian characters, (det - 1) / 2.
    MetaCount,
    /// List metabelian classes as rotation vectors.
    MetaEnum,
    /// Verify each class (or --theta) against the Seifert relations.
    MetaVerify,
    /// Riley polynomial at t = -1.
    TbRiley,
    /// Relator and longitude identities modulo phi(-1,u).
    TbVerify,
    /// Riley degree vs distinct roots vs metabelian count.
    TbCrosscheck,
    /// Analyze A-polynomials at m = sqrt(-1).
    ApolyAnalyze,
    /// Run every two-bridge check for p <= --p-max.
    Sweep,
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("KNOTMETA_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| Failure::Input(format!("KNOTMETA_THREADS must be a positive integer, got {v:?}")))?;
        if n == 0 {
            return Err(Failure::Input("KNOTMETA_THREADS must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<report::Report, Failure> {
    configure_threads()?;
    let src = Source {
        input: cli.input.clone(),
        p: cli.p,
        q: cli.q,
    };
    match cli.command {
        Command::Det => commands::det(&src),
        Command::MetaCount => commands::meta_count(&src),
        Command::MetaEnum => commands::meta_enum(&src),
        Command::MetaVerify => commands::meta_verify(&src, cli.theta.as_deref()),
        Command::TbRiley => commands::tb_riley(&src, cli.approx_roots),
        Command::TbVerify => commands::tb_verify(&src, cli.general_t),
        Command::TbCrosscheck => commands::tb_crosscheck(&src),
        Command::ApolyAnalyze => commands::apoly_analyze(cli.input.as_ref(), cli.small),
        Command::Sweep => commands::sweep(cli.p_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            return ExitCode::from(1);
        }
    };
    let text = match report.render(cli.format) {
        Ok(t) => t,
        Err(m) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
    };
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(2);
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        eprintln!("verification failed");
        ExitCode::from(1)
    }
}
