use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::TypedValueParser;
use clap::{Parser, Subcommand, ValueEnum};
use pfister_core::fieldcore::{F2, Q};
use pfister_core::verifier::{
    oracle_isotropy, parse_ast, parse_list, verify_char0_reduction, verify_prop_char2,
    verify_theorem_a, Certificate, VerifyConfig, VerifyError, DEFAULT_CEILING, DEFAULT_MAX_N,
};
use pfister_core::Exec;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "pfister-check",
    version,
    about = "Certificate-emitting checks for bilinear Pfister form families"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the certificate here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest accepted n (at most 8).
    #[arg(long, default_value_t = DEFAULT_MAX_N, global = true, value_parser = clap::value_parser!(u8).range(2..=8).map(usize::from))]
    max_n: usize,
    /// Cap on the number of vectors the exhaustive oracle may enumerate.
    #[arg(long, default_value_t = DEFAULT_CEILING, global = true)]
    ceiling: u64,
    /// Disable data parallelism.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification pipeline.
    #[command(subcommand)]
    Check(Check),
    /// Run the exhaustive search oracle.
    #[command(subcommand)]
    Oracle(Oracle),
}

#[derive(Debug, Subcommand)]
enum Check {
    /// Family over F2(x1..xn): anisotropy and no common slot.
    PropChar2 {
        #[arg(long)]
        n: usize,
        /// Slot values "a1;a2;...;an" (default x1..xn).
        #[arg(long)]
        slots: Option<String>,
    },
    /// Family over Q(x1..xn), reduced to F2 through the 2-adic residue map.
    PropMain {
        #[arg(long)]
        n: usize,
        /// Slot values "a1;a2;...;an" (default x1..xn).
        #[arg(long)]
        slots: Option<String>,
    },
    /// The four quaternion algebras over Q(x1, x2).
    TheoremA,
}

#[derive(Debug, Subcommand)]
enum Oracle {
    /// Search for an isotropic vector of a diagonal form over F2.
    Isotropy {
        /// Diagonal entries "c1;c2;...".
        #[arg(long)]
        form: String,
        /// Total degree bound on the coordinates.
        #[arg(long)]
        degree: u32,
        /// Number of variables (default: the largest index used, at least 1).
        #[arg(long)]
        n: Option<usize>,
    },
}

fn run(cli: &Cli) -> Result<Certificate, VerifyError> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    let cfg = VerifyConfig {
        max_n: cli.max_n,
        exec,
    };
    let warn = |n: usize| {
        if n > DEFAULT_MAX_N && n <= cli.max_n {
            eprintln!(
                "warning: n = {n} works in a {}-dimensional space and may take a long time",
                1usize << n
            );
        }
    };
    match &cli.command {
        Command::Check(Check::PropChar2 { n, slots }) => {
            warn(*n);
            let alphas = slots
                .as_deref()
                .map(|s| parse_list::<F2>(s, *n))
                .transpose()?;
            verify_prop_char2(*n, alphas, &cfg)
        }
        Command::Check(Check::PropMain { n, slots }) => {
            warn(*n);
            let alphas = slots
                .as_deref()
                .map(|s| parse_list::<Q>(s, *n))
                .transpose()?;
            verify_char0_reduction(*n, alphas, &cfg)
        }
        Command::Check(Check::TheoremA) => verify_theorem_a(None, &cfg),
        Command::Oracle(Oracle::Isotropy { form, degree, n }) => {
            let n = match n {
                Some(n) => *n,
                None => form
                    .split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| parse_ast(s).map(|a| a.max_var()))
                    .collect::<Result<Vec<_>, _>>()?
                    .into_iter()
                    .max()
                    .unwrap_or(0)
                    .max(1),
            };
            oracle_isotropy(parse_list::<F2>(form, n)?, *degree, cli.ceiling, &cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cert = match run(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let rendered = match cli.format {
        Format::Json => cert.to_json() + "\n",
        Format::Text => cert.to_text(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(cert.verdict.exit_code() as u8)
}
