use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tropdiff::commands::{self, Output, Selection};
use tropdiff::json::KernelJson;
use tropdiff::CliError;

#[derive(Parser)]
#[command(
    name = "tropdiff",
    version,
    about = "Tropical differential algebra over rational power-series fractions"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Input file; standard input when omitted or `-`.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Substitution kernel, overriding the problem file.
    #[arg(long, value_enum, global = true)]
    kernel: Option<KernelJson>,
    /// Derivative bound, overriding the problem file's `prolong_bound`.
    #[arg(long, global = true)]
    bound: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Tropical value of a rational function given as text or JSON.
    Trop {
        expr: Option<String>,
        /// Number of variables t1..tm; defaults to the largest index used, at least 2.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// trop_w of each selected polynomial and its derivatives.
    Tropw(ProblemArgs),
    /// w-translations of each selected polynomial and its derivatives.
    Translate(ProblemArgs),
    /// Generators of the initial ideal at the file's weight and order.
    Initial(ProblemArgs),
    /// Derivatives of each selected polynomial up to the bound.
    Prolong(ProblemArgs),
    /// Comparisons recovered from maximal-ideal membership.
    OrderRecover {
        /// Use every pair of exponents of degree at most D in place of the file's pairs.
        #[arg(long, value_name = "D")]
        exhaustive: Option<u32>,
    },
    /// Smallest Bezout multiplier M for a pair of rational functions.
    Bezout {
        phi: String,
        psi: String,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// The strictly increasing chain omega_1 < omega_2 < ... in VB(t,u).
    OmegaChain {
        #[arg(default_value_t = 20)]
        n: u32,
    },
    /// Runs built-in checks on the worked example.
    Selftest,
}

#[derive(clap::Args)]
struct ProblemArgs {
    /// Restrict to the named polynomials (repeatable).
    #[arg(long = "poly", value_name = "NAME")]
    names: Vec<String>,
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let selection = |args: &ProblemArgs| Selection {
        names: args.names.clone(),
        bound: cli.bound,
        kernel: cli.kernel.map(Into::into),
    };
    let problem = || commands::read_problem(&read_input(&cli.input)?);
    match &cli.command {
        Command::Trop { expr, vars } => match expr {
            Some(e) => commands::trop(e, *vars),
            None => commands::trop(&read_input(&cli.input)?, *vars),
        },
        Command::Tropw(a) => commands::tropw_cmd(&problem()?, &selection(a)),
        Command::Translate(a) => commands::translate_cmd(&problem()?, &selection(a)),
        Command::Initial(a) => commands::initial_cmd(&problem()?, &selection(a)),
        Command::Prolong(a) => commands::prolong_cmd(&problem()?, &selection(a)),
        Command::OrderRecover { exhaustive } => {
            commands::order_recover_cmd(&problem()?, *exhaustive)
        }
        Command::Bezout { phi, psi, vars } => commands::bezout_cmd(phi, psi, *vars),
        Command::OmegaChain { n } => commands::omega_chain_cmd(*n),
        Command::Selftest => commands::selftest_cmd(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => out.json,
                Format::Pretty => out.pretty,
            };
            let mut stdout = std::io::stdout().lock();
            if !text.is_empty() {
                // A closed pipe downstream is not an error of ours.
                let _ = writeln!(stdout, "{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
