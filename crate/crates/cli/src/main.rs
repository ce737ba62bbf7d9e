use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperinv_cli::commands::{
    cmd_count, cmd_eval, cmd_expand, cmd_verify, read_tensor, CliError, EvalRequest, OutputFormat,
};
use hyperinv_core::suite::Mode;
use hyperinv_core::{Limits, DEFAULT_CAP};

/// Polynomial invariants of hypermatrices.
#[derive(Parser)]
#[command(name = "hyperinv", version)]
struct Cli {
    /// Maximum number of permutation tuples (or squares) per computation.
    #[arg(long, env = "HYPERINV_CAP", global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandFormat {
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Fast,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Count semi-magic squares and their classes.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: CountFormat,
    },
    /// Class expansion of a discriminant.
    Expand {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ExpandFormat,
    },
    /// Evaluate invariants of a tensor file.
    Eval {
        #[arg(long)]
        tensor: PathBuf,
        /// Discriminant order.
        #[arg(long = "order-s")]
        order_s: Option<usize>,
        /// Also evaluate the brute-force tuple sum (needs --order-s).
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        det: bool,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        charpoly: bool,
        /// Cayley-Hamilton residual (rank 2 or 4).
        #[arg(long = "ch-check")]
        ch_check: bool,
        /// Cayley's hyperdeterminant of a 2x2x2 array.
        #[arg(long)]
        hyperdet222: bool,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value = "fast")]
        suite: Suite,
    },
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let limits = Limits {
        tuple_cap: cli.cap,
        square_cap: cli.cap,
    };
    match cli.command {
        Command::Count { n, r, format } => {
            let format = match format {
                CountFormat::Text => OutputFormat::Text,
                CountFormat::Json => OutputFormat::Json,
            };
            Ok((cmd_count(n, r, format, &limits)?, true))
        }
        Command::Expand {
            rank,
            order,
            format,
        } => {
            let format = match format {
                ExpandFormat::Json => OutputFormat::Json,
                ExpandFormat::Latex => OutputFormat::Latex,
            };
            Ok((cmd_expand(rank, order, format, &limits)?, true))
        }
        Command::Eval {
            tensor,
            order_s,
            oracle,
            det,
            inverse,
            charpoly,
            ch_check,
            hyperdet222,
        } => {
            let a = read_tensor(&tensor)?;
            let req = EvalRequest {
                order_s,
                oracle,
                det,
                inverse,
                charpoly,
                ch_check,
                hyperdet222,
            };
            cmd_eval(&a, &req, &limits)
        }
        Command::Verify { seed, suite } => {
            let mode = match suite {
                Suite::Fast => Mode::Fast,
                Suite::All => Mode::All,
            };
            Ok(cmd_verify(seed, mode))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, passed)) => {
            println!("{out}");
            ExitCode::from(if passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
