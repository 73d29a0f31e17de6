//! `chatelet`: local and global Chow groups of Chatelet surfaces from the
//! command line.

mod render;

use std::process::ExitCode;

use chatelet_core::factor::trial_division_bound;
use chatelet_core::{ChowError, GlobalOptions, LocalOptions};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "chatelet", version)]
#[command(about = "Chow group A0(X)0 of y^2 - d z^2 = (x - c1)(x - c2)(x - c3) over Q and its completions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Local group at one place.
    Local {
        /// A prime, or "real".
        #[arg(long)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        /// Three comma-separated rationals, e.g. 0,1,-3/2.
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        /// Widens the enumeration window and residue precision.
        #[arg(long, default_value_t = 0)]
        precision_buffer: u32,
    },
    /// Global group over Q.
    Global {
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        #[arg(long, default_value_t = 0)]
        precision_buffer: u32,
        /// Odd primes outside the candidate set to spot-check.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hilbert symbol (a, b)_p, printed as 0 or 1.
    Symbol {
        #[arg(long)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Seeded fuzz self-check.
    Check {
        #[arg(long, default_value_t = 200)]
        fuzz_count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn exit_code(err: &ChowError) -> u8 {
    match err {
        ChowError::Factorization { .. } => 3,
        ChowError::Contradiction { .. } => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let global_opts = |precision_buffer, samples, seed| GlobalOptions {
        precision_buffer,
        trial_division_bound: trial_division_bound(),
        sample_count: samples,
        seed,
        ..GlobalOptions::default()
    };
    let outcome = match &cli.command {
        Command::Local { p, d, roots, precision_buffer } => {
            render::local(p, d, roots, LocalOptions { precision_buffer: *precision_buffer })
        }
        Command::Global { d, roots, precision_buffer, samples, seed } => {
            render::global(d, roots, &global_opts(*precision_buffer, *samples, *seed))
        }
        Command::Symbol { p, a, b } => render::symbol(p, a, b),
        Command::Check { fuzz_count, seed } => render::check(*fuzz_count, *seed),
    };
    match outcome {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            ExitCode::from(out.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
