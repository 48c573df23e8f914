//! `vanish`: vanishing ideals, Hilbert invariants and Reed–Muller-type code
//! parameters of sets parameterized by rational functions over `F_q`.

mod commands;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use vanish_core::{exec, Config, Exec, Mode};

use crate::commands::Outcome;
use crate::output::Format;

#[derive(Parser, Debug)]
#[command(name = "vanish", version, about = "Vanishing ideals of parameterized sets over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis of the vanishing ideal.
    Ideal(Common),
    /// Krull dimension, degree, regularity and Hilbert function.
    Invariants {
        #[command(flatten)]
        common: Common,
        /// Last degree of the Hilbert table (default: regularity + 1).
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Length, dimension and minimum distance of the evaluation codes.
    Code {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        dmin: u32,
        /// Default: the regularity.
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Enumerate the parameterized set.
    Points(Common),
    /// Cross-check the elimination ideals against independent oracles.
    Verify(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Parameterization file.
    spec: PathBuf,
    /// Overrides the file's `mode` key.
    #[arg(long, value_parser = parse_mode)]
    mode: Option<Mode>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (0 = all cores, 1 = sequential).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Maximum projective message classes enumerated for a minimum distance.
    #[arg(long, default_value_t = Config::default().distance_cap)]
    cap: u64,
    /// Maximum parameter-grid size q^n.
    #[arg(long, default_value_t = Config::default().grid_cap)]
    grid_cap: u64,
    /// Maximum number of points fed to the point-ideal oracle.
    #[arg(long, default_value_t = Config::default().oracle_cap)]
    oracle_cap: usize,
}

impl Common {
    fn config(&self) -> Config {
        Config {
            exec: if self.jobs == 1 { Exec::Sequential } else { Exec::Parallel },
            grid_cap: self.grid_cap,
            oracle_cap: self.oracle_cap,
            distance_cap: self.cap,
        }
    }
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.replace('-', "_").parse()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let common = match &cli.command {
        Command::Ideal(c) | Command::Points(c) | Command::Verify(c) => c,
        Command::Invariants { common, .. } | Command::Code { common, .. } => common,
    };
    if common.jobs > 1 {
        if let Err(e) = exec::init_thread_pool(common.jobs) {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let result = match &cli.command {
        Command::Ideal(c) => commands::ideal(c),
        Command::Invariants { common, dmax } => commands::invariants(common, *dmax),
        Command::Code { common, dmin, dmax } => commands::code(common, *dmin, *dmax),
        Command::Points(c) => commands::points(c),
        Command::Verify(c) => verify::run(c),
    };
    match result {
        Ok(Outcome { report, code, message }) => {
            print!("{report}");
            if let Some(m) = message {
                eprintln!("{m}");
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
