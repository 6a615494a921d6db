mod args;
mod commands;
mod output;

use std::process::ExitCode;

use as_census::Error;
use clap::Parser;

use args::{Cli, Command};
use commands::Failure;

const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INCONSISTENT: u8 = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot start {jobs} workers: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let opts = &cli.global;
    let outcome = match &cli.command {
        Command::Partitions { p, d, family } => commands::partitions(*p, *d, *family),
        Command::Density(cmd) => commands::density(cmd, opts),
        Command::Converge {
            p,
            d,
            q_exponents,
            primes,
            r,
        } => commands::converge(*p, *d, q_exponents, primes, *r, opts),
        Command::Census { p, n, d, kappa, mode } => commands::census(*p, *n, *d, kappa.as_deref(), *mode, opts),
    };
    let (report, late) = match outcome {
        Ok(v) => v,
        Err(f) => return fail(f),
    };
    let text = match report.render(opts.format) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let written = match &opts.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    match late {
        Some(f) => fail(f),
        None => ExitCode::SUCCESS,
    }
}

fn fail(f: Failure) -> ExitCode {
    let code = match &f {
        Failure::Usage(_) => EXIT_USAGE,
        Failure::Inconsistent(_) => EXIT_INCONSISTENT,
        Failure::Core(Error::BudgetExceeded { .. }) => EXIT_BUDGET,
        Failure::Core(Error::BoundViolation(_)) => EXIT_INCONSISTENT,
        Failure::Core(_) => EXIT_USAGE,
    };
    match f {
        Failure::Usage(m) | Failure::Inconsistent(m) => eprintln!("error: {m}"),
        Failure::Core(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(code)
}
