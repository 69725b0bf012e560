//! `mono`: command-line front end for `mono-core`.
//!
//! Exit status: 0 success, 1 unreadable or malformed input, 2 violated
//! precondition (such as non-Artinian input where one is required), 3 an
//! internal disagreement between independent computations.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::commands::Failure;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage mistakes count as malformed input
            return ExitCode::from(if e.use_stderr() { Failure::INPUT as u8 } else { 0 });
        }
    };
    match commands::run(&cli.command, cli.format) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprint!("mono: {}", f.message);
            if !f.message.ends_with('\n') {
                eprintln!();
            }
            ExitCode::from(f.code as u8)
        }
    }
}
