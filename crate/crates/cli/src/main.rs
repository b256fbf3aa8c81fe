use std::process::ExitCode;

use clap::Parser;
use dimsp_cli::{execute, Cli};

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dimsp: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
