use std::process::ExitCode;

use clap::Parser;
use midconv_cli::commands::{execute, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            if let CliError::CheckFailed(_, report) = &err {
                print!("{report}");
            }
            eprintln!("error[{}]: {err}", err.name());
            ExitCode::from(1)
        }
    }
}
