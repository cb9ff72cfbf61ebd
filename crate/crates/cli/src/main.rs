use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hypermap_cli::args::{Cli, Command};

fn out_path(command: &Command) -> Option<&std::path::Path> {
    let common = match command {
        Command::Poly(a)
        | Command::Table(a)
        | Command::Count(a)
        | Command::Stirling(a)
        | Command::Verify(a) => a,
        Command::AvgTrace(a) => &a.common,
        Command::Bench(a) => &a.common,
    };
    common.out.as_deref()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match hypermap_cli::execute(&cli.command) {
        Ok(output) => output,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match out_path(&cli.command) {
        Some(path) => std::fs::write(path, &output.text),
        None => std::io::stdout().write_all(output.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if output.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
