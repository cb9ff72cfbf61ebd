//! Library side of the `hypermap` binary: argument types, command
//! implementations, the verification suite and the benchmark harness.

pub mod args;
pub mod bench;
pub mod commands;
pub mod verify;

use anyhow::Result;

use args::Command;
use commands::Output;

pub fn execute(command: &Command) -> Result<Output> {
    match command {
        Command::Poly(a) => commands::cmd_poly(a),
        Command::Table(a) => commands::cmd_table(a),
        Command::Count(a) => commands::cmd_count(a),
        Command::Stirling(a) => commands::cmd_stirling(a),
        Command::AvgTrace(a) => commands::cmd_avg_trace(a),
        Command::Verify(a) => commands::cmd_verify(a),
        Command::Bench(a) => commands::cmd_bench(a),
    }
}
