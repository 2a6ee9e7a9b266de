//! Command-line front end for `dyon-core`.
//!
//! The binary `dyonkg` is a thin wrapper around [`run`], which parses the
//! arguments, merges an optional JSON config file, evaluates the command and
//! writes CSV or JSON. Exit codes: 0 success, 1 physics failure, 2 usage error.

pub mod args;
pub mod charge_expr;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::args::Cli;
use crate::error::CliResult;

fn execute(cli: &Cli) -> CliResult<i32> {
    let file = config::load_file(cli.global.config.as_deref())?;
    let global_args = config::merge(&cli.global, &file)?;
    let global = config::resolve_global(&global_args)?;
    let outcome = commands::dispatch(&cli.command, &global, &file)?;
    let text = outcome
        .table
        .render(global.format_or(outcome.default_format), &outcome.meta);
    match &global.out {
        Some(path) => std::fs::write(path, text)?,
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            other => other?,
        },
    }
    let mut err = std::io::stderr().lock();
    for note in &outcome.notes {
        let _ = writeln!(err, "{}: {note}", cli.command.name());
    }
    Ok(outcome.exit_code)
}

/// Runs the tool with the given arguments (program name first) and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

