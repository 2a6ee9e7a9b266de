//! One module per subcommand. Each returns a table plus metadata; printing
//! and exit codes are handled by the caller.

mod angular;
mod check;
mod density;
mod radial;
mod spectrum;
mod table1;

use serde::Serialize;
use serde_json::Value;

use crate::args::Command;
use crate::config::{merge, Format, Global};
use crate::error::CliResult;
use crate::output::Table;

pub use angular::snap_to_admissible;
pub use table1::table1_rows;

/// Result of a successful command evaluation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub table: Table,
    pub meta: Value,
    /// Human-readable remarks echoed on stderr.
    pub notes: Vec<String>,
    pub default_format: Format,
    /// 0, or 1 when the command ran but its check failed.
    pub exit_code: i32,
}

impl Outcome {
    fn new(table: Table, meta: Value, default_format: Format) -> Self {
        Self {
            table,
            meta,
            notes: Vec::new(),
            default_format,
            exit_code: 0,
        }
    }
}

fn base_meta<T: Serialize>(command: &str, global: &Global, options: &T) -> Value {
    serde_json::json!({
        "command": command,
        "global": global,
        "options": options,
    })
}

fn insert(meta: &mut Value, key: &str, value: impl Serialize) {
    if let Value::Object(map) = meta {
        map.insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
    }
}

pub fn dispatch(command: &Command, global: &Global, file: &Value) -> CliResult<Outcome> {
    match command {
        Command::Check(a) => check::run(&merge(a, file)?, global),
        Command::Spectrum(a) => spectrum::run(&merge(a, file)?, global),
        Command::Table1(a) => table1::run(&merge(a, file)?, global),
        Command::Radial(a) => radial::run(&merge(a, file)?, global),
        Command::Angular(a) => angular::run(&merge(a, file)?, global),
        Command::Density(a) => density::run(&merge(a, file)?, global),
    }
}
