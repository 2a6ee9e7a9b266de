use dyon_core::{check_quantization, quantization_holds, QuantizationMode, UnitConvention};

use super::{base_meta, insert, Outcome};
use crate::args::CheckArgs;
use crate::config::{resolve_charges, Format, Global};
use crate::error::{CliError, CliResult};
use crate::output::Table;

pub fn run(args: &CheckArgs, global: &Global) -> CliResult<Outcome> {
    let c = &args.charges;
    if c.e1.is_none() || c.g1.is_none() || c.e2.is_none() || c.g2.is_none() {
        return Err(CliError::Usage("check needs --e1, --g1, --e2 and --g2".into()));
    }
    let mode: QuantizationMode = args
        .mode
        .as_deref()
        .unwrap_or("z4")
        .parse()
        .map_err(|e: dyon_core::Error| CliError::Usage(e.to_string()))?;
    let convention = UnitConvention::new(
        global.convention.unwrap_or(dyon_core::Convention::HeavisideLorentz),
        global.alpha,
    )?;
    let (d1, d2) = resolve_charges(c, &convention)?;
    let mut table = Table::new(&["mode", "condition", "n", "is_integer"]);
    let mut passes = serde_json::Map::new();
    for m in QuantizationMode::ALL {
        let checks = check_quantization(d1, d2, m, &convention);
        passes.insert(m.to_string(), quantization_holds(&checks).into());
        for ch in checks {
            table.push(vec![m.to_string().as_str().into(), ch.label.as_str().into(), ch.n.into(), ch.is_integer.into()]);
        }
    }
    let pass = passes[&mode.to_string()].as_bool().unwrap_or(false);
    let mut meta = base_meta("check", global, args);
    insert(&mut meta, "nucleus", d1);
    insert(&mut meta, "orbiter", d2);
    insert(&mut meta, "requested_mode", mode.to_string());
    insert(&mut meta, "pass", pass);
    insert(&mut meta, "passes", passes);
    let mut out = Outcome::new(table, meta, Format::Json);
    out.notes.push(format!("{mode} condition {}", if pass { "holds" } else { "fails" }));
    if !pass {
        out.exit_code = 1;
    }
    Ok(out)
}
