use dyon_core::density::log_grid;
use dyon_core::spectrum::{energy, validate_quantum_numbers, Branch, Violation};
use dyon_core::{QuantumNumbers, RadialParams};

use super::{base_meta, insert, Outcome};
use crate::args::RadialArgs;
use crate::config::{resolve_system, Format, Global};
use crate::error::{CliError, CliResult};
use crate::output::Table;

/// Points of the default radial grid.
pub const DEFAULT_COUNT: usize = 2000;

pub fn run(args: &RadialArgs, global: &Global) -> CliResult<Outcome> {
    let (system, source) = resolve_system(&args.system, Some(&args.pair), global)?;
    let l = args.l.ok_or_else(|| CliError::Usage("radial needs --l".into()))?;
    let n = args.n.unwrap_or(0);
    let qn = QuantumNumbers::new(n, l, args.k.unwrap_or(0.0));
    let mut warnings = Vec::new();
    if let Err(violations) = validate_quantum_numbers(&system, &qn) {
        for v in &violations {
            if let Violation::ImaginaryNu { .. } = v {
                return Err(CliError::Physics(v.to_string()));
            }
            warnings.push(format!("angular constraint ignored for the radial curve: {v}"));
        }
    }
    let branch = Branch::bound_for(system.coupling());
    let level = energy(&system, n, l, branch)?;
    let rp = RadialParams::from_energy(n, &level)?.normalize()?;
    let grid = match &global.grid {
        Some(g) => g.points(),
        None => log_grid(1e-3 / rp.b, rp.z_cutoff().max(30.0) / rp.b, DEFAULT_COUNT),
    };
    let fm = system.mass_unit.fm_per_inverse_unit();
    let mut table = Table::new(if fm.is_some() {
        &["r_natural", "r_fm", "R"]
    } else {
        &["r_natural", "R"]
    });
    let mut nodes = 0u32;
    let mut last = 0.0f64;
    for &r in &grid {
        let v = rp.eval(r, true)?;
        if v != 0.0 {
            if last != 0.0 && v.signum() != last.signum() {
                nodes += 1;
            }
            last = v;
        }
        let mut row = vec![r.into()];
        if let Some(f) = fm {
            row.push((r * f).into());
        }
        row.push(v.into());
        table.push(row);
    }
    let mut meta = base_meta("radial", global, args);
    insert(&mut meta, "system", &source);
    insert(&mut meta, "mu", system.mu);
    insert(&mut meta, "coupling", system.coupling());
    insert(&mut meta, "energy", level);
    insert(&mut meta, "radial", rp);
    insert(&mut meta, "sign_changes_on_grid", nodes);
    insert(&mut meta, "warnings", &warnings);
    let mut out = Outcome::new(table, meta, Format::Csv);
    out.notes = warnings;
    Ok(out)
}
