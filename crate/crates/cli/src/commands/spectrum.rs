use dyon_core::spectrum::{enumerate_levels, min_allowed_l};

use super::{base_meta, insert, Outcome};
use crate::args::SpectrumArgs;
use crate::config::{resolve_system, Format, Global};
use crate::error::{CliError, CliResult};
use crate::output::Table;

pub fn run(args: &SpectrumArgs, global: &Global) -> CliResult<Outcome> {
    let (system, source) = resolve_system(&args.system, None, global)?;
    let np_max = args.np_max.unwrap_or(40);
    let l_min = min_allowed_l(&system)?;
    let levels = enumerate_levels(&system, np_max);
    if levels.is_empty() {
        return Err(CliError::Physics(format!(
            "no bound levels with n_p <= {np_max}: first allowed l is {l_min}"
        )));
    }
    let mut table = Table::new(&["N", "l", "n_p", "E", "E_binding", "degeneracy"]);
    for lv in &levels {
        table.push(vec![
            lv.n_radial.into(),
            lv.l.into(),
            lv.n_principal.into(),
            lv.energy.into(),
            lv.binding.into(),
            lv.degeneracy.into(),
        ]);
    }
    let mut meta = base_meta("spectrum", global, args);
    insert(&mut meta, "system", &source);
    insert(&mut meta, "mass", system.m_reduced);
    insert(&mut meta, "mass_unit", system.mass_unit);
    insert(&mut meta, "coupling", system.coupling());
    insert(&mut meta, "mu", system.mu);
    insert(&mut meta, "min_allowed_l", l_min);
    Ok(Outcome::new(table, meta, Format::Csv))
}
