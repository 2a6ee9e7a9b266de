use dyon_core::density::{default_r_grid, radial_density_profile, DensityProfile};
use dyon_core::{
    preset_system, BoundState, DyonSystem, Mass, MassUnit, Normalization, NucleusMass, Preset,
    QuantumNumbers,
};

use super::{base_meta, insert, Outcome};
use crate::args::DensityArgs;
use crate::config::{resolve_system, Format, Global};
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Table};

pub const DEFAULT_COUNT: usize = 2000;

fn profile(
    system: &DyonSystem,
    qn: QuantumNumbers,
    normalization: Normalization,
    global: &Global,
) -> CliResult<(BoundState, DensityProfile)> {
    let state = BoundState::bound(system, qn)?;
    let grid = match &global.grid {
        Some(g) => g.points(),
        None => default_r_grid(&state, DEFAULT_COUNT),
    };
    if grid.iter().any(|r| *r <= 0.0) {
        return Err(CliError::Usage("radial grid must be positive".into()));
    }
    let p = radial_density_profile(&state, &grid, normalization)?;
    Ok((state, p))
}

fn push_rows(table: &mut Table, label: Option<&str>, p: &DensityProfile, fm: Option<f64>) {
    for i in 0..p.r_grid.len() {
        let mut row: Vec<Cell> = Vec::with_capacity(6);
        if let Some(l) = label {
            row.push(l.into());
        }
        row.push(p.r_grid[i].into());
        if let Some(f) = fm {
            row.push((p.r_grid[i] * f).into());
        }
        row.extend([p.values[i].into(), p.pe[i].into(), p.pg[i].into()]);
        table.push(row);
    }
}

fn columns(labelled: bool, physical: bool) -> Vec<&'static str> {
    let mut c = Vec::new();
    if labelled {
        c.push("system");
    }
    c.push("r_natural");
    if physical {
        c.push("r_fm");
    }
    c.extend(["P_r_per_unit_charge", "Pe", "Pg"]);
    c
}

fn summary(p: &DensityProfile, fm: Option<f64>) -> serde_json::Value {
    serde_json::json!({
        "energy": p.energy,
        "b": p.b,
        "peak_radius": p.peak_radius,
        "peak_radius_fm": fm.map(|f| p.peak_radius * f),
        "total": p.total,
        "normalization": p.normalization,
    })
}

pub fn run(args: &DensityArgs, global: &Global) -> CliResult<Outcome> {
    let normalization: Normalization = match args.normalization.as_deref() {
        None => Normalization::Charge,
        Some(s) => s.parse().map_err(|e: dyon_core::Error| CliError::Usage(e.to_string()))?,
    };
    if args.compare {
        return compare(args, normalization, global);
    }
    let (system, source) = resolve_system(&args.system, None, global)?;
    let l = args.l.ok_or_else(|| CliError::Usage("density needs --l".into()))?;
    let qn = QuantumNumbers::new(args.n.unwrap_or(0), l, args.k.unwrap_or(0.0));
    let (_, p) = profile(&system, qn, normalization, global)?;
    let fm = system.mass_unit.fm_per_inverse_unit();
    let mut table = Table::new(&columns(false, fm.is_some()));
    push_rows(&mut table, None, &p, fm);
    let mut meta = base_meta("density", global, args);
    insert(&mut meta, "system", &source);
    insert(&mut meta, "profile", summary(&p, fm));
    let mut out = Outcome::new(table, meta, Format::Csv);
    out.notes.push(match fm {
        Some(f) => format!("peak radius {:.6e} fm", p.peak_radius * f),
        None => format!("peak radius {:.6e} (natural units)", p.peak_radius),
    });
    Ok(out)
}

fn compare(args: &DensityArgs, normalization: Normalization, global: &Global) -> CliResult<Outcome> {
    if args.system.preset.is_some() || args.system.charges.any() || args.l.is_some() || args.n.is_some() {
        return Err(CliError::Usage("--compare fixes the systems and quantum numbers".into()));
    }
    let mass = global.mass.unwrap_or(Mass::new(139.577, MassUnit::MeV));
    let fm = mass.unit.fm_per_inverse_unit();
    let mut table = Table::new(&columns(true, fm.is_some()));
    let mut meta = base_meta("density", global, args);
    let mut notes = Vec::new();
    let mut peaks = Vec::new();
    for (preset, l) in [(Preset::DyonZ, 34.0), (Preset::Pionic, 0.0)] {
        let system = preset_system(preset, 1, mass, NucleusMass::Infinite, global.alpha)?;
        let (_, p) = profile(&system, QuantumNumbers::new(0, l, 0.0), normalization, global)?;
        let name = preset.to_string();
        push_rows(&mut table, Some(&name), &p, fm);
        insert(&mut meta, &name, summary(&p, fm));
        notes.push(format!(
            "{name} (l = {l}, N = 0): peak radius {:.6e}{}",
            p.peak_radius * fm.unwrap_or(1.0),
            if fm.is_some() { " fm" } else { "" }
        ));
        peaks.push(p.peak_radius);
    }
    let ratio = peaks[1] / peaks[0];
    insert(&mut meta, "peak_ratio_pionic_over_dyon", ratio);
    insert(&mut meta, "dyon_closer", peaks[0] < peaks[1]);
    notes.push(format!("pionic / dyon peak ratio {ratio:.6}"));
    let mut out = Outcome::new(table, meta, Format::Csv);
    out.notes = notes;
    Ok(out)
}
