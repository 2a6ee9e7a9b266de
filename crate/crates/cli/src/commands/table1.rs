use dyon_core::spectrum::{monopolonium_energy, nu_parameter};
use dyon_core::{Mass, MassUnit};

use super::{base_meta, insert, Outcome};
use crate::args::Table1Args;
use crate::config::{Format, Global};
use crate::error::CliResult;
use crate::output::Table;

/// Principal numbers of the table, `4.17 × 10^k` for `k = 1..=9`.
pub const PRINCIPAL_NUMBERS: [f64; 9] = [4.17e1, 4.17e2, 4.17e3, 4.17e4, 4.17e5, 4.17e6, 4.17e7, 4.17e8, 4.17e9];

/// Relative gap between the naive `m − E` and the stable binding energy
/// above which a row is flagged.
pub const NAIVE_FLAG_THRESHOLD: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Table1Row {
    pub n: f64,
    /// `m − E`, relativistic, evaluated without cancellation.
    pub relativistic: f64,
    pub nonrelativistic: f64,
    /// `m − m√(1 − s)` in plain double precision.
    pub naive: f64,
    pub flagged: bool,
}

/// Monopolonium binding energies (positive numbers) for mass `m`.
pub fn table1_rows(z: u32, l: f64, m: f64, alpha: f64) -> dyon_core::Result<Vec<Table1Row>> {
    let c = f64::from(z) / (4.0 * alpha);
    let nu = nu_parameter(l, c, 0.0)?;
    PRINCIPAL_NUMBERS
        .iter()
        .map(|&n| {
            let relativistic = -monopolonium_energy(z, n, l, m, alpha, true)?;
            let nonrelativistic = -monopolonium_energy(z, n, l, m, alpha, false)?;
            let shifted = nu + 0.5 + (n - l - 1.0);
            let s = c * c / (c * c + shifted * shifted);
            let naive = m - m * (1.0 - s).sqrt();
            let flagged = ((naive - relativistic) / relativistic).abs() > NAIVE_FLAG_THRESHOLD;
            Ok(Table1Row {
                n,
                relativistic,
                nonrelativistic,
                naive,
                flagged,
            })
        })
        .collect()
}

pub fn run(args: &Table1Args, global: &Global) -> CliResult<Outcome> {
    let mass = global.mass.unwrap_or(Mass::new(1e16, MassUnit::GeV));
    let z = args.z.unwrap_or(1);
    let l = args.l.unwrap_or(34.0);
    let rows = table1_rows(z, l, mass.value, global.alpha)?;
    let mut table = Table::new(&[
        "n",
        "binding_relativistic",
        "binding_nonrelativistic",
        "binding_naive_double",
        "precision_artifact",
    ]);
    let mut notes = Vec::new();
    for r in &rows {
        table.push(vec![r.n.into(), r.relativistic.into(), r.nonrelativistic.into(), r.naive.into(), r.flagged.into()]);
        if r.flagged {
            notes.push(format!(
                "n = {:e}: naive double-precision m - E = {:e} differs from the stable value {:e}",
                r.n, r.naive, r.relativistic
            ));
        }
    }
    let mut meta = base_meta("table1", global, args);
    insert(&mut meta, "mass", mass);
    insert(&mut meta, "energy_unit", mass.unit);
    insert(&mut meta, "coupling", f64::from(z) / (4.0 * global.alpha));
    let mut out = Outcome::new(table, meta, Format::Csv);
    out.notes = notes;
    Ok(out)
}
