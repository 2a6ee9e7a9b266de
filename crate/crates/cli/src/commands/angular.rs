use std::f64::consts::PI;

use dyon_core::wavefunc::DIRAC_STRING_DELTA;
use dyon_core::AngularParams;

use super::{base_meta, insert, Outcome};
use crate::args::AngularArgs;
use crate::config::{resolve_system, Format, Global};
use crate::error::{CliError, CliResult};
use crate::output::Table;

pub const DEFAULT_COUNT: usize = 2000;

const EPS: f64 = 1e-9;

/// Nearest `(l, K)` with `l − |μ|` a non-negative integer and `K` on the unit
/// ladder from `−l` to `l`. Ties in `K` go upward.
pub fn snap_to_admissible(mu: f64, l: f64, k: f64) -> (f64, f64) {
    let m = mu.abs();
    let l_new = if (l - m - (l - m).round()).abs() <= EPS && l >= m - EPS {
        l
    } else {
        m + (l - m).round().max(0.0)
    };
    let k_new = if (k + l_new - (k + l_new).round()).abs() <= EPS && k.abs() <= l_new + EPS {
        k
    } else {
        -l_new + (k + l_new + 0.5).floor().clamp(0.0, 2.0 * l_new)
    };
    (l_new, k_new)
}

pub fn run(args: &AngularArgs, global: &Global) -> CliResult<Outcome> {
    let (mu, source) = match args.mu {
        Some(mu) => {
            if args.system.preset.is_some() || args.system.charges.any() || args.pair.nr.is_some() || args.pair.ns.is_some() {
                return Err(CliError::Usage("--mu cannot be combined with a system".into()));
            }
            (mu, serde_json::json!({"source": "mu", "mu": mu}))
        }
        None => {
            let (sys, src) = resolve_system(&args.system, Some(&args.pair), global)?;
            (sys.mu, serde_json::to_value(src).unwrap_or_default())
        }
    };
    let l = args.l.ok_or_else(|| CliError::Usage("angular needs --l".into()))?;
    let k = args.k.unwrap_or(0.0);
    let (l_used, k_used) = snap_to_admissible(mu, l, k);
    let mut notes = Vec::new();
    if l_used != l || k_used != k {
        let msg = format!(
            "(l, K) = ({l}, {k}) is not admissible for mu = {mu}; nearest admissible is ({l_used}, {k_used})"
        );
        if args.strict {
            return Err(CliError::Physics(msg));
        }
        notes.push(format!("{msg}; using it"));
    }
    let ap = AngularParams::new(mu, l_used, k_used)?;
    if !ap.is_single_valued() {
        notes.push(format!("k = K + mu = {} is not an integer: Y is not single-valued in phi", ap.k));
    }
    let grid = match &global.grid {
        Some(g) => g.points(),
        None => {
            let (lo, hi) = (DIRAC_STRING_DELTA, PI - DIRAC_STRING_DELTA);
            (0..DEFAULT_COUNT)
                .map(|i| if i + 1 == DEFAULT_COUNT { hi } else { lo + (hi - lo) * i as f64 / (DEFAULT_COUNT - 1) as f64 })
                .collect()
        }
    };
    let mut table = Table::new(&["theta", "Y2"]);
    let mut max_y2 = 0.0f64;
    let mut argmax = grid[0];
    for &t in &grid {
        let y2 = ap.eval(t, 0.0, true)?.norm_sqr();
        if y2 > max_y2 {
            max_y2 = y2;
            argmax = t;
        }
        table.push(vec![t.into(), y2.into()]);
    }
    let mut meta = base_meta("angular", global, args);
    insert(&mut meta, "system", source);
    insert(&mut meta, "l_used", l_used);
    insert(&mut meta, "K_used", k_used);
    insert(&mut meta, "angular", ap);
    insert(&mut meta, "max_Y2", max_y2);
    insert(&mut meta, "theta_at_max", argmax);
    insert(&mut meta, "single_valued", ap.is_single_valued());
    insert(&mut meta, "notes", &notes);
    let mut out = Outcome::new(table, meta, Format::Csv);
    out.notes = notes;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snapping() {
        assert_eq!(snap_to_admissible(0.0, 3.0, 1.0), (3.0, 1.0));
        assert_eq!(snap_to_admissible(-2.5, 100.0, 0.0), (100.5, 0.5));
        assert_eq!(snap_to_admissible(1.5, 0.0, 0.0), (1.5, 0.5));
        assert_eq!(snap_to_admissible(0.0, 2.0, 5.0), (2.0, 2.0));
        assert_eq!(snap_to_admissible(0.5, 2.0, -3.0), (2.5, -2.5));
    }
}
