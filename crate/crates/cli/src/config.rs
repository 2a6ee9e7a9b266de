//! Resolution of flags and config-file values into concrete settings.

use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{Map, Value};

use dyon_core::{
    preset_system, z4_pair_system, Convention, DyonCharge, DyonSystem, Mass, MassUnit,
    NucleusMass, Preset, UnitConvention, DEFAULT_ALPHA,
};

use crate::args::{ChargeArgs, GlobalArgs, PairArgs, SystemArgs};
use crate::charge_expr::{ChargeToken, Symbols};
use crate::error::{CliError, CliResult};

/// Largest grid accepted.
pub const MAX_GRID_COUNT: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub log: bool,
}

impl GridSpec {
    pub fn parse(s: &str) -> CliResult<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || CliError::Usage(format!("grid must be MIN:MAX:COUNT[:log|:lin], got `{s}`"));
        if parts.len() != 3 && parts.len() != 4 {
            return Err(bad());
        }
        let min: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let max: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
        let log = match parts.get(3).map(|p| p.trim()) {
            None | Some("lin") | Some("linear") => false,
            Some("log") => true,
            Some(_) => return Err(bad()),
        };
        if !(2..=MAX_GRID_COUNT).contains(&count) {
            return Err(CliError::Usage(format!(
                "grid count must lie in [2, {MAX_GRID_COUNT}], got {count}"
            )));
        }
        if !(min.is_finite() && max.is_finite() && min < max) || (log && min <= 0.0) {
            return Err(CliError::Usage(format!("invalid grid bounds in `{s}`")));
        }
        Ok(Self {
            min,
            max,
            count,
            log,
        })
    }

    pub fn points(&self) -> Vec<f64> {
        let n = self.count - 1;
        (0..self.count)
            .map(|i| {
                if i == n {
                    return self.max;
                }
                let t = i as f64 / n as f64;
                if self.log {
                    (self.min.ln() + t * (self.max.ln() - self.min.ln())).exp()
                } else {
                    self.min + t * (self.max - self.min)
                }
            })
            .collect()
    }
}

/// Global settings after merging flags with the config file.
#[derive(Debug, Clone, Serialize)]
pub struct Global {
    pub alpha: f64,
    pub convention: Option<Convention>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub mass: Option<Mass>,
    pub grid: Option<GridSpec>,
}

impl Global {
    pub fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

/// Reads the config file into a JSON object, or an empty one.
pub fn load_file(path: Option<&Path>) -> CliResult<Value> {
    let Some(path) = path else {
        return Ok(Value::Object(Map::new()));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("config {} is not valid JSON: {e}", path.display())))?;
    if !v.is_object() {
        return Err(CliError::Usage("config file must hold a JSON object".into()));
    }
    Ok(v)
}

/// Overlays the flags that were given onto the file values.
pub fn merge<T: Serialize + DeserializeOwned>(flags: &T, file: &Value) -> CliResult<T> {
    let mut merged = file.as_object().cloned().unwrap_or_default();
    let given = serde_json::to_value(flags)
        .map_err(|e| CliError::Usage(format!("cannot encode options: {e}")))?;
    if let Value::Object(map) = given {
        for (k, v) in map {
            if !v.is_null() {
                merged.insert(k, v);
            }
        }
    }
    serde_json::from_value(Value::Object(merged))
        .map_err(|e| CliError::Usage(format!("invalid option value: {e}")))
}

pub fn resolve_global(args: &GlobalArgs) -> CliResult<Global> {
    let alpha = args.alpha.unwrap_or(DEFAULT_ALPHA);
    if !(alpha > 0.0 && alpha < 0.1) {
        return Err(CliError::Usage(format!("--alpha must lie in (0, 0.1), got {alpha}")));
    }
    let convention = args
        .convention
        .as_deref()
        .map(str::parse::<Convention>)
        .transpose()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let format = match args.format.as_deref() {
        None => None,
        Some("csv") => Some(Format::Csv),
        Some("json") => Some(Format::Json),
        Some(other) => return Err(CliError::Usage(format!("unknown format `{other}`"))),
    };
    let mass = args
        .mass
        .as_deref()
        .map(str::parse::<Mass>)
        .transpose()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let grid = args.grid.as_deref().map(GridSpec::parse).transpose()?;
    Ok(Global {
        alpha,
        convention,
        format,
        out: args.out.clone(),
        mass,
        grid,
    })
}

fn charge(token: &Option<ChargeToken>, symbols: &Symbols) -> CliResult<f64> {
    match token {
        None => Ok(0.0),
        Some(t) => t.value(symbols).map_err(CliError::Usage),
    }
}

/// Charges of both particles in the given convention.
pub fn resolve_charges(args: &ChargeArgs, convention: &UnitConvention) -> CliResult<(DyonCharge, DyonCharge)> {
    let ec = convention.elementary_charges();
    let symbols = Symbols {
        e0: ec.e0,
        g0: ec.g0_z4,
        alpha: convention.alpha,
    };
    Ok((
        DyonCharge::new(charge(&args.e1, &symbols)?, charge(&args.g1, &symbols)?),
        DyonCharge::new(charge(&args.e2, &symbols)?, charge(&args.g2, &symbols)?),
    ))
}

/// Where the system came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum SystemSource {
    Preset { preset: Preset, z: u32 },
    Charges { nucleus: DyonCharge, orbiter: DyonCharge },
    Z4Pair { nr: i32, ns: i32 },
}

/// Builds the two-body system from exactly one source: a preset, explicit
/// charges, or a Z4 pair.
pub fn resolve_system(
    args: &SystemArgs,
    pair: Option<&PairArgs>,
    global: &Global,
) -> CliResult<(DyonSystem, SystemSource)> {
    let has_pair = pair.is_some_and(|p| p.nr.is_some() || p.ns.is_some());
    let sources = [args.preset.is_some(), args.charges.any(), has_pair];
    match sources.iter().filter(|s| **s).count() {
        0 => return Err(CliError::Usage("no system given: use --preset, --e1/--g1/--e2/--g2 or --nr/--ns".into())),
        1 => {}
        _ => return Err(CliError::Usage("give exactly one of --preset, explicit charges or --nr/--ns".into())),
    }
    if args.z.is_some() && args.preset.is_none() {
        return Err(CliError::Usage("--Z only applies to presets".into()));
    }
    if let Some(name) = &args.preset {
        let preset: Preset = name.parse().map_err(|e: dyon_core::Error| CliError::Usage(e.to_string()))?;
        if let Some(c) = global.convention {
            if c != preset.convention_kind() {
                return Err(CliError::Usage(format!(
                    "preset {preset} is defined in the {} convention",
                    preset.convention_kind()
                )));
            }
        }
        let mass = global.mass.unwrap_or_else(|| preset.default_mass());
        let z = args.z.unwrap_or(1);
        let m1 = nucleus_mass(args, mass)?;
        let sys = preset_system(preset, z, mass, m1, global.alpha)?;
        return Ok((sys, SystemSource::Preset { preset, z }));
    }
    let mass = global.mass.unwrap_or(Mass::new(1.0, MassUnit::Natural));
    let m1 = nucleus_mass(args, mass)?;
    if let Some(p) = pair.filter(|_| has_pair) {
        let (Some(nr), Some(ns)) = (p.nr, p.ns) else {
            return Err(CliError::Usage("--nr and --ns must be given together".into()));
        };
        if global.convention == Some(Convention::Gaussian) {
            return Err(CliError::Usage("--nr/--ns pairs are defined in the hl convention".into()));
        }
        let mut sys = z4_pair_system(nr, ns, mass, global.alpha)?;
        if m1 != NucleusMass::Infinite {
            sys = DyonSystem::new(sys.nucleus, sys.orbiter, m1, sys.m2, sys.mass_unit, sys.convention)?;
        }
        return Ok((sys, SystemSource::Z4Pair { nr, ns }));
    }
    let convention = UnitConvention::new(
        global.convention.unwrap_or(Convention::HeavisideLorentz),
        global.alpha,
    )?;
    let (nucleus, orbiter) = resolve_charges(&args.charges, &convention)?;
    let sys = DyonSystem::new(nucleus, orbiter, m1, mass.value, mass.unit, convention)?;
    Ok((sys, SystemSource::Charges { nucleus, orbiter }))
}

fn nucleus_mass(args: &SystemArgs, m2: Mass) -> CliResult<NucleusMass> {
    let Some(text) = &args.m1 else {
        return Ok(NucleusMass::Infinite);
    };
    let m1: Mass = text.parse().map_err(|e: dyon_core::Error| CliError::Usage(e.to_string()))?;
    let v = m1.to_unit(m2.unit).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(NucleusMass::Finite(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g = GridSpec::parse("1:100:3:log").unwrap();
        let p = g.points();
        assert_eq!(p.len(), 3);
        assert!((p[1] - 10.0).abs() < 1e-12);
        assert_eq!(GridSpec::parse("0:1:5").unwrap().points()[4], 1.0);
        for bad in ["1:2", "2:1:5", "0:1:5:log", "0:1:1", "a:b:c", "0:1:3:cubic"] {
            assert!(GridSpec::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn flags_override_file() {
        let file: Value = serde_json::json!({"alpha": 0.005, "mass": "1GeV"});
        let flags = GlobalArgs {
            mass: Some("2MeV".into()),
            ..Default::default()
        };
        let merged = merge(&flags, &file).unwrap();
        assert_eq!(merged.alpha, Some(0.005));
        assert_eq!(merged.mass.as_deref(), Some("2MeV"));
    }
}
