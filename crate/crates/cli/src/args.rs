//! Command-line and config-file options.
//!
//! Every option struct doubles as the schema of the JSON config file: keys
//! are the long flag names (`np-max`, `Z`, `e1`, ...). Flags given on the
//! command line override values from the file.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::charge_expr::ChargeToken;

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Parser)]
#[command(name = "dyonkg", version, about = "Klein-Gordon bound states of two dyons")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct GlobalArgs {
    /// Fine-structure constant
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    /// Unit convention for charges: hl or gaussian
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
    /// Output format: csv or json
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    /// Output file (stdout when absent)
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    /// Orbiter mass, e.g. 139.577MeV, 1e16GeV or 1natural
    #[arg(long, global = true, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mass: Option<String>,
    /// Sample grid MIN:MAX:COUNT[:log|:lin]
    #[arg(long, global = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<String>,
    /// JSON config file whose keys mirror the long flags
    #[arg(long, global = true)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check charge quantization conditions
    Check(CheckArgs),
    /// Tabulate bound-state energies
    Spectrum(SpectrumArgs),
    /// Monopolonium binding energies over principal numbers 4.17e1 .. 4.17e9
    Table1(Table1Args),
    /// Normalized radial function on a grid
    Radial(RadialArgs),
    /// Normalized angular density |Y|^2 on a grid
    Angular(AngularArgs),
    /// Radial charge density profile
    Density(DensityArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Check(_) => "check",
            Self::Spectrum(_) => "spectrum",
            Self::Table1(_) => "table1",
            Self::Radial(_) => "radial",
            Self::Angular(_) => "angular",
            Self::Density(_) => "density",
        }
    }
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct ChargeArgs {
    /// Electric charge of the nucleus (symbolic, e.g. e0)
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e1: Option<ChargeToken>,
    /// Magnetic charge of the nucleus (symbolic, e.g. 2pi/e0)
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g1: Option<ChargeToken>,
    /// Electric charge of the orbiter
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e2: Option<ChargeToken>,
    /// Magnetic charge of the orbiter
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g2: Option<ChargeToken>,
}

impl ChargeArgs {
    pub fn any(&self) -> bool {
        self.e1.is_some() || self.g1.is_some() || self.e2.is_some() || self.g2.is_some()
    }
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct CheckArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub charges: ChargeArgs,
    /// Condition to enforce: so2, z4, schwinger or dirac
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct SystemArgs {
    /// Named system: dyon_z, pionic, hydrogen or monopolonium
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    /// Nuclear charge number for presets
    #[arg(long = "Z")]
    #[serde(rename = "Z", skip_serializing_if = "Option::is_none")]
    pub z: Option<u32>,
    #[command(flatten)]
    #[serde(flatten)]
    pub charges: ChargeArgs,
    /// Nucleus mass (same unit as --mass); infinite when absent
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m1: Option<String>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct PairArgs {
    /// Z4 pair: nucleus charges (e0, 2pi nr/e0)
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nr: Option<i32>,
    /// Z4 pair: orbiter charges (e0, 2pi ns/e0)
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ns: Option<i32>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct SpectrumArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub system: SystemArgs,
    /// Largest principal number N + l + 1 to list
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub np_max: Option<u32>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct Table1Args {
    /// Monopole charge number
    #[arg(long = "Z")]
    #[serde(rename = "Z", skip_serializing_if = "Option::is_none")]
    pub z: Option<u32>,
    /// Angular momentum
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<f64>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct RadialArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub system: SystemArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub pair: PairArgs,
    /// Angular momentum (required)
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<f64>,
    /// Radial quantum number (default 0)
    #[arg(long = "N")]
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    /// Azimuthal number, used only for the admissibility report
    #[arg(long = "K", allow_hyphen_values = true)]
    #[serde(rename = "K", skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct AngularArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub system: SystemArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub pair: PairArgs,
    /// Monopole parameter g/4pi, instead of a system
    #[arg(long, allow_hyphen_values = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    /// Angular momentum (required)
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<f64>,
    /// Azimuthal number K (default 0)
    #[arg(long = "K", allow_hyphen_values = true)]
    #[serde(rename = "K", skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    /// Fail instead of moving (l, K) onto the nearest admissible values
    #[arg(long)]
    #[serde(skip_serializing_if = "is_false")]
    pub strict: bool,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct DensityArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub system: SystemArgs,
    /// Angular momentum (required)
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<f64>,
    /// Radial quantum number (default 0)
    #[arg(long = "N")]
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    /// Azimuthal number (default 0)
    #[arg(long = "K", allow_hyphen_values = true)]
    #[serde(rename = "K", skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    /// charge (total equals the orbiter charge) or l2
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalization: Option<String>,
    /// Emit the dyon_z (l=34, N=0) and pionic (l=0, N=0) profiles together
    #[arg(long)]
    #[serde(skip_serializing_if = "is_false")]
    pub compare: bool,
}
