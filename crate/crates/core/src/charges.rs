//! Dyon charges, quantization conditions, unit conventions and presets.
//!
//! Charges are stored in the natural units of their [`UnitConvention`].
//! Anything that compares across conventions goes through
//! [`UnitConvention::to_heaviside_lorentz`], which applies
//! `e → √(4π) e`, `g → √(4π) g` to Gaussian charges.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// CODATA fine-structure constant.
pub const DEFAULT_ALPHA: f64 = 7.2973525693e-3;

/// Relative tolerance used to decide whether an implied quantum is integral.
pub const INTEGER_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DyonCharge {
    pub e: f64,
    pub g: f64,
}

impl DyonCharge {
    pub const fn new(e: f64, g: f64) -> Self {
        Self { e, g }
    }

    pub fn scaled(self, factor: f64) -> Self {
        Self::new(self.e * factor, self.g * factor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    HeavisideLorentz,
    Gaussian,
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hl" | "heaviside_lorentz" | "heaviside-lorentz" | "heavisidelorentz" => {
                Ok(Self::HeavisideLorentz)
            }
            "gaussian" | "gauss" => Ok(Self::Gaussian),
            other => Err(Error::DomainError(format!("unknown unit convention `{other}`"))),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::HeavisideLorentz => "hl",
            Self::Gaussian => "gaussian",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitConvention {
    pub kind: Convention,
    pub alpha: f64,
}

/// Elementary charges of a convention.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ElementaryCharges {
    pub e0: f64,
    /// Smallest magnetic charge allowed by the Dirac condition.
    pub g0_dirac: f64,
    /// Magnetic charge with `e0 · g0 = 2π` in Heaviside–Lorentz units.
    pub g0_z4: f64,
}

impl UnitConvention {
    pub fn new(kind: Convention, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 0.1) {
            return Err(Error::DomainError(format!(
                "fine-structure constant must lie in (0, 0.1), got {alpha}"
            )));
        }
        Ok(Self { kind, alpha })
    }

    pub fn heaviside_lorentz() -> Self {
        Self {
            kind: Convention::HeavisideLorentz,
            alpha: DEFAULT_ALPHA,
        }
    }

    pub fn gaussian() -> Self {
        Self {
            kind: Convention::Gaussian,
            alpha: DEFAULT_ALPHA,
        }
    }

    /// Factor that maps a charge of this convention onto Heaviside–Lorentz.
    pub fn to_heaviside_lorentz(&self) -> f64 {
        match self.kind {
            Convention::HeavisideLorentz => 1.0,
            Convention::Gaussian => (4.0 * PI).sqrt(),
        }
    }

    pub fn elementary_charges(&self) -> ElementaryCharges {
        match self.kind {
            Convention::HeavisideLorentz => {
                let e0 = (4.0 * PI * self.alpha).sqrt();
                ElementaryCharges {
                    e0,
                    g0_dirac: 2.0 * PI / e0,
                    g0_z4: 2.0 * PI / e0,
                }
            }
            Convention::Gaussian => {
                let e0 = self.alpha.sqrt();
                ElementaryCharges {
                    e0,
                    g0_dirac: 1.0 / (2.0 * e0),
                    g0_z4: 1.0 / (2.0 * e0),
                }
            }
        }
    }
}

impl Default for UnitConvention {
    fn default() -> Self {
        Self::heaviside_lorentz()
    }
}

/// Effective charges `(q, g) = (e₁e₂ + g₁g₂, e₂g₁ − e₁g₂)` of the relative motion.
pub fn effective_charges(d1: DyonCharge, d2: DyonCharge) -> (f64, f64) {
    (d1.e * d2.e + d1.g * d2.g, d2.e * d1.g - d1.e * d2.g)
}

/// Duality-group flavour of the charge quantization condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuantizationMode {
    /// `e_r g_s − e_s g_r = 4π n_rs`
    So2,
    /// `e_r g_s = 2π n_rs` for every ordered pair
    Z4,
    /// `e₂g₁ − e₁g₂ = 2π n`
    SchwingerNr,
    /// `e g = 2π n` between one particle's electric and the other's magnetic charge
    Dirac,
}

impl QuantizationMode {
    pub const ALL: [Self; 4] = [Self::So2, Self::Z4, Self::SchwingerNr, Self::Dirac];
}

impl FromStr for QuantizationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "so2" => Ok(Self::So2),
            "z4" => Ok(Self::Z4),
            "schwinger" | "schwingernr" | "schwinger_nr" | "nr" => Ok(Self::SchwingerNr),
            "dirac" => Ok(Self::Dirac),
            other => Err(Error::DomainError(format!("unknown quantization mode `{other}`"))),
        }
    }
}

impl fmt::Display for QuantizationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::So2 => "so2",
            Self::Z4 => "z4",
            Self::SchwingerNr => "schwinger_nr",
            Self::Dirac => "dirac",
        })
    }
}

/// One constraint of a quantization condition with its implied quantum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuantizationCheck {
    pub label: String,
    pub n: f64,
    pub is_integer: bool,
}

impl QuantizationCheck {
    fn new(label: &str, n: f64) -> Self {
        let nearest = n.round();
        Self {
            label: label.to_string(),
            n,
            is_integer: (n - nearest).abs() <= INTEGER_TOLERANCE * n.abs().max(1.0),
        }
    }
}

/// Implied quanta for the chosen condition. Violations are reported through
/// `is_integer`, never as errors.
pub fn check_quantization(
    d1: DyonCharge,
    d2: DyonCharge,
    mode: QuantizationMode,
    convention: &UnitConvention,
) -> Vec<QuantizationCheck> {
    let f = convention.to_heaviside_lorentz();
    let (a, b) = (d1.scaled(f), d2.scaled(f));
    let two_pi = 2.0 * PI;
    match mode {
        QuantizationMode::So2 => vec![QuantizationCheck::new(
            "e1*g2 - e2*g1 = 4pi n12",
            (a.e * b.g - b.e * a.g) / (2.0 * two_pi),
        )],
        QuantizationMode::Z4 => vec![
            QuantizationCheck::new("e1*g1 = 2pi n11", a.e * a.g / two_pi),
            QuantizationCheck::new("e1*g2 = 2pi n12", a.e * b.g / two_pi),
            QuantizationCheck::new("e2*g1 = 2pi n21", b.e * a.g / two_pi),
            QuantizationCheck::new("e2*g2 = 2pi n22", b.e * b.g / two_pi),
        ],
        QuantizationMode::SchwingerNr => vec![QuantizationCheck::new(
            "e2*g1 - e1*g2 = 2pi n",
            (b.e * a.g - a.e * b.g) / two_pi,
        )],
        QuantizationMode::Dirac => vec![
            QuantizationCheck::new("e1*g2 = 2pi n", a.e * b.g / two_pi),
            QuantizationCheck::new("e2*g1 = 2pi n", b.e * a.g / two_pi),
        ],
    }
}

/// True when every constraint of the mode holds.
pub fn quantization_holds(checks: &[QuantizationCheck]) -> bool {
    checks.iter().all(|c| c.is_integer)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MassUnit {
    #[serde(rename = "MeV")]
    MeV,
    #[serde(rename = "GeV")]
    GeV,
    #[serde(rename = "natural")]
    Natural,
}

/// ħc in MeV·fm.
pub const HBAR_C_MEV_FM: f64 = 197.326_980_4;

impl MassUnit {
    /// Femtometres per inverse mass unit, if the unit is physical.
    pub fn fm_per_inverse_unit(self) -> Option<f64> {
        match self {
            Self::MeV => Some(HBAR_C_MEV_FM),
            Self::GeV => Some(HBAR_C_MEV_FM / 1000.0),
            Self::Natural => None,
        }
    }
}

impl fmt::Display for MassUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::MeV => "MeV",
            Self::GeV => "GeV",
            Self::Natural => "natural",
        })
    }
}

/// A mass with its unit, parsed from strings like `139.577MeV`, `1e16 GeV`
/// or `1natural`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mass {
    pub value: f64,
    pub unit: MassUnit,
}

impl Mass {
    pub const fn new(value: f64, unit: MassUnit) -> Self {
        Self { value, unit }
    }

    pub fn to_unit(self, unit: MassUnit) -> Result<f64> {
        let factor = match (self.unit, unit) {
            (a, b) if a == b => 1.0,
            (MassUnit::MeV, MassUnit::GeV) => 1e-3,
            (MassUnit::GeV, MassUnit::MeV) => 1e3,
            (a, b) => {
                return Err(Error::DomainError(format!(
                    "cannot convert a mass in {a} to {b}"
                )))
            }
        };
        Ok(self.value * factor)
    }
}

impl FromStr for Mass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num, unit) = if let Some(v) = s.strip_suffix("MeV") {
            (v, MassUnit::MeV)
        } else if let Some(v) = s.strip_suffix("GeV") {
            (v, MassUnit::GeV)
        } else if let Some(v) = s.strip_suffix("natural") {
            (v, MassUnit::Natural)
        } else {
            (s, MassUnit::Natural)
        };
        let value: f64 = num
            .trim()
            .parse()
            .map_err(|_| Error::DomainError(format!("malformed mass `{s}`")))?;
        if !(value > 0.0) || !value.is_finite() {
            return Err(Error::DomainError(format!("mass must be positive, got `{s}`")));
        }
        Ok(Self { value, unit })
    }
}

impl fmt::Display for Mass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, self.unit)
    }
}

/// Nucleus mass; `Infinite` pins the reduced mass to the orbiter mass.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum NucleusMass {
    Finite(f64),
    Infinite,
}

/// Two dyons bound by their effective charges.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DyonSystem {
    pub nucleus: DyonCharge,
    pub orbiter: DyonCharge,
    pub m1: NucleusMass,
    pub m2: f64,
    pub mass_unit: MassUnit,
    pub q_eff: f64,
    pub g_eff: f64,
    /// Monopole parameter `g/4π` of the Heaviside–Lorentz effective charge.
    pub mu: f64,
    pub m_reduced: f64,
    pub convention: UnitConvention,
}

impl DyonSystem {
    pub fn new(
        nucleus: DyonCharge,
        orbiter: DyonCharge,
        m1: NucleusMass,
        m2: f64,
        mass_unit: MassUnit,
        convention: UnitConvention,
    ) -> Result<Self> {
        if ![nucleus.e, nucleus.g, orbiter.e, orbiter.g]
            .iter()
            .all(|c| c.is_finite())
        {
            return Err(Error::DomainError("charges must be finite".into()));
        }
        if !(m2 > 0.0) || !m2.is_finite() {
            return Err(Error::DomainError(format!("orbiter mass must be positive, got {m2}")));
        }
        let m_reduced = match m1 {
            NucleusMass::Infinite => m2,
            NucleusMass::Finite(m1) if m1 > 0.0 && m1.is_finite() => m1 * m2 / (m1 + m2),
            NucleusMass::Finite(m1) => {
                return Err(Error::DomainError(format!(
                    "nucleus mass must be positive, got {m1}"
                )))
            }
        };
        let (q_eff, g_eff) = effective_charges(nucleus, orbiter);
        let f2 = convention.to_heaviside_lorentz().powi(2);
        Ok(Self {
            nucleus,
            orbiter,
            m1,
            m2,
            mass_unit,
            q_eff,
            g_eff,
            mu: g_eff * f2 / (4.0 * PI),
            m_reduced,
            convention,
        })
    }

    /// Coulomb strength `q/4π` of the Heaviside–Lorentz effective charge;
    /// the scalar potential is `A⁰ = coupling / r`.
    pub fn coupling(&self) -> f64 {
        self.q_eff * self.convention.to_heaviside_lorentz().powi(2) / (4.0 * PI)
    }

    /// Orbiter charges mapped to Heaviside–Lorentz units.
    pub fn orbiter_hl(&self) -> DyonCharge {
        self.orbiter.scaled(self.convention.to_heaviside_lorentz())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    DyonZ,
    Pionic,
    Hydrogen,
    Monopolonium,
}

impl Preset {
    pub const ALL: [Self; 4] = [Self::DyonZ, Self::Pionic, Self::Hydrogen, Self::Monopolonium];

    /// Orbiter mass used when none is given.
    pub fn default_mass(self) -> Mass {
        match self {
            Self::DyonZ | Self::Pionic => Mass::new(139.577, MassUnit::MeV),
            Self::Hydrogen => Mass::new(0.510_998_95, MassUnit::MeV),
            Self::Monopolonium => Mass::new(1e16, MassUnit::GeV),
        }
    }

    pub fn convention_kind(self) -> Convention {
        match self {
            Self::Monopolonium => Convention::Gaussian,
            _ => Convention::HeavisideLorentz,
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "dyon_z" | "dyonz" | "dyon" => Ok(Self::DyonZ),
            "pionic" | "pion" => Ok(Self::Pionic),
            "hydrogen" => Ok(Self::Hydrogen),
            "monopolonium" => Ok(Self::Monopolonium),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::DyonZ => "dyon_z",
            Self::Pionic => "pionic",
            Self::Hydrogen => "hydrogen",
            Self::Monopolonium => "monopolonium",
        })
    }
}

/// Builds one of the named systems with `z` elementary charges on the nucleus.
///
/// `alpha` overrides the fine-structure constant; the convention is fixed by
/// the preset (Gaussian for monopolonium, Heaviside–Lorentz otherwise).
pub fn preset_system(
    preset: Preset,
    z: u32,
    m2: Mass,
    m1: NucleusMass,
    alpha: f64,
) -> Result<DyonSystem> {
    if z == 0 {
        return Err(Error::DomainError("Z must be at least 1".into()));
    }
    let convention = UnitConvention::new(preset.convention_kind(), alpha)?;
    let ec = convention.elementary_charges();
    let zf = f64::from(z);
    let (nucleus, orbiter) = match preset {
        Preset::DyonZ => (
            DyonCharge::new(zf * ec.e0, zf * ec.g0_z4),
            DyonCharge::new(-ec.e0, -ec.g0_z4),
        ),
        Preset::Pionic | Preset::Hydrogen => {
            (DyonCharge::new(zf * ec.e0, 0.0), DyonCharge::new(-ec.e0, 0.0))
        }
        Preset::Monopolonium => (
            DyonCharge::new(0.0, zf * ec.g0_dirac),
            DyonCharge::new(0.0, -ec.g0_dirac),
        ),
    };
    DyonSystem::new(nucleus, orbiter, m1, m2.value, m2.unit, convention)
}

/// System of two Z₄-quantized dyons `(e₀, 2π n_r/e₀)` and `(e₀, 2π n_s/e₀)`
/// in Heaviside–Lorentz units.
pub fn z4_pair_system(n_r: i32, n_s: i32, m2: Mass, alpha: f64) -> Result<DyonSystem> {
    let convention = UnitConvention::new(Convention::HeavisideLorentz, alpha)?;
    let ec = convention.elementary_charges();
    DyonSystem::new(
        DyonCharge::new(ec.e0, f64::from(n_r) * ec.g0_z4),
        DyonCharge::new(ec.e0, f64::from(n_s) * ec.g0_z4),
        NucleusMass::Infinite,
        m2.value,
        m2.unit,
        convention,
    )
}
