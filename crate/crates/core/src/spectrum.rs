//! Quantum numbers and closed-form energy levels.
//!
//! With `c = q/4π` (the Coulomb strength) and `μ = g/4π`, the radial index is
//! `ν = √((l+½)² − μ² − c²)` and the bound-state energy is
//! `E = ±m √(1 − s)`, `s = c² / (c² + (ν + ½ + N)²)`.
//! Binding energies use `E − m = −m s / (1 + √(1 − s))`, which keeps full
//! relative precision when `s` is far below machine epsilon.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::charges::DyonSystem;
use crate::error::{Error, Result};

/// Upper bound on the angular momentum searched by [`min_allowed_l`].
pub const L_SEARCH_CAP: f64 = 1e6;

const INTEGER_EPS: f64 = 1e-9;

fn is_integer(x: f64) -> bool {
    (x - x.round()).abs() <= INTEGER_EPS * x.abs().max(1.0)
}

/// Radial index `N`, angular momentum `l` and azimuthal eigenvalue `K`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantumNumbers {
    pub n_radial: u32,
    pub l: f64,
    pub k_azimuthal: f64,
}

impl QuantumNumbers {
    pub const fn new(n_radial: u32, l: f64, k_azimuthal: f64) -> Self {
        Self {
            n_radial,
            l,
            k_azimuthal,
        }
    }

    /// Phase index `k = K + μ` of `e^{ikφ}`.
    pub fn k(&self, mu: f64) -> f64 {
        self.k_azimuthal + mu
    }

    /// Degree `n = l + μ` of the angular Jacobi polynomial.
    pub fn n_jacobi(&self, mu: f64) -> f64 {
        self.l + mu
    }

    /// Principal quantum number `N + l + 1`.
    pub fn principal(&self) -> f64 {
        f64::from(self.n_radial) + self.l + 1.0
    }
}

/// Sign of the energy root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Self::Positive => 1.0,
            Self::Negative => -1.0,
        }
    }

    /// Branch on which `ν + ½ − ξ = −N` is satisfied: positive energies bind
    /// attractive couplings, negative energies bind repulsive ones.
    pub fn bound_for(coupling: f64) -> Self {
        if coupling > 0.0 {
            Self::Negative
        } else {
            Self::Positive
        }
    }
}

/// Closed-form level with its radial-equation parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyResult {
    pub energy: f64,
    /// `E − m` without cancellation.
    pub binding: f64,
    pub branch: Branch,
    /// `2√(m² − E²)`, computed as `2m√s`.
    pub b: f64,
    pub nu: f64,
    pub xi: f64,
    /// Angular separation constant `l(l+1) − μ²`.
    pub lambda: f64,
    pub s: f64,
    /// Zero coupling: `E = ±m` is the free limit, not a bound state.
    pub free: bool,
}

/// `ν = √((l+½)² − μ² − c²)` with `c = q/4π`, `μ = g/4π`.
pub fn nu_parameter(l: f64, coupling: f64, mu: f64) -> Result<f64> {
    let radicand = (l + 0.5).powi(2) - mu * mu - coupling * coupling;
    if radicand > 0.0 && l >= 0.0 {
        Ok(radicand.sqrt())
    } else {
        Err(Error::ImaginaryNu { l, radicand })
    }
}

/// Smallest admissible `l` (on the `|μ| + integer` ladder) with real `ν`.
pub fn min_allowed_l(system: &DyonSystem) -> Result<f64> {
    let mu = system.mu.abs();
    let c = system.coupling();
    let threshold = (mu * mu + c * c).sqrt() - 0.5;
    let mut j = if threshold < mu {
        0.0
    } else {
        (threshold - mu).floor()
    };
    loop {
        let l = mu + j;
        if l > L_SEARCH_CAP {
            return Err(Error::NoBoundStates { cap: L_SEARCH_CAP });
        }
        if nu_parameter(l, c, system.mu).is_ok() {
            return Ok(l);
        }
        j += 1.0;
    }
}

/// A broken constraint on a set of quantum numbers.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    LBelowMu { l: f64, mu_abs: f64 },
    LOffsetNotInteger { l: f64, mu_abs: f64 },
    KOutOfRange { k_azimuthal: f64, l: f64 },
    KStep { k_azimuthal: f64, l: f64 },
    JacobiDegreeNotInteger { n: f64 },
    ImaginaryNu { l: f64, radicand: f64 },
}

impl Violation {
    /// True for constraints that only concern the angular factor.
    pub fn is_angular(&self) -> bool {
        !matches!(self, Self::ImaginaryNu { .. })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LBelowMu { l, mu_abs } => write!(f, "l = {l} is below |mu| = {mu_abs}"),
            Self::LOffsetNotInteger { l, mu_abs } => {
                write!(f, "l - |mu| = {} is not an integer", l - mu_abs)
            }
            Self::KOutOfRange { k_azimuthal, l } => {
                write!(f, "K = {k_azimuthal} out of range [-{l}, {l}]")
            }
            Self::KStep { k_azimuthal, l } => {
                write!(f, "K = {k_azimuthal} is not on the unit ladder from -l = -{l}")
            }
            Self::JacobiDegreeNotInteger { n } => {
                write!(f, "Jacobi degree l + mu = {n} is not a non-negative integer")
            }
            Self::ImaginaryNu { l, radicand } => {
                write!(f, "nu is imaginary at l = {l} (radicand {radicand})")
            }
        }
    }
}

/// Checks every constraint and returns all violations at once.
pub fn validate_quantum_numbers(
    system: &DyonSystem,
    qn: &QuantumNumbers,
) -> std::result::Result<(), Vec<Violation>> {
    let mu = system.mu;
    let mu_abs = mu.abs();
    let l = qn.l;
    let k = qn.k_azimuthal;
    let mut out = Vec::new();
    if l < mu_abs - INTEGER_EPS {
        out.push(Violation::LBelowMu { l, mu_abs });
    } else if !is_integer(l - mu_abs) {
        out.push(Violation::LOffsetNotInteger { l, mu_abs });
    }
    if k.abs() > l + INTEGER_EPS {
        out.push(Violation::KOutOfRange { k_azimuthal: k, l });
    } else if !is_integer(k + l) {
        out.push(Violation::KStep { k_azimuthal: k, l });
    }
    let n = qn.n_jacobi(mu);
    if n < -INTEGER_EPS || !is_integer(n) {
        out.push(Violation::JacobiDegreeNotInteger { n });
    }
    if let Err(Error::ImaginaryNu { l, radicand }) = nu_parameter(l, system.coupling(), mu) {
        out.push(Violation::ImaginaryNu { l, radicand });
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// `e^{ikφ}` is single-valued only for integer `k = K + μ`.
pub fn is_single_valued(system: &DyonSystem, qn: &QuantumNumbers) -> bool {
    is_integer(qn.k(system.mu))
}

fn level(m: f64, coupling: f64, nu: f64, radial: f64, lambda: f64, branch: Branch) -> EnergyResult {
    if coupling == 0.0 {
        return EnergyResult {
            energy: branch.sign() * m,
            binding: match branch {
                Branch::Positive => 0.0,
                Branch::Negative => -2.0 * m,
            },
            branch,
            b: 0.0,
            nu,
            xi: 0.0,
            lambda,
            s: 0.0,
            free: true,
        };
    }
    let c2 = coupling * coupling;
    let shifted = nu + 0.5 + radial;
    let s = c2 / (c2 + shifted * shifted);
    let root = (1.0 - s).sqrt();
    let energy = branch.sign() * m * root;
    let binding = match branch {
        Branch::Positive => -m * s / (1.0 + root),
        Branch::Negative => -m * (1.0 + root),
    };
    let b = 2.0 * m * s.sqrt();
    EnergyResult {
        energy,
        binding,
        branch,
        b,
        nu,
        xi: -2.0 * coupling * energy / b,
        lambda,
        s,
        free: false,
    }
}

/// Energy of level `(N, l)` on the requested branch, in the system's mass unit.
pub fn energy(system: &DyonSystem, n_radial: u32, l: f64, branch: Branch) -> Result<EnergyResult> {
    energy_continuous(system, f64::from(n_radial), l, branch)
}

/// [`energy`] with a real-valued radial index, for principal numbers that
/// are not integers.
pub fn energy_continuous(
    system: &DyonSystem,
    radial: f64,
    l: f64,
    branch: Branch,
) -> Result<EnergyResult> {
    if !(radial >= -0.5) {
        return Err(Error::DomainError(format!("radial index must be >= -1/2, got {radial}")));
    }
    let c = system.coupling();
    let nu = nu_parameter(l, c, system.mu)?;
    let lambda = l * (l + 1.0) - system.mu * system.mu;
    Ok(level(system.m_reduced, c, nu, radial, lambda, branch))
}

/// Closed-form Klein–Gordon hydrogen level `m [1 + (Zα)²/(ν+½+N)²]^{-1/2}`.
pub fn hydrogen_energy(
    z: u32,
    n_radial: u32,
    l: u32,
    m: f64,
    alpha: f64,
    branch: Branch,
) -> Result<f64> {
    let za = f64::from(z) * alpha;
    let lf = f64::from(l);
    let radicand = (lf + 0.5).powi(2) - za * za;
    if radicand <= 0.0 {
        return Err(Error::ImaginaryNu { l: lf, radicand });
    }
    let shifted = radicand.sqrt() + 0.5 + f64::from(n_radial);
    Ok(branch.sign() * m / (1.0 + (za / shifted).powi(2)).sqrt())
}

/// Monopolonium binding energy `E − m` at principal number `n`.
///
/// The relativistic form uses coupling `Z g₀²` with `g₀² = 1/(4α)` and
/// `N = n − l − 1`; the non-relativistic form is the quadratic term
/// `−m (Z g₀²)² / (2 n²)`.
pub fn monopolonium_energy(
    z: u32,
    n: f64,
    l: f64,
    m: f64,
    alpha: f64,
    relativistic: bool,
) -> Result<f64> {
    let coupling = f64::from(z) / (4.0 * alpha);
    if !relativistic {
        if !(n > 0.0) {
            return Err(Error::DomainError(format!("principal number must be positive, got {n}")));
        }
        return Ok(-m * coupling * coupling / (2.0 * n * n));
    }
    if !(n > l + 0.5) {
        return Err(Error::DomainError(format!(
            "principal number {n} must exceed l + 1/2 = {}",
            l + 0.5
        )));
    }
    let nu = nu_parameter(l, coupling, 0.0)?;
    let lambda = l * (l + 1.0);
    Ok(level(m, -coupling, nu, n - l - 1.0, lambda, Branch::Positive).binding)
}

/// Residual of `ν + ½ − ξ + N` at energy `E`.
pub fn quantization_residual(system: &DyonSystem, n_radial: u32, l: f64, e: f64) -> Result<f64> {
    quantization_residual_with_binding(system, n_radial, l, e, e - system.m_reduced)
}

/// As [`quantization_residual`], with `E − m` supplied separately so that
/// `b = 2√((m − E)(m + E))` keeps full precision near threshold.
pub fn quantization_residual_with_binding(
    system: &DyonSystem,
    n_radial: u32,
    l: f64,
    e: f64,
    binding: f64,
) -> Result<f64> {
    let m = system.m_reduced;
    if !(e.abs() < m) {
        return Err(Error::DomainError(format!("|E| = {} must be below m = {m}", e.abs())));
    }
    let c = system.coupling();
    let nu = nu_parameter(l, c, system.mu)?;
    let b = 2.0 * ((-binding) * (2.0 * m + binding)).sqrt();
    let xi = -2.0 * c * e / b;
    Ok(nu + 0.5 - xi + f64::from(n_radial))
}

/// One row of the level table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Level {
    pub n_radial: u32,
    pub l: f64,
    pub n_principal: f64,
    pub energy: f64,
    pub binding: f64,
    pub degeneracy: u64,
}

/// All levels with `N + l + 1 <= np_max`, sorted by energy.
pub fn enumerate_levels(system: &DyonSystem, np_max: u32) -> Vec<Level> {
    let Ok(l_min) = min_allowed_l(system) else {
        return Vec::new();
    };
    let branch = Branch::bound_for(system.coupling());
    let np_max = f64::from(np_max);
    let mut out = Vec::new();
    let mut l = l_min;
    while l + 1.0 <= np_max + INTEGER_EPS {
        let mut n = 0u32;
        while f64::from(n) + l + 1.0 <= np_max + INTEGER_EPS {
            if let Ok(r) = energy(system, n, l, branch) {
                out.push(Level {
                    n_radial: n,
                    l,
                    n_principal: f64::from(n) + l + 1.0,
                    energy: r.energy,
                    binding: r.binding,
                    degeneracy: (2.0 * l + 1.0).round() as u64,
                });
            }
            n += 1;
        }
        l += 1.0;
    }
    out.sort_by(|a, b| {
        a.binding
            .total_cmp(&b.binding)
            .then(a.n_radial.cmp(&b.n_radial))
            .then(a.l.partial_cmp(&b.l).unwrap_or(Ordering::Equal))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charges::{preset_system, Mass, MassUnit, NucleusMass, Preset, DEFAULT_ALPHA};

    fn preset(p: Preset, z: u32) -> DyonSystem {
        preset_system(p, z, Mass::new(1.0, MassUnit::Natural), NucleusMass::Infinite, DEFAULT_ALPHA)
            .unwrap()
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu_parameter(0.0, 0.0, 0.0).unwrap(), 0.5);
        let a = DEFAULT_ALPHA;
        assert!((nu_parameter(0.0, -a, 0.0).unwrap() - (0.25 - a * a).sqrt()).abs() < 1e-15);
        assert!((nu_parameter(0.0, -a, 0.0).unwrap() - 0.499_946_7).abs() < 1e-7);
        let c = a + 1.0 / (4.0 * a);
        let nu = nu_parameter(34.0, c, 0.0).unwrap();
        assert!((nu - (34.5f64.powi(2) - c * c).sqrt()).abs() < 1e-12);
        assert!((nu - 4.009).abs() < 1e-3);
        assert!(matches!(nu_parameter(33.0, c, 0.0), Err(Error::ImaginaryNu { .. })));
    }

    #[test]
    fn minimum_l() {
        assert_eq!(min_allowed_l(&preset(Preset::Hydrogen, 1)).unwrap(), 0.0);
        assert_eq!(min_allowed_l(&preset(Preset::DyonZ, 1)).unwrap(), 34.0);
        assert_eq!(min_allowed_l(&preset(Preset::Monopolonium, 1)).unwrap(), 34.0);
    }

    #[test]
    fn validation_examples() {
        let dz = preset(Preset::DyonZ, 1);
        assert!(validate_quantum_numbers(&dz, &QuantumNumbers::new(0, 34.0, 0.0)).is_ok());
        let h = preset(Preset::Hydrogen, 1);
        let v = validate_quantum_numbers(&h, &QuantumNumbers::new(0, 0.0, 1.0)).unwrap_err();
        assert!(matches!(v[0], Violation::KOutOfRange { .. }));
        let v = validate_quantum_numbers(&dz, &QuantumNumbers::new(0, 33.0, 0.0)).unwrap_err();
        assert!(v.iter().any(|x| matches!(x, Violation::ImaginaryNu { .. })));
        let v = validate_quantum_numbers(&h, &QuantumNumbers::new(0, 2.0, 0.5)).unwrap_err();
        assert!(matches!(v[0], Violation::KStep { .. }));
    }

    #[test]
    fn energy_examples() {
        let free = crate::charges::DyonSystem::new(
            crate::charges::DyonCharge::new(0.0, 0.0),
            crate::charges::DyonCharge::new(1.0, 0.0),
            NucleusMass::Infinite,
            2.0,
            MassUnit::Natural,
            Default::default(),
        )
        .unwrap();
        let r = energy(&free, 0, 0.0, Branch::Positive).unwrap();
        assert!(r.free && r.energy == 2.0);
        assert_eq!(energy(&free, 0, 0.0, Branch::Negative).unwrap().energy, -2.0);

        let h = energy(&preset(Preset::Hydrogen, 1), 0, 0.0, Branch::Positive).unwrap();
        assert!((h.energy - 0.999_973_372_550_2).abs() < 1e-12);
        let d = energy(&preset(Preset::DyonZ, 1), 0, 34.0, Branch::Positive).unwrap();
        assert!((d.energy - 0.1305).abs() < 5e-4);
    }

    #[test]
    fn binding_is_cancellation_free() {
        let h = energy(&preset(Preset::Hydrogen, 1), 0, 0.0, Branch::Positive).unwrap();
        // E − m ≈ −m α²/2 at leading order
        let lead = -DEFAULT_ALPHA.powi(2) / 2.0;
        assert!(((h.binding - lead) / lead).abs() < 1e-4);
        assert!((h.energy - 1.0 - h.binding).abs() < 1e-15);
    }

    #[test]
    fn residual_sign_follows_energy_shift() {
        let sys = preset(Preset::Hydrogen, 1);
        let r = energy(&sys, 0, 0.0, Branch::Positive).unwrap();
        let base = quantization_residual_with_binding(&sys, 0, 0.0, r.energy, r.binding).unwrap();
        assert!(base.abs() < 1e-10);
        let bumped = quantization_residual(&sys, 0, 0.0, r.energy - 1e-3).unwrap();
        // lowering E deepens the binding: ξ decreases, so the residual rises
        assert!(bumped > 1e-3);
        assert!(quantization_residual(&sys, 0, 0.0, 1.0).is_err());
    }

    #[test]
    fn hydrogen_closed_form() {
        let e = hydrogen_energy(1, 0, 0, 1.0, DEFAULT_ALPHA, Branch::Positive).unwrap();
        assert!((e - 0.999_973_372_550_2).abs() < 1e-12);
        let tiny = hydrogen_energy(1, 0, 0, 1.0, 1e-12, Branch::Positive).unwrap();
        assert!((tiny - 1.0).abs() < 1e-15);
        assert!(hydrogen_energy(69, 0, 0, 1.0, DEFAULT_ALPHA, Branch::Positive).is_err());
        assert!(hydrogen_energy(68, 0, 0, 1.0, DEFAULT_ALPHA, Branch::Positive).is_ok());
    }

    #[test]
    fn monopolonium_rows() {
        let m = 1e16;
        let r1 = -monopolonium_energy(1, 41.7, 34.0, m, DEFAULT_ALPHA, true).unwrap();
        assert!(((r1 - 6.85e15) / 6.85e15).abs() < 0.01);
        let r4 = -monopolonium_energy(1, 4.17e4, 34.0, m, DEFAULT_ALPHA, true).unwrap();
        assert!(((r4 - 3.37e9) / 3.37e9).abs() < 0.01);
        let nr4 = -monopolonium_energy(1, 4.17e4, 34.0, m, DEFAULT_ALPHA, false).unwrap();
        assert!(((nr4 - 3.35e9) / 3.35e9).abs() < 0.02);
        assert!(monopolonium_energy(1, 34.0, 34.0, m, DEFAULT_ALPHA, true).is_err());
        assert!(monopolonium_energy(1, 100.0, 33.0, m, DEFAULT_ALPHA, true).is_err());
    }

    #[test]
    fn level_enumeration() {
        let dz = preset(Preset::DyonZ, 1);
        assert!(enumerate_levels(&dz, 34).is_empty());
        let one = enumerate_levels(&dz, 35);
        assert_eq!(one.len(), 1);
        assert_eq!((one[0].n_radial, one[0].l, one[0].degeneracy), (0, 34.0, 69));

        let h = enumerate_levels(&preset(Preset::Hydrogen, 1), 2);
        let cells: Vec<(u32, f64)> = h.iter().map(|l| (l.n_radial, l.l)).collect();
        assert_eq!(cells, vec![(0, 0.0), (1, 0.0), (0, 1.0)]);
        assert_ne!(h[1].energy, h[2].energy);
        assert_eq!(enumerate_levels(&preset(Preset::Hydrogen, 1), 3).len(), 6);
    }

    #[test]
    fn nu_identity() {
        for &(l, c, mu) in &[(0.0, -0.007, 0.0), (34.0, -34.27, 0.0), (90.0, -68.5, 1.5), (5.5, 2.0, -2.5)] {
            let nu = nu_parameter(l, c, mu).unwrap();
            let lhs = nu * nu + c * c + mu * mu;
            assert!(((lhs - (l + 0.5f64).powi(2)) / lhs).abs() < 1e-12);
        }
    }
}
