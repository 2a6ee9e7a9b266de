use num_complex::Complex64;
use serde::Serialize;

use super::angular::{check_theta, AngularParams};
use super::radial::RadialParams;
use crate::charges::DyonSystem;
use crate::error::{Error, Result};
use crate::spectrum::{energy, validate_quantum_numbers, Branch, EnergyResult, QuantumNumbers};

/// Scalar potential `A⁰ = q/(4πr)` and azimuthal vector potential
/// `A_φ = g (1 − cos θ)/(4π r sin θ)`, with the string along θ = π.
pub fn potentials(system: &DyonSystem, r: f64, theta: f64) -> Result<(f64, f64)> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::DomainError(format!("radius must be positive, got {r}")));
    }
    check_theta(theta)?;
    Ok((system.coupling() / r, system.mu * (theta / 2.0).tan() / r))
}

/// A normalized stationary state `ψ = R(r) Y(θ, φ) e^{−iEt}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundState {
    pub system: DyonSystem,
    pub qn: QuantumNumbers,
    pub energy: EnergyResult,
    pub radial: RadialParams,
    pub angular: AngularParams,
}

impl BoundState {
    pub fn new(system: &DyonSystem, qn: QuantumNumbers, branch: Branch) -> Result<Self> {
        if let Err(violations) = validate_quantum_numbers(system, &qn) {
            let msg: Vec<String> = violations.iter().map(ToString::to_string).collect();
            return Err(Error::InvalidQuantumNumbers(msg.join("; ")));
        }
        let level = energy(system, qn.n_radial, qn.l, branch)?;
        let radial = RadialParams::from_energy(qn.n_radial, &level)?.normalize()?;
        let angular = AngularParams::new(system.mu, qn.l, qn.k_azimuthal)?;
        Ok(Self {
            system: system.clone(),
            qn,
            energy: level,
            radial,
            angular,
        })
    }

    /// State on the branch that binds for the system's coupling sign.
    pub fn bound(system: &DyonSystem, qn: QuantumNumbers) -> Result<Self> {
        Self::new(system, qn, Branch::bound_for(system.coupling()))
    }

    pub fn psi_eval(&self, r: f64, theta: f64, phi: f64, t: f64) -> Result<Complex64> {
        let radial = self.radial.eval(r, true)?;
        let angular = self.angular.eval(theta, phi, true)?;
        Ok(angular * radial * Complex64::from_polar(1.0, -self.energy.energy * t))
    }

    /// `|ψ|²`, independent of time.
    pub fn density(&self, r: f64, theta: f64) -> Result<f64> {
        let radial = self.radial.eval(r, true)?;
        check_theta(theta)?;
        Ok((radial * self.angular.theta_normalized(theta)).powi(2))
    }
}
