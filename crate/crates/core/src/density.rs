//! Klein–Gordon charge densities, radial profiles and the continuity check.
//!
//! The charge density of a stationary state is `ρ = e (E − A⁰)/m |ψ|²`; it
//! is a signed charge density rather than a probability density. Profiles
//! are reported per unit charge, `P_r = (E − A⁰) (rR)² / m`, and multiplied by
//! the orbiter's electric and magnetic charges to give `P_e` and `P_g`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numkernel::{adaptive_quad_with, confluent_polynomial, QuadOptions, QuadratureRule};
use crate::wavefunc::{potentials, BoundState};

/// How the wavefunction is scaled before densities are formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// `∫ |ψ|² d³x = 1`.
    L2,
    /// Total charge equals the orbiter's charge.
    #[default]
    Charge,
}

impl std::str::FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l2" => Ok(Self::L2),
            "charge" => Ok(Self::Charge),
            other => Err(Error::DomainError(format!("unknown normalization '{other}'"))),
        }
    }
}

/// Sampled radial charge density.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityProfile {
    /// Radii in inverse units of the system mass.
    pub r_grid: Vec<f64>,
    /// `P_r` per unit charge.
    pub values: Vec<f64>,
    pub pe: Vec<f64>,
    pub pg: Vec<f64>,
    pub energy: f64,
    pub b: f64,
    pub peak_radius: f64,
    /// `∫₀^∞ P_r dr` in the chosen normalization.
    pub total: f64,
    pub normalization: Normalization,
}

/// Closed form of `∫₀^∞ P_r dr` for the L²-normalized state:
/// `E/m − (q/4π) ⟨1/r⟩ / m`.
pub fn l2_charge_fraction(state: &BoundState) -> Result<f64> {
    let m = state.system.m_reduced;
    let inv_r = state.radial.radial_moment(-1.0)?;
    Ok((state.energy.energy - state.system.coupling() * inv_r) / m)
}

fn scale_for(state: &BoundState, normalization: Normalization) -> Result<f64> {
    match normalization {
        Normalization::L2 => Ok(1.0),
        Normalization::Charge => {
            let q = l2_charge_fraction(state)?;
            if q == 0.0 || !q.is_finite() {
                return Err(Error::NonNormalizable(format!("total charge fraction is {q}")));
            }
            Ok(1.0 / q)
        }
    }
}

fn per_unit_charge(state: &BoundState, r: f64) -> f64 {
    let m = state.system.m_reduced;
    let rr = state.radial.eval_unchecked(r, true) * r;
    (state.energy.energy - state.system.coupling() / r) * rr * rr / m
}

/// `(P_e, P_g)` at a point, from the orbiter's electric and magnetic charges.
pub fn charge_density_point(
    state: &BoundState,
    r: f64,
    theta: f64,
    phi: f64,
    normalization: Normalization,
) -> Result<(f64, f64)> {
    let (a0, _) = potentials(&state.system, r, theta)?;
    let psi = state.psi_eval(r, theta, phi, 0.0)?;
    let factor = (state.energy.energy - a0) / state.system.m_reduced
        * psi.norm_sqr()
        * scale_for(state, normalization)?;
    Ok((state.system.orbiter.e * factor, state.system.orbiter.g * factor))
}

/// Log-spaced grid from `1e-6/m` to the envelope cutoff of the state.
pub fn default_r_grid(state: &BoundState, count: usize) -> Vec<f64> {
    let lo = 1e-6 / state.system.m_reduced;
    let hi = state.radial.z_cutoff().max(30.0) / state.radial.b;
    log_grid(lo, hi, count)
}

/// `count` log-spaced points in `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count < 2 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    let step = (b - a) / (count - 1) as f64;
    (0..count)
        .map(|i| if i + 1 == count { hi } else { (a + step * i as f64).exp() })
        .collect()
}

/// Samples `P_r`, `P_e` and `P_g` on `r_grid` and locates the peak.
pub fn radial_density_profile(
    state: &BoundState,
    r_grid: &[f64],
    normalization: Normalization,
) -> Result<DensityProfile> {
    if r_grid.is_empty() {
        return Err(Error::DomainError("radial grid is empty".into()));
    }
    if r_grid.iter().any(|r| !(*r > 0.0) || !r.is_finite())
        || r_grid.windows(2).any(|w| w[1] <= w[0])
    {
        return Err(Error::DomainError(
            "radial grid must be positive and strictly increasing".into(),
        ));
    }
    let scale = scale_for(state, normalization)?;
    let values: Vec<f64> = r_grid.iter().map(|&r| per_unit_charge(state, r) * scale).collect();
    let orbiter = state.system.orbiter;
    let peak_radius = refine_peak(state, r_grid, &values);
    let total = total_charge_fraction(state, state.radial.z_cutoff())? * scale;
    Ok(DensityProfile {
        r_grid: r_grid.to_vec(),
        pe: values.iter().map(|v| v * orbiter.e).collect(),
        pg: values.iter().map(|v| v * orbiter.g).collect(),
        values,
        energy: state.energy.energy,
        b: state.radial.b,
        peak_radius,
        total,
        normalization,
    })
}

pub fn peak_radius(profile: &DensityProfile) -> f64 {
    profile.peak_radius
}

/// Peak of `|P_r|` for a state, on its default grid.
pub fn state_peak_radius(state: &BoundState) -> Result<f64> {
    let grid = default_r_grid(state, 4000);
    Ok(radial_density_profile(state, &grid, Normalization::L2)?.peak_radius)
}

/// `d ln|P_r| / dr`.
fn log_derivative(state: &BoundState, r: f64) -> f64 {
    let rp = &state.radial;
    let c = state.system.coupling();
    let e = state.energy.energy;
    let z = rp.b * r;
    let lower = 2.0 * rp.nu + 1.0;
    let n = rp.n_radial;
    let f = confluent_polynomial(n, lower, z).unwrap_or(f64::NAN);
    let df = if n == 0 {
        0.0
    } else {
        -f64::from(n) / lower * confluent_polynomial(n - 1, lower + 1.0, z).unwrap_or(f64::NAN)
    };
    let lambda_log = (rp.nu + 0.5) / z - 0.5 + df / f;
    c / (r * (r * e - c)) + 2.0 * rp.b * lambda_log
}

fn refine_peak(state: &BoundState, grid: &[f64], values: &[f64]) -> f64 {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if v.abs() > values[best].abs() {
            best = i;
        }
    }
    if best == 0 || best + 1 == grid.len() {
        return grid[best];
    }
    let (mut lo, mut hi) = (grid[best - 1], grid[best + 1]);
    if !(log_derivative(state, lo) > 0.0 && log_derivative(state, hi) < 0.0) {
        return grid[best];
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if log_derivative(state, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `∫₀^{z_max/b} P_r dr` for the L²-normalized state.
pub fn total_charge_fraction(state: &BoundState, z_max: f64) -> Result<f64> {
    let b = state.radial.b;
    let f = |z: f64| if z <= 0.0 { 0.0 } else { per_unit_charge(state, z / b) / b };
    let opts = QuadOptions::default();
    let peak = (2.0 * state.radial.nu + 1.0).min(z_max);
    let rule = QuadratureRule::gauss_legendre(20)?;
    let width = z_max / 64.0;
    let magnitude: f64 = (0..64)
        .map(|i| rule.integrate(|z| f(z).abs(), width * i as f64, width * (i + 1) as f64))
        .sum();
    let tol = 1e-11 * magnitude.max(f64::MIN_POSITIVE);
    let head = adaptive_quad_with(f, 0.0, peak, tol, &opts)?;
    if z_max <= peak {
        return Ok(head);
    }
    Ok(head + adaptive_quad_with(f, peak, z_max, tol, &opts)?)
}

/// `(Q_e, Q_g)`, the space integrals of `P_e` and `P_g`.
pub fn total_charge(state: &BoundState, normalization: Normalization) -> Result<(f64, f64)> {
    total_charge_with_cutoff(state, state.radial.z_cutoff(), normalization)
}

/// [`total_charge`] truncated at `z = b r = z_max`.
pub fn total_charge_with_cutoff(
    state: &BoundState,
    z_max: f64,
    normalization: Normalization,
) -> Result<(f64, f64)> {
    let q = total_charge_fraction(state, z_max)? * scale_for(state, normalization)?;
    Ok((q * state.system.orbiter.e, q * state.system.orbiter.g))
}

fn psi_at(state: &BoundState, p: [f64; 3]) -> Result<Complex64> {
    state.psi_eval(p[0], p[1], p[2], 0.0)
}

/// Spatial current per unit charge, `(J_r, J_θ, J_φ)`, with the gradient of ψ
/// taken by central differences of physical length `h`.
pub fn current(state: &BoundState, r: f64, theta: f64, phi: f64, h: f64) -> Result<[f64; 3]> {
    let m = state.system.m_reduced;
    let psi = psi_at(state, [r, theta, phi])?;
    let (_, a_phi) = potentials(&state.system, r, theta)?;
    let dth = h / r;
    let dph = h / (r * theta.sin());
    let grad = [
        (psi_at(state, [r + h, theta, phi])? - psi_at(state, [r - h, theta, phi])?) / (2.0 * h),
        (psi_at(state, [r, theta + dth, phi])? - psi_at(state, [r, theta - dth, phi])?)
            / (2.0 * h),
        (psi_at(state, [r, theta, phi + dph])? - psi_at(state, [r, theta, phi - dph])?)
            / (2.0 * h),
    ];
    let rho = psi.norm_sqr();
    Ok([
        (psi.conj() * grad[0]).im / m,
        (psi.conj() * grad[1]).im / m,
        ((psi.conj() * grad[2]).im - a_phi * rho) / m,
    ])
}

fn divergence(state: &BoundState, r: f64, theta: f64, phi: f64, h: f64, inner: f64) -> Result<f64> {
    let s = theta.sin();
    let dth = h / r;
    let dph = h / (r * s);
    let jp = current(state, r + h, theta, phi, inner)?;
    let jm = current(state, r - h, theta, phi, inner)?;
    let radial = ((r + h).powi(2) * jp[0] - (r - h).powi(2) * jm[0]) / (2.0 * h * r * r);
    let tp = current(state, r, theta + dth, phi, inner)?;
    let tm = current(state, r, theta - dth, phi, inner)?;
    let polar = ((theta + dth).sin() * tp[1] - (theta - dth).sin() * tm[1]) / (2.0 * h * s);
    let fp = current(state, r, theta, phi + dph, inner)?;
    let fm = current(state, r, theta, phi - dph, inner)?;
    let azimuthal = (fp[2] - fm[2]) / (2.0 * h);
    Ok(radial + polar + azimuthal)
}

/// Scale-free `|∇·J|` at a point: the Richardson-extrapolated divergence
/// divided by `max(|J|/r, |ψ|²/(m r²))`. The time derivative of the charge
/// density vanishes for a stationary state, so this is the whole residual.
pub fn continuity_residual(state: &BoundState, r: f64, theta: f64, phi: f64, h: f64) -> Result<f64> {
    if !(h > 0.0) || h >= r {
        return Err(Error::DomainError(format!("step must be in (0, r), got {h}")));
    }
    let inner = 1e-3 * r;
    let coarse = divergence(state, r, theta, phi, h, inner)?;
    let fine = divergence(state, r, theta, phi, 0.5 * h, inner)?;
    let div = (4.0 * fine - coarse) / 3.0;
    let j = current(state, r, theta, phi, inner)?;
    let j_norm = (j[0] * j[0] + j[1] * j[1] + j[2] * j[2]).sqrt();
    let rho = psi_at(state, [r, theta, phi])?.norm_sqr();
    let scale = (j_norm / r).max(rho / (state.system.m_reduced * r * r));
    if scale == 0.0 {
        return Ok(div.abs());
    }
    Ok(div.abs() / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charges::{preset_system, Mass, MassUnit, NucleusMass, Preset, DEFAULT_ALPHA};
    use crate::spectrum::QuantumNumbers;

    fn state(preset: Preset, n: u32, l: f64, k: f64) -> BoundState {
        let sys = preset_system(
            preset,
            1,
            Mass::new(1.0, MassUnit::Natural),
            NucleusMass::Infinite,
            DEFAULT_ALPHA,
        )
        .unwrap();
        BoundState::bound(&sys, QuantumNumbers::new(n, l, k)).unwrap()
    }

    #[test]
    fn hydrogen_charge_sign_and_zero_magnetic_part() {
        let s = state(Preset::Hydrogen, 0, 0.0, 0.0);
        let (pe, pg) = charge_density_point(&s, 50.0, 1.0, 0.0, Normalization::L2).unwrap();
        assert!(pe < 0.0);
        assert_eq!(pg, 0.0);
    }

    #[test]
    fn l2_fraction_matches_quadrature() {
        let s = state(Preset::Hydrogen, 1, 1.0, 0.0);
        let closed = l2_charge_fraction(&s).unwrap();
        let quad = total_charge_fraction(&s, s.radial.z_cutoff()).unwrap();
        assert!(closed > 1.0);
        assert!((closed - quad).abs() < 1e-10 * closed);
    }

    #[test]
    fn charge_mode_total() {
        let s = state(Preset::Hydrogen, 0, 0.0, 0.0);
        let (qe, qg) = total_charge(&s, Normalization::Charge).unwrap();
        assert!((qe - s.system.orbiter.e).abs() < 1e-9 * qe.abs());
        assert_eq!(qg, 0.0);
    }

    #[test]
    fn grid_validation() {
        let s = state(Preset::Hydrogen, 0, 0.0, 0.0);
        assert!(radial_density_profile(&s, &[], Normalization::L2).is_err());
        assert!(radial_density_profile(&s, &[2.0, 1.0], Normalization::L2).is_err());
        assert!(radial_density_profile(&s, &[-1.0, 1.0], Normalization::L2).is_err());
    }

    #[test]
    fn peak_is_a_stationary_point() {
        let s = state(Preset::Pionic, 2, 1.0, 0.0);
        let r = state_peak_radius(&s).unwrap();
        let d = 1e-6 * r;
        let p = per_unit_charge(&s, r);
        assert!(p >= per_unit_charge(&s, r - d) && p >= per_unit_charge(&s, r + d));
    }

    #[test]
    fn azimuthal_current() {
        let s = state(Preset::Hydrogen, 0, 1.0, 1.0);
        let r = 1.0 / DEFAULT_ALPHA;
        let j = current(&s, r, 1.0, 0.3, 1e-3 * r).unwrap();
        assert!(j[2].abs() > 0.0);
        assert!(j[0].abs() < 1e-10 * j[2].abs() && j[1].abs() < 1e-10 * j[2].abs());
        assert!(continuity_residual(&s, r, 1.0, 0.3, 1e-4 * r).unwrap() < 1e-4);
    }
}
