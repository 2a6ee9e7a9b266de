use serde::Serialize;

use crate::charges::DyonSystem;
use crate::error::{Error, Result};
use crate::numkernel::{
    adaptive_quad_with, confluent_polynomial, confluent_polynomial_coefficients, envelope_cutoff,
    log_gamma, LogSum, QuadOptions,
};
use crate::spectrum::{nu_parameter, EnergyResult};

/// Relative mismatch tolerated between the closed-form norm and quadrature.
pub const NORM_CROSS_CHECK: f64 = 1e-8;

/// Parameters of `R(r) = (1/r)(br)^{ν+½} e^{-br/2} 1F1(−N; 2ν+1; br)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialParams {
    pub b: f64,
    pub nu: f64,
    pub xi: f64,
    pub n_radial: u32,
    /// Natural log of the normalization constant (0 until normalized).
    pub log_norm: f64,
}

impl RadialParams {
    /// Builds the parameters from a raw energy `|E| < m`.
    pub fn new(system: &DyonSystem, n_radial: u32, l: f64, e: f64) -> Result<Self> {
        let m = system.m_reduced;
        if !(e.abs() < m) {
            return Err(Error::DomainError(format!(
                "bound state needs |E| < m, got E = {e}, m = {m}"
            )));
        }
        let nu = nu_parameter(l, system.coupling(), system.mu)?;
        let b = 2.0 * ((m - e) * (m + e)).sqrt();
        Ok(Self {
            b,
            nu,
            xi: -2.0 * system.coupling() * e / b,
            n_radial,
            log_norm: 0.0,
        })
    }

    /// Builds the parameters from a closed-form level, reusing its stable `b`.
    pub fn from_energy(n_radial: u32, level: &EnergyResult) -> Result<Self> {
        if level.free || !(level.b > 0.0) {
            return Err(Error::DomainError(
                "free-particle limit has no bound radial function".into(),
            ));
        }
        Ok(Self {
            b: level.b,
            nu: level.nu,
            xi: level.xi,
            n_radial,
            log_norm: 0.0,
        })
    }

    pub fn norm(&self) -> f64 {
        self.log_norm.exp()
    }

    fn lower(&self) -> f64 {
        2.0 * self.nu + 1.0
    }

    fn polynomial(&self, z: f64) -> f64 {
        confluent_polynomial(self.n_radial, self.lower(), z)
            .expect("2ν + 1 > 0 keeps the Pochhammer symbols non-zero")
    }

    /// Whittaker-form `Λ(z) = z^{ν+½} e^{-z/2} 1F1(−N; 2ν+1; z)`, unnormalized.
    pub fn lambda_of_z(&self, z: f64) -> f64 {
        let p = self.polynomial(z);
        if p == 0.0 || z == 0.0 {
            return 0.0;
        }
        p * ((self.nu + 0.5) * z.ln() - 0.5 * z).exp()
    }

    /// `R(r)`; scaled by the normalization constant when `normalized`.
    pub fn eval(&self, r: f64, normalized: bool) -> Result<f64> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::DomainError(format!("radius must be positive, got {r}")));
        }
        Ok(self.eval_unchecked(r, normalized))
    }

    pub(crate) fn eval_unchecked(&self, r: f64, normalized: bool) -> f64 {
        let z = self.b * r;
        let p = self.polynomial(z);
        if p == 0.0 {
            return 0.0;
        }
        let mut log_mag = (self.nu + 0.5) * z.ln() - 0.5 * z - r.ln();
        if normalized {
            log_mag += self.log_norm;
        }
        p * log_mag.exp()
    }

    /// `ln ∫₀^∞ z^{2ν+1+shift} e^{-z} [1F1(−N; 2ν+1; z)]² dz`.
    ///
    /// One factor is expanded into monomials and each monomial is integrated
    /// against the other factor in closed form (Chu–Vandermonde):
    /// `∫ z^{β+j} e^{-z} 1F1(−N; c; z) dz = Γ(β+j+1) (c−β−j−1)_N / (c)_N`.
    /// For integer shifts most of these terms vanish exactly, which avoids the
    /// cancellation of the full double sum.
    pub fn log_gamma_moment(&self, shift: f64) -> Result<f64> {
        let coeffs = confluent_polynomial_coefficients(self.n_radial, self.lower())?;
        let base = 2.0 * self.nu + 2.0 + shift;
        let n = self.n_radial;
        let log_poch_c: f64 = (0..n).map(|i| (self.lower() + f64::from(i)).ln()).sum();
        let mut sum = LogSum::new();
        let mut log_gamma_j = log_gamma(base)?;
        for (j, (lj, sj)) in coeffs.iter().enumerate() {
            let x = -shift - j as f64 - 1.0;
            let mut log_poch = 0.0;
            let mut sign = *sj;
            for i in 0..n {
                let f = x + f64::from(i);
                if f == 0.0 {
                    sign = 0.0;
                    break;
                }
                log_poch += f.abs().ln();
                sign *= f.signum();
            }
            if sign != 0.0 {
                sum.push(lj + log_gamma_j + log_poch - log_poch_c, sign);
            }
            log_gamma_j += (base + j as f64).ln();
        }
        let (log_abs, sign) = sum.finish();
        if sign <= 0.0 {
            return Err(Error::NonConvergence(format!(
                "gamma-moment sum lost all precision (N = {}, ν = {})",
                self.n_radial, self.nu
            )));
        }
        Ok(log_abs)
    }

    /// `ln ∫₀^∞ R² r² dr` for the unnormalized function.
    pub fn log_norm_integral(&self) -> Result<f64> {
        Ok(self.log_gamma_moment(0.0)? - self.b.ln())
    }

    /// Point in `z = br` past which the normalized density is negligible.
    pub fn z_cutoff(&self) -> f64 {
        envelope_cutoff(2.0 * self.nu + 1.0 + 2.0 * f64::from(self.n_radial), 1e-18)
            + 4.0 * f64::from(self.n_radial)
    }

    /// Sets the constant so that `∫₀^∞ R² r² dr = 1`, and cross-checks the
    /// closed form against adaptive quadrature.
    pub fn normalize(&self) -> Result<Self> {
        let log_norm = -0.5 * self.log_norm_integral()?;
        let out = Self { log_norm, ..*self };
        let check = out.quadrature_norm(out.z_cutoff(), 1e-10)?;
        if (check - 1.0).abs() > NORM_CROSS_CHECK {
            return Err(Error::NonConvergence(format!(
                "radial norm cross-check failed: quadrature gives {check}"
            )));
        }
        Ok(out)
    }

    /// `∫ R² r² dr` of the (normalized) function over `z ∈ (0, z_max)` by quadrature.
    pub fn quadrature_norm(&self, z_max: f64, tol: f64) -> Result<f64> {
        let b = self.b;
        let f = |z: f64| {
            if z <= 0.0 {
                return 0.0;
            }
            let r = z / b;
            let v = self.eval_unchecked(r, true);
            v * v * r * r / b
        };
        // split at the envelope peak so the panel containing it is resolved
        let peak = (2.0 * self.nu + 1.0).max(1e-3);
        let opts = QuadOptions::default();
        let head = adaptive_quad_with(f, 0.0, peak.min(z_max), tol, &opts)?;
        if z_max <= peak {
            return Ok(head);
        }
        Ok(head + adaptive_quad_with(f, peak, z_max, tol, &opts)?)
    }

    /// `⟨r^p⟩` of the normalized radial density, in closed form.
    pub fn radial_moment(&self, p: f64) -> Result<f64> {
        let log = self.log_gamma_moment(p)? - self.log_gamma_moment(0.0)? - p * self.b.ln();
        Ok(log.exp())
    }
}
