use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numkernel::{adaptive_quad, gauss_hypergeometric, weighted_jacobi, QuadratureRule};

/// Half-width of the excluded cone around the Dirac string at θ = π.
pub const DIRAC_STRING_DELTA: f64 = 1e-6;

const INTEGER_EPS: f64 = 1e-9;

/// Which solution of the angular hypergeometric equation is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AngularBranch {
    /// `(1−x)^{α̂/2} (1+x)^{β̂/2} P_n^{(α̂,β̂)}(x)`
    Jacobi,
    /// The `z^{1−γ}` solution, `(1−x)^{α̂/2} (1+x)^{−β̂/2} 2F1(−n−β̂, n+α̂+1; 1−β̂; (1+x)/2)`.
    Second,
}

/// Parameters of the monopole harmonic `Y = Θ(θ) e^{ikφ}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngularParams {
    pub mu: f64,
    pub l: f64,
    pub k_azimuthal: f64,
    /// `k = K + μ`
    pub k: f64,
    /// `a = k − μ`
    pub a_ang: f64,
    /// `b = μ`
    pub b_ang: f64,
    pub alpha_hat: f64,
    pub beta_hat: f64,
    pub n_jacobi: u32,
    /// `γ = a − b + 1`
    pub gamma: f64,
    pub branch: AngularBranch,
    pub log_norm: f64,
}

fn is_integer(x: f64) -> bool {
    (x - x.round()).abs() <= INTEGER_EPS * x.abs().max(1.0)
}

impl AngularParams {
    /// Derives the Jacobi parameters `α̂ = −k`, `β̂ = k − 2μ`, `n = l + μ`,
    /// selects an integrable branch and normalizes `∫|Y|² dΩ = 1`.
    pub fn new(mu: f64, l: f64, k_azimuthal: f64) -> Result<Self> {
        let n = l + mu;
        if l < mu.abs() - INTEGER_EPS || !is_integer(l - mu.abs()) {
            return Err(Error::InvalidQuantumNumbers(format!(
                "l = {l} is not on the ladder |mu| + integer for mu = {mu}"
            )));
        }
        if n < -INTEGER_EPS || !is_integer(n) {
            return Err(Error::InvalidQuantumNumbers(format!(
                "Jacobi degree l + mu = {n} is not a non-negative integer"
            )));
        }
        if k_azimuthal.abs() > l + INTEGER_EPS || !is_integer(k_azimuthal + l) {
            return Err(Error::InvalidQuantumNumbers(format!(
                "K = {k_azimuthal} is not in {{-l, -l+1, ..., l}} for l = {l}"
            )));
        }
        let k = k_azimuthal + mu;
        let a_ang = k - mu;
        let b_ang = mu;
        let mut out = Self {
            mu,
            l,
            k_azimuthal,
            k,
            a_ang,
            b_ang,
            alpha_hat: -a_ang - b_ang,
            beta_hat: a_ang - b_ang,
            n_jacobi: n.round() as u32,
            gamma: a_ang - b_ang + 1.0,
            branch: AngularBranch::Jacobi,
            log_norm: 0.0,
        };
        out.branch = out.select_branch()?;
        let integrand = |t: f64| out.theta_raw(t).powi(2) * t.sin();
        // the raw profile can be huge (≈ (l+K)!/(l−K)!), so the tolerance is
        // set relative to a coarse estimate of the integral
        let rule = QuadratureRule::gauss_legendre(20)?;
        let coarse: f64 = (0..64)
            .map(|i| rule.integrate(integrand, PI * f64::from(i) / 64.0, PI * f64::from(i + 1) / 64.0))
            .sum();
        let tol = 1e-12 * coarse.abs().max(f64::MIN_POSITIVE);
        let integral = 2.0 * PI * adaptive_quad(integrand, 0.0, PI, tol)?;
        if !(integral > 0.0) || !integral.is_finite() {
            return Err(Error::NonNormalizable(format!("angular norm integral is {integral}")));
        }
        out.log_norm = -0.5 * integral.ln();
        Ok(out)
    }

    fn select_branch(&self) -> Result<AngularBranch> {
        let (north, south) = self.jacobi_endpoint_exponents();
        if north > -1.0 + 1e-6 && south > -1.0 + 1e-6 {
            return Ok(AngularBranch::Jacobi);
        }
        let (north2, south2) = self.second_endpoint_exponents();
        if north2 > -1.0 + 1e-6 && south2 > -1.0 + 1e-6 {
            return Ok(AngularBranch::Second);
        }
        Err(Error::NonNormalizable(format!(
            "|Θ|² sin θ diverges at an endpoint for mu = {}, l = {}, K = {} \
             (exponents {north:.3}/{south:.3} and {north2:.3}/{south2:.3})",
            self.mu, self.l, self.k_azimuthal
        )))
    }

    /// Power `e` in `|Θ|² ~ (1∓x)^e` at θ → 0 and θ → π for the Jacobi branch,
    /// estimated from two sample points near each endpoint.
    pub fn jacobi_endpoint_exponents(&self) -> (f64, f64) {
        let f = |t: f64| weighted_jacobi(self.n_jacobi, self.alpha_hat, self.beta_hat, t).powi(2);
        let slope = |t1: f64, t2: f64, v1: f64, v2: f64| {
            // 1 − cos θ = 2 sin²(θ/2)
            let d1 = (t1 / 2.0).sin().powi(2);
            let d2 = (t2 / 2.0).sin().powi(2);
            if v1 == 0.0 && v2 == 0.0 {
                f64::INFINITY
            } else {
                (v1 / v2).ln() / (d1 / d2).ln()
            }
        };
        let (t1, t2) = (1e-5, 1e-6);
        let north = slope(t1, t2, f(t1), f(t2));
        let south = slope(t1, t2, f(PI - t1), f(PI - t2));
        (north, south)
    }

    fn second_endpoint_exponents(&self) -> (f64, f64) {
        let nf = f64::from(self.n_jacobi);
        let a = -nf - self.beta_hat;
        let terminating = a <= 0.0 && is_integer(a);
        // 2F1(a, b; c; z) ~ (1 − z)^{c−a−b} at z → 1 unless it terminates;
        // here c − a − b = −α̂.
        let north = if terminating || self.alpha_hat <= 0.0 {
            self.alpha_hat
        } else {
            -self.alpha_hat
        };
        (north, -self.beta_hat)
    }

    /// Unnormalized real profile `Θ(θ)` of the selected branch.
    pub fn theta_raw(&self, theta: f64) -> f64 {
        match self.branch {
            AngularBranch::Jacobi => {
                weighted_jacobi(self.n_jacobi, self.alpha_hat, self.beta_hat, theta)
            }
            AngularBranch::Second => {
                let nf = f64::from(self.n_jacobi);
                let one_minus = 2.0 * (theta / 2.0).sin().powi(2);
                let one_plus = 2.0 * (theta / 2.0).cos().powi(2);
                let z = one_plus / 2.0;
                let f = gauss_hypergeometric(
                    -nf - self.beta_hat,
                    nf + self.alpha_hat + 1.0,
                    1.0 - self.beta_hat,
                    z,
                    1e-16,
                )
                .unwrap_or(f64::NAN);
                f * (0.5 * self.alpha_hat * one_minus.ln() - 0.5 * self.beta_hat * one_plus.ln()).exp()
            }
        }
    }

    pub fn norm(&self) -> f64 {
        self.log_norm.exp()
    }

    /// `Θ(θ)` times the normalization constant.
    pub fn theta_normalized(&self, theta: f64) -> f64 {
        self.theta_raw(theta) * self.norm()
    }

    /// `Y(θ, φ)`; θ must stay outside the Dirac-string cone.
    pub fn eval(&self, theta: f64, phi: f64, normalized: bool) -> Result<Complex64> {
        check_theta(theta)?;
        let m = if normalized {
            self.theta_normalized(theta)
        } else {
            self.theta_raw(theta)
        };
        Ok(Complex64::from_polar(1.0, self.k * phi) * m)
    }

    /// `e^{ikφ}` returns to itself after a full turn only for integer `k`.
    pub fn is_single_valued(&self) -> bool {
        is_integer(self.k)
    }
}

pub(crate) fn check_theta(theta: f64) -> Result<()> {
    if !theta.is_finite() || !(0.0..=PI).contains(&theta) {
        return Err(Error::DomainError(format!("theta = {theta} outside [0, pi]")));
    }
    if theta > PI - DIRAC_STRING_DELTA {
        return Err(Error::StringSingularity { theta });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_examples() {
        let p = AngularParams::new(0.0, 1.0, 0.0).unwrap();
        assert_eq!((p.alpha_hat, p.beta_hat, p.n_jacobi), (0.0, 0.0, 1));
        let p = AngularParams::new(0.0, 1.0, 1.0).unwrap();
        assert_eq!((p.k, p.alpha_hat, p.beta_hat, p.n_jacobi), (1.0, -1.0, 1.0, 1));
        let p = AngularParams::new(1.0, 1.0, 0.0).unwrap();
        assert_eq!((p.k, p.alpha_hat, p.beta_hat, p.n_jacobi), (1.0, -1.0, -1.0, 2));
        assert_eq!(p.gamma, p.beta_hat + 1.0);
    }

    #[test]
    fn rejects_invalid_numbers() {
        assert!(matches!(AngularParams::new(0.0, 1.0, 2.0), Err(Error::InvalidQuantumNumbers(_))));
        assert!(matches!(AngularParams::new(-2.5, 100.0, 0.0), Err(Error::InvalidQuantumNumbers(_))));
        assert!(matches!(AngularParams::new(1.5, 1.0, 0.0), Err(Error::InvalidQuantumNumbers(_))));
    }

    #[test]
    fn constant_harmonic() {
        let p = AngularParams::new(0.0, 0.0, 0.0).unwrap();
        for i in 0..7 {
            let t = 0.1 + 0.45 * f64::from(i);
            let y = p.eval(t, 0.7, true).unwrap();
            assert!((y.norm_sqr() - 1.0 / (4.0 * PI)).abs() < 1e-12);
        }
    }

    #[test]
    fn dipole_shape() {
        let p = AngularParams::new(0.0, 1.0, 0.0).unwrap();
        let scale = p.eval(0.3, 0.0, true).unwrap().norm() / 0.3f64.cos().abs();
        for t in [0.5, 1.0, 2.0, 2.9] {
            let y = p.eval(t, 1.0, true).unwrap().norm();
            assert!((y - scale * t.cos().abs()).abs() < 1e-12);
        }
    }

    #[test]
    fn string_is_excluded() {
        let p = AngularParams::new(0.0, 2.0, 1.0).unwrap();
        assert!(matches!(p.eval(PI - 1e-7, 0.0, true), Err(Error::StringSingularity { .. })));
        assert!(p.eval(PI - 2e-6, 0.0, true).is_ok());
        assert!(matches!(p.eval(-0.1, 0.0, true), Err(Error::DomainError(_))));
    }

    #[test]
    fn half_integer_monopole_is_multivalued() {
        let p = AngularParams::new(-2.5, 100.5, 0.5).unwrap();
        assert!(p.is_single_valued());
        let q = AngularParams::new(-0.5, 1.5, 1.5).unwrap();
        assert!(q.is_single_valued());
        let r = AngularParams::new(0.0, 2.0, 1.0).unwrap();
        let a = r.eval(1.0, 0.4, true).unwrap();
        let b = r.eval(1.0, 0.4 + 2.0 * PI, true).unwrap();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn regular_jacobi_branch_chosen_for_negative_parameters() {
        let p = AngularParams::new(1.0, 1.0, 0.0).unwrap();
        assert_eq!(p.branch, AngularBranch::Jacobi);
        let (n, s) = p.jacobi_endpoint_exponents();
        assert!((n - 1.0).abs() < 1e-3 && (s - 1.0).abs() < 1e-3);
    }
}
