use crate::error::{Error, Result};

/// Natural log of the gamma function for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::DomainError(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(statrs::function::gamma::ln_gamma(x))
}

/// Generalized binomial coefficient `C(x, k)` for real `x` and integer `k >= 0`,
/// evaluated as the falling-factorial product so negative and non-integer
/// upper arguments are handled without gamma-function poles.
pub fn binomial(x: f64, k: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (x - f64::from(i)) / f64::from(i + 1);
    }
    acc
}

/// Signed accumulator for terms supplied as `(ln|t|, sign)`.
///
/// Terms are stored and summed relative to the running maximum with Neumaier
/// compensation, so sums of products of large Pochhammer symbols never
/// overflow.
#[derive(Debug, Clone, Default)]
pub struct LogSum {
    terms: Vec<(f64, f64)>,
}

impl LogSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, log_abs: f64, sign: f64) {
        if sign != 0.0 && log_abs.is_finite() {
            self.terms.push((log_abs, sign.signum()));
        }
    }

    /// Returns `(ln|sum|, sign(sum))`; an empty or exactly cancelling sum has
    /// sign 0.
    pub fn finish(&self) -> (f64, f64) {
        let max = self
            .terms
            .iter()
            .map(|t| t.0)
            .fold(f64::NEG_INFINITY, f64::max);
        if !max.is_finite() {
            return (f64::NEG_INFINITY, 0.0);
        }
        let mut sum = 0.0_f64;
        let mut comp = 0.0_f64;
        for &(log_abs, sign) in &self.terms {
            let v = sign * (log_abs - max).exp();
            let t = sum + v;
            if sum.abs() >= v.abs() {
                comp += (sum - t) + v;
            } else {
                comp += (v - t) + sum;
            }
            sum = t;
        }
        let total = sum + comp;
        if total == 0.0 {
            (f64::NEG_INFINITY, 0.0)
        } else {
            (max + total.abs().ln(), total.signum())
        }
    }
}
