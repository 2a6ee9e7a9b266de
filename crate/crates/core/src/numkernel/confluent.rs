use crate::error::{Error, Result};

/// Term cap for the non-terminating hypergeometric series.
pub const MAX_SERIES_TERMS: usize = 20_000;

fn is_non_positive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// Terminating confluent series `1F1(-n; c; z)`, a degree-`n` polynomial in `z`.
///
/// For `c > 0` the value comes from the three-term recurrence in the degree,
/// `(c+k) M_{k+1} = (2k+c-z) M_k - k M_{k-1}`, which stays accurate past the
/// oscillatory region where the alternating series cancels. Other `c` fall
/// back to Horner's scheme over the series.
pub fn confluent_polynomial(n: u32, c: f64, z: f64) -> Result<f64> {
    for k in 0..n {
        if c + f64::from(k) == 0.0 {
            return Err(Error::DegenerateParameter(format!(
                "(c)_{} vanishes for c = {c}",
                k + 1
            )));
        }
    }
    if c > 0.0 {
        let (mut prev, mut cur) = (1.0, 1.0 - z / c);
        if n == 0 {
            return Ok(prev);
        }
        for k in 1..n {
            let kf = f64::from(k);
            let next = ((2.0 * kf + c - z) * cur - kf * prev) / (c + kf);
            prev = cur;
            cur = next;
        }
        return Ok(cur);
    }
    let nf = f64::from(n);
    let mut acc = 1.0;
    for k in (0..n).rev() {
        let kf = f64::from(k);
        acc = 1.0 + acc * (kf - nf) * z / ((c + kf) * (kf + 1.0));
    }
    Ok(acc)
}

/// Coefficients of `1F1(-n; c; z) = Σ_k c_k z^k` as `(ln|c_k|, sign)` pairs.
pub fn confluent_polynomial_coefficients(n: u32, c: f64) -> Result<Vec<(f64, f64)>> {
    let nf = f64::from(n);
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut log_abs = 0.0;
    let mut sign = 1.0;
    out.push((log_abs, sign));
    for k in 0..n {
        let kf = f64::from(k);
        let denom = c + kf;
        if denom == 0.0 {
            return Err(Error::DegenerateParameter(format!(
                "(c)_{} vanishes for c = {c}",
                k + 1
            )));
        }
        let ratio = (kf - nf) / (denom * (kf + 1.0));
        log_abs += ratio.abs().ln();
        sign *= ratio.signum();
        out.push((log_abs, sign));
    }
    Ok(out)
}

/// General confluent hypergeometric series `1F1(a; c; z)`.
///
/// Terms are accumulated with Neumaier compensation until a term's relative
/// contribution drops below `tol` past the series' turning point. A
/// non-positive-integer `a` is a polynomial and goes to
/// [`confluent_polynomial`] when `c > 0`.
pub fn confluent_series(a: f64, c: f64, z: f64, tol: f64) -> Result<f64> {
    if is_non_positive_integer(c) {
        return Err(Error::DegenerateParameter(format!(
            "1F1 lower parameter c = {c} is a non-positive integer"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::DomainError(format!("tolerance must be positive, got {tol}")));
    }
    if is_non_positive_integer(a) && c > 0.0 && -a <= f64::from(u32::MAX) {
        return confluent_polynomial((-a) as u32, c, z);
    }
    let mut sum = 1.0_f64;
    let mut comp = 0.0_f64;
    let mut term = 1.0_f64;
    for k in 0..MAX_SERIES_TERMS {
        let kf = k as f64;
        if a + kf == 0.0 {
            return Ok(sum + comp);
        }
        term *= (a + kf) * z / ((c + kf) * (kf + 1.0));
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        let past_turn = kf + 1.0 > z.abs() && kf + 1.0 > (a.abs() - c).max(0.0);
        if past_turn && term.abs() <= tol * (sum + comp).abs() {
            return Ok(sum + comp);
        }
        if !term.is_finite() {
            break;
        }
    }
    Err(Error::NonConvergence(format!(
        "1F1({a}; {c}; {z}) did not converge in {MAX_SERIES_TERMS} terms"
    )))
}

/// Gauss series `2F1(a, b; c; z)` for `|z| < 1` (terminating for any `z` when
/// `a` or `b` is a non-positive integer).
pub fn gauss_hypergeometric(a: f64, b: f64, c: f64, z: f64, tol: f64) -> Result<f64> {
    if is_non_positive_integer(c) {
        return Err(Error::DegenerateParameter(format!(
            "2F1 lower parameter c = {c} is a non-positive integer"
        )));
    }
    let terminating = is_non_positive_integer(a) || is_non_positive_integer(b);
    if !terminating && z.abs() >= 1.0 {
        return Err(Error::DomainError(format!("2F1 series needs |z| < 1, got {z}")));
    }
    let mut sum = 1.0_f64;
    let mut term = 1.0_f64;
    for k in 0..MAX_SERIES_TERMS {
        let kf = k as f64;
        if a + kf == 0.0 || b + kf == 0.0 {
            return Ok(sum);
        }
        term *= (a + kf) * (b + kf) * z / ((c + kf) * (kf + 1.0));
        sum += term;
        let past_turn = (kf + 1.0) * (1.0 - z.abs()) > (a + b - c).abs() + 1.0;
        if past_turn && term.abs() <= tol * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence(format!(
        "2F1({a}, {b}; {c}; {z}) did not converge in {MAX_SERIES_TERMS} terms"
    )))
}

fn confluent_any(a: f64, c: f64, z: f64) -> Result<f64> {
    if is_non_positive_integer(a) && a > -(u32::MAX as f64) {
        confluent_polynomial((-a) as u32, c, z)
    } else {
        confluent_series(a, c, z, 1e-16)
    }
}

/// Whittaker function `M_{ξ,ν}(z) = e^{-z/2} z^{1/2+ν} 1F1(ν+1/2-ξ; 2ν+1; z)`.
pub fn whittaker_m(xi: f64, nu: f64, z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(Error::DomainError(format!("whittaker_m needs z > 0, got {z}")));
    }
    let f = confluent_any(nu + 0.5 - xi, 2.0 * nu + 1.0, z)?;
    Ok(((0.5 + nu) * z.ln() - 0.5 * z).exp() * f)
}

/// Second solution `M_{ξ,-ν}(z)`; singular at the origin for `ν > 1/2` and
/// therefore rejected for bound states.
pub fn whittaker_m_second(xi: f64, nu: f64, z: f64) -> Result<f64> {
    whittaker_m(xi, -nu, z)
}
