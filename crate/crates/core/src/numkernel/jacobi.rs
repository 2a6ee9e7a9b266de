use super::gamma::binomial;
use crate::error::{Error, Result};

/// Evaluation route chosen by [`jacobi_p`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobiPath {
    /// Three-term recurrence (both parameters above -1).
    Recurrence,
    /// A negative-integer parameter `-k` with `k <= n` is factored out as
    /// `((x∓1)/2)^k` times a lower-degree polynomial with parameter `+k`.
    Reduction,
    /// Explicit binomial sum.
    BinomialSum,
}

fn negative_integer_order(p: f64, n: u32) -> Option<u32> {
    if p < 0.0 && p == p.round() && -p <= f64::from(n) {
        Some((-p) as u32)
    } else {
        None
    }
}

/// Route taken by [`jacobi_p`] for the given parameters.
pub fn jacobi_path(n: u32, alpha: f64, beta: f64) -> JacobiPath {
    if alpha > -1.0 && beta > -1.0 {
        JacobiPath::Recurrence
    } else if negative_integer_order(alpha, n).is_some()
        || negative_integer_order(beta, n).is_some()
    {
        JacobiPath::Reduction
    } else {
        JacobiPath::BinomialSum
    }
}

/// `P_n^{(α,β)}(x)` by the standard three-term recurrence in `n`.
pub fn jacobi_p_recurrence(n: u32, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    let (a, b) = (alpha, beta);
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for k in 2..=n {
        let k = f64::from(k);
        let s = 2.0 * k + a + b;
        let lead = 2.0 * k * (k + a + b) * (s - 2.0);
        if lead == 0.0 {
            return Err(Error::DegenerateParameter(format!(
                "Jacobi recurrence degenerates at n = {k} for (α, β) = ({a}, {b})"
            )));
        }
        let next = ((s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) * cur
            - 2.0 * (k + a - 1.0) * (k + b - 1.0) * s * prev)
            / lead;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `P_n^{(α,β)}(x) = Σ_s C(n+α, n-s) C(n+β, s) ((x-1)/2)^s ((x+1)/2)^{n-s}`.
///
/// Valid for every real parameter pair; loses accuracy to cancellation for
/// large `n` in the interior of [-1, 1].
pub fn jacobi_p_binomial(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    let nf = f64::from(n);
    let lo = (x - 1.0) / 2.0;
    let hi = (x + 1.0) / 2.0;
    (0..=n)
        .map(|s| {
            binomial(nf + alpha, n - s)
                * binomial(nf + beta, s)
                * lo.powi(s as i32)
                * hi.powi((n - s) as i32)
        })
        .sum()
}

/// Jacobi polynomial `P_n^{(α,β)}(x)`.
///
/// Dispatches on parameter degeneracy: recurrence when both parameters
/// exceed -1, factor reduction for negative-integer parameters, binomial sum
/// for anything else.
pub fn jacobi_p(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    match jacobi_path(n, alpha, beta) {
        JacobiPath::Recurrence => jacobi_p_recurrence(n, alpha, beta, x)
            .unwrap_or_else(|_| jacobi_p_binomial(n, alpha, beta, x)),
        JacobiPath::Reduction => {
            let nf = f64::from(n);
            if let Some(k) = negative_integer_order(alpha, n) {
                let coef = binomial(nf + beta, k) / binomial(nf, k);
                coef * ((x - 1.0) / 2.0).powi(k as i32) * jacobi_p(n - k, f64::from(k), beta, x)
            } else {
                let j = negative_integer_order(beta, n).expect("reduction path");
                let coef = binomial(nf + alpha, j) / binomial(nf, j);
                coef * ((x + 1.0) / 2.0).powi(j as i32) * jacobi_p(n - j, alpha, f64::from(j), x)
            }
        }
        JacobiPath::BinomialSum => jacobi_p_binomial(n, alpha, beta, x),
    }
}

/// Weighted Jacobi function `(1-x)^{α/2} (1+x)^{β/2} P_n^{(α,β)}(x)` at
/// `x = cos θ`.
///
/// The endpoint factors are formed from half-angle identities, and factors
/// `((x∓1)/2)^k` produced by negative-integer parameters are merged into the
/// weights analytically, so the result stays finite where the weight alone
/// would be singular.
pub fn weighted_jacobi(n: u32, alpha: f64, beta: f64, theta: f64) -> f64 {
    let nf = f64::from(n);
    if jacobi_path(n, alpha, beta) == JacobiPath::Reduction {
        if let Some(k) = negative_integer_order(alpha, n) {
            let coef = binomial(nf + beta, k) / binomial(nf, k);
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            return coef * sign * 0.5f64.powi(k as i32)
                * weighted_jacobi(n - k, f64::from(k), beta, theta);
        }
        let j = negative_integer_order(beta, n).expect("reduction path");
        let coef = binomial(nf + alpha, j) / binomial(nf, j);
        return coef * 0.5f64.powi(j as i32) * weighted_jacobi(n - j, alpha, f64::from(j), theta);
    }
    let one_minus = 2.0 * (theta / 2.0).sin().powi(2);
    let one_plus = 2.0 * (theta / 2.0).cos().powi(2);
    let p = jacobi_p(n, alpha, beta, theta.cos());
    if p == 0.0 {
        return 0.0;
    }
    let log_w = 0.5 * alpha * one_minus.ln() + 0.5 * beta * one_plus.ln();
    p * log_w.exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_examples() {
        assert_eq!(jacobi_p(0, 3.7, -2.2, 0.3), 1.0);
        assert!((jacobi_p(1, 0.0, 0.0, 0.5) - 0.5).abs() < 1e-15);
        // Σ_s C(3, 2-s) C(2, s) (-1/2)^s (1/2)^{2-s} at x = 0
        let oracle: f64 = 3.0 * 0.25 - 2.0 * 3.0 * 0.25 + 0.25;
        assert!((jacobi_p(2, 1.0, 0.0, 0.0) - oracle).abs() < 1e-15);
    }

    #[test]
    fn dispatch_routes() {
        assert_eq!(jacobi_path(4, 0.0, 0.0), JacobiPath::Recurrence);
        assert_eq!(jacobi_path(4, -2.0, 2.0), JacobiPath::Reduction);
        assert_eq!(jacobi_path(4, 1.0, -3.0), JacobiPath::Reduction);
        assert_eq!(jacobi_path(1, -3.0, 0.0), JacobiPath::BinomialSum);
        assert_eq!(jacobi_path(3, -1.5, 0.0), JacobiPath::BinomialSum);
    }

    #[test]
    fn reduction_matches_binomial_sum() {
        for &(n, a, b) in &[
            (1u32, -1.0, 1.0),
            (2, -1.0, -1.0),
            (2, -1.0, 0.5),
            (5, -3.0, 3.0),
            (6, 2.0, -4.0),
            (7, -2.0, -3.0),
        ] {
            for i in 0..=20 {
                let x = -1.0 + 0.1 * f64::from(i);
                let r = jacobi_p(n, a, b, x);
                let s = jacobi_p_binomial(n, a, b, x);
                assert!((r - s).abs() < 1e-12 * (1.0 + s.abs()), "n={n} a={a} b={b} x={x}");
            }
        }
    }

    #[test]
    fn weighted_merges_endpoint_factor() {
        // μ = 0, l = 1, k = 1: weighted P_1^{(-1,1)} = -sin θ
        for i in 0..10 {
            let th = 0.05 + 0.3 * f64::from(i);
            assert!((weighted_jacobi(1, -1.0, 1.0, th) + th.sin()).abs() < 1e-14);
        }
        // μ = 1, l = 1, K = 0: P_2^{(-1,-1)} = (x² - 1)/4, weighted = -sin θ / 4
        let th: f64 = 1.1;
        assert!((weighted_jacobi(2, -1.0, -1.0, th) + th.sin() / 4.0).abs() < 1e-14);
        assert_eq!(weighted_jacobi(1, -1.0, 1.0, 0.0), 0.0);
    }

    #[test]
    fn recurrence_stays_accurate_at_high_degree() {
        // P_100(0) for Legendre: (-1)^50 C(100,50) / 2^100
        let mut c = 1.0_f64;
        for i in 0..50 {
            c *= f64::from(100 - i) / f64::from(i + 1) / 4.0;
        }
        let got = jacobi_p(100, 0.0, 0.0, 0.0);
        assert!(((got - c) / c).abs() < 1e-12);
    }
}
