use crate::error::{Error, Result};

/// Fixed Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    order: usize,
}

impl QuadratureRule {
    /// Builds the `order`-point rule by Newton iteration on `P_order`.
    pub fn gauss_legendre(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::DomainError("quadrature order must be positive".into()));
        }
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Ok(Self { nodes, weights, order })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Applies the rule on `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

/// Tuning for [`adaptive_quad_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    /// Maximum number of accepted plus pending subintervals.
    pub max_intervals: usize,
    /// Gauss–Legendre points per panel.
    pub rule_order: usize,
    /// Known exponential decay rate of the integrand, used to size panels for
    /// an infinite upper limit.
    pub decay_rate: f64,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            max_intervals: 200_000,
            rule_order: 20,
            decay_rate: 1.0,
        }
    }
}

/// Adaptive Gauss–Legendre integration of `f` over `[a, b]`.
///
/// `b` may be `f64::INFINITY`, in which case the integrand is assumed to
/// decay at least as fast as `exp(-decay_rate · x)`.
pub fn adaptive_quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    adaptive_quad_with(f, a, b, tol, &QuadOptions::default())
}

pub fn adaptive_quad_with<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    opts: &QuadOptions,
) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::DomainError(format!("tolerance must be positive, got {tol}")));
    }
    if !a.is_finite() || !(b > a) {
        return Err(Error::DomainError(format!("invalid interval [{a}, {b}]")));
    }
    let rule = QuadratureRule::gauss_legendre(opts.rule_order)?;
    if b.is_finite() {
        return integrate_finite(&f, a, b, tol, &rule, opts.max_intervals);
    }
    if !(opts.decay_rate > 0.0) {
        return Err(Error::DomainError("infinite upper limit needs a decay rate".into()));
    }
    // e^{-41.45} ≈ 1e-18: one panel spans eighteen decades of the envelope.
    let panel = 41.45 / opts.decay_rate;
    let mut total = 0.0;
    let mut lo = a;
    let mut previous = f64::INFINITY;
    for _ in 0..10_000 {
        let piece = integrate_finite(&f, lo, lo + panel, tol * 0.1, &rule, opts.max_intervals)?;
        total += piece;
        lo += panel;
        let tail_small = piece.abs() <= (tol * 1e-2).max(1e-17 * total.abs());
        if tail_small && piece.abs() <= previous {
            return Ok(total);
        }
        previous = piece.abs();
    }
    Err(Error::NonConvergence("semi-infinite tail never decayed".into()))
}

fn integrate_finite<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    rule: &QuadratureRule,
    max_intervals: usize,
) -> Result<f64> {
    let width = b - a;
    let mut stack = vec![(a, b, rule.integrate(f, a, b))];
    let mut total = 0.0;
    let mut comp = 0.0;
    let mut count = 1usize;
    while let Some((lo, hi, whole)) = stack.pop() {
        let mid = 0.5 * (lo + hi);
        let left = rule.integrate(f, lo, mid);
        let right = rule.integrate(f, mid, hi);
        let refined = left + right;
        let budget = tol * (hi - lo) / width;
        if !refined.is_finite() {
            return Err(Error::NonConvergence(format!(
                "integrand not finite on [{lo}, {hi}]"
            )));
        }
        let noise = 1e-14 * (left.abs() + right.abs());
        if (refined - whole).abs() <= budget.max(noise)
            || (hi - lo) <= 1e-13 * width.max(lo.abs())
        {
            let t = total + refined;
            comp += if total.abs() >= refined.abs() {
                (total - t) + refined
            } else {
                (refined - t) + total
            };
            total = t;
            continue;
        }
        count += 2;
        if count > max_intervals {
            return Err(Error::NonConvergence(format!(
                "refinement budget of {max_intervals} intervals exhausted on [{a}, {b}]"
            )));
        }
        stack.push((lo, mid, left));
        stack.push((mid, hi, right));
    }
    Ok(total + comp)
}

/// Point `z > p` beyond which `z^p e^{-z}` has fallen below `ratio` times its
/// peak value at `z = p`.
pub fn envelope_cutoff(power: f64, ratio: f64) -> f64 {
    let p = power.max(0.0);
    let target = -ratio.ln();
    // g(z) = (z - p) - p ln(z/p) - target = 0 on z > p
    let mut z = p + (2.0 * p * target).sqrt() + target;
    for _ in 0..60 {
        let g = if p > 0.0 {
            (z - p) - p * (z / p).ln() - target
        } else {
            z - target
        };
        let dg = if p > 0.0 { 1.0 - p / z } else { 1.0 };
        let step = g / dg;
        z -= step;
        if step.abs() < 1e-12 * z {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_invariants() {
        for order in [1usize, 2, 5, 20, 64] {
            let r = QuadratureRule::gauss_legendre(order).unwrap();
            assert_eq!(r.nodes().len(), order);
            assert!(r.weights().iter().all(|w| *w > 0.0));
            assert!((r.weights().iter().sum::<f64>() - 2.0).abs() < 1e-13);
        }
        assert!(QuadratureRule::gauss_legendre(0).is_err());
    }

    #[test]
    fn rule_is_exact_to_degree_2n_minus_1() {
        let r = QuadratureRule::gauss_legendre(6).unwrap();
        let got = r.integrate(|x| x.powi(11) + x.powi(10), -1.0, 1.0);
        assert!((got - 2.0 / 11.0).abs() < 1e-14);
    }

    #[test]
    fn adaptive_examples() {
        let tol = 1e-12;
        assert!((adaptive_quad(|x| x * x, 0.0, 1.0, tol).unwrap() - 1.0 / 3.0).abs() < tol);
        let e = adaptive_quad(|x| (-x).exp(), 0.0, f64::INFINITY, tol).unwrap();
        assert!((e - 1.0).abs() < tol);
        let s = adaptive_quad(f64::sin, 0.0, std::f64::consts::PI, tol).unwrap();
        assert!((s - 2.0).abs() < tol);
    }

    #[test]
    fn reports_budget_exhaustion() {
        let opts = QuadOptions {
            max_intervals: 8,
            ..QuadOptions::default()
        };
        let r = adaptive_quad_with(|x: f64| (1.0 / x).sin(), 1e-6, 1.0, 1e-14, &opts);
        assert!(matches!(r, Err(Error::NonConvergence(_))));
    }

    #[test]
    fn rejects_bad_interval() {
        assert!(adaptive_quad(|x| x, 1.0, 0.0, 1e-8).is_err());
        assert!(adaptive_quad(|x| x, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn cutoff_hits_ratio() {
        for p in [0.0, 3.0, 181.0] {
            let z = envelope_cutoff(p, 1e-18);
            let log_ratio = if p > 0.0 { p * (z / p).ln() - (z - p) } else { -z };
            assert!((log_ratio + 18.0 * 10f64.ln()).abs() < 1e-8, "p={p}");
        }
    }
}
