//! Special-function and quadrature kernels.
//!
//! Everything here is a pure function of its arguments. The confluent and
//! Jacobi evaluators are written for the parameter ranges that occur in the
//! dyon problem: large angular momenta (l ~ 100), half-integer shifts, and
//! negative-integer Jacobi parameters.

mod confluent;
mod gamma;
mod jacobi;
mod quadrature;

pub use confluent::{
    confluent_polynomial, confluent_polynomial_coefficients, confluent_series,
    gauss_hypergeometric, whittaker_m, whittaker_m_second, MAX_SERIES_TERMS,
};
pub use gamma::{binomial, log_gamma, LogSum};
pub use jacobi::{
    jacobi_p, jacobi_p_binomial, jacobi_p_recurrence, jacobi_path, weighted_jacobi, JacobiPath,
};
pub use quadrature::{
    adaptive_quad, adaptive_quad_with, envelope_cutoff, QuadOptions, QuadratureRule,
};
