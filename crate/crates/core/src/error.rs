use thiserror::Error;

/// Failure modes shared by every module of the solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("no convergence: {0}")]
    NonConvergence(String),

    #[error("domain error: {0}")]
    DomainError(String),

    /// The radial index ν is imaginary: the wavefunction falls to the center
    /// and no bound state exists at this angular momentum.
    #[error("imaginary nu: radicand {radicand} <= 0 at l = {l}")]
    ImaginaryNu { l: f64, radicand: f64 },

    #[error("no bound states below l = {cap}")]
    NoBoundStates { cap: f64 },

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),

    #[error("point lies on the Dirac string (theta = {theta})")]
    StringSingularity { theta: f64 },

    #[error("non-normalizable angular function: {0}")]
    NonNormalizable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
