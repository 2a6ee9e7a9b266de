//! Bound states of two dyons in the Klein–Gordon equation.
//!
//! The crate is organized bottom-up: [`numkernel`] holds the special
//! functions and quadrature, [`charges`] the charge bookkeeping, [`spectrum`]
//! the closed-form energies, [`wavefunc`] the separated wavefunctions and
//! [`density`] the charge densities built from them. All internal quantities
//! are in natural units (ħ = c = 1) with the system mass as the scale.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod charges;
pub mod density;
pub mod error;
pub mod numkernel;
pub mod spectrum;
pub mod wavefunc;

pub use charges::{
    check_quantization, effective_charges, preset_system, quantization_holds, z4_pair_system,
    Convention, DyonCharge, DyonSystem, ElementaryCharges, Mass, MassUnit, NucleusMass, Preset,
    QuantizationCheck, QuantizationMode, UnitConvention, DEFAULT_ALPHA, HBAR_C_MEV_FM,
};
pub use density::{DensityProfile, Normalization};
pub use error::{Error, Result};
pub use spectrum::{Branch, EnergyResult, Level, QuantumNumbers, Violation};
pub use wavefunc::{AngularParams, BoundState, RadialParams};
