//! Fixtures shared by the benchmarks.

use dyon_core::{
    preset_system, BoundState, DyonSystem, Mass, MassUnit, NucleusMass, Preset, QuantumNumbers,
    DEFAULT_ALPHA,
};

/// A preset system with `Z = 1` and its default orbiter mass.
pub fn system(preset: Preset) -> DyonSystem {
    preset_system(preset, 1, preset.default_mass(), NucleusMass::Infinite, DEFAULT_ALPHA)
        .expect("presets are valid")
}

/// The state behind the dyon density curves: `l = 34`, `N = 0`.
pub fn dyon_state() -> BoundState {
    let sys = system(Preset::DyonZ);
    BoundState::bound(&sys, QuantumNumbers::new(0, 34.0, 0.0)).expect("admissible state")
}

/// Hydrogen-like state in natural units with `m = 1`.
pub fn hydrogen_state(n_radial: u32, l: f64) -> BoundState {
    let sys = preset_system(
        Preset::Hydrogen,
        1,
        Mass::new(1.0, MassUnit::Natural),
        NucleusMass::Infinite,
        DEFAULT_ALPHA,
    )
    .expect("presets are valid");
    BoundState::bound(&sys, QuantumNumbers::new(n_radial, l, 0.0)).expect("admissible state")
}
