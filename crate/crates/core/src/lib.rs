//! A desk-scale laboratory for instantaneous noise-based logic.
//!
//! Logic values ride on random telegraph waves (RTWs): clocked `±1` square
//! waves that redraw their value at every clock period. `N` noise-bits use
//! `2N` independent reference waves `L_r, H_r`; products of one reference per
//! bit are the basis vectors of a `2^N`-dimensional hyperspace.
//!
//! * [`wave`], [`seed`], [`reference`]: deterministic RTW generation and the
//!   waveform algebra.
//! * [`hyperspace`]: product strings, superpositions and the product-form
//!   universe synthesis, with an expanded-sum oracle.
//! * [`readout`]: recovering a product string from its waveform (brute-force
//!   and GF(2) decoders), a failure-rate harness and closed-form bounds.
//! * [`sinus`]: the sinusoidal alternative, its degeneracy and bandwidth.
//! * [`experiments`]: seed-deterministic experiments with CSV/JSON reports,
//!   driven by the `nbl-lab` binary.

pub mod error;
pub mod experiments;
pub mod gf2;
pub mod hyperspace;
pub mod readout;
pub mod reference;
pub mod seed;
pub mod sinus;
pub mod wave;

pub use error::{NblError, Result};
pub use hyperspace::{
    enumerate_superpositions, expand_universe, realize_product, realize_superposition,
    synthesize_universe, OpCounter, ProductString, Superposition,
};
pub use readout::{
    brute_force_readout, gf2_fast_readout, measure_failure_rate, stacho_clock_bound,
    timeshifted_readout_steps, ReadoutResult, ReadoutStatus, Survivors,
};
pub use reference::{make_reference_system, ReferenceSystem};
pub use seed::{Role, SeedPath, SeedSpec};
pub use sinus::{DegeneracyReport, SinusKind, SinusRepresentation};
pub use wave::{generate_rtw, multiply, time_average_product, ClockedWave, IntegerWave};
