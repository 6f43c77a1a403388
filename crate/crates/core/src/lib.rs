//! Simulator for remote preparation of quantum states over invariant
//! ("dark") multipartite resources.
//!
//! The crate is organized bottom-up:
//!
//! - [`quantum`]: dense state vectors, unitaries, measurement, reductions.
//! - [`random`]: seeded Haar unitaries and random kets.
//! - [`dark`]: constructors and checks for the invariant resource states.
//! - [`ensembles`]: target-state families, rotated bases, corrections.
//! - [`protocols`]: the preparation protocols, branch enumeration, sampling
//!   and resource accounting.

pub mod dark;
pub mod ensembles;
pub mod protocols;
pub mod quantum;
pub mod random;

pub use quantum::{
    tensor, von_neumann_entropy, DensityMatrix, MeasurementBranch, Party, PureState,
    QuantumError, SubsystemLayout, UnitaryOp,
};
