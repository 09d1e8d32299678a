//! Symbolic calculator for motivic classes attached to a smooth projective
//! curve of genus `g ≥ 2`: symmetric powers, the Jacobian, the motivic zeta
//! function, stacks of bundles with fixed determinant and the moduli spaces
//! `M(2, L)` and `M(3, L)`, together with a harness that machine-checks the
//! decomposition identities among them and their realizations.

pub mod error;
pub mod curve;
pub mod moduli;
pub mod realize;
pub mod report;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
