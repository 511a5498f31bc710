//! Exact chip-firing computations on outerplanar graph families: forest
//! counts, cyclic Jacobian models, sumset gonality, Dhar reduction and
//! Zeckendorf leading-term checks.

pub mod divisor;
pub mod error;
pub mod fibzeck;
pub mod graph;
pub mod jacobian;
pub mod sumset;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Family, Multigraph};
pub use sumset::AdditiveSet;
