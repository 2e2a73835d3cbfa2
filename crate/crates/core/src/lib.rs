//! Thermal tripartite negativity of a four-spin star network: a central
//! spin exchange-coupled to three outer spins.

pub mod entanglement;
pub mod error;
pub mod hilbert;
pub mod linalg;
pub mod model;
pub mod output;
pub mod sweeps;
pub mod thermal;

pub use error::{Error, ErrorKind, Result};
