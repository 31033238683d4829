//! Power graphs of the abelian groups Z_m x Z_n: construction, equitable
//! partitions, exact characteristic polynomials and closed-form spectra.

pub mod charpoly;
pub mod error;
pub mod formulas;
pub mod group;
pub mod matrix;
pub mod numtheory;
pub mod partition;
pub mod powergraph;

pub use error::{Error, Result};
