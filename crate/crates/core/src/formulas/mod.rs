//! Closed forms for subgroup enumerations, exponents and spectra.

pub mod alpha;
pub mod dispatch;
pub mod enumeration;
pub mod spectra;

pub use alpha::*;
pub use dispatch::*;
pub use enumeration::*;
pub use spectra::*;
