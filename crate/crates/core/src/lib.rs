//! Exact computer algebra for the extended W-algebra `M(p₊, p₋)`: Jack
//! polynomials, Virasoro Fock modules, screening singular vectors, zero-mode
//! algebra data and truncated characters.

pub mod certificate;
pub mod cli;
pub mod error;
pub mod fock;
pub mod jack;
pub mod linalg;
pub mod partitions;
pub mod scalars;
pub mod screening;
pub mod symfun;
pub mod virchar;
pub mod walgebra;

pub use error::{Error, Result};
