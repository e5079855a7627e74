//! Exact arithmetic engine for finite-dimensional alternative superalgebras
//! and their superbimodules.
//!
//! Everything is computed over exact fields: prime fields, the rationals and
//! simple algebraic extensions of those. No floating point is used anywhere.

pub mod bimodule;
pub mod catalog;
pub mod constructions;
pub mod enveloping;
pub mod error;
pub mod linalg;
pub mod scalars;
pub mod suites;
pub mod superalgebra;

pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use scalars::{Field, Poly, Scalar};
pub use superalgebra::SuperAlgebra;
pub use bimodule::SuperBimodule;
