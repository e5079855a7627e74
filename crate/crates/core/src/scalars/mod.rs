//! Exact coefficient arithmetic.

pub mod expr;
pub mod factor;
pub mod field;
pub mod poly;

pub use expr::{parse_expr, parse_field, parse_poly, Expr};
pub use factor::{is_irreducible, poly_factor, poly_roots};
pub use field::{Field, Scalar};
pub use poly::Poly;
