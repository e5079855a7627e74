//! Z2-graded algebras given by structure constants, with graded laws,
//! identity checking, Grassmann envelopes and the supercenter.

mod algebra;
mod checks;
mod identity;
mod json;

pub use algebra::{Element, SparseVec, SuperAlgebra, TABLE_CAP};
pub use checks::{
    center_even, check_alternative_ungraded, check_superalternative, check_superalternative_via_envelope,
    grassmann_envelope, is_graded_simple, supercenter, LawReport, LawWitness,
};
pub(crate) use checks::{run_laws, superalternative_laws, Law};
pub use identity::{
    alternative_identities, check_identity, superalternative_identities, GradedIdentity, IdentityReport, Term,
};
pub use json::AlgebraJson;
