//! Exact integer linear algebra: Smith normal form, finitely generated abelian
//! groups, homomorphisms between presented groups and `Z[t]/(t^2-1)`-modules.

mod group;
mod hom;
pub mod lattice;
mod matrix;
mod rmodule;
mod snf;

use thiserror::Error;

pub use group::{subquotient, AbelianPresentation, FGAbelianGroup};
pub use hom::{cochain_cohomology, exactness_check, GroupHom};
pub(crate) use matrix::bigint_to_json;
pub use matrix::IntegerMatrix;
pub use rmodule::{Fingerprint, Indecomposable, RModule, RModuleDecomposition};
pub use snf::{smith_normal_form, SmithDecomposition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("not an R-module: {0}")]
    NotAnRModule(String),
    #[error("classification failed: {0}")]
    ClassificationFailure(String),
}
