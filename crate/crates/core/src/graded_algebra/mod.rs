//! Graded rings given by generators and rewrite rules, with degree slices.

mod degree;
mod element;
mod hom;
mod ring;

use thiserror::Error;

use crate::exact_abelian::AbelianError;
use crate::expr::ParseError;

pub use degree::{Degree, GradingKind, Variant};
pub use element::{Monomial, RingElement};
pub use hom::{verify_ring_hom, HomFailure, RingHom};
pub use ring::{
    DegreeComponent, GeneratorSpec, PresentedRing, RewriteRule, RingBuilder, GENERATOR_ORDER,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown generator `{name}` in {ring}")]
    UnknownGenerator { ring: String, name: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("element {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: Degree, found: Degree },
    #[error("slice at degree {degree} is not stable at exponent bound {bound}")]
    UnstableSlice { degree: Degree, bound: u32 },
    #[error("{element} does not lie in the degree {degree} slice")]
    NotInComponent { element: String, degree: Degree },
    #[error("ring certification failed: {0}")]
    Certification(String),
    #[error("unknown ring `{0}`")]
    UnknownRing(String),
    #[error("bad element json: {0}")]
    Json(String),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
}
