pub mod exact_abelian;
pub mod expr;
pub mod graded_algebra;
pub mod paper_rings;
pub mod tduality;
pub mod transforms;

pub use exact_abelian::{
    AbelianError, FGAbelianGroup, IntegerMatrix, RModule, RModuleDecomposition,
};
pub use graded_algebra::{AlgebraError, Degree, PresentedRing, RingElement, Variant};
pub use paper_rings::{ring, RingName};
