//! The concrete cohomology and K-theory rings, the fixed-point oracle `F` and
//! the dictionaries between ring monomials and equivariant bundles.

mod dictionary;
mod oracle;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::graded_algebra::{AlgebraError, Degree, GradingKind, PresentedRing};

pub use dictionary::{nu_star_image, Dictionary, DictionaryName};
pub use oracle::{
    default_oracle, ExteriorClass, FOracle, OracleError, OracleImage, RClass, TorusTable,
    DEFAULT_TABLES_JSON,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingName {
    HhPoint,
    HhCircleTrivial,
    HhCircleFlip,
    HhCpInfty,
    HhUniversalBase,
    KkPoint,
    KkCircleFlip,
    KkTorus2,
    K0EquivCircle,
    HPoint,
    HCircle,
    HCpInfty,
}

impl RingName {
    pub const ALL: [RingName; 12] = [
        RingName::HhPoint,
        RingName::HhCircleTrivial,
        RingName::HhCircleFlip,
        RingName::HhCpInfty,
        RingName::HhUniversalBase,
        RingName::KkPoint,
        RingName::KkCircleFlip,
        RingName::KkTorus2,
        RingName::K0EquivCircle,
        RingName::HPoint,
        RingName::HCircle,
        RingName::HCpInfty,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RingName::HhPoint => "hh_point",
            RingName::HhCircleTrivial => "hh_circle_trivial",
            RingName::HhCircleFlip => "hh_circle_flip",
            RingName::HhCpInfty => "hh_cp_infty",
            RingName::HhUniversalBase => "hh_universal_base",
            RingName::KkPoint => "kk_point",
            RingName::KkCircleFlip => "kk_circle_flip",
            RingName::KkTorus2 => "kk_torus2",
            RingName::K0EquivCircle => "k0_equiv_circle",
            RingName::HPoint => "h_point",
            RingName::HCircle => "h_circle",
            RingName::HCpInfty => "h_cp_infty",
        }
    }
}

impl fmt::Display for RingName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RingName {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RingName::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| AlgebraError::UnknownRing(s.into()))
    }
}

const T12: (&str, &str) = ("t^{1/2}", "t12");

/// Builds and certifies a ring from its presentation.
pub fn build_ring(name: RingName) -> Result<PresentedRing, AlgebraError> {
    use GradingKind::*;
    let b = PresentedRing::builder(
        name.as_str(),
        match name {
            RingName::KkPoint
            | RingName::KkCircleFlip
            | RingName::KkTorus2
            | RingName::K0EquivCircle => KTheory,
            RingName::HPoint | RingName::HCircle | RingName::HCpInfty => NonEquivariant,
            _ => Cohomology,
        },
    );
    let half = |b: crate::graded_algebra::RingBuilder| {
        b.generator(T12.0, T12.1, Degree::pm(1), 2)
            .derived("t", "t12^2")
    };
    let k_base = |b: crate::graded_algebra::RingBuilder| {
        b.generator("t", "t", Degree::eq(0), 0)
            .generator("σ", "sigma", Degree::pm(1), 0)
    };
    let k_rules = |b: crate::graded_algebra::RingBuilder| {
        b.rule("t^2", "1")
            .rule("sigma^2", "1 - t")
            .rule("t*sigma", "-sigma")
    };
    match name {
        RingName::HhPoint => half(b).build(),
        RingName::HhCircleTrivial => half(b)
            .generator("e", "e", Degree::eq(1), 0)
            .rule("e^2", "0")
            .build(),
        RingName::HhCircleFlip => half(b)
            .generator("χ", "chi", Degree::pm(1), 0)
            .rule("chi^2", "t12*chi")
            .build(),
        RingName::HhCpInfty => half(b).generator("c", "c", Degree::pm(2), 0).build(),
        RingName::HhUniversalBase => half(b)
            .generator("c", "c", Degree::pm(2), 0)
            .generator("ĉ", "chat", Degree::pm(2), 0)
            .rule("c*chat", "0")
            .build(),
        RingName::KkPoint => k_rules(k_base(b)).build(),
        RingName::KkCircleFlip => k_rules(k_base(b).generator("χ", "chi", Degree::pm(1), 0))
            .rule("chi^2", "sigma*chi")
            .build(),
        RingName::KkTorus2 => k_rules(
            k_base(b)
                .generator("χ₁", "chi1", Degree::pm(1), 0)
                .generator("χ₂", "chi2", Degree::pm(1), 0),
        )
        .rule("chi1^2", "sigma*chi1")
        .rule("chi2^2", "sigma*chi2")
        .build(),
        RingName::K0EquivCircle => b
            .generator("t", "t", Degree::eq(0), 0)
            .generator("ℓ", "ell", Degree::eq(0), 0)
            .rule("t^2", "1")
            .rule("ell^2", "2*ell")
            .rule("t*ell", "-ell")
            .build(),
        RingName::HPoint => b.build(),
        RingName::HCircle => b
            .generator("x", "x", Degree::eq(1), 0)
            .rule("x^2", "0")
            .build(),
        RingName::HCpInfty => b.generator("c", "c", Degree::eq(2), 0).build(),
    }
}

/// The certified ring, built once per process.
pub fn ring(name: RingName) -> &'static PresentedRing {
    static CACHE: [OnceLock<PresentedRing>; 12] = [const { OnceLock::new() }; 12];
    let i = RingName::ALL
        .iter()
        .position(|r| *r == name)
        .expect("listed ring");
    CACHE[i].get_or_init(|| {
        build_ring(name).unwrap_or_else(|e| panic!("built-in ring {name} failed: {e}"))
    })
}

pub fn ring_by_name(name: &str) -> Result<&'static PresentedRing, AlgebraError> {
    Ok(ring(name.parse()?))
}
