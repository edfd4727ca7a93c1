//! Push-forwards along the torus projections, the transform `T`, the
//! Künneth split for products with the flip circle, Gysin tables, group
//! cohomology of `Z/2` and the connecting maps `δ`.

mod tables;

use thiserror::Error;

use crate::exact_abelian::AbelianError;
use crate::graded_algebra::{
    AlgebraError, Degree, Monomial, PresentedRing, RingElement, RingHom, Variant,
};
use crate::paper_rings::{ring, Dictionary, DictionaryName, FOracle, OracleError, RingName};

pub use tables::{
    base_table, delta, delta_prime, group_cohomology_z2, gysin_cohomology, kunneth_split,
    kunneth_step, slice_rmodule, GradedGroupTable, KunnethBase, TableEntry, Theory,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("axis must be 1 or 2, got {0}")]
    BadAxis(usize),
    #[error("{0} is not in the image of the free decomposition")]
    NotDecomposable(String),
    #[error("group cohomology needs a non-negative degree, got {0}")]
    NegativeDegree(i64),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

fn circle() -> &'static PresentedRing {
    ring(RingName::KkCircleFlip)
}

fn torus() -> &'static PresentedRing {
    ring(RingName::KkTorus2)
}

/// `π_i^*` from the flip circle to the flip 2-torus: `χ ↦ χ_i`.
pub fn pullback_hom(axis: usize) -> Result<RingHom<'static>, TransformError> {
    let chi = match axis {
        1 => "chi1",
        2 => "chi2",
        a => return Err(TransformError::BadAxis(a)),
    };
    Ok(RingHom::from_exprs(
        circle(),
        torus(),
        &[("t", "t"), ("sigma", "sigma"), ("chi", chi)],
    )?)
}

pub fn pullback(axis: usize, a: &RingElement) -> Result<RingElement, TransformError> {
    Ok(pullback_hom(axis)?.apply(a))
}

/// `(π_axis)_*`: integrates over the other factor. Writing
/// `a = π^*(b_0) + χ_other · π^*(b_1)` it returns `b_1`.
pub fn pushforward_torus2(axis: usize, a: &RingElement) -> Result<RingElement, TransformError> {
    let t = torus();
    let c = circle();
    let (keep, other) = match axis {
        1 => (
            t.generator_index("χ₁").unwrap(),
            t.generator_index("χ₂").unwrap(),
        ),
        2 => (
            t.generator_index("χ₂").unwrap(),
            t.generator_index("χ₁").unwrap(),
        ),
        x => return Err(TransformError::BadAxis(x)),
    };
    let (ct, cs, cx) = (
        c.generator_index("t").unwrap(),
        c.generator_index("σ").unwrap(),
        c.generator_index("χ").unwrap(),
    );
    let (tt, ts) = (
        t.generator_index("t").unwrap(),
        t.generator_index("σ").unwrap(),
    );
    let a = t.normalize(a);
    let mut base = RingElement::zero();
    let mut fiber = RingElement::zero();
    for (m, coeff) in a.terms() {
        let e = m.exponents();
        let mut down = vec![0u32; c.ngens()];
        down[ct] = e[tt];
        down[cs] = e[ts];
        down[cx] = e[keep];
        match e[other] {
            0 => base.add_term(Monomial(down), coeff.clone()),
            1 => fiber.add_term(Monomial(down), coeff.clone()),
            _ => return Err(TransformError::NotDecomposable(t.format(&a))),
        }
    }
    let (base, fiber) = (c.normalize(&base), c.normalize(&fiber));
    // reassemble as a check on the decomposition
    let chi_other = t.monomial_element(&Monomial::generator(t.ngens(), other));
    let back = t.add(
        &pullback(axis, &base)?,
        &t.mul(&chi_other, &pullback(axis, &fiber)?),
    );
    if back != a {
        return Err(TransformError::NotDecomposable(t.format(&a)));
    }
    Ok(fiber)
}

/// `T(a) = (π_2)_*((1 + t χ₁χ₂) π_1^*(a))`.
pub fn t_transform(a: &RingElement) -> Result<RingElement, TransformError> {
    let t = torus();
    let kernel = t.parse("1 + t*chi1*chi2")?;
    pushforward_torus2(2, &t.mul(&kernel, &pullback(1, a)?))
}

pub fn t_power(k: u32, a: &RingElement) -> Result<RingElement, TransformError> {
    let mut x = circle().normalize(a);
    for _ in 0..k {
        x = t_transform(&x)?;
    }
    Ok(x)
}

/// The additive basis of the flip circle's K-theory in display order.
pub const CIRCLE_BASIS: [&str; 6] = ["1", "t", "sigma*chi", "chi", "t*chi", "sigma"];

/// `T^k` on each basis element, as (input, output) pairs.
pub fn t_power_table(k: u32) -> Result<Vec<(RingElement, RingElement)>, TransformError> {
    CIRCLE_BASIS
        .iter()
        .map(|s| {
            let x = circle().parse(s)?;
            let y = t_power(k, &x)?;
            Ok((x, y))
        })
        .collect()
}

/// Whether `T^k` acts as multiplication by `scalar` on the whole basis.
pub fn t_power_is_multiplication(k: u32, scalar: &str) -> Result<bool, TransformError> {
    let c = circle();
    let s = c.parse(scalar)?;
    for (x, y) in t_power_table(k)? {
        if c.mul(&s, &x) != y {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The section map `j^*: K^1_±(S̃¹) → K^0_{Z/2}(S̃¹ × S̃¹)`, read through `F`
/// and the two dictionaries; the new circle is the second factor.
pub fn j_star(oracle: &FOracle, x: &RingElement) -> Result<RingElement, TransformError> {
    let circle = Dictionary::new(DictionaryName::Circle)?;
    let torus = Dictionary::new(DictionaryName::Torus2)?;
    let img = circle.image(oracle, &circle.ring.normalize(x), Variant::Pm)?;
    torus
        .preimage(oracle, &img, Variant::Eq)?
        .ok_or_else(|| TransformError::NotDecomposable(circle.ring.format(x)))
}

/// `(π_1)_* ∘ j^*` on each basis element of `K^1_±(S̃¹)`, paired with its input.
pub fn pushforward_after_section(
    oracle: &FOracle,
) -> Result<Vec<(RingElement, RingElement)>, TransformError> {
    let c = circle();
    let comp = c.component(Degree::pm(1))?;
    comp.basis
        .iter()
        .map(|m| {
            let x = c.monomial_element(m);
            let y = pushforward_torus2(1, &j_star(oracle, &x)?)?;
            Ok((x, y))
        })
        .collect()
}

pub fn pushforward_after_section_is_identity(oracle: &FOracle) -> Result<bool, TransformError> {
    Ok(pushforward_after_section(oracle)?
        .iter()
        .all(|(x, y)| x == y))
}

/// Forgetting the involution, from the equivariant cohomology rings to the
/// ordinary ones. `t^{1/2}` goes to zero.
pub fn forgetful_hom(name: RingName) -> Result<RingHom<'static>, TransformError> {
    let (target, images): (RingName, &[(&str, &str)]) = match name {
        RingName::HhPoint => (RingName::HPoint, &[("t12", "0")]),
        RingName::HhCircleTrivial => (RingName::HCircle, &[("t12", "0"), ("e", "x")]),
        RingName::HhCircleFlip => (RingName::HCircle, &[("t12", "0"), ("chi", "x")]),
        RingName::HhCpInfty => (RingName::HCpInfty, &[("t12", "0"), ("c", "c")]),
        other => {
            return Err(TransformError::Unsupported(format!(
                "no forgetful map from {other}"
            )))
        }
    };
    Ok(RingHom::from_exprs(ring(name), ring(target), images)?)
}

/// `W_3 = δ c`: the image of a class `c ∈ H^2_±` in `H^3_{Z/2}`.
pub fn w3(r: &PresentedRing, c: &RingElement) -> Result<RingElement, TransformError> {
    delta_prime(r, c)
}
