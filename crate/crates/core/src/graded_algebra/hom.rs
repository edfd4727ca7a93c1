use std::fmt;

use num_bigint::BigInt;

use super::{AlgebraError, Degree, PresentedRing, RingElement};

/// Why a proposed assignment of generator images is not a ring map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomFailure {
    WrongArity {
        expected: usize,
        found: usize,
    },
    DegreeMismatch {
        generator: String,
        expected: Degree,
        found: Degree,
    },
    NotHomogeneous {
        generator: String,
    },
    TorsionViolated {
        generator: String,
    },
    RelationViolated {
        relation: String,
        residue: String,
    },
}

impl fmt::Display for HomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomFailure::WrongArity { expected, found } => {
                write!(f, "expected {expected} generator images, found {found}")
            }
            HomFailure::DegreeMismatch {
                generator,
                expected,
                found,
            } => {
                write!(
                    f,
                    "image of {generator} has degree {found}, expected {expected}"
                )
            }
            HomFailure::NotHomogeneous { generator } => {
                write!(f, "image of {generator} is not homogeneous")
            }
            HomFailure::TorsionViolated { generator } => {
                write!(
                    f,
                    "image of two-torsion generator {generator} is not two-torsion"
                )
            }
            HomFailure::RelationViolated { relation, residue } => {
                write!(f, "relation {relation} maps to {residue}")
            }
        }
    }
}

/// A candidate ring map given by generator images.
#[derive(Clone, Debug)]
pub struct RingHom<'a> {
    source: &'a PresentedRing,
    target: &'a PresentedRing,
    images: Vec<RingElement>,
}

impl<'a> RingHom<'a> {
    pub fn new(
        source: &'a PresentedRing,
        target: &'a PresentedRing,
        images: Vec<RingElement>,
    ) -> Self {
        let images = images.iter().map(|e| target.normalize(e)).collect();
        RingHom {
            source,
            target,
            images,
        }
    }

    /// Images given as expressions in the target, keyed by source generator name or alias.
    pub fn from_exprs(
        source: &'a PresentedRing,
        target: &'a PresentedRing,
        images: &[(&str, &str)],
    ) -> Result<Self, AlgebraError> {
        let mut out = vec![None; source.ngens()];
        for (name, expr) in images {
            let i = source
                .generator_index(name)
                .ok_or_else(|| AlgebraError::UnknownGenerator {
                    ring: source.name().into(),
                    name: (*name).into(),
                })?;
            out[i] = Some(target.parse(expr)?);
        }
        let images = out
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                e.ok_or_else(|| AlgebraError::UnknownGenerator {
                    ring: source.name().into(),
                    name: format!("missing image for {}", source.generators()[i].name),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RingHom::new(source, target, images))
    }

    pub fn source(&self) -> &'a PresentedRing {
        self.source
    }

    pub fn target(&self) -> &'a PresentedRing {
        self.target
    }

    pub fn images(&self) -> &[RingElement] {
        &self.images
    }

    /// Substitutes generator images; meaningful once `check` succeeds.
    pub fn apply(&self, a: &RingElement) -> RingElement {
        let mut acc = RingElement::zero();
        for (m, c) in a.terms() {
            let mut term = RingElement::constant(self.target.ngens(), c.clone());
            for (img, &e) in self.images.iter().zip(m.exponents()) {
                for _ in 0..e {
                    term = self.target.mul(&term, img);
                }
            }
            acc = acc.plus(&term);
        }
        self.target.normalize(&acc)
    }

    pub fn check(&self) -> Result<(), HomFailure> {
        if self.images.len() != self.source.ngens() {
            return Err(HomFailure::WrongArity {
                expected: self.source.ngens(),
                found: self.images.len(),
            });
        }
        for (g, img) in self.source.generators().iter().zip(&self.images) {
            let expected = self.target.normalize_degree(g.degree);
            match self.target.homogeneous_degree(img) {
                Err(_) => {
                    return Err(HomFailure::NotHomogeneous {
                        generator: g.name.clone(),
                    })
                }
                Ok(Some(found)) if found != expected => {
                    return Err(HomFailure::DegreeMismatch {
                        generator: g.name.clone(),
                        expected,
                        found,
                    })
                }
                _ => {}
            }
            if g.additive_order == 2 && !self.target.scale(img, &BigInt::from(2)).is_zero() {
                return Err(HomFailure::TorsionViolated {
                    generator: g.name.clone(),
                });
            }
        }
        for r in self.source.rules() {
            let lhs = RingElement::monomial(r.lhs.clone(), BigInt::from(1));
            let diff = lhs.plus(&r.rhs.negated());
            let residue = self.apply(&diff);
            if !residue.is_zero() {
                return Err(HomFailure::RelationViolated {
                    relation: format!(
                        "{} = {}",
                        self.source.format_monomial(&r.lhs),
                        self.source.format(&r.rhs)
                    ),
                    residue: self.target.format(&residue),
                });
            }
        }
        Ok(())
    }
}

pub fn verify_ring_hom(
    source: &PresentedRing,
    target: &PresentedRing,
    images: Vec<RingElement>,
) -> bool {
    RingHom::new(source, target, images).check().is_ok()
}
