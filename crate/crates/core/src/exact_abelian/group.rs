use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::lattice::{image_basis, in_span, solve_matrix};
use super::matrix::json_bigint_vec;
use super::{smith_normal_form, AbelianError, IntegerMatrix};

/// A finitely generated abelian group in invariant-factor form: torsion
/// factors ascending (each dividing the next), then one `0` per free summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FGAbelianGroup {
    #[serde(with = "json_bigint_vec")]
    invariant_factors: Vec<BigInt>,
}

impl FGAbelianGroup {
    pub fn trivial() -> Self {
        FGAbelianGroup {
            invariant_factors: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FGAbelianGroup {
            invariant_factors: vec![BigInt::zero(); rank],
        }
    }

    /// `Z^rows / (column span of m)`.
    pub fn cokernel(m: &IntegerMatrix) -> Self {
        let snf = smith_normal_form(m);
        let diag = snf.diagonal();
        let mut factors: Vec<BigInt> = diag.iter().filter(|d| !d.is_one()).cloned().collect();
        factors.extend(std::iter::repeat_n(BigInt::zero(), m.rows() - diag.len()));
        FGAbelianGroup {
            invariant_factors: factors,
        }
    }

    /// Direct sum of cyclic groups of the given orders (`0` for `Z`), normalised.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        Self::cokernel(&IntegerMatrix::diagonal(orders))
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors
            .iter()
            .filter(|d| d.is_zero())
            .count()
    }

    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_zero())
            .cloned()
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.iter().all(Zero::is_zero)
    }

    /// Number of `Z/k` summands in the invariant-factor form.
    pub fn count_cyclic(&self, k: u32) -> usize {
        let k = BigInt::from(k);
        self.invariant_factors.iter().filter(|d| **d == k).count()
    }

    /// `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank() > 0 {
            return None;
        }
        Some(self.invariant_factors.iter().product())
    }

    pub fn direct_sum(&self, other: &FGAbelianGroup) -> FGAbelianGroup {
        let mut orders = self.invariant_factors.clone();
        orders.extend(other.invariant_factors.iter().cloned());
        Self::from_cyclic_orders(&orders)
    }

    /// The canonical presentation: one generator per invariant factor.
    pub fn presentation(&self) -> AbelianPresentation {
        AbelianPresentation::new(
            self.invariant_factors.len(),
            IntegerMatrix::diagonal(&self.invariant_factors),
        )
        .expect("square diagonal presentation")
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| {
                if d.is_zero() {
                    "Z".to_string()
                } else {
                    format!("Z/{d}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// `Z^generators / (column span of relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianPresentation {
    generators: usize,
    relations: IntegerMatrix,
}

impl AbelianPresentation {
    pub fn new(generators: usize, relations: IntegerMatrix) -> Result<Self, AbelianError> {
        if relations.rows() != generators {
            return Err(AbelianError::DimensionMismatch(format!(
                "relation matrix with {} rows for {} generators",
                relations.rows(),
                generators
            )));
        }
        Ok(AbelianPresentation {
            generators,
            relations,
        })
    }

    pub fn free(generators: usize) -> Self {
        AbelianPresentation {
            generators,
            relations: IntegerMatrix::zeros(generators, 0),
        }
    }

    /// Generators with the given additive orders (`0` for infinite order).
    pub fn cyclic(orders: &[BigInt]) -> Self {
        AbelianPresentation {
            generators: orders.len(),
            relations: IntegerMatrix::diagonal(orders),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntegerMatrix {
        &self.relations
    }

    pub fn group(&self) -> FGAbelianGroup {
        FGAbelianGroup::cokernel(&self.relations)
    }

    pub fn is_zero_element(&self, v: &[BigInt]) -> Result<bool, AbelianError> {
        in_span(&self.relations, v)
    }

    /// The subgroup generated by the columns of `sub` (given in this presentation's
    /// coordinates), presented on a basis of its lift to `Z^n`.
    pub fn subgroup(&self, sub: &IntegerMatrix) -> Result<AbelianPresentation, AbelianError> {
        let lifted = sub.hstack(&self.relations)?;
        subquotient(&image_basis(&lifted), &self.relations)
    }

    pub fn quotient_by(&self, sub: &IntegerMatrix) -> Result<AbelianPresentation, AbelianError> {
        AbelianPresentation::new(self.generators, self.relations.hstack(sub)?)
    }
}

/// `span(basis) / span(relations)`, where `basis` has independent columns and
/// its span contains every relation.
pub fn subquotient(
    basis: &IntegerMatrix,
    relations: &IntegerMatrix,
) -> Result<AbelianPresentation, AbelianError> {
    let coords = solve_matrix(basis, relations)?.ok_or_else(|| {
        AbelianError::NotWellDefined("relations are not contained in the sublattice".into())
    })?;
    AbelianPresentation::new(basis.cols(), coords)
}
