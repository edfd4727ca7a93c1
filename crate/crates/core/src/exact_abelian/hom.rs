use super::group::subquotient;
use super::lattice::{image_basis, kernel_basis, same_span, span_contains};
use super::{AbelianError, AbelianPresentation, IntegerMatrix};

/// A homomorphism between presented groups, as a matrix on generators.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: AbelianPresentation,
    target: AbelianPresentation,
    matrix: IntegerMatrix,
}

impl GroupHom {
    pub fn new(
        source: AbelianPresentation,
        target: AbelianPresentation,
        matrix: IntegerMatrix,
    ) -> Result<Self, AbelianError> {
        if matrix.rows() != target.generators() || matrix.cols() != source.generators() {
            return Err(AbelianError::DimensionMismatch(format!(
                "{}x{} matrix between groups on {} and {} generators",
                matrix.rows(),
                matrix.cols(),
                source.generators(),
                target.generators()
            )));
        }
        let images = matrix.mul(source.relations())?;
        if !span_contains(target.relations(), &images)? {
            return Err(AbelianError::NotWellDefined(
                "a source relation maps to a nonzero element".into(),
            ));
        }
        Ok(GroupHom {
            source,
            target,
            matrix,
        })
    }

    pub fn source(&self) -> &AbelianPresentation {
        &self.source
    }

    pub fn target(&self) -> &AbelianPresentation {
        &self.target
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    pub fn compose(&self, then: &GroupHom) -> Result<GroupHom, AbelianError> {
        GroupHom::new(
            self.source.clone(),
            then.target.clone(),
            then.matrix.mul(&self.matrix)?,
        )
    }

    /// Basis of the preimage in `Z^n` of the kernel.
    pub fn kernel_lattice(&self) -> Result<IntegerMatrix, AbelianError> {
        let n = self.source.generators();
        let big = self.matrix.hstack(self.target.relations())?;
        let ker = kernel_basis(&big);
        Ok(image_basis(&ker.top_rows(n)))
    }

    /// Basis of the preimage in `Z^m` of the image.
    pub fn image_lattice(&self) -> Result<IntegerMatrix, AbelianError> {
        Ok(image_basis(&self.matrix.hstack(self.target.relations())?))
    }

    pub fn kernel(&self) -> Result<AbelianPresentation, AbelianError> {
        subquotient(&self.kernel_lattice()?, self.source.relations())
    }

    pub fn image(&self) -> Result<AbelianPresentation, AbelianError> {
        subquotient(&self.image_lattice()?, self.target.relations())
    }

    pub fn cokernel(&self) -> Result<AbelianPresentation, AbelianError> {
        self.target.quotient_by(&self.matrix)
    }
}

/// Whether `im f = ker g` inside the common middle group.
pub fn exactness_check(f: &GroupHom, g: &GroupHom) -> Result<bool, AbelianError> {
    let mid_f = f.target();
    let mid_g = g.source();
    if mid_f.generators() != mid_g.generators() {
        return Err(AbelianError::DimensionMismatch(format!(
            "middle groups have {} and {} generators",
            mid_f.generators(),
            mid_g.generators()
        )));
    }
    if !same_span(mid_f.relations(), mid_g.relations())? {
        return Err(AbelianError::DimensionMismatch(
            "middle presentations differ".into(),
        ));
    }
    same_span(&f.image_lattice()?, &g.kernel_lattice()?)
}

/// `ker(next) / im(prev)` for a cochain complex of free groups,
/// `Z^a --prev--> Z^b --next--> Z^c`.
pub fn cochain_cohomology(
    prev: &IntegerMatrix,
    next: &IntegerMatrix,
) -> Result<super::FGAbelianGroup, AbelianError> {
    let b = next.cols();
    if prev.rows() != b {
        return Err(AbelianError::DimensionMismatch(format!(
            "differentials do not compose: {} rows into {} columns",
            prev.rows(),
            b
        )));
    }
    let f = GroupHom::new(
        AbelianPresentation::free(b),
        AbelianPresentation::free(next.rows()),
        next.clone(),
    )?;
    Ok(subquotient(&f.kernel_lattice()?, &image_basis(prev))?.group())
}
