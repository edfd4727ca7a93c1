//! Labelled bases matching K-theory ring monomials with bundles seen by `F`.
//!
//! Even classes of the ring over the flip `n`-torus map to `K^0_{Z/2}` of that
//! torus. Odd classes (in `K^1_±`) go through the suspension map `j^*` into
//! `K^0_{Z/2}` of the `(n+1)`-torus, whose last factor is the new circle.

use num_bigint::BigInt;

use super::oracle::{FOracle, OracleError, OracleImage};
use super::{ring, RingName};
use crate::exact_abelian::lattice::solve;
use crate::exact_abelian::{smith_normal_form, IntegerMatrix};
use crate::graded_algebra::{
    Degree, DegreeComponent, Monomial, PresentedRing, RingElement, Variant,
};

type Entries = &'static [(&'static str, &'static str)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DictionaryName {
    Circle,
    Torus2,
}

#[derive(Clone, Debug)]
pub struct Dictionary {
    pub name: DictionaryName,
    pub ring: &'static PresentedRing,
    /// Torus dimension of the space itself.
    pub n: usize,
    pub even: Vec<(Monomial, String)>,
    pub odd: Vec<(Monomial, String)>,
}

impl Dictionary {
    pub fn new(name: DictionaryName) -> Result<Self, OracleError> {
        let (ring_name, n, even, odd): (RingName, usize, Entries, Entries) = match name {
            DictionaryName::Circle => (
                RingName::KkCircleFlip,
                1,
                &[("1", "C0"), ("t", "C1"), ("sigma*chi", "C0 - L")],
                &[
                    ("chi", "C0 - H"),
                    ("t*chi", "C1*(C0 - H)"),
                    ("sigma", "C0 - L2"),
                ],
            ),
            DictionaryName::Torus2 => (
                RingName::KkTorus2,
                2,
                &[
                    ("1", "C0"),
                    ("t", "C1"),
                    ("chi1*chi2", "C0 - H"),
                    ("t*chi1*chi2", "C1*(C0 - H)"),
                    ("sigma*chi1", "C0 - L1"),
                    ("sigma*chi2", "C0 - L2"),
                ],
                &[
                    ("chi1", "C0 - H13"),
                    ("t*chi1", "C1*(C0 - H13)"),
                    ("chi2", "C0 - H23"),
                    ("t*chi2", "C1*(C0 - H23)"),
                    ("sigma", "C0 - L3"),
                    ("sigma*chi1*chi2", "(C0 - L3)*(C0 - H12)"),
                ],
            ),
        };
        let r = ring(ring_name);
        let to_mono = |s: &str| -> Result<Monomial, OracleError> {
            let e = r
                .parse(s)
                .map_err(|e| OracleError::Dictionary(e.to_string()))?;
            match e.terms().iter().next() {
                Some((m, c)) if e.terms().len() == 1 && *c == BigInt::from(1) => Ok(m.clone()),
                _ => Err(OracleError::Dictionary(format!(
                    "`{s}` is not a normal-form monomial"
                ))),
            }
        };
        let conv = |list: &[(&str, &str)]| -> Result<Vec<(Monomial, String)>, OracleError> {
            list.iter()
                .map(|(m, img)| Ok((to_mono(m)?, img.to_string())))
                .collect()
        };
        Ok(Dictionary {
            name,
            ring: r,
            n,
            even: conv(even)?,
            odd: conv(odd)?,
        })
    }

    fn entries(&self, variant: Variant) -> (&[(Monomial, String)], usize) {
        match variant {
            Variant::Eq => (&self.even, self.n),
            Variant::Pm => (&self.odd, self.n + 1),
        }
    }

    pub fn slice(&self, variant: Variant) -> DegreeComponent {
        let d = match variant {
            Variant::Eq => Degree::eq(0),
            Variant::Pm => Degree::pm(1),
        };
        self.ring.component(d).expect("K-theory slices are stable")
    }

    /// The image of a homogeneous element of `K^0_{Z/2}` (under `F`) or of
    /// `K^1_±` (under `F ∘ j^*`). Returns the torus dimension used.
    pub fn image(
        &self,
        oracle: &FOracle,
        a: &RingElement,
        variant: Variant,
    ) -> Result<OracleImage, OracleError> {
        let (entries, dim) = self.entries(variant);
        let mut acc = OracleImage::constant(dim, BigInt::from(0));
        for (m, c) in a.terms() {
            let (_, expr) = entries.iter().find(|(k, _)| k == m).ok_or_else(|| {
                OracleError::Dictionary(format!(
                    "{} has no dictionary entry in the {variant} slice",
                    self.ring.format_monomial(m)
                ))
            })?;
            acc = acc.add(&oracle.f_oracle(dim, expr)?.scaled(c));
        }
        Ok(acc)
    }

    fn image_matrix(
        &self,
        oracle: &FOracle,
        variant: Variant,
    ) -> Result<(IntegerMatrix, Vec<Monomial>), OracleError> {
        let (entries, dim) = self.entries(variant);
        let cols = entries
            .iter()
            .map(|(_, e)| Ok(oracle.f_oracle(dim, e)?.flatten()))
            .collect::<Result<Vec<_>, OracleError>>()?;
        let rows = cols[0].len();
        Ok((
            IntegerMatrix::from_columns(rows, &cols),
            entries.iter().map(|(m, _)| m.clone()).collect(),
        ))
    }

    /// The ring element whose image is `img`, if any.
    pub fn preimage(
        &self,
        oracle: &FOracle,
        img: &OracleImage,
        variant: Variant,
    ) -> Result<Option<RingElement>, OracleError> {
        let (m, monos) = self.image_matrix(oracle, variant)?;
        Ok(solve(&m, &img.flatten())?.map(|coords| {
            let mut e = RingElement::zero();
            for (mono, c) in monos.into_iter().zip(coords) {
                e.add_term(mono, c);
            }
            self.ring.normalize(&e)
        }))
    }

    /// Checks that the dictionary keys are exactly the slice basis and that the
    /// images form a basis of a direct summand of the oracle's module basis
    /// (all of it for the even part).
    pub fn certify_bases(&self, oracle: &FOracle) -> Result<(), OracleError> {
        for variant in [Variant::Eq, Variant::Pm] {
            let (entries, dim) = self.entries(variant);
            let mut keys: Vec<Monomial> = entries.iter().map(|(m, _)| m.clone()).collect();
            keys.sort();
            if keys != self.slice(variant).basis {
                return Err(OracleError::Dictionary(format!(
                    "{variant} keys differ from the slice basis"
                )));
            }
            let mut coords = Vec::new();
            for (m, expr) in entries {
                let img = oracle.f_oracle(dim, expr)?;
                coords.push(oracle.basis_coordinates(dim, &img)?.ok_or_else(|| {
                    OracleError::Dictionary(format!(
                        "image of {} is outside the basis span",
                        self.ring.format_monomial(m)
                    ))
                })?);
            }
            let c = IntegerMatrix::from_columns(coords[0].len(), &coords);
            let snf = smith_normal_form(&c);
            let unit = snf.diagonal().iter().all(|d| *d == BigInt::from(1));
            if snf.rank() != entries.len() || !unit {
                return Err(OracleError::Dictionary(format!(
                    "{variant} images do not span a direct summand"
                )));
            }
            if variant == Variant::Eq && c.rows() != c.cols() {
                return Err(OracleError::Dictionary(
                    "even images do not span all of K^0".into(),
                ));
            }
        }
        Ok(())
    }

    /// Exhaustive product checks: `F(ab) = F(a)F(b)` for even basis classes and
    /// `F j^*(a x) = π^*F(a) · F j^*(x)` for even `a` and odd `x`.
    pub fn certify_products(&self, oracle: &FOracle) -> Result<usize, OracleError> {
        let even = self.slice(Variant::Eq);
        let odd = self.slice(Variant::Pm);
        let mut checks = 0;
        for a in &even.basis {
            let ea = self.ring.monomial_element(a);
            let fa = self.image(oracle, &ea, Variant::Eq)?;
            for b in &even.basis {
                let eb = self.ring.monomial_element(b);
                let lhs = self.image(oracle, &self.ring.mul(&ea, &eb), Variant::Eq)?;
                let rhs = fa.mul(&self.image(oracle, &eb, Variant::Eq)?);
                if lhs != rhs {
                    return Err(OracleError::Dictionary(format!(
                        "product {} * {} disagrees with the oracle",
                        self.ring.format_monomial(a),
                        self.ring.format_monomial(b)
                    )));
                }
                checks += 1;
            }
            for x in &odd.basis {
                let ex = self.ring.monomial_element(x);
                let lhs = self.image(oracle, &self.ring.mul(&ea, &ex), Variant::Pm)?;
                let rhs = fa
                    .pullback_to(self.n + 1)
                    .mul(&self.image(oracle, &ex, Variant::Pm)?);
                if lhs != rhs {
                    return Err(OracleError::Dictionary(format!(
                        "module product {} * {} disagrees with the oracle",
                        self.ring.format_monomial(a),
                        self.ring.format_monomial(x)
                    )));
                }
                checks += 1;
            }
        }
        Ok(checks)
    }
}

/// `ν^*` on the K-theory of the flip circle, where `ν(u) = -u`, computed by
/// moving fixed-point data through the oracle.
pub fn nu_star_image(oracle: &FOracle, a: &RingElement) -> Result<RingElement, OracleError> {
    let dict = Dictionary::new(DictionaryName::Circle)?;
    let r = dict.ring;
    let mut acc = RingElement::zero();
    for (d, part) in r.homogeneous_parts(a) {
        let img = dict.image(oracle, &part, d.variant)?;
        if d.level.rem_euclid(2) != if d.variant == Variant::Eq { 0 } else { 1 } {
            return Err(OracleError::Dictionary(format!(
                "no dictionary in degree {d}"
            )));
        }
        let pre = dict
            .preimage(oracle, &img.flip_first_factor(), d.variant)?
            .ok_or_else(|| OracleError::Dictionary("flipped class has no preimage".into()))?;
        acc = acc.plus(&pre);
    }
    Ok(r.normalize(&acc))
}
