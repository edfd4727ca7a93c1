//! The map `F(x) = (f(x), x|_p)` from `K^0_{Z/2}` of a flip torus into
//! `K^0(T^n)` and one copy of `R` per fixed point, with `K^0(T^n)` modelled as
//! the even exterior algebra on `x_1..x_n` and `1 - H_ij = x_i x_j`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Deserialize;
use thiserror::Error;

use crate::exact_abelian::lattice::solve;
use crate::exact_abelian::{
    smith_normal_form, AbelianError, AbelianPresentation, IntegerMatrix, RModule,
};
use crate::expr::{parse_and_evaluate, ExprAlgebra, ParseError};

pub const DEFAULT_TABLES_JSON: &str = include_str!("../../golden/tables.json");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("no table for the {0}-torus")]
    UnknownTorus(usize),
    #[error("unknown table generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed golden tables: {0}")]
    Golden(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
    #[error("{0}")]
    Dictionary(String),
}

/// An element of `Λ(x_1..x_n)` stored by subset bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExteriorClass {
    n: usize,
    coeffs: BTreeMap<u32, BigInt>,
}

impl ExteriorClass {
    pub fn scalar(n: usize, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        ExteriorClass { n, coeffs }
    }

    /// `H_ij = 1 - x_i x_j` (1-based, `i < j`).
    pub fn h(n: usize, i: usize, j: usize) -> Self {
        let mut e = Self::scalar(n, BigInt::one());
        e.coeffs
            .insert((1 << (i - 1)) | (1 << (j - 1)), -BigInt::one());
        e
    }

    pub fn coefficient(&self, mask: u32) -> BigInt {
        self.coeffs.get(&mask).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, mask: u32, c: BigInt) {
        let e = self.coeffs.entry(mask).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        let mut out = Self::scalar(self.n, BigInt::zero());
        for (m, c) in &self.coeffs {
            out.add_term(*m, c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::scalar(self.n, BigInt::zero());
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                if a & b != 0 {
                    continue;
                }
                // sign of moving each x_j in b left past the larger x_i in a
                let swaps: u32 = (0..32)
                    .filter(|j| b >> j & 1 == 1)
                    .map(|j| (a >> j).count_ones())
                    .sum();
                let sign = if swaps.is_multiple_of(2) {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                out.add_term(a | b, ca * cb * sign);
            }
        }
        out
    }

    /// Pullback along the projection `T^m -> T^n` onto the first `n` factors.
    pub fn extend(&self, m: usize) -> Self {
        ExteriorClass {
            n: m,
            coeffs: self.coeffs.clone(),
        }
    }
}

/// `a + b t` in `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RClass {
    pub a: BigInt,
    pub b: BigInt,
}

impl RClass {
    pub fn new(a: i64, b: i64) -> Self {
        RClass {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        RClass {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        RClass {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RClass {
            a: &self.a * &o.a + &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

/// `F(x)`: the underlying class and the restriction to each fixed point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OracleImage {
    pub n: usize,
    pub forgetful: ExteriorClass,
    pub fixed: Vec<RClass>,
}

impl OracleImage {
    pub fn constant(n: usize, c: BigInt) -> Self {
        OracleImage {
            n,
            forgetful: ExteriorClass::scalar(n, c.clone()),
            fixed: vec![
                RClass {
                    a: c,
                    b: BigInt::zero()
                };
                1 << n
            ],
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        OracleImage {
            n: self.n,
            forgetful: self.forgetful.add(&o.forgetful),
            fixed: self
                .fixed
                .iter()
                .zip(&o.fixed)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        OracleImage {
            n: self.n,
            forgetful: self.forgetful.scaled(k),
            fixed: self.fixed.iter().map(|a| a.scaled(k)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scaled(&-BigInt::one()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        OracleImage {
            n: self.n,
            forgetful: self.forgetful.mul(&o.forgetful),
            fixed: self
                .fixed
                .iter()
                .zip(&o.fixed)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    /// Pullback along the projection of `T^m` onto its first `n` factors.
    pub fn pullback_to(&self, m: usize) -> Self {
        assert!(m >= self.n);
        let mask = (1usize << self.n) - 1;
        OracleImage {
            n: m,
            forgetful: self.forgetful.extend(m),
            fixed: (0..1usize << m)
                .map(|p| self.fixed[p & mask].clone())
                .collect(),
        }
    }

    /// Pullback along the flip `u -> -u` of the first factor. The flip is a
    /// rotation, so the underlying class is unchanged.
    pub fn flip_first_factor(&self) -> Self {
        OracleImage {
            n: self.n,
            forgetful: self.forgetful.clone(),
            fixed: (0..self.fixed.len())
                .map(|p| self.fixed[p ^ 1].clone())
                .collect(),
        }
    }

    /// Integer coordinates: even exterior coefficients, then `(a, b)` per fixed point.
    pub fn flatten(&self) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = (0u32..1 << self.n)
            .filter(|m| m.count_ones() % 2 == 0)
            .map(|m| self.forgetful.coefficient(m))
            .collect();
        for r in &self.fixed {
            v.push(r.a.clone());
            v.push(r.b.clone());
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.flatten().iter().all(Zero::is_zero)
    }
}

/// The printed values of `F` on named bundles over one torus.
#[derive(Clone, Debug)]
pub struct TorusTable {
    pub n: usize,
    pub fixed_points: Vec<Vec<i8>>,
    pub rows: Vec<(String, OracleImage)>,
}

#[derive(Deserialize)]
struct GoldenFile {
    format: u32,
    tori: Vec<GoldenTorus>,
}

#[derive(Deserialize)]
struct GoldenTorus {
    n: usize,
    fixed_points: Vec<Vec<i8>>,
    rows: Vec<GoldenRow>,
}

#[derive(Deserialize)]
struct GoldenRow {
    generator: String,
    forgetful: String,
    fixed: Vec<String>,
}

fn parse_forgetful(n: usize, s: &str) -> Result<ExteriorClass, OracleError> {
    let s = s.trim();
    if s == "1" {
        return Ok(ExteriorClass::scalar(n, BigInt::one()));
    }
    if s == "H" && n >= 2 {
        return Ok(ExteriorClass::h(n, 1, 2));
    }
    let digits: Vec<usize> = s
        .strip_prefix('H')
        .unwrap_or("")
        .chars()
        .filter_map(|c| c.to_digit(10))
        .map(|d| d as usize)
        .collect();
    match digits[..] {
        [i, j] if i < j && j <= n => Ok(ExteriorClass::h(n, i, j)),
        _ => Err(OracleError::Golden(format!("bad underlying class `{s}`"))),
    }
}

fn parse_r(s: &str) -> Result<RClass, OracleError> {
    match s.trim() {
        "1" => Ok(RClass::new(1, 0)),
        "t" => Ok(RClass::new(0, 1)),
        other => Err(OracleError::Golden(format!(
            "bad fixed-point value `{other}`"
        ))),
    }
}

/// The oracle: one table per torus dimension.
#[derive(Clone, Debug)]
pub struct FOracle {
    tables: BTreeMap<usize, TorusTable>,
}

impl FOracle {
    pub fn from_json(text: &str) -> Result<Self, OracleError> {
        let file: GoldenFile =
            serde_json::from_str(text).map_err(|e| OracleError::Golden(e.to_string()))?;
        if file.format != 1 {
            return Err(OracleError::Golden(format!(
                "unsupported format {}",
                file.format
            )));
        }
        let mut tables = BTreeMap::new();
        for t in file.tori {
            let n = t.n;
            let expected: Vec<Vec<i8>> = (0..1usize << n)
                .map(|p| {
                    (0..n)
                        .map(|i| if p >> i & 1 == 1 { -1 } else { 1 })
                        .collect()
                })
                .collect();
            if t.fixed_points != expected {
                return Err(OracleError::Golden(format!(
                    "unexpected fixed-point order for n = {n}"
                )));
            }
            let mut rows = Vec::new();
            for r in t.rows {
                if r.fixed.len() != 1 << n {
                    return Err(OracleError::Golden(format!(
                        "row {} has the wrong length",
                        r.generator
                    )));
                }
                let fixed = r
                    .fixed
                    .iter()
                    .map(|s| parse_r(s))
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push((
                    r.generator,
                    OracleImage {
                        n,
                        forgetful: parse_forgetful(n, &r.forgetful)?,
                        fixed,
                    },
                ));
            }
            tables.insert(
                n,
                TorusTable {
                    n,
                    fixed_points: t.fixed_points,
                    rows,
                },
            );
        }
        Ok(FOracle { tables })
    }

    pub fn table(&self, n: usize) -> Result<&TorusTable, OracleError> {
        self.tables.get(&n).ok_or(OracleError::UnknownTorus(n))
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.tables.keys().copied().collect()
    }

    pub fn generator(&self, n: usize, name: &str) -> Result<OracleImage, OracleError> {
        self.table(n)?
            .rows
            .iter()
            .find(|(g, _)| g == name)
            .map(|(_, img)| img.clone())
            .ok_or_else(|| OracleError::UnknownGenerator(name.into()))
    }

    /// `F` of an expression in the table generators.
    pub fn f_oracle(&self, n: usize, expr: &str) -> Result<OracleImage, OracleError> {
        self.table(n)?;
        parse_and_evaluate(&OracleAlgebra { oracle: self, n }, expr)
    }

    pub fn verify_relation_via_oracle(
        &self,
        n: usize,
        lhs: &str,
        rhs: &str,
    ) -> Result<bool, OracleError> {
        Ok(self.f_oracle(n, lhs)? == self.f_oracle(n, rhs)?)
    }

    /// The additive basis respecting the `R`-module structure: pairs spanning
    /// copies of `R`, then single classes spanning copies of `R/J`.
    pub fn module_basis(n: usize) -> Result<Vec<&'static str>, OracleError> {
        Ok(match n {
            1 => vec!["C0", "C1", "C0 - L"],
            2 => vec!["C0", "C1", "C0 - H", "C1*(C0 - H)", "C0 - L1", "C0 - L2"],
            3 => vec![
                "C0",
                "C1",
                "C0 - H12",
                "C1*(C0 - H12)",
                "C0 - H23",
                "C1*(C0 - H23)",
                "C0 - H13",
                "C1*(C0 - H13)",
                "C0 - L1",
                "C0 - L2",
                "C0 - L3",
                "(C0 - H12)*(C0 - L3)",
            ],
            _ => return Err(OracleError::UnknownTorus(n)),
        })
    }

    /// Columns are the flattened images of the module basis.
    pub fn basis_matrix(&self, n: usize) -> Result<IntegerMatrix, OracleError> {
        let cols = Self::module_basis(n)?
            .iter()
            .map(|e| Ok(self.f_oracle(n, e)?.flatten()))
            .collect::<Result<Vec<_>, OracleError>>()?;
        let rows = cols[0].len();
        Ok(IntegerMatrix::from_columns(rows, &cols))
    }

    /// `F` has trivial kernel on the span of the module basis.
    pub fn verify_f_injective(&self, n: usize) -> Result<bool, OracleError> {
        let m = self.basis_matrix(n)?;
        Ok(smith_normal_form(&m).rank() == m.cols())
    }

    /// Coordinates of an image in the module basis, if it lies in its span.
    pub fn basis_coordinates(
        &self,
        n: usize,
        img: &OracleImage,
    ) -> Result<Option<Vec<BigInt>>, OracleError> {
        Ok(solve(&self.basis_matrix(n)?, &img.flatten())?)
    }

    /// `K^0_{Z/2}` of the flip `n`-torus as an `R`-module, with `t` acting by
    /// multiplication with `C1`.
    pub fn k0_module(&self, n: usize) -> Result<RModule, OracleError> {
        let basis = Self::module_basis(n)?;
        let c1 = self.generator(n, "C1")?;
        let mut cols = Vec::new();
        for e in &basis {
            let img = c1.mul(&self.f_oracle(n, e)?);
            let coords = self.basis_coordinates(n, &img)?.ok_or_else(|| {
                OracleError::Dictionary("C1 times a basis class left the span".into())
            })?;
            cols.push(coords);
        }
        let t = IntegerMatrix::from_columns(basis.len(), &cols);
        Ok(RModule::from_presentation(
            &AbelianPresentation::free(basis.len()),
            &t,
        )?)
    }
}

struct OracleAlgebra<'a> {
    oracle: &'a FOracle,
    n: usize,
}

impl ExprAlgebra for OracleAlgebra<'_> {
    type Elem = OracleImage;
    type Error = OracleError;

    fn integer(&self, n: &BigInt) -> OracleImage {
        OracleImage::constant(self.n, n.clone())
    }

    fn variable(&self, name: &str) -> Result<OracleImage, OracleError> {
        self.oracle.generator(self.n, name)
    }

    fn half_power_of_t(&self, k: u32) -> Result<OracleImage, OracleError> {
        Err(OracleError::UnknownGenerator(format!("t^{{{k}/2}}")))
    }

    fn add(&self, a: &OracleImage, b: &OracleImage) -> OracleImage {
        a.add(b)
    }

    fn sub(&self, a: &OracleImage, b: &OracleImage) -> OracleImage {
        a.sub(b)
    }

    fn mul(&self, a: &OracleImage, b: &OracleImage) -> OracleImage {
        a.mul(b)
    }

    fn neg(&self, a: &OracleImage) -> OracleImage {
        a.scaled(&-BigInt::one())
    }
}

/// The oracle built from the shipped tables.
pub fn default_oracle() -> &'static FOracle {
    static ORACLE: OnceLock<FOracle> = OnceLock::new();
    ORACLE.get_or_init(|| FOracle::from_json(DEFAULT_TABLES_JSON).expect("shipped tables parse"))
}
