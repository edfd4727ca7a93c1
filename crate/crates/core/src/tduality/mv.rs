//! Twisted K-groups of the total spaces over the trivial circle, from the
//! Mayer-Vietoris sequence of a two-arc cover. Each arc contributes a copy of
//! the flip circle's K-theory and the pair is encoded by the clutching
//! automorphism `φ` on the overlap:
//! `0 → coker(1 - φ)_{n-1} → K^n → ker(1 - φ)_n → 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Deserialize;
use serde_json::{json, Value};

use super::{enumerate_pair_classes, tdual, BaseSpace, Pair, TDualError};
use crate::exact_abelian::lattice::{kernel_basis, solve_matrix};
use crate::exact_abelian::{AbelianPresentation, IntegerMatrix, RModule, RModuleDecomposition};
use crate::graded_algebra::{Degree, RingElement, Variant};
use crate::paper_rings::{default_oracle, nu_star_image, ring, RingName};
use crate::transforms::{slice_rmodule, TransformError};

pub const PAIR_K_TABLES_JSON: &str = include_str!("../../golden/pair_k_tables.json");
pub const MV_CLUTCHING_JSON: &str = include_str!("../../golden/mv_clutching.json");

/// `x ↦ t^a · L^b · (ν^*)^c (x)` on the flip circle's K-theory, with
/// `L = 1 - σχ`. These eight maps form a group: `ν^*(L x) = t L ν^*(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clutching {
    pub t: bool,
    pub l: bool,
    pub nu: bool,
}

impl Clutching {
    pub const IDENTITY: Clutching = Clutching {
        t: false,
        l: false,
        nu: false,
    };

    pub fn all() -> Vec<Clutching> {
        let mut out = Vec::new();
        for nu in [false, true] {
            for l in [false, true] {
                for t in [false, true] {
                    out.push(Clutching { t, l, nu });
                }
            }
        }
        out
    }

    pub fn apply(&self, x: &RingElement) -> Result<RingElement, TDualError> {
        let r = ring(RingName::KkCircleFlip);
        let mut y = r.normalize(x);
        if self.nu {
            y = nu_star_image(default_oracle(), &y).map_err(TransformError::from)?;
        }
        if self.l {
            y = r.mul(&r.parse("1 - sigma*chi")?, &y);
        }
        if self.t {
            y = r.mul(&r.generator("t")?, &y);
        }
        Ok(y)
    }
}

impl fmt::Display for Clutching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.t {
            parts.push("t");
        }
        if self.l {
            parts.push("L");
        }
        if self.nu {
            parts.push("ν*");
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("·"))
        }
    }
}

impl FromStr for Clutching {
    type Err = TDualError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Clutching::IDENTITY;
        if s.trim() == "1" {
            return Ok(c);
        }
        for part in s.split(['·', '*']).map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "t" => c.t = true,
                "L" => c.l = true,
                "ν" | "nu" => c.nu = true,
                _ => {
                    return Err(TDualError::Golden(format!(
                        "unknown clutching factor `{part}` in `{s}`"
                    )))
                }
            }
        }
        Ok(c)
    }
}

/// The clutching of a pair over the trivial circle: `ν^*` for the nontrivial
/// bundle, `L` when `π_*h ≠ 0` and `t` when `h` has a nonzero base part.
pub fn clutching_for(p: &Pair) -> Result<Clutching, TDualError> {
    if p.base() != BaseSpace::CircleTrivial {
        return Err(TDualError::Unsupported(
            "clutching data only exists over the trivial circle".into(),
        ));
    }
    Ok(Clutching {
        t: !p.h.base_part.is_zero(),
        l: !p.h.fiber_part.is_zero(),
        nu: !p.bundle.chern.is_zero(),
    })
}

/// One entry `0 → sub → K → quotient → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedKEntry {
    pub sub: RModuleDecomposition,
    pub quotient: RModuleDecomposition,
    /// `None` when both pieces are nonzero.
    pub module: Option<RModuleDecomposition>,
    pub extension_ambiguous: bool,
}

/// Keyed by `(n mod 2, variant)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedKTable {
    pub entries: BTreeMap<(i64, Variant), TwistedKEntry>,
}

impl TwistedKTable {
    pub fn module(&self, n: i64, v: Variant) -> Option<&RModuleDecomposition> {
        self.entries
            .get(&(n.rem_euclid(2), v))
            .and_then(|e| e.module.as_ref())
    }

    fn from_modules(
        get: impl Fn(i64, Variant) -> Result<RModuleDecomposition, TDualError>,
    ) -> Result<Self, TDualError> {
        let mut entries = BTreeMap::new();
        for v in [Variant::Eq, Variant::Pm] {
            for n in 0..2 {
                let m = get(n, v)?;
                entries.insert(
                    (n, v),
                    TwistedKEntry {
                        sub: m,
                        quotient: RModuleDecomposition::default(),
                        module: Some(m),
                        extension_ambiguous: false,
                    },
                );
            }
        }
        Ok(TwistedKTable { entries })
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .entries
            .iter()
            .map(|((n, v), e)| {
                json!({
                    "degree": n,
                    "variant": v.to_string(),
                    "sub": e.sub.to_string(),
                    "quotient": e.quotient.to_string(),
                    "module": e.module.as_ref().map(|m| m.to_string()),
                    "extension_ambiguous": e.extension_ambiguous,
                })
            })
            .collect();
        Value::Array(rows)
    }
}

fn one_minus(
    phi: Clutching,
    d: Degree,
) -> Result<(IntegerMatrix, IntegerMatrix, usize), TDualError> {
    let r = ring(RingName::KkCircleFlip);
    let comp = r.component(d)?;
    if comp.orders.iter().any(|o| *o != 0) {
        return Err(TDualError::Unsupported(format!("slice {d} has torsion")));
    }
    let mut cols = Vec::new();
    for m in &comp.basis {
        let x = r.monomial_element(m);
        cols.push(r.coordinates(&r.sub(&x, &phi.apply(&x)?), &comp)?);
    }
    let f = IntegerMatrix::from_columns(comp.rank(), &cols);
    let t = r.generator("t")?;
    let tm = r.slice_map_matrix(&comp, &comp, |x| r.mul(&t, x))?;
    Ok((f, tm, comp.rank()))
}

fn kernel_module(f: &IntegerMatrix, t: &IntegerMatrix) -> Result<RModule, TDualError> {
    let k = kernel_basis(f);
    let tk = t.mul(&k).map_err(TransformError::from)?;
    let x = solve_matrix(&k, &tk)
        .map_err(TransformError::from)?
        .ok_or_else(|| TDualError::Unsupported("kernel is not t-stable".into()))?;
    Ok(
        RModule::from_presentation(&AbelianPresentation::free(k.cols()), &x)
            .map_err(TransformError::from)?,
    )
}

fn cokernel_module(f: &IntegerMatrix, t: &IntegerMatrix, n: usize) -> Result<RModule, TDualError> {
    let pres = AbelianPresentation::new(n, f.clone()).map_err(TransformError::from)?;
    Ok(RModule::from_presentation(&pres, t).map_err(TransformError::from)?)
}

fn classify(m: &RModule) -> Result<RModuleDecomposition, TDualError> {
    Ok(m.classify().map_err(TransformError::from)?)
}

/// The four twisted K-groups of the total space of a pair over the trivial
/// circle for a given clutching.
pub fn twisted_k_with(phi: Clutching) -> Result<TwistedKTable, TDualError> {
    let mut entries = BTreeMap::new();
    for v in [Variant::Eq, Variant::Pm] {
        for n in 0..2i64 {
            let here = Degree::new(n, v);
            let below = Degree::new((n - 1).rem_euclid(2), v);
            let (f, t, _) = one_minus(phi, here)?;
            let quotient = classify(&kernel_module(&f, &t)?)?;
            let (g, tg, rank) = one_minus(phi, below)?;
            let sub = classify(&cokernel_module(&g, &tg, rank)?)?;
            let ambiguous = !sub.is_zero() && !quotient.is_zero();
            let module = if ambiguous {
                None
            } else {
                Some(sub.sum(&quotient))
            };
            entries.insert(
                (n, v),
                TwistedKEntry {
                    sub,
                    quotient,
                    module,
                    extension_ambiguous: ambiguous,
                },
            );
        }
    }
    Ok(TwistedKTable { entries })
}

pub fn twisted_k_mv(p: &Pair) -> Result<TwistedKTable, TDualError> {
    twisted_k_with(clutching_for(p)?)
}

/// The twisted K-groups of the total space: over the point the total space is
/// the flip circle itself.
fn total_space_table(p: &Pair) -> Result<TwistedKTable, TDualError> {
    match p.base() {
        BaseSpace::Point => {
            let r = ring(RingName::KkCircleFlip);
            TwistedKTable::from_modules(|n, v| classify(&slice_rmodule(r, Degree::new(n, v))?))
        }
        BaseSpace::CircleTrivial => twisted_k_mv(p),
    }
}

/// `K^{h+n}_{Z/2}(E) ≅ K^{ĥ+n-1}_±(Ê)` and the same with the variants
/// exchanged, for `n = 0, 1` and every pair class, using the tables from
/// `tables`.
pub fn verify_theorem_t_with(
    base: BaseSpace,
    tables: impl Fn(&Pair) -> Result<TwistedKTable, TDualError>,
) -> Result<bool, TDualError> {
    for class in enumerate_pair_classes(base)? {
        let p = &class.representative;
        let d = tdual(p)?.dual;
        let (kp, kd) = (tables(p)?, tables(&d)?);
        for v in [Variant::Eq, Variant::Pm] {
            for n in 0..2 {
                let lhs = kp.module(n, v);
                let rhs = kd.module(n - 1, v.flip());
                if lhs.is_none() || lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn verify_theorem_t(base: BaseSpace) -> Result<bool, TDualError> {
    verify_theorem_t_with(base, total_space_table)
}

/// Printed twisted K-groups over the trivial circle, keyed by pair label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedKTables {
    pub tables: BTreeMap<String, TwistedKTable>,
}

#[derive(Deserialize)]
struct PrintedFile {
    tables: Vec<PrintedRow>,
}

#[derive(Deserialize)]
struct PrintedRow {
    pair: String,
    eq0: String,
    eq1: String,
    pm0: String,
    pm1: String,
}

#[derive(Deserialize)]
struct ClutchingFile {
    assignment: Vec<ClutchingRow>,
}

#[derive(Deserialize)]
struct ClutchingRow {
    pair: String,
    clutching: String,
}

impl PrintedKTables {
    pub fn from_json(text: &str) -> Result<Self, TDualError> {
        let file: PrintedFile =
            serde_json::from_str(text).map_err(|e| TDualError::Golden(e.to_string()))?;
        let mut tables = BTreeMap::new();
        for row in file.tables {
            let parse = |s: &str| {
                s.parse::<RModuleDecomposition>()
                    .map_err(|e| TDualError::Golden(e.to_string()))
            };
            let cells = [
                (0, Variant::Eq, &row.eq0),
                (1, Variant::Eq, &row.eq1),
                (0, Variant::Pm, &row.pm0),
                (1, Variant::Pm, &row.pm1),
            ];
            let mut got = BTreeMap::new();
            for (n, v, s) in cells {
                got.insert((n, v), parse(s)?);
            }
            let t = TwistedKTable::from_modules(|n, v| Ok(got[&(n, v)]))?;
            tables.insert(row.pair, t);
        }
        Ok(PrintedKTables { tables })
    }

    pub fn builtin() -> Self {
        PrintedKTables::from_json(PAIR_K_TABLES_JSON).expect("bundled tables parse")
    }

    /// The printed table for a pair, found through the printed labels. The
    /// label of a class is that of its least representative.
    pub fn for_pair(&self, p: &Pair) -> Option<&TwistedKTable> {
        let label = printed_label(&super::orbit_representative(p).ok()?)?;
        self.tables.get(&label)
    }
}

/// `E0`/`E1` for the bundle and `0`, `π*(t^{1/2}c)`, `h0`, `h1` and sums for
/// the twist, with `c = t^{1/2}e` the generator of `H^2_±`.
pub fn printed_label(p: &Pair) -> Option<String> {
    if p.base() != BaseSpace::CircleTrivial {
        return None;
    }
    let r = p.bundle.base.ring();
    let te = r.parse("t12^2*e").ok()?;
    let idx = if p.bundle.chern.is_zero() { 0 } else { 1 };
    let base = if p.h.base_part.is_zero() {
        None
    } else if p.h.base_part == te {
        Some("π*(t^{1/2}c)")
    } else {
        return None;
    };
    let twist = match (p.h.fiber_part.is_zero(), base) {
        (true, None) => "0".to_string(),
        (true, Some(b)) => b.to_string(),
        (false, None) => format!("h{idx}"),
        (false, Some(b)) => format!("h{idx} + {b}"),
    };
    Some(format!("E{idx}, {twist}"))
}

pub fn load_clutching_assignment(text: &str) -> Result<BTreeMap<String, Clutching>, TDualError> {
    let file: ClutchingFile =
        serde_json::from_str(text).map_err(|e| TDualError::Golden(e.to_string()))?;
    file.assignment
        .into_iter()
        .map(|r| Ok((r.pair, r.clutching.parse()?)))
        .collect()
}

/// For each printed table, the clutchings whose MV output reproduces it.
pub fn clutching_candidates(
    printed: &PrintedKTables,
) -> Result<Vec<(String, Vec<Clutching>)>, TDualError> {
    let outputs: Vec<(Clutching, TwistedKTable)> = Clutching::all()
        .into_iter()
        .map(|c| Ok((c, twisted_k_with(c)?)))
        .collect::<Result<_, TDualError>>()?;
    Ok(printed
        .tables
        .iter()
        .map(|(label, t)| {
            let ok = outputs
                .iter()
                .filter(|(_, o)| tables_consistent(o, t))
                .map(|(c, _)| *c)
                .collect();
            (label.clone(), ok)
        })
        .collect())
}

/// One clutching per printed table, or `NoCandidate` naming a table nothing
/// reproduces. Candidates differing by `t` can give equal tables; the least
/// one is returned.
pub fn search_clutchings(printed: &PrintedKTables) -> Result<Vec<(String, Clutching)>, TDualError> {
    let cands = clutching_candidates(printed)?;
    if let Some((label, _)) = cands.iter().find(|(_, c)| c.is_empty()) {
        return Err(TDualError::NoCandidate(label.clone()));
    }
    Ok(cands.into_iter().map(|(l, c)| (l, c[0])).collect())
}

fn tables_consistent(derived: &TwistedKTable, printed: &TwistedKTable) -> bool {
    derived.entries.iter().all(|(k, e)| {
        let p = printed.entries[k].module.as_ref();
        match &e.module {
            Some(m) => Some(m) == p,
            None => p.is_some(),
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MvStatus {
    Pass,
    Fail,
    PaperAsserted,
}

impl fmt::Display for MvStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MvStatus::Pass => "pass",
            MvStatus::Fail => "fail",
            MvStatus::PaperAsserted => "paper-asserted",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvComparison {
    pub pair: String,
    pub degree: i64,
    pub variant: Variant,
    pub printed: RModuleDecomposition,
    pub derived: Option<RModuleDecomposition>,
    pub status: MvStatus,
}

/// Derived MV tables against the printed ones, one record per group. An
/// unresolved extension is accepted as paper-asserted when the printed group
/// has the right invariants modulo the pieces.
pub fn compare_with_printed(printed: &PrintedKTables) -> Result<Vec<MvComparison>, TDualError> {
    let mut out = Vec::new();
    for class in enumerate_pair_classes(BaseSpace::CircleTrivial)? {
        let p = &class.representative;
        let label = printed_label(p)
            .ok_or_else(|| TDualError::Golden(format!("no label for {}", p.format())))?;
        let table = printed
            .tables
            .get(&label)
            .ok_or_else(|| TDualError::Golden(format!("no printed table for {label}")))?;
        let derived = twisted_k_mv(p)?;
        for (&(n, v), e) in &derived.entries {
            let want = table.entries[&(n, v)]
                .module
                .expect("printed tables are resolved");
            let status = match &e.module {
                Some(m) if *m == want => MvStatus::Pass,
                Some(_) => MvStatus::Fail,
                None if extension_consistent(&e.sub, &e.quotient, &want) => MvStatus::PaperAsserted,
                None => MvStatus::Fail,
            };
            out.push(MvComparison {
                pair: label.clone(),
                degree: n,
                variant: v,
                printed: want,
                derived: e.module,
                status,
            });
        }
    }
    Ok(out)
}

/// Whether some extension of `quotient` by `sub` could have the underlying
/// group of `m`: free ranks add up and the 2-torsion does not grow.
fn extension_consistent(
    sub: &RModuleDecomposition,
    quotient: &RModuleDecomposition,
    m: &RModuleDecomposition,
) -> bool {
    let g = |d: &RModuleDecomposition| d.module().group().clone();
    let (a, b, c) = (g(sub), g(quotient), g(m));
    c.rank() == a.rank() + b.rank() && c.count_cyclic(2) <= a.count_cyclic(2) + b.count_cyclic(2)
}
