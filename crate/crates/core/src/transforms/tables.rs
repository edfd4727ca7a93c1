use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::TransformError;
use crate::exact_abelian::{cochain_cohomology, FGAbelianGroup, IntegerMatrix, RModule};
use crate::graded_algebra::{Degree, GradingKind, PresentedRing, RingElement, Variant};
use crate::paper_rings::{ring, RingName};

/// One degree of a table read off a short exact sequence
/// `0 → sub → group → quotient → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub sub: FGAbelianGroup,
    pub quotient: FGAbelianGroup,
    /// `None` when the extension is not determined.
    pub group: Option<FGAbelianGroup>,
    pub module: Option<RModule>,
    pub extension_ambiguous: bool,
}

impl TableEntry {
    pub fn split(sub: FGAbelianGroup, quotient: FGAbelianGroup) -> Self {
        let group = Some(sub.direct_sum(&quotient));
        TableEntry {
            sub,
            quotient,
            group,
            module: None,
            extension_ambiguous: false,
        }
    }

    pub fn ambiguous(sub: FGAbelianGroup, quotient: FGAbelianGroup) -> Self {
        TableEntry {
            sub,
            quotient,
            group: None,
            module: None,
            extension_ambiguous: true,
        }
    }

    pub fn from_module(m: RModule) -> Self {
        TableEntry {
            sub: m.group().clone(),
            quotient: FGAbelianGroup::trivial(),
            group: Some(m.group().clone()),
            module: Some(m),
            extension_ambiguous: false,
        }
    }

    fn split_modules(a: &TableEntry, b: &TableEntry) -> Self {
        let module = match (&a.module, &b.module) {
            (Some(x), Some(y)) => Some(x.direct_sum(y)),
            _ => None,
        };
        let sub = a
            .group
            .clone()
            .unwrap_or_else(|| a.sub.direct_sum(&a.quotient));
        let quotient = b
            .group
            .clone()
            .unwrap_or_else(|| b.sub.direct_sum(&b.quotient));
        TableEntry {
            module,
            ..TableEntry::split(sub, quotient)
        }
    }

    pub fn to_json(&self) -> Value {
        let module = self.module.as_ref().map(|m| match m.classify() {
            Ok(d) => Value::String(d.to_string()),
            Err(e) => json!({ "error": e.to_string() }),
        });
        json!({
            "sub": self.sub.to_string(),
            "quotient": self.quotient.to_string(),
            "group": self.group.as_ref().map(|g| g.to_string()),
            "module": module,
            "extension_ambiguous": self.extension_ambiguous,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedGroupTable {
    pub entries: BTreeMap<Degree, TableEntry>,
}

impl GradedGroupTable {
    pub fn get(&self, d: Degree) -> Option<&TableEntry> {
        self.entries.get(&d)
    }

    pub fn group(&self, d: Degree) -> Option<FGAbelianGroup> {
        match self.entries.get(&d) {
            Some(e) => e.group.clone(),
            None => Some(FGAbelianGroup::trivial()),
        }
    }

    pub fn module(&self, d: Degree) -> Option<&RModule> {
        self.entries.get(&d).and_then(|e| e.module.as_ref())
    }

    pub fn extension_ambiguous(&self) -> bool {
        self.entries.values().any(|e| e.extension_ambiguous)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .entries
            .iter()
            .map(|(d, e)| {
                let mut v = e.to_json();
                v["level"] = json!(d.level);
                v["variant"] = json!(d.variant.to_string());
                v
            })
            .collect();
        json!({ "extension_ambiguous": self.extension_ambiguous(), "entries": rows })
    }
}

/// The slice of a K-theory ring in degree `d` as an `R`-module, `t` acting by
/// multiplication.
pub fn slice_rmodule(r: &PresentedRing, d: Degree) -> Result<RModule, TransformError> {
    if r.kind() != GradingKind::KTheory || r.generator_index("t").is_none() {
        return Err(TransformError::Unsupported(format!(
            "{} is not a K-theory ring over R",
            r.name()
        )));
    }
    let comp = r.component(d)?;
    let t = r.generator("t")?;
    let m = r.slice_map_matrix(&comp, &comp, |x| r.mul(&t, x))?;
    Ok(RModule::from_presentation(&comp.presentation(), &m)?)
}

fn ring_table(
    r: &PresentedRing,
    theory: Theory,
    window: i64,
) -> Result<GradedGroupTable, TransformError> {
    let mut t = GradedGroupTable::default();
    let levels = match theory {
        Theory::K => 0..=1,
        Theory::H => 0..=window,
    };
    for level in levels {
        for v in [Variant::Eq, Variant::Pm] {
            let d = Degree::new(level, v);
            let entry = match theory {
                Theory::K => TableEntry::from_module(slice_rmodule(r, d)?),
                Theory::H => TableEntry::split(r.component(d)?.group(), FGAbelianGroup::trivial()),
            };
            t.entries.insert(d, entry);
        }
    }
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theory {
    K,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KunnethBase {
    Point,
    CircleFlip,
}

/// Levels `0..=window` for cohomology; K-theory tables always use levels 0 and 1.
pub fn base_table(
    base: KunnethBase,
    theory: Theory,
    window: i64,
) -> Result<GradedGroupTable, TransformError> {
    let name = match (base, theory) {
        (KunnethBase::Point, Theory::K) => RingName::KkPoint,
        (KunnethBase::CircleFlip, Theory::K) => RingName::KkCircleFlip,
        (KunnethBase::Point, Theory::H) => RingName::HhPoint,
        (KunnethBase::CircleFlip, Theory::H) => RingName::HhCircleFlip,
    };
    ring_table(ring(name), theory, window)
}

/// `X ↦ X × S̃¹`: degree `(n, v)` becomes `(n, v) ⊕ (n-1, v + pm)`.
pub fn kunneth_step(table: &GradedGroupTable, theory: Theory) -> GradedGroupTable {
    let zero = TableEntry::from_module(RModule::zero());
    let mut out = GradedGroupTable::default();
    for d in table.entries.keys() {
        let mut prev = Degree::new(d.level - 1, d.variant.flip());
        if theory == Theory::K {
            prev.level = prev.level.rem_euclid(2);
        }
        let below = table.entries.get(&prev).unwrap_or(&zero);
        let mut e = TableEntry::split_modules(&table.entries[d], below);
        if theory == Theory::H {
            e.module = None;
        }
        out.entries.insert(*d, e);
    }
    out
}

pub fn kunneth_split(
    base: KunnethBase,
    theory: Theory,
    window: i64,
) -> Result<GradedGroupTable, TransformError> {
    Ok(kunneth_step(&base_table(base, theory, window)?, theory))
}

/// `H^n_group(Z/2; Z(m))` from the periodic resolution: the cochain complex
/// `Z → Z → Z → ⋯` with differentials alternating between `1 - g` and `1 + g`,
/// `g = (-1)^m`.
pub fn group_cohomology_z2(m: u32, n: i64) -> Result<FGAbelianGroup, TransformError> {
    if n < 0 {
        return Err(TransformError::NegativeDegree(n));
    }
    if m > 1 {
        return Err(TransformError::Unsupported(format!(
            "twist must be 0 or 1, got {m}"
        )));
    }
    let g: i64 = if m == 0 { 1 } else { -1 };
    let d = |k: i64| -> IntegerMatrix {
        if k < 0 {
            return IntegerMatrix::zeros(1, 0);
        }
        let x = if k % 2 == 0 { 1 - g } else { 1 + g };
        IntegerMatrix::from_rows(&[vec![x]])
    };
    let prev = if n == 0 {
        IntegerMatrix::zeros(1, 0)
    } else {
        d(n - 1)
    };
    Ok(cochain_cohomology(&prev, &d(n))?)
}

/// Cohomology of the circle bundle over `base` with Euler class `euler` in
/// degree `(2, pm)`, levels `0..=window`, from the Gysin sequence
/// `H^{n-2}_{v±} → H^n_v(X) → H^n_v(E) → H^{n-1}_{v±}(X) → H^{n+1}_v(X)`.
///
/// A degree is marked ambiguous only when both pieces are nonzero, `e ≠ 0`
/// and the kernel piece has torsion: `e = 0` splits through a section and a
/// free kernel always lifts.
pub fn gysin_cohomology(
    base: &PresentedRing,
    euler: &RingElement,
    window: i64,
) -> Result<GradedGroupTable, TransformError> {
    let euler = base.normalize(euler);
    if !euler.is_zero()
        && base.homogeneous_degree(&euler)? != Some(base.normalize_degree(Degree::pm(2)))
    {
        return Err(TransformError::Unsupported(format!(
            "euler class {} is not in degree (2, pm)",
            base.format(&euler)
        )));
    }
    let slice = |level: i64,
                 v: Variant|
     -> Result<Option<crate::graded_algebra::DegreeComponent>, TransformError> {
        if level < 0 {
            Ok(None)
        } else {
            Ok(Some(base.component(Degree::new(level, v))?))
        }
    };
    let mut out = GradedGroupTable::default();
    for n in 0..=window {
        for v in [Variant::Eq, Variant::Pm] {
            let target = slice(n, v)?.expect("nonnegative level");
            let coker = match slice(n - 2, v.flip())? {
                Some(src) => base
                    .multiplication_hom(&euler, &src, &target)?
                    .cokernel()?
                    .group(),
                None => target.group(),
            };
            let ker = match slice(n - 1, v.flip())? {
                Some(src) => {
                    let tgt = slice(n + 1, v)?.expect("nonnegative level");
                    base.multiplication_hom(&euler, &src, &tgt)?
                        .kernel()?
                        .group()
                }
                None => FGAbelianGroup::trivial(),
            };
            let ambiguous =
                !euler.is_zero() && !coker.is_trivial() && !ker.is_trivial() && !ker.is_free();
            let entry = if ambiguous {
                TableEntry::ambiguous(coker, ker)
            } else {
                TableEntry::split(coker, ker)
            };
            out.entries.insert(Degree::new(n, v), entry);
        }
    }
    Ok(out)
}

fn delta_generator(r: &PresentedRing) -> Result<RingElement, TransformError> {
    let name = match r.kind() {
        GradingKind::KTheory => "σ",
        GradingKind::Cohomology => "t^{1/2}",
        GradingKind::NonEquivariant => {
            return Err(TransformError::Unsupported(format!(
                "{} has no twisted variant",
                r.name()
            )))
        }
    };
    if r.generator_index(name).is_none() {
        return Err(TransformError::Unsupported(format!(
            "{} has no generator {name}",
            r.name()
        )));
    }
    Ok(r.generator(name)?)
}

fn delta_from(
    r: &PresentedRing,
    a: &RingElement,
    from: Variant,
) -> Result<RingElement, TransformError> {
    let g = delta_generator(r)?;
    for d in r.homogeneous_parts(a).keys() {
        if d.variant != from {
            return Err(TransformError::Unsupported(format!(
                "δ expects {from} classes, got degree {d}"
            )));
        }
    }
    Ok(r.mul(&g, a))
}

/// `δ : X^n_{Z/2} → X^{n+1}_±`, cup with `σ` in K-theory and with `t^{1/2}`
/// in cohomology.
pub fn delta(r: &PresentedRing, a: &RingElement) -> Result<RingElement, TransformError> {
    delta_from(r, a, Variant::Eq)
}

/// `δ′ : X^n_± → X^{n+1}_{Z/2}`.
pub fn delta_prime(r: &PresentedRing, a: &RingElement) -> Result<RingElement, TransformError> {
    delta_from(r, a, Variant::Pm)
}
