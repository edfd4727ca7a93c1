//! Pairs `(E, h)` of a Real circle bundle and a twist over the built-in bases,
//! their T-duals, isomorphism classes and the twisted K-groups over the circle.

mod mv;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use thiserror::Error;

use crate::graded_algebra::{AlgebraError, Degree, DegreeComponent, PresentedRing, RingElement};
use crate::paper_rings::{ring, RingName};
use crate::transforms::{gysin_cohomology, TransformError};

pub use mv::{
    clutching_candidates, clutching_for, compare_with_printed, load_clutching_assignment,
    printed_label, search_clutchings, twisted_k_mv, twisted_k_with, verify_theorem_t,
    verify_theorem_t_with, Clutching, MvComparison, MvStatus, PrintedKTables, TwistedKEntry,
    TwistedKTable, MV_CLUTCHING_JSON, PAIR_K_TABLES_JSON,
};

/// Status string recorded for the correspondence-space condition.
pub const CORRESPONDENCE_STATUS: &str = "certified-via-gauge-uniqueness";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TDualError {
    #[error("no T-dual found for {0}")]
    NoSolution(String),
    #[error("T-dual of {0} is not unique up to gauge")]
    Ambiguous(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("no clutching candidate reproduces the printed tables for {0}")]
    NoCandidate(String),
    #[error("golden data: {0}")]
    Golden(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseSpace {
    Point,
    CircleTrivial,
}

impl BaseSpace {
    pub const ALL: [BaseSpace; 2] = [BaseSpace::Point, BaseSpace::CircleTrivial];

    pub fn ring(self) -> &'static PresentedRing {
        match self {
            BaseSpace::Point => ring(RingName::HhPoint),
            BaseSpace::CircleTrivial => ring(RingName::HhCircleTrivial),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BaseSpace::Point => "point",
            BaseSpace::CircleTrivial => "circle-trivial",
        }
    }

    fn slice(self, d: Degree) -> Result<DegreeComponent, TDualError> {
        Ok(self.ring().component(d)?)
    }

    /// Every element of a finite slice, in increasing coordinate order.
    fn elements(self, d: Degree) -> Result<Vec<RingElement>, TDualError> {
        let comp = self.slice(d)?;
        let mut orders = Vec::new();
        for o in &comp.orders {
            if *o == 0 {
                return Err(TDualError::Unsupported(format!(
                    "slice {d} of {} is infinite",
                    self.ring().name()
                )));
            }
            orders.push(*o);
        }
        let mut out = Vec::new();
        let mut v = vec![0u32; orders.len()];
        loop {
            let coords: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            out.push(self.ring().from_coordinates(&comp, &coords));
            let mut i = orders.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                v[i] += 1;
                if v[i] < orders[i] {
                    break;
                }
                v[i] = 0;
            }
        }
    }
}

impl fmt::Display for BaseSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BaseSpace {
    type Err = TDualError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "point" | "pt" => Ok(BaseSpace::Point),
            "circle-trivial" | "circle_trivial" | "circle" => Ok(BaseSpace::CircleTrivial),
            _ => Err(TDualError::Unsupported(format!(
                "unknown base `{s}` (expected point or circle-trivial)"
            ))),
        }
    }
}

fn h1() -> Degree {
    Degree::pm(1)
}
fn h2() -> Degree {
    Degree::pm(2)
}
fn h3() -> Degree {
    Degree::eq(3)
}

/// A Real circle bundle, determined by its Chern class in `H^2_±` of the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealCircleBundle {
    pub base: BaseSpace,
    pub chern: RingElement,
}

impl RealCircleBundle {
    pub fn new(base: BaseSpace, chern: RingElement) -> Result<Self, TDualError> {
        let r = base.ring();
        let chern = r.normalize(&chern);
        r.coordinates(&chern, &base.slice(h2())?)?;
        Ok(RealCircleBundle { base, chern })
    }

    pub fn trivial(base: BaseSpace) -> Self {
        RealCircleBundle {
            base,
            chern: RingElement::zero(),
        }
    }

    pub fn all(base: BaseSpace) -> Result<Vec<Self>, TDualError> {
        Ok(base
            .elements(h2())?
            .into_iter()
            .map(|chern| RealCircleBundle { base, chern })
            .collect())
    }

    fn ring(&self) -> &'static PresentedRing {
        self.base.ring()
    }

    /// `c ∪ H^1_±` inside `H^3_{Z/2}` of the base.
    fn image_of(&self, c: &RingElement) -> Result<Vec<RingElement>, TDualError> {
        let r = self.ring();
        let mut out: Vec<RingElement> = self
            .base
            .elements(h1())?
            .iter()
            .map(|a| r.mul(c, a))
            .collect();
        out.sort_by(|a, b| self.cmp_h3(a, b));
        out.dedup();
        Ok(out)
    }

    fn key(&self, d: Degree, a: &RingElement) -> Vec<BigInt> {
        let comp = self.base.slice(d).expect("checked slice");
        self.ring()
            .coordinates(a, &comp)
            .expect("element of the slice")
    }

    fn cmp_h3(&self, a: &RingElement, b: &RingElement) -> Ordering {
        self.key(h3(), a).cmp(&self.key(h3(), b))
    }

    /// The least representative of `η + c ∪ H^1_±`.
    fn reduce_base_part(&self, eta: &RingElement) -> Result<RingElement, TDualError> {
        let r = self.ring();
        let eta = r.normalize(eta);
        let mut best: Option<RingElement> = None;
        for x in self.image_of(&self.chern)? {
            let cand = r.add(&eta, &x);
            if best
                .as_ref()
                .is_none_or(|b| self.cmp_h3(&cand, b) == Ordering::Less)
            {
                best = Some(cand);
            }
        }
        Ok(best.unwrap_or(eta))
    }

    /// All twists `h ∈ H^3_{Z/2}(E)`, one per element, checked against the
    /// Gysin computation of that group.
    pub fn twists(&self) -> Result<Vec<H3Class>, TDualError> {
        let r = self.ring();
        let mut bases: Vec<RingElement> = Vec::new();
        for eta in self.base.elements(h3())? {
            let red = self.reduce_base_part(&eta)?;
            if !bases.contains(&red) {
                bases.push(red);
            }
        }
        let fibers: Vec<RingElement> = self
            .base
            .elements(h2())?
            .into_iter()
            .filter(|f| r.mul(&self.chern, f).is_zero())
            .collect();
        let table = gysin_cohomology(r, &self.chern, 3)?;
        let entry = table.get(h3()).expect("degree 3 is in the window");
        let group = entry.group.as_ref().ok_or_else(|| {
            TDualError::Unsupported("H^3 of the total space has an unresolved extension".into())
        })?;
        let expected = group.order().and_then(|o| o.to_usize());
        if expected != Some(bases.len() * fibers.len()) {
            return Err(TDualError::Unsupported(format!(
                "twist enumeration found {} classes but H^3 = {group}",
                bases.len() * fibers.len()
            )));
        }
        let mut out = Vec::new();
        for f in &fibers {
            for b in &bases {
                out.push(H3Class {
                    base_part: b.clone(),
                    fiber_part: f.clone(),
                });
            }
        }
        Ok(out)
    }

    pub fn format(&self) -> String {
        format!("E[{}]", self.ring().format(&self.chern))
    }
}

/// A twist on the total space, written `π^*(base_part) + θ(fiber_part)` with
/// `π_* h = fiber_part`. The base part is reduced modulo `c ∪ H^1_±`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H3Class {
    pub base_part: RingElement,
    pub fiber_part: RingElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair {
    pub bundle: RealCircleBundle,
    pub h: H3Class,
}

impl Pair {
    pub fn new(
        bundle: RealCircleBundle,
        base_part: RingElement,
        fiber_part: RingElement,
    ) -> Result<Self, TDualError> {
        let r = bundle.ring();
        let fiber_part = r.normalize(&fiber_part);
        r.coordinates(&fiber_part, &bundle.base.slice(h2())?)?;
        if !r.mul(&bundle.chern, &fiber_part).is_zero() {
            return Err(TDualError::Unsupported(format!(
                "{} is not π_* of any twist on {}",
                r.format(&fiber_part),
                bundle.format()
            )));
        }
        r.coordinates(&r.normalize(&base_part), &bundle.base.slice(h3())?)?;
        let base_part = bundle.reduce_base_part(&base_part)?;
        Ok(Pair {
            bundle,
            h: H3Class {
                base_part,
                fiber_part,
            },
        })
    }

    pub fn base(&self) -> BaseSpace {
        self.bundle.base
    }

    fn ring(&self) -> &'static PresentedRing {
        self.bundle.ring()
    }

    /// `(E, h + π^*η)`.
    pub fn shifted(&self, eta: &RingElement) -> Result<Pair, TDualError> {
        let r = self.ring();
        Pair::new(
            self.bundle.clone(),
            r.add(&self.h.base_part, eta),
            self.h.fiber_part.clone(),
        )
    }

    fn sort_key(&self) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
        (
            self.bundle.key(h2(), &self.bundle.chern),
            self.bundle.key(h2(), &self.h.fiber_part),
            self.bundle.key(h3(), &self.h.base_part),
        )
    }

    pub fn format(&self) -> String {
        let r = self.ring();
        let mut parts = Vec::new();
        if !self.h.base_part.is_zero() {
            parts.push(format!("π^*({})", r.format(&self.h.base_part)));
        }
        if !self.h.fiber_part.is_zero() {
            parts.push(format!("θ({})", r.format(&self.h.fiber_part)));
        }
        let h = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        };
        format!("({}, {h})", self.bundle.format())
    }

    pub fn to_json(&self) -> Value {
        let r = self.ring();
        json!({
            "base": self.base().as_str(),
            "chern": r.format(&self.bundle.chern),
            "h_base_part": r.format(&self.h.base_part),
            "h_fiber_part": r.format(&self.h.fiber_part),
        })
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

/// `{h + π^*(π_*h ∪ a) : a ∈ H^1_±}`, sorted.
pub fn gauge_orbit(p: &Pair) -> Result<Vec<Pair>, TDualError> {
    let mut out = Vec::new();
    for x in p.bundle.image_of(&p.h.fiber_part)? {
        let q = p.shifted(&x)?;
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out.sort();
    Ok(out)
}

/// The least element of the gauge orbit.
pub fn orbit_representative(p: &Pair) -> Result<Pair, TDualError> {
    Ok(gauge_orbit(p)?
        .into_iter()
        .next()
        .expect("orbits are nonempty"))
}

pub fn isomorphic(p: &Pair, q: &Pair) -> Result<bool, TDualError> {
    Ok(p.bundle == q.bundle && gauge_orbit(p)?.contains(q))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// `c_1(Ê) = π_* h`.
    pub pi_star_h: RingElement,
    /// `π̂_* ĥ`, equal to `c_1(E)`.
    pub pi_hat_star_h_hat: RingElement,
    pub chern_cup: RingElement,
    pub correspondence: &'static str,
    /// Number of twists on `Ê` solving the constraints; all lie in one orbit.
    pub solutions: usize,
}

impl Certificate {
    pub fn holds(&self, p: &Pair, dual: &Pair) -> bool {
        self.pi_star_h == dual.bundle.chern
            && self.pi_hat_star_h_hat == p.bundle.chern
            && self.chern_cup.is_zero()
            && self.correspondence == CORRESPONDENCE_STATUS
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TDualResult {
    pub dual: Pair,
    pub certificate: Certificate,
}

/// The T-dual pair. Candidates `ĥ` on `Ê` (with `c_1(Ê) = π_*h`) must satisfy
/// `π̂_*ĥ = c_1(E)` and agree with `h` on the correspondence space, which over
/// the built-in bases reads `η_h - η_ĥ ∈ c_1(E) ∪ H^1_± + c_1(Ê) ∪ H^1_±`.
/// The solutions must form a single gauge orbit.
pub fn tdual(p: &Pair) -> Result<TDualResult, TDualError> {
    let r = p.ring();
    let c = &p.bundle.chern;
    let dual_bundle = RealCircleBundle::new(p.base(), p.h.fiber_part.clone())?;
    let c_hat = &dual_bundle.chern;
    let chern_cup = r.mul(c, c_hat);
    if !chern_cup.is_zero() {
        return Err(TDualError::NoSolution(p.format()));
    }
    let mut allowed = Vec::new();
    for x in p.bundle.image_of(c)? {
        for y in p.bundle.image_of(c_hat)? {
            allowed.push(r.add(&x, &y));
        }
    }
    let mut solutions = Vec::new();
    for h in dual_bundle.twists()? {
        if h.fiber_part != *c {
            continue;
        }
        let diff = r.sub(&p.h.base_part, &h.base_part);
        if allowed.contains(&diff) {
            solutions.push(Pair {
                bundle: dual_bundle.clone(),
                h,
            });
        }
    }
    let first = solutions
        .first()
        .ok_or_else(|| TDualError::NoSolution(p.format()))?;
    let orbit = gauge_orbit(first)?;
    let mut c_image = Vec::new();
    for x in p.bundle.image_of(c)? {
        c_image.push(dual_bundle.reduce_base_part(&x)?);
    }
    for s in &solutions {
        if !orbit.contains(s) {
            return Err(TDualError::Ambiguous(p.format()));
        }
        let diff = dual_bundle.reduce_base_part(&r.sub(&s.h.base_part, &first.h.base_part))?;
        if !c_image.contains(&diff) {
            return Err(TDualError::Ambiguous(p.format()));
        }
    }
    let dual = orbit.into_iter().next().expect("nonempty");
    let certificate = Certificate {
        pi_star_h: p.h.fiber_part.clone(),
        pi_hat_star_h_hat: dual.h.fiber_part.clone(),
        chern_cup,
        correspondence: CORRESPONDENCE_STATUS,
        solutions: solutions.len(),
    };
    Ok(TDualResult { dual, certificate })
}

/// Every pair `(E, h)` over the base, one per twist element.
pub fn all_pairs(base: BaseSpace) -> Result<Vec<Pair>, TDualError> {
    let mut out = Vec::new();
    for b in RealCircleBundle::all(base)? {
        for h in b.twists()? {
            out.push(Pair {
                bundle: b.clone(),
                h,
            });
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClass {
    pub representative: Pair,
    pub members: Vec<Pair>,
    pub dual_index: usize,
}

/// Isomorphism classes of pairs with the index of each class's dual.
pub fn enumerate_pair_classes(base: BaseSpace) -> Result<Vec<PairClass>, TDualError> {
    let mut classes: Vec<PairClass> = Vec::new();
    for p in all_pairs(base)? {
        let rep = orbit_representative(&p)?;
        match classes.iter_mut().find(|c| c.representative == rep) {
            Some(c) => c.members.push(p),
            None => classes.push(PairClass {
                representative: rep,
                members: vec![p],
                dual_index: 0,
            }),
        }
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    let reps: Vec<Pair> = classes.iter().map(|c| c.representative.clone()).collect();
    for c in &mut classes {
        let d = tdual(&c.representative)?.dual;
        c.dual_index = reps.iter().position(|r| *r == d).ok_or_else(|| {
            TDualError::NoSolution(format!(
                "dual of {} is not an enumerated class",
                c.representative.format()
            ))
        })?;
    }
    Ok(classes)
}

pub fn check_involution(base: BaseSpace) -> Result<bool, TDualError> {
    let classes = enumerate_pair_classes(base)?;
    Ok(classes
        .iter()
        .enumerate()
        .all(|(i, c)| classes[c.dual_index].dual_index == i))
}

/// `tdual(E, h + π^*η) ≅ (Ê, ĥ + π̂^*η)` for every pair and every `η`.
pub fn check_shift_equivariance(base: BaseSpace) -> Result<bool, TDualError> {
    for p in all_pairs(base)? {
        let d = tdual(&p)?.dual;
        for eta in base.elements(h3())? {
            let lhs = tdual(&p.shifted(&eta)?)?.dual;
            if !isomorphic(&lhs, &d.shifted(&eta)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every certificate satisfies the defining identities.
pub fn check_certificates(base: BaseSpace) -> Result<bool, TDualError> {
    for p in all_pairs(base)? {
        let res = tdual(&p)?;
        if !res.certificate.holds(&p, &res.dual) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The dual-pair table: one row per pair representative in sorted order.
pub fn dual_pair_report(base: BaseSpace) -> Result<Value, TDualError> {
    let classes = enumerate_pair_classes(base)?;
    let mut rows = Vec::new();
    for c in &classes {
        for m in &c.members {
            let res = tdual(m)?;
            let r = m.ring();
            rows.push(json!({
                "pair": m.to_json(),
                "label": m.format(),
                "class": classes.iter().position(|x| x.representative == c.representative),
                "dual": res.dual.to_json(),
                "dual_label": res.dual.format(),
                "dual_class": c.dual_index,
                "certificate": {
                    "pi_star_h": r.format(&res.certificate.pi_star_h),
                    "pi_hat_star_h_hat": r.format(&res.certificate.pi_hat_star_h_hat),
                    "chern_cup": r.format(&res.certificate.chern_cup),
                    "correspondence": res.certificate.correspondence,
                    "solutions": res.certificate.solutions,
                },
            }));
        }
    }
    Ok(json!({
        "base": base.as_str(),
        "classes": classes.len(),
        "pairs": rows.len(),
        "involution": check_involution(base)?,
        "rows": rows,
    }))
}
