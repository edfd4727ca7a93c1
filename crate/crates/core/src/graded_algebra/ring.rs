use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::{AlgebraError, Degree, GradingKind, Monomial, RingElement, Variant};
use crate::exact_abelian::{AbelianPresentation, FGAbelianGroup, GroupHom, IntegerMatrix};
use crate::expr::{parse_and_evaluate, ExprAlgebra};

/// Fixed order in which generators may appear in any ring.
pub const GENERATOR_ORDER: [&str; 13] = [
    "t", "t^{1/2}", "σ", "χ", "χ₁", "χ₂", "e", "c", "ĉ", "L", "H", "ℓ", "x",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub alias: String,
    pub degree: Degree,
    /// `0` for infinite order, `2` for two-torsion.
    pub additive_order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Monomial,
    pub rhs: RingElement,
}

/// A degree slice: the normal-form monomials of one degree and their orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeComponent {
    pub degree: Degree,
    pub basis: Vec<Monomial>,
    pub orders: Vec<u32>,
    pub labels: Vec<String>,
}

impl DegreeComponent {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn presentation(&self) -> AbelianPresentation {
        let orders: Vec<BigInt> = self.orders.iter().map(|&o| BigInt::from(o)).collect();
        AbelianPresentation::cyclic(&orders)
    }

    pub fn group(&self) -> FGAbelianGroup {
        self.presentation().group()
    }

    /// `Z/2{t^{1/2}χ} ⊕ Z/2{t}` style description.
    pub fn describe(&self) -> String {
        if self.basis.is_empty() {
            return "0".into();
        }
        self.labels
            .iter()
            .zip(&self.orders)
            .map(|(l, o)| {
                if *o == 0 {
                    format!("Z{{{l}}}")
                } else {
                    format!("Z/{o}{{{l}}}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ⊕ ")
    }
}

/// A graded commutative ring presented by generators and a terminating
/// rewrite system whose local confluence is checked at construction.
#[derive(Clone, Debug)]
pub struct PresentedRing {
    name: String,
    kind: GradingKind,
    generators: Vec<GeneratorSpec>,
    rules: Vec<RewriteRule>,
    derived: Vec<(String, RingElement)>,
}

pub struct RingBuilder {
    name: String,
    kind: GradingKind,
    generators: Vec<GeneratorSpec>,
    rules: Vec<(String, String)>,
    derived: Vec<(String, String)>,
}

impl RingBuilder {
    pub fn generator(
        mut self,
        name: &str,
        alias: &str,
        degree: Degree,
        additive_order: u32,
    ) -> Self {
        self.generators.push(GeneratorSpec {
            name: name.into(),
            alias: alias.into(),
            degree,
            additive_order,
        });
        self
    }

    pub fn rule(mut self, lhs: &str, rhs: &str) -> Self {
        self.rules.push((lhs.into(), rhs.into()));
        self
    }

    /// A named shorthand such as `t = t^{1/2} * t^{1/2}`.
    pub fn derived(mut self, name: &str, value: &str) -> Self {
        self.derived.push((name.into(), value.into()));
        self
    }

    pub fn build(self) -> Result<PresentedRing, AlgebraError> {
        let rank = |name: &str| GENERATOR_ORDER.iter().position(|g| *g == name);
        let mut last = None;
        for g in &self.generators {
            let r = rank(&g.name).ok_or_else(|| {
                AlgebraError::Certification(format!(
                    "generator `{}` is not in the global order",
                    g.name
                ))
            })?;
            if last.is_some_and(|l| r <= l) {
                return Err(AlgebraError::Certification(format!(
                    "generator `{}` is out of order",
                    g.name
                )));
            }
            if g.additive_order != 0 && g.additive_order != 2 {
                return Err(AlgebraError::Certification(
                    "additive orders must be 0 or 2".into(),
                ));
            }
            last = Some(r);
        }
        let mut ring = PresentedRing {
            name: self.name,
            kind: self.kind,
            generators: self.generators,
            rules: Vec::new(),
            derived: Vec::new(),
        };
        let mut rules = Vec::new();
        for (lhs, rhs) in &self.rules {
            let l = ring.parse_raw(lhs)?;
            let lhs_mono = match l.terms().iter().next() {
                Some((m, c)) if l.terms().len() == 1 && c.is_one() => m.clone(),
                _ => {
                    return Err(AlgebraError::Certification(format!(
                        "rule lhs `{lhs}` is not a monomial"
                    )))
                }
            };
            rules.push(RewriteRule {
                lhs: lhs_mono,
                rhs: ring.parse_raw(rhs)?,
            });
        }
        ring.rules = rules;
        for (name, value) in &self.derived {
            let v = ring.parse(value)?;
            ring.derived.push((name.clone(), v));
        }
        ring.certify()?;
        Ok(ring)
    }
}

impl PresentedRing {
    pub fn builder(name: &str, kind: GradingKind) -> RingBuilder {
        RingBuilder {
            name: name.into(),
            kind,
            generators: Vec::new(),
            rules: Vec::new(),
            derived: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> GradingKind {
        self.kind
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators
            .iter()
            .position(|g| g.name == name || g.alias == name)
    }

    pub fn normalize_degree(&self, d: Degree) -> Degree {
        self.kind.normalize(d)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Degree {
        let mut d = Degree::ZERO;
        for (g, &e) in self.generators.iter().zip(m.exponents()) {
            for _ in 0..e {
                d = d + g.degree;
            }
        }
        self.normalize_degree(d)
    }

    /// `2` if the monomial is two-torsion, else `0`.
    pub fn monomial_order(&self, m: &Monomial) -> u32 {
        let torsion = self
            .generators
            .iter()
            .zip(m.exponents())
            .any(|(g, &e)| e > 0 && g.additive_order == 2);
        if torsion {
            2
        } else {
            0
        }
    }

    pub fn is_reducible(&self, m: &Monomial) -> bool {
        self.rules.iter().any(|r| r.lhs.divides(m))
    }

    fn reduce_coeff(&self, m: &Monomial, c: BigInt) -> BigInt {
        match self.monomial_order(m) {
            0 => c,
            o => c.mod_floor(&BigInt::from(o)),
        }
    }

    /// Rewrites to normal form and reduces torsion coefficients into `{0, 1}`.
    pub fn normalize(&self, raw: &RingElement) -> RingElement {
        let mut work = RingElement::zero();
        for (m, c) in raw.terms() {
            assert_eq!(
                m.exponents().len(),
                self.ngens(),
                "monomial from another ring"
            );
            let cur = work.coefficient(m) + c;
            work.set(m.clone(), self.reduce_coeff(m, cur));
        }
        loop {
            let target = work.terms().keys().rev().find_map(|m| {
                self.rules
                    .iter()
                    .find(|r| r.lhs.divides(m))
                    .map(|r| (m.clone(), r))
            });
            let Some((m, rule)) = target else {
                return work;
            };
            let c = work.remove(&m).expect("term present");
            let q = rule.lhs.quotient_of(&m);
            for (m2, c2) in rule.rhs.terms() {
                let prod = m2.mul(&q);
                let cur = work.coefficient(&prod) + &c * c2;
                let reduced = self.reduce_coeff(&prod, cur);
                work.set(prod, reduced);
            }
        }
    }

    pub fn zero(&self) -> RingElement {
        RingElement::zero()
    }

    pub fn one(&self) -> RingElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> RingElement {
        self.normalize(&RingElement::constant(self.ngens(), BigInt::from(n)))
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.normalize(&a.plus(b))
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.normalize(&a.plus(&b.negated()))
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        self.normalize(&a.negated())
    }

    pub fn scale(&self, a: &RingElement, k: &BigInt) -> RingElement {
        self.normalize(&a.scaled(k))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.normalize(&a.times(b))
    }

    pub fn pow(&self, a: &RingElement, n: u32) -> RingElement {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn monomial_element(&self, m: &Monomial) -> RingElement {
        self.normalize(&RingElement::monomial(m.clone(), BigInt::one()))
    }

    /// A generator, alias, or derived name (for example `t` in rings where it
    /// abbreviates the square of `t^{1/2}`).
    pub fn generator(&self, name: &str) -> Result<RingElement, AlgebraError> {
        if let Some(i) = self.generator_index(name) {
            return Ok(self.monomial_element(&Monomial::generator(self.ngens(), i)));
        }
        if let Some((_, v)) = self.derived.iter().find(|(n, _)| n == name) {
            return Ok(v.clone());
        }
        Err(AlgebraError::UnknownGenerator {
            ring: self.name.clone(),
            name: name.into(),
        })
    }

    pub fn parse(&self, text: &str) -> Result<RingElement, AlgebraError> {
        parse_and_evaluate(
            &RingEval {
                ring: self,
                raw: false,
            },
            text,
        )
    }

    /// Parses without rewriting; used for rule definitions.
    fn parse_raw(&self, text: &str) -> Result<RingElement, AlgebraError> {
        parse_and_evaluate(
            &RingEval {
                ring: self,
                raw: true,
            },
            text,
        )
    }

    /// The degree of a homogeneous element; `None` for zero.
    pub fn homogeneous_degree(&self, a: &RingElement) -> Result<Option<Degree>, AlgebraError> {
        let degrees: BTreeSet<Degree> = a.terms().keys().map(|m| self.monomial_degree(m)).collect();
        match degrees.len() {
            0 => Ok(None),
            1 => Ok(degrees.into_iter().next()),
            _ => Err(AlgebraError::NotHomogeneous(self.format(a))),
        }
    }

    fn certify(&self) -> Result<(), AlgebraError> {
        let fail = |msg: String| Err(AlgebraError::Certification(format!("{}: {msg}", self.name)));
        for r in &self.rules {
            let d = self.monomial_degree(&r.lhs);
            for m in r.rhs.terms().keys() {
                if m >= &r.lhs {
                    return fail(format!(
                        "rule for {} does not decrease the order",
                        self.format_monomial(&r.lhs)
                    ));
                }
                if self.monomial_degree(m) != d {
                    return fail(format!(
                        "rule for {} is not homogeneous",
                        self.format_monomial(&r.lhs)
                    ));
                }
            }
            if self.monomial_order(&r.lhs) == 2
                && !self.normalize(&r.rhs.scaled(&BigInt::from(2))).is_zero()
            {
                return fail(format!(
                    "rule for {} breaks two-torsion",
                    self.format_monomial(&r.lhs)
                ));
            }
        }
        for (i, a) in self.rules.iter().enumerate() {
            for b in &self.rules[i + 1..] {
                if a.lhs.is_coprime(&b.lhs) {
                    continue;
                }
                let l = a.lhs.lcm(&b.lhs);
                let via_a = self.normalize(&a.rhs.times_monomial(&a.lhs.quotient_of(&l)));
                let via_b = self.normalize(&b.rhs.times_monomial(&b.lhs.quotient_of(&l)));
                if via_a != via_b {
                    return fail(format!(
                        "critical pair at {} resolves to {} and {}",
                        self.format_monomial(&l),
                        self.format(&via_a),
                        self.format(&via_b)
                    ));
                }
            }
        }
        Ok(())
    }

    /// Normal-form monomials of degree `d` with every exponent at most `bound`,
    /// checked to be unchanged at `bound + 1`.
    pub fn degree_component(&self, d: Degree, bound: u32) -> Result<DegreeComponent, AlgebraError> {
        let d = self.normalize_degree(d);
        let at = self.slice_monomials(d, bound);
        let next = self.slice_monomials(d, bound + 1);
        if at != next {
            return Err(AlgebraError::UnstableSlice { degree: d, bound });
        }
        let orders = at.iter().map(|m| self.monomial_order(m)).collect();
        let labels = at.iter().map(|m| self.format_monomial(m)).collect();
        Ok(DegreeComponent {
            degree: d,
            basis: at,
            orders,
            labels,
        })
    }

    /// A bound that is large enough for levels up to `level` in every ring here.
    pub fn default_bound(&self, d: Degree) -> u32 {
        (d.level.unsigned_abs() as u32).max(2) + 1
    }

    pub fn component(&self, d: Degree) -> Result<DegreeComponent, AlgebraError> {
        self.degree_component(d, self.default_bound(d))
    }

    fn slice_monomials(&self, d: Degree, bound: u32) -> Vec<Monomial> {
        let n = self.ngens();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial(exps.clone());
            if !self.is_reducible(&m) && self.monomial_degree(&m) == d {
                out.push(m);
            }
            let mut i = 0;
            loop {
                if i == n {
                    out.sort();
                    return out;
                }
                if exps[i] < bound {
                    exps[i] += 1;
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Coordinates of a normal-form element in a slice basis.
    pub fn coordinates(
        &self,
        a: &RingElement,
        comp: &DegreeComponent,
    ) -> Result<Vec<BigInt>, AlgebraError> {
        let mut v = vec![BigInt::zero(); comp.basis.len()];
        for (m, c) in a.terms() {
            let i = comp.basis.iter().position(|b| b == m).ok_or_else(|| {
                AlgebraError::NotInComponent {
                    element: self.format(a),
                    degree: comp.degree,
                }
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coordinates(&self, comp: &DegreeComponent, v: &[BigInt]) -> RingElement {
        let mut e = RingElement::zero();
        for (m, c) in comp.basis.iter().zip(v) {
            e.add_term(m.clone(), c.clone());
        }
        self.normalize(&e)
    }

    /// Matrix of an additive map between slices, one column per source basis monomial.
    pub fn slice_map_matrix(
        &self,
        source: &DegreeComponent,
        target: &DegreeComponent,
        f: impl Fn(&RingElement) -> RingElement,
    ) -> Result<IntegerMatrix, AlgebraError> {
        let cols = source
            .basis
            .iter()
            .map(|m| self.coordinates(&f(&self.monomial_element(m)), target))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntegerMatrix::from_columns(target.rank(), &cols))
    }

    /// Multiplication by `a` from one slice to another, as a group homomorphism.
    pub fn multiplication_hom(
        &self,
        a: &RingElement,
        source: &DegreeComponent,
        target: &DegreeComponent,
    ) -> Result<GroupHom, AlgebraError> {
        let m = self.slice_map_matrix(source, target, |x| self.mul(a, x))?;
        Ok(GroupHom::new(
            source.presentation(),
            target.presentation(),
            m,
        )?)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut s = String::new();
        for (g, &e) in self.generators.iter().zip(m.exponents()) {
            if e == 0 {
                continue;
            }
            if g.name == "t^{1/2}" {
                match (e % 2, e / 2) {
                    (1, _) => write!(s, "t^{{{e}/2}}").unwrap(),
                    (_, 1) => s.push('t'),
                    (_, k) => write!(s, "t^{k}").unwrap(),
                }
            } else if e == 1 {
                s.push_str(&g.name);
            } else {
                write!(s, "{}^{}", g.name, e).unwrap();
            }
        }
        s
    }

    /// The monomial in ASCII aliases joined by `*`, e.g. `sigma*chi^2`.
    pub fn format_monomial_ascii(&self, m: &Monomial) -> String {
        let parts: Vec<String> = self
            .generators
            .iter()
            .zip(m.exponents())
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| {
                if e == 1 {
                    g.alias.clone()
                } else {
                    format!("{}^{e}", g.alias)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Terms in ascending monomial order, e.g. `-1 + t + σχ`.
    pub fn format(&self, a: &RingElement) -> String {
        self.format_with(a, false)
    }

    /// Like [`format`](Self::format) but in the parser's ASCII syntax, so that
    /// `parse(format_ascii(a)) == a`.
    pub fn format_ascii(&self, a: &RingElement) -> String {
        self.format_with(a, true)
    }

    fn format_with(&self, a: &RingElement, ascii: bool) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mono = |m: &Monomial| {
            if ascii {
                self.format_monomial_ascii(m)
            } else {
                self.format_monomial(m)
            }
        };
        let mut s = String::new();
        for (i, (m, c)) in a.terms().iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if m.is_one() {
                write!(s, "{abs}").unwrap();
            } else if abs.is_one() {
                s.push_str(&mono(m));
            } else if ascii {
                write!(s, "{abs}*{}", mono(m)).unwrap();
            } else {
                write!(s, "{abs}{}", mono(m)).unwrap();
            }
        }
        s
    }

    pub fn element_to_json(&self, a: &RingElement) -> Value {
        let terms: Vec<Value> = a
            .terms()
            .iter()
            .map(|(m, c)| {
                let mono: serde_json::Map<String, Value> = self
                    .generators
                    .iter()
                    .zip(m.exponents())
                    .filter(|(_, &e)| e > 0)
                    .map(|(g, &e)| (g.name.clone(), json!(e)))
                    .collect();
                json!({ "mono": mono, "coeff": crate::exact_abelian::bigint_to_json(c) })
            })
            .collect();
        json!({ "ring": self.name, "terms": terms })
    }

    pub fn element_from_json(&self, v: &Value) -> Result<RingElement, AlgebraError> {
        let bad = |why: &str| AlgebraError::Json(why.to_string());
        if v.get("ring").and_then(Value::as_str) != Some(self.name.as_str()) {
            return Err(bad("ring name does not match"));
        }
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?;
        let mut e = RingElement::zero();
        for t in terms {
            let mono = t
                .get("mono")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("missing mono"))?;
            let mut exps = vec![0u32; self.ngens()];
            for (name, exp) in mono {
                let i =
                    self.generator_index(name)
                        .ok_or_else(|| AlgebraError::UnknownGenerator {
                            ring: self.name.clone(),
                            name: name.clone(),
                        })?;
                exps[i] = exp.as_u64().ok_or_else(|| bad("bad exponent"))? as u32;
            }
            let coeff = match t.get("coeff") {
                Some(Value::Number(n)) => {
                    BigInt::from(n.as_i64().ok_or_else(|| bad("bad coefficient"))?)
                }
                Some(Value::String(s)) => s.parse().map_err(|_| bad("bad coefficient"))?,
                _ => return Err(bad("missing coeff")),
            };
            e.add_term(Monomial(exps), coeff);
        }
        Ok(self.normalize(&e))
    }

    /// Every normal-form monomial with exponents at most `bound`, across all degrees.
    pub fn normal_monomials(&self, bound: u32) -> Vec<Monomial> {
        let n = self.ngens();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial(exps.clone());
            if !self.is_reducible(&m) {
                out.push(m);
            }
            let mut i = 0;
            loop {
                if i == n {
                    out.sort();
                    return out;
                }
                if exps[i] < bound {
                    exps[i] += 1;
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Splits an element into homogeneous parts.
    pub fn homogeneous_parts(&self, a: &RingElement) -> BTreeMap<Degree, RingElement> {
        let mut out: BTreeMap<Degree, RingElement> = BTreeMap::new();
        for (m, c) in a.terms() {
            out.entry(self.monomial_degree(m))
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn variants(&self) -> [Variant; 2] {
        [Variant::Eq, Variant::Pm]
    }
}

struct RingEval<'a> {
    ring: &'a PresentedRing,
    raw: bool,
}

impl RingEval<'_> {
    fn finish(&self, e: RingElement) -> RingElement {
        if self.raw {
            e
        } else {
            self.ring.normalize(&e)
        }
    }
}

impl ExprAlgebra for RingEval<'_> {
    type Elem = RingElement;
    type Error = AlgebraError;

    fn integer(&self, n: &BigInt) -> RingElement {
        self.finish(RingElement::constant(self.ring.ngens(), n.clone()))
    }

    fn variable(&self, name: &str) -> Result<RingElement, AlgebraError> {
        if let Some(i) = self.ring.generator_index(name) {
            return Ok(self.finish(RingElement::monomial(
                Monomial::generator(self.ring.ngens(), i),
                BigInt::one(),
            )));
        }
        self.ring.generator(name)
    }

    fn half_power_of_t(&self, k: u32) -> Result<RingElement, AlgebraError> {
        if let Some(i) = self.ring.generator_index("t^{1/2}") {
            let mut m = Monomial::one(self.ring.ngens());
            m.0[i] = k;
            return Ok(self.finish(RingElement::monomial(m, BigInt::one())));
        }
        if k.is_multiple_of(2) {
            if let Some(i) = self.ring.generator_index("t") {
                let mut m = Monomial::one(self.ring.ngens());
                m.0[i] = k / 2;
                return Ok(self.finish(RingElement::monomial(m, BigInt::one())));
            }
        }
        Err(AlgebraError::UnknownGenerator {
            ring: self.ring.name.clone(),
            name: format!("t^{{{k}/2}}"),
        })
    }

    fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.finish(a.plus(b))
    }

    fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.finish(a.plus(&b.negated()))
    }

    fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.finish(a.times(b))
    }

    fn neg(&self, a: &RingElement) -> RingElement {
        self.finish(a.negated())
    }
}
