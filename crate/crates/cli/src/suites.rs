use std::fmt::Display;

use kdual_core::exact_abelian::RModuleDecomposition;
use kdual_core::graded_algebra::{Degree, RingHom, Variant};
use kdual_core::paper_rings::{nu_star_image, ring, Dictionary, DictionaryName, FOracle, RingName};
use kdual_core::tduality::{
    check_certificates, check_involution, check_shift_equivariance, clutching_for,
    compare_with_printed, enumerate_pair_classes, isomorphic, load_clutching_assignment,
    orbit_representative, printed_label, search_clutchings, tdual, verify_theorem_t,
    verify_theorem_t_with, BaseSpace, MvStatus, Pair, PrintedKTables, RealCircleBundle, TDualError,
};
use kdual_core::transforms::{
    base_table, delta, delta_prime, group_cohomology_z2, gysin_cohomology, kunneth_step,
    pushforward_after_section_is_identity, t_power_is_multiplication, t_power_table, t_transform,
    w3, KunnethBase, Theory, CIRCLE_BASIS,
};
use kdual_core::FGAbelianGroup;

use crate::golden::Golden;
use crate::report::{Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Tables,
    Oracle,
    Transform,
    Tdual,
    All,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Oracle => "oracle",
            Suite::Transform => "transform",
            Suite::Tdual => "tdual",
            Suite::All => "all",
        }
    }
}

pub fn run_suite(suite: Suite, golden: &Golden) -> Report {
    match suite {
        Suite::Tables => tables(golden),
        Suite::Oracle => oracle(golden, None),
        Suite::Transform => transform(golden),
        Suite::Tdual => tdual_suite(golden),
        Suite::All => {
            let mut r = Report::new("all");
            for s in [Suite::Tables, Suite::Oracle, Suite::Transform, Suite::Tdual] {
                r.extend(run_suite(s, golden));
            }
            r
        }
    }
}

fn yes_no(b: bool, yes: &str, no: &str) -> String {
    if b { yes } else { no }.to_string()
}

/// Summands sorted so that printed and computed rows compare as sets.
fn canonical(s: &str) -> String {
    let mut v: Vec<&str> = s.split('⊕').map(str::trim).filter(|x| *x != "0").collect();
    v.sort();
    if v.is_empty() {
        "0".into()
    } else {
        v.join(" ⊕ ")
    }
}

fn join<T: Display>(v: impl IntoIterator<Item = T>) -> String {
    v.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" | ")
}

const PRINTED_ROWS: &[(RingName, Variant, &str, &[&str])] = &[
    (
        RingName::HhPoint,
        Variant::Eq,
        "equivariant cohomology of the point",
        &["Z{1}", "0", "Z/2{t}", "0", "Z/2{t^2}", "0"],
    ),
    (
        RingName::HhPoint,
        Variant::Pm,
        "equivariant cohomology of the point",
        &[
            "0",
            "Z/2{t^{1/2}}",
            "0",
            "Z/2{t^{3/2}}",
            "0",
            "Z/2{t^{5/2}}",
        ],
    ),
    (
        RingName::HPoint,
        Variant::Eq,
        "cohomology of the point",
        &["Z{1}", "0", "0", "0", "0", "0"],
    ),
    (
        RingName::HhCircleFlip,
        Variant::Eq,
        "cohomology of the flip circle",
        &[
            "Z{1}",
            "0",
            "Z/2{t^{1/2}χ} ⊕ Z/2{t}",
            "0",
            "Z/2{t^{3/2}χ} ⊕ Z/2{t^2}",
        ],
    ),
    (
        RingName::HhCircleFlip,
        Variant::Pm,
        "cohomology of the flip circle",
        &[
            "0",
            "Z{χ} ⊕ Z/2{t^{1/2}}",
            "0",
            "Z/2{tχ} ⊕ Z/2{t^{3/2}}",
            "0",
        ],
    ),
    (
        RingName::HhCircleTrivial,
        Variant::Eq,
        "cohomology of the trivial circle",
        &["Z{1}", "Z{e}", "Z/2{t}", "Z/2{te}", "Z/2{t^2}"],
    ),
    (
        RingName::HhCircleTrivial,
        Variant::Pm,
        "cohomology of the trivial circle",
        &[
            "0",
            "Z/2{t^{1/2}}",
            "Z/2{t^{1/2}e}",
            "Z/2{t^{3/2}}",
            "Z/2{t^{3/2}e}",
        ],
    ),
    (
        RingName::HCircle,
        Variant::Eq,
        "cohomology of the circle",
        &["Z{1}", "Z{x}", "0", "0", "0"],
    ),
    (
        RingName::HhCpInfty,
        Variant::Eq,
        "cohomology of CP∞ with conjugation",
        &["Z{1}", "0", "Z/2{t}", "Z/2{t^{1/2}c}", "Z{c^2} ⊕ Z/2{t^2}"],
    ),
    (
        RingName::HhCpInfty,
        Variant::Pm,
        "cohomology of CP∞ with conjugation",
        &["0", "Z/2{t^{1/2}}", "Z{c}", "Z/2{t^{3/2}}", "Z/2{tc}"],
    ),
    (
        RingName::HCpInfty,
        Variant::Eq,
        "cohomology of CP∞",
        &["Z{1}", "0", "Z{c}", "0", "Z{c^2}"],
    ),
    (
        RingName::HhUniversalBase,
        Variant::Eq,
        "cohomology of the universal base",
        &[
            "Z{1}",
            "0",
            "Z/2{t}",
            "Z/2{t^{1/2}c} ⊕ Z/2{t^{1/2}ĉ}",
            "Z{c^2} ⊕ Z{ĉ^2} ⊕ Z/2{t^2}",
        ],
    ),
    (
        RingName::HhUniversalBase,
        Variant::Pm,
        "cohomology of the universal base",
        &[
            "0",
            "Z/2{t^{1/2}}",
            "Z{c} ⊕ Z{ĉ}",
            "Z/2{t^{3/2}}",
            "Z/2{tc} ⊕ Z/2{tĉ}",
        ],
    ),
];

fn pt(n: i64, v: Variant) -> FGAbelianGroup {
    if n < 0 {
        return FGAbelianGroup::trivial();
    }
    group_cohomology_z2(if v == Variant::Eq { 0 } else { 1 }, n).expect("valid degree")
}

/// Additive groups from group cohomology of `Z/2` and the cell structures.
fn model_group(name: RingName, n: i64, v: Variant) -> FGAbelianGroup {
    let tw = |k: i64| if k % 2 == 0 { v } else { v.flip() };
    match name {
        RingName::HhPoint => pt(n, v),
        RingName::HhCircleTrivial => pt(n, v).direct_sum(&pt(n - 1, v)),
        RingName::HhCircleFlip => pt(n, v).direct_sum(&pt(n - 1, v.flip())),
        RingName::HhCpInfty => (0..=n / 2).fold(FGAbelianGroup::trivial(), |a, k| {
            a.direct_sum(&pt(n - 2 * k, tw(k)))
        }),
        _ => (1..=n / 2).fold(pt(n, v), |a, k| {
            let p = pt(n - 2 * k, tw(k));
            a.direct_sum(&p).direct_sum(&p)
        }),
    }
}

pub fn tables(golden: &Golden) -> Report {
    let mut r = Report::new("tables");
    for (name, loaded, shipped) in golden.files() {
        let parses = serde_json::from_str::<serde_json::Value>(loaded).is_ok();
        let actual = match (parses, loaded == shipped) {
            (false, _) => "not valid JSON",
            (true, true) => "identical to the shipped copy",
            (true, false) => "differs from the shipped copy",
        };
        r.compare(
            format!("tables.golden.{name}"),
            "golden data self-consistency",
            "identical to the shipped copy",
            actual,
        );
    }
    for (name, v, citation, row) in PRINTED_ROWS {
        let rg = ring(*name);
        let expected = join(row.iter().map(|s| canonical(s)));
        let actual: Result<Vec<String>, _> = (0..row.len())
            .map(|n| {
                rg.component(Degree::new(n as i64, *v))
                    .map(|c| canonical(&c.describe()))
            })
            .collect();
        let id = format!("tables.{name}.{v}");
        match actual {
            Ok(a) => r.compare(id, citation, expected, join(a)),
            Err(e) => r.error(id, citation, expected, e),
        }
    }
    for name in [
        RingName::HhPoint,
        RingName::HhCircleTrivial,
        RingName::HhCircleFlip,
        RingName::HhCpInfty,
        RingName::HhUniversalBase,
    ] {
        let top = if name == RingName::HhUniversalBase {
            4
        } else {
            5
        };
        for v in [Variant::Eq, Variant::Pm] {
            let expected = join((0..=top).map(|n| model_group(name, n, v)));
            let actual: Result<Vec<FGAbelianGroup>, _> = (0..=top)
                .map(|n| ring(name).component(Degree::new(n, v)).map(|c| c.group()))
                .collect();
            let id = format!("tables.{name}.{v}.groups-0-{top}");
            let citation = "additive groups against group cohomology of Z/2";
            match actual {
                Ok(a) => r.compare(id, citation, expected, join(a)),
                Err(e) => r.error(id, citation, expected, e),
            }
        }
    }
    r
}

pub fn oracle(golden: &Golden, torus: Option<usize>) -> Report {
    let mut r = Report::new(&match torus {
        Some(n) => format!("oracle-torus{n}"),
        None => "oracle".into(),
    });
    let o = match FOracle::from_json(&golden.tables) {
        Ok(o) => o,
        Err(e) => {
            r.error("oracle.load", "fixed-point tables", "tables parse", e);
            return r;
        }
    };
    let wanted = |n: usize| torus.is_none_or(|t| t == n);
    let relations: &[(usize, &str, &str, &str)] = &[
        (1, "L^2", "C0", "relations in K^0 of the flip circle"),
        (
            1,
            "C1*L",
            "-L + C0 + C1",
            "relations in K^0 of the flip circle",
        ),
        (
            2,
            "(C0 + C1)*(C0 - L1)",
            "0",
            "relations in K^0 of the flip 2-torus",
        ),
        (
            2,
            "(C0 + C1)*(C0 - L2)",
            "0",
            "relations in K^0 of the flip 2-torus",
        ),
        (
            2,
            "(C0 - H)*(C1 - L1)",
            "0",
            "relations in K^0 of the flip 2-torus",
        ),
        (
            2,
            "(C0 - H)*(C1 - L2)",
            "0",
            "relations in K^0 of the flip 2-torus",
        ),
        (
            2,
            "(C0 - H)*(C1 - H)",
            "0",
            "relations in K^0 of the flip 2-torus",
        ),
        (
            2,
            "(C0 - L1)*(C0 - L2)",
            "(C0 - C1)*(C0 - H)",
            "relations in K^0 of the flip 2-torus",
        ),
    ];
    for (n, lhs, rhs, citation) in relations.iter().filter(|x| wanted(x.0)) {
        let id = format!("oracle.n{n}.relation {lhs} = {rhs}");
        match o.verify_relation_via_oracle(*n, lhs, rhs) {
            Ok(b) => r.compare(
                id,
                citation,
                "equal under F",
                yes_no(b, "equal under F", "different under F"),
            ),
            Err(e) => r.error(id, citation, "equal under F", e),
        }
    }
    for n in (1..=3).filter(|&n| wanted(n)) {
        let citation = "injectivity of the fixed-point map";
        match o.verify_f_injective(n) {
            Ok(b) => r.compare(
                format!("oracle.n{n}.injective"),
                citation,
                "injective",
                yes_no(b, "injective", "not injective"),
            ),
            Err(e) => r.error(format!("oracle.n{n}.injective"), citation, "injective", e),
        }
        let k = 1 << (n - 1);
        let expected = RModuleDecomposition::new(k, 0, k, 0);
        let citation = "K^0 of the flip torus as an R-module";
        match o
            .k0_module(n)
            .map_err(|e| e.to_string())
            .and_then(|m| m.classify().map_err(|e| e.to_string()))
        {
            Ok(d) => r.compare(format!("oracle.n{n}.k0-module"), citation, expected, d),
            Err(e) => r.error(format!("oracle.n{n}.k0-module"), citation, expected, e),
        }
    }
    for (n, name) in [(1, DictionaryName::Circle), (2, DictionaryName::Torus2)] {
        if !wanted(n) {
            continue;
        }
        let citation = "ring monomials against bundles through F";
        let outcome = Dictionary::new(name).and_then(|d| {
            d.certify_bases(&o)?;
            d.certify_products(&o)
        });
        match outcome {
            Ok(k) => r.push(
                format!("oracle.n{n}.dictionary"),
                citation,
                Status::Pass,
                "certified".into(),
                format!("certified, {k} products"),
            ),
            Err(e) => r.error(format!("oracle.n{n}.dictionary"), citation, "certified", e),
        }
    }
    if wanted(1) {
        let k = ring(RingName::KkCircleFlip);
        let citation = "the antipodal map on the flip circle";
        let mut ok = true;
        for s in CIRCLE_BASIS {
            let x = k.parse(s).expect("basis parses");
            let twice = nu_star_image(&o, &x).and_then(|y| nu_star_image(&o, &y));
            ok &= twice.as_ref() == Ok(&x);
        }
        r.compare(
            "oracle.n1.nu-star-involution",
            citation,
            "involution",
            yes_no(ok, "involution", "not an involution"),
        );
    }
    r
}

pub fn transform(golden: &Golden) -> Report {
    let mut r = Report::new("transform");
    let c = ring(RingName::KkCircleFlip);
    let t_exprs = [
        "t*chi",
        "chi",
        "sigma - (1 - t)*chi",
        "1 - sigma*chi",
        "t + sigma*chi",
        "-sigma*chi",
    ];
    for (x, y) in CIRCLE_BASIS.iter().zip(t_exprs) {
        let expected = c.format(&c.parse(y).expect("printed value parses"));
        let id = format!(
            "transform.T({})",
            c.format(&c.parse(x).expect("basis parses"))
        );
        match t_transform(&c.parse(x).expect("basis parses")) {
            Ok(v) => r.compare(
                id,
                "values of the transform T on the basis",
                expected,
                c.format(&v),
            ),
            Err(e) => r.error(id, "values of the transform T on the basis", expected, e),
        }
    }
    let t2 = [
        "t + sigma*chi",
        "1 - sigma*chi",
        "-1 + t + sigma*chi",
        "chi - sigma",
        "t*chi + sigma",
        "chi - t*chi - sigma",
    ];
    match t_power_table(2) {
        Ok(rows) => {
            for ((x, v), y) in rows.iter().zip(t2) {
                let expected = c.format(&c.parse(y).expect("printed value parses"));
                r.compare(
                    format!("transform.T²({})", c.format(x)),
                    "values of T² on the basis",
                    expected,
                    c.format(v),
                );
            }
        }
        Err(e) => r.error("transform.T²", "values of T² on the basis", "table", e),
    }
    for (k, scalar, id) in [(4, "t", "transform.T⁴ = t"), (8, "1", "transform.T⁸ = 1")] {
        match t_power_is_multiplication(k, scalar) {
            Ok(b) => r.compare(
                id,
                "powers of T",
                "holds",
                yes_no(b, "holds", "does not hold"),
            ),
            Err(e) => r.error(id, "powers of T", "holds", e),
        }
    }
    match t_power_is_multiplication(2, "1") {
        Ok(b) => r.compare(
            "transform.T² ≠ 1",
            "powers of T",
            "T² is not the identity",
            yes_no(b, "T² is the identity", "T² is not the identity"),
        ),
        Err(e) => r.error(
            "transform.T² ≠ 1",
            "powers of T",
            "T² is not the identity",
            e,
        ),
    }
    match FOracle::from_json(&golden.tables).map(|o| pushforward_after_section_is_identity(&o)) {
        Ok(Ok(b)) => r.compare(
            "transform.pushforward-after-section",
            "push-forward after the section map",
            "identity",
            yes_no(b, "identity", "not the identity"),
        ),
        Ok(Err(e)) => r.error(
            "transform.pushforward-after-section",
            "push-forward after the section map",
            "identity",
            e,
        ),
        Err(e) => r.error(
            "transform.pushforward-after-section",
            "push-forward after the section map",
            "identity",
            e,
        ),
    }
    for m in 0..=1u32 {
        let expected = join((0..=10).map(|n| match (m, n) {
            (0, 0) => "Z",
            (0, n) if n % 2 == 0 => "Z/2",
            (1, n) if n % 2 == 1 => "Z/2",
            _ => "0",
        }));
        let actual: Result<Vec<_>, _> = (0..=10).map(|n| group_cohomology_z2(m, n)).collect();
        let id = format!("transform.z2-group.twist{m}.degrees-0-10");
        match actual {
            Ok(a) => r.compare(id, "group cohomology of Z/2", expected, join(a)),
            Err(e) => r.error(id, "group cohomology of Z/2", expected, e),
        }
    }
    let mut table = base_table(KunnethBase::Point, Theory::K, 1);
    for n in 1..=3usize {
        let k = 1 << (n - 1);
        let expected = format!("K^0 = {}, K^1 = 0", RModuleDecomposition::new(k, 0, k, 0));
        table = table.map(|t| kunneth_step(&t, Theory::K));
        let actual = table.as_ref().map_err(|e| e.to_string()).and_then(|t| {
            let k0 = t
                .module(Degree::eq(0))
                .ok_or("missing K^0")?
                .classify()
                .map_err(|e| e.to_string())?;
            let k1 = t.group(Degree::eq(1)).ok_or("missing K^1")?;
            Ok(format!("K^0 = {k0}, K^1 = {k1}"))
        });
        let id = format!("transform.kunneth.torus{n}");
        match actual {
            Ok(a) => r.compare(
                id,
                "split sequences for products with the flip circle",
                expected,
                a,
            ),
            Err(e) => r.error(
                id,
                "split sequences for products with the flip circle",
                expected,
                e,
            ),
        }
    }
    let s1 = ring(RingName::HhCircleTrivial);
    for (euler, expected, id) in [
        ("0", "Z/2 ⊕ Z/2", "transform.gysin.E0.H3"),
        ("t12*e", "Z/2", "transform.gysin.E1.H3"),
    ] {
        let e = s1.parse(euler).expect("euler class parses");
        match gysin_cohomology(s1, &e, 4) {
            Ok(t) => r.compare(
                id,
                "Gysin sequence over the trivial circle",
                expected,
                t.group(Degree::eq(3))
                    .map(|g| g.to_string())
                    .unwrap_or_else(|| "ambiguous".into()),
            ),
            Err(err) => r.error(id, "Gysin sequence over the trivial circle", expected, err),
        }
    }
    for (name, factor) in [
        (RingName::KkPoint, "1 - t"),
        (RingName::KkCircleFlip, "1 - t"),
        (RingName::HhPoint, "t"),
        (RingName::HhCircleFlip, "t"),
    ] {
        let rg = ring(name);
        let f = rg.parse(factor).expect("factor parses");
        let mut ok = true;
        for level in 0..=1 {
            for m in rg
                .component(Degree::eq(level))
                .map(|c| c.basis)
                .unwrap_or_default()
            {
                let a = rg.monomial_element(&m);
                ok &= delta(rg, &a).and_then(|b| delta_prime(rg, &b)).ok() == Some(rg.mul(&f, &a));
            }
        }
        let expected = format!("multiplication by {factor}");
        r.compare(
            format!("transform.delta.{name}"),
            "the composite δ′δ",
            &expected,
            yes_no(ok, &expected, "differs"),
        );
    }
    let c1 = s1.parse("t12*e").expect("parses");
    let citation = "W₃ of the nontrivial Real bundle on the circle";
    match w3(s1, &c1) {
        Ok(v) => r.compare(
            "transform.w3",
            citation,
            s1.format(&s1.parse("t*e").expect("parses")),
            s1.format(&v),
        ),
        Err(e) => r.error("transform.w3", citation, "te", e),
    }
    let h = ring(RingName::HhCircleFlip);
    let nu = RingHom::from_exprs(h, h, &[("t12", "t12"), ("chi", "chi + t12")]);
    let ok = nu.as_ref().is_ok_and(|n| {
        n.check().is_ok() && {
            let chi = h.parse("chi").expect("parses");
            n.apply(&n.apply(&chi)) == chi
        }
    });
    r.compare(
        "transform.nu-star.cohomology",
        "χ ↦ χ + t^{1/2} on the flip circle",
        "ring involution",
        yes_no(ok, "ring involution", "fails"),
    );
    r
}

fn s1_pair(chern: &str, base: &str, fiber: &str) -> Result<Pair, TDualError> {
    let s1 = BaseSpace::CircleTrivial;
    let rg = s1.ring();
    let p = |s: &str| rg.parse(s).map_err(TDualError::from);
    Pair::new(RealCircleBundle::new(s1, p(chern)?)?, p(base)?, p(fiber)?)
}

fn dual_label(p: &Pair) -> Result<String, TDualError> {
    let d = orbit_representative(&tdual(p)?.dual)?;
    Ok(printed_label(&d).unwrap_or_else(|| d.format()))
}

type BaseCheck = (
    &'static str,
    &'static str,
    fn(BaseSpace) -> Result<bool, TDualError>,
);

pub fn tdual_suite(golden: &Golden) -> Report {
    let mut r = Report::new("tdual");
    let relations = [
        ("0", "0", "0", "E0, 0"),
        ("0", "t*e", "0", "E0, π*(t^{1/2}c)"),
        ("0", "0", "t12*e", "E1, 0"),
        ("0", "t*e", "t12*e", "E1, 0"),
        ("t12*e", "0", "t12*e", "E1, h1"),
    ];
    for (i, (chern, base, fiber, expected)) in relations.iter().enumerate() {
        let id = format!("tdual.relation.{}", i + 1);
        let citation = "T-dual pairs over the trivial circle";
        match s1_pair(chern, base, fiber)
            .and_then(|p| Ok((printed_label(&p).unwrap_or_default(), dual_label(&p)?)))
        {
            Ok((label, dual)) => r.compare(format!("{id} ({label})"), citation, expected, dual),
            Err(e) => r.error(id, citation, expected, e),
        }
    }
    for b in BaseSpace::ALL {
        let want = if b == BaseSpace::Point { 1 } else { 5 };
        match enumerate_pair_classes(b) {
            Ok(c) => r.compare(
                format!("tdual.{b}.classes"),
                "isomorphism classes of pairs",
                want,
                c.len(),
            ),
            Err(e) => r.error(
                format!("tdual.{b}.classes"),
                "isomorphism classes of pairs",
                want,
                e,
            ),
        }
        let checks: [BaseCheck; 4] = [
            ("involution", "duality is an involution", check_involution),
            (
                "shift",
                "equivariance under H^3 of the base",
                check_shift_equivariance,
            ),
            (
                "certificates",
                "dual conditions hold for every computed dual",
                check_certificates,
            ),
            (
                "theorem-t",
                "K-groups of dual pairs agree with a degree shift",
                verify_theorem_t,
            ),
        ];
        for (name, citation, f) in checks {
            match f(b) {
                Ok(ok) => r.compare(
                    format!("tdual.{b}.{name}"),
                    citation,
                    "holds",
                    yes_no(ok, "holds", "fails"),
                ),
                Err(e) => r.error(format!("tdual.{b}.{name}"), citation, "holds", e),
            }
        }
    }
    let gauge =
        s1_pair("0", "0", "t12*e").and_then(|p| isomorphic(&p, &s1_pair("0", "t*e", "t12*e")?));
    match gauge {
        Ok(b) => r.compare(
            "tdual.gauge.h0",
            "(E0, h0) and (E0, h0 + π*(t^{1/2}c)) through the gauge orbit",
            "isomorphic",
            yes_no(b, "isomorphic", "not isomorphic"),
        ),
        Err(e) => r.error("tdual.gauge.h0", "gauge orbit", "isomorphic", e),
    }

    let citation = "clutching assignment used by the Mayer-Vietoris engine";
    match load_clutching_assignment(&golden.mv_clutching) {
        Ok(assignment) => {
            let pairs =
                kdual_core::tduality::all_pairs(BaseSpace::CircleTrivial).unwrap_or_default();
            for p in pairs {
                let label = printed_label(&p).unwrap_or_else(|| p.format());
                let expected = clutching_for(&p)
                    .map(|c| c.to_string())
                    .unwrap_or_else(|e| e.to_string());
                let actual = assignment
                    .get(&label)
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "missing".into());
                r.compare(
                    format!("tdual.clutching.{label}"),
                    citation,
                    expected,
                    actual,
                );
            }
        }
        Err(e) => r.error("tdual.clutching", citation, "assignment parses", e),
    }

    let printed = match PrintedKTables::from_json(&golden.pair_k_tables) {
        Ok(p) => p,
        Err(e) => {
            r.error(
                "tdual.k-tables",
                "printed twisted K-groups",
                "tables parse",
                e,
            );
            return r;
        }
    };
    let citation = "twisted K-groups over the trivial circle by Mayer-Vietoris";
    match compare_with_printed(&printed) {
        Ok(rows) => {
            for c in rows {
                let status = match c.status {
                    MvStatus::Pass => Status::Pass,
                    MvStatus::Fail => Status::Fail,
                    MvStatus::PaperAsserted => Status::PaperAsserted,
                };
                let actual = c
                    .derived
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "extension not determined".into());
                let id = format!("tdual.k-table.{}.K{}_{}", c.pair, c.degree, c.variant);
                r.push(id, citation, status, c.printed.to_string(), actual);
            }
        }
        Err(e) => r.error("tdual.k-table", citation, "comparison", e),
    }
    let printed_t = verify_theorem_t_with(BaseSpace::CircleTrivial, |p| {
        printed
            .for_pair(p)
            .cloned()
            .ok_or_else(|| TDualError::Unsupported(format!("no printed table for {}", p.format())))
    });
    match printed_t {
        Ok(b) => r.compare(
            "tdual.circle-trivial.theorem-t.printed",
            "printed K-groups of dual pairs agree with a degree shift",
            "holds",
            yes_no(b, "holds", "fails"),
        ),
        Err(e) => r.error(
            "tdual.circle-trivial.theorem-t.printed",
            "printed K-groups",
            "holds",
            e,
        ),
    }
    let search = match search_clutchings(&printed) {
        Ok(a) => join(a.iter().map(|(l, c)| format!("{l}: {c}"))),
        Err(e) => e.to_string(),
    };
    r.compare(
        "tdual.clutching-search",
        "one clutching from the candidate set reproducing every printed table",
        "a consistent assignment",
        if search.contains(':') && !search.starts_with("no ") {
            "a consistent assignment".to_string()
        } else {
            search
        },
    );
    r
}
