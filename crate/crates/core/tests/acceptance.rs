//! One line per acceptance criterion. Criteria listed in `KNOWN_FAILURES`
//! are reported as FAIL and must keep failing; every other one must pass.

use std::panic::{catch_unwind, AssertUnwindSafe};

use kdual_core::exact_abelian::{smith_normal_form, IntegerMatrix, RModuleDecomposition};
use kdual_core::graded_algebra::{Degree, Monomial, RingElement, RingHom, Variant};
use kdual_core::paper_rings::{default_oracle, nu_star_image, ring, RingName};
use kdual_core::tduality::{
    check_involution, check_shift_equivariance, compare_with_printed, enumerate_pair_classes,
    isomorphic, tdual, verify_theorem_t, BaseSpace, MvStatus, Pair, PrintedKTables,
    RealCircleBundle,
};
use kdual_core::transforms::{
    base_table, delta, delta_prime, group_cohomology_z2, kunneth_step,
    pushforward_after_section_is_identity, t_power_is_multiplication, t_power_table, t_transform,
    w3, KunnethBase, Theory, CIRCLE_BASIS,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

mod common;

/// The printed `R/J ⊕ I/2I` for `(E0, π*(t^{1/2}c))` in `K^{h+1}_{Z/2}` and
/// `K^{h+0}_±` cannot come from a Mayer-Vietoris cokernel of `1 - t`, on which
/// `t` acts trivially; the engine derives `R/I ⊕ I/2I` there.
const KNOWN_FAILURES: &[u32] = &[8];

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

type Criterion = (u32, &'static str, fn() -> Check);

fn run(n: u32, title: &str, f: impl FnOnce() -> Check) -> bool {
    let outcome = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(p) => Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into())),
    };
    match &outcome {
        Ok(()) => println!("criterion {n:>2}: PASS  {title}"),
        Err(e) => println!("criterion {n:>2}: FAIL  {title}: {e}"),
    }
    outcome.is_ok()
}

fn c1() -> Check {
    for (name, v, row) in common::PRINTED_ROWS {
        if let Some((r, d, want, got)) = common::row_mismatch(*name, *v, row) {
            return Err(format!("{r} {d}: printed {want}, computed {got}"));
        }
    }
    for name in [
        RingName::HhPoint,
        RingName::HhCircleTrivial,
        RingName::HhCircleFlip,
        RingName::HhCpInfty,
    ] {
        for n in 0..=5 {
            for v in [Variant::Eq, Variant::Pm] {
                let got = ring(name)
                    .component(Degree::new(n, v))
                    .map_err(|e| e.to_string())?
                    .group();
                ensure(
                    Some(got) == common::model_group(name, n, v),
                    format!("{name} degree ({n}, {v})"),
                )?;
            }
        }
    }
    Ok(())
}

fn c2() -> Check {
    let o = default_oracle();
    let rel = |n, l, r| {
        o.verify_relation_via_oracle(n, l, r)
            .map_err(|e| e.to_string())
    };
    ensure(rel(1, "L^2", "C0")?, "L² = C0")?;
    ensure(rel(1, "C1*L", "-L + C0 + C1")?, "C1·L")?;
    for (l, r) in [
        ("(C0 + C1)*(C0 - L1)", "0"),
        ("(C0 + C1)*(C0 - L2)", "0"),
        ("(C0 - H)*(C1 - L1)", "0"),
        ("(C0 - H)*(C1 - L2)", "0"),
        ("(C0 - H)*(C1 - H)", "0"),
        ("(C0 - L1)*(C0 - L2)", "(C0 - C1)*(C0 - H)"),
    ] {
        ensure(rel(2, l, r)?, format!("{l} = {r}"))?;
    }
    for (n, gens) in [(1, 3), (2, 6), (3, 12)] {
        ensure(
            o.basis_matrix(n).map_err(|e| e.to_string())?.cols() == gens,
            format!("basis size for n = {n}"),
        )?;
        ensure(
            o.verify_f_injective(n).map_err(|e| e.to_string())?,
            format!("F injective for n = {n}"),
        )?;
    }
    Ok(())
}

fn c3() -> Check {
    let k = ring(RingName::KkPoint);
    let p = |s: &str| k.parse(s).unwrap();
    ensure(p("sigma^3 - 2*sigma").is_zero(), "σ³ = 2σ")?;
    ensure(k.mul(&p("sigma"), &p("sigma")) == p("1 - t"), "σ² = 1 - t")?;
    ensure(k.mul(&p("1 + t"), &p("sigma")).is_zero(), "(1 + t)σ = 0")?;
    ensure(
        k.component(Degree::eq(0)).unwrap().describe() == "Z{1} ⊕ Z{t}",
        "K^0 = R",
    )?;
    ensure(
        k.component(Degree::pm(1)).unwrap().describe() == "Z{σ}",
        "K^1_± = Z{σ}",
    )?;
    ensure(
        k.component(Degree::eq(1)).unwrap().group().is_trivial(),
        "K^1 = 0",
    )?;
    ensure(
        k.component(Degree::pm(0)).unwrap().group().is_trivial(),
        "K^0_± = 0",
    )?;
    let one_minus_t = p("1 - t");
    for x in [p("1"), p("t"), p("3 - 2*t")] {
        let back = delta_prime(k, &delta(k, &x).unwrap()).unwrap();
        ensure(back == k.mul(&one_minus_t, &x), "δ′δ = 1 - t")?;
    }
    Ok(())
}

fn c4() -> Check {
    let o = default_oracle();
    let mut table = base_table(KunnethBase::Point, Theory::K, 1).map_err(|e| e.to_string())?;
    for n in 1..=3usize {
        table = kunneth_step(&table, Theory::K);
        let k = 1 << (n - 1);
        let want = RModuleDecomposition::new(k, 0, k, 0);
        let from_oracle = o
            .k0_module(n)
            .map_err(|e| e.to_string())?
            .classify()
            .map_err(|e| e.to_string())?;
        ensure(
            from_oracle == want,
            format!("oracle K^0 for n = {n} is {from_oracle}"),
        )?;
        let split = table
            .module(Degree::eq(0))
            .ok_or("no K^0")?
            .classify()
            .map_err(|e| e.to_string())?;
        ensure(split == want, format!("split K^0 for n = {n} is {split}"))?;
        ensure(
            table.group(Degree::eq(1)).ok_or("no K^1")?.is_trivial(),
            format!("K^1 ≠ 0 for n = {n}"),
        )?;
    }
    Ok(())
}

fn c5() -> Check {
    let c = ring(RingName::KkCircleFlip);
    let t_printed = [
        "t*chi",
        "chi",
        "sigma - (1 - t)*chi",
        "1 - sigma*chi",
        "t + sigma*chi",
        "-sigma*chi",
    ];
    let t2_printed = [
        "t + sigma*chi",
        "1 - sigma*chi",
        "-1 + t + sigma*chi",
        "chi - sigma",
        "t*chi + sigma",
        "chi - t*chi - sigma",
    ];
    for (x, y) in CIRCLE_BASIS.iter().zip(t_printed) {
        ensure(
            t_transform(&c.parse(x).unwrap()).unwrap() == c.parse(y).unwrap(),
            format!("T({x})"),
        )?;
    }
    for ((x, got), y) in t_power_table(2).unwrap().iter().zip(t2_printed) {
        ensure(*got == c.parse(y).unwrap(), format!("T²({})", c.format(x)))?;
    }
    ensure(t_power_is_multiplication(4, "t").unwrap(), "T⁴ = t")?;
    ensure(t_power_is_multiplication(8, "1").unwrap(), "T⁸ = 1")?;
    ensure(!t_power_is_multiplication(2, "1").unwrap(), "T² = 1")
}

fn c6() -> Check {
    for m in 0..=1u32 {
        for n in 0..=10i64 {
            let got = group_cohomology_z2(m, n).map_err(|e| e.to_string())?;
            let want = match (m, n) {
                (0, 0) => "Z",
                (0, n) if n % 2 == 0 => "Z/2",
                (1, n) if n % 2 == 1 => "Z/2",
                _ => "0",
            };
            ensure(got.to_string() == want, format!("m = {m}, n = {n}: {got}"))?;
            if n >= 1 && n + 2 <= 10 {
                ensure(
                    group_cohomology_z2(m, n + 2).unwrap() == got,
                    format!("period 2 at m = {m}, n = {n}"),
                )?;
            }
        }
    }
    Ok(())
}

fn c7() -> Check {
    let s1 = BaseSpace::CircleTrivial;
    let r = s1.ring();
    let pair = |chern: &str, base: &str, fiber: &str| -> Pair {
        let b = RealCircleBundle::new(s1, r.parse(chern).unwrap()).unwrap();
        Pair::new(b, r.parse(base).unwrap(), r.parse(fiber).unwrap()).unwrap()
    };
    let classes = enumerate_pair_classes(s1).map_err(|e| e.to_string())?;
    ensure(classes.len() == 5, format!("{} classes", classes.len()))?;
    let (e0_0, e0_pi, e0_h0, e0_h0_pi, e1_0, e1_h1) = (
        pair("0", "0", "0"),
        pair("0", "t*e", "0"),
        pair("0", "0", "t12*e"),
        pair("0", "t*e", "t12*e"),
        pair("t12*e", "0", "0"),
        pair("t12*e", "0", "t12*e"),
    );
    for (p, q) in [
        (&e0_0, &e0_0),
        (&e0_pi, &e0_pi),
        (&e0_h0, &e1_0),
        (&e0_h0_pi, &e1_0),
        (&e1_h1, &e1_h1),
    ] {
        let d = tdual(p).map_err(|e| e.to_string())?.dual;
        ensure(
            isomorphic(&d, q).unwrap(),
            format!("{} ↔ {}", p.format(), q.format()),
        )?;
    }
    ensure(
        check_involution(s1).unwrap(),
        "duality is not an involution",
    )?;
    ensure(
        isomorphic(&e0_h0, &e0_h0_pi).unwrap(),
        "(E0, h0) and (E0, h0 + π*(t^{1/2}c)) differ",
    )?;
    ensure(check_shift_equivariance(s1).unwrap(), "shift equivariance")
}

fn c8() -> Check {
    let cmp = compare_with_printed(&PrintedKTables::builtin()).map_err(|e| e.to_string())?;
    let bad: Vec<String> = cmp
        .iter()
        .filter(|c| c.status == MvStatus::Fail)
        .map(|c| {
            let derived = c
                .derived
                .as_ref()
                .map(|d| d.to_string())
                .unwrap_or_else(|| "?".into());
            format!(
                "{} K^{}_{}: printed {}, derived {}",
                c.pair, c.degree, c.variant, c.printed, derived
            )
        })
        .collect();
    for b in BaseSpace::ALL {
        ensure(
            verify_theorem_t(b).map_err(|e| e.to_string())?,
            format!("T-duality isomorphism over {}", b.as_str()),
        )?;
    }
    ensure(bad.is_empty(), bad.join("; "))
}

fn c9() -> Check {
    for (name, v, row) in common::UNIVERSAL_ROWS {
        if let Some((r, d, want, got)) = common::row_mismatch(*name, *v, row) {
            return Err(format!("{r} {d}: printed {want}, computed {got}"));
        }
    }
    let r = ring(RingName::HhUniversalBase);
    ensure(
        r.parse("2*t12").unwrap().is_zero() && r.parse("c*chat").unwrap().is_zero(),
        "relations",
    )?;
    for n in 0..=4 {
        for v in [Variant::Eq, Variant::Pm] {
            let got = r.component(Degree::new(n, v)).unwrap().group();
            ensure(
                Some(got) == common::model_group(RingName::HhUniversalBase, n, v),
                format!("degree ({n}, {v})"),
            )?;
        }
    }
    Ok(())
}

const LAW_RINGS: [RingName; 9] = [
    RingName::HhPoint,
    RingName::HhCircleTrivial,
    RingName::HhCircleFlip,
    RingName::HhCpInfty,
    RingName::HhUniversalBase,
    RingName::KkPoint,
    RingName::KkCircleFlip,
    RingName::KkTorus2,
    RingName::K0EquivCircle,
];

fn raw_monomials(ngens: usize, bound: u32) -> Vec<Monomial> {
    (0..ngens).fold(vec![Monomial(vec![])], |acc, _| {
        acc.into_iter()
            .flat_map(|m| {
                (0..=bound).map(move |e| {
                    let mut v = m.0.clone();
                    v.push(e);
                    Monomial(v)
                })
            })
            .collect()
    })
}

fn element(name: RingName, terms: &[(Vec<u32>, i64)]) -> RingElement {
    let r = ring(name);
    let mut x = RingElement::zero();
    for (e, c) in terms {
        let m = Monomial(
            (0..r.ngens())
                .map(|i| e.get(i).copied().unwrap_or(0))
                .collect(),
        );
        x.add_term(m, BigInt::from(*c));
    }
    r.normalize(&x)
}

fn c10() -> Check {
    // exhaustive: normalize idempotence and the ring laws up to exponent 4
    for name in RingName::ALL {
        let r = ring(name);
        for m in raw_monomials(r.ngens(), 4) {
            let x = r.normalize(&RingElement::monomial(m, BigInt::from(3)));
            ensure(
                r.normalize(&x) == x,
                format!("normalize not idempotent in {name}"),
            )?;
        }
    }
    for name in LAW_RINGS {
        let r = ring(name);
        let ms: Vec<RingElement> = r
            .normal_monomials(4)
            .iter()
            .map(|m| r.monomial_element(m))
            .collect();
        for a in &ms {
            for b in &ms {
                let ab = r.mul(a, b);
                ensure(ab == r.mul(b, a), format!("commutativity in {name}"))?;
                for c in &ms {
                    ensure(
                        r.mul(&ab, c) == r.mul(a, &r.mul(b, c)),
                        format!("associativity in {name}"),
                    )?;
                    ensure(
                        r.mul(a, &r.add(b, c)) == r.add(&ab, &r.mul(a, c)),
                        format!("distributivity in {name}"),
                    )?;
                }
            }
        }
    }

    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    let terms = || prop::collection::vec((prop::collection::vec(0u32..5, 4), -9i64..10), 0..5);
    runner
        .run(
            &(0..LAW_RINGS.len(), terms(), terms(), terms()),
            |(i, a, b, c)| {
                let name = LAW_RINGS[i];
                let r = ring(name);
                let (a, b, c) = (element(name, &a), element(name, &b), element(name, &c));
                prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
                prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
                prop_assert_eq!(
                    r.mul(&a, &r.add(&b, &c)),
                    r.add(&r.mul(&a, &b), &r.mul(&a, &c))
                );
                Ok(())
            },
        )
        .map_err(|e| format!("random ring laws: {e}"))?;

    let mut runner = TestRunner::new(Config {
        cases: 200,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(
            &(1usize..5, 1usize..5, prop::collection::vec(-30i64..30, 16)),
            |(rows, cols, seed)| {
                let m = IntegerMatrix::from_rows(
                    &(0..rows)
                        .map(|i| seed[i * 4..i * 4 + cols].to_vec())
                        .collect::<Vec<_>>(),
                );
                let s = smith_normal_form(&m);
                prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
                prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
                Ok(())
            },
        )
        .map_err(|e| format!("SNF round trip: {e}"))?;

    let mut runner = TestRunner::new(Config {
        cases: 200,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(
            &(0usize..3, 0usize..3, 0usize..3, 0usize..3),
            |(a, b, c, d)| {
                let dec = RModuleDecomposition::new(a, b, c, d);
                prop_assert_eq!(dec.module().classify().unwrap(), dec);
                Ok(())
            },
        )
        .map_err(|e| format!("classification of random sums: {e}"))?;

    let o = default_oracle();
    let k = ring(RingName::KkCircleFlip);
    for s in CIRCLE_BASIS {
        let x = k.parse(s).unwrap();
        let twice = nu_star_image(o, &nu_star_image(o, &x).unwrap()).unwrap();
        ensure(twice == x, format!("ν* is not an involution on {s}"))?;
    }
    let h = ring(RingName::HhCircleFlip);
    let nu = RingHom::from_exprs(h, h, &[("t12", "t12"), ("chi", "chi + t12")]).unwrap();
    ensure(nu.check().is_ok(), "χ ↦ χ + t^{1/2} is not a ring map")?;
    let chi = h.parse("chi").unwrap();
    ensure(
        nu.apply(&nu.apply(&chi)) == chi,
        "ν* on cohomology is not an involution",
    )?;

    ensure(
        pushforward_after_section_is_identity(o).unwrap(),
        "π_* ∘ j^* ≠ id",
    )?;

    let s1 = ring(RingName::HhCircleTrivial);
    ensure(
        w3(s1, &s1.parse("t12*e").unwrap()).unwrap() == s1.parse("t*e").unwrap(),
        "W₃ ≠ δc",
    )
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (1, "cohomology tables of pt, S¹, S̃¹, CP∞ in degrees 0-5", c1),
        (2, "ring relations and injectivity of F via the oracle", c2),
        (3, "K-theory of the point and δ′δ = 1 - t", c3),
        (4, "K^0 of flip tori for n = 1, 2, 3 and vanishing K^1", c4),
        (5, "T and T² values, T⁴ = t, T⁸ = 1, T² ≠ 1", c5),
        (6, "group cohomology of Z/2 for n ≤ 10 with period 2", c6),
        (
            7,
            "T-dual pairs over the circle: relations, involution, gauge, shift",
            c7,
        ),
        (
            8,
            "twisted K tables over the circle and the T-duality isomorphism",
            c8,
        ),
        (9, "universal base tables through degree 4", c9),
        (10, "property suites", c10),
    ];
    let failed: Vec<u32> = criteria
        .iter()
        .filter(|(n, title, f)| !run(*n, title, *f))
        .map(|(n, _, _)| *n)
        .collect();
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed.len(),
        criteria.len()
    );
    assert_eq!(failed, KNOWN_FAILURES, "unexpected set of failing criteria");
}
