use kdual_core::graded_algebra::{
    verify_ring_hom, Degree, HomFailure, Monomial, RingElement, RingHom, Variant,
};
use kdual_core::paper_rings::{ring, RingName};
use num_bigint::BigInt;
use proptest::prelude::*;

mod common;

#[test]
fn printed_tables() {
    for (name, v, row) in common::PRINTED_ROWS.iter().chain(common::UNIVERSAL_ROWS) {
        assert_eq!(common::row_mismatch(*name, *v, row), None);
    }
}

// Independent models for every level up to 5: the ring presentations are not
// consulted, only group cohomology of Z/2 and the obvious module structures.
#[test]
fn all_tables_through_degree_five_match_group_cohomology_models() {
    for name in [
        RingName::HhPoint,
        RingName::HhCircleTrivial,
        RingName::HhCircleFlip,
        RingName::HhCpInfty,
        RingName::HhUniversalBase,
    ] {
        for n in 0..=5i64 {
            for v in [Variant::Eq, Variant::Pm] {
                let got = ring(name).component(Degree::new(n, v)).unwrap().group();
                assert_eq!(
                    Some(got),
                    common::model_group(name, n, v),
                    "{name} degree ({n}, {v})"
                );
            }
        }
    }
}

#[test]
fn k_theory_of_point() {
    let r = ring(RingName::KkPoint);
    let s = r.parse("sigma").unwrap();
    assert_eq!(r.mul(&s, &s), r.parse("1 - t").unwrap());
    assert_eq!(r.mul(&r.parse("1 + t").unwrap(), &s), r.zero());
    assert_eq!(r.parse("sigma^3 - 2*sigma").unwrap(), r.zero());
    assert_eq!(r.component(Degree::pm(1)).unwrap().describe(), "Z{σ}");
}

#[test]
fn parse_examples() {
    let k = ring(RingName::KkCircleFlip);
    assert_eq!(k.format(&k.parse("chi^2").unwrap()), "σχ");
    assert_eq!(k.parse("0").unwrap(), k.zero());
    let t2 = ring(RingName::KkTorus2);
    assert_eq!(
        t2.format(&t2.parse("(1 + t*chi1*chi2)").unwrap()),
        "1 + tχ₁χ₂"
    );
    let h = ring(RingName::HhPoint);
    assert_eq!(h.parse("2*t12").unwrap(), h.zero());
    assert_eq!(h.parse("t").unwrap(), h.parse("(t^{1/2})^2").unwrap());
    assert!(k.parse("chi + ").is_err());
    assert!(k.parse("chi1").is_err());
}

#[test]
fn homogeneity_and_slices() {
    let k = ring(RingName::KkCircleFlip);
    assert_eq!(
        k.homogeneous_degree(&k.parse("chi + sigma").unwrap())
            .unwrap(),
        Some(Degree::pm(1))
    );
    assert!(k.homogeneous_degree(&k.parse("1 + chi").unwrap()).is_err());
    assert_eq!(k.homogeneous_degree(&k.zero()).unwrap(), None);
    let c = k.component(Degree::eq(0)).unwrap();
    let x = k.parse("3 - t + 2*sigma*chi").unwrap();
    let coords = k.coordinates(&x, &c).unwrap();
    assert_eq!(k.from_coordinates(&c, &coords), x);
}

#[test]
fn element_json_round_trip() {
    let k = ring(RingName::KkTorus2);
    let x = k.parse("3 - t*chi1 + 2*sigma*chi1*chi2").unwrap();
    assert_eq!(k.element_from_json(&k.element_to_json(&x)).unwrap(), x);
}

#[test]
fn ring_homs() {
    let (c, t) = (ring(RingName::KkCircleFlip), ring(RingName::KkTorus2));
    for chi in ["chi1", "chi2"] {
        let h = RingHom::from_exprs(c, t, &[("t", "t"), ("sigma", "sigma"), ("chi", chi)]).unwrap();
        assert!(h.check().is_ok());
    }
    let bad = RingHom::from_exprs(
        c,
        t,
        &[("t", "t"), ("sigma", "sigma"), ("chi", "chi1 + chi2")],
    )
    .unwrap();
    assert!(matches!(
        bad.check(),
        Err(HomFailure::RelationViolated { .. })
    ));
    let wrong_degree =
        RingHom::from_exprs(c, t, &[("t", "t"), ("sigma", "1"), ("chi", "chi1")]).unwrap();
    assert!(matches!(
        wrong_degree.check(),
        Err(HomFailure::DegreeMismatch { .. })
    ));
    let h = ring(RingName::HhPoint);
    let hc = ring(RingName::HhCircleTrivial);
    assert!(verify_ring_hom(h, hc, vec![hc.parse("t12").unwrap()]));
    assert!(!verify_ring_hom(h, hc, vec![hc.parse("e").unwrap()]));
    let z = ring(RingName::HCircle);
    assert!(matches!(
        RingHom::new(hc, z, vec![z.one(), z.parse("x").unwrap()]).check(),
        Err(HomFailure::DegreeMismatch { .. }) | Err(HomFailure::TorsionViolated { .. })
    ));
}

/// Monomials with every exponent at most `bound`, reducible or not.
fn raw_monomials(ngens: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial(vec![])];
    for _ in 0..ngens {
        out = out
            .into_iter()
            .flat_map(|m| {
                (0..=bound).map(move |e| {
                    let mut v = m.0.clone();
                    v.push(e);
                    Monomial(v)
                })
            })
            .collect();
    }
    out
}

const LAW_RINGS: [RingName; 8] = [
    RingName::HhPoint,
    RingName::HhCircleTrivial,
    RingName::HhCircleFlip,
    RingName::HhCpInfty,
    RingName::KkPoint,
    RingName::KkCircleFlip,
    RingName::KkTorus2,
    RingName::K0EquivCircle,
];

#[test]
fn normalize_is_idempotent_exhaustively() {
    for name in RingName::ALL {
        let r = ring(name);
        for m in raw_monomials(r.ngens(), 4) {
            let x = r.normalize(&RingElement::monomial(m, BigInt::from(3)));
            assert_eq!(r.normalize(&x), x);
            for mono in x.terms().keys() {
                assert!(!r.is_reducible(mono));
            }
        }
    }
}

#[test]
fn ring_laws_exhaustively_on_normal_monomials() {
    for name in LAW_RINGS.into_iter().chain([RingName::HhUniversalBase]) {
        let r = ring(name);
        let ms: Vec<RingElement> = r
            .normal_monomials(4)
            .iter()
            .map(|m| r.monomial_element(m))
            .collect();
        for a in &ms {
            for b in &ms {
                let ab = r.mul(a, b);
                assert_eq!(ab, r.mul(b, a), "{name}");
                for c in &ms {
                    assert_eq!(r.mul(&ab, c), r.mul(a, &r.mul(b, c)), "{name}");
                    assert_eq!(r.mul(a, &r.add(b, c)), r.add(&ab, &r.mul(a, c)), "{name}");
                }
            }
        }
    }
}

fn element(name: RingName, terms: &[(Vec<u32>, i64)]) -> RingElement {
    let r = ring(name);
    let mut x = RingElement::zero();
    for (e, c) in terms {
        let m = Monomial(
            e.iter()
                .take(r.ngens())
                .copied()
                .chain(std::iter::repeat(0))
                .take(r.ngens())
                .collect(),
        );
        x.add_term(m, BigInt::from(*c));
    }
    r.normalize(&x)
}

fn arb_terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..5, 4), -9i64..10), 0..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn random_ring_laws(i in 0usize..8, a in arb_terms(), b in arb_terms(), c in arb_terms()) {
        let name = LAW_RINGS[i];
        let r = ring(name);
        let (a, b, c) = (element(name, &a), element(name, &b), element(name, &c));
        prop_assert_eq!(r.normalize(&a), a.clone());
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.sub(&a, &a), r.zero());
        prop_assert_eq!(r.parse(&r.format_ascii(&a)).unwrap(), a);
    }
}
