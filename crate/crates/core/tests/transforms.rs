use kdual_core::exact_abelian::{FGAbelianGroup, RModuleDecomposition};
use kdual_core::graded_algebra::{Degree, Variant};
use kdual_core::paper_rings::{default_oracle, ring, RingName};
use kdual_core::transforms::{
    base_table, delta, delta_prime, forgetful_hom, group_cohomology_z2, gysin_cohomology, j_star,
    kunneth_split, kunneth_step, pullback, pushforward_after_section,
    pushforward_after_section_is_identity, pushforward_torus2, slice_rmodule, t_power,
    t_power_is_multiplication, t_power_table, t_transform, w3, KunnethBase, Theory, TransformError,
    CIRCLE_BASIS,
};
use num_bigint::BigInt;

fn cyclic(orders: &[i64]) -> FGAbelianGroup {
    FGAbelianGroup::from_cyclic_orders(&orders.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
}

fn circle(s: &str) -> kdual_core::RingElement {
    ring(RingName::KkCircleFlip).parse(s).unwrap()
}

fn torus(s: &str) -> kdual_core::RingElement {
    ring(RingName::KkTorus2).parse(s).unwrap()
}

#[test]
fn pushforward_examples() {
    assert_eq!(
        pushforward_torus2(2, &torus("chi1*chi2")).unwrap(),
        circle("chi")
    );
    assert_eq!(pushforward_torus2(2, &torus("1")).unwrap(), circle("0"));
    assert_eq!(pushforward_torus2(2, &torus("chi1")).unwrap(), circle("1"));
    assert_eq!(pushforward_torus2(1, &torus("chi2")).unwrap(), circle("1"));
    assert_eq!(
        pushforward_torus2(1, &torus("chi1*chi2")).unwrap(),
        circle("chi")
    );
    assert!(matches!(
        pushforward_torus2(3, &torus("1")),
        Err(TransformError::BadAxis(3))
    ));
    // projection formula: (π₂)_*(π₂^*(b) · a) = b · (π₂)_*(a)
    for b in CIRCLE_BASIS {
        for a in ["chi1", "t*chi1*chi2", "sigma*chi1"] {
            let lhs = pushforward_torus2(
                2,
                &ring(RingName::KkTorus2).mul(&pullback(2, &circle(b)).unwrap(), &torus(a)),
            );
            let rhs = ring(RingName::KkCircleFlip)
                .mul(&circle(b), &pushforward_torus2(2, &torus(a)).unwrap());
            assert_eq!(lhs.unwrap(), rhs, "{b} · {a}");
        }
    }
}

#[test]
fn t_values() {
    for (x, y) in [
        ("1", "t*chi"),
        ("t", "chi"),
        ("sigma*chi", "sigma - (1 - t)*chi"),
        ("chi", "1 - sigma*chi"),
        ("t*chi", "t + sigma*chi"),
        ("sigma", "-sigma*chi"),
    ] {
        assert_eq!(t_transform(&circle(x)).unwrap(), circle(y), "T({x})");
    }
}

#[test]
fn t_squared_values() {
    let expected = [
        ("1", "t + sigma*chi"),
        ("t", "1 - sigma*chi"),
        ("sigma*chi", "-1 + t + sigma*chi"),
        ("chi", "chi - sigma"),
        ("t*chi", "t*chi + sigma"),
        ("sigma", "chi - t*chi - sigma"),
    ];
    let table = t_power_table(2).unwrap();
    for ((x, y), (a, b)) in expected.iter().zip(&table) {
        assert_eq!(&circle(x), a);
        assert_eq!(&circle(y), b, "T²({x})");
    }
}

#[test]
fn t_powers() {
    assert!(t_power_is_multiplication(4, "t").unwrap());
    assert!(t_power_is_multiplication(8, "1").unwrap());
    assert!(!t_power_is_multiplication(2, "1").unwrap());
    assert!(!t_power_is_multiplication(4, "1").unwrap());
    assert!(t_power_is_multiplication(0, "1").unwrap());
    // the order is exactly 8
    for k in 1..8 {
        assert!(!t_power_is_multiplication(k, "1").unwrap(), "T^{k}");
    }
    assert!(t_power_is_multiplication(16, "1").unwrap());
}

#[test]
fn t_is_r_linear_and_swaps_variants() {
    let r = ring(RingName::KkCircleFlip);
    let t = circle("t");
    for s in CIRCLE_BASIS {
        let x = circle(s);
        assert_eq!(
            t_transform(&r.mul(&t, &x)).unwrap(),
            r.mul(&t, &t_transform(&x).unwrap())
        );
        let d = r.homogeneous_degree(&x).unwrap().unwrap();
        let dy = r
            .homogeneous_degree(&t_transform(&x).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(dy.variant, d.variant.flip());
        assert_eq!(dy.level.rem_euclid(2), (d.level - 1).rem_euclid(2));
    }
    // additivity on a random-looking combination
    let a = circle("3 - 2*t + sigma*chi - 5*chi");
    let b = circle("t*chi + 7*sigma");
    assert_eq!(
        t_power(3, &r.add(&a, &b)).unwrap(),
        r.add(&t_power(3, &a).unwrap(), &t_power(3, &b).unwrap())
    );
}

#[test]
fn section_then_pushforward_is_identity() {
    let o = default_oracle();
    let pairs = pushforward_after_section(o).unwrap();
    assert_eq!(pairs.len(), 3);
    for (x, y) in &pairs {
        assert_eq!(x, y);
    }
    assert!(pushforward_after_section_is_identity(o).unwrap());
    assert_eq!(j_star(o, &circle("chi")).unwrap(), torus("chi1*chi2"));
}

fn printed_group_cohomology(m: u32, n: i64) -> FGAbelianGroup {
    match (m, n) {
        (0, 0) => FGAbelianGroup::free(1),
        (0, n) if n % 2 == 0 => cyclic(&[2]),
        (1, n) if n % 2 == 1 => cyclic(&[2]),
        _ => FGAbelianGroup::trivial(),
    }
}

#[test]
fn group_cohomology_matches_printed_formulas() {
    for m in 0..=1 {
        for n in 0..=10 {
            assert_eq!(
                group_cohomology_z2(m, n).unwrap(),
                printed_group_cohomology(m, n),
                "m={m} n={n}"
            );
        }
        for n in 1..=8 {
            assert_eq!(
                group_cohomology_z2(m, n + 2).unwrap(),
                group_cohomology_z2(m, n).unwrap()
            );
        }
    }
    assert!(matches!(
        group_cohomology_z2(0, -1),
        Err(TransformError::NegativeDegree(-1))
    ));
    assert!(group_cohomology_z2(2, 0).is_err());
}

#[test]
fn group_cohomology_is_point_cohomology() {
    // H^n_{Z/2}(pt) is the untwisted group, H^n_±(pt) the twisted one
    let r = ring(RingName::HhPoint);
    for n in 0..=10 {
        assert_eq!(
            r.component(Degree::eq(n)).unwrap().group(),
            group_cohomology_z2(0, n).unwrap()
        );
        assert_eq!(
            r.component(Degree::pm(n)).unwrap().group(),
            group_cohomology_z2(1, n).unwrap()
        );
    }
}

#[test]
fn kunneth_k_theory() {
    let o = default_oracle();
    let mut table = base_table(KunnethBase::Point, Theory::K, 1).unwrap();
    for n in 1..=3usize {
        table = kunneth_step(&table, Theory::K);
        let k = 1 << (n - 1);
        let k0 = table.module(Degree::eq(0)).unwrap().classify().unwrap();
        assert_eq!(k0, RModuleDecomposition::new(k, 0, k, 0), "n = {n}");
        assert_eq!(k0, o.k0_module(n).unwrap().classify().unwrap());
        assert!(table.group(Degree::eq(1)).unwrap().is_trivial());
    }
    let one = kunneth_split(KunnethBase::Point, Theory::K, 1).unwrap();
    for d in [Degree::eq(0), Degree::eq(1), Degree::pm(0), Degree::pm(1)] {
        let direct = slice_rmodule(ring(RingName::KkCircleFlip), d)
            .unwrap()
            .classify()
            .unwrap();
        assert_eq!(one.module(d).unwrap().classify().unwrap(), direct, "{d}");
    }
    let two = kunneth_split(KunnethBase::CircleFlip, Theory::K, 1).unwrap();
    for d in [Degree::eq(0), Degree::eq(1), Degree::pm(0), Degree::pm(1)] {
        let direct = slice_rmodule(ring(RingName::KkTorus2), d)
            .unwrap()
            .classify()
            .unwrap();
        assert_eq!(two.module(d).unwrap().classify().unwrap(), direct, "{d}");
    }
}

#[test]
fn kunneth_cohomology() {
    let t = kunneth_split(KunnethBase::Point, Theory::H, 6).unwrap();
    assert_eq!(t.group(Degree::pm(1)).unwrap(), cyclic(&[2, 0]));
    let r = ring(RingName::HhCircleFlip);
    for n in 0..=6 {
        for v in [Variant::Eq, Variant::Pm] {
            assert_eq!(
                t.group(Degree::new(n, v)).unwrap(),
                r.component(Degree::new(n, v)).unwrap().group()
            );
        }
    }
}

#[test]
fn gysin_examples() {
    let base = ring(RingName::HhCircleTrivial);
    let e0 = gysin_cohomology(base, &base.zero(), 5).unwrap();
    assert_eq!(e0.group(Degree::eq(3)).unwrap(), cyclic(&[2, 2]));
    assert!(!e0.extension_ambiguous());
    let e1 = gysin_cohomology(base, &base.parse("t12*e").unwrap(), 5).unwrap();
    assert_eq!(e1.group(Degree::eq(3)).unwrap(), cyclic(&[2]));

    let pt = ring(RingName::HhPoint);
    let flip = ring(RingName::HhCircleFlip);
    let g = gysin_cohomology(pt, &pt.zero(), 6).unwrap();
    for n in 0..=6 {
        for v in [Variant::Eq, Variant::Pm] {
            let d = Degree::new(n, v);
            assert_eq!(
                g.group(d).unwrap(),
                flip.component(d).unwrap().group(),
                "{d}"
            );
        }
    }
    assert!(gysin_cohomology(base, &base.parse("e").unwrap(), 3).is_err());
}

#[test]
fn gysin_universal_base() {
    let u = ring(RingName::HhUniversalBase);
    let t = gysin_cohomology(u, &u.parse("c").unwrap(), 4).unwrap();
    assert_eq!(t.group(Degree::eq(3)).unwrap(), cyclic(&[2, 0]));
    let h4 = t.get(Degree::pm(4)).unwrap();
    assert!(h4.extension_ambiguous);
    assert_eq!(h4.sub, cyclic(&[2]));
    assert_eq!(h4.quotient, cyclic(&[2]));
    assert!(h4.group.is_none());
}

#[test]
fn delta_composites() {
    for name in [
        RingName::KkPoint,
        RingName::KkCircleFlip,
        RingName::KkTorus2,
    ] {
        let r = ring(name);
        let one_minus_t = r.parse("1 - t").unwrap();
        for level in 0..=1 {
            for m in r.component(Degree::eq(level)).unwrap().basis {
                let a = r.monomial_element(&m);
                let back = delta_prime(r, &delta(r, &a).unwrap()).unwrap();
                assert_eq!(back, r.mul(&one_minus_t, &a), "{name} {}", r.format(&a));
            }
            for m in r.component(Degree::pm(level)).unwrap().basis {
                let a = r.monomial_element(&m);
                let back = delta(r, &delta_prime(r, &a).unwrap()).unwrap();
                assert_eq!(back, r.mul(&one_minus_t, &a), "{name} {}", r.format(&a));
            }
        }
    }
    for name in [
        RingName::HhPoint,
        RingName::HhCircleTrivial,
        RingName::HhCircleFlip,
        RingName::HhCpInfty,
    ] {
        let r = ring(name);
        let t = r.parse("t").unwrap();
        for level in 0..=4 {
            for m in r.component(Degree::eq(level)).unwrap().basis {
                let a = r.monomial_element(&m);
                assert_eq!(
                    delta_prime(r, &delta(r, &a).unwrap()).unwrap(),
                    r.mul(&t, &a)
                );
            }
            for m in r.component(Degree::pm(level)).unwrap().basis {
                let a = r.monomial_element(&m);
                assert_eq!(
                    delta(r, &delta_prime(r, &a).unwrap()).unwrap(),
                    r.mul(&t, &a)
                );
            }
        }
    }
    let k = ring(RingName::KkPoint);
    assert!(delta(k, &k.parse("sigma").unwrap()).is_err());
    assert!(delta(ring(RingName::HPoint), &ring(RingName::HPoint).one()).is_err());
}

#[test]
fn point_k_theory_relations() {
    let k = ring(RingName::KkPoint);
    assert_eq!(k.parse("sigma^3 - 2*sigma").unwrap(), k.zero());
    assert_eq!(k.parse("sigma^2").unwrap(), k.parse("1 - t").unwrap());
    assert_eq!(k.parse("(1 + t)*sigma").unwrap(), k.zero());
}

#[test]
fn w3_on_trivial_circle() {
    let r = ring(RingName::HhCircleTrivial);
    let c = r.parse("t12*e").unwrap();
    assert_eq!(w3(r, &c).unwrap(), r.parse("t*e").unwrap());
    assert_eq!(r.component(Degree::eq(3)).unwrap().group(), cyclic(&[2]));
    assert!(!w3(r, &c).unwrap().is_zero());
}

#[test]
fn forgetful_maps() {
    for name in [
        RingName::HhPoint,
        RingName::HhCircleTrivial,
        RingName::HhCircleFlip,
        RingName::HhCpInfty,
    ] {
        let f = forgetful_hom(name).unwrap();
        assert!(f.check().is_ok(), "{name}");
        assert!(f.apply(&ring(name).parse("t12").unwrap()).is_zero());
    }
    let f = forgetful_hom(RingName::HhCircleTrivial).unwrap();
    assert_eq!(
        f.apply(&ring(RingName::HhCircleTrivial).parse("e").unwrap()),
        ring(RingName::HCircle).parse("x").unwrap()
    );
    assert!(forgetful_hom(RingName::KkPoint).is_err());
}
