use kdual_core::exact_abelian::{
    cochain_cohomology, exactness_check, smith_normal_form, AbelianPresentation, FGAbelianGroup,
    GroupHom, Indecomposable, IntegerMatrix, RModule, RModuleDecomposition,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn check_snf(m: &IntegerMatrix) {
    let s = smith_normal_form(m);
    assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
    assert!(s.u.is_unimodular() && s.v.is_unimodular());
    assert_eq!(
        s.u.mul(&s.u_inv).unwrap(),
        IntegerMatrix::identity(m.rows())
    );
    assert_eq!(
        s.v.mul(&s.v_inv).unwrap(),
        IntegerMatrix::identity(m.cols())
    );
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j {
                assert!(s.d.get(i, j).is_zero());
            }
        }
    }
    let diag = s.diagonal();
    for w in diag.windows(2) {
        assert!(!w[0].is_negative());
        if w[1].is_zero() {
            continue;
        }
        assert!(!w[0].is_zero() && w[1].is_multiple_of(&w[0]), "{diag:?}");
    }
}

#[test]
fn snf_known_matrix() {
    let m = IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    check_snf(&m);
    assert_eq!(smith_normal_form(&m).diagonal(), big(&[2, 6, 12]));
}

#[test]
fn snf_edge_shapes() {
    check_snf(&IntegerMatrix::zeros(3, 2));
    check_snf(&IntegerMatrix::zeros(0, 2));
    check_snf(&IntegerMatrix::from_rows(&[vec![0, 0, 5]]));
    assert_eq!(
        smith_normal_form(&IntegerMatrix::from_rows(&[vec![-3]])).diagonal(),
        big(&[3])
    );
}

#[test]
fn cokernel_groups() {
    let g = FGAbelianGroup::cokernel(&IntegerMatrix::from_rows(&[
        vec![2, 0],
        vec![0, 0],
        vec![0, 3],
    ]));
    assert_eq!(g.invariant_factors(), &big(&[6, 0])[..]);
    assert_eq!(g.to_string(), "Z/6 ⊕ Z");
    assert_eq!(g.rank(), 1);
    assert_eq!(FGAbelianGroup::free(0).to_string(), "0");
    assert_eq!(
        FGAbelianGroup::from_cyclic_orders(&big(&[2, 2])).count_cyclic(2),
        2
    );
}

#[test]
fn kernel_image_and_exactness() {
    // Z --2--> Z --> Z/2 --> 0
    let z = AbelianPresentation::free(1);
    let z2 = AbelianPresentation::cyclic(&big(&[2]));
    let f = GroupHom::new(z.clone(), z.clone(), IntegerMatrix::from_rows(&[vec![2]])).unwrap();
    let g = GroupHom::new(z.clone(), z2.clone(), IntegerMatrix::from_rows(&[vec![1]])).unwrap();
    assert!(exactness_check(&f, &g).unwrap());
    assert_eq!(g.cokernel().unwrap().group(), FGAbelianGroup::trivial());
    assert_eq!(f.cokernel().unwrap().group().to_string(), "Z/2");
    assert!(f.kernel().unwrap().group().is_trivial());
    // Z/2 --> Z is not well defined unless zero
    assert!(GroupHom::new(z2.clone(), z.clone(), IntegerMatrix::from_rows(&[vec![1]])).is_err());
    assert!(GroupHom::new(z2, z, IntegerMatrix::from_rows(&[vec![0]])).is_ok());
}

#[test]
fn cochain_cohomology_of_circle() {
    // C^0 = Z, C^1 = Z with zero differential
    let d0 = IntegerMatrix::from_rows(&[vec![0]]);
    let g = cochain_cohomology(&d0, &IntegerMatrix::zeros(0, 1)).unwrap();
    assert_eq!(g, FGAbelianGroup::free(1));
    assert!(cochain_cohomology(&IntegerMatrix::zeros(2, 1), &IntegerMatrix::zeros(1, 1)).is_err());
}

#[test]
fn indecomposables_fingerprints() {
    for k in Indecomposable::ALL {
        let mut d = RModuleDecomposition::default();
        match k {
            Indecomposable::R => d.r = 1,
            Indecomposable::RModI => d.r_mod_i = 1,
            Indecomposable::RModJ => d.r_mod_j = 1,
            Indecomposable::IMod2I => d.i_mod_2i = 1,
        }
        assert_eq!(k.module().classify().unwrap(), d);
        assert_eq!(k.module().fingerprint().unwrap(), d.predicted_fingerprint());
    }
}

#[test]
fn rejects_non_modules() {
    let z = AbelianPresentation::free(1);
    assert!(RModule::from_presentation(&z, &IntegerMatrix::from_rows(&[vec![2]])).is_err());
    let z2 = AbelianPresentation::cyclic(&big(&[2]));
    assert!(RModule::from_presentation(&z2, &IntegerMatrix::from_rows(&[vec![3]])).is_ok());
}

#[test]
fn decomposition_text_round_trip() {
    for s in ["0", "R", "R/I ⊕ R/J", "R^2 ⊕ (R/J)^2", "R/J ⊕ I/2I"] {
        let d: RModuleDecomposition = s.parse().unwrap();
        assert_eq!(d.to_string(), s);
    }
    assert_eq!(
        "R + R + (R/J)^2"
            .parse::<RModuleDecomposition>()
            .unwrap()
            .to_string(),
        "R^2 ⊕ (R/J)^2"
    );
    assert!("R/K".parse::<RModuleDecomposition>().is_err());
}

/// A unimodular matrix with its inverse, built from elementary operations.
fn scramble(n: usize, ops: &[(usize, usize, i64)]) -> (IntegerMatrix, IntegerMatrix) {
    let mut a = IntegerMatrix::identity(n);
    let mut a_inv = IntegerMatrix::identity(n);
    for &(i, j, q) in ops {
        if n < 2 {
            break;
        }
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        let mut e = IntegerMatrix::identity(n);
        e.set(i, j, BigInt::from(q));
        let mut e_inv = IntegerMatrix::identity(n);
        e_inv.set(i, j, BigInt::from(-q));
        a = e.mul(&a).unwrap();
        a_inv = a_inv.mul(&e_inv).unwrap();
    }
    (a, a_inv)
}

/// The same module on the generators `a^{-1}(old)`.
fn disguise(m: &RModule, ops: &[(usize, usize, i64)]) -> RModule {
    let pres = m.presentation();
    let n = pres.generators();
    let (a, a_inv) = scramble(n, ops);
    let rel = a.mul(pres.relations()).unwrap();
    let t = a.mul(m.t_action()).unwrap().mul(&a_inv).unwrap();
    RModule::from_presentation(&AbelianPresentation::new(n, rel).unwrap(), &t).unwrap()
}

#[test]
fn classification_exhaustive_up_to_eight_summands() {
    let ops = [
        (0, 1, 3),
        (1, 2, -2),
        (2, 0, 1),
        (3, 1, 5),
        (0, 3, -1),
        (4, 2, 2),
        (5, 6, 1),
        (7, 0, -4),
    ];
    let mut count = 0;
    for a in 0..=8 {
        for b in 0..=8 - a {
            for c in 0..=8 - a - b {
                for d in 0..=8 - a - b - c {
                    let dec = RModuleDecomposition::new(a, b, c, d);
                    let m = disguise(&dec.module(), &ops);
                    assert_eq!(m.classify().unwrap(), dec);
                    count += 1;
                }
            }
        }
    }
    assert_eq!(count, 495);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_round_trip(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-30i64..30, 16)) {
        let m = IntegerMatrix::from_rows(
            &(0..rows).map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect()).collect::<Vec<_>>(),
        );
        check_snf(&m);
    }

    #[test]
    fn classify_random_sums(
        a in 0usize..3, b in 0usize..3, c in 0usize..3, d in 0usize..3,
        ops in prop::collection::vec((0usize..12, 0usize..12, -3i64..4), 0..10),
    ) {
        let dec = RModuleDecomposition::new(a, b, c, d);
        let m = disguise(&dec.module(), &ops);
        prop_assert_eq!(m.classify().unwrap(), dec);
    }

    #[test]
    fn direct_sum_classifies_additively(
        x in (0usize..3, 0usize..3, 0usize..3, 0usize..3),
        y in (0usize..3, 0usize..3, 0usize..3, 0usize..3),
    ) {
        let dx = RModuleDecomposition::new(x.0, x.1, x.2, x.3);
        let dy = RModuleDecomposition::new(y.0, y.1, y.2, y.3);
        let sum = dx.module().direct_sum(&dy.module());
        prop_assert_eq!(sum.classify().unwrap(), dx.sum(&dy));
    }
}
