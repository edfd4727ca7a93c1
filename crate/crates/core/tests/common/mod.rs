#![allow(dead_code)]

use kdual_core::graded_algebra::{Degree, Variant};
use kdual_core::paper_rings::{ring, RingName};
use kdual_core::transforms::group_cohomology_z2;
use kdual_core::FGAbelianGroup;

/// Low-degree cohomology tables as printed, one row per ring and variant,
/// starting at degree 0.
pub const PRINTED_ROWS: &[(RingName, Variant, &[&str])] = &[
    (
        RingName::HhPoint,
        Variant::Eq,
        &["Z{1}", "0", "Z/2{t}", "0", "Z/2{t^2}", "0"],
    ),
    (
        RingName::HhPoint,
        Variant::Pm,
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
        &["Z{1}", "0", "0", "0", "0", "0"],
    ),
    (
        RingName::HhCircleFlip,
        Variant::Eq,
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
        &["Z{1}", "Z{e}", "Z/2{t}", "Z/2{te}", "Z/2{t^2}"],
    ),
    (
        RingName::HhCircleTrivial,
        Variant::Pm,
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
        &["Z{1}", "Z{x}", "0", "0", "0"],
    ),
    (
        RingName::HhCpInfty,
        Variant::Eq,
        &["Z{1}", "0", "Z/2{t}", "Z/2{t^{1/2}c}", "Z{c^2} ⊕ Z/2{t^2}"],
    ),
    (
        RingName::HhCpInfty,
        Variant::Pm,
        &["0", "Z/2{t^{1/2}}", "Z{c}", "Z/2{t^{3/2}}", "Z/2{tc}"],
    ),
    (
        RingName::HCpInfty,
        Variant::Eq,
        &["Z{1}", "0", "Z{c}", "0", "Z{c^2}"],
    ),
];

pub const UNIVERSAL_ROWS: &[(RingName, Variant, &[&str])] = &[
    (
        RingName::HhUniversalBase,
        Variant::Eq,
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
        &[
            "0",
            "Z/2{t^{1/2}}",
            "Z{c} ⊕ Z{ĉ}",
            "Z/2{t^{3/2}}",
            "Z/2{tc} ⊕ Z/2{tĉ}",
        ],
    ),
];

fn summands(s: &str) -> Vec<String> {
    let mut v: Vec<String> = s
        .split('⊕')
        .map(|x| x.trim().to_string())
        .filter(|x| x != "0")
        .collect();
    v.sort();
    v
}

/// The first printed row entry that the ring does not reproduce, as
/// `(ring, degree, printed, computed)`.
pub fn row_mismatch(
    name: RingName,
    v: Variant,
    printed: &[&str],
) -> Option<(RingName, Degree, String, String)> {
    let r = ring(name);
    for (level, want) in printed.iter().enumerate() {
        let d = Degree::new(level as i64, v);
        let got = r.component(d).ok()?.describe();
        if summands(&got) != summands(want) {
            return Some((name, d, want.to_string(), got));
        }
    }
    None
}

/// `H^n_v(pt)` from the group cohomology of `Z/2`.
pub fn pt(n: i64, v: Variant) -> FGAbelianGroup {
    if n < 0 {
        return FGAbelianGroup::trivial();
    }
    group_cohomology_z2(if v == Variant::Eq { 0 } else { 1 }, n).unwrap()
}

fn twist(v: Variant, k: i64) -> Variant {
    if k % 2 == 0 {
        v
    } else {
        v.flip()
    }
}

/// Additive groups of the equivariant cohomology rings built only from group
/// cohomology of `Z/2` and the cell structures, never from the presentations.
pub fn model_group(name: RingName, n: i64, v: Variant) -> Option<FGAbelianGroup> {
    Some(match name {
        RingName::HhPoint => pt(n, v),
        RingName::HhCircleTrivial => pt(n, v).direct_sum(&pt(n - 1, v)),
        RingName::HhCircleFlip => pt(n, v).direct_sum(&pt(n - 1, v.flip())),
        RingName::HhCpInfty => (0..=n / 2).fold(FGAbelianGroup::trivial(), |acc, k| {
            acc.direct_sum(&pt(n - 2 * k, twist(v, k)))
        }),
        RingName::HhUniversalBase => (1..=n / 2).fold(pt(n, v), |acc, k| {
            let p = pt(n - 2 * k, twist(v, k));
            acc.direct_sum(&p).direct_sum(&p)
        }),
        _ => return None,
    })
}
