//! A totally chiral map of type {11,5} with rotation group M11.

use std::sync::OnceLock;

use crate::fp::{todd_coxeter, Presentation};
use crate::perm::{Perm, PermutationGroup};
use crate::rotation::RotationSystem;

use super::s6::derive_relators;

pub const M11_ORDER: u64 = 7920;

/// Standard generators of M11 on eleven points.
pub fn m11() -> PermutationGroup {
    PermutationGroup::new(
        11,
        vec![
            Perm::from_cycles(11, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]]),
            Perm::from_cycles(11, &[&[2, 6, 10, 7], &[3, 9, 4, 5]]),
        ],
    )
}

/// Images of `s1, s2`.
pub const M11_SIGMA: [[u32; 11]; 2] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0],
    [6, 9, 1, 3, 2, 7, 5, 10, 4, 8, 0],
];

/// First pair `(s1, s2)` in element-enumeration order of [`m11`] with
/// `s1` the 11-cycle generator, `s1 s2` an involution, generating M11,
/// chiral, satisfying the intersection property, and with `R ⋄ R̄` of
/// order `|M11|^2`.
pub fn search_m11_map() -> Option<Vec<Perm>> {
    let g = m11();
    let a = g.generators()[0].clone();
    let els = g.elements(10_000).ok()?;
    let mirror_b = |b: &Perm| a.mul(&a).mul(b);
    for b in &els {
        if !a.mul(b).mul(&a.mul(b)).is_identity() || b.order() < 3 {
            continue;
        }
        let sigma = vec![a.clone(), b.clone()];
        if PermutationGroup::new(11, sigma.clone()).order() != M11_ORDER {
            continue;
        }
        let mirror = PermutationGroup::new(11, vec![a.inverse(), mirror_b(b)]);
        let d = crate::mixer::diagonal_group(&PermutationGroup::new(11, sigma.clone()), &mirror);
        if d.order() != M11_ORDER * M11_ORDER {
            continue;
        }
        let r = RotationSystem::from_realization(
            Presentation::universal(3).ok()?,
            false,
            sigma.clone(),
            Some(M11_ORDER),
        )
        .ok()?;
        if r.check_intersection_property()
            .map(|c| c.holds)
            .unwrap_or(false)
        {
            return Some(sigma);
        }
    }
    None
}

fn frozen_sigma() -> Vec<Perm> {
    M11_SIGMA
        .iter()
        .map(|im| Perm::from_images(im.to_vec()))
        .collect()
}

/// The map, with a presentation derived once and checked to close at 7920.
pub fn m11_map_11_5() -> &'static RotationSystem {
    static CELL: OnceLock<RotationSystem> = OnceLock::new();
    CELL.get_or_init(|| {
        let sigma = frozen_sigma();
        let rels = derive_relators(&sigma, M11_ORDER as usize);
        let pres = Presentation::new(3, rels).expect("derived relators are valid");
        assert_eq!(
            todd_coxeter(&pres.to_fp(), &[], 1_000_000).index(),
            Some(M11_ORDER as usize)
        );
        RotationSystem::from_realization(pres, true, sigma, Some(M11_ORDER))
            .expect("derived relators hold")
    })
}
