use std::collections::HashSet;

use chiralmix::catalog::{s6_polytope_3443, toroid36, toroid44, universal};
use chiralmix::fp::DEFAULT_BUDGET;
use chiralmix::mixer::{
    chirality_group, chirality_subgroup, comix, maximal_regular_quotient, minimal_regular_cover,
    mix, verify_product_formula, ChiralityOrder,
};
use chiralmix::perm::Perm;
use chiralmix::rotation::RotationSystem;

const B: usize = DEFAULT_BUDGET;

/// Order of the subgroup of Γ(a) × Γ(b) generated by the pairs
/// `(s_i, s'_i)`, by closing the pairs under multiplication.
fn diagonal_order(a: &RotationSystem, b: &RotationSystem) -> u64 {
    let (sa, sb) = (a.sigmas().unwrap(), b.sigmas().unwrap());
    let id = (
        Perm::identity(a.degree().unwrap()),
        Perm::identity(b.degree().unwrap()),
    );
    let mut seen = HashSet::from([id.clone()]);
    let mut todo = vec![id];
    while let Some((x, y)) = todo.pop() {
        for (s, t) in sa.iter().zip(sb) {
            let next = (x.mul(s), y.mul(t));
            if seen.insert(next.clone()) {
                todo.push(next);
            }
        }
    }
    seen.len() as u64
}

#[test]
fn mix_orders() {
    let p = s6_polytope_3443();
    let q = universal(&[2, 3, 3, 2], B).unwrap();
    assert_eq!(mix(p, &q).unwrap().system.order(), Some(34560));
    let a = toroid44(1, 2, B).unwrap();
    let b = toroid44(2, 1, B).unwrap();
    let m = mix(&a, &b).unwrap().system;
    assert_eq!(m.order(), Some(100));
    assert_eq!(diagonal_order(&a, &b), 100);
    assert_eq!(m.schlafli().unwrap(), [4, 4]);
}

#[test]
fn comix_orders() {
    let p = s6_polytope_3443();
    let q = universal(&[2, 3, 3, 3], B).unwrap();
    assert_eq!(comix(p, &q, B).unwrap().order(), Some(1));
    let a = toroid44(1, 2, B).unwrap();
    let b = toroid44(2, 1, B).unwrap();
    assert_eq!(comix(&a, &b, B).unwrap().order(), Some(4));
}

#[test]
fn product_formula_against_brute_force() {
    let sys = [
        toroid44(1, 2, B).unwrap(),
        toroid44(2, 1, B).unwrap(),
        toroid44(2, 0, B).unwrap(),
        toroid44(1, 3, B).unwrap(),
        toroid36(1, 1, B).unwrap(),
        toroid36(1, 2, B).unwrap(),
        universal(&[3, 3], B).unwrap(),
        universal(&[4, 3], B).unwrap(),
    ];
    for a in &sys {
        for b in &sys {
            let pf = verify_product_formula(a, b, B).unwrap();
            assert!(pf.holds());
            assert_eq!(pf.mix, diagonal_order(a, b));
        }
    }
}

#[test]
fn mix_covers_factors_and_commutes() {
    let a = toroid44(1, 2, B).unwrap();
    let b = toroid44(1, 3, B).unwrap();
    let ab = mix(&a, &b).unwrap();
    let ba = mix(&b, &a).unwrap().system;
    let m = &ab.system;
    assert!(m.covers(&a).unwrap() && m.covers(&b).unwrap());
    assert!(m.covers(&ba).unwrap() && ba.covers(m).unwrap());
    for (i, s) in m.sigmas().unwrap().iter().enumerate() {
        assert_eq!(&ab.project_left(s), a.sigma(i + 1).unwrap());
        assert_eq!(&ab.project_right(s), b.sigma(i + 1).unwrap());
    }
    let c = comix(&a, &b, B).unwrap();
    assert!(a.covers(&c).unwrap() && b.covers(&c).unwrap());
}

#[test]
fn chirality_groups() {
    let p = s6_polytope_3443();
    let x = chirality_subgroup(p, B).unwrap();
    assert_eq!(x.order(), 360);
    assert!(x.is_normal_in(p.group().unwrap()));
    let c = chirality_group(p, B).unwrap();
    assert_eq!(c.order, ChiralityOrder::Finite(360));
    assert_eq!(c.quotient_order, Some(2));
    assert_eq!(c.simple, Some(true));
    let t = chirality_group(&toroid44(1, 2, B).unwrap(), B).unwrap();
    assert_eq!(t.order, ChiralityOrder::Finite(5));
    assert_eq!(t.abelian_invariants, Some(vec![5]));
    let r = chirality_group(&toroid44(2, 0, B).unwrap(), B).unwrap();
    assert_eq!(r.order, ChiralityOrder::Finite(1));
}

#[test]
fn regular_cover_and_quotient() {
    let p = s6_polytope_3443();
    let cover = minimal_regular_cover(p).unwrap();
    assert_eq!(cover.order(), Some(259_200));
    assert!(cover.is_directly_regular().unwrap());
    assert!(cover.covers(p).unwrap());
    let quotient = maximal_regular_quotient(p, B).unwrap();
    assert_eq!(quotient.order(), Some(2));
    assert!(p.covers(&quotient).unwrap());
    // |cover| · |quotient| = |P| · |P̄|
    assert_eq!(cover.order().unwrap() * 2, 720 * 720);
}
