use std::collections::HashSet;

use proptest::prelude::*;

use chiralmix::catalog::{s6_polytope_3443, toroid44};
use chiralmix::fp::{
    abelian_invariants, enantiomorph_word, free_reduce, todd_coxeter, todd_coxeter_with,
    Presentation, Strategy as Enumeration, Word, DEFAULT_BUDGET,
};
use chiralmix::perm::{intersection_by_backtrack, intersection_by_cosets, Perm, PermutationGroup};

fn typed(ps: &[i64]) -> Presentation {
    let rels = ps
        .iter()
        .enumerate()
        .map(|(i, &p)| Word::gen(i as u32 + 1).pow(p));
    Presentation::new(ps.len() + 1, rels).unwrap()
}

fn group_of(pres: &Presentation) -> PermutationGroup {
    let t = todd_coxeter(&pres.to_fp(), &[], DEFAULT_BUDGET);
    let n = t.index().unwrap();
    let gens = (1..=pres.ngens() as u32)
        .map(|g| Perm::from_images(t.action(g)))
        .collect();
    PermutationGroup::new(n, gens)
}

/// Closure of the generators by breadth-first multiplication.
fn brute_elements(g: &PermutationGroup) -> HashSet<Perm> {
    let mut seen = HashSet::from([Perm::identity(g.degree())]);
    let mut frontier: Vec<Perm> = seen.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for s in g.generators() {
            let y = x.mul(s);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

#[test]
fn words_reduce_and_mirror() {
    let w = Word::from_signed(&[1, 2, -2, -1, 3]);
    assert_eq!(free_reduce(&w), Word::gen(3));
    assert_eq!(enantiomorph_word(&Word::gen(1)), Word::gen(1).inverse());
    assert_eq!(enantiomorph_word(&Word::gen(3)), Word::gen(3));
    assert_eq!(
        enantiomorph_word(&Word::gen(2)),
        Word::from_signed(&[1, 1, 2])
    );
    assert_eq!(
        enantiomorph_word(&Word::gen(2).inverse()),
        Word::from_signed(&[-2, -1, -1])
    );
}

#[test]
fn enumeration_orders() {
    for (ps, order) in [
        (&[3, 3][..], 12),
        (&[3, 4], 24),
        (&[3, 5], 60),
        (&[2, 3, 3, 2], 48),
        (&[3, 3, 3], 60),
    ] {
        let p = typed(ps);
        let hlt = todd_coxeter(&p.to_fp(), &[], DEFAULT_BUDGET).index();
        let rev =
            todd_coxeter_with(&p.to_fp(), &[], DEFAULT_BUDGET, Enumeration::HltReversed).index();
        assert_eq!(hlt, Some(order), "{ps:?}");
        assert_eq!(rev, Some(order), "{ps:?}");
    }
    let t = todd_coxeter(&typed(&[4, 4]).to_fp(), &[], 50_000);
    assert!(!t.is_complete());
}

#[test]
fn coset_table_is_a_consistent_action() {
    let p = typed(&[3, 4]);
    let fp = p.to_fp();
    let t = todd_coxeter(&fp, &[], DEFAULT_BUDGET);
    for c in 0..t.index().unwrap() {
        for r in &fp.relators {
            assert_eq!(t.trace(c, r), Some(c));
        }
    }
    assert_eq!(brute_elements(&group_of(&p)).len(), 24);
}

#[test]
fn abelian_invariants_match_brute_force() {
    // the rank-3 group with s1^3 = s2^3 = 1 is A4, whose abelianization is C3
    let p = typed(&[3, 3]);
    assert_eq!(abelian_invariants(&p), vec![3]);
    let g = group_of(&p);
    let derived = brute_elements(&g.derived_subgroup()).len() as u64;
    assert_eq!(g.order() / derived, 3);
    assert_eq!(g.abelian_invariants(1_000_000).unwrap(), vec![3]);
    // {3,5}: A5 is perfect
    assert_eq!(abelian_invariants(&typed(&[3, 5])), Vec::<u64>::new());
    // {4,4}: relation rows (4,0), (0,4), (2,2) have Smith form diag(2,4)
    assert_eq!(abelian_invariants(&typed(&[4, 4])), vec![2, 4]);
}

#[test]
fn symmetric_and_alternating() {
    let s6 = PermutationGroup::symmetric(6);
    let a6 = PermutationGroup::alternating(6);
    assert_eq!(s6.order(), 720);
    assert_eq!(a6.order(), 360);
    assert!(a6.is_normal_in(&s6));
    assert!(a6.is_simple(1_000_000).unwrap());
    assert!(!s6.is_simple(1_000_000).unwrap());
    let c5 = PermutationGroup::new(5, vec![Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]])]);
    assert!(c5.is_simple(1_000_000).unwrap());
    assert!(!PermutationGroup::alternating(4)
        .is_simple(1_000_000)
        .unwrap());
}

#[test]
fn normal_closures_in_s6() {
    let s6 = PermutationGroup::symmetric(6);
    let three = Perm::from_cycles(6, &[&[0, 1, 2]]);
    let swap = Perm::from_cycles(6, &[&[0, 1]]);
    assert_eq!(s6.normal_closure(&[three]).order(), 360);
    assert_eq!(s6.normal_closure(&[swap]).order(), 720);
    let double = Perm::from_cycles(4, &[&[0, 1], &[2, 3]]);
    assert_eq!(
        PermutationGroup::symmetric(4)
            .normal_closure(&[double])
            .order(),
        4
    );
}

#[test]
fn kernels_of_mirror_relators() {
    let p = s6_polytope_3443();
    let images: Vec<Perm> = p
        .presentation()
        .enantiomorph()
        .relators()
        .iter()
        .map(|r| p.eval(r).unwrap())
        .collect();
    assert_eq!(
        p.group().unwrap().kernel(&images, None).unwrap().order(),
        360
    );
    let t = toroid44(1, 2, DEFAULT_BUDGET).unwrap();
    let images: Vec<Perm> = t
        .presentation()
        .enantiomorph()
        .relators()
        .iter()
        .map(|r| t.eval(r).unwrap())
        .collect();
    assert_eq!(t.group().unwrap().kernel(&images, None).unwrap().order(), 5);
}

#[test]
fn intersection_of_facet_and_vertex_subgroups() {
    // ⟨σ1,σ2,σ3⟩ ∩ ⟨σ2,σ3,σ4⟩ in the rotation group of {3,4,4,3} with group S6
    let p = s6_polytope_3443();
    let s = p.sigmas().unwrap();
    let a = PermutationGroup::new(p.degree().unwrap(), s[0..3].to_vec());
    let b = PermutationGroup::new(p.degree().unwrap(), s[1..4].to_vec());
    let ea = brute_elements(&a);
    let eb = brute_elements(&b);
    let direct = ea.intersection(&eb).count() as u64;
    assert_eq!(a.intersection(&b).unwrap().order(), direct);
    assert_eq!(intersection_by_backtrack(&a, &b).unwrap().order(), direct);
    assert_eq!(
        intersection_by_cosets(&a, &b, 100_000).unwrap().order(),
        direct
    );
    let c = PermutationGroup::new(p.degree().unwrap(), s[1..3].to_vec());
    assert_eq!(c.order(), direct);
}

fn arb_perm(n: usize) -> impl proptest::strategy::Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(Perm::from_images)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn free_reduction_is_idempotent(letters in prop::collection::vec(prop_oneof![-3i32..=-1, 1i32..=3], 0..30)) {
        let w = free_reduce(&Word::from_signed(&letters));
        prop_assert_eq!(free_reduce(&w), w.clone());
        prop_assert!(w.mul(&w.inverse()).is_empty());
    }

    #[test]
    fn intersections_agree(a in prop::collection::vec(arb_perm(7), 1..3), b in prop::collection::vec(arb_perm(7), 1..3)) {
        let (ga, gb) = (PermutationGroup::new(7, a), PermutationGroup::new(7, b));
        let x = intersection_by_backtrack(&ga, &gb).unwrap();
        prop_assert!(x.is_subgroup_of(&ga) && x.is_subgroup_of(&gb));
        prop_assert_eq!(ga.order() % x.order(), 0);
        if let Some(y) = intersection_by_cosets(&ga, &gb, 10_000) {
            prop_assert!(x.equals(&y));
        }
        if ga.order() <= 720 && gb.order() <= 720 {
            let (ea, eb) = (brute_elements(&ga), brute_elements(&gb));
            prop_assert_eq!(x.order(), ea.intersection(&eb).count() as u64);
        }
    }
}
