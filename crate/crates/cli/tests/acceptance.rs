//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use chiralmix::catalog::{
    cubic_toroid, cubic_toroid_full_order, cubic_toroid_reflection_order, m11_map_11_5,
    s6_polytope_3443, search_s6_3443, simplex, toroid44, universal, FamilySpec, S6_SIGMA,
};
use chiralmix::criteria::{
    criterion_chirality_divisibility, criterion_coprime, criterion_simple_chirality,
    extension_chirality_hypothesis, pseudo_extension_setup, regular_mix_equivalence, toroid_mixing,
    Conclusion, Theorem,
};
use chiralmix::fp::{enantiomorph_word, Word, DEFAULT_BUDGET};
use chiralmix::mixer::{
    chirality_group, chirality_subgroup, comix, mix, verify_product_formula, ChiralityOrder,
};
use chiralmix::perm::{is_prime, PermutationGroup, DEFAULT_SIMPLICITY_BOUND};
use chiralmix::rotation::{IntersectionMethod, RotationSystem};
use chiralmix_cli::sample::{build_all, product_formula_sample};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn budget() -> usize {
    std::env::var("CHIRALMIX_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn e<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn x_order(r: &RotationSystem) -> std::result::Result<u64, String> {
    match e(chirality_group(r, budget()))?.order {
        ChiralityOrder::Finite(n) => Ok(n),
        other => Err(format!("chirality group order {other:?}")),
    }
}

fn simple(g: &PermutationGroup) -> bool {
    g.is_simple(DEFAULT_SIMPLICITY_BOUND).unwrap_or(false)
}

fn catalog_ground_truth() -> Check {
    let q = e(universal(&[2, 3, 3, 2], budget()))?;
    ensure!(q.order() == Some(48), "|Γ+({{2,3,3,2}})| = {:?}", q.order());
    let s = e(simplex(4, budget()))?;
    ensure!(s.order() == Some(60), "|Γ+(simplex(4))| = {:?}", s.order());
    ensure!(simple(e(s.group())?), "A5 reported not simple");
    Ok(())
}

fn s6_polytope() -> Check {
    let found = search_s6_3443().ok_or("search found nothing")?;
    let frozen: Vec<_> = S6_SIGMA
        .iter()
        .map(|im| chiralmix::perm::Perm::from_images(im.to_vec()))
        .collect();
    ensure!(
        found == frozen,
        "search result differs from the frozen generators"
    );
    let p = s6_polytope_3443();
    ensure!(p.order() == Some(720), "order {:?}", p.order());
    ensure!(e(p.schlafli())? == [3, 4, 4, 3], "type {:?}", p.schlafli());
    ensure!(!e(p.is_directly_regular())?, "not chiral");
    let x = e(chirality_subgroup(p, budget()))?;
    ensure!(x.order() == 360, "|X| = {}", x.order());
    ensure!(simple(&x), "X not simple");
    Ok(())
}

fn mix_with_2332() -> Check {
    let p = s6_polytope_3443();
    let q = e(universal(&[2, 3, 3, 2], budget()))?;
    let m = e(mix(p, &q))?.system;
    let f = e(m.face_data(false))?;
    ensure!(f.schlafli == [6, 12, 12, 6], "type {:?}", f.schlafli);
    ensure!(
        f.face_vector == [12, 120, 480, 120, 12],
        "faces {:?}",
        f.face_vector
    );
    ensure!(f.flags == 69120, "flags {}", f.flags);
    let c = e(criterion_coprime(p, &q))?;
    ensure!(
        c.conclusion == Conclusion::Polytopal && c.theorem == Theorem::CoprimeTypes,
        "coprime: {c}"
    );
    let c = e(criterion_chirality_divisibility(p, &q, budget()))?;
    ensure!(c.conclusion == Conclusion::Chiral, "divisibility: {c}");
    ensure!(!e(m.is_directly_regular())?, "mix is directly regular");
    let x = e(chirality_subgroup(&m, budget()))?;
    ensure!(
        x.order() == 360 && simple(&x),
        "X(mix) order {} simple {}",
        x.order(),
        simple(&x)
    );
    let c = e(criterion_simple_chirality(p, &q, budget()))?;
    ensure!(
        matches!(
            c.conclusion,
            Conclusion::ChiralityGroupEquals {
                order: 360,
                simple: true,
                ..
            }
        ),
        "simple chirality: {c}"
    );
    Ok(())
}

fn mix_with_2333() -> Check {
    let p = s6_polytope_3443();
    let q = e(universal(&[2, 3, 3, 3], budget()))?;
    ensure!(
        q.order() == Some(120),
        "|Γ+({{2,3,3,3}})| = {:?}",
        q.order()
    );
    let m = e(mix(p, &q))?.system;
    let f = e(m.face_data(false))?;
    ensure!(f.schlafli == [6, 12, 12, 3], "type {:?}", f.schlafli);
    ensure!(
        f.face_vector == [12, 150, 2400, 300, 30],
        "faces {:?}",
        f.face_vector
    );
    let order = m.order().ok_or("mix order unknown")?;
    ensure!(f.flags == 2 * order, "flags {} vs order {order}", f.flags);
    let pf = e(verify_product_formula(p, &q, budget()))?;
    ensure!(pf.holds(), "product formula {pf:?}");
    // trivial comix forces |mix| = 720·120
    let c = e(comix(p, &q, budget()))?;
    ensure!(c.order() == Some(1), "comix order {:?}", c.order());
    let expected = 2 * 720 * 120;
    ensure!(
        f.flags == expected,
        "flags {} but the trivial comix gives {expected}",
        f.flags
    );
    let c = e(criterion_coprime(p, &q))?;
    ensure!(
        c.conclusion == Conclusion::Polytopal && c.theorem == Theorem::CoprimeMiddleTypes,
        "coprime: {c}"
    );
    if f.flags != 1_728_000 {
        println!("    discrepancy: reference flag count 1728000, computed {} = 2·|Γ+(mix)|; |mix| ≤ 720·120 rules out the reference value (suspected typo)", f.flags);
    }
    Ok(())
}

fn toroid_chirality_groups() -> Check {
    for (b, c) in [(1u32, 2u32), (2, 3), (1, 4)] {
        let r = e(toroid44(b, c, budget()))?;
        let p = (b * b + c * c) as u64;
        let rep = e(chirality_group(&r, budget()))?;
        ensure!(
            rep.order == ChiralityOrder::Finite(p),
            "X({b},{c}) order {:?}",
            rep.order
        );
        ensure!(
            rep.abelian_invariants.as_deref() == Some(&[p][..]),
            "X({b},{c}) invariants {:?}",
            rep.abelian_invariants
        );
    }
    for b in 0..=10u32 {
        for c in 0..=10u32 {
            if (b, c) == (0, 0) || b * b + c * c > 100 {
                continue;
            }
            let r = e(toroid44(b, c, budget()))?;
            ensure!(
                r.order() == Some(4 * (b * b + c * c) as u64),
                "toroid44({b},{c}) order {:?}",
                r.order()
            );
            let chiral = b != 0 && c != 0 && b != c;
            ensure!(
                e(r.is_directly_regular())? != chiral,
                "toroid44({b},{c}) regularity"
            );
        }
    }
    Ok(())
}

fn cubic_toroid_orders() -> Check {
    for (n, s, k) in [(4u32, 2u32, 1u32), (4, 3, 1), (4, 2, 3), (5, 2, 1)] {
        let formula = cubic_toroid_full_order(n, s as u64, k);
        let full = cubic_toroid_reflection_order(n, s, k, budget())
            .ok_or("reflection enumeration ran out")?;
        ensure!(
            full == formula,
            "({n},{s},{k}): full group {full}, formula {formula}"
        );
        let r = e(cubic_toroid(n, s, k, budget()))?;
        ensure!(
            e(r.is_directly_regular())?,
            "({n},{s},{k}) not directly regular"
        );
        ensure!(
            r.order() == Some(formula / 2),
            "({n},{s},{k}): rotation order {:?}",
            r.order()
        );
    }
    println!(
        "    note: the formula is the order of the full group; the rotation subgroup has index 2"
    );
    Ok(())
}

fn product_formula() -> Check {
    let sample = e(product_formula_sample(budget()))?;
    let mut pairs = 0;
    for i in 0..sample.len() {
        for j in i + 1..sample.len() {
            let pf = e(verify_product_formula(&sample[i].1, &sample[j].1, budget()))?;
            ensure!(pf.holds(), "{} / {}: {pf:?}", sample[i].0, sample[j].0);
            pairs += 1;
        }
    }
    ensure!(pairs == 66, "{pairs} pairs");
    Ok(())
}

const CATALOG: [&str; 24] = [
    "toroid44(1,0)",
    "toroid44(1,1)",
    "toroid44(1,2)",
    "toroid44(2,3)",
    "toroid44(3,0)",
    "toroid36(1,1)",
    "toroid36(1,2)",
    "toroid63(2,1)",
    "toroid63(1,3)",
    "universal(3,3)",
    "universal(3,5)",
    "universal(2,3,3,2)",
    "universal(2,3,3,3)",
    "universal(3,4,3)",
    "simplex(4)",
    "cubic_toroid(4,2,1)",
    "cubic_toroid(4,2,2)",
    "cubic_toroid(4,2,3)",
    "cubic_toroid(3,3,2)",
    "trivial_extension(universal(3,3))",
    "trivial_extension(toroid44(1,1))",
    "trivial_extension(toroid44(2,0))",
    "s6_3443",
    "m11_11_5",
];

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn property_suites() -> Check {
    // mirror image is an involution on words and on realizations
    let words = prop::collection::vec((1i32..=4, any::<bool>()), 0..40).prop_map(|v| {
        Word::from_signed(
            &v.iter()
                .map(|&(g, inv)| if inv { -g } else { g })
                .collect::<Vec<_>>(),
        )
    });
    e(runner(1000).run(&words, |w| {
        prop_assert_eq!(enantiomorph_word(&enantiomorph_word(&w)), w);
        Ok(())
    }))?;
    let p = s6_polytope_3443();
    let twice = p.enantiomorph().enantiomorph();
    ensure!(
        e(twice.sigmas())? == e(p.sigmas())?,
        "enantiomorph twice moved the generators"
    );

    // X trivial iff directly regular
    let catalog = e(build_all(&CATALOG, budget()))?;
    for (name, r) in &catalog {
        let dr = e(r.is_directly_regular())?;
        ensure!(
            (x_order(r)? == 1) == dr,
            "{name}: X trivial vs directly regular disagree"
        );
    }

    // directly regular mix iff it covers both minimal regular covers
    let sample = e(product_formula_sample(budget()))?;
    let mut pairs = Vec::new();
    for i in 0..sample.len() {
        for j in i..sample.len() {
            pairs.push((i, j));
        }
    }
    let chosen: Vec<_> = pairs.iter().step_by(pairs.len() / 20).take(20).collect();
    ensure!(chosen.len() == 20, "{} pairs", chosen.len());
    for &&(i, j) in &chosen {
        e(regular_mix_equivalence(&sample[i].1, &sample[j].1))?;
    }
    let (a, b) = (e(toroid44(1, 2, budget()))?, e(toroid44(2, 1, budget()))?);
    ensure!(
        e(regular_mix_equivalence(&a, &b))? == (true, true),
        "{{4,4}}_(1,2) ⋄ {{4,4}}_(2,1) not regular"
    );
    ensure!(
        e(mix(&a, &b))?.system.order() == Some(100),
        "{{4,4}}_(1,2) ⋄ {{4,4}}_(2,1) order"
    );

    // X(R1 ⋄ R2) projects onto a normal subgroup of X(R1) of dividing order
    let chiral_regular = [
        ("toroid44(1,2)", "toroid44(1,1)"),
        ("toroid44(1,2)", "universal(3,4)"),
        ("toroid44(1,3)", "toroid44(2,0)"),
        ("toroid36(1,2)", "universal(3,3)"),
        ("s6_3443", "universal(2,3,3,2)"),
    ];
    for (l, r) in chiral_regular {
        let p: RotationSystem = e(e(l.parse::<FamilySpec>())?.build(budget()))?;
        let q: RotationSystem = e(e(r.parse::<FamilySpec>())?.build(budget()))?;
        ensure!(
            !e(p.is_directly_regular())? && e(q.is_directly_regular())?,
            "{l} / {r} roles"
        );
        let xp = e(chirality_subgroup(&p, budget()))?;
        let m = e(mix(&p, &q))?;
        let xm = e(chirality_subgroup(&m.system, budget()))?;
        ensure!(
            xp.order() % xm.order() == 0,
            "{l} ⋄ {r}: {} ∤ {}",
            xm.order(),
            xp.order()
        );
        let proj = PermutationGroup::new(
            xp.degree(),
            xm.generators().iter().map(|g| m.project_left(g)).collect(),
        );
        ensure!(proj.is_subgroup_of(&xp), "{l} ⋄ {r}: projection leaves X");
        ensure!(proj.is_normal_in(&xp), "{l} ⋄ {r}: projection not normal");
    }

    // intersection property: exhaustive and inductive tests agree in rank 4
    // trivial_extension(toroid44(1,1)) is the one non-polytopal entry
    let mut rank4: Vec<(String, RotationSystem)> = catalog
        .iter()
        .filter(|(_, r)| r.rank() == 4)
        .cloned()
        .collect();
    rank4.push(("s6 facets".into(), e(p.facets())?));
    rank4.push(("s6 vertex figures".into(), e(p.vertex_figures())?));
    let mut polytopal = 0;
    for (name, r) in &rank4 {
        let ex = e(r.check_intersection_property_with(IntersectionMethod::Exhaustive))?;
        let ind = e(r.check_intersection_property_with(IntersectionMethod::Inductive))?;
        ensure!(
            ex.holds == ind.holds,
            "{name}: exhaustive {} inductive {}",
            ex.holds,
            ind.holds
        );
        polytopal += usize::from(ex.holds);
    }
    ensure!(
        polytopal + 1 == rank4.len(),
        "{polytopal} of {} rank-4 entries polytopal",
        rank4.len()
    );

    // mixing is associative and commutative on orders
    let n = sample.len();
    for i in 0..10 {
        let (a, b, c) = (&sample[i].1, &sample[(i + 3) % n].1, &sample[(i + 7) % n].1);
        let ab = e(mix(a, b))?.system;
        let ba = e(mix(b, a))?.system;
        ensure!(ab.order() == ba.order(), "commutativity fails at {i}");
        let left = e(mix(&ab, c))?.system.order();
        let right = e(mix(a, &e(mix(b, c))?.system))?.system.order();
        ensure!(
            left == right && left.is_some(),
            "associativity fails at {i}: {left:?} vs {right:?}"
        );
    }
    Ok(())
}

fn extension_hypotheses() -> Check {
    let k = e(toroid44(1, 2, budget()))?;
    let c = e(comix(&k, &k.enantiomorph(), budget()))?;
    ensure!(c.order() == Some(4), "comix order {:?}", c.order());
    ensure!(e(c.sigma(1))? == e(c.sigma(2))?, "s1 != s2 in the comix");
    let cert = e(extension_chirality_hypothesis(&k, budget()))?;
    ensure!(
        matches!(cert.conclusion, Conclusion::InfiniteChiralityGroup { .. }),
        "{cert}"
    );
    let reg = e(toroid44(1, 1, budget()))?;
    ensure!(
        !e(extension_chirality_hypothesis(&reg, budget()))?.fired(),
        "fired on a regular map"
    );

    let m11 = m11_map_11_5();
    ensure!(
        x_order(m11)? == m11.order().unwrap(),
        "M11 map not totally chiral"
    );
    let (q, cert) = e(pseudo_extension_setup(m11, budget()))?;
    ensure!(
        cert.fired() && cert.premises.iter().all(|p| p.holds),
        "{cert}"
    );
    ensure!(
        e(q.schlafli())?.last() == Some(&2),
        "Q type {:?}",
        q.schlafli()
    );
    ensure!(e(e(q.facets())?.covers(m11))?, "Q facets do not cover K");
    ensure!(
        pseudo_extension_setup(&k, budget()).is_err(),
        "accepted a K that is not totally chiral"
    );
    Ok(())
}

fn toroid_mixing_instance() -> Check {
    let p = s6_polytope_3443();
    let x = x_order(p)?;
    ensure!(x == 360, "|X(P)| = {x}");
    let base = cubic_toroid_full_order(5, 1, 1);
    ensure!(!base.is_multiple_of(x), "{x} divides {base}");
    let primes: Vec<u64> = (2..)
        .filter(|&s| is_prime(s) && x % s != 0)
        .take(3)
        .collect();
    ensure!(primes == [7, 11, 13], "primes {primes:?}");
    for s in primes {
        let q = e(cubic_toroid(5, s as u32, 1, budget()))?;
        let c = e(criterion_chirality_divisibility(p, &q, budget()))?;
        ensure!(c.conclusion == Conclusion::Chiral, "s = {s}: {c}");
        let t = e(toroid_mixing(p, &q, s, 1, budget()))?;
        ensure!(t.conclusion == Conclusion::Chiral, "s = {s}: {t}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("catalog ground truth", catalog_ground_truth),
        ("S6 polytope", s6_polytope),
        ("mix with {2,3,3,2}", mix_with_2332),
        ("mix with {2,3,3,3}", mix_with_2333),
        ("toroid chirality groups", toroid_chirality_groups),
        ("cubic toroid order formula", cubic_toroid_orders),
        ("product formula on 66 pairs", product_formula),
        ("property suites", property_suites),
        ("extension hypotheses", extension_hypotheses),
        ("toroid mixing instance", toroid_mixing_instance),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.1}s): {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
