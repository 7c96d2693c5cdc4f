//! The chiral polytope of type {3,4,4,3} with rotation group S6.
//!
//! The generators below were found by [`search_s6_3443`] and the relators
//! by [`derive_relators`]; tests rerun both and compare.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::fp::{todd_coxeter, Presentation, Word};
use crate::mixer::diagonal_group;
use crate::perm::{Perm, PermutationGroup};
use crate::rotation::RotationSystem;

/// Images of `s1..s4` on six points.
pub const S6_SIGMA: [[u32; 6]; 4] = [
    [0, 1, 2, 4, 5, 3],
    [0, 1, 3, 5, 2, 4],
    [0, 2, 4, 1, 3, 5],
    [1, 2, 0, 5, 3, 4],
];

/// Defining relators besides the string relations, as signed generator lists.
pub const S6_RELATORS: &[&[i32]] = &[
    &[1, 1, 1],
    &[2, 2, 2, 2],
    &[3, 3, 3, 3],
    &[4, 4, 4],
    &[-4, -2, 3, -2, 4, -2],
];

const TYPE: [u64; 4] = [3, 4, 4, 3];

fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..n as u32).collect();
    // lexicographic order by image list
    loop {
        out.push(Perm::from_images(cur.clone()));
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn involution(p: &Perm) -> bool {
    p.mul(p).is_identity()
}

/// Deterministic backtracking over S6 in lexicographic order for
/// `(s1, s2, s3, s4)` with orders `(3,4,4,3)` and all string relations,
/// generating S6, chiral with chirality group of order 360, and satisfying
/// the intersection property. The first hit is returned.
pub fn search_s6_3443() -> Option<Vec<Perm>> {
    let elems = all_perms(6);
    let of_order = |k: u64| {
        elems
            .iter()
            .filter(move |p| p.order() == k)
            .cloned()
            .collect::<Vec<_>>()
    };
    let (o3, o4) = (of_order(3), of_order(4));
    for a in &o3 {
        for b in &o4 {
            let ab = a.mul(b);
            if !involution(&ab) {
                continue;
            }
            for c in &o4 {
                let bc = b.mul(c);
                let abc = ab.mul(c);
                if !involution(&bc) || !involution(&abc) {
                    continue;
                }
                for d in &o3 {
                    if !involution(&c.mul(d)) || !involution(&bc.mul(d)) || !involution(&abc.mul(d))
                    {
                        continue;
                    }
                    let sigma = vec![a.clone(), b.clone(), c.clone(), d.clone()];
                    if accept(&sigma) {
                        return Some(sigma);
                    }
                }
            }
        }
    }
    None
}

fn accept(sigma: &[Perm]) -> bool {
    let g = PermutationGroup::new(6, sigma.to_vec());
    if g.order() != 720 {
        return false;
    }
    let mut mirror = sigma.to_vec();
    mirror[0] = sigma[0].inverse();
    mirror[1] = sigma[0].mul(&sigma[0]).mul(&sigma[1]);
    // |R ⋄ R̄| = |R| |X(R)|
    if diagonal_group(&g, &PermutationGroup::new(6, mirror)).order() != 720 * 360 {
        return false;
    }
    let Ok(pres) = Presentation::universal(5) else {
        return false;
    };
    let Ok(r) = RotationSystem::from_realization(pres, false, sigma.to_vec(), Some(720)) else {
        return false;
    };
    r.check_intersection_property()
        .map(|c| c.holds)
        .unwrap_or(false)
}

/// Relators presenting the group generated by `sigma` (finite, of order
/// `order`): type relators first, then Cayley-graph cycle relators in
/// order of length, added in small batches until enumeration closes at
/// `order`. Relators that fail in an enumeration closing too large are
/// preferred.
pub fn derive_relators(sigma: &[Perm], order: usize) -> Vec<Word> {
    let rank = sigma.len() + 1;
    let degree = sigma[0].degree();
    let mut rels: Vec<Word> = sigma
        .iter()
        .enumerate()
        .map(|(i, s)| Word::gen(i as u32 + 1).pow(s.order() as i64))
        .collect();
    // spanning tree by breadth-first search
    let mut word_of: HashMap<Perm, Word> = HashMap::new();
    let mut queue = vec![Perm::identity(degree)];
    word_of.insert(queue[0].clone(), Word::identity());
    let mut k = 0;
    let letters: Vec<i32> = (1..rank as i32).flat_map(|g| [g, -g]).collect();
    let step = |p: &Perm, l: i32| {
        let s = &sigma[l.unsigned_abs() as usize - 1];
        if l > 0 {
            p.mul(s)
        } else {
            p.mul(&s.inverse())
        }
    };
    while k < queue.len() {
        let p = queue[k].clone();
        for &l in &letters {
            let q = step(&p, l);
            if !word_of.contains_key(&q) {
                let w = word_of[&p].mul(&Word::from_signed(&[l]));
                word_of.insert(q.clone(), w);
                queue.push(q);
            }
        }
        k += 1;
    }
    let mut candidates: Vec<Word> = Vec::new();
    for p in &queue {
        for g in 1..rank as i32 {
            let q = step(p, g);
            let w = word_of[p]
                .mul(&Word::gen(g as u32))
                .mul(&word_of[&q].inverse())
                .cyclically_reduced();
            if !w.is_empty() && !candidates.contains(&w) && !candidates.contains(&w.inverse()) {
                candidates.push(w);
            }
        }
    }
    candidates.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.letters().cmp(b.letters()))
    });
    let mut next = 0;
    loop {
        let pres = Presentation::new(rank, rels.clone()).expect("valid relators");
        let table = todd_coxeter(&pres.to_fp(), &[], 200_000);
        match table.index() {
            Some(n) if n == order => return prune(rank, rels, order),
            Some(_) => {
                let failing: Vec<Word> = candidates
                    .iter()
                    .filter(|w| table.trace(0, w) != Some(0))
                    .take(2)
                    .cloned()
                    .collect();
                assert!(
                    !failing.is_empty(),
                    "presentation too large yet all candidates hold"
                );
                rels.extend(failing);
            }
            None => {
                let batch: Vec<Word> = candidates[next..]
                    .iter()
                    .filter(|w| !rels.contains(w))
                    .take(4)
                    .cloned()
                    .collect();
                assert!(!batch.is_empty(), "ran out of candidate relators");
                next += batch.len();
                rels.extend(batch);
            }
        }
    }
}

/// Drop relators, last first, whose removal keeps the enumeration at
/// `order`. The type relators are kept.
fn prune(rank: usize, mut rels: Vec<Word>, order: usize) -> Vec<Word> {
    let mut i = rels.len();
    while i > rank - 1 {
        i -= 1;
        let mut trial = rels.clone();
        trial.remove(i);
        let pres = Presentation::new(rank, trial.clone()).expect("valid relators");
        if todd_coxeter(&pres.to_fp(), &[], 200_000).index() == Some(order) {
            rels = trial;
        }
    }
    rels
}

fn frozen_sigma() -> Vec<Perm> {
    S6_SIGMA
        .iter()
        .map(|im| Perm::from_images(im.to_vec()))
        .collect()
}

fn frozen_relators() -> Vec<Word> {
    S6_RELATORS.iter().map(|r| Word::from_signed(r)).collect()
}

/// The polytope, built once from the frozen generators and relators. The
/// presentation is checked to close at 720 before use.
pub fn s6_polytope_3443() -> &'static RotationSystem {
    static CELL: OnceLock<RotationSystem> = OnceLock::new();
    CELL.get_or_init(|| {
        let pres = Presentation::new(5, frozen_relators()).expect("frozen relators are valid");
        let index = todd_coxeter(&pres.to_fp(), &[], 1_000_000).index();
        assert_eq!(
            index,
            Some(720),
            "frozen presentation does not close at 720"
        );
        let sigma = frozen_sigma();
        assert_eq!(PermutationGroup::new(6, sigma.clone()).order(), 720);
        let r = RotationSystem::from_realization(pres, true, sigma, Some(720))
            .expect("frozen relators hold");
        debug_assert_eq!(r.schlafli().unwrap(), TYPE);
        r
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_data_is_reproduced() {
        let found = search_s6_3443().expect("search succeeds");
        assert_eq!(found, frozen_sigma());
        assert_eq!(derive_relators(&found, 720), frozen_relators());
    }

    #[test]
    fn polytope_basics() {
        let r = s6_polytope_3443();
        assert_eq!(r.order(), Some(720));
        assert_eq!(r.schlafli().unwrap(), TYPE);
        assert!(!r.is_directly_regular().unwrap());
    }

    #[test]
    fn lex_enumeration_of_s6() {
        let e = all_perms(6);
        assert_eq!(e.len(), 720);
        assert!(e.windows(2).all(|w| w[0] < w[1]));
    }
}
