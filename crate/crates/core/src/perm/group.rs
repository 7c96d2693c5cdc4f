//! Finite permutation groups and the subgroup algorithms built on them.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use super::chain::StabChain;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::fp::invariants_from_relations;

/// Largest group the exhaustive simplicity test will enumerate.
pub const DEFAULT_SIMPLICITY_BOUND: u64 = 10_000_000;
/// Largest coset orbit the coset-action intersection method will build.
pub const DEFAULT_COSET_INDEX_BOUND: usize = 100_000;

/// A permutation group given by generators. The stabilizer chain is built
/// on first use and cached.
#[derive(Debug)]
pub struct PermutationGroup {
    degree: usize,
    gens: Vec<Perm>,
    known_order: Option<u64>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermutationGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            known_order: self.known_order,
            chain,
        }
    }
}

impl PermutationGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Self {
        for g in &gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        PermutationGroup {
            degree,
            gens,
            known_order: None,
            chain: OnceLock::new(),
        }
    }

    /// A group whose order is already certified elsewhere (for example by a
    /// closed coset enumeration). The chain is then built by the randomized
    /// method and checked against that order.
    pub fn with_known_order(degree: usize, gens: Vec<Perm>, order: u64) -> Self {
        let mut g = PermutationGroup::new(degree, gens);
        g.known_order = Some(order);
        g
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup::with_known_order(degree, Vec::new(), 1)
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[&[0, 1]]));
            let cyc: Vec<u32> = (0..n as u32).collect();
            gens.push(Perm::from_cycles(n, &[&cyc]));
        }
        PermutationGroup::new(n, gens)
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (2..n as u32)
            .map(|k| Perm::from_cycles(n, &[&[0, 1, k]]))
            .collect();
        PermutationGroup::new(n, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| match self.known_order {
            Some(n) => StabChain::with_known_order(self.degree, &self.gens, &[], n)
                .expect("generators do not reach the certified order"),
            None => StabChain::build(self.degree, &self.gens, &[]),
        })
    }

    /// Chain whose base starts with `prefix`. Not cached.
    pub fn chain_with_base(&self, prefix: &[u32]) -> StabChain {
        match self
            .known_order
            .or_else(|| self.chain.get().map(|c| c.order()))
        {
            Some(n) => StabChain::with_known_order(self.degree, &self.gens, prefix, n)
                .unwrap_or_else(|| StabChain::build(self.degree, &self.gens, prefix)),
            None => StabChain::build(self.degree, &self.gens, prefix),
        }
    }

    /// Exact order. A certified order is returned without building the chain.
    pub fn order(&self) -> u64 {
        match self.known_order {
            Some(n) => n,
            None => self.chain().order(),
        }
    }

    pub fn known_order(&self) -> Option<u64> {
        self.known_order
            .or_else(|| self.chain.get().map(|c| c.order()))
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(|g| g.is_identity())
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn equals(&self, other: &PermutationGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Normal in `g` (this group must be a subgroup of `g`).
    pub fn is_normal_in(&self, g: &PermutationGroup) -> bool {
        self.gens
            .iter()
            .all(|n| g.gens.iter().all(|x| self.contains(&n.conjugate(x))))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// All elements; refuses groups above `bound`.
    pub fn elements(&self, bound: u64) -> Result<Vec<Perm>> {
        let n = self.order();
        if n > bound {
            return Err(Error::Resource(format!(
                "group of order {n} exceeds enumeration bound {bound}"
            )));
        }
        Ok(self.chain().elements())
    }

    /// Intersection, by the coset-action method when the orbit of `B` under
    /// `A` stays within `DEFAULT_COSET_INDEX_BOUND`, otherwise by backtrack.
    pub fn intersection(&self, other: &PermutationGroup) -> Result<PermutationGroup> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        match intersection_by_cosets(self, other, DEFAULT_COSET_INDEX_BOUND) {
            Some(g) => Ok(g),
            None => intersection_by_backtrack(self, other),
        }
    }

    /// Smallest normal subgroup of `self` containing `elements`.
    pub fn normal_closure(&self, elements: &[Perm]) -> PermutationGroup {
        let mut gens: Vec<Perm> = Vec::new();
        let mut chain = StabChain::trivial(self.degree);
        let mut queue: Vec<Perm> = elements
            .iter()
            .filter(|e| !e.is_identity())
            .cloned()
            .collect();
        while let Some(x) = queue.pop() {
            if chain.extend(&x) {
                for g in &self.gens {
                    queue.push(x.conjugate(g));
                }
                gens.push(x);
            }
        }
        let order = chain.order();
        let group = PermutationGroup::with_known_order(self.degree, gens, order);
        let _ = group.chain.set(chain);
        group
    }

    /// Derived subgroup.
    pub fn derived_subgroup(&self) -> PermutationGroup {
        let mut comms = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = a.inverse().mul(&b.inverse()).mul(a).mul(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Normal closure of `relator_images` in `self`, that is the kernel of
    /// the map onto the quotient those relators define. When the caller
    /// knows the quotient order independently, the index is checked.
    pub fn kernel(
        &self,
        relator_images: &[Perm],
        quotient_order: Option<u64>,
    ) -> Result<PermutationGroup> {
        let k = self.normal_closure(relator_images);
        if let Some(q) = quotient_order {
            if k.order() * q != self.order() {
                return Err(Error::Inconsistent(format!(
                    "kernel of order {} has index {} but the quotient has order {q}",
                    k.order(),
                    self.order() / k.order()
                )));
            }
        }
        Ok(k)
    }

    /// True iff the group is nonabelian simple or cyclic of prime order.
    pub fn is_simple(&self, bound: u64) -> Result<bool> {
        let n = self.order();
        if n == 1 {
            return Ok(false);
        }
        if self.is_abelian() {
            return Ok(is_prime(n));
        }
        if self.derived_subgroup().order() != n {
            return Ok(false);
        }
        if n > bound {
            return Err(Error::Resource(format!(
                "simplicity test on order {n} exceeds bound {bound}"
            )));
        }
        let elements = self.chain().elements();
        let mut covered: HashSet<Perm> = HashSet::with_capacity(elements.len());
        for x in elements {
            if x.is_identity() || covered.contains(&x) {
                continue;
            }
            // the conjugacy class of x
            let mut class = vec![x.clone()];
            covered.insert(x.clone());
            let mut k = 0;
            while k < class.len() {
                for g in &self.gens {
                    let y = class[k].conjugate(g);
                    if covered.insert(y.clone()) {
                        class.push(y);
                    }
                }
                k += 1;
            }
            if self.normal_closure(&[x]).order() != n {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Invariant factors of `self / [self, self]`.
    pub fn abelian_invariants(&self, bound: u64) -> Result<Vec<u64>> {
        let derived = self.derived_subgroup();
        let index = self.order() / derived.order();
        if index > bound {
            return Err(Error::Resource(format!(
                "abelianization of order {index} exceeds bound {bound}"
            )));
        }
        let k = self.gens.len();
        if k == 0 {
            return Ok(Vec::new());
        }
        // Breadth-first search of the abelian quotient; every non-tree edge
        // gives a relation among the generator images.
        let dchain = derived.chain();
        let mut index_of: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut reps: Vec<(Perm, Vec<i64>)> = Vec::new();
        let id = Perm::identity(self.degree);
        index_of.insert(dchain.coset_key(&id), 0);
        reps.push((id, vec![0; k]));
        let mut relations: Vec<Vec<i64>> = Vec::new();
        let mut c = 0;
        while c < reps.len() {
            for (i, g) in self.gens.iter().enumerate() {
                let h = reps[c].0.mul(g);
                let mut v = reps[c].1.clone();
                v[i] += 1;
                let key = dchain.coset_key(&h);
                match index_of.get(&key) {
                    Some(&d) => {
                        let rel: Vec<i64> = v.iter().zip(&reps[d].1).map(|(a, b)| a - b).collect();
                        if rel.iter().any(|&x| x != 0) {
                            relations.push(rel);
                        }
                    }
                    None => {
                        index_of.insert(key, reps.len());
                        reps.push((h, v));
                    }
                }
            }
            c += 1;
        }
        debug_assert_eq!(reps.len() as u64, index);
        Ok(invariants_from_relations(&relations, k))
    }

    /// Images of the generators restricted to an invariant block of points.
    pub fn restrict(&self, offset: usize, len: usize) -> PermutationGroup {
        PermutationGroup::new(
            len,
            self.gens.iter().map(|g| g.restrict(offset, len)).collect(),
        )
    }
}

/// `A ∩ B` as the stabilizer in `A` of the coset `B` under right
/// multiplication. `None` when the orbit exceeds `bound`.
pub fn intersection_by_cosets(
    a: &PermutationGroup,
    b: &PermutationGroup,
    bound: usize,
) -> Option<PermutationGroup> {
    let degree = a.degree();
    let bchain = b.chain();
    let id = Perm::identity(degree);
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    seen.insert(bchain.coset_key(&id), 0);
    let mut reps: Vec<Perm> = vec![id];
    let mut inv_reps: Vec<Perm> = vec![Perm::identity(degree)];
    let mut schreier: Vec<Perm> = Vec::new();
    let mut c = 0;
    while c < reps.len() {
        for g in a.generators() {
            let h = reps[c].mul(g);
            let key = bchain.coset_key(&h);
            match seen.get(&key) {
                Some(&d) => {
                    let s = h.mul(&inv_reps[d]);
                    if !s.is_identity() {
                        schreier.push(s);
                    }
                }
                None => {
                    if reps.len() >= bound {
                        return None;
                    }
                    seen.insert(key, reps.len());
                    inv_reps.push(h.inverse());
                    reps.push(h);
                }
            }
        }
        c += 1;
    }
    let order = a.order() / reps.len() as u64;
    schreier.sort();
    schreier.dedup();
    Some(subgroup_of_order(degree, schreier, order))
}

fn subgroup_of_order(degree: usize, gens: Vec<Perm>, order: u64) -> PermutationGroup {
    let chain = StabChain::with_known_order(degree, &gens, &[], order)
        .unwrap_or_else(|| StabChain::build(degree, &gens, &[]));
    assert_eq!(
        chain.order(),
        order,
        "Schreier generators miss the stabilizer"
    );
    // keep only generators that enlarge the group
    let mut kept = Vec::new();
    let mut partial = StabChain::trivial(degree);
    for g in gens {
        if partial.order() == order {
            break;
        }
        if partial.extend(&g) {
            kept.push(g);
        }
    }
    let g = PermutationGroup::with_known_order(degree, kept, order);
    let _ = g.chain.set(chain);
    g
}

/// `A ∩ B` by depth-first search over the stabilizer chain of `A`, pruning
/// partial base images that no element of `B` can match.
pub fn intersection_by_backtrack(
    a: &PermutationGroup,
    b: &PermutationGroup,
) -> Result<PermutationGroup> {
    let degree = a.degree();
    let achain = a.chain();
    let base = achain.base();
    let bchain = b.chain_with_base(&base);
    let mut found = StabChain::trivial(degree);
    let mut gens = Vec::new();
    let depth = base.len();
    // stack of (level, partial product u_level ... u_1)
    let mut stack: Vec<(usize, Perm)> = vec![(0, Perm::identity(degree))];
    while let Some((lvl, q)) = stack.pop() {
        if lvl == depth {
            if !q.is_identity() && bchain.contains(&q) && found.extend(&q) {
                gens.push(q);
            }
            continue;
        }
        for u in achain.transversal(lvl).iter().rev() {
            let next = u.mul(&q);
            if partial_sift_ok(&bchain, &next, lvl + 1) {
                stack.push((lvl + 1, next));
            }
        }
    }
    let order = found.order();
    let g = PermutationGroup::with_known_order(degree, gens, order);
    let _ = g.chain.set(found);
    Ok(g)
}

/// Does some element of the chain's group agree with `g` on its first
/// `levels` base points?
fn partial_sift_ok(chain: &StabChain, g: &Perm, levels: usize) -> bool {
    let (_, stop) = chain.sift_from(g, 0);
    stop >= levels.min(chain.base().len())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(PermutationGroup::trivial(4).order(), 1);
        assert_eq!(PermutationGroup::symmetric(6).order(), 720);
        assert_eq!(PermutationGroup::alternating(6).order(), 360);
    }

    #[test]
    fn normal_closures() {
        let s6 = PermutationGroup::symmetric(6);
        assert_eq!(s6.normal_closure(&[Perm::identity(6)]).order(), 1);
        assert_eq!(
            s6.normal_closure(&[Perm::from_cycles(6, &[&[0, 1, 2]])])
                .order(),
            360
        );
        assert_eq!(
            s6.normal_closure(&[Perm::from_cycles(6, &[&[2, 4]])])
                .order(),
            720
        );
    }

    #[test]
    fn simplicity() {
        assert!(PermutationGroup::alternating(6)
            .is_simple(DEFAULT_SIMPLICITY_BOUND)
            .unwrap());
        assert!(!PermutationGroup::symmetric(6)
            .is_simple(DEFAULT_SIMPLICITY_BOUND)
            .unwrap());
        let c5 = PermutationGroup::new(5, vec![Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]])]);
        assert!(c5.is_simple(DEFAULT_SIMPLICITY_BOUND).unwrap());
        let c6 = PermutationGroup::new(6, vec![Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]])]);
        assert!(!c6.is_simple(DEFAULT_SIMPLICITY_BOUND).unwrap());
        assert!(PermutationGroup::alternating(5)
            .is_simple(DEFAULT_SIMPLICITY_BOUND)
            .unwrap());
        assert!(!PermutationGroup::alternating(4)
            .is_simple(DEFAULT_SIMPLICITY_BOUND)
            .unwrap());
    }

    #[test]
    fn intersections() {
        let s6 = PermutationGroup::symmetric(6);
        assert_eq!(s6.intersection(&s6).unwrap().order(), 720);
        let a = PermutationGroup::new(6, vec![Perm::from_cycles(6, &[&[0, 1, 2]])]);
        let b = PermutationGroup::new(6, vec![Perm::from_cycles(6, &[&[3, 4, 5]])]);
        assert_eq!(a.intersection(&b).unwrap().order(), 1);
        let a5 = PermutationGroup::alternating(5);
        let s4 = PermutationGroup::new(
            5,
            vec![
                Perm::from_cycles(5, &[&[0, 1]]),
                Perm::from_cycles(5, &[&[0, 1, 2, 3]]),
            ],
        );
        let i1 = intersection_by_cosets(&a5, &s4, 1000).unwrap();
        let i2 = intersection_by_backtrack(&a5, &s4).unwrap();
        assert_eq!(i1.order(), 12);
        assert!(i1.equals(&i2));
    }

    #[test]
    fn abelianization() {
        assert_eq!(
            PermutationGroup::alternating(6)
                .abelian_invariants(1000)
                .unwrap(),
            Vec::<u64>::new()
        );
        assert_eq!(
            PermutationGroup::symmetric(5)
                .abelian_invariants(1000)
                .unwrap(),
            vec![2]
        );
        let c = PermutationGroup::new(
            7,
            vec![
                Perm::from_cycles(7, &[&[0, 1, 2, 3]]),
                Perm::from_cycles(7, &[&[4, 5, 6]]),
            ],
        );
        assert_eq!(c.abelian_invariants(1000).unwrap(), vec![12]);
        let v = PermutationGroup::new(
            4,
            vec![
                Perm::from_cycles(4, &[&[0, 1]]),
                Perm::from_cycles(4, &[&[2, 3]]),
            ],
        );
        assert_eq!(v.abelian_invariants(1000).unwrap(), vec![2, 2]);
    }

    #[test]
    fn kernel_index_check() {
        let s6 = PermutationGroup::symmetric(6);
        let t = Perm::from_cycles(6, &[&[0, 1, 2]]);
        assert_eq!(s6.kernel(std::slice::from_ref(&t), Some(2)).unwrap().order(), 360);
        assert!(s6.kernel(&[t], Some(3)).is_err());
        assert_eq!(s6.kernel(&[], None).unwrap().order(), 1);
    }
}
