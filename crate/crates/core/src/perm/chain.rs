//! Stabilizer chains (base and strong generating set).
//!
//! Deterministic construction is the incremental Schreier-Sims algorithm:
//! every Schreier generator is sifted once. When the group order is known in
//! advance, [`StabChain::with_known_order`] sifts seeded random products
//! instead and stops as soon as the orbit lengths multiply to that order,
//! which certifies completeness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::Perm;

const ABSENT: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    /// Indices into `StabChain::strong`.
    gens: Vec<usize>,
    orbit: Vec<u32>,
    /// Position of each point in `orbit`, or `ABSENT`.
    pos: Vec<u32>,
    /// `trans[k]` maps `base` to `orbit[k]`.
    trans: Vec<Perm>,
    trans_inv: Vec<Perm>,
    /// Number of generators already verified for each orbit point.
    checked: Vec<usize>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut pos = vec![ABSENT; degree];
        pos[base as usize] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            pos,
            trans: vec![Perm::identity(degree)],
            trans_inv: vec![Perm::identity(degree)],
            checked: vec![0],
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn trivial(degree: usize) -> Self {
        StabChain {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Deterministic Schreier-Sims. Base points are taken in order from
    /// `base_prefix`, then as the smallest point moved by each new residue.
    pub fn build(degree: usize, gens: &[Perm], base_prefix: &[u32]) -> Self {
        let mut c = StabChain::trivial(degree);
        for &b in base_prefix {
            c.levels.push(Level::new(b, degree));
        }
        for g in gens {
            c.extend(g);
        }
        c
    }

    /// Randomized Schreier-Sims that stops once the chain has `order`
    /// elements. Returns `None` if that never happens within the sift limit,
    /// which means the generators do not generate a group of that order.
    pub fn with_known_order(
        degree: usize,
        gens: &[Perm],
        base_prefix: &[u32],
        order: u64,
    ) -> Option<Self> {
        let mut c = StabChain::trivial(degree);
        for &b in base_prefix {
            c.levels.push(Level::new(b, degree));
        }
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            c.add_residue_of(g);
        }
        if gens.is_empty() {
            return (order == 1).then_some(c);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c4a1);
        let mut pool: Vec<Perm> = gens.clone();
        while pool.len() < 10 {
            pool.push(gens[pool.len() % gens.len()].clone());
        }
        let mut acc = Perm::identity(degree);
        for _ in 0..50 {
            product_replacement(&mut pool, &mut acc, &mut rng);
        }
        let mut misses = 0usize;
        while c.order_u128() < order as u128 {
            product_replacement(&mut pool, &mut acc, &mut rng);
            if c.add_residue_of(&acc) {
                misses = 0;
            } else {
                misses += 1;
                if misses > 400 {
                    return None;
                }
            }
        }
        (c.order_u128() == order as u128).then_some(c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn orbit(&self, level: usize) -> &[u32] {
        &self.levels[level].orbit
    }

    pub fn transversal(&self, level: usize) -> &[Perm] {
        &self.levels[level].trans
    }

    /// Position of `point` in the orbit at `level`.
    pub fn orbit_position(&self, level: usize, point: u32) -> Option<usize> {
        let p = self.levels[level].pos[point as usize];
        (p != ABSENT).then_some(p as usize)
    }

    pub fn transversal_inverse(&self, level: usize, k: usize) -> &Perm {
        &self.levels[level].trans_inv[k]
    }

    fn order_u128(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn order(&self) -> u64 {
        u64::try_from(self.order_u128()).expect("group order exceeds u64")
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    /// Strong generators fixing the first `level` base points; they generate
    /// the pointwise stabilizer of those points.
    pub fn stabilizer_generators(&self, level: usize) -> Vec<Perm> {
        let mut idx: Vec<usize> = self.levels[level.min(self.levels.len())..]
            .iter()
            .flat_map(|l| l.gens.iter().copied())
            .collect();
        idx.sort_unstable();
        idx.dedup();
        idx.into_iter()
            .map(|i| self.strong[i].clone())
            .filter(|g| {
                self.levels[..level.min(self.levels.len())]
                    .iter()
                    .all(|l| g.image(l.base) == l.base)
            })
            .collect()
    }

    /// Sift `g` starting at `from`. Returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it passed every level).
    pub fn sift_from(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, l) in self.levels.iter().enumerate().skip(from) {
            let b = h.image(l.base);
            let p = l.pos[b as usize];
            if p == ABSENT {
                return (h, i);
            }
            if p != 0 {
                h = h.mul(&l.trans_inv[p as usize]);
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, _) = self.sift_from(g, 0);
        h.is_identity()
    }

    /// Add `g` as a generator and complete the chain.
    pub fn extend(&mut self, g: &Perm) -> bool {
        let (h, j) = self.sift_from(g, 0);
        if h.is_identity() {
            return false;
        }
        self.insert_residue(h, j);
        self.complete();
        true
    }

    /// Sift `g`; if the residue is nontrivial insert it without the
    /// Schreier-generator closure. Used by the known-order construction.
    fn add_residue_of(&mut self, g: &Perm) -> bool {
        let (h, j) = self.sift_from(g, 0);
        if h.is_identity() {
            return false;
        }
        self.insert_residue(h, j);
        true
    }

    /// Insert a residue that fixes the base points of levels `< j`.
    fn insert_residue(&mut self, h: Perm, j: usize) {
        let idx = self.strong.len();
        self.strong.push(h);
        let mut j = j;
        if j == self.levels.len() {
            let b = self.strong[idx]
                .smallest_moved_point()
                .expect("nontrivial residue");
            self.levels.push(Level::new(b, self.degree));
        }
        // every level up to j whose base point precedes the first moved one
        let mut lvl = 0;
        while lvl <= j {
            if self.levels[..lvl]
                .iter()
                .all(|l| self.strong[idx].image(l.base) == l.base)
            {
                self.levels[lvl].gens.push(idx);
                self.update_orbit(lvl);
            }
            lvl += 1;
        }
        // a level deeper than j can also receive it when it fixes j's base
        while j + 1 < self.levels.len()
            && self.strong[idx].image(self.levels[j].base) == self.levels[j].base
        {
            j += 1;
            self.levels[j].gens.push(idx);
            self.update_orbit(j);
        }
    }

    fn update_orbit(&mut self, lvl: usize) {
        let level = &mut self.levels[lvl];
        let mut k = 0;
        while k < level.orbit.len() {
            let x = level.orbit[k];
            for &gi in &level.gens {
                let g = &self.strong[gi];
                let y = g.image(x);
                if level.pos[y as usize] == ABSENT {
                    let t = level.trans[k].mul(g);
                    level.pos[y as usize] = level.orbit.len() as u32;
                    level.orbit.push(y);
                    level.trans_inv.push(t.inverse());
                    level.trans.push(t);
                    level.checked.push(0);
                }
            }
            k += 1;
        }
    }

    /// Verify every unchecked Schreier generator, deepest level first.
    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let mut k = 0;
            while k < self.levels[lvl].orbit.len() {
                while self.levels[lvl].checked[k] < self.levels[lvl].gens.len() {
                    let level = &self.levels[lvl];
                    let gi = level.gens[level.checked[k]];
                    let g = &self.strong[gi];
                    let y = g.image(level.orbit[k]);
                    let p = level.pos[y as usize] as usize;
                    let schreier = level.trans[k].mul(g).mul(&level.trans_inv[p]);
                    self.levels[lvl].checked[k] += 1;
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.sift_from(&schreier, lvl + 1);
                    if !h.is_identity() {
                        self.insert_residue(h, j);
                        i = (j.min(self.levels.len() - 1)) as isize;
                        continue 'outer;
                    }
                }
                k += 1;
            }
            i -= 1;
        }
    }

    /// Every element, in a fixed order. Callers bound the order first.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        // g = u_k ... u_1, built from the deepest level up
        for l in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * l.trans.len());
            for h in &out {
                for u in &l.trans {
                    next.push(h.mul(u));
                }
            }
            out = next;
        }
        out
    }

    /// Images of the canonical element of the right coset `self * g`, the one
    /// with lexicographically least base images.
    pub fn coset_key(&self, g: &Perm) -> Vec<u32> {
        let mut h = g.clone();
        for l in &self.levels {
            let (k, _) = l
                .orbit
                .iter()
                .enumerate()
                .map(|(k, &o)| (k, h.image(o)))
                .min_by_key(|&(_, img)| img)
                .expect("orbit is nonempty");
            if k != 0 {
                h = l.trans[k].mul(&h);
            }
        }
        // h is now the canonical element of the coset
        h.images().to_vec()
    }
}

fn product_replacement(pool: &mut [Perm], acc: &mut Perm, rng: &mut ChaCha8Rng) {
    let n = pool.len();
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    let inv = rng.gen_bool(0.5);
    let left = rng.gen_bool(0.5);
    let pj = if inv {
        pool[j].inverse()
    } else {
        pool[j].clone()
    };
    pool[i] = if left {
        pj.mul(&pool[i])
    } else {
        pool[i].mul(&pj)
    };
    *acc = acc.mul(&pool[i]);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Vec<Perm> {
        let cyc: Vec<u32> = (0..n as u32).collect();
        vec![
            Perm::from_cycles(n, &[&[0, 1]]),
            Perm::from_cycles(n, &[&cyc]),
        ]
    }

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(StabChain::build(6, &sym(6), &[]).order(), 720);
        assert_eq!(StabChain::build(7, &sym(7), &[]).order(), 5040);
        assert_eq!(StabChain::build(4, &[], &[]).order(), 1);
    }

    #[test]
    fn known_order_matches() {
        let c = StabChain::with_known_order(6, &sym(6), &[], 720).unwrap();
        assert_eq!(c.order(), 720);
        assert!(StabChain::with_known_order(6, &sym(6), &[], 1440).is_none());
    }

    #[test]
    fn membership() {
        let a6 = vec![
            Perm::from_cycles(6, &[&[0, 1, 2]]),
            Perm::from_cycles(6, &[&[1, 2, 3, 4, 5]]),
        ];
        let c = StabChain::build(6, &a6, &[]);
        assert_eq!(c.order(), 360);
        assert!(c.contains(&Perm::from_cycles(6, &[&[0, 1], &[2, 3]])));
        assert!(!c.contains(&Perm::from_cycles(6, &[&[0, 1]])));
    }

    #[test]
    fn base_prefix_gives_pointwise_stabilizer() {
        let c = StabChain::build(6, &sym(6), &[5, 4]);
        assert_eq!(c.base()[..2], [5, 4]);
        let stab = StabChain::build(6, &c.stabilizer_generators(2), &[]);
        assert_eq!(stab.order(), 24);
    }

    #[test]
    fn elements_are_distinct() {
        let c = StabChain::build(5, &sym(5), &[]);
        let mut e = c.elements();
        assert_eq!(e.len(), 120);
        e.sort();
        e.dedup();
        assert_eq!(e.len(), 120);
    }

    #[test]
    fn coset_keys_identify_cosets() {
        // cosets of S3 (on 0..3) inside S5
        let s5 = StabChain::build(5, &sym(5), &[]);
        let h = StabChain::build(
            5,
            &[
                Perm::from_cycles(5, &[&[0, 1]]),
                Perm::from_cycles(5, &[&[0, 1, 2]]),
            ],
            &[],
        );
        let mut keys: Vec<Vec<u32>> = s5.elements().iter().map(|g| h.coset_key(g)).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 20);
    }
}
