//! HLT coset enumeration with lookahead.
//!
//! Cosets are rows of a table with one column per generator and one per
//! inverse. Rows are created in order and never reused; when the budget is
//! reached a lookahead pass scans every relator at every live coset without
//! defining new ones, the table is compacted and enumeration resumes. If the
//! lookahead frees too little the run stops with
//! [`CosetStatus::BudgetExhausted`].

use super::presentation::FpGroup;
use super::word::Word;

const UNDEF: u32 = u32::MAX;

/// Default coset budget.
pub const DEFAULT_BUDGET: usize = 10_000_000;

/// Order in which relators are scanned and row entries filled. Both produce
/// the same index on closure; they differ in the intermediate coset numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Hlt,
    HltReversed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetStatus {
    Complete { index: usize },
    BudgetExhausted { budget: usize },
}

/// Result of an enumeration. When complete, row 0 is the subgroup coset and
/// the table is closed under all relators.
#[derive(Clone, Debug)]
pub struct CosetTable {
    ngens: usize,
    status: CosetStatus,
    table: Vec<u32>,
}

impl CosetTable {
    pub fn status(&self) -> CosetStatus {
        self.status
    }

    pub fn index(&self) -> Option<usize> {
        match self.status {
            CosetStatus::Complete { index } => Some(index),
            CosetStatus::BudgetExhausted { .. } => None,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self.status, CosetStatus::Complete { .. })
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Coset reached from `coset` by the given table column.
    pub fn entry(&self, coset: usize, column: usize) -> usize {
        self.table[coset * 2 * self.ngens + column] as usize
    }

    /// Image of every coset under generator `g` (1-based).
    pub fn action(&self, g: u32) -> Vec<u32> {
        let n = self.index().expect("action of an incomplete coset table");
        let col = 2 * (g as usize - 1);
        (0..n)
            .map(|c| self.table[c * 2 * self.ngens + col])
            .collect()
    }

    /// Follow a word from `coset`. `None` if the table is incomplete and
    /// the trace runs off it.
    pub fn trace(&self, coset: usize, w: &Word) -> Option<usize> {
        let width = 2 * self.ngens;
        let mut c = coset;
        for l in w.letters() {
            let next = *self.table.get(c * width + l.column())?;
            if next == UNDEF {
                return None;
            }
            c = next as usize;
        }
        Some(c)
    }
}

struct Full;

struct Enumerator {
    ncols: usize,
    inv: Vec<usize>,
    rels: Vec<Vec<usize>>,
    subgens: Vec<Vec<usize>>,
    fill_order: Vec<usize>,
    table: Vec<u32>,
    parent: Vec<u32>,
    rows: usize,
    live: usize,
    budget: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(fp: &FpGroup, subgens: &[Word], budget: usize, strategy: Strategy) -> Self {
        let ncols = 2 * fp.ngens;
        let inv = (0..ncols).map(|c| c ^ 1).collect();
        let cols = |w: &Word| w.letters().iter().map(|l| l.column()).collect::<Vec<_>>();
        let mut rels: Vec<Vec<usize>> = fp
            .relators
            .iter()
            .map(|r| cols(&r.cyclically_reduced()))
            .filter(|r| !r.is_empty())
            .collect();
        let mut fill_order: Vec<usize> = (0..ncols).collect();
        if strategy == Strategy::HltReversed {
            rels.reverse();
            fill_order.reverse();
        }
        let mut e = Enumerator {
            ncols,
            inv,
            rels,
            subgens: subgens.iter().map(cols).filter(|w| !w.is_empty()).collect(),
            fill_order,
            table: Vec::new(),
            parent: Vec::new(),
            rows: 0,
            live: 0,
            budget: budget.max(1),
            queue: Vec::new(),
        };
        e.new_row();
        e
    }

    fn new_row(&mut self) -> u32 {
        let r = self.rows as u32;
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.parent.push(r);
        self.rows += 1;
        self.live += 1;
        r
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.ncols + x] = v;
    }

    #[inline]
    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32, Full> {
        if self.rows >= self.budget {
            return Err(Full);
        }
        let d = self.new_row();
        self.set(c, x, d);
        self.set(d, self.inv[x], c);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill as usize] = keep;
        self.live -= 1;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                let xi = self.inv[x];
                self.set(d, xi, UNDEF);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mux = self.get(mu, x);
                if mux != UNDEF {
                    self.merge(nu, mux);
                } else {
                    let nuxi = self.get(nu, xi);
                    if nuxi != UNDEF {
                        self.merge(mu, nuxi);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, xi, mu);
                    }
                }
            }
        }
    }

    /// Scan `w` from `c` back to `c`, defining cosets when `fill` is set.
    fn scan(&mut self, c: u32, w_idx: WordRef, fill: bool) -> Result<(), Full> {
        let len = self.word(w_idx).len();
        let (mut f, mut i) = (c, 0usize);
        let (mut b, mut j) = (c, len as isize - 1);
        loop {
            while (i as isize) <= j {
                let x = self.word(w_idx)[i];
                let next = self.get(f, x);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                let x = self.word(w_idx)[j as usize];
                let prev = self.get(b, self.inv[x]);
                if prev == UNDEF {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                let x = self.word(w_idx)[i];
                self.set(f, x, b);
                self.set(b, self.inv[x], f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            let x = self.word(w_idx)[i];
            self.define(f, x)?;
        }
    }

    fn word(&self, r: WordRef) -> &[usize] {
        match r {
            WordRef::Rel(k) => &self.rels[k],
            WordRef::Sub(k) => &self.subgens[k],
        }
    }

    fn process(&mut self, c: u32) -> Result<(), Full> {
        if c == 0 {
            for k in 0..self.subgens.len() {
                self.scan(0, WordRef::Sub(k), true)?;
            }
        }
        for k in 0..self.rels.len() {
            if !self.alive(c) {
                return Ok(());
            }
            self.scan(c, WordRef::Rel(k), true)?;
        }
        if self.alive(c) {
            for k in 0..self.ncols {
                let x = self.fill_order[k];
                if self.get(c, x) == UNDEF {
                    self.define(c, x)?;
                }
            }
        }
        Ok(())
    }

    fn lookahead(&mut self) {
        for k in 0..self.subgens.len() {
            let _ = self.scan(0, WordRef::Sub(k), false);
        }
        for c in 0..self.rows as u32 {
            for k in 0..self.rels.len() {
                if !self.alive(c) {
                    break;
                }
                let _ = self.scan(c, WordRef::Rel(k), false);
            }
        }
    }

    /// Renumber live rows consecutively. Returns the old-to-new map.
    fn compact(&mut self) -> Vec<u32> {
        let mut map = vec![UNDEF; self.rows];
        let mut n = 0u32;
        for c in 0..self.rows {
            if self.parent[c] == c as u32 {
                map[c] = n;
                n += 1;
            }
        }
        let mut table = Vec::with_capacity(n as usize * self.ncols);
        for c in 0..self.rows {
            if map[c] != UNDEF {
                for x in 0..self.ncols {
                    let v = self.table[c * self.ncols + x];
                    table.push(if v == UNDEF { UNDEF } else { map[v as usize] });
                }
            }
        }
        self.table = table;
        self.rows = n as usize;
        self.live = n as usize;
        self.parent = (0..n).collect();
        map
    }

    fn run(mut self) -> CosetTable {
        let ngens = self.ncols / 2;
        let mut c = 0usize;
        while c < self.rows {
            if !self.alive(c as u32) {
                c += 1;
                continue;
            }
            match self.process(c as u32) {
                Ok(()) => c += 1,
                Err(Full) => {
                    let before = self.rows;
                    self.lookahead();
                    let freed = before - self.live;
                    if freed == 0 || freed * 64 < before {
                        return CosetTable {
                            ngens,
                            status: CosetStatus::BudgetExhausted {
                                budget: self.budget,
                            },
                            table: Vec::new(),
                        };
                    }
                    let map = self.compact();
                    c = (c..map.len())
                        .find(|&k| map[k] != UNDEF)
                        .map(|k| map[k] as usize)
                        .unwrap_or(self.rows);
                }
            }
        }
        self.compact();
        CosetTable {
            ngens,
            status: CosetStatus::Complete { index: self.rows },
            table: self.table,
        }
    }
}

#[derive(Clone, Copy)]
enum WordRef {
    Rel(usize),
    Sub(usize),
}

/// Enumerate the cosets of the subgroup generated by `subgens` in the group
/// presented by `fp`. Deterministic for fixed inputs, budget and strategy.
pub fn todd_coxeter(fp: &FpGroup, subgens: &[Word], budget: usize) -> CosetTable {
    todd_coxeter_with(fp, subgens, budget, Strategy::Hlt)
}

pub fn todd_coxeter_with(
    fp: &FpGroup,
    subgens: &[Word],
    budget: usize,
    strategy: Strategy,
) -> CosetTable {
    Enumerator::new(fp, subgens, budget, strategy).run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Presentation;

    fn types(ps: &[i64]) -> Presentation {
        let rels = ps
            .iter()
            .enumerate()
            .map(|(i, &p)| Word::gen(i as u32 + 1).pow(p));
        Presentation::new(ps.len() + 1, rels).unwrap()
    }

    #[test]
    fn tetrahedral_rotations() {
        let t = todd_coxeter(&types(&[3, 3]).to_fp(), &[], 1000);
        assert_eq!(t.index(), Some(12));
    }

    #[test]
    fn degenerate_5_polytope() {
        let t = todd_coxeter(&types(&[2, 3, 3, 2]).to_fp(), &[], 100_000);
        assert_eq!(t.index(), Some(48));
        let r = todd_coxeter_with(
            &types(&[2, 3, 3, 2]).to_fp(),
            &[],
            100_000,
            Strategy::HltReversed,
        );
        assert_eq!(r.index(), Some(48));
    }

    #[test]
    fn euclidean_group_exhausts() {
        let t = todd_coxeter(&types(&[4, 4]).to_fp(), &[], 100_000);
        assert_eq!(t.status(), CosetStatus::BudgetExhausted { budget: 100_000 });
    }

    #[test]
    fn subgroup_cosets() {
        // vertices of the tetrahedron: cosets of <s2>
        let t = todd_coxeter(&types(&[3, 3]).to_fp(), &[Word::gen(2)], 1000);
        assert_eq!(t.index(), Some(4));
        assert_eq!(t.trace(0, &Word::gen(2)), Some(0));
    }

    #[test]
    fn table_is_closed_under_relators() {
        let fp = types(&[3, 4]).to_fp();
        let t = todd_coxeter(&fp, &[], 10_000);
        let n = t.index().unwrap();
        assert_eq!(n, 24);
        for c in 0..n {
            for r in &fp.relators {
                assert_eq!(t.trace(c, r), Some(c));
            }
        }
    }

    #[test]
    fn tiny_budget_exhausts_then_larger_closes() {
        let fp = types(&[3, 5]).to_fp();
        assert!(!todd_coxeter(&fp, &[], 10).is_complete());
        assert_eq!(todd_coxeter(&fp, &[], 100_000).index(), Some(60));
    }
}
