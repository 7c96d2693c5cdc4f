//! Presentations of quotients of the universal string rotation group.

use std::fmt;

use super::word::{enantiomorph_word, Word};
use crate::error::{Error, Result};

/// A finitely presented group on `ngens` generators. Unlike [`Presentation`]
/// nothing is implicit: every relator the enumerator should use is listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpGroup {
    pub ngens: usize,
    pub relators: Vec<Word>,
}

/// Rank `n` plus extra relators over `s1..s(n-1)`. The string relations
/// `(s_i ... s_j)^2` for `i < j` are implied and never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    rank: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(rank: usize, relators: impl IntoIterator<Item = Word>) -> Result<Self> {
        if rank < 3 {
            return Err(Error::RankTooSmall(rank));
        }
        let mut p = Presentation {
            rank,
            relators: Vec::new(),
        };
        for r in relators {
            p.push_relator(r)?;
        }
        Ok(p)
    }

    /// The universal group `W+` of the given rank.
    pub fn universal(rank: usize) -> Result<Self> {
        Presentation::new(rank, [])
    }

    fn push_relator(&mut self, r: Word) -> Result<()> {
        if r.is_empty() {
            return Err(Error::EmptyRelator);
        }
        if let Some(l) = r.letters().iter().find(|l| l.gen() as usize >= self.rank) {
            return Err(Error::GeneratorOutOfRange {
                gen: l.gen(),
                rank: self.rank,
            });
        }
        if !self.relators.contains(&r) {
            self.relators.push(r);
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ngens(&self) -> usize {
        self.rank - 1
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Same rank, relators of both. Trivial relators are dropped.
    pub fn union(&self, other: &Presentation) -> Result<Presentation> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut p = self.clone();
        for r in &other.relators {
            p.push_relator(r.clone())?;
        }
        Ok(p)
    }

    pub fn with_relators(&self, extra: impl IntoIterator<Item = Word>) -> Result<Presentation> {
        let mut p = self.clone();
        for r in extra {
            if !r.is_empty() {
                p.push_relator(r)?;
            }
        }
        Ok(p)
    }

    /// Presentation of the mirror image: every relator replaced by its mirror word.
    pub fn enantiomorph(&self) -> Presentation {
        Presentation {
            rank: self.rank,
            relators: dedup(self.relators.iter().map(enantiomorph_word)),
        }
    }

    /// Dual presentation under `s_i -> s_(n-i)^-1`.
    pub fn dual(&self) -> Presentation {
        let n = self.rank as u32;
        Presentation {
            rank: self.rank,
            relators: dedup(
                self.relators
                    .iter()
                    .map(|r| r.substitute(|g| Word::gen(n - g).inverse())),
            ),
        }
    }

    /// `(s_i ... s_j)^2` for all `1 <= i < j <= n-1`.
    pub fn string_relators(rank: usize) -> Vec<Word> {
        let m = rank as u32 - 1;
        let mut out = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                let tau = Word::from_letters((i..=j).map(|g| super::word::Letter::new(g, false)));
                out.push(tau.pow(2));
            }
        }
        out
    }

    /// All relators handed to coset enumeration: the stored ones first, then
    /// the implicit string relations.
    pub fn to_fp(&self) -> FpGroup {
        let mut relators = self.relators.clone();
        for r in Presentation::string_relators(self.rank) {
            if !relators.contains(&r) {
                relators.push(r);
            }
        }
        FpGroup {
            ngens: self.ngens(),
            relators,
        }
    }

    /// The subsystem on consecutive generators `s_lo..=s_hi`, renumbered from
    /// 1, keeping only the relators that involve no other generator. The
    /// result has rank `hi - lo + 2`.
    pub fn section(&self, lo: u32, hi: u32) -> Result<Presentation> {
        let rels = self
            .relators
            .iter()
            .filter(|r| r.letters().iter().all(|l| l.gen() >= lo && l.gen() <= hi))
            .map(|r| r.substitute(|g| Word::gen(g - lo + 1)));
        Presentation::new((hi - lo + 2) as usize, rels)
    }
}

fn dedup(it: impl Iterator<Item = Word>) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for w in it {
        if !w.is_empty() && !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {}", self.rank)?;
        for r in &self.relators {
            writeln!(f, "relator {r}")?;
        }
        Ok(())
    }
}
