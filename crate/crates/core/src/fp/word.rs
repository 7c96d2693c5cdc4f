//! Freely reduced words over the rotation generators `s1, s2, ...`.

use std::fmt;

/// A generator or its inverse. `Letter(3)` is `s3`, `Letter(-3)` is `s3^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(gen: u32, inverse: bool) -> Self {
        assert!(gen >= 1, "generator indices start at 1");
        let g = gen as i32;
        Letter(if inverse { -g } else { g })
    }

    pub fn gen(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    /// Column index in a coset table: `2(g-1)` for `g`, `2(g-1)+1` for `g^-1`.
    pub fn column(self) -> usize {
        2 * (self.gen() as usize - 1) + usize::from(self.is_inverse())
    }
}

/// A word in the free group, always stored freely reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Build from signed generator indices: `[1, -2]` is `s1 s2^-1`.
    pub fn from_signed(letters: &[i32]) -> Self {
        Word::from_letters(letters.iter().map(|&x| {
            assert!(x != 0);
            Letter::new(x.unsigned_abs(), x < 0)
        }))
    }

    pub fn gen(g: u32) -> Self {
        Word::from_letters([Letter::new(g, false)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_gen(&self) -> u32 {
        self.letters.iter().map(|l| l.gen()).max().unwrap_or(0)
    }

    fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..e.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// Replace every generator by a word. `image(g)` gives the image of `s_g`.
    pub fn substitute<F: Fn(u32) -> Word>(&self, image: F) -> Word {
        let mut w = Word::identity();
        for &l in &self.letters {
            let im = image(l.gen());
            let im = if l.is_inverse() { im.inverse() } else { im };
            w = w.mul(&im);
        }
        w
    }

    /// Shortest cyclic conjugate with no cancellation across the ends.
    pub fn cyclically_reduced(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0usize, l.len());
        while j >= i + 2 && l[i] == l[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        Word {
            letters: l[i..j].to_vec(),
        }
    }

    /// Exponent sum of each generator `1..=ngens`.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0i64; ngens];
        for l in &self.letters {
            v[l.gen() as usize - 1] += if l.is_inverse() { -1 } else { 1 };
        }
        v
    }
}

/// Free reduction of an arbitrary letter sequence. Words built through the
/// public constructors are already reduced, so this is the identity on them.
pub fn free_reduce(w: &Word) -> Word {
    Word::from_letters(w.letters.iter().copied())
}

/// Mirror image of a word: `s1 -> s1^-1`, `s2 -> s1^2 s2`, all other
/// generators fixed. An involution on reduced words.
pub fn enantiomorph_word(w: &Word) -> Word {
    w.substitute(|g| match g {
        1 => Word::from_signed(&[-1]),
        2 => Word::from_signed(&[1, 1, 2]),
        g => Word::gen(g),
    })
}

impl fmt::Display for Word {
    /// DSL form with run-length powers, e.g. `s1^2 s2^-1`; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let e = if l.is_inverse() {
                -(run as i64)
            } else {
                run as i64
            };
            if e == 1 {
                write!(f, "s{}", l.gen())?;
            } else {
                write!(f, "s{}^{}", l.gen(), e)?;
            }
            i += run;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation() {
        assert_eq!(Word::from_signed(&[1, -1]), Word::identity());
        assert_eq!(free_reduce(&Word::identity()), Word::identity());
        assert_eq!(
            Word::from_signed(&[2, 3, -3, 2]),
            Word::from_signed(&[2, 2])
        );
    }

    #[test]
    fn mirror_of_generators() {
        assert_eq!(enantiomorph_word(&Word::gen(1)), Word::from_signed(&[-1]));
        assert_eq!(enantiomorph_word(&Word::gen(3)), Word::gen(3));
        assert_eq!(
            enantiomorph_word(&Word::from_signed(&[-2])),
            Word::from_signed(&[-2, -1, -1])
        );
        let w = Word::from_signed(&[1, 2, -3, 2, 2, -1]);
        assert_eq!(enantiomorph_word(&enantiomorph_word(&w)), w);
    }

    #[test]
    fn cyclic_reduction_and_display() {
        let w = Word::from_signed(&[2, 1, 1, 3, -2]);
        assert_eq!(w.cyclically_reduced(), Word::from_signed(&[1, 1, 3]));
        assert_eq!(w.to_string(), "s2 s1^2 s3 s2^-1");
        assert_eq!(Word::identity().to_string(), "1");
    }

    #[test]
    fn columns() {
        assert_eq!(Letter::new(1, false).column(), 0);
        assert_eq!(Letter::new(1, true).column(), 1);
        assert_eq!(Letter::new(3, true).column(), 5);
    }
}
