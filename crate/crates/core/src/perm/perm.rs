use std::fmt;

/// A permutation of `0..degree` acting on the right: `x^(gh) = (x^g)^h`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u32]>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    /// Panics if `images` is not a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Self {
        Perm::try_from_images(images).expect("not a permutation")
    }

    pub fn try_from_images(images: Vec<u32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || seen[x as usize] {
                return None;
            }
            seen[x as usize] = true;
        }
        Some(Perm(images.into_boxed_slice()))
    }

    /// From disjoint cycles on `0..degree`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Self {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        for c in cycles {
            for k in 0..c.len() {
                img[c[k] as usize] = c[(k + 1) % c.len()];
            }
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `self` then `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv.into_boxed_slice())
    }

    /// `h^-1 self h`.
    pub fn conjugate(&self, h: &Perm) -> Perm {
        h.inverse().mul(self).mul(h)
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(self.degree());
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.0
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    /// Restriction to `offset..offset+len`, which must be invariant.
    pub fn restrict(&self, offset: usize, len: usize) -> Perm {
        Perm(
            self.0[offset..offset + len]
                .iter()
                .map(|&x| x - offset as u32)
                .collect(),
        )
    }

    /// `self` on `0..a`, `other` on `a..a+b`.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let a = self.degree() as u32;
        Perm(
            self.0
                .iter()
                .copied()
                .chain(other.0.iter().map(|&x| x + a))
                .collect(),
        )
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for s in 0..self.degree() {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                first = false;
                write!(f, "{x}")?;
                x = self.0[x] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_composition() {
        let a = Perm::from_cycles(3, &[&[0, 1]]);
        let b = Perm::from_cycles(3, &[&[1, 2]]);
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.mul(&b).image(0), 2);
        assert!(a.mul(&a.inverse()).is_identity());
        assert_eq!(a.mul(&b).order(), 3);
    }

    #[test]
    fn sums_and_restriction() {
        let a = Perm::from_cycles(2, &[&[0, 1]]);
        let b = Perm::from_cycles(3, &[&[0, 1, 2]]);
        let s = a.direct_sum(&b);
        assert_eq!(s.degree(), 5);
        assert_eq!(s.order(), 6);
        assert_eq!(s.restrict(2, 3), b);
        assert_eq!(s.restrict(0, 2), a);
        assert_eq!(b.pow(-1), b.inverse());
        assert_eq!(b.pow(4), b);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::try_from_images(vec![0, 0]).is_none());
        assert!(Perm::try_from_images(vec![0, 2]).is_none());
    }
}
