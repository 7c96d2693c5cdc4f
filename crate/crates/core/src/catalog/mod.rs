//! Constructors for the polytope families used as input material.

mod m11;
mod s6;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fp::{Presentation, Word};
use crate::perm::{Perm, PermutationGroup};
use crate::rotation::{reflection_to_rotation_word, RotationSystem};

pub use m11::{m11, m11_map_11_5, search_m11_map, M11_ORDER, M11_SIGMA};
pub use s6::{derive_relators, s6_polytope_3443, search_s6_3443, S6_RELATORS, S6_SIGMA};

fn typed_relators(ps: &[i64]) -> Vec<Word> {
    ps.iter()
        .enumerate()
        .map(|(i, &p)| Word::gen(i as u32 + 1).pow(p))
        .collect()
}

fn build_checked(
    rank: usize,
    rels: Vec<Word>,
    budget: usize,
    expected: u64,
) -> Result<Option<RotationSystem>> {
    let r = RotationSystem::make(rank, rels, budget)?;
    match r.order() {
        None => Err(Error::BudgetExhausted { budget }),
        Some(n) if n == expected => Ok(Some(r)),
        Some(_) => Ok(None),
    }
}

/// Second translation candidates for `{4,4}`, tried in order against the
/// order `4(b^2+c^2)`.
fn toroid44_t2(t1: &Word) -> [Word; 4] {
    let (s1, s2) = (Word::gen(1), Word::gen(2));
    [
        s1.inverse().mul(t1).mul(&s1),
        s1.mul(t1).mul(&s1.inverse()),
        s2.inverse().mul(t1).mul(&s2),
        s2.mul(t1).mul(&s2.inverse()),
    ]
}

/// The toroidal map `{4,4}_(b,c)`. Translations `t1 = s1 s2^-1` and a
/// conjugate `t2`; relator `t1^b t2^c`.
pub fn toroid44(b: u32, c: u32, budget: usize) -> Result<RotationSystem> {
    if b == 0 && c == 0 {
        return Err(Error::Precondition("toroid parameters (0,0)".into()));
    }
    let t1 = Word::from_signed(&[1, -2]);
    let expected = 4 * (b as u64 * b as u64 + c as u64 * c as u64);
    for t2 in toroid44_t2(&t1) {
        let mut rels = typed_relators(&[4, 4]);
        rels.push(t1.pow(b as i64).mul(&t2.pow(c as i64)));
        if let Some(r) = build_checked(3, rels, budget, expected)? {
            return Ok(r);
        }
    }
    Err(Error::Inconsistent(format!(
        "no translation convention gives order {expected} for {{4,4}}_({b},{c})"
    )))
}

fn toroid36_t2(t1: &Word) -> [Word; 3] {
    let s2 = Word::gen(2);
    [
        Word::from_signed(&[-2, 1, -2]),
        s2.inverse().mul(t1).mul(&s2),
        s2.mul(t1).mul(&s2.inverse()),
    ]
}

/// The toroidal map `{3,6}_(b,c)`: `t1 = s1 s2^-2`, relator `t1^b t2^c`.
pub fn toroid36(b: u32, c: u32, budget: usize) -> Result<RotationSystem> {
    if b == 0 && c == 0 {
        return Err(Error::Precondition("toroid parameters (0,0)".into()));
    }
    let t1 = Word::from_signed(&[1, -2, -2]);
    let (b64, c64) = (b as u64, c as u64);
    let expected = 6 * (b64 * b64 + b64 * c64 + c64 * c64);
    for t2 in toroid36_t2(&t1) {
        let mut rels = typed_relators(&[3, 6]);
        rels.push(t1.pow(b as i64).mul(&t2.pow(c as i64)));
        if let Some(r) = build_checked(3, rels, budget, expected)? {
            return Ok(r);
        }
    }
    Err(Error::Inconsistent(format!(
        "no translation convention gives order {expected} for {{3,6}}_({b},{c})"
    )))
}

/// `{6,3}_(b,c)`, the dual of `{3,6}_(b,c)`.
pub fn toroid63(b: u32, c: u32, budget: usize) -> Result<RotationSystem> {
    Ok(toroid36(b, c, budget)?.dual())
}

/// Order of the full automorphism group of the cubic toroid
/// `{4,3^(n-3),4}_(s^k,0^(n-k-1))`: `2^(n+k-2) (n-1)! s^(n-1)`.
pub fn cubic_toroid_full_order(n: u32, s: u64, k: u32) -> u64 {
    let fact: u64 = (1..n as u64).product();
    (1u64 << (n + k - 2)) * fact * s.pow(n - 1)
}

/// Reflection word of the translation relator of the cubic toroid, in
/// `ρ_0..ρ_(n-1)`.
pub fn cubic_toroid_reflection_relator(n: u32, s: u32, k: u32) -> Vec<u32> {
    let d = n - 1;
    // translation along the first axis
    let t: Vec<u32> = (0..=d).chain((1..d).rev()).collect();
    let conj = |w: &[u32], j: u32| -> Vec<u32> {
        let mut v = vec![j];
        v.extend_from_slice(w);
        v.push(j);
        v
    };
    let base: Vec<u32> = if k == 1 {
        t
    } else if k == 2 {
        let mut v = t.clone();
        v.extend(conj(&t, 1));
        v
    } else {
        let mut tj = t;
        let mut v = tj.clone();
        for j in 1..d {
            tj = conj(&tj, j);
            v.extend_from_slice(&tj);
        }
        v
    };
    base.iter()
        .copied()
        .cycle()
        .take(base.len() * s as usize)
        .collect()
}

/// Order of the full group of the cubic toroid, by enumerating the
/// reflection presentation on `ρ_0..ρ_(n-1)` (generators `1..=n` of the
/// finitely presented group) directly. `None` if the budget runs out.
pub fn cubic_toroid_reflection_order(n: u32, s: u32, k: u32, budget: usize) -> Option<u64> {
    let rho = |i: u32| Word::gen(i + 1);
    let mut relators: Vec<Word> = (0..n).map(|i| rho(i).pow(2)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let m = if j > i + 1 {
                2
            } else if i == 0 || j == n - 1 {
                4
            } else {
                3
            };
            relators.push(rho(i).mul(&rho(j)).pow(m));
        }
    }
    let w = cubic_toroid_reflection_relator(n, s, k);
    relators.push(Word::from_letters(
        w.iter().map(|&i| crate::fp::Letter::new(i + 1, false)),
    ));
    let fp = crate::fp::FpGroup {
        ngens: n as usize,
        relators,
    };
    crate::fp::todd_coxeter(&fp, &[], budget)
        .index()
        .map(|i| i as u64)
}

/// The cubic toroid `{4,3^(n-3),4}_(s^k,0^(n-k-1))`. Its rotation group has
/// half the order of the full group, `2^(n+k-3) (n-1)! s^(n-1)`.
pub fn cubic_toroid(n: u32, s: u32, k: u32, budget: usize) -> Result<RotationSystem> {
    if n < 3 || s < 2 || !(k == 1 || k == 2 || k == n - 1) {
        return Err(Error::Precondition(format!(
            "cubic toroid parameters ({n},{s},{k})"
        )));
    }
    let mut ps = vec![3i64; n as usize - 1];
    ps[0] = 4;
    ps[n as usize - 2] = 4;
    let mut rels = typed_relators(&ps);
    let w = reflection_to_rotation_word(&cubic_toroid_reflection_relator(n, s, k))?;
    rels.push(crate::fp::enantiomorph_word(&w));
    rels.push(w);
    let expected = cubic_toroid_full_order(n, s as u64, k) / 2;
    let r = RotationSystem::make(n as usize, rels, budget)?;
    match r.order() {
        None => Err(Error::BudgetExhausted { budget }),
        Some(m) if m == expected => Ok(r),
        Some(m) => Err(Error::Inconsistent(format!(
            "cubic toroid ({n},{s},{k}) has rotation order {m}, expected {expected}"
        ))),
    }
}

/// The universal directly regular polytope `{p1,..,p(n-1)}`.
pub fn universal(ps: &[i64], budget: usize) -> Result<RotationSystem> {
    let r = RotationSystem::make(ps.len() + 1, typed_relators(ps), budget)?;
    if !r.is_finite() {
        return Err(Error::BudgetExhausted { budget });
    }
    Ok(r)
}

/// The `n`-simplex `{3^(n-1)}`, with rotation group `A_(n+1)`.
pub fn simplex(n: usize, budget: usize) -> Result<RotationSystem> {
    universal(&vec![3; n - 1], budget)
}

/// `{R, 2}` for a directly regular `R` of rank `n`: a new generator `s_n`
/// of order 2 acting on `Γ(R)` as conjugation by the last reflection,
/// which fixes `s_i` for `i < n-2`, sends `s_(n-2)` to `s_(n-2) s_(n-1)^2`
/// and `s_(n-1)` to its inverse.
pub fn trivial_extension(r: &RotationSystem) -> Result<RotationSystem> {
    if !r.is_directly_regular()? {
        return Err(Error::Precondition(
            "trivial extension of a system that is not directly regular".into(),
        ));
    }
    let n = r.rank();
    let g = r.group()?;
    let s = g.generators();
    let alpha: Vec<Perm> = (0..n - 1)
        .map(|i| {
            if i + 1 == n - 1 {
                s[i].inverse()
            } else if i + 1 == n - 2 {
                s[i].mul(&s[n - 2]).mul(&s[n - 2])
            } else {
                s[i].clone()
            }
        })
        .collect();
    let d = g.degree();
    let mut sigma: Vec<Perm> = s.iter().zip(&alpha).map(|(x, y)| x.direct_sum(y)).collect();
    let diagonal = PermutationGroup::new(2 * d, sigma.clone());
    if diagonal.order() != g.order() {
        return Err(Error::Inconsistent(
            "conjugation by the last reflection is not an automorphism".into(),
        ));
    }
    let swap: Vec<u32> = (0..2 * d as u32)
        .map(|x| {
            if (x as usize) < d {
                x + d as u32
            } else {
                x - d as u32
            }
        })
        .collect();
    sigma.push(Perm::from_images(swap));

    let last = n as u32;
    let sn = Word::gen(last);
    let mut rels: Vec<Word> = r.presentation().relators().to_vec();
    rels.push(sn.pow(2));
    for i in 1..last - 2 {
        rels.push(Word::from_signed(&[
            last as i32,
            i as i32,
            last as i32,
            -(i as i32),
        ]));
    }
    let (a, b) = ((last - 2) as i32, (last - 1) as i32);
    // s_n s_(n-2) s_n = s_(n-2) s_(n-1)^2
    rels.push(Word::from_signed(&[
        last as i32,
        a,
        last as i32,
        -b,
        -b,
        -a,
    ]));
    let pres = Presentation::new(n + 1, rels)?;
    RotationSystem::from_realization(pres, r.is_complete(), sigma, Some(2 * g.order()))
}

/// A catalog entry addressed by family tag and parameters, as in
/// `toroid44(1,2)` or `trivial_extension(universal(3,3))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Toroid44(u32, u32),
    Toroid36(u32, u32),
    Toroid63(u32, u32),
    CubicToroid(u32, u32, u32),
    Universal(Vec<i64>),
    Simplex(usize),
    TrivialExtension(Box<FamilySpec>),
    S6_3443,
    M11Map,
}

impl FamilySpec {
    pub fn build(&self, budget: usize) -> Result<RotationSystem> {
        match self {
            FamilySpec::Toroid44(b, c) => toroid44(*b, *c, budget),
            FamilySpec::Toroid36(b, c) => toroid36(*b, *c, budget),
            FamilySpec::Toroid63(b, c) => toroid63(*b, *c, budget),
            FamilySpec::CubicToroid(n, s, k) => cubic_toroid(*n, *s, *k, budget),
            FamilySpec::Universal(ps) => universal(ps, budget),
            FamilySpec::Simplex(n) => simplex(*n, budget),
            FamilySpec::TrivialExtension(inner) => trivial_extension(&inner.build(budget)?),
            FamilySpec::S6_3443 => Ok(s6_polytope_3443().clone()),
            FamilySpec::M11Map => Ok(m11_map_11_5().clone()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            FamilySpec::Toroid44(b, c) => write!(f, "toroid44({b},{c})"),
            FamilySpec::Toroid36(b, c) => write!(f, "toroid36({b},{c})"),
            FamilySpec::Toroid63(b, c) => write!(f, "toroid63({b},{c})"),
            FamilySpec::CubicToroid(n, s, k) => write!(f, "cubic_toroid({n},{s},{k})"),
            FamilySpec::Universal(ps) => write!(f, "universal({})", join(ps)),
            FamilySpec::Simplex(n) => write!(f, "simplex({n})"),
            FamilySpec::TrivialExtension(inner) => write!(f, "trivial_extension({inner})"),
            FamilySpec::S6_3443 => write!(f, "s6_3443"),
            FamilySpec::M11Map => write!(f, "m11_11_5"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Precondition(format!("unknown catalog entry `{s}`"));
        if s == "s6_3443" {
            return Ok(FamilySpec::S6_3443);
        }
        if s == "m11_11_5" {
            return Ok(FamilySpec::M11Map);
        }
        let open = s.find('(').ok_or_else(bad)?;
        if !s.ends_with(')') {
            return Err(bad());
        }
        let (tag, args) = (&s[..open], &s[open + 1..s.len() - 1]);
        if tag == "trivial_extension" {
            return Ok(FamilySpec::TrivialExtension(Box::new(args.parse()?)));
        }
        let nums: Vec<i64> = args
            .split(',')
            .map(|a| a.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        if nums.iter().any(|&x| x < 0) {
            return Err(bad());
        }
        let u = |i: usize| nums[i] as u32;
        Ok(match (tag, nums.len()) {
            ("toroid44", 2) => FamilySpec::Toroid44(u(0), u(1)),
            ("toroid36", 2) => FamilySpec::Toroid36(u(0), u(1)),
            ("toroid63", 2) => FamilySpec::Toroid63(u(0), u(1)),
            ("cubic_toroid", 3) => FamilySpec::CubicToroid(u(0), u(1), u(2)),
            ("universal", k) if k >= 2 => FamilySpec::Universal(nums),
            ("simplex", 1) => FamilySpec::Simplex(nums[0] as usize),
            _ => return Err(bad()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::DEFAULT_BUDGET;

    #[test]
    fn toroid_orders() {
        assert_eq!(toroid44(1, 0, DEFAULT_BUDGET).unwrap().order(), Some(4));
        assert_eq!(toroid44(1, 1, DEFAULT_BUDGET).unwrap().order(), Some(8));
        assert_eq!(toroid44(1, 2, DEFAULT_BUDGET).unwrap().order(), Some(20));
        assert_eq!(toroid36(1, 1, DEFAULT_BUDGET).unwrap().order(), Some(18));
        assert_eq!(
            toroid63(1, 2, DEFAULT_BUDGET).unwrap().schlafli().unwrap(),
            vec![6, 3]
        );
    }

    #[test]
    fn toroid_chirality() {
        assert!(toroid44(1, 1, DEFAULT_BUDGET)
            .unwrap()
            .is_directly_regular()
            .unwrap());
        assert!(toroid44(3, 0, DEFAULT_BUDGET)
            .unwrap()
            .is_directly_regular()
            .unwrap());
        assert!(!toroid44(1, 2, DEFAULT_BUDGET)
            .unwrap()
            .is_directly_regular()
            .unwrap());
        assert!(!toroid36(1, 2, DEFAULT_BUDGET)
            .unwrap()
            .is_directly_regular()
            .unwrap());
    }

    #[test]
    fn cubic_toroid_orders() {
        assert_eq!(
            cubic_toroid(4, 2, 1, DEFAULT_BUDGET).unwrap().order(),
            Some(192)
        );
        assert_eq!(
            cubic_toroid(3, 3, 1, DEFAULT_BUDGET).unwrap().order(),
            Some(36)
        );
        assert_eq!(
            cubic_toroid(3, 3, 2, DEFAULT_BUDGET).unwrap().order(),
            Some(72)
        );
        for (n, s, k) in [(4, 2, 1), (4, 3, 1), (4, 2, 3), (3, 3, 2)] {
            let full = cubic_toroid_reflection_order(n, s, k, DEFAULT_BUDGET);
            assert_eq!(full, Some(cubic_toroid_full_order(n, s as u64, k)));
        }
    }

    #[test]
    fn trivial_extensions() {
        let t = trivial_extension(&universal(&[3, 3], DEFAULT_BUDGET).unwrap()).unwrap();
        assert_eq!(t.order(), Some(24));
        assert_eq!(t.schlafli().unwrap(), vec![3, 3, 2]);
        let p =
            RotationSystem::from_presentation(t.presentation().clone(), DEFAULT_BUDGET).unwrap();
        assert_eq!(p.order(), Some(24));
        let q = trivial_extension(&toroid44(1, 1, DEFAULT_BUDGET).unwrap()).unwrap();
        assert_eq!(q.order(), Some(16));
        assert!(trivial_extension(&toroid44(1, 2, DEFAULT_BUDGET).unwrap()).is_err());
    }

    #[test]
    fn specs_round_trip() {
        for s in [
            "toroid44(1,2)",
            "cubic_toroid(4,2,1)",
            "universal(2,3,3,2)",
            "simplex(4)",
            "s6_3443",
            "trivial_extension(universal(3,3))",
            "m11_11_5",
        ] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert!("toroid44(1)".parse::<FamilySpec>().is_err());
        assert!("nonsense".parse::<FamilySpec>().is_err());
    }
}
