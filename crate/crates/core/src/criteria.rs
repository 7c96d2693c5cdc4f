//! Sufficient conditions for polytopality and chirality of mixes, bounds on
//! chirality groups, and hypothesis checks for infinite chirality groups.
//!
//! Every certificate records the hypotheses it checked, with the numbers
//! involved. A conclusion other than `Inconclusive` is only issued when all
//! of them were verified by computation.

use std::fmt;

use crate::catalog::trivial_extension;
use crate::error::{Error, Result};
use crate::mixer::{
    chirality_group, chirality_subgroup, comix, minimal_regular_cover, mix, ChiralityOrder,
};
use crate::perm::{gcd, PermutationGroup, DEFAULT_SIMPLICITY_BOUND};
use crate::rotation::RotationSystem;

/// Mixes up to this order have their chirality group computed directly to
/// cross-check a certificate.
pub const CROSS_CHECK_BOUND: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    CoprimeTypes,
    CoprimeMiddleTypes,
    Polyhedra,
    FacetsCover,
    ChiralityDivisibility,
    TotallyChiralOrders,
    ChiralityLowerBound,
    SimpleChiralityGroup,
    SimpleRotationGroupChiral,
    SimpleRotationGroupTransfer,
    ExtensionChirality,
    PseudoExtension,
    ToroidMixing,
}

impl Theorem {
    pub fn tag(self) -> &'static str {
        match self {
            Theorem::CoprimeTypes => "coprime-types",
            Theorem::CoprimeMiddleTypes => "coprime-middle-types",
            Theorem::Polyhedra => "polyhedra",
            Theorem::FacetsCover => "facets-cover",
            Theorem::ChiralityDivisibility => "chirality-divisibility",
            Theorem::TotallyChiralOrders => "totally-chiral-orders",
            Theorem::ChiralityLowerBound => "chirality-lower-bound",
            Theorem::SimpleChiralityGroup => "simple-chirality-group",
            Theorem::SimpleRotationGroupChiral => "simple-rotation-group-chiral",
            Theorem::SimpleRotationGroupTransfer => "simple-rotation-group-transfer",
            Theorem::ExtensionChirality => "extension-chirality",
            Theorem::PseudoExtension => "pseudo-extension",
            Theorem::ToroidMixing => "toroid-mixing",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Polytopal,
    Chiral,
    ChiralityGroupEquals {
        order: u64,
        abelian_invariants: Vec<u64>,
        simple: bool,
    },
    /// `|X(R1 ⋄ R2)|` is divisible by both numbers.
    DividesBound {
        first: u64,
        second: u64,
    },
    /// Symbolic statement about the listed (possibly infinite) polytopes.
    InfiniteChiralityGroup {
        subjects: Vec<String>,
    },
    ChiralWithRegularFacets {
        subject: String,
    },
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Premise {
    pub statement: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub conclusion: Conclusion,
    pub premises: Vec<Premise>,
    pub theorem: Theorem,
}

impl Certificate {
    fn new(theorem: Theorem) -> Self {
        Certificate {
            conclusion: Conclusion::Inconclusive,
            premises: Vec::new(),
            theorem,
        }
    }

    fn check(&mut self, holds: bool, statement: impl Into<String>) -> bool {
        self.premises.push(Premise {
            statement: statement.into(),
            holds,
        });
        holds
    }

    fn conclude(mut self, c: Conclusion) -> Self {
        debug_assert!(self.premises.iter().all(|p| p.holds));
        self.conclusion = c;
        self
    }

    pub fn fired(&self) -> bool {
        self.conclusion != Conclusion::Inconclusive
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {:?}", self.theorem.tag(), self.conclusion)?;
        for p in &self.premises {
            writeln!(
                f,
                "  [{}] {}",
                if p.holds { "ok" } else { "no" },
                p.statement
            )?;
        }
        Ok(())
    }
}

/// Polytopality of an input, by the intersection property. A resource
/// error counts as not verified.
fn polytopal(r: &RotationSystem) -> bool {
    r.is_finite()
        && r.check_intersection_property()
            .map(|c| c.holds)
            .unwrap_or(false)
}

fn check_inputs(cert: &mut Certificate, r1: &RotationSystem, r2: &RotationSystem) -> bool {
    let a = cert.check(
        polytopal(r1),
        "first input satisfies the intersection property",
    );
    let b = cert.check(
        polytopal(r2),
        "second input satisfies the intersection property",
    );
    a && b
}

fn chirality_order(r: &RotationSystem, budget: usize) -> Result<u64> {
    match chirality_group(r, budget)?.order {
        ChiralityOrder::Finite(n) => Ok(n),
        _ => Err(Error::NotFinite),
    }
}

/// Coprime types: all entries coprime gives a polytope whose group is the
/// direct product; coprime middle entries (rank at least 4) give a polytope.
pub fn criterion_coprime(r1: &RotationSystem, r2: &RotationSystem) -> Result<Certificate> {
    if r1.rank() != r2.rank() {
        return Err(Error::RankMismatch(r1.rank(), r2.rank()));
    }
    let (t1, t2) = (r1.schlafli()?, r2.schlafli()?);
    let gcds: Vec<u64> = t1.iter().zip(&t2).map(|(&a, &b)| gcd(a, b)).collect();
    let n = r1.rank();
    let all = gcds.iter().all(|&g| g == 1);
    let middle = n >= 4 && gcds[1..n - 2].iter().all(|&g| g == 1);
    let mut cert = Certificate::new(if all {
        Theorem::CoprimeTypes
    } else {
        Theorem::CoprimeMiddleTypes
    });
    if all {
        cert.check(true, format!("types {t1:?} and {t2:?} have gcds {gcds:?}"));
    } else if !cert.check(
        middle,
        format!("types {t1:?} and {t2:?} have gcds {gcds:?}; middle entries coprime: {middle}"),
    ) {
        return Ok(cert);
    }
    if !check_inputs(&mut cert, r1, r2) {
        return Ok(cert);
    }
    if all {
        let m = mix(r1, r2)?.system.order().ok_or(Error::NotFinite)?;
        let (a, b) = (r1.order().unwrap(), r2.order().unwrap());
        if !cert.check(m == a * b, format!("|mix| = {m} = {a} * {b}")) {
            return Err(Error::Inconsistent(
                "coprime types but the mix is not the direct product".into(),
            ));
        }
    }
    Ok(cert.conclude(Conclusion::Polytopal))
}

/// Mixes of polyhedra are polyhedra.
pub fn criterion_polyhedra(r1: &RotationSystem, r2: &RotationSystem) -> Result<Certificate> {
    let mut cert = Certificate::new(Theorem::Polyhedra);
    if !cert.check(
        r1.rank() == 3 && r2.rank() == 3,
        format!("ranks {} and {}", r1.rank(), r2.rank()),
    ) {
        return Ok(cert);
    }
    if !check_inputs(&mut cert, r1, r2) {
        return Ok(cert);
    }
    Ok(cert.conclude(Conclusion::Polytopal))
}

/// Facets of one input covering the facets of the other, or the same for
/// vertex figures, gives a polytopal mix.
pub fn criterion_facets_cover(r1: &RotationSystem, r2: &RotationSystem) -> Result<Certificate> {
    if r1.rank() != r2.rank() {
        return Err(Error::RankMismatch(r1.rank(), r2.rank()));
    }
    let mut cert = Certificate::new(Theorem::FacetsCover);
    let found = if r1.rank() == 3 {
        // polygons: {p} covers {q} iff q divides p
        let (t1, t2) = (r1.schlafli()?, r2.schlafli()?);
        let f = t1[0] % t2[0] == 0 || t2[0] % t1[0] == 0;
        let v = t1[1] % t2[1] == 0 || t2[1] % t1[1] == 0;
        cert.check(
            f || v,
            format!(
                "facet orders {} and {}, vertex-figure orders {} and {}",
                t1[0], t2[0], t1[1], t2[1]
            ),
        )
    } else {
        let (f1, f2) = (r1.facets()?, r2.facets()?);
        let (v1, v2) = (r1.vertex_figures()?, r2.vertex_figures()?);
        let f = f1.covers(&f2)? || f2.covers(&f1)?;
        let v = !f && (v1.covers(&v2)? || v2.covers(&v1)?);
        cert.check(
            f || v,
            format!("facets cover: {f}; vertex figures cover: {v}"),
        )
    };
    if !found || !check_inputs(&mut cert, r1, r2) {
        return Ok(cert);
    }
    Ok(cert.conclude(Conclusion::Polytopal))
}

/// Tries the polytopality criteria in turn.
pub fn certify_polytopal(r1: &RotationSystem, r2: &RotationSystem) -> Result<Certificate> {
    let c = criterion_coprime(r1, r2)?;
    if c.fired() {
        return Ok(c);
    }
    let c = criterion_facets_cover(r1, r2)?;
    if c.fired() {
        return Ok(c);
    }
    criterion_polyhedra(r1, r2)
}

/// `|X(R1)|` not dividing `|Γ(R2)|` (or the other way round) makes the mix
/// chiral; so do totally chiral inputs of different orders.
pub fn criterion_chirality_divisibility(
    r1: &RotationSystem,
    r2: &RotationSystem,
    budget: usize,
) -> Result<Certificate> {
    let (a, b) = (
        r1.order().ok_or(Error::NotFinite)?,
        r2.order().ok_or(Error::NotFinite)?,
    );
    let (dr1, dr2) = (r1.is_directly_regular()?, r2.is_directly_regular()?);
    if dr1 && dr2 {
        return Err(Error::Precondition(
            "both inputs are directly regular".into(),
        ));
    }
    let mut cert = Certificate::new(Theorem::ChiralityDivisibility);
    cert.check(
        true,
        format!("not both directly regular (first: {dr1}, second: {dr2})"),
    );
    if !check_inputs(&mut cert, r1, r2) {
        return Ok(cert);
    }
    let x1 = chirality_order(r1, budget)?;
    if b % x1 != 0 {
        cert.check(
            true,
            format!("|X(first)| = {x1} does not divide |Γ(second)| = {b}"),
        );
        return Ok(cert.conclude(Conclusion::Chiral));
    }
    let x2 = chirality_order(r2, budget)?;
    if a % x2 != 0 {
        cert.check(
            true,
            format!("|X(second)| = {x2} does not divide |Γ(first)| = {a}"),
        );
        return Ok(cert.conclude(Conclusion::Chiral));
    }
    cert.check(
        false,
        format!("|X(first)| = {x1} divides {b} and |X(second)| = {x2} divides {a}"),
    );
    let mut cor = Certificate::new(Theorem::TotallyChiralOrders);
    cor.premises = cert.premises[..3].to_vec();
    let total = cor.check(
        x1 == a && x2 == b,
        format!("totally chiral: {} and {}", x1 == a, x2 == b),
    );
    if total && cor.check(a != b, format!("orders {a} and {b} differ")) {
        return Ok(cor.conclude(Conclusion::Chiral));
    }
    Ok(cert)
}

/// `|X(R1 ⋄ R2)|` is divisible by `|X(R1)|/gcd(|X(R1)|, |Γ(R2)|)` and by the
/// symmetric quantity. Cross-checked directly for small mixes.
pub fn chirality_lower_bound(
    r1: &RotationSystem,
    r2: &RotationSystem,
    budget: usize,
) -> Result<Certificate> {
    let (a, b) = (
        r1.order().ok_or(Error::NotFinite)?,
        r2.order().ok_or(Error::NotFinite)?,
    );
    let mut cert = Certificate::new(Theorem::ChiralityLowerBound);
    if !check_inputs(&mut cert, r1, r2) {
        return Ok(cert);
    }
    let (x1, x2) = (chirality_order(r1, budget)?, chirality_order(r2, budget)?);
    let (g1, g2) = (gcd(x1, b), gcd(x2, a));
    cert.check(
        true,
        format!("|X(first)| = {x1}, |Γ(second)| = {b}, g1 = {g1}"),
    );
    cert.check(
        true,
        format!("|X(second)| = {x2}, |Γ(first)| = {a}, g2 = {g2}"),
    );
    let (first, second) = (x1 / g1, x2 / g2);
    let m = mix(r1, r2)?.system;
    if m.order().is_some_and(|n| n <= CROSS_CHECK_BOUND) {
        let direct = chirality_order(&m, budget)?;
        if direct % first != 0 || direct % second != 0 {
            return Err(Error::Inconsistent(format!(
                "|X(mix)| = {direct} is not divisible by {first} and {second}"
            )));
        }
        cert.check(true, format!("direct computation: |X(mix)| = {direct}"));
    }
    Ok(cert.conclude(Conclusion::DividesBound { first, second }))
}

/// Order, simplicity and abelian invariants of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: u64,
    pub simple: Option<bool>,
    pub abelian_invariants: Option<Vec<u64>>,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order {}", self.order)?;
        match self.simple {
            Some(true) => write!(f, ", simple")?,
            Some(false) => write!(f, ", not simple")?,
            None => {}
        }
        if let Some(inv) = &self.abelian_invariants {
            write!(f, ", abelian invariants {inv:?}")?;
        }
        Ok(())
    }
}

impl Fingerprint {
    pub fn of(g: &PermutationGroup) -> Self {
        Fingerprint {
            order: g.order(),
            simple: g.is_simple(DEFAULT_SIMPLICITY_BOUND).ok(),
            abelian_invariants: g.abelian_invariants(10_000_000).ok(),
        }
    }

    /// Certainly not isomorphic. `false` means undecided.
    pub fn distinguishes(&self, other: &Fingerprint) -> bool {
        if self.order != other.order {
            return true;
        }
        if let (Some(a), Some(b)) = (self.simple, other.simple) {
            if a != b {
                return true;
            }
        }
        matches!((&self.abelian_invariants, &other.abelian_invariants), (Some(a), Some(b)) if a != b)
    }
}

fn chirality_equals(cert: Certificate, x: &PermutationGroup) -> Certificate {
    let fp = Fingerprint::of(x);
    cert.conclude(Conclusion::ChiralityGroupEquals {
        order: fp.order,
        abelian_invariants: fp.abelian_invariants.unwrap_or_default(),
        simple: fp.simple.unwrap_or(false),
    })
}

/// Cross-check `X(P ⋄ Q) = X(P)` by direct computation when affordable.
fn verify_transfer(
    cert: &mut Certificate,
    p: &RotationSystem,
    q: &RotationSystem,
    x: u64,
    budget: usize,
) -> Result<()> {
    let m = mix(p, q)?.system;
    if m.order().is_some_and(|n| n <= CROSS_CHECK_BOUND) {
        let direct = chirality_order(&m, budget)?;
        if direct != x {
            return Err(Error::Inconsistent(format!(
                "certificate says |X(mix)| = {x}, computed {direct}"
            )));
        }
        cert.check(true, format!("direct computation: |X(mix)| = {direct}"));
    }
    Ok(())
}

/// Simple `X(P)` not dividing `|Γ(Q)|` with `Q` directly regular: the mix is
/// chiral with `X(P ⋄ Q) = X(P)`.
pub fn criterion_simple_chirality(
    p: &RotationSystem,
    q: &RotationSystem,
    budget: usize,
) -> Result<Certificate> {
    let mut cert = Certificate::new(Theorem::SimpleChiralityGroup);
    let chiral = !p.is_directly_regular()?;
    if !cert.check(chiral, "first input is chiral") {
        return Ok(cert);
    }
    if !cert.check(q.is_directly_regular()?, "second input is directly regular") {
        return Ok(cert);
    }
    if !check_inputs(&mut cert, p, q) {
        return Ok(cert);
    }
    let x = chirality_subgroup(p, budget)?;
    let simple = x.is_simple(DEFAULT_SIMPLICITY_BOUND).unwrap_or(false);
    if !cert.check(
        simple,
        format!("X(first) of order {} is simple: {simple}", x.order()),
    ) {
        return Ok(cert);
    }
    let b = q.order().ok_or(Error::NotFinite)?;
    if !cert.check(
        b % x.order() != 0,
        format!("{} does not divide |Γ(second)| = {b}", x.order()),
    ) {
        return Ok(cert);
    }
    verify_transfer(&mut cert, p, q, x.order(), budget)?;
    Ok(chirality_equals(cert, &x))
}

/// `Q` with simple rotation group and `X(P)` not isomorphic to it. With `Q`
/// directly regular, `X(P ⋄ Q) = X(P)`; with `Q` chiral, the mix is chiral.
pub fn criterion_simple_rotation_group(
    p: &RotationSystem,
    q: &RotationSystem,
    budget: usize,
) -> Result<Certificate> {
    let q_regular = q.is_directly_regular()?;
    let mut cert = Certificate::new(if q_regular {
        Theorem::SimpleRotationGroupTransfer
    } else {
        Theorem::SimpleRotationGroupChiral
    });
    if !cert.check(!p.is_directly_regular()?, "first input is chiral") {
        return Ok(cert);
    }
    if !check_inputs(&mut cert, p, q) {
        return Ok(cert);
    }
    let gq = q.group()?;
    let simple = gq.is_simple(DEFAULT_SIMPLICITY_BOUND).unwrap_or(false);
    if !cert.check(
        simple,
        format!("Γ(second) of order {} is simple: {simple}", gq.order()),
    ) {
        return Ok(cert);
    }
    let x = chirality_subgroup(p, budget)?;
    let (fx, fq) = (Fingerprint::of(&x), Fingerprint::of(gq));
    if !cert.check(
        fx.distinguishes(&fq),
        format!("X(first) ({fx}) is certainly not isomorphic to Γ(second) ({fq})"),
    ) {
        return Ok(cert);
    }
    if q_regular {
        verify_transfer(&mut cert, p, q, x.order(), budget)?;
        Ok(chirality_equals(cert, &x))
    } else {
        Ok(cert.conclude(Conclusion::Chiral))
    }
}

/// For a chiral `K` with directly regular facets and finite `K □ K̄`: if the
/// last generator of `K` is trivial in `K □ K̄`, or equals the one before it,
/// the universal extension `U(K)` has an infinite chirality group, and so
/// does its mix with any finite directly regular polytope.
pub fn extension_chirality_hypothesis(k: &RotationSystem, budget: usize) -> Result<Certificate> {
    let mut cert = Certificate::new(Theorem::ExtensionChirality);
    let mirror = k.enantiomorph();
    if !k.is_finite() && !k.is_complete() {
        return Err(Error::Precondition(
            "K needs a realization or a complete presentation".into(),
        ));
    }
    if k.is_finite() && !cert.check(!k.is_directly_regular()?, "K is chiral") {
        return Ok(cert);
    }
    if k.is_finite() && !cert.check(polytopal(k), "K satisfies the intersection property") {
        return Ok(cert);
    }
    let regular_facets = k.rank() == 3 || k.facets()?.is_directly_regular()?;
    if !cert.check(regular_facets, "facets of K are directly regular") {
        return Ok(cert);
    }
    let c = comix(k, &mirror, budget)?;
    let Some(order) = c.order() else {
        return Err(Error::BudgetExhausted { budget });
    };
    if !k.is_finite() {
        // chirality of K itself is then read off the comix
        let kc = c.covers(k).unwrap_or(true);
        cert.check(!kc, "K is chiral");
    }
    cert.check(true, format!("|K □ K̄| = {order}"));
    let m = k.rank() - 1;
    let last = c.sigma(m)?;
    let trivial = last.is_identity();
    let equal = *last == *c.sigma(m - 1)?;
    if !cert.check(
        trivial || equal,
        format!(
            "in K □ K̄: s{m} = 1 is {trivial}, s{m} = s{} is {equal}",
            m - 1
        ),
    ) {
        return Ok(cert);
    }
    Ok(cert.conclude(Conclusion::InfiniteChiralityGroup {
        subjects: vec![
            "U(K)".into(),
            "U(K) ⋄ Q for every finite directly regular Q".into(),
        ],
    }))
}

/// For a finite totally chiral `K` with directly regular facets, builds
/// `Q = {K ⋄ K̄, 2}` and certifies that `U(K) ⋄ Q` is a chiral polytope with
/// directly regular facets.
pub fn pseudo_extension_setup(
    k: &RotationSystem,
    budget: usize,
) -> Result<(RotationSystem, Certificate)> {
    let mut cert = Certificate::new(Theorem::PseudoExtension);
    let order = k.order().ok_or(Error::NotFinite)?;
    cert.check(true, format!("K is finite of order {order}"));
    if !cert.check(polytopal(k), "K satisfies the intersection property") {
        return Err(Error::Precondition("K is not polytopal".into()));
    }
    let regular_facets = k.rank() == 3 || k.facets()?.is_directly_regular()?;
    if !cert.check(regular_facets, "facets of K are directly regular") {
        return Err(Error::Precondition("K has chiral facets".into()));
    }
    let x = chirality_order(k, budget)?;
    if !cert.check(
        x == order,
        format!("|X(K)| = {x} = |Γ(K)| (totally chiral)"),
    ) {
        return Err(Error::Precondition(format!(
            "K is not totally chiral: |X(K)| = {x}, |Γ(K)| = {order}"
        )));
    }
    let hyp = extension_chirality_hypothesis(k, budget)?;
    for p in &hyp.premises {
        cert.check(p.holds, format!("extension hypothesis: {}", p.statement));
    }
    if !hyp.fired() {
        return Err(Error::Inconsistent(
            "totally chiral K fails the extension hypothesis".into(),
        ));
    }
    let cover = minimal_regular_cover(k)?;
    cert.check(
        cover.is_directly_regular()?,
        format!(
            "K ⋄ K̄ of order {} is directly regular",
            cover.order().unwrap_or(0)
        ),
    );
    let q = trivial_extension(&cover)?;
    let ty = q.schlafli()?;
    if !cert.check(ty.last() == Some(&2), format!("Q has type {ty:?}")) {
        return Err(Error::Inconsistent(
            "trivial extension does not end in 2".into(),
        ));
    }
    cert.check(q.is_directly_regular()?, "Q is directly regular");
    let qf = q.facets()?;
    let covers = qf.covers(k)?;
    if !cert.check(covers, "facets of Q cover K, the facets of U(K)") {
        return Err(Error::Inconsistent("facets of Q do not cover K".into()));
    }
    let cert = cert.conclude(Conclusion::ChiralWithRegularFacets {
        subject: "U(K) ⋄ Q".into(),
    });
    Ok((q, cert))
}

/// Both sides of: `R1 ⋄ R2` is directly regular iff it covers `R1 ⋄ R̄1`
/// and `R2 ⋄ R̄2`. Errors if they disagree.
pub fn regular_mix_equivalence(r1: &RotationSystem, r2: &RotationSystem) -> Result<(bool, bool)> {
    let m = mix(r1, r2)?.system;
    let regular = m.is_directly_regular()?;
    let c1 = minimal_regular_cover(r1)?;
    let c2 = minimal_regular_cover(r2)?;
    let covers = m.covers(&c1)? && m.covers(&c2)?;
    if regular != covers {
        return Err(Error::Inconsistent(format!(
            "mix directly regular: {regular}, covers both regular covers: {covers}"
        )));
    }
    Ok((regular, covers))
}

/// The toroid-mixing instance: for primes `s` not dividing `|X(P)|`, the
/// divisibility criterion against the cubic toroid `Q(s,k)`.
pub fn toroid_mixing(
    p: &RotationSystem,
    q: &RotationSystem,
    s: u64,
    k: u32,
    budget: usize,
) -> Result<Certificate> {
    let n = p.rank() as u32;
    let mut cert = Certificate::new(Theorem::ToroidMixing);
    let x = chirality_order(p, budget)?;
    let base = crate::catalog::cubic_toroid_full_order(n, 1, k);
    if !cert.check(
        !base.is_multiple_of(x),
        format!("|X(P)| = {x} does not divide 2^(n+k-2) (n-1)! = {base}"),
    ) {
        return Ok(cert);
    }
    if !cert.check(
        crate::perm::is_prime(s) && x % s != 0,
        format!("s = {s} is a prime not dividing {x}"),
    ) {
        return Ok(cert);
    }
    let b = q.order().ok_or(Error::NotFinite)?;
    let stated = crate::catalog::cubic_toroid_full_order(n, s, k);
    cert.check(
        true,
        format!("|Γ(Q)| = {b}; 2^(n+k-2) (n-1)! s^(n-1) = {stated}"),
    );
    if !cert.check(q.is_directly_regular()?, "Q is directly regular") {
        return Ok(cert);
    }
    if !cert.check(!p.is_directly_regular()?, "P is chiral") {
        return Ok(cert);
    }
    if !cert.check(
        b % x != 0 && !stated.is_multiple_of(x),
        format!("{x} divides neither {b} nor {stated}"),
    ) {
        return Ok(cert);
    }
    Ok(cert.conclude(Conclusion::Chiral))
}
