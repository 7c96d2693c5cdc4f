//! Rotation systems: a presentation over `s1..s(n-1)` together with a
//! faithful permutation realization of the group it defines, when finite.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fp::{
    todd_coxeter, todd_coxeter_with, CosetTable, FpGroup, Letter, Presentation, Strategy, Word,
};
use crate::perm::{Perm, PermutationGroup};

/// Budget cap for the auxiliary enumeration of a vertex-figure section.
const SECTION_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Finite,
    Unknown,
}

/// A rotation group `W+/M` of rank `n`.
///
/// `pres` always lists relators that hold in the group. It is `complete` when
/// it presents the group exactly; mixes and sections carry only the
/// relators known to hold. When finite, the realization's generators are the
/// images of `s1..s(n-1)` in order.
#[derive(Clone, Debug)]
pub struct RotationSystem {
    pres: Presentation,
    complete: bool,
    group: Option<Arc<PermutationGroup>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceData {
    pub schlafli: Vec<u64>,
    pub face_vector: Vec<u64>,
    pub flags: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntersectionMethod {
    Exhaustive,
    Inductive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionCheck {
    pub holds: bool,
    pub method: IntersectionMethod,
    /// A pair `(I, J)` of subsets of `{0..n-1}` with
    /// `G_I ∩ G_J != G_(I∩J)`. The dummy indices `-1` and `n` never
    /// change `G_I` and are left out.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

impl RotationSystem {
    /// Build from relators, enumerating cosets to find a realization. An
    /// enumeration that runs out of budget gives an `Unknown` system.
    pub fn make(
        rank: usize,
        relators: impl IntoIterator<Item = Word>,
        budget: usize,
    ) -> Result<Self> {
        RotationSystem::from_presentation(Presentation::new(rank, relators)?, budget)
    }

    pub fn from_presentation(pres: Presentation, budget: usize) -> Result<Self> {
        let group = realize(&pres, budget)?.map(Arc::new);
        Ok(RotationSystem {
            pres,
            complete: true,
            group,
        })
    }

    /// A system given by generator images. `pres` must hold in the
    /// realization (checked); `complete` says whether it presents it.
    pub fn from_realization(
        pres: Presentation,
        complete: bool,
        sigma: Vec<Perm>,
        order: Option<u64>,
    ) -> Result<Self> {
        if sigma.len() != pres.ngens() {
            return Err(Error::RankMismatch(pres.rank(), sigma.len() + 1));
        }
        let degree = sigma.first().map_or(0, |p| p.degree());
        if let Some(p) = sigma.iter().find(|p| p.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, p.degree()));
        }
        let group = match order {
            Some(n) => PermutationGroup::with_known_order(degree, sigma, n),
            None => PermutationGroup::new(degree, sigma),
        };
        let sys = RotationSystem {
            pres,
            complete,
            group: Some(Arc::new(group)),
        };
        for r in sys.pres.to_fp().relators {
            if !sys.eval(&r)?.is_identity() {
                return Err(Error::Inconsistent(format!(
                    "relator {r} fails in the realization"
                )));
            }
        }
        Ok(sys)
    }

    /// Symbolic system: no realization attempted.
    pub fn symbolic(pres: Presentation, complete: bool) -> Self {
        RotationSystem {
            pres,
            complete,
            group: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.pres.rank()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn status(&self) -> Status {
        if self.group.is_some() {
            Status::Finite
        } else {
            Status::Unknown
        }
    }

    pub fn is_finite(&self) -> bool {
        self.group.is_some()
    }

    pub fn realization(&self) -> Option<&PermutationGroup> {
        self.group.as_deref()
    }

    /// The realization, or `NotFinite` for unknown systems.
    pub fn group(&self) -> Result<&PermutationGroup> {
        self.group.as_deref().ok_or(Error::NotFinite)
    }

    pub fn order(&self) -> Option<u64> {
        self.group.as_ref().map(|g| g.order())
    }

    pub fn degree(&self) -> Option<usize> {
        self.group.as_ref().map(|g| g.degree())
    }

    /// Image of `s_i`, `1 <= i <= n-1`.
    pub fn sigma(&self, i: usize) -> Result<&Perm> {
        let g = self.group()?;
        if i == 0 || i > g.generators().len() {
            return Err(Error::Index(format!(
                "s{i} out of range for rank {}",
                self.rank()
            )));
        }
        Ok(&g.generators()[i - 1])
    }

    pub fn sigmas(&self) -> Result<&[Perm]> {
        Ok(self.group()?.generators())
    }

    /// Value of a word in the realization.
    pub fn eval(&self, w: &Word) -> Result<Perm> {
        let g = self.group()?;
        let mut acc = Perm::identity(g.degree());
        for l in w.letters() {
            let s = g
                .generators()
                .get(l.gen() as usize - 1)
                .ok_or(Error::GeneratorOutOfRange {
                    gen: l.gen(),
                    rank: self.rank(),
                })?;
            acc = if l.is_inverse() {
                acc.mul(&s.inverse())
            } else {
                acc.mul(s)
            };
        }
        Ok(acc)
    }

    /// `τ_{i,j} = s_i s_(i+1) ... s_j`; `τ_{0,j}` and `τ_{i,n}` are the identity.
    pub fn tau(&self, i: usize, j: usize) -> Result<Perm> {
        self.eval(&tau_word(self.rank(), i, j)?)
    }

    /// Schläfli type: the orders of the `s_i`.
    pub fn schlafli(&self) -> Result<Vec<u64>> {
        Ok(self.sigmas()?.iter().map(|s| s.order()).collect())
    }

    /// `G_I = <τ_{i,j} : i <= j, i-1 ∈ I, j ∈ I>` for `I ⊆ {-1, 0, .., n}`.
    pub fn subgroup_gi(&self, set: &[i64]) -> Result<PermutationGroup> {
        let n = self.rank() as i64;
        if let Some(&x) = set.iter().find(|&&x| x < -1 || x > n) {
            return Err(Error::Index(format!("index {x} outside -1..={n}")));
        }
        let mut mask = 0u32;
        for &x in set {
            if (0..n).contains(&x) {
                mask |= 1 << x;
            }
        }
        self.subgroup_mask(mask)
    }

    /// `G_I` with `I ∩ {0..n-1}` given as a bit mask.
    fn subgroup_mask(&self, mask: u32) -> Result<PermutationGroup> {
        let g = self.group()?;
        if mask == (1 << self.rank()) - 1 {
            return Ok(g.clone());
        }
        let m = self.rank() - 1;
        let mut gens = Vec::new();
        for a in 1..=m {
            for b in a..=m {
                if mask & (1 << (a - 1)) != 0 && mask & (1 << b) != 0 {
                    let t = self.tau(a, b)?;
                    if !t.is_identity() && !gens.contains(&t) {
                        gens.push(t);
                    }
                }
            }
        }
        Ok(PermutationGroup::new(g.degree(), gens))
    }

    /// Subsystem on `s_lo..=s_hi`, renumbered from 1, realized inside the
    /// same permutation domain.
    pub fn section(&self, lo: usize, hi: usize) -> Result<RotationSystem> {
        if lo < 1 || hi >= self.rank() || hi < lo + 1 {
            return Err(Error::Index(format!(
                "section s{lo}..s{hi} of rank {}",
                self.rank()
            )));
        }
        let pres = self.pres.section(lo as u32, hi as u32)?;
        match &self.group {
            Some(g) => {
                let sigma = g.generators()[lo - 1..hi].to_vec();
                RotationSystem::from_realization(pres, false, sigma, None)
            }
            None => Ok(RotationSystem::symbolic(pres, false)),
        }
    }

    /// Facet subsystem `<s1..s(n-2)>`.
    pub fn facets(&self) -> Result<RotationSystem> {
        self.section(1, self.rank() - 2)
    }

    /// Vertex-figure subsystem `<s2..s(n-1)>`.
    pub fn vertex_figures(&self) -> Result<RotationSystem> {
        self.section(2, self.rank() - 1)
    }

    /// Exhaustive up to rank 4; above that the inductive test, falling back
    /// to the exhaustive one when it is inconclusive.
    pub fn check_intersection_property(&self) -> Result<IntersectionCheck> {
        if self.rank() <= 4 {
            return self.intersection_exhaustive();
        }
        match self.intersection_inductive()? {
            Some(c) => Ok(c),
            None => self.intersection_exhaustive(),
        }
    }

    pub fn check_intersection_property_with(
        &self,
        method: IntersectionMethod,
    ) -> Result<IntersectionCheck> {
        match method {
            IntersectionMethod::Exhaustive => self.intersection_exhaustive(),
            IntersectionMethod::Inductive => match self.intersection_inductive()? {
                Some(c) => Ok(c),
                None => Ok(IntersectionCheck {
                    holds: false,
                    method,
                    witness: None,
                }),
            },
        }
    }

    /// All pairs of subsets of `{0..n-1}`, skipping nested pairs and
    /// counting each unordered pair once.
    pub fn intersection_exhaustive(&self) -> Result<IntersectionCheck> {
        let n = self.rank();
        let subsets = 1u32 << n;
        let mut cache: Vec<Option<PermutationGroup>> = vec![None; subsets as usize];
        let get =
            |mask: u32, cache: &mut Vec<Option<PermutationGroup>>| -> Result<PermutationGroup> {
                if cache[mask as usize].is_none() {
                    cache[mask as usize] = Some(self.subgroup_mask(mask)?);
                }
                Ok(cache[mask as usize].clone().unwrap())
            };
        for i in 0..subsets {
            for j in i + 1..subsets {
                if i & j == i || i & j == j {
                    continue;
                }
                let gi = get(i, &mut cache)?;
                let gj = get(j, &mut cache)?;
                let gij = get(i & j, &mut cache)?;
                let meet = gi.intersection(&gj)?;
                if meet.order() != gij.order() {
                    return Ok(IntersectionCheck {
                        holds: false,
                        method: IntersectionMethod::Exhaustive,
                        witness: Some((mask_to_vec(i, n), mask_to_vec(j, n))),
                    });
                }
            }
        }
        Ok(IntersectionCheck {
            holds: true,
            method: IntersectionMethod::Exhaustive,
            witness: None,
        })
    }

    /// Facets and vertex figures polytopal and
    /// `<s1..s(n-2)> ∩ <s2..s(n-1)> = <s2..s(n-2)>`. `None` when some part fails,
    /// which proves nothing.
    pub fn intersection_inductive(&self) -> Result<Option<IntersectionCheck>> {
        let n = self.rank();
        if n < 4 {
            return Ok(None);
        }
        if !self.facets()?.check_intersection_property()?.holds
            || !self.vertex_figures()?.check_intersection_property()?.holds
        {
            return Ok(None);
        }
        let g = self.group()?;
        let s = g.generators();
        let a = PermutationGroup::new(g.degree(), s[..n - 2].to_vec());
        let b = PermutationGroup::new(g.degree(), s[1..].to_vec());
        let c = PermutationGroup::new(g.degree(), s[1..n - 2].to_vec());
        if a.intersection(&b)?.order() != c.order() {
            return Ok(None);
        }
        Ok(Some(IntersectionCheck {
            holds: true,
            method: IntersectionMethod::Inductive,
            witness: None,
        }))
    }

    /// Type, face counts and flag count. Refuses systems failing the
    /// intersection property unless `allow_nonpolytopal`.
    pub fn face_data(&self, allow_nonpolytopal: bool) -> Result<FaceData> {
        let g = self.group()?;
        if !allow_nonpolytopal {
            let check = self.check_intersection_property()?;
            if !check.holds {
                let (i, j) = check.witness.unwrap_or_default();
                return Err(Error::NotPolytopal(format!(
                    "intersection property fails at I = {i:?}, J = {j:?}"
                )));
            }
        }
        Ok(self.face_data_unchecked(g))
    }

    fn face_data_unchecked(&self, g: &PermutationGroup) -> FaceData {
        let n = self.rank();
        let order = g.order();
        let full = (1u32 << n) - 1;
        let face_vector = (0..n)
            .map(|i| {
                order
                    / self
                        .subgroup_mask(full & !(1 << i))
                        .expect("finite")
                        .order()
            })
            .collect();
        FaceData {
            schlafli: g.generators().iter().map(|s| s.order()).collect(),
            face_vector,
            flags: 2 * order,
        }
    }

    /// Mirror image: relators replaced by their mirror words, generators by
    /// `s1^-1, s1^2 s2, s3, ..`.
    pub fn enantiomorph(&self) -> RotationSystem {
        let group = self.group.as_ref().map(|g| {
            let s = g.generators();
            let mut m = s.to_vec();
            m[0] = s[0].inverse();
            m[1] = s[0].mul(&s[0]).mul(&s[1]);
            Arc::new(relabel(g, m))
        });
        RotationSystem {
            pres: self.pres.enantiomorph(),
            complete: self.complete,
            group,
        }
    }

    /// Dual: `s_i -> s_(n-i)^-1`.
    pub fn dual(&self) -> RotationSystem {
        let group = self.group.as_ref().map(|g| {
            let s = g.generators();
            let m = (0..s.len()).map(|i| s[s.len() - 1 - i].inverse()).collect();
            Arc::new(relabel(g, m))
        });
        RotationSystem {
            pres: self.pres.dual(),
            complete: self.complete,
            group,
        }
    }

    /// Whether the mirror map `s1 -> s1^-1, s2 -> s1^2 s2` extends to an
    /// automorphism. With a complete presentation this is checked on the
    /// mirrored relators, otherwise by comparing `|R ⋄ R̄|` with `|R|`.
    pub fn is_directly_regular(&self) -> Result<bool> {
        let g = self.group()?;
        if self.complete {
            for r in self.pres.enantiomorph().relators() {
                if !self.eval(r)?.is_identity() {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let mirror = self.enantiomorph();
        Ok(crate::mixer::diagonal_group(g, mirror.group()?).order() == g.order())
    }

    /// Does `self` cover `other`, i.e. do the relations of `self` hold in
    /// `other`? `other` must be finite; when `self` is not completely
    /// presented it must be finite too.
    pub fn covers(&self, other: &RotationSystem) -> Result<bool> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let target = other.group()?;
        if self.complete {
            for r in self.pres.relators() {
                if !other.eval(r)?.is_identity() {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let g = self.group().map_err(|_| {
            Error::Precondition(
                "cover test needs a complete presentation or a finite realization".into(),
            )
        })?;
        Ok(crate::mixer::diagonal_group(g, target).order() == g.order())
    }

    /// Shows `self` does not cover `other` (possibly infinite) using a finite
    /// quotient `witness` of `other` in which some relation of `self` fails.
    /// `Ok(true)` means refuted; `Ok(false)` means this witness says nothing.
    pub fn refute_cover(&self, other: &RotationSystem, witness: &RotationSystem) -> Result<bool> {
        if !other.is_complete() {
            return Err(Error::Precondition(
                "the covered system needs a complete presentation".into(),
            ));
        }
        if !other.covers(witness)? {
            return Err(Error::Precondition(
                "the witness is not a quotient of the covered system".into(),
            ));
        }
        Ok(!self.covers(witness)?)
    }
}

fn relabel(g: &PermutationGroup, gens: Vec<Perm>) -> PermutationGroup {
    match g.known_order() {
        Some(n) => PermutationGroup::with_known_order(g.degree(), gens, n),
        None => PermutationGroup::new(g.degree(), gens),
    }
}

fn mask_to_vec(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask & (1 << i) != 0).collect()
}

/// The word `τ_{i,j}`.
pub fn tau_word(rank: usize, i: usize, j: usize) -> Result<Word> {
    if i > j || j > rank {
        return Err(Error::Index(format!("τ_{{{i},{j}}} for rank {rank}")));
    }
    if i == 0 || j == rank {
        return Ok(Word::identity());
    }
    Ok(Word::from_letters(
        (i..=j).map(|g| Letter::new(g as u32, false)),
    ))
}

/// Even word in the reflections `ρ_0..ρ_(n-1)` rewritten over the `s_i`
/// using `ρ_a ρ_b = τ_{a+1,b}` for `a < b`.
pub fn reflection_to_rotation_word(rho: &[u32]) -> Result<Word> {
    if rho.len() % 2 == 1 {
        return Err(Error::OddReflectionWord(rho.len()));
    }
    let mut w = Word::identity();
    for pair in rho.chunks(2) {
        let (a, b) = (pair[0], pair[1]);
        let piece = match a.cmp(&b) {
            std::cmp::Ordering::Less => {
                Word::from_letters((a + 1..=b).map(|g| Letter::new(g, false)))
            }
            std::cmp::Ordering::Greater => {
                Word::from_letters((b + 1..=a).map(|g| Letter::new(g, false))).inverse()
            }
            std::cmp::Ordering::Equal => Word::identity(),
        };
        w = w.mul(&piece);
    }
    Ok(w)
}

/// The subgroup `<s_lo..s_hi>` as a standalone presentation: relators of
/// `pres` on those generators, renumbered, plus their string relations.
fn section_fp(pres: &Presentation, lo: u32, hi: u32) -> FpGroup {
    let mut relators: Vec<Word> = pres
        .relators()
        .iter()
        .filter(|r| r.letters().iter().all(|l| l.gen() >= lo && l.gen() <= hi))
        .map(|r| r.substitute(|g| Word::gen(g - lo + 1)))
        .collect();
    relators.extend(Presentation::string_relators((hi - lo + 2) as usize));
    FpGroup {
        ngens: (hi - lo + 1) as usize,
        relators,
    }
}

fn table_perms(table: &CosetTable, ngens: usize) -> Vec<Perm> {
    (1..=ngens as u32)
        .map(|g| Perm::from_images(table.action(g)))
        .collect()
}

/// Faithful permutation realization of the group `pres` defines, or `None`
/// if enumeration runs out of budget.
///
/// First the action on cosets of `H = <s2..s(n-1)>`: if `H` acts on the
/// vertex cosets with the order of the vertex-figure section, the action
/// is faithful of order `index * |H|` by orbit-stabilizer. Otherwise the
/// regular enumeration gives the order and the smallest faithful action
/// among vertices, facets and their union is kept.
fn realize(pres: &Presentation, budget: usize) -> Result<Option<PermutationGroup>> {
    let fp = pres.to_fp();
    let n = pres.rank() as u32;
    let ngens = fp.ngens;
    let vertex_sub: Vec<Word> = (2..n).map(Word::gen).collect();
    let vt = todd_coxeter(&fp, &vertex_sub, budget);
    if let Some(m) = vt.index() {
        let bound =
            todd_coxeter(&section_fp(pres, 2, n - 1), &[], budget.min(SECTION_BUDGET)).index();
        if let Some(b) = bound {
            let perms = table_perms(&vt, ngens);
            let stab = PermutationGroup::new(m, perms[1..].to_vec());
            if stab.order() == b as u64 {
                return Ok(Some(PermutationGroup::with_known_order(
                    m,
                    perms,
                    (m * b) as u64,
                )));
            }
        }
    }
    let regular = todd_coxeter(&fp, &[], budget);
    let Some(order) = regular.index() else {
        return Ok(None);
    };
    let order = order as u64;
    let mut candidates: Vec<Vec<Perm>> = Vec::new();
    let vertex = vt.index().map(|_| table_perms(&vt, ngens));
    let facet_sub: Vec<Word> = (1..n - 1).map(Word::gen).collect();
    let ft = todd_coxeter(&fp, &facet_sub, budget);
    let facet = ft.index().map(|_| table_perms(&ft, ngens));
    if let Some(v) = &vertex {
        candidates.push(v.clone());
    }
    if let Some(f) = &facet {
        candidates.push(f.clone());
    }
    if let (Some(v), Some(f)) = (&vertex, &facet) {
        candidates.push(v.iter().zip(f).map(|(a, b)| a.direct_sum(b)).collect());
    }
    candidates.sort_by_key(|c| c[0].degree());
    for c in candidates {
        let deg = c[0].degree();
        if (deg as u64) < order
            && crate::perm::StabChain::with_known_order(deg, &c, &[], order).is_some()
        {
            return Ok(Some(PermutationGroup::with_known_order(deg, c, order)));
        }
    }
    Ok(Some(PermutationGroup::with_known_order(
        order as usize,
        table_perms(&regular, ngens),
        order,
    )))
}

/// Order of the group `pres` defines, by a second enumeration with the
/// reversed strategy. Used as an independent check.
pub fn independent_order(pres: &Presentation, budget: usize) -> Option<u64> {
    todd_coxeter_with(&pres.to_fp(), &[], budget, Strategy::HltReversed)
        .index()
        .map(|i| i as u64)
}
