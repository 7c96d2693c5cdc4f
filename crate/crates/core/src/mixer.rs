//! Mix and comix of rotation systems, and chirality groups.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fp::{Presentation, Word};
use crate::perm::{Perm, PermutationGroup, StabChain, DEFAULT_SIMPLICITY_BOUND};
use crate::rotation::RotationSystem;

/// Largest quotient realized by its regular action on cosets.
const QUOTIENT_BOUND: u64 = 10_000_000;

/// Subgroup of `A × B` generated by the pairs of corresponding generators,
/// acting on the disjoint union of the two domains.
pub fn diagonal_group(a: &PermutationGroup, b: &PermutationGroup) -> PermutationGroup {
    let gens = a
        .generators()
        .iter()
        .zip(b.generators())
        .map(|(x, y)| x.direct_sum(y))
        .collect();
    PermutationGroup::new(a.degree() + b.degree(), gens)
}

#[derive(Clone, Debug)]
pub struct MixResult {
    pub system: RotationSystem,
    /// Domain sizes of the two factors inside the mix domain; zero when the
    /// mix is symbolic.
    pub left_degree: usize,
    pub right_degree: usize,
}

impl MixResult {
    /// Image of a mix element in the first factor.
    pub fn project_left(&self, g: &Perm) -> Perm {
        g.restrict(0, self.left_degree)
    }

    pub fn project_right(&self, g: &Perm) -> Perm {
        g.restrict(self.left_degree, self.right_degree)
    }
}

/// `R1 ⋄ R2`. For finite factors the realization is the diagonal subgroup
/// of the direct product; its presentation lists the factor relators that
/// hold in both and is never complete.
pub fn mix(r1: &RotationSystem, r2: &RotationSystem) -> Result<MixResult> {
    if r1.rank() != r2.rank() {
        return Err(Error::RankMismatch(r1.rank(), r2.rank()));
    }
    let (Some(a), Some(b)) = (r1.realization(), r2.realization()) else {
        return Ok(MixResult {
            system: RotationSystem::symbolic(Presentation::universal(r1.rank())?, false),
            left_degree: 0,
            right_degree: 0,
        });
    };
    let mut shared: Vec<Word> = Vec::new();
    for r in r1.presentation().relators() {
        if r2.eval(r)?.is_identity() {
            shared.push(r.clone());
        }
    }
    for r in r2.presentation().relators() {
        if r1.eval(r)?.is_identity() {
            shared.push(r.clone());
        }
    }
    let pres = Presentation::new(r1.rank(), shared)?;
    let d = diagonal_group(a, b);
    let sigma = d.generators().to_vec();
    let system = RotationSystem::from_realization(pres, false, sigma, None)?;
    Ok(MixResult {
        system,
        left_degree: a.degree(),
        right_degree: b.degree(),
    })
}

/// The normal subgroup `N` of `Γ(R1)` with `Γ(R1)/N = Γ(R1) □ Γ(R2)`: the
/// kernel of the mix onto `R2`, projected into `R1`.
pub fn comix_kernel(r1: &RotationSystem, r2: &RotationSystem) -> Result<PermutationGroup> {
    let a = r1.group()?;
    let b = r2.group()?;
    let d = diagonal_group(a, b);
    let (da, db) = (a.degree(), b.degree());
    let prefix: Vec<u32> = (da..da + db).map(|x| x as u32).collect();
    let order = d.order();
    let chain = StabChain::with_known_order(da + db, d.generators(), &prefix, order)
        .unwrap_or_else(|| StabChain::build(da + db, d.generators(), &prefix));
    let gens: Vec<Perm> = chain
        .stabilizer_generators(db)
        .iter()
        .map(|g| g.restrict(0, da))
        .filter(|g| !g.is_identity())
        .collect();
    let kernel_order = order / b.order();
    Ok(PermutationGroup::with_known_order(da, gens, kernel_order))
}

/// Generator images of `G/N` in its regular action on the cosets of `N`.
pub fn quotient_action(g: &PermutationGroup, n: &PermutationGroup) -> Result<Vec<Perm>> {
    let index = g.order() / n.order();
    if index > QUOTIENT_BOUND {
        return Err(Error::Resource(format!(
            "quotient of order {index} exceeds {QUOTIENT_BOUND}"
        )));
    }
    let chain = n.chain();
    let id = Perm::identity(g.degree());
    let mut seen: HashMap<Vec<u32>, u32> = HashMap::new();
    seen.insert(chain.coset_key(&id), 0);
    let mut reps = vec![id];
    let k = g.generators().len();
    let mut images: Vec<Vec<u32>> = vec![Vec::with_capacity(index as usize); k];
    let mut c = 0;
    while c < reps.len() {
        for (i, x) in g.generators().iter().enumerate() {
            let h = reps[c].mul(x);
            let key = chain.coset_key(&h);
            let next = seen.len() as u32;
            let t = *seen.entry(key).or_insert(next);
            if t == next {
                reps.push(h);
            }
            images[i].push(t);
        }
        c += 1;
    }
    if reps.len() as u64 != index {
        return Err(Error::Inconsistent(format!(
            "{} cosets, expected {index}",
            reps.len()
        )));
    }
    Ok(images.into_iter().map(Perm::from_images).collect())
}

/// `R1 □ R2`. Completely presented inputs are comixed by uniting their
/// relators and enumerating; otherwise both must be finite and the comix is
/// realized as a quotient of `R1`.
pub fn comix(r1: &RotationSystem, r2: &RotationSystem, budget: usize) -> Result<RotationSystem> {
    if r1.rank() != r2.rank() {
        return Err(Error::RankMismatch(r1.rank(), r2.rank()));
    }
    let pres = r1.presentation().union(r2.presentation())?;
    if r1.is_complete() && r2.is_complete() {
        return RotationSystem::from_presentation(pres, budget);
    }
    if !(r1.is_finite() && r2.is_finite()) {
        return Err(Error::Precondition(
            "comix of a system without a complete presentation needs finite realizations".into(),
        ));
    }
    let g = r1.group()?;
    let n = comix_kernel(r1, r2)?;
    let sigma = quotient_action(g, &n)?;
    RotationSystem::from_realization(pres, false, sigma, Some(g.order() / n.order()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductFormula {
    pub mix: u64,
    pub comix: u64,
    pub left: u64,
    pub right: u64,
}

impl ProductFormula {
    pub fn holds(&self) -> bool {
        self.mix as u128 * self.comix as u128 == self.left as u128 * self.right as u128
    }
}

/// `|R1 ⋄ R2| · |R1 □ R2| = |R1| · |R2|`, with the comix computed
/// independently of the mix whenever both presentations are complete.
pub fn verify_product_formula(
    r1: &RotationSystem,
    r2: &RotationSystem,
    budget: usize,
) -> Result<ProductFormula> {
    let left = r1.order().ok_or(Error::NotFinite)?;
    let right = r2.order().ok_or(Error::NotFinite)?;
    let m = mix(r1, r2)?.system.order().ok_or(Error::NotFinite)?;
    let c = comix(r1, r2, budget)?;
    let comix = c.order().ok_or(Error::BudgetExhausted { budget })?;
    let pf = ProductFormula {
        mix: m,
        comix,
        left,
        right,
    };
    if !pf.holds() {
        return Err(Error::Inconsistent(format!(
            "product formula fails: {m} * {comix} != {left} * {right}"
        )));
    }
    Ok(pf)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiralityOrder {
    Finite(u64),
    /// Only ever set by a certificate, never by computation.
    Infinite,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiralityReport {
    pub order: ChiralityOrder,
    /// `|R □ R̄|`, the order of the maximal directly regular quotient.
    pub quotient_order: Option<u64>,
    pub abelian_invariants: Option<Vec<u64>>,
    pub simple: Option<bool>,
    pub totally_chiral: Option<bool>,
    /// Name guessed from order and simplicity alone.
    pub label_heuristic: Option<String>,
}

/// `X(R)` as a subgroup of the realization. With a complete presentation it
/// is the normal closure of the mirrored relators, checked against an
/// enumeration of `R □ R̄`; otherwise the mix route of [`comix_kernel`].
pub fn chirality_subgroup(r: &RotationSystem, budget: usize) -> Result<PermutationGroup> {
    let g = r.group()?;
    let mirror = r.enantiomorph();
    if r.is_complete() {
        let images = mirror
            .presentation()
            .relators()
            .iter()
            .map(|w| r.eval(w))
            .collect::<Result<Vec<_>>>()?;
        let q = comix(r, &mirror, budget)?
            .order()
            .ok_or(Error::BudgetExhausted { budget })?;
        return g.kernel(&images, Some(q));
    }
    comix_kernel(r, &mirror)
}

pub fn chirality_group(r: &RotationSystem, budget: usize) -> Result<ChiralityReport> {
    if !r.is_finite() {
        let q = comix(r, &r.enantiomorph(), budget)?.order();
        return Ok(ChiralityReport {
            order: ChiralityOrder::Unknown,
            quotient_order: q,
            abelian_invariants: None,
            simple: None,
            totally_chiral: None,
            label_heuristic: None,
        });
    }
    let g = r.group()?;
    let x = chirality_subgroup(r, budget)?;
    let order = x.order();
    let invariants = x.abelian_invariants(QUOTIENT_BOUND).ok();
    let simple = x.is_simple(DEFAULT_SIMPLICITY_BOUND).ok();
    Ok(ChiralityReport {
        order: ChiralityOrder::Finite(order),
        quotient_order: Some(g.order() / order),
        label_heuristic: label(order, simple, invariants.as_deref()),
        abelian_invariants: invariants,
        simple,
        totally_chiral: Some(order == g.order()),
    })
}

fn label(order: u64, simple: Option<bool>, invariants: Option<&[u64]>) -> Option<String> {
    if order == 1 {
        return Some("1".into());
    }
    if let Some([m]) = invariants {
        if *m == order {
            return Some(format!("C{order}"));
        }
    }
    if simple != Some(true) {
        return None;
    }
    let name = match order {
        60 => "A5",
        168 => "PSL(2,7)",
        360 => "A6",
        504 => "PSL(2,8)",
        660 => "PSL(2,11)",
        1092 => "PSL(2,13)",
        2448 => "PSL(2,17)",
        2520 => "A7",
        _ => return None,
    };
    Some(name.into())
}

/// `R ⋄ R̄`.
pub fn minimal_regular_cover(r: &RotationSystem) -> Result<RotationSystem> {
    Ok(mix(r, &r.enantiomorph())?.system)
}

/// `R □ R̄`.
pub fn maximal_regular_quotient(r: &RotationSystem, budget: usize) -> Result<RotationSystem> {
    comix(r, &r.enantiomorph(), budget)
}
