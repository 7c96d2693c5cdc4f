//! Permutations, stabilizer chains and permutation groups.

mod chain;
mod group;
#[allow(clippy::module_inception)]
mod perm;

pub use chain::StabChain;
pub use group::{
    intersection_by_backtrack, intersection_by_cosets, is_prime, PermutationGroup,
    DEFAULT_COSET_INDEX_BOUND, DEFAULT_SIMPLICITY_BOUND,
};
pub use perm::{gcd, lcm, Perm};
