//! Finitely presented substrate: words, presentations over the universal
//! string rotation group, coset enumeration and abelian invariants.

mod abelian;
mod coset;
mod presentation;
mod word;

pub use abelian::{
    abelian_invariants, fp_abelian_invariants, invariants_from_relations, smith_diagonal,
};
pub use coset::{
    todd_coxeter, todd_coxeter_with, CosetStatus, CosetTable, Strategy, DEFAULT_BUDGET,
};
pub use presentation::{FpGroup, Presentation};
pub use word::{enantiomorph_word, free_reduce, Letter, Word};
