//! χ-only quotients: the symmetric groups as honest permutations and the
//! positive braid monoids with an Artin-action equality oracle.

mod braid;
mod permutation;

pub use braid::{artin_action, braid_equal, BraidWord, FreeGroupWord};
pub use permutation::{chi_word_of_perm, perm_of_chi_word, Permutation};
