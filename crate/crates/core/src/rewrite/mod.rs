//! Normal forms for Mag and Simp, the distributive law ζ, the twisted
//! products Sym⊗Mag and Sym⊗Simp, and the surjection correspondence.

mod basis;
mod straighten;
mod surjection;
mod twisted;
mod zeta;

pub use basis::{enumerate_basis, enumerate_normal_pairs, normal_tails, sym_basis_monomials, BasisAlgebra};
pub(crate) use straighten::{insert_tail, tail_word};
pub use straighten::{mag_normalize, simp_normalize, straighten_word, Flavor};
pub use surjection::{simp_word_of_surjection, surjection_of_simp_word, OrderPresSurj};
pub use twisted::{Monomial, NormalPair};
pub(crate) use zeta::chi_index;
