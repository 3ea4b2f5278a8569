//! The Leibniz quotients Leib and Leib^op, the ρ-calculus and the
//! automorphism α exchanging them.

mod alpha;
mod ideal;
mod normalize;
mod rho;

pub use alpha::{alpha, shift};
pub use ideal::IdealGenerator;
pub use rho::{del_in_rho, expand_rho, rho, rho_straighten};
