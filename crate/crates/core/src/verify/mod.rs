//! Machine checks of the algebraic identities and the exact dimension
//! oracle.

mod alpha;
mod common;
mod delta;
mod diagrams;
pub mod linalg;
pub mod oracle;
pub mod report;
mod rho;
mod suite;
mod theorem;
mod zeta;

pub use alpha::check_alpha;
pub use delta::check_delta_plus;
pub use diagrams::{check_transposition_diagrams, DiagramLaw};
pub use oracle::{ideal_membership_oracle, quotient_dimension_oracle, IdealOracle, RowFamily, DEFAULT_MAX_TARGET};
pub use report::{reports_to_json, CheckInstance, Counterexample, Report};
pub use rho::{check_rho, FULL_FAMILY_MAX_TARGET};
pub use suite::{bidegrees_up_to, run_suite, Suite, DIAGRAM_LEN_MAX};
pub use theorem::{check_main_theorem, expected_dimension};
pub use zeta::{check_zeta_preserves_braid, check_zeta_simp_and_sym};
