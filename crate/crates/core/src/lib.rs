//! Exact normal forms and identity checking for the bigraded diagram
//! algebras Mag, Simp, Braid, Sym, their twisted products, and the Leibniz
//! quotients Leib and Leib^op.
//!
//! Words are written with the leftmost generator applied last, so
//! `d[1,1]*d[0,0]` is `∂¹₁∂⁰₀`. Law-dependent operations live on
//! [`Engine`], whose rule tables can be replaced to test that the
//! verification suites catch corrupted laws.
//!
//! ```
//! use prop_rewriter::{parse_element, Engine};
//!
//! let e = Engine::default();
//! let g = parse_element("d[1,1]*d[0,0] - d[1,0]*d[0,0] + x[2,1]*d[1,0]*d[0,0]").unwrap();
//! assert!(e.leib_normalize(&g).unwrap().is_zero());
//! ```

pub mod algebra;
pub mod cli;
pub mod diagram;
mod engine;
pub mod error;
pub mod groups;
pub mod laws;
pub mod leibniz;
pub mod rewrite;
pub mod verify;

pub use algebra::{parse_element, Element, GenKind, Generator, Level, Scalar, Word};
pub use engine::{Algebra, Engine};
pub use error::{Error, Result};
pub use laws::{Laws, Mutation, Side};
