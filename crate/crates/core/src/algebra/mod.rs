//! Exact scalars, graded generators, words and linear combinations.

mod element;
mod generator;
pub mod parse;
mod scalar;
mod word;

pub use element::Element;
pub use generator::{GenKind, Generator, Level};
pub(crate) use generator::out_of_range;
pub use parse::parse_element;
pub use scalar::Scalar;
pub use word::Word;
