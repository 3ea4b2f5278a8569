use std::cmp::Ordering;
use std::fmt;

use super::generator::{GenKind, Generator, Level};
use crate::error::{Error, Result};

/// A composable monomial. `gens[0]` is the leftmost generator, which is
/// applied last; the empty word at level `n` is the identity `1_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    source: Level,
    gens: Vec<Generator>,
}

impl Word {
    pub fn identity(level: Level) -> Self {
        Word {
            source: level,
            gens: Vec::new(),
        }
    }

    /// Builds a word from its generators, leftmost first.
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        let Some(last) = gens.last() else {
            return Err(Error::NotComposable(
                "an empty word needs an explicit level; use Word::identity".into(),
            ));
        };
        let source = last.source();
        Word::with_source(source, gens)
    }

    /// Builds a word with an explicit source level, so the empty sequence
    /// is allowed.
    pub fn with_source(source: Level, gens: Vec<Generator>) -> Result<Self> {
        let mut level = source;
        for g in gens.iter().rev() {
            if g.source() != level {
                return Err(Error::NotComposable(format!(
                    "{g} has source {} but the word below it ends at level {level}",
                    g.source()
                )));
            }
            level = g.target();
        }
        Ok(Word { source, gens })
    }

    pub(crate) fn from_parts_unchecked(source: Level, gens: Vec<Generator>) -> Self {
        debug_assert!(Word::with_source(source, gens.clone()).is_ok());
        Word { source, gens }
    }

    pub fn from_gen(g: Generator) -> Self {
        Word {
            source: g.source(),
            gens: vec![g],
        }
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn source(&self) -> Level {
        self.source
    }

    pub fn target(&self) -> Level {
        self.gens.first().map_or(self.source, |g| g.target())
    }

    /// `self ∘ other`, or `None` when `source(self) != target(other)`.
    pub fn compose(&self, other: &Word) -> Option<Word> {
        if self.source != other.target() {
            return None;
        }
        let mut gens = Vec::with_capacity(self.len() + other.len());
        gens.extend_from_slice(&self.gens);
        gens.extend_from_slice(&other.gens);
        Some(Word {
            source: other.source,
            gens,
        })
    }

    pub fn contains_kind(&self, kind: GenKind) -> bool {
        self.gens.iter().any(|g| g.kind() == kind)
    }

    pub fn only_kind(&self, kind: GenKind) -> bool {
        self.gens.iter().all(|g| g.kind() == kind)
    }

    pub fn shifted(&self, k: usize) -> Word {
        Word {
            source: self.source + k,
            gens: self.gens.iter().map(|g| g.shifted(k)).collect(),
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.source, self.target(), self.len(), &self.gens).cmp(&(
            other.source,
            other.target(),
            other.len(),
            &other.gens,
        ))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "1[{}]", self.source);
        }
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
