use std::fmt;

use crate::error::{Error, Result};

/// Levels index the objects of the category; level `n` has `n + 1` strands.
pub type Level = usize;

/// Generator families. `Rho` symbols are the change-of-generator elements
/// used by the Leibniz normalizer; they never mix with the Mag/Simp rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    Del,
    Chi,
    Rho,
}

impl GenKind {
    pub fn symbol(self) -> char {
        match self {
            GenKind::Del => 'd',
            GenKind::Chi => 'x',
            GenKind::Rho => 'r',
        }
    }

    fn name(self) -> &'static str {
        match self {
            GenKind::Del => "∂",
            GenKind::Chi => "χ",
            GenKind::Rho => "ρ",
        }
    }
}

/// A single generator `∂ⁿⱼ`, `χⁿᵢ` or `ρⁿⱼ`.
///
/// Field order gives the derived `Ord` the (kind, level, index) ordering
/// used for canonical word comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    kind: GenKind,
    level: Level,
    index: usize,
}

impl Generator {
    pub fn new(kind: GenKind, level: Level, index: usize) -> Result<Self> {
        match kind {
            GenKind::Del | GenKind::Rho => {
                if index > level {
                    return Err(out_of_range(kind, level, index as i64));
                }
            }
            GenKind::Chi => {
                if level == 0 {
                    return Err(Error::ChiAtLevelZero(level));
                }
                if index >= level {
                    return Err(out_of_range(kind, level, index as i64));
                }
            }
        }
        Ok(Generator { kind, level, index })
    }

    /// Like [`Generator::new`] but with a signed index, for rule templates
    /// whose arithmetic may leave the valid range.
    pub fn checked(kind: GenKind, level: Level, index: i64) -> Result<Self> {
        if index < 0 {
            return Err(out_of_range(kind, level, index));
        }
        Generator::new(kind, level, index as usize)
    }

    pub fn del(level: Level, index: usize) -> Result<Self> {
        Generator::new(GenKind::Del, level, index)
    }

    pub fn chi(level: Level, index: usize) -> Result<Self> {
        Generator::new(GenKind::Chi, level, index)
    }

    pub fn rho(level: Level, index: usize) -> Result<Self> {
        Generator::new(GenKind::Rho, level, index)
    }

    pub fn kind(&self) -> GenKind {
        self.kind
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn source(&self) -> Level {
        self.level
    }

    pub fn target(&self) -> Level {
        match self.kind {
            GenKind::Chi => self.level,
            GenKind::Del | GenKind::Rho => self.level + 1,
        }
    }

    /// The same generator `k` levels higher; indices are unchanged.
    pub fn shifted(&self, k: usize) -> Generator {
        Generator {
            level: self.level + k,
            ..*self
        }
    }
}

pub(crate) fn out_of_range(kind: GenKind, level: Level, index: i64) -> Error {
    Error::IndexOutOfRange {
        kind: kind.name(),
        level,
        index,
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.kind.symbol(), self.level, self.index)
    }
}
