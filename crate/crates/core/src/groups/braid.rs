use std::fmt;

use crate::algebra::{GenKind, Generator, Level, Word};
use crate::error::{Error, Result};

/// A positive braid word on `level + 1` strands. Letters are χ subscripts
/// read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    level: Level,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(level: Level, letters: Vec<usize>) -> Result<Self> {
        for &i in &letters {
            Generator::chi(level, i)?;
        }
        Ok(BraidWord { level, letters })
    }

    /// Reads a χ-only word.
    pub fn from_word(w: &Word) -> Result<Self> {
        let mut letters = Vec::with_capacity(w.len());
        for g in w.gens() {
            if g.kind() != GenKind::Chi {
                return Err(Error::UnexpectedGenerator {
                    generator: g.to_string(),
                    context: "braid words contain only χ generators",
                });
            }
            letters.push(g.index());
        }
        Ok(BraidWord {
            level: w.source(),
            letters,
        })
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn to_word(&self) -> Word {
        let gens = self
            .letters
            .iter()
            .map(|&i| Generator::chi(self.level, i).expect("validated"))
            .collect();
        Word::from_parts_unchecked(self.level, gens)
    }
}

/// A freely reduced word in the free group on `x₀, …, xₙ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeGroupWord {
    letters: Vec<(usize, i8)>,
}

impl FreeGroupWord {
    pub fn generator(s: usize) -> Self {
        FreeGroupWord {
            letters: vec![(s, 1)],
        }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    fn push(&mut self, (s, e): (usize, i8)) {
        if self.letters.last() == Some(&(s, -e)) {
            self.letters.pop();
        } else {
            self.letters.push((s, e));
        }
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord {
            letters: self.letters.iter().rev().map(|&(s, e)| (s, -e)).collect(),
        }
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (s, e) in &self.letters {
            if *e > 0 {
                write!(f, "x{s}")?;
            } else {
                write!(f, "x{s}^-1")?;
            }
        }
        Ok(())
    }
}

/// Images of `x₀, …, xₙ` under the Artin automorphism of `b`.
///
/// Letter `i` acts by `xᵢ ↦ xᵢ x_{i+1} xᵢ⁻¹`, `x_{i+1} ↦ xᵢ`. Letters are
/// applied so that concatenation of braid words corresponds to composition
/// of automorphisms.
pub fn artin_action(b: &BraidWord) -> Vec<FreeGroupWord> {
    let mut images: Vec<FreeGroupWord> = (0..=b.level).map(FreeGroupWord::generator).collect();
    for &a in &b.letters {
        let xa = images[a].clone();
        let xb = images[a + 1].clone();
        images[a] = xa.mul(&xb).mul(&xa.inverse());
        images[a + 1] = xa;
    }
    images
}

/// Equality in the positive braid monoid, decided by the faithful Artin
/// action.
pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.level != v.level {
        return Err(Error::LevelMismatch {
            expected: u.level,
            found: v.level,
        });
    }
    Ok(artin_action(u) == artin_action(v))
}
