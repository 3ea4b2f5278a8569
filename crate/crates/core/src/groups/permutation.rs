use std::fmt;

use crate::algebra::{GenKind, Generator, Level, Word};
use crate::error::{Error, Result};

/// A permutation of the `n + 1` strand positions of level `n`.
///
/// `images[p]` is where position `p` is sent. Composition `a.compose(b)`
/// is the function `a ∘ b`, matching word concatenation: the word `χ_a χ_b`
/// maps to `s_a ∘ s_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(level: Level) -> Self {
        Permutation {
            images: (0..=level as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("no positions".into()));
        }
        if images.len() > u8::MAX as usize {
            return Err(Error::InvalidPermutation("too many positions".into()));
        }
        let mut seen = vec![false; images.len()];
        for &p in &images {
            if p >= images.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|p| p as u8).collect(),
        })
    }

    /// The adjacent transposition `χⁿᵢ`.
    pub fn transposition(level: Level, i: usize) -> Result<Self> {
        Generator::chi(level, i)?;
        let mut p = Permutation::identity(level);
        p.images.swap(i, i + 1);
        Ok(p)
    }

    pub fn level(&self) -> Level {
        self.images.len() - 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&p| p as usize).collect()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &p)| k == p as usize)
    }

    /// `self ∘ other`. Panics on a level mismatch.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.images.len(), other.images.len(), "permutation level mismatch");
        Permutation {
            images: other.images.iter().map(|&p| self.images[p as usize]).collect(),
        }
    }

    /// `s_i ∘ self` in place.
    pub(crate) fn left_mul_transposition(&mut self, i: usize) {
        for p in &mut self.images {
            if *p as usize == i {
                *p += 1;
            } else if *p as usize == i + 1 {
                *p -= 1;
            }
        }
    }

    /// `self ∘ s_i` in place.
    pub(crate) fn right_mul_transposition(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (k, &p) in self.images.iter().enumerate() {
            inv[p as usize] = k as u8;
        }
        Permutation { images: inv }
    }

    pub fn inversions(&self) -> usize {
        let v = &self.images;
        (0..v.len())
            .map(|a| (a + 1..v.len()).filter(|&b| v[a] > v[b]).count())
            .sum()
    }

    /// The canonical reduced word, as χ subscripts read left to right.
    ///
    /// Selection sort on the one-line notation: the value 0 is bubbled to
    /// position 0 by adjacent swaps, then 1 to position 1, and so on. If the
    /// swaps happen at positions `b₁, …, b_k`, then
    /// `self = s_{b_k} ∘ ⋯ ∘ s_{b₁}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut line = self.images.clone();
        let mut swaps = Vec::with_capacity(self.inversions());
        for target in 0..line.len() {
            let mut pos = line.iter().position(|&v| v as usize == target).expect("bijection");
            while pos > target {
                line.swap(pos - 1, pos);
                swaps.push(pos - 1);
                pos -= 1;
            }
        }
        swaps.reverse();
        swaps
    }

    /// Every permutation of `level + 1` points, in lexicographic order of
    /// the one-line notation.
    pub fn all(level: Level) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (0..=level as u8).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        while next_permutation(&mut cur) {
            out.push(Permutation { images: cur.clone() });
        }
        out
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Folds a χ-only word into its permutation.
pub fn perm_of_chi_word(w: &Word) -> Result<Permutation> {
    let mut p = Permutation::identity(w.source());
    for g in w.gens() {
        if g.kind() != GenKind::Chi {
            return Err(Error::UnexpectedGenerator {
                generator: g.to_string(),
                context: "χ-only word expected",
            });
        }
        p.right_mul_transposition(g.index());
    }
    Ok(p)
}

/// The canonical reduced χ-word of `p`; see [`Permutation::reduced_word`].
pub fn chi_word_of_perm(p: &Permutation) -> Word {
    let n = p.level();
    let gens = p
        .reduced_word()
        .into_iter()
        .map(|i| Generator::chi(n, i).expect("reduced word indices are in range"))
        .collect();
    Word::from_parts_unchecked(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi_word(n: usize, idx: &[usize]) -> Word {
        Word::with_source(n, idx.iter().map(|&i| Generator::chi(n, i).unwrap()).collect()).unwrap()
    }

    #[test]
    fn examples() {
        assert!(perm_of_chi_word(&chi_word(1, &[0, 0])).unwrap().is_identity());
        assert_eq!(perm_of_chi_word(&Word::identity(2)).unwrap(), Permutation::identity(2));
        // s0 ∘ s1: 0 ↦ 0 ↦ 1, 1 ↦ 2 ↦ 2, 2 ↦ 1 ↦ 0
        assert_eq!(perm_of_chi_word(&chi_word(2, &[0, 1])).unwrap().images(), vec![1, 2, 0]);
        assert!(chi_word_of_perm(&Permutation::identity(3)).is_empty());
        assert_eq!(chi_word_of_perm(&Permutation::transposition(3, 1).unwrap()), chi_word(3, &[1]));
    }

    #[test]
    fn rejects_del() {
        let w = Word::from_gen(Generator::del(0, 0).unwrap());
        assert!(perm_of_chi_word(&w).is_err());
    }

    #[test]
    fn section_and_length_on_s4() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 24);
        for p in all {
            let w = chi_word_of_perm(&p);
            assert_eq!(perm_of_chi_word(&w).unwrap(), p);
            assert_eq!(w.len(), p.inversions());
        }
    }

    #[test]
    fn in_place_products() {
        let a = Permutation::from_images(vec![2, 0, 3, 1]).unwrap();
        let s = Permutation::transposition(3, 1).unwrap();
        let mut l = a.clone();
        l.left_mul_transposition(1);
        assert_eq!(l, s.compose(&a));
        let mut r = a.clone();
        r.right_mul_transposition(1);
        assert_eq!(r, a.compose(&s));
        assert!(a.compose(&a.inverse()).is_identity());
    }
}
