use std::collections::BTreeMap;
use std::fmt;

use super::straighten::{insert_tail, tail_word, Flavor};
use crate::algebra::{Element, GenKind, Level, Scalar, Word};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::groups::{chi_word_of_perm, Permutation};

/// A permutation followed by a tail of raising generators: the monomial
/// `τ g_{t-1} ⋯ g_n` with `τ` at level `t`. Tail subscripts are stored top
/// first; the generator kind (∂ or ρ) is supplied when converting to a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    perm: Permutation,
    tail: Vec<usize>,
}

impl Monomial {
    pub fn new(perm: Permutation, tail: Vec<usize>) -> Result<Self> {
        let top = perm.level();
        if tail.len() > top {
            return Err(Error::NotNormal(format!(
                "tail of length {} cannot end at level {top}",
                tail.len()
            )));
        }
        for (k, &j) in tail.iter().enumerate() {
            let level = top - 1 - k;
            if j > level {
                return Err(crate::algebra::out_of_range(GenKind::Del, level, j as i64));
            }
        }
        Ok(Monomial { perm, tail })
    }

    pub(crate) fn from_parts(perm: Permutation, tail: Vec<usize>) -> Self {
        debug_assert!(Monomial::new(perm.clone(), tail.clone()).is_ok());
        Monomial { perm, tail }
    }

    pub fn identity(level: Level) -> Self {
        Monomial {
            perm: Permutation::identity(level),
            tail: Vec::new(),
        }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn tail(&self) -> &[usize] {
        &self.tail
    }

    pub fn target(&self) -> Level {
        self.perm.level()
    }

    pub fn source(&self) -> Level {
        self.perm.level() - self.tail.len()
    }

    pub fn tail_word(&self, kind: GenKind) -> Word {
        tail_word(kind, self.source(), &self.tail)
    }

    /// The canonical χ-word of the permutation followed by the tail.
    pub fn to_word(&self, kind: GenKind) -> Word {
        chi_word_of_perm(&self.perm)
            .compose(&self.tail_word(kind))
            .expect("levels agree")
    }

    pub(crate) fn left_mul_transposition(&mut self, i: usize) {
        self.perm.left_mul_transposition(i);
    }

    pub(crate) fn into_parts(self) -> (Permutation, Vec<usize>) {
        (self.perm, self.tail)
    }
}

/// A basis monomial of Sym⊗Mag or Sym⊗Simp.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalPair {
    mono: Monomial,
    flavor: Flavor,
}

impl NormalPair {
    pub fn new(perm: Permutation, tail: Vec<usize>, flavor: Flavor) -> Result<Self> {
        if !flavor.is_normal(&tail) {
            return Err(Error::NotNormal(format!("{tail:?} is not a {flavor:?} tail")));
        }
        Ok(NormalPair {
            mono: Monomial::new(perm, tail)?,
            flavor,
        })
    }

    /// Reads a word that is already of the form (χ-word)(normal ∂-tail).
    pub fn from_word(w: &Word, flavor: Flavor) -> Result<Self> {
        let split = w.gens().iter().position(|g| g.kind() != GenKind::Chi).unwrap_or(w.len());
        let (chis, dels) = w.gens().split_at(split);
        if dels.iter().any(|g| g.kind() != GenKind::Del) {
            return Err(Error::NotNormal(format!("{w} is not a χ-word followed by a ∂-word")));
        }
        let chi_word = Word::with_source(w.source() + dels.len(), chis.to_vec())?;
        let perm = crate::groups::perm_of_chi_word(&chi_word)?;
        NormalPair::new(perm, dels.iter().map(|g| g.index()).collect(), flavor)
    }

    pub fn identity(level: Level, flavor: Flavor) -> Self {
        NormalPair {
            mono: Monomial::identity(level),
            flavor,
        }
    }

    pub fn perm(&self) -> &Permutation {
        self.mono.perm()
    }

    pub fn tail(&self) -> &[usize] {
        self.mono.tail()
    }

    pub fn tail_word(&self) -> Word {
        self.mono.tail_word(GenKind::Del)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn source(&self) -> Level {
        self.mono.source()
    }

    pub fn target(&self) -> Level {
        self.mono.target()
    }

    pub fn monomial(&self) -> &Monomial {
        &self.mono
    }

    pub fn to_word(&self) -> Word {
        self.mono.to_word(GenKind::Del)
    }
}

impl fmt::Display for NormalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

impl Engine {
    /// Normal form of a ∂/χ word in Sym⊗Mag or Sym⊗Simp.
    ///
    /// The word is read right to left. A χ is absorbed into the current
    /// permutation; a ∂ is pushed through the permutation with ζ and then
    /// inserted into the tail with the flavor's swap rule. Every step is
    /// monomial-to-monomial.
    pub fn sym_straighten(&self, w: &Word, flavor: Flavor) -> Result<Monomial> {
        let mut perm = Permutation::identity(w.source());
        let mut tail: Vec<usize> = Vec::new();
        for g in w.gens().iter().rev() {
            match g.kind() {
                GenKind::Chi => perm.left_mul_transposition(g.index()),
                GenKind::Del => {
                    let (q, x) = self.zeta_through_perm(g.index(), &perm)?;
                    tail = insert_tail(x, &tail, flavor);
                    perm = q;
                }
                GenKind::Rho => {
                    return Err(Error::UnexpectedGenerator {
                        generator: g.to_string(),
                        context: "expand ρ before straightening",
                    })
                }
            }
        }
        Ok(Monomial::from_parts(perm, tail))
    }

    /// The normal form of `x` as a map from basis monomials to coefficients.
    /// ρ symbols are expanded into ∂/χ first.
    pub fn sym_terms(&self, x: &Element, flavor: Flavor) -> Result<BTreeMap<NormalPair, Scalar>> {
        let x = crate::leibniz::expand_rho(x)?;
        let mut out: BTreeMap<NormalPair, Scalar> = BTreeMap::new();
        for (w, c) in x.terms() {
            let mono = self.sym_straighten(w, flavor)?;
            let key = NormalPair { mono, flavor };
            let slot = out.entry(key).or_default();
            *slot += c;
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn sym_normalize(&self, x: &Element, flavor: Flavor) -> Result<Element> {
        Ok(Element::from_terms(
            self.sym_terms(x, flavor)?
                .into_iter()
                .map(|(p, c)| (c, p.to_word())),
        ))
    }

    /// Canonical form in Sym⊗ζMag: each word becomes the reduced χ-word of
    /// a permutation followed by a non-increasing ∂-tail.
    pub fn symmag_normalize(&self, x: &Element) -> Result<Element> {
        self.sym_normalize(x, Flavor::Mag)
    }

    /// Canonical form in Sym⊗ζSimp: permutation word followed by a strictly
    /// decreasing ∂-tail.
    pub fn symsimp_normalize(&self, x: &Element) -> Result<Element> {
        self.sym_normalize(x, Flavor::Simp)
    }

    /// Product in the twisted algebra; zero when `a` and `b` are not
    /// composable. The flavor of `a` selects the algebra.
    pub fn twisted_multiply(&self, a: &NormalPair, b: &NormalPair) -> Result<Element> {
        if a.flavor != b.flavor {
            return Err(Error::NotNormal("twisted product of different flavors".into()));
        }
        match a.to_word().compose(&b.to_word()) {
            None => Ok(Element::zero()),
            Some(w) => {
                let moved = self.zeta_word(&w)?;
                self.sym_normalize(&Element::from_word(moved), a.flavor)
            }
        }
    }
}
