use crate::algebra::{out_of_range, Element, GenKind, Generator, Level, Word};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::groups::Permutation;

impl Engine {
    /// Evaluates ζ on `∂ⁿᵢ χⁿⱼ`: the χ subscripts at level `n + 1` (leftmost
    /// first) and the resulting ∂ subscript at level `n`.
    pub(crate) fn zeta_indices(&self, n: Level, i: usize, j: usize) -> Result<(Vec<usize>, usize)> {
        let case = self.laws().zeta.case(i, j);
        let chis = case
            .chis
            .iter()
            .map(|ix| chi_index(n + 1, ix.eval(i, j)))
            .collect::<Result<Vec<_>>>()?;
        let d = case.del.eval(i, j);
        if d < 0 || d > n as i64 {
            return Err(out_of_range(GenKind::Del, n, d));
        }
        Ok((chis, d as usize))
    }

    /// ζ on a generator pair `∂ⁿᵢ ⊗ χⁿⱼ`, returned as the single word
    /// `(χ-word)(∂)`.
    pub fn zeta_gen(&self, d: Generator, c: Generator) -> Result<Element> {
        Ok(Element::from_word(self.zeta_pair_word(d, c)?))
    }

    fn zeta_pair_word(&self, d: Generator, c: Generator) -> Result<Word> {
        if d.kind() != GenKind::Del || c.kind() != GenKind::Chi {
            return Err(Error::UnexpectedGenerator {
                generator: format!("{d}*{c}"),
                context: "ζ takes a ∂ followed by a χ",
            });
        }
        if d.level() != c.level() {
            return Err(Error::LevelMismatch {
                expected: d.level(),
                found: c.level(),
            });
        }
        let n = d.level();
        let (chis, k) = self.zeta_indices(n, d.index(), c.index())?;
        let mut gens: Vec<Generator> = chis
            .into_iter()
            .map(|a| Generator::chi(n + 1, a).expect("validated"))
            .collect();
        gens.push(Generator::del(n, k).expect("validated"));
        Ok(Word::from_parts_unchecked(n, gens))
    }

    /// Moves every χ to the left of every ∂ by rewriting the leftmost
    /// `∂χ` adjacency with ζ until none remains.
    ///
    /// Each step moves one χ past one ∂ and never puts a ∂ left of a χ
    /// that was already left of it, so the multiset recording how many ∂'s
    /// stand left of each χ decreases.
    pub fn zeta_move_left(&self, x: &Element) -> Result<Element> {
        x.try_map_words(|w| Ok(Element::from_word(self.zeta_word(w)?)))
    }

    pub(crate) fn zeta_word(&self, w: &Word) -> Result<Word> {
        if let Some(g) = w.gens().iter().find(|g| g.kind() == GenKind::Rho) {
            return Err(Error::UnexpectedGenerator {
                generator: g.to_string(),
                context: "ζ acts on ∂/χ words; expand ρ first",
            });
        }
        let mut gens = w.gens().to_vec();
        while let Some(k) = (0..gens.len().saturating_sub(1))
            .find(|&k| gens[k].kind() == GenKind::Del && gens[k + 1].kind() == GenKind::Chi)
        {
            let rep = self.zeta_pair_word(gens[k], gens[k + 1])?;
            gens.splice(k..k + 2, rep.gens().iter().copied());
        }
        Ok(Word::from_parts_unchecked(w.source(), gens))
    }

    /// Pushes `∂ⁿₓ` through a whole permutation at level `n`:
    /// `∂ₓ P = Q ∂_{x'}` with `Q` at level `n + 1`, computed along the
    /// canonical reduced word of `P`.
    pub(crate) fn zeta_through_perm(&self, x: usize, p: &Permutation) -> Result<(Permutation, usize)> {
        let n = p.level();
        let mut q = Permutation::identity(n + 1);
        let mut x = x;
        for a in p.reduced_word() {
            let (chis, next) = self.zeta_indices(n, x, a)?;
            for c in chis {
                q.right_mul_transposition(c);
            }
            x = next;
        }
        Ok((q, x))
    }
}

pub(crate) fn chi_index(level: Level, v: i64) -> Result<usize> {
    if v < 0 || v >= level as i64 {
        return Err(out_of_range(GenKind::Chi, level, v));
    }
    Ok(v as usize)
}
