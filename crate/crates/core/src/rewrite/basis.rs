use serde::Serialize;

use super::straighten::{tail_word, Flavor};
use super::twisted::{Monomial, NormalPair};
use crate::algebra::{GenKind, Level, Word};
use crate::error::{Error, Result};
use crate::groups::Permutation;

/// Algebras with an enumerable monomial basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BasisAlgebra {
    Mag,
    Simp,
    SymMag,
    SymSimp,
}

/// All normal tails from level `source` to level `target`, top subscript
/// first, in lexicographic order.
pub fn normal_tails(source: Level, target: Level, flavor: Flavor) -> Vec<Vec<usize>> {
    if target < source {
        return Vec::new();
    }
    // Build bottom-up: position 0 is the generator at level `source`.
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(target - source);
    fn rec(level: Level, target: Level, flavor: Flavor, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if level == target {
            out.push(cur.iter().rev().copied().collect());
            return;
        }
        let lo = match (cur.last(), flavor) {
            (None, _) => 0,
            (Some(&b), Flavor::Mag) => b,
            (Some(&b), Flavor::Simp) => b + 1,
        };
        for j in lo..=level {
            cur.push(j);
            rec(level + 1, target, flavor, cur, out);
            cur.pop();
        }
    }
    rec(source, target, flavor, &mut cur, &mut out);
    out.sort();
    out
}

/// Basis monomials of Sym⊗Mag or Sym⊗Simp at a bidegree, grouped by
/// permutation in lexicographic order.
pub fn sym_basis_monomials(source: Level, target: Level, flavor: Flavor) -> Vec<Monomial> {
    if target < source {
        return Vec::new();
    }
    let tails = normal_tails(source, target, flavor);
    Permutation::all(target)
        .into_iter()
        .flat_map(|p| {
            tails
                .iter()
                .map(move |t| Monomial::from_parts(p.clone(), t.clone()))
        })
        .collect()
}

/// Every normal-form monomial of `algebra` at bidegree `(source, target)`.
pub fn enumerate_basis(algebra: BasisAlgebra, source: Level, target: Level) -> Result<Vec<Word>> {
    if target < source {
        return Err(Error::NotNormal(format!(
            "target {target} is below source {source}"
        )));
    }
    Ok(match algebra {
        BasisAlgebra::Mag | BasisAlgebra::Simp => {
            let flavor = if algebra == BasisAlgebra::Mag { Flavor::Mag } else { Flavor::Simp };
            normal_tails(source, target, flavor)
                .iter()
                .map(|t| tail_word(GenKind::Del, source, t))
                .collect()
        }
        BasisAlgebra::SymMag | BasisAlgebra::SymSimp => {
            let flavor = if algebra == BasisAlgebra::SymMag { Flavor::Mag } else { Flavor::Simp };
            sym_basis_monomials(source, target, flavor)
                .iter()
                .map(|m| m.to_word(GenKind::Del))
                .collect()
        }
    })
}

/// Like [`enumerate_basis`] for the twisted algebras, as [`NormalPair`]s.
pub fn enumerate_normal_pairs(source: Level, target: Level, flavor: Flavor) -> Vec<NormalPair> {
    sym_basis_monomials(source, target, flavor)
        .into_iter()
        .map(|m| {
            let (p, t) = m.into_parts();
            NormalPair::new(p, t, flavor).expect("enumerated tails are normal")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_basis(BasisAlgebra::Mag, 0, 3).unwrap().len(), 5);
        assert_eq!(enumerate_basis(BasisAlgebra::Mag, 0, 5).unwrap().len(), 42);
        assert_eq!(enumerate_basis(BasisAlgebra::Simp, 1, 3).unwrap().len(), 3);
        let id = enumerate_basis(BasisAlgebra::Simp, 2, 2).unwrap();
        assert_eq!(id, vec![Word::identity(2)]);
        assert_eq!(enumerate_basis(BasisAlgebra::SymMag, 0, 2).unwrap().len(), 12);
        assert!(enumerate_basis(BasisAlgebra::Mag, 3, 1).is_err());
    }

    #[test]
    fn mag_words_are_normal() {
        for w in enumerate_basis(BasisAlgebra::Mag, 0, 3).unwrap() {
            let idx: Vec<usize> = w.gens().iter().map(|g| g.index()).collect();
            assert!(Flavor::Mag.is_normal(&idx), "{w}");
        }
    }
}
