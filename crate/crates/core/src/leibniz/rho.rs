use std::collections::HashMap;

use crate::algebra::{out_of_range, Element, GenKind, Generator, Level, Scalar, Word};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::groups::Permutation;
use crate::rewrite::{chi_index, straighten_word, Flavor};

/// `ρⁿⱼ` expanded in ∂/χ symbols:
/// `∂ⁿⱼ + Σ_{a=1}^{j} χ^{n+1}_j ⋯ χ^{n+1}_a ∂ⁿ_{a-1}`; `ρⁿ₋₁ = 0`.
pub fn rho(n: Level, j: i64) -> Result<Element> {
    if j == -1 {
        return Ok(Element::zero());
    }
    if j < -1 || j > n as i64 {
        return Err(out_of_range(GenKind::Rho, n, j));
    }
    let j = j as usize;
    let mut out = Element::from_gen(Generator::del(n, j)?);
    for a in 1..=j {
        let mut gens: Vec<Generator> = (a..=j)
            .rev()
            .map(|c| Generator::chi(n + 1, c).expect("c <= n"))
            .collect();
        gens.push(Generator::del(n, a - 1)?);
        out.add_term(Scalar::one(), Word::from_parts_unchecked(n, gens));
    }
    Ok(out)
}

/// `∂ⁿⱼ = ρⁿⱼ − χ^{n+1}_j ρⁿ_{j-1}` in ρ symbols.
pub fn del_in_rho(n: Level, j: usize) -> Result<Element> {
    let mut out = Element::from_gen(Generator::rho(n, j)?);
    if j > 0 {
        let w = Word::from_parts_unchecked(
            n,
            vec![Generator::chi(n + 1, j)?, Generator::rho(n, j - 1)?],
        );
        out.add_term(Scalar::from(-1), w);
    }
    Ok(out)
}

/// Replaces every ρ symbol by its ∂/χ expansion.
pub fn expand_rho(x: &Element) -> Result<Element> {
    if !x.words().any(|w| w.contains_kind(GenKind::Rho)) {
        return Ok(x.clone());
    }
    x.try_map_words(|w| {
        let mut acc = Element::identity(w.source());
        for g in w.gens().iter().rev() {
            let f = match g.kind() {
                GenKind::Rho => rho(g.level(), g.index() as i64)?,
                _ => Element::from_gen(*g),
            };
            acc = f.compose(&acc);
        }
        Ok(acc)
    })
}

/// Presimplicial straightening of χ-free ρ-words:
/// `ρ^{n+1}_i ρⁿ_j ↦ ρ^{n+1}_{j+1} ρⁿ_i` for `i <= j`.
pub fn rho_straighten(x: &Element) -> Result<Element> {
    x.try_map_words(|w| Ok(Element::from_word(straighten_word(w, GenKind::Rho, Flavor::Simp)?)))
}

/// One summand of ω: coefficient, χ subscripts at level `n + 1`, ρ subscript.
pub(crate) type OmegaSummand = (i128, Vec<usize>, usize);

impl Engine {
    pub(crate) fn omega_indices(&self, n: Level, i: usize, j: usize) -> Result<Vec<OmegaSummand>> {
        let mut out = Vec::new();
        for t in self.laws().omega.case(i, j) {
            let r = t.rho.eval(i, j);
            if r == -1 {
                continue;
            }
            if r < -1 || r > n as i64 {
                return Err(out_of_range(GenKind::Rho, n, r));
            }
            let chis = t
                .chis
                .iter()
                .map(|ix| chi_index(n + 1, ix.eval(i, j)))
                .collect::<Result<Vec<_>>>()?;
            out.push((t.coeff as i128, chis, r as usize));
        }
        Ok(out)
    }

    /// ω on `ρⁿᵢ χⁿⱼ`, as a sum of words `(χ-word) ρ`.
    pub fn omega_gen(&self, r: Generator, c: Generator) -> Result<Element> {
        if r.kind() != GenKind::Rho || c.kind() != GenKind::Chi {
            return Err(Error::UnexpectedGenerator {
                generator: format!("{r}*{c}"),
                context: "ω takes a ρ followed by a χ",
            });
        }
        if r.level() != c.level() {
            return Err(Error::LevelMismatch {
                expected: r.level(),
                found: c.level(),
            });
        }
        let n = r.level();
        let mut out = Element::zero();
        for (coeff, chis, k) in self.omega_indices(n, r.index(), c.index())? {
            let mut gens: Vec<Generator> = chis
                .into_iter()
                .map(|a| Generator::chi(n + 1, a).expect("validated"))
                .collect();
            gens.push(Generator::rho(n, k)?);
            out.add_term(Scalar::from(coeff as i64), Word::from_parts_unchecked(n, gens));
        }
        Ok(out)
    }

    /// Moves every χ to the left of every ρ by rewriting the leftmost `ρχ`
    /// adjacency with ω until none remains. Words must not contain ∂.
    pub fn omega_move_left(&self, x: &Element) -> Result<Element> {
        let mut done = Element::zero();
        let mut todo: Vec<(Scalar, Word)> = x.terms().map(|(w, c)| (c.clone(), w.clone())).collect();
        while let Some((c, w)) = todo.pop() {
            if let Some(g) = w.gens().iter().find(|g| g.kind() == GenKind::Del) {
                return Err(Error::UnexpectedGenerator {
                    generator: g.to_string(),
                    context: "ω acts on ρ/χ words",
                });
            }
            let gens = w.gens();
            let site = (0..gens.len().saturating_sub(1))
                .find(|&k| gens[k].kind() == GenKind::Rho && gens[k + 1].kind() == GenKind::Chi);
            let Some(k) = site else {
                done.add_term(c, w);
                continue;
            };
            for (rw, rc) in self.omega_gen(gens[k], gens[k + 1])?.terms() {
                let mut next = gens[..k].to_vec();
                next.extend_from_slice(rw.gens());
                next.extend_from_slice(&gens[k + 2..]);
                todo.push((&c * rc, Word::from_parts_unchecked(w.source(), next)));
            }
        }
        Ok(done)
    }

    /// Pushes `ρⁿₓ` through a permutation at level `n` along its canonical
    /// reduced word: `ρₓ P = Σ c · Q ρ_r`.
    pub(crate) fn omega_through_perm(&self, x: usize, p: &Permutation) -> Result<Vec<(Permutation, usize, i128)>> {
        let n = p.level();
        let mut terms: Vec<(Permutation, usize, i128)> = vec![(Permutation::identity(n + 1), x, 1)];
        for a in p.reduced_word() {
            let mut next: HashMap<(Permutation, usize), i128> = HashMap::new();
            for (q, r, c) in &terms {
                for (c2, chis, r2) in self.omega_indices(n, *r, a)? {
                    let mut q2 = q.clone();
                    for ch in chis {
                        q2.right_mul_transposition(ch);
                    }
                    let slot = next.entry((q2, r2)).or_insert(0);
                    *slot = c.checked_mul(c2).and_then(|v| slot.checked_add(v)).ok_or(Error::Overflow)?;
                }
            }
            terms = next
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|((q, r), c)| (q, r, c))
                .collect();
        }
        Ok(terms)
    }
}
