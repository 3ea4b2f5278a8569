use std::collections::{BTreeMap, HashMap};

use super::rho::expand_rho;
use crate::algebra::{Element, GenKind, Scalar, Word};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::groups::Permutation;
use crate::laws::Side;
use crate::rewrite::{insert_tail, Flavor, Monomial};

/// Integer-coefficient combination of monomials used while normalizing a
/// single word; every rule has integer coefficients.
pub(crate) type State = HashMap<Monomial, i128>;

/// Bound on recursive Leib^op insertions for one word, so corrupted law
/// tables cannot loop forever.
const LEIBOP_FUEL: usize = 5_000_000;

fn accumulate(state: &mut State, key: Monomial, c: i128) -> Result<()> {
    let slot = state.entry(key).or_insert(0);
    *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
    Ok(())
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn prepend_chi(state: State, i: usize) -> State {
    state
        .into_iter()
        .map(|(mut m, c)| {
            m.left_mul_transposition(i);
            (m, c)
        })
        .collect()
}

fn to_element(state: State, scale: &Scalar, kind: GenKind, out: &mut Element) {
    for (m, c) in state {
        if c != 0 {
            out.add_term(scale * &Scalar::from_bigint(c.into()), m.to_word(kind));
        }
    }
}

fn to_terms(state: State, scale: &Scalar, out: &mut BTreeMap<Monomial, Scalar>) {
    for (m, c) in state {
        if c != 0 {
            *out.entry(m).or_default() += &(scale * &Scalar::from_bigint(c.into()));
        }
    }
}

impl Engine {
    fn prepend_rho(&self, state: &State, x: usize) -> Result<State> {
        let mut out = State::with_capacity(state.len());
        for (m, c) in state {
            for (q, r, c2) in self.omega_through_perm(x, m.perm())? {
                let tail = insert_tail(r, m.tail(), Flavor::Simp);
                accumulate(&mut out, Monomial::from_parts(q, tail), mul(*c, c2)?)?;
            }
        }
        Ok(out)
    }

    /// Leib normal form of one word as (permutation, strictly decreasing
    /// ρ-tail) monomials. The word is read right to left; ∂ is rewritten as
    /// `ρ_j − χ_j ρ_{j−1}`, ρ is pushed through the permutation with ω and
    /// inserted into the tail with the presimplicial swap.
    pub(crate) fn leib_word(&self, w: &Word) -> Result<State> {
        let mut state = State::new();
        state.insert(Monomial::identity(w.source()), 1);
        for g in w.gens().iter().rev() {
            state = match g.kind() {
                GenKind::Chi => prepend_chi(state, g.index()),
                GenKind::Rho => self.prepend_rho(&state, g.index())?,
                GenKind::Del => {
                    let j = g.index();
                    let mut a = self.prepend_rho(&state, j)?;
                    if j > 0 {
                        let b = prepend_chi(self.prepend_rho(&state, j - 1)?, j);
                        for (m, c) in b {
                            accumulate(&mut a, m, -c)?;
                        }
                    }
                    a
                }
            };
            state.retain(|_, c| *c != 0);
        }
        Ok(state)
    }

    /// Leib^op insertion of a new top `∂ₓ` into a strictly decreasing tail
    /// with source `base`. Returns `(R, tail, c)` summands meaning
    /// `c · R · tail`, with `R` at the new top level.
    fn leibop_insert(
        &self,
        x: usize,
        tail: &[usize],
        base: usize,
        fuel: &mut usize,
    ) -> Result<Vec<(Permutation, Vec<usize>, i128)>> {
        if *fuel == 0 {
            return Err(Error::NonTerminating(LEIBOP_FUEL));
        }
        *fuel -= 1;
        let top = base + tail.len() + 1;
        match tail.first() {
            None => Ok(vec![(Permutation::identity(top), vec![x], 1)]),
            Some(&t) if x > t => {
                let mut nt = Vec::with_capacity(tail.len() + 1);
                nt.push(x);
                nt.extend_from_slice(tail);
                Ok(vec![(Permutation::identity(top), nt, 1)])
            }
            Some(&t) if x < t => {
                // ∂ₓ∂ₜ = ∂_{t+1}∂ₓ, then ∂ₓ goes into the rest and ∂_{t+1}
                // follows it down through whatever permutation comes out.
                let mut out = Vec::new();
                for (r, sub, c) in self.leibop_insert(x, &tail[1..], base, fuel)? {
                    let (r1, y) = self.zeta_through_perm(t + 1, &r)?;
                    for (r2, t2, c2) in self.leibop_insert(y, &sub, base, fuel)? {
                        out.push((r1.compose(&r2), t2, mul(c, c2)?));
                    }
                }
                Ok(out)
            }
            Some(&t) => {
                // ∂ₜ∂ₜ = (1 + s·χ_{t+c}) ∂_{t+1}∂ₜ
                let law = self.laws().leibop;
                let mut nt = Vec::with_capacity(tail.len() + 1);
                nt.push(t + 1);
                nt.extend_from_slice(tail);
                let chi = t as i64 + law.chi_offset;
                if chi < 0 {
                    return Err(crate::algebra::out_of_range(GenKind::Chi, top, chi));
                }
                let s = Permutation::transposition(top, chi as usize)?;
                Ok(vec![
                    (Permutation::identity(top), nt.clone(), 1),
                    (s, nt, law.chi_sign as i128),
                ])
            }
        }
    }

    /// Leib^op normal form of one ∂/χ word as (permutation, strictly
    /// decreasing ∂-tail) monomials.
    pub(crate) fn leibop_word(&self, w: &Word) -> Result<State> {
        let law = self.laws().leibop;
        if law.first != 0 || law.second != 1 {
            return Err(Error::UnsupportedLaw(
                "the Leib^op normalizer needs a generator of the form ∂_j∂_j − (…)∂_{j+1}∂_j".into(),
            ));
        }
        let mut fuel = LEIBOP_FUEL;
        let mut state = State::new();
        state.insert(Monomial::identity(w.source()), 1);
        for g in w.gens().iter().rev() {
            state = match g.kind() {
                GenKind::Chi => prepend_chi(state, g.index()),
                GenKind::Del => {
                    let mut out = State::with_capacity(state.len());
                    for (m, c) in &state {
                        let (q, x) = self.zeta_through_perm(g.index(), m.perm())?;
                        for (r, tail, c2) in self.leibop_insert(x, m.tail(), m.source(), &mut fuel)? {
                            accumulate(&mut out, Monomial::from_parts(q.compose(&r), tail), mul(*c, c2)?)?;
                        }
                    }
                    out
                }
                GenKind::Rho => {
                    return Err(Error::UnexpectedGenerator {
                        generator: g.to_string(),
                        context: "expand ρ before Leib^op normalization",
                    })
                }
            };
            state.retain(|_, c| *c != 0);
        }
        Ok(state)
    }

    pub(crate) fn side_word(&self, side: Side, w: &Word) -> Result<State> {
        match side {
            Side::Leib => self.leib_word(w),
            Side::LeibOp => self.leibop_word(w),
        }
    }

    fn side_input(&self, side: Side, x: &Element) -> Result<Element> {
        match side {
            Side::Leib => Ok(x.clone()),
            Side::LeibOp => expand_rho(x),
        }
    }

    /// Normal form as a map from basis monomials to coefficients. Leib
    /// tails are ρ-subscripts, Leib^op tails are ∂-subscripts; both are
    /// strictly decreasing.
    pub fn normal_terms(&self, side: Side, x: &Element) -> Result<BTreeMap<Monomial, Scalar>> {
        let x = self.side_input(side, x)?;
        let mut out = BTreeMap::new();
        for (w, c) in x.terms() {
            to_terms(self.side_word(side, w)?, c, &mut out);
        }
        out.retain(|_, c: &mut Scalar| !c.is_zero());
        Ok(out)
    }

    fn normalize_side(&self, side: Side, x: &Element) -> Result<Element> {
        let kind = match side {
            Side::Leib => GenKind::Rho,
            Side::LeibOp => GenKind::Del,
        };
        let x = self.side_input(side, x)?;
        let mut out = Element::zero();
        for (w, c) in x.terms() {
            to_element(self.side_word(side, w)?, c, kind, &mut out);
        }
        Ok(out)
    }

    /// Canonical form in Leib: a sum of `τ ρ_{j_m} ⋯ ρ_{j_n}` with strictly
    /// decreasing subscripts, printed in ρ symbols. Accepts ∂, χ and ρ.
    pub fn leib_normalize(&self, x: &Element) -> Result<Element> {
        self.normalize_side(Side::Leib, x)
    }

    /// Canonical form in Leib^op: a sum of `τ ∂_{j_m} ⋯ ∂_{j_n}` with
    /// strictly decreasing subscripts. ρ symbols are expanded first.
    pub fn leibop_normalize(&self, x: &Element) -> Result<Element> {
        self.normalize_side(Side::LeibOp, x)
    }

    pub fn normalize_in(&self, side: Side, x: &Element) -> Result<Element> {
        self.normalize_side(side, x)
    }

    pub fn leib_equal(&self, x: &Element, y: &Element) -> Result<bool> {
        Ok(self.leib_normalize(&(x - y))?.is_zero())
    }

    pub fn leibop_equal(&self, x: &Element, y: &Element) -> Result<bool> {
        Ok(self.leibop_normalize(&(x - y))?.is_zero())
    }
}
