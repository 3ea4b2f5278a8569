use super::rho::expand_rho;
use crate::algebra::{Element, GenKind, Generator, Word};
use crate::error::Result;

/// The automorphism `α(∂ⁿⱼ) = χ^{n+1}_j ∂ⁿⱼ`, `α(χ) = χ`, extended
/// multiplicatively to words and linearly to elements. ρ symbols are
/// expanded first.
pub fn alpha(x: &Element) -> Result<Element> {
    let x = expand_rho(x)?;
    x.try_map_words(|w| Ok(Element::from_word(alpha_word(w))))
}

fn alpha_word(w: &Word) -> Word {
    let mut gens = Vec::with_capacity(2 * w.len());
    for g in w.gens() {
        if g.kind() == GenKind::Del {
            gens.push(Generator::chi(g.level() + 1, g.index()).expect("j <= n"));
        }
        gens.push(*g);
    }
    Word::from_parts_unchecked(w.source(), gens)
}

/// Raises every generator level by `k`, keeping indices.
pub fn shift(x: &Element, k: usize) -> Element {
    x.shifted(k)
}
