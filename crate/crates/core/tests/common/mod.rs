//! Random elements for the property tests.

#![allow(dead_code)]

use proptest::prelude::*;
use prop_rewriter::{Element, GenKind, Generator, Level, Scalar, Word};

/// Which generator kinds a random word may use.
#[derive(Clone, Copy, Debug)]
pub enum Kinds {
    Del,
    DelChi,
    RhoChi,
}

/// A word from `source` to `target` decoded from `choices`, built
/// bottom-up; each choice adds one letter, and missing ∂ letters are
/// appended at the top.
pub fn build_word(source: Level, target: Level, kinds: Kinds, choices: &[usize]) -> Word {
    let step = match kinds {
        Kinds::RhoChi => GenKind::Rho,
        _ => GenKind::Del,
    };
    let chis = !matches!(kinds, Kinds::Del);
    let mut gens = Vec::new();
    let mut level = source;
    for &c in choices {
        if chis && level > 0 && (level == target || c % 3 == 0) {
            gens.push(Generator::chi(level, (c / 3) % level).unwrap());
        } else if level < target {
            gens.push(Generator::new(step, level, c % (level + 1)).unwrap());
            level += 1;
        }
    }
    while level < target {
        gens.push(Generator::new(step, level, level / 2).unwrap());
        level += 1;
    }
    gens.reverse();
    Word::with_source(source, gens).unwrap()
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_filter_map("nonzero", |(p, q)| (p != 0).then(|| Scalar::new(p, q).unwrap()))
}

/// A homogeneous element with target level `<= max_level` and at most
/// `max_terms` terms.
pub fn element(kinds: Kinds, max_level: Level, max_terms: usize) -> impl Strategy<Value = Element> {
    (0..=max_level)
        .prop_flat_map(move |t| (0..=t, Just(t)))
        .prop_flat_map(move |(n, t)| {
            let term = (scalar(), prop::collection::vec(0usize..16, 0..(t - n + 4)));
            (Just(n), Just(t), prop::collection::vec(term, 1..=max_terms))
        })
        .prop_map(move |(n, t, terms)| {
            Element::from_terms(terms.into_iter().map(|(c, ch)| (c, build_word(n, t, kinds, &ch))))
        })
}

/// Two elements of the same bidegree.
pub fn element_pair(kinds: Kinds, max_level: Level, max_terms: usize) -> impl Strategy<Value = (Element, Element)> {
    (0..=max_level)
        .prop_flat_map(move |t| (0..=t, Just(t)))
        .prop_flat_map(move |(n, t)| {
            let side = || prop::collection::vec((scalar(), prop::collection::vec(0usize..16, 0..(t - n + 4))), 1..=max_terms);
            (Just(n), Just(t), side(), side())
        })
        .prop_map(move |(n, t, a, b)| {
            let mk = |v: Vec<(Scalar, Vec<usize>)>| {
                Element::from_terms(v.into_iter().map(|(c, ch)| (c, build_word(n, t, kinds, &ch))))
            };
            (mk(a), mk(b))
        })
}

/// A homogeneous element of bidegree `(n, t)`.
pub fn element_between(kinds: Kinds, n: Level, t: Level, max_terms: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((scalar(), prop::collection::vec(0usize..16, 0..(t - n + 4))), 1..=max_terms)
        .prop_map(move |v| Element::from_terms(v.into_iter().map(|(c, ch)| (c, build_word(n, t, kinds, &ch)))))
}
