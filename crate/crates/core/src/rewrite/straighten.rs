use serde::Serialize;

use crate::algebra::{Element, GenKind, Generator, Level, Word};
use crate::error::{Error, Result};

/// Tail shape for the presimplicial straightening rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Flavor {
    /// Non-increasing subscripts; the swap fires when `upper < lower`.
    Mag,
    /// Strictly decreasing subscripts; the swap fires when `upper <= lower`.
    Simp,
}

impl Flavor {
    fn violates(self, upper: usize, lower: usize) -> bool {
        match self {
            Flavor::Mag => upper < lower,
            Flavor::Simp => upper <= lower,
        }
    }

    /// Whether a tail (top subscript first) is in normal form.
    pub fn is_normal(self, tail: &[usize]) -> bool {
        tail.windows(2).all(|w| !self.violates(w[0], w[1]))
    }
}

/// Builds the word `g_{t-1} ⋯ g_source` for a tail given top first.
pub(crate) fn tail_word(kind: GenKind, source: Level, tail: &[usize]) -> Word {
    let top = source + tail.len();
    let gens = tail
        .iter()
        .enumerate()
        .map(|(k, &j)| Generator::new(kind, top - 1 - k, j).expect("tail index in range"))
        .collect();
    Word::from_parts_unchecked(source, gens)
}

/// Inserts a new top generator with subscript `x` into a normal tail,
/// swapping it down while the pair violates the flavor. The swap is
/// `g^{u+1}_x g^u_t = g^{u+1}_{t+1} g^u_x`.
pub(crate) fn insert_tail(x: usize, tail: &[usize], flavor: Flavor) -> Vec<usize> {
    let mut out = Vec::with_capacity(tail.len() + 1);
    let mut k = 0;
    while k < tail.len() && flavor.violates(x, tail[k]) {
        out.push(tail[k] + 1);
        k += 1;
    }
    out.push(x);
    out.extend_from_slice(&tail[k..]);
    out
}

/// Straightens a single-kind word by repeatedly swapping the leftmost
/// violating adjacency.
///
/// Each swap turns `(a, b)` with `a < b` (or `a <= b`) into `(b + 1, a)`:
/// the subscript sequence read top first increases lexicographically while
/// each entry stays bounded by its level, so the loop terminates.
pub fn straighten_word(w: &Word, kind: GenKind, flavor: Flavor) -> Result<Word> {
    if let Some(g) = w.gens().iter().find(|g| g.kind() != kind) {
        return Err(Error::UnexpectedGenerator {
            generator: g.to_string(),
            context: "straightening expects a single generator kind",
        });
    }
    let mut idx: Vec<usize> = w.gens().iter().map(|g| g.index()).collect();
    while let Some(k) = (0..idx.len().saturating_sub(1)).find(|&k| flavor.violates(idx[k], idx[k + 1])) {
        let (a, b) = (idx[k], idx[k + 1]);
        idx[k] = b + 1;
        idx[k + 1] = a;
    }
    Ok(tail_word(kind, w.source(), &idx))
}

fn straighten_element(x: &Element, flavor: Flavor) -> Result<Element> {
    x.try_map_words(|w| Ok(Element::from_word(straighten_word(w, GenKind::Del, flavor)?)))
}

/// Mag normal form: every ∂-word rewritten to non-increasing subscripts.
pub fn mag_normalize(x: &Element) -> Result<Element> {
    straighten_element(x, Flavor::Mag)
}

/// Simp normal form: every ∂-word rewritten to strictly decreasing subscripts.
pub fn simp_normalize(x: &Element) -> Result<Element> {
    straighten_element(x, Flavor::Simp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;

    fn p(s: &str) -> Element {
        parse_element(s).unwrap()
    }

    #[test]
    fn mag_examples() {
        assert_eq!(mag_normalize(&p("d[2,0]*d[1,1]")).unwrap(), p("d[2,2]*d[1,0]"));
        assert_eq!(mag_normalize(&p("d[2,2]*d[1,0]")).unwrap(), p("d[2,2]*d[1,0]"));
        let w = mag_normalize(&p("d[3,0]*d[2,1]*d[1,0]")).unwrap();
        assert_eq!(w, p("d[3,2]*d[2,0]*d[1,0]"));
    }

    #[test]
    fn simp_examples() {
        assert_eq!(simp_normalize(&p("d[1,0]*d[0,0]")).unwrap(), p("d[1,1]*d[0,0]"));
        assert_eq!(simp_normalize(&p("d[1,1]*d[0,0]")).unwrap(), p("d[1,1]*d[0,0]"));
        assert_eq!(simp_normalize(&p("d[2,1]*d[1,1]*d[0,0]")).unwrap(), p("d[2,2]*d[1,1]*d[0,0]"));
    }

    #[test]
    fn rejects_chi() {
        assert!(mag_normalize(&p("x[1,0]*d[0,0]")).is_err());
    }

    #[test]
    fn insertion_matches_leftmost_rewriting() {
        for flavor in [Flavor::Mag, Flavor::Simp] {
            let tail = vec![3, 1, 0];
            assert!(flavor.is_normal(&tail));
            for x in 0..=4 {
                let mut idx = vec![x];
                idx.extend_from_slice(&tail);
                let w = tail_word(GenKind::Del, 1, &idx);
                let s = straighten_word(&w, GenKind::Del, flavor).unwrap();
                assert_eq!(s, tail_word(GenKind::Del, 1, &insert_tail(x, &tail, flavor)));
            }
        }
    }
}
