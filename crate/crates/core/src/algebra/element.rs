use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use super::generator::{Generator, Level};
use super::scalar::Scalar;
use super::word::Word;
use crate::error::Error;

/// A finite ℚ-linear combination of words. Zero coefficients are never
/// stored, and terms iterate in canonical word order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn identity(level: Level) -> Self {
        Element::from_word(Word::identity(level))
    }

    pub fn from_word(w: Word) -> Self {
        Element::from_term(Scalar::one(), w)
    }

    pub fn from_gen(g: Generator) -> Self {
        Element::from_word(Word::from_gen(g))
    }

    pub fn from_term(c: Scalar, w: Word) -> Self {
        let mut e = Element::zero();
        e.add_term(c, w);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, Word)>) -> Self {
        let mut e = Element::zero();
        for (c, w) in terms {
            e.add_term(c, w);
        }
        e
    }

    /// Adds `c·w` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, c: Scalar, w: Word) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Bilinear extension of word concatenation; incomposable pairs
    /// contribute zero.
    pub fn compose(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if let Some(w) = u.compose(v) {
                    out.add_term(a * b, w);
                }
            }
        }
        out
    }

    /// Splits into homogeneous components keyed by (source, target).
    pub fn bigrade(&self) -> BTreeMap<(Level, Level), Element> {
        let mut out: BTreeMap<(Level, Level), Element> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry((w.source(), w.target()))
                .or_default()
                .terms
                .insert(w.clone(), c.clone());
        }
        out
    }

    /// The bidegree if all terms share one, `None` for zero or mixed input.
    pub fn homogeneous_bidegree(&self) -> Option<(Level, Level)> {
        let mut it = self.terms.keys().map(|w| (w.source(), w.target()));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// Syntactic equality in the free algebra.
    pub fn free_equal(&self, other: &Element) -> bool {
        self == other
    }

    /// Applies `f` to every word and recombines linearly.
    pub fn try_map_words<E>(
        &self,
        mut f: impl FnMut(&Word) -> Result<Element, E>,
    ) -> Result<Element, E> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out += &f(w)?.scale(c);
        }
        Ok(out)
    }

    pub fn shifted(&self, k: usize) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.shifted(k), c.clone()))
                .collect(),
        }
    }
}

impl std::ops::AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (w, c) in &rhs.terms {
            self.add_term(c.clone(), w.clone());
        }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self + &(-rhs)
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl From<Word> for Element {
    fn from(w: Word) -> Self {
        Element::from_word(w)
    }
}

impl From<Generator> for Element {
    fn from(g: Generator) -> Self {
        Element::from_gen(g)
    }
}

impl FromStr for Element {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        super::parse::parse_element(s)
    }
}

/// Prints in the expression grammar: terms in canonical order, unit
/// coefficients omitted, `0` for the zero element.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let mag = if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                c.abs()
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
                c.abs()
            };
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, j: usize) -> Element {
        Element::from_gen(Generator::del(n, j).unwrap())
    }

    fn x(n: usize, i: usize) -> Element {
        Element::from_gen(Generator::chi(n, i).unwrap())
    }

    #[test]
    fn compose_examples() {
        assert_eq!(Element::identity(3).compose(&d(2, 0)), d(2, 0));
        assert_eq!(d(2, 0).compose(&x(1, 0)).to_string(), "0");
        assert_eq!(d(2, 0).compose(&x(2, 0)).to_string(), "d[2,0]*x[2,0]");
        assert!(d(3, 0).compose(&d(0, 0)).is_zero());
    }

    #[test]
    fn linear_examples() {
        assert!((&d(0, 0) - &d(0, 0)).is_zero());
        let half = Scalar::new(1, 2).unwrap();
        assert_eq!(d(0, 0).scale(&half).scale(&Scalar::from(2)), d(0, 0));
        let s = &(&d(1, 0) + &d(1, 1)) + &d(1, 0);
        assert_eq!(s.to_string(), "2*d[1,0] + d[1,1]");
    }

    #[test]
    fn bigrade_examples() {
        let e = &d(0, 0) + &x(1, 0);
        let parts = e.bigrade();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&(0, 1)], d(0, 0));
        assert_eq!(parts[&(1, 1)], x(1, 0));
        assert!(Element::zero().bigrade().is_empty());
        let w = d(1, 1).compose(&d(0, 0));
        assert_eq!(w.bigrade().keys().copied().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn free_equality() {
        assert!(d(0, 0).free_equal(&d(0, 0)));
        let a = d(1, 0).compose(&d(0, 0));
        let b = d(1, 1).compose(&d(0, 0));
        assert!(!a.free_equal(&b));
        assert!((&a + &b).free_equal(&(&b + &a)));
    }

    #[test]
    fn printing() {
        let e = &(&d(0, 0).scale(&Scalar::from(-1)) + &x(1, 0).scale(&Scalar::new(3, 2).unwrap()))
            - &Element::identity(2);
        assert_eq!(e.to_string(), "-d[0,0] + 3/2*x[1,0] - 1[2]");
    }
}
