use crate::algebra::{Element, GenKind, Scalar};
use crate::error::{Error, Result};
use crate::groups::{braid_equal, chi_word_of_perm, perm_of_chi_word, BraidWord, Permutation};
use crate::laws::Laws;
use crate::rewrite::{mag_normalize, simp_normalize};

/// Entry point for every law-dependent operation.
///
/// An engine owns a rule table; [`Engine::default`] uses the standard
/// tables. Engines are immutable and can be shared across threads.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Engine {
    laws: Laws,
}

impl Engine {
    pub fn new(laws: Laws) -> Self {
        Engine { laws }
    }

    pub fn laws(&self) -> &Laws {
        &self.laws
    }
}

/// The algebras an element can be normalized or compared in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    Mag,
    Simp,
    Braid,
    Sym,
    SymMag,
    SymSimp,
    Leib,
    LeibOp,
    /// The free algebra on the generators: words are compared literally.
    Free,
}

impl Algebra {
    pub const ALL: [Algebra; 9] = [
        Algebra::Mag,
        Algebra::Simp,
        Algebra::Braid,
        Algebra::Sym,
        Algebra::SymMag,
        Algebra::SymSimp,
        Algebra::Leib,
        Algebra::LeibOp,
        Algebra::Free,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Mag => "mag",
            Algebra::Simp => "simp",
            Algebra::Braid => "braid",
            Algebra::Sym => "sym",
            Algebra::SymMag => "symmag",
            Algebra::SymSimp => "symsimp",
            Algebra::Leib => "leib",
            Algebra::LeibOp => "leibop",
            Algebra::Free => "free",
        }
    }
}

fn sym_normalize(x: &Element) -> Result<Element> {
    x.try_map_words(|w| {
        if let Some(g) = w.gens().iter().find(|g| g.kind() != GenKind::Chi) {
            return Err(Error::UnexpectedGenerator {
                generator: g.to_string(),
                context: "Sym contains only χ",
            });
        }
        let p = if w.is_empty() {
            Permutation::identity(w.source())
        } else {
            perm_of_chi_word(w)?
        };
        Ok(Element::from_word(chi_word_of_perm(&p)))
    })
}

/// Equality in the braid group algebra: terms are grouped into braid
/// classes and coefficients compared class by class.
fn braid_elements_equal(x: &Element, y: &Element) -> Result<bool> {
    let mut classes: Vec<(BraidWord, Scalar)> = Vec::new();
    for (sign, e) in [(1i64, x), (-1, y)] {
        for (w, c) in e.terms() {
            let b = BraidWord::from_word(w)?;
            let c = c.clone() * Scalar::from_int(sign);
            match classes
                .iter_mut()
                .find(|(rep, _)| rep.level() == b.level() && braid_equal(rep, &b).unwrap_or(false))
            {
                Some((_, acc)) => *acc += &c,
                None => classes.push((b, c)),
            }
        }
    }
    Ok(classes.iter().all(|(_, c)| c.is_zero()))
}

impl Engine {
    /// The normal form of `x` in `algebra`. Braid has none.
    pub fn normalize_as(&self, algebra: Algebra, x: &Element) -> Result<Element> {
        match algebra {
            Algebra::Mag => mag_normalize(x),
            Algebra::Simp => simp_normalize(x),
            Algebra::Sym => sym_normalize(x),
            Algebra::SymMag => self.symmag_normalize(x),
            Algebra::SymSimp => self.symsimp_normalize(x),
            Algebra::Leib => self.leib_normalize(x),
            Algebra::LeibOp => self.leibop_normalize(x),
            Algebra::Free => Ok(x.clone()),
            Algebra::Braid => Err(Error::NoCanonicalForm("Braid")),
        }
    }

    /// Decides `x = y` in `algebra`.
    pub fn equal_as(&self, algebra: Algebra, x: &Element, y: &Element) -> Result<bool> {
        match algebra {
            Algebra::Braid => braid_elements_equal(x, y),
            _ => Ok(self.normalize_as(algebra, x)? == self.normalize_as(algebra, y)?),
        }
    }
}
