use crate::algebra::{out_of_range, Element, GenKind, Generator, Level, Scalar, Word};
use crate::engine::Engine;
use crate::error::Result;
use crate::laws::{IdealLaw, Side};
use crate::rewrite::chi_index;

/// A generator of one of the two Leibniz ideals, indexed by `(n, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealGenerator {
    pub side: Side,
    pub n: Level,
    pub j: usize,
}

impl IdealGenerator {
    pub fn new(side: Side, n: Level, j: usize) -> Result<Self> {
        if j > n {
            return Err(out_of_range(GenKind::Del, n, j as i64));
        }
        Ok(IdealGenerator { side, n, j })
    }

    /// Every generator with `n <= n_max`, ordered by `(n, j)`.
    pub fn all(side: Side, n_max: Level) -> Vec<IdealGenerator> {
        (0..=n_max)
            .flat_map(|n| (0..=n).map(move |j| IdealGenerator { side, n, j }))
            .collect()
    }

    /// The three-term expansion under `law`:
    /// `∂_{j+first}∂_j − ∂_{j+second}∂_j − chi_sign·χ_{j+offset}∂_{j+second}∂_j`.
    pub fn expand_with(&self, law: &IdealLaw) -> Result<Element> {
        let (n, j) = (self.n, self.j as i64);
        let pair = |top: i64| -> Result<Word> {
            let upper = Generator::checked(GenKind::Del, n + 1, j + top)?;
            Ok(Word::from_parts_unchecked(n, vec![upper, Generator::del(n, self.j)?]))
        };
        let first = pair(law.first)?;
        let second = pair(law.second)?;
        let chi = Generator::chi(n + 2, chi_index(n + 2, j + law.chi_offset)?)?;
        let twisted = Word::from_gen(chi).compose(&second).expect("levels agree");
        Ok(Element::from_terms([
            (Scalar::one(), first),
            (Scalar::from(-1), second),
            (Scalar::from(-law.chi_sign), twisted),
        ]))
    }
}

impl Engine {
    /// The expansion of an ideal generator under this engine's laws.
    pub fn ideal_generator(&self, g: &IdealGenerator) -> Result<Element> {
        g.expand_with(self.laws().ideal(g.side))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;

    #[test]
    fn expansions() {
        let e = Engine::default();
        let g = IdealGenerator::new(Side::Leib, 0, 0).unwrap();
        assert_eq!(
            e.ideal_generator(&g).unwrap(),
            parse_element("d[1,1]*d[0,0] - d[1,0]*d[0,0] + x[2,1]*d[1,0]*d[0,0]").unwrap()
        );
        let g = IdealGenerator::new(Side::LeibOp, 0, 0).unwrap();
        assert_eq!(
            e.ideal_generator(&g).unwrap(),
            parse_element("d[1,0]*d[0,0] - d[1,1]*d[0,0] + x[2,0]*d[1,1]*d[0,0]").unwrap()
        );
        for side in [Side::Leib, Side::LeibOp] {
            for g in IdealGenerator::all(side, 3) {
                let x = e.ideal_generator(&g).unwrap();
                let mut coeffs: Vec<i64> = x
                    .terms()
                    .map(|(_, c)| if c.is_negative() { -1 } else { 1 })
                    .collect();
                coeffs.sort();
                assert_eq!(coeffs, vec![-1, 1, 1]);
            }
        }
        assert!(IdealGenerator::new(Side::Leib, 1, 2).is_err());
    }
}
