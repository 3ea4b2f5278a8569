use std::fmt;

use super::straighten::{tail_word, Flavor};
use crate::algebra::{GenKind, Level, Word};
use crate::error::{Error, Result};

/// A non-decreasing surjection `{0..m} → {0..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderPresSurj {
    values: Vec<usize>,
}

impl OrderPresSurj {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.first() != Some(&0) {
            return Err(Error::NotSurjection(format!("{values:?} must start at 0")));
        }
        if values.windows(2).any(|w| w[1] != w[0] && w[1] != w[0] + 1) {
            return Err(Error::NotSurjection(format!(
                "{values:?} must be non-decreasing without gaps"
            )));
        }
        Ok(OrderPresSurj { values })
    }

    pub fn identity(level: Level) -> Self {
        OrderPresSurj {
            values: (0..=level).collect(),
        }
    }

    /// `σⁿⱼ : {0..n+1} → {0..n}`, sending `j` and `j + 1` to `j`.
    pub fn sigma(n: Level, j: usize) -> Result<Self> {
        if j > n {
            return Err(crate::algebra::out_of_range(GenKind::Del, n, j as i64));
        }
        Ok(OrderPresSurj {
            values: (0..=n + 1).map(|p| if p > j { p - 1 } else { p }).collect(),
        })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Domain level `m`.
    pub fn domain(&self) -> Level {
        self.values.len() - 1
    }

    /// Codomain level `n`.
    pub fn codomain(&self) -> Level {
        *self.values.last().expect("non-empty")
    }

    /// `self ∘ other`, or `None` unless `other` lands in the domain of `self`.
    pub fn compose(&self, other: &OrderPresSurj) -> Option<OrderPresSurj> {
        (other.codomain() == self.domain()).then(|| OrderPresSurj {
            values: other.values.iter().map(|&p| self.values[p]).collect(),
        })
    }

    /// Every surjection `{0..m} → {0..n}`.
    pub fn all(m: Level, n: Level) -> Vec<OrderPresSurj> {
        if n > m {
            return Vec::new();
        }
        // Choose which of the m gaps are steps: exactly n of them.
        let mut out = Vec::new();
        let mut values = vec![0usize; m + 1];
        fn rec(p: usize, steps: usize, n: usize, values: &mut Vec<usize>, out: &mut Vec<OrderPresSurj>) {
            let m = values.len() - 1;
            if p == m {
                if steps == n {
                    out.push(OrderPresSurj {
                        values: values.clone(),
                    });
                }
                return;
            }
            for step in [0, 1] {
                if steps + step > n || n - (steps + step) > m - p - 1 {
                    continue;
                }
                values[p + 1] = values[p] + step;
                rec(p + 1, steps + step, n, values, out);
            }
        }
        rec(0, 0, n, &mut values, &mut out);
        out
    }
}

impl fmt::Display for OrderPresSurj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

/// The surjection of a Simp-normal ∂-word from level `n` to level `m`:
/// `∂_{j_{m-1}} ⋯ ∂_{j_n} ↦ σ_{j_n} ∘ ⋯ ∘ σ_{j_{m-1}}`.
pub fn surjection_of_simp_word(w: &Word) -> Result<OrderPresSurj> {
    if let Some(g) = w.gens().iter().find(|g| g.kind() != GenKind::Del) {
        return Err(Error::UnexpectedGenerator {
            generator: g.to_string(),
            context: "Simp words contain only ∂",
        });
    }
    let idx: Vec<usize> = w.gens().iter().map(|g| g.index()).collect();
    if !Flavor::Simp.is_normal(&idx) {
        return Err(Error::NotNormal(format!("{w} is not in Simp normal form")));
    }
    let values = (0..=w.target())
        .map(|p| idx.iter().fold(p, |v, &j| if v > j { v - 1 } else { v }))
        .collect();
    Ok(OrderPresSurj { values })
}

/// Inverse of [`surjection_of_simp_word`]: the subscripts are the collapse
/// points `p` with `f(p) = f(p + 1)`, in decreasing order.
pub fn simp_word_of_surjection(f: &OrderPresSurj) -> Word {
    let mut idx: Vec<usize> = (0..f.domain())
        .filter(|&p| f.values[p] == f.values[p + 1])
        .collect();
    idx.reverse();
    tail_word(GenKind::Del, f.codomain(), &idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Generator;
    use crate::rewrite::{enumerate_basis, BasisAlgebra};

    #[test]
    fn examples() {
        assert_eq!(simp_word_of_surjection(&OrderPresSurj::identity(3)), Word::identity(3));
        assert_eq!(surjection_of_simp_word(&Word::identity(2)).unwrap(), OrderPresSurj::identity(2));
        let d = Word::from_gen(Generator::del(2, 1).unwrap());
        assert_eq!(surjection_of_simp_word(&d).unwrap(), OrderPresSurj::sigma(2, 1).unwrap());
        assert_eq!(OrderPresSurj::sigma(2, 1).unwrap().values(), &[0, 1, 1, 2]);
        assert_eq!(OrderPresSurj::all(3, 1).len(), 3);
        assert_eq!(enumerate_basis(BasisAlgebra::Simp, 1, 3).unwrap().len(), 3);
    }

    #[test]
    fn bijection_small() {
        for m in 0..5 {
            for n in 0..=m {
                let words = enumerate_basis(BasisAlgebra::Simp, n, m).unwrap();
                let surj = OrderPresSurj::all(m, n);
                assert_eq!(words.len(), surj.len());
                for f in &surj {
                    let w = simp_word_of_surjection(f);
                    assert_eq!(&surjection_of_simp_word(&w).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(OrderPresSurj::new(vec![0, 2]).is_err());
        assert!(OrderPresSurj::new(vec![1, 1]).is_err());
        assert!(OrderPresSurj::new(vec![0, 1, 0]).is_err());
        let w = Word::new(vec![Generator::del(1, 0).unwrap(), Generator::del(0, 0).unwrap()]).unwrap();
        assert!(surjection_of_simp_word(&w).is_err());
    }
}
