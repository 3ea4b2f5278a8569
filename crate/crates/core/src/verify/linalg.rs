//! Fraction-free sparse row echelon form over the integers.

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A sparse integer vector: strictly increasing column indices, no zeros.
pub type SparseVec = Vec<(u32, i128)>;

/// Rows in echelon form keyed by leading column. Every stored row is
/// primitive (content 1) with a positive leading coefficient.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    pivots: HashMap<u32, SparseVec>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        SparseEchelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` by leading terms until it is zero or has a leading
    /// column without a pivot. Returns the remainder.
    pub fn reduce(&self, mut v: SparseVec) -> Result<SparseVec> {
        make_primitive(&mut v);
        while let Some(&(c, _)) = v.first() {
            let Some(p) = self.pivots.get(&c) else { break };
            v = eliminate(&v, p)?;
        }
        Ok(v)
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> Result<bool> {
        let v = self.reduce(v)?;
        match v.first() {
            None => Ok(false),
            Some(&(c, _)) => {
                self.pivots.insert(c, v);
                Ok(true)
            }
        }
    }

    pub fn contains(&self, v: SparseVec) -> Result<bool> {
        Ok(self.reduce(v)?.is_empty())
    }
}

/// `(p₀/g)·v − (v₀/g)·p` with `g = gcd(v₀, p₀)`; both inputs share their
/// leading column, which cancels.
fn eliminate(v: &SparseVec, p: &SparseVec) -> Result<SparseVec> {
    let (a, b) = (v[0].1, p[0].1);
    let g = a.gcd(&b);
    let (fv, fp) = (b / g, a / g);
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < v.len() || j < p.len() {
        let take_v = j >= p.len() || (i < v.len() && v[i].0 < p[j].0);
        let take_p = i >= v.len() || (j < p.len() && p[j].0 < v[i].0);
        let (col, val) = if take_v {
            let r = (v[i].0, mul(v[i].1, fv)?);
            i += 1;
            r
        } else if take_p {
            let r = (p[j].0, -mul(p[j].1, fp)?);
            j += 1;
            r
        } else {
            let x = mul(v[i].1, fv)?
                .checked_sub(mul(p[j].1, fp)?)
                .ok_or(Error::Overflow)?;
            let r = (v[i].0, x);
            i += 1;
            j += 1;
            r
        };
        if val != 0 {
            out.push((col, val));
        }
    }
    make_primitive(&mut out);
    Ok(out)
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn make_primitive(v: &mut SparseVec) {
    let Some(&(_, lead)) = v.first() else { return };
    let mut g = 0i128;
    for &(_, x) in v.iter() {
        g = g.gcd(&x);
        if g == 1 {
            break;
        }
    }
    if lead < 0 {
        g = -g;
    }
    if g != 1 {
        for e in v.iter_mut() {
            e.1 /= g;
        }
    }
}

/// Sorts by column, merges duplicates and drops zeros.
pub fn canonical(mut entries: Vec<(u32, i128)>) -> Result<SparseVec> {
    entries.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (c, x) in entries {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = last.1.checked_add(x).ok_or(Error::Overflow)?,
            _ => out.push((c, x)),
        }
        if out.last().is_some_and(|l| l.1 == 0) {
            out.pop();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_membership() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(vec![(0, 2), (1, 4)]).unwrap());
        assert!(e.insert(vec![(0, 3), (2, 1)]).unwrap());
        assert!(!e.insert(vec![(1, 6), (2, -1)]).unwrap());
        assert_eq!(e.rank(), 2);
        assert!(e.contains(vec![(0, 5), (1, 4), (2, 1)]).unwrap());
        assert!(!e.contains(vec![(2, 1)]).unwrap());
    }

    #[test]
    fn canonical_merges() {
        let v = canonical(vec![(3, 1), (1, 2), (3, -1), (1, 1)]).unwrap();
        assert_eq!(v, vec![(1, 3)]);
    }
}
