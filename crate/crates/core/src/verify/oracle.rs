//! Brute-force linear algebra over the free bigraded pieces of Sym⊗ζMag.
//!
//! The free basis at bidegree `(n, t)` is every pair (permutation of
//! `t + 1` points, Mag-normal ∂-tail from `n` to `t`). The ideal is spanned
//! by all products `a · g · b` of generator expansions `g` with basis
//! monomials `a`, `b`; rows are straightened into the free basis and
//! reduced with exact integer elimination.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use super::linalg::{canonical, SparseEchelon, SparseVec};
use crate::algebra::{Element, GenKind, Level, Word};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::groups::Permutation;
use crate::laws::Side;
use crate::leibniz::IdealGenerator;
use crate::rewrite::{normal_tails, sym_basis_monomials, tail_word, Flavor, Monomial};

/// Largest target level the dimension oracle accepts by default.
pub const DEFAULT_MAX_TARGET: Level = 5;

/// Which products `a · g · b` span the ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowFamily {
    /// Every product of basis monomials with a generator: the whole ideal.
    Full,
    /// Only `a · g` with the generator at the bottom of the bidegree. Its
    /// span is contained in the ideal, so a positive membership answer is
    /// still exact; a negative one is inconclusive.
    LeftTranslates,
}

/// Indexes the free basis of Sym⊗Mag at one bidegree by
/// `perm_rank · #tails + tail_position`.
struct FreeIndex {
    level: Level,
    tails: Vec<Vec<usize>>,
    tail_pos: HashMap<Vec<usize>, u32>,
}

impl FreeIndex {
    fn new(n: Level, t: Level) -> Result<Self> {
        let tails = normal_tails(n, t, Flavor::Mag);
        let total = factorial(t + 1)
            .checked_mul(tails.len() as u128)
            .filter(|&d| d < u32::MAX as u128);
        if total.is_none() {
            return Err(Error::BoundExceeded {
                source_level: n,
                target_level: t,
                bound: t.saturating_sub(1),
            });
        }
        let tail_pos = tails.iter().enumerate().map(|(k, t)| (t.clone(), k as u32)).collect();
        Ok(FreeIndex { level: t, tails, tail_pos })
    }

    fn dimension(&self) -> usize {
        factorial(self.level + 1) as usize * self.tails.len()
    }

    fn column(&self, perm: &Permutation, tail: &[usize]) -> u32 {
        perm_rank(perm) * self.tails.len() as u32 + self.tail_pos[tail]
    }
}

pub(crate) fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Rank of a permutation in lexicographic order of its one-line notation.
fn perm_rank(p: &Permutation) -> u32 {
    let v = p.images();
    let len = v.len();
    let mut rank = 0u32;
    for i in 0..len {
        let smaller = v[i + 1..].iter().filter(|&&x| x < v[i]).count() as u32;
        rank = rank * (len - i) as u32 + smaller;
    }
    rank
}

/// The span of an ideal at one bidegree.
pub struct IdealOracle {
    side: Side,
    source: Level,
    target: Level,
    family: RowFamily,
    index: FreeIndex,
    rows: Vec<SparseVec>,
    components: Mutex<Option<Components>>,
}

struct Components {
    parent: Vec<u32>,
    rows_by_root: HashMap<u32, Vec<usize>>,
    echelons: HashMap<u32, Arc<SparseEchelon>>,
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

impl IdealOracle {
    /// Spans the ideal at `(n, t)`. Fails with `BoundExceeded` when
    /// `t > max_target`.
    pub fn new(engine: &Engine, side: Side, n: Level, t: Level, max_target: Level) -> Result<Self> {
        Self::with_family(engine, side, n, t, max_target, RowFamily::Full)
    }

    pub fn with_family(
        engine: &Engine,
        side: Side,
        n: Level,
        t: Level,
        max_target: Level,
        family: RowFamily,
    ) -> Result<Self> {
        if t > max_target {
            return Err(Error::BoundExceeded {
                source_level: n,
                target_level: t,
                bound: max_target,
            });
        }
        if t < n {
            return Err(Error::NotHomogeneous(format!("target {t} below source {n}")));
        }
        let index = FreeIndex::new(n, t)?;
        let base = base_rows(engine, side, n, t, family)?;
        let perms = Permutation::all(t);
        let rows: Vec<SparseVec> = perms
            .par_iter()
            .map(|p| {
                base.iter()
                    .map(|row| {
                        canonical(
                            row.iter()
                                .map(|(q, tail, c)| (index.column(&p.compose(q), tail), *c))
                                .collect(),
                        )
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .filter(|r| !r.is_empty())
            .collect();
        Ok(IdealOracle {
            side,
            source: n,
            target: t,
            family,
            index,
            rows,
            components: Mutex::new(None),
        })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn family(&self) -> RowFamily {
        self.family
    }

    pub fn bidegree(&self) -> (Level, Level) {
        (self.source, self.target)
    }

    pub fn free_dimension(&self) -> usize {
        self.index.dimension()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Rank of the spanning rows, by exact elimination.
    pub fn rank(&self) -> Result<usize> {
        let mut e = SparseEchelon::new();
        for r in &self.rows {
            e.insert(r.clone())?;
        }
        Ok(e.rank())
    }

    pub fn quotient_dimension(&self) -> Result<usize> {
        Ok(self.free_dimension() - self.rank()?)
    }

    /// Coordinates of `x` in the free basis, scaled to integers.
    pub fn coordinates(&self, engine: &Engine, x: &Element) -> Result<SparseVec> {
        let terms = engine.sym_terms(x, Flavor::Mag)?;
        let mut lcm = BigInt::one();
        for c in terms.values() {
            lcm = lcm.lcm(c.denominator());
        }
        let mut entries = Vec::with_capacity(terms.len());
        for (pair, c) in &terms {
            if (pair.source(), pair.target()) != (self.source, self.target) {
                return Err(Error::NotHomogeneous(format!(
                    "term {pair} is outside bidegree ({}, {})",
                    self.source, self.target
                )));
            }
            let v = c.numerator() * (&lcm / c.denominator());
            let v = v.to_i128().ok_or(Error::Overflow)?;
            entries.push((self.index.column(pair.perm(), pair.tail()), v));
        }
        canonical(entries)
    }

    /// Exact membership of a homogeneous element of this bidegree.
    ///
    /// Only the connected components of the row/column incidence graph
    /// that meet the support of `x` are eliminated; echelon forms are
    /// cached per component.
    pub fn contains(&self, engine: &Engine, x: &Element) -> Result<bool> {
        let v = self.coordinates(engine, x)?;
        let mut by_root: HashMap<u32, SparseVec> = HashMap::new();
        let echelons: Vec<(Arc<SparseEchelon>, SparseVec)> = {
            let mut guard = self.components.lock().expect("oracle lock");
            let comps = guard.get_or_insert_with(|| self.build_components());
            for &(c, val) in &v {
                let root = find(&mut comps.parent, c);
                by_root.entry(root).or_default().push((c, val));
            }
            let mut out = Vec::new();
            for (root, part) in by_root {
                let ech = match comps.echelons.get(&root) {
                    Some(e) => e.clone(),
                    None => {
                        let mut e = SparseEchelon::new();
                        for &r in comps.rows_by_root.get(&root).map(Vec::as_slice).unwrap_or(&[]) {
                            e.insert(self.rows[r].clone())?;
                        }
                        let e = Arc::new(e);
                        comps.echelons.insert(root, e.clone());
                        e
                    }
                };
                out.push((ech, part));
            }
            out
        };
        for (ech, part) in echelons {
            if !ech.contains(part)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn build_components(&self) -> Components {
        let mut parent: Vec<u32> = (0..self.free_dimension() as u32).collect();
        for r in &self.rows {
            let a = find(&mut parent, r[0].0);
            for &(c, _) in &r[1..] {
                let b = find(&mut parent, c);
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi as usize] = lo;
                }
            }
        }
        let mut rows_by_root: HashMap<u32, Vec<usize>> = HashMap::new();
        for (k, r) in self.rows.iter().enumerate() {
            let root = find(&mut parent, r[0].0);
            rows_by_root.entry(root).or_default().push(k);
        }
        Components {
            parent,
            rows_by_root,
            echelons: HashMap::new(),
        }
    }
}

/// One ideal-generator product with its left permutation stripped:
/// summands `(Q, tail, c)`.
type BaseRow = Vec<(Permutation, Vec<usize>, i128)>;

fn base_rows(engine: &Engine, side: Side, n: Level, t: Level, family: RowFamily) -> Result<Vec<BaseRow>> {
    let mut jobs: Vec<(Element, Word, Monomial)> = Vec::new();
    let lowest = if t >= n + 2 { t - 2 } else { return Ok(Vec::new()) };
    for np in n..=lowest {
        if family == RowFamily::LeftTranslates && np != n {
            continue;
        }
        let lower: Vec<Monomial> = match family {
            RowFamily::Full => sym_basis_monomials(n, np, Flavor::Mag),
            RowFamily::LeftTranslates => vec![Monomial::identity(n)],
        };
        for j in 0..=np {
            let g = engine.ideal_generator(&IdealGenerator::new(side, np, j)?)?;
            for upper in normal_tails(np + 2, t, Flavor::Mag) {
                let top = tail_word(GenKind::Del, np + 2, &upper);
                for b in &lower {
                    jobs.push((g.clone(), top.clone(), b.clone()));
                }
            }
        }
    }
    let rows: Vec<BaseRow> = jobs
        .par_iter()
        .map(|(g, top, b)| {
            let bw = b.to_word(GenKind::Del);
            let mut acc: HashMap<Monomial, i128> = HashMap::new();
            for (w, c) in g.terms() {
                let word = compose3(top, w, &bw);
                let m = engine.sym_straighten(&word, Flavor::Mag)?;
                let c = c.numerator().to_i128().ok_or(Error::Overflow)?;
                *acc.entry(m).or_insert(0) += c;
            }
            let mut row: BaseRow = acc
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(m, c)| {
                    let (p, tail) = m.into_parts();
                    (p, tail, c)
                })
                .collect();
            row.sort();
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut seen = HashSet::new();
    Ok(rows.into_iter().filter(|r| !r.is_empty() && seen.insert(r.clone())).collect())
}

fn compose3(a: &Word, b: &Word, c: &Word) -> Word {
    a.compose(b)
        .and_then(|ab| ab.compose(c))
        .expect("ideal products are composable by construction")
}

/// `dim` of the quotient by `side`'s ideal at `(n, t)`.
pub fn quotient_dimension_oracle(engine: &Engine, side: Side, n: Level, t: Level, max_target: Level) -> Result<usize> {
    IdealOracle::new(engine, side, n, t, max_target)?.quotient_dimension()
}

/// Whether the homogeneous element `x` lies in `side`'s ideal. The zero
/// element is always a member.
pub fn ideal_membership_oracle(engine: &Engine, side: Side, x: &Element, t_max: Level) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    let Some((n, t)) = x.homogeneous_bidegree() else {
        return Err(Error::NotHomogeneous(x.to_string()));
    };
    IdealOracle::new(engine, side, n, t, t_max)?.contains(engine, x)
}
