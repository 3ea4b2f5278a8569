use rayon::prelude::*;

use crate::algebra::{Element, GenKind, Generator, Level, Word};
use crate::error::Result;
use crate::groups::perm_of_chi_word;
use crate::rewrite::{straighten_word, Flavor, Monomial};

use super::report::CheckInstance;

/// A deferred check; suites collect these and evaluate them in parallel.
pub(crate) type Job<'a> = Box<dyn Fn() -> CheckInstance + Send + Sync + 'a>;

/// Evaluates jobs concurrently and returns instances in job order.
pub(crate) fn run_jobs(jobs: Vec<Job<'_>>) -> Vec<CheckInstance> {
    jobs.par_iter().map(|j| j()).collect()
}

pub(crate) fn del(n: Level, j: usize) -> Generator {
    Generator::del(n, j).expect("suite indices are in range")
}

pub(crate) fn chi(n: Level, i: usize) -> Generator {
    Generator::chi(n, i).expect("suite indices are in range")
}

pub(crate) fn word(gens: Vec<Generator>) -> Word {
    Word::new(gens).expect("suite words are composable")
}

pub(crate) fn chi_word(level: Level, idx: &[usize]) -> Word {
    Word::with_source(level, idx.iter().map(|&i| chi(level, i)).collect()).expect("χ-words are composable")
}

/// All χ-words at `level` with length in `1..=len_max`.
pub(crate) fn chi_words(level: Level, len_max: usize) -> Vec<Word> {
    if level == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..len_max {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..level {
                let mut v = w.clone();
                v.push(i);
                out.push(chi_word(level, &v));
                next.push(v);
            }
        }
        frontier = next;
    }
    out
}

pub(crate) fn elem(w: &Word) -> Element {
    Element::from_word(w.clone())
}

/// Splits an ordered word `(χ-word)(tail)` at the first non-χ generator.
pub(crate) fn split_ordered(w: &Word) -> (Word, Word) {
    let k = w.gens().iter().position(|g| g.kind() != GenKind::Chi).unwrap_or(w.len());
    let (p, s) = w.gens().split_at(k);
    let tail = Word::with_source(w.source(), s.to_vec()).expect("suffix of a word");
    let prefix = Word::with_source(tail.target(), p.to_vec()).expect("prefix of a word");
    (prefix, tail)
}

/// Reads an ordered word as (permutation, straightened tail).
pub(crate) fn ordered_monomial(w: &Word, kind: GenKind, flavor: Flavor) -> Result<Monomial> {
    let (p, s) = split_ordered(w);
    let perm = perm_of_chi_word(&p)?;
    let tail = straighten_word(&s, kind, flavor)?;
    Monomial::new(perm, tail.gens().iter().map(|g| g.index()).collect())
}

pub(crate) fn params(pairs: &[(&str, i64)]) -> serde_json::Value {
    let mut m = serde_json::Map::new();
    for (k, v) in pairs {
        m.insert((*k).to_string(), (*v).into());
    }
    serde_json::Value::Object(m)
}
