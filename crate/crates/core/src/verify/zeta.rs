use std::time::Instant;

use serde_json::json;

use super::common::{chi, del, elem, params, run_jobs, split_ordered, word, Job};
use super::report::{CheckInstance, Report};
use crate::algebra::{Element, GenKind, Level, Word};
use crate::engine::Engine;
use crate::error::Result;
use crate::groups::{braid_equal, perm_of_chi_word, BraidWord};
use crate::rewrite::{straighten_word, Flavor};

#[derive(Clone, Copy)]
enum Prefix {
    Braid,
    Sym,
}

/// Applies ζ to both words and compares the results as (χ-prefix, ∂-tail)
/// pairs: prefixes in Braid or Sym, tails after Mag or Simp straightening.
#[allow(clippy::too_many_arguments)]
fn zeta_check(
    engine: &Engine,
    name: &str,
    anchor: &str,
    p: serde_json::Value,
    l: &Word,
    r: &Word,
    prefix: Prefix,
    flavor: Flavor,
) -> CheckInstance {
    let run = || -> Result<(bool, Element, Element)> {
        let lz = engine.zeta_word(l)?;
        let rz = engine.zeta_word(r)?;
        let (lp, ls) = split_ordered(&lz);
        let (rp, rs) = split_ordered(&rz);
        let prefixes = match prefix {
            Prefix::Braid => braid_equal(&BraidWord::from_word(&lp)?, &BraidWord::from_word(&rp)?)?,
            Prefix::Sym => perm_of_chi_word(&lp)? == perm_of_chi_word(&rp)?,
        };
        let tails = straighten_word(&ls, GenKind::Del, flavor)? == straighten_word(&rs, GenKind::Del, flavor)?;
        Ok((prefixes && tails, elem(&lz), elem(&rz)))
    };
    match run() {
        Ok((ok, lz, rz)) => CheckInstance::judge(name, anchor, p, &lz, &rz, Ok(ok)),
        Err(e) => CheckInstance::judge(name, anchor, p, &elem(l), &elem(r), Err(e)),
    }
}

const COMMUTATION: &str = "ζ respects χ_jχ_k = χ_kχ_j for |j-k| >= 2 (Mag⊗Braid)";
const BRAID: &str = "ζ respects χ_jχ_{j+1}χ_j = χ_{j+1}χ_jχ_{j+1} (Mag⊗Braid)";
const MAG: &str = "ζ respects ∂_i∂_j = ∂_{j+1}∂_i for i < j (Mag⊗Braid right transposition)";
const SIMP: &str = "ζ respects ∂_i∂_i = ∂_{i+1}∂_i (Simp⊗Braid)";
const SYM: &str = "ζ respects χ_jχ_j = 1 (Mag⊗Sym)";
const UNIT: &str = "ζ is unital: ζ(∂⊗1) = 1⊗∂ and ζ(1⊗χ) = χ⊗1";

/// ζ preserves the braid relations and the Mag relation, for all indices
/// with generator level `n <= n_max`.
pub fn check_zeta_preserves_braid(engine: &Engine, n_max: Level) -> Report {
    let started = Instant::now();
    let mut jobs: Vec<Job> = Vec::new();
    for n in 0..=n_max {
        for i in 0..=n {
            for j in 0..n {
                for k in j + 2..n {
                    let l = word(vec![del(n, i), chi(n, j), chi(n, k)]);
                    let r = word(vec![del(n, i), chi(n, k), chi(n, j)]);
                    let p = params(&[("n", n as i64), ("i", i as i64), ("j", j as i64), ("k", k as i64)]);
                    jobs.push(Box::new(move || {
                        zeta_check(engine, "commutation", COMMUTATION, p.clone(), &l, &r, Prefix::Braid, Flavor::Mag)
                    }));
                }
            }
        }
    }
    for n in 0..=n_max {
        for i in 0..=n {
            for j in 0..n.saturating_sub(1) {
                let l = word(vec![del(n, i), chi(n, j), chi(n, j + 1), chi(n, j)]);
                let r = word(vec![del(n, i), chi(n, j + 1), chi(n, j), chi(n, j + 1)]);
                let p = params(&[("n", n as i64), ("i", i as i64), ("j", j as i64)]);
                jobs.push(Box::new(move || {
                    zeta_check(engine, "braid-relation", BRAID, p.clone(), &l, &r, Prefix::Braid, Flavor::Mag)
                }));
            }
        }
    }
    for n in 1..=n_max {
        for i in 0..=n {
            for j in i + 1..=n {
                for k in 0..n {
                    let l = word(vec![del(n + 1, i), del(n, j), chi(n, k)]);
                    let r = word(vec![del(n + 1, j + 1), del(n, i), chi(n, k)]);
                    let p = params(&[("n", n as i64), ("i", i as i64), ("j", j as i64), ("k", k as i64)]);
                    jobs.push(Box::new(move || {
                        zeta_check(engine, "mag-relation", MAG, p.clone(), &l, &r, Prefix::Braid, Flavor::Mag)
                    }));
                }
            }
        }
    }
    Report::new("zeta-braid", json!({ "n_max": n_max }), run_jobs(jobs), started)
}

/// ζ preserves the Simp relation (under Braid) and the Sym involution,
/// and is unital, for generator levels `n <= n_max`.
pub fn check_zeta_simp_and_sym(engine: &Engine, n_max: Level) -> Report {
    let started = Instant::now();
    let mut jobs: Vec<Job> = Vec::new();
    for n in 1..=n_max {
        for i in 0..=n {
            for k in 0..n {
                let l = word(vec![del(n + 1, i), del(n, i), chi(n, k)]);
                let r = word(vec![del(n + 1, i + 1), del(n, i), chi(n, k)]);
                let p = params(&[("n", n as i64), ("i", i as i64), ("k", k as i64)]);
                jobs.push(Box::new(move || {
                    zeta_check(engine, "simp-relation", SIMP, p.clone(), &l, &r, Prefix::Braid, Flavor::Simp)
                }));
            }
        }
    }
    for n in 1..=n_max {
        for i in 0..=n {
            for j in 0..n {
                let l = word(vec![del(n, i), chi(n, j), chi(n, j)]);
                let r = word(vec![del(n, i)]);
                let p = params(&[("n", n as i64), ("i", i as i64), ("j", j as i64)]);
                jobs.push(Box::new(move || {
                    zeta_check(engine, "sym-involution", SYM, p.clone(), &l, &r, Prefix::Sym, Flavor::Mag)
                }));
            }
        }
    }
    for n in 0..=n_max {
        for i in 0..=n {
            let d = word(vec![del(n, i)]);
            let p = params(&[("n", n as i64), ("i", i as i64)]);
            jobs.push(Box::new(move || {
                let out = engine.zeta_word(&d).map(|z| z == d);
                CheckInstance::judge("unit-right", UNIT, p.clone(), &elem(&d), &elem(&d), out)
            }));
        }
        for i in 0..n {
            let x = word(vec![chi(n, i)]);
            let p = params(&[("n", n as i64), ("i", i as i64)]);
            jobs.push(Box::new(move || {
                let out = engine.zeta_word(&x).map(|z| z == x);
                CheckInstance::judge("unit-left", UNIT, p.clone(), &elem(&x), &elem(&x), out)
            }));
        }
    }
    Report::new("zeta-simp-sym", json!({ "n_max": n_max }), run_jobs(jobs), started)
}
