use std::time::Instant;

use serde_json::json;

use super::common::{chi, del, elem, params, run_jobs, word, Job};
use super::report::{CheckInstance, Report};
use crate::algebra::{Element, Generator, Level};
use crate::engine::Engine;
use crate::error::Result;
use crate::laws::Side;
use crate::leibniz::{alpha, IdealGenerator};

const MAG: &str = "α respects ∂_i∂_j = ∂_{j+1}∂_i for i < j";
const MIXED: &str = "α respects the ζ relation ∂_iχ_j = ζ(∂_i⊗χ_j)";
const MULT: &str = "α(xy) = α(x)α(y) on generator pairs, under SymMag equality";
const INVOLUTION: &str = "α∘α = id under SymMag equality";
const EXCHANGE: &str = "α maps ideal generators of one Leibniz side into the other ideal";
const UNIT: &str = "α(1_n) = 1_n";

fn symmag_same(engine: &Engine, x: &Element, y: &Element) -> Result<bool> {
    Ok(engine.symmag_normalize(x)? == engine.symmag_normalize(y)?)
}

fn push_same<'a>(
    jobs: &mut Vec<Job<'a>>,
    engine: &'a Engine,
    name: &'static str,
    anchor: &'static str,
    p: serde_json::Value,
    lhs: impl Fn() -> Result<Element> + Send + Sync + 'a,
    rhs: impl Fn() -> Result<Element> + Send + Sync + 'a,
) {
    jobs.push(Box::new(move || {
        let (l, r) = match (lhs(), rhs()) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(e), _) | (_, Err(e)) => {
                return CheckInstance::judge(name, anchor, p.clone(), &Element::zero(), &Element::zero(), Err(e))
            }
        };
        let verdict = symmag_same(engine, &l, &r);
        CheckInstance::judge(name, anchor, p.clone(), &l, &r, verdict)
    }));
}

/// Every generator at level `n`.
fn generators(n: Level) -> Vec<Generator> {
    let mut out: Vec<Generator> = (0..=n).map(|j| del(n, j)).collect();
    out.extend((0..n).map(|i| chi(n, i)));
    out
}

fn gen_param(g: &Generator) -> String {
    g.to_string()
}

/// α as an automorphism of SymMag that exchanges the two Leibniz ideals,
/// for generator levels `n <= n_max`.
pub fn check_alpha(engine: &Engine, n_max: Level) -> Report {
    let started = Instant::now();
    let mut jobs: Vec<Job> = Vec::new();
    for n in 0..n_max {
        for i in 0..=n + 1 {
            for j in i + 1..=n {
                let l = elem(&word(vec![del(n + 1, i), del(n, j)]));
                let r = elem(&word(vec![del(n + 1, j + 1), del(n, i)]));
                let p = params(&[("n", n as i64), ("i", i as i64), ("j", j as i64)]);
                push_same(&mut jobs, engine, "mag-relation", MAG, p, move || alpha(&l), move || alpha(&r));
            }
        }
    }
    for n in 1..=n_max {
        for i in 0..=n {
            for j in 0..n {
                let l = elem(&word(vec![del(n, i), chi(n, j)]));
                let p = params(&[("n", n as i64), ("i", i as i64), ("j", j as i64)]);
                let l2 = l.clone();
                push_same(
                    &mut jobs,
                    engine,
                    "mixed-relation",
                    MIXED,
                    p,
                    move || alpha(&l),
                    move || alpha(&engine.zeta_move_left(&l2)?),
                );
            }
        }
    }
    for n in 0..=n_max {
        for h in generators(n) {
            for g in generators(h.target()) {
                if g.level() > n_max {
                    continue;
                }
                let gh = Element::from_word(word(vec![g, h]));
                let p = json!({ "x": gen_param(&g), "y": gen_param(&h) });
                push_same(
                    &mut jobs,
                    engine,
                    "multiplicative",
                    MULT,
                    p,
                    move || alpha(&engine.symmag_normalize(&gh)?),
                    move || Ok(alpha(&Element::from_gen(g))?.compose(&alpha(&Element::from_gen(h))?)),
                );
            }
        }
    }
    for n in 0..=n_max {
        for g in generators(n) {
            let x = Element::from_gen(g);
            let x2 = x.clone();
            let p = json!({ "x": gen_param(&g) });
            push_same(&mut jobs, engine, "involution", INVOLUTION, p, move || alpha(&alpha(&x)?), move || Ok(x2.clone()));
            for h in generators(g.target()) {
                if h.level() > n_max {
                    continue;
                }
                let x = Element::from_word(word(vec![h, g]));
                let x2 = x.clone();
                let p = json!({ "x": gen_param(&h), "y": gen_param(&g) });
                push_same(&mut jobs, engine, "involution", INVOLUTION, p, move || alpha(&alpha(&x)?), move || Ok(x2.clone()));
            }
        }
    }
    for (from, to) in [(Side::Leib, Side::LeibOp), (Side::LeibOp, Side::Leib)] {
        for g in IdealGenerator::all(from, n_max) {
            let p = json!({ "side": from.name(), "n": g.n, "j": g.j });
            jobs.push(Box::new(move || {
                let run = || engine.normalize_in(to, &alpha(&engine.ideal_generator(&g)?)?);
                match run() {
                    Ok(nf) => CheckInstance::judge("ideal-exchange", EXCHANGE, p.clone(), &nf, &Element::zero(), Ok(nf.is_zero())),
                    Err(e) => CheckInstance::judge("ideal-exchange", EXCHANGE, p.clone(), &Element::zero(), &Element::zero(), Err(e)),
                }
            }));
        }
    }
    for n in 0..=n_max {
        let id = Element::identity(n);
        let p = params(&[("n", n as i64)]);
        jobs.push(Box::new(move || {
            let out = alpha(&id);
            let l = out.clone().unwrap_or_default();
            CheckInstance::judge("unit", UNIT, p.clone(), &l, &id, out.map(|a| a == id))
        }));
    }
    Report::new("alpha", json!({ "n_max": n_max }), run_jobs(jobs), started)
}
