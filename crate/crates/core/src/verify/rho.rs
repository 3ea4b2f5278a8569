use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::json;

use super::common::{run_jobs, Job};
use super::oracle::{IdealOracle, RowFamily};
use super::report::{CheckInstance, Report};
use crate::algebra::{Element, Generator, Level, Word};
use crate::engine::Engine;
use crate::error::Result;
use crate::laws::Side;
use crate::leibniz::{alpha, del_in_rho, expand_rho};

const OMEGA: &str = "ω: ρⁿᵢχⁿⱼ equals its three-case rewrite in Leib";
const SIMP: &str = "ρ^{n+1}_i ρⁿ_j = ρ^{n+1}_{j+1} ρⁿ_i in Leib for i <= j";
const ROUND_TRIP: &str = "∂ⁿⱼ = ρⁿⱼ − χ^{n+1}_j ρⁿ_{j−1}";

/// Largest target level at which the ρ suite spans the full ideal; above
/// it only left translates of the generators are used.
pub const FULL_FAMILY_MAX_TARGET: Level = 6;

fn gen(g: Result<Generator>) -> Generator {
    g.expect("suite indices are in range")
}

fn rho_word(gens: Vec<Generator>) -> Element {
    Element::from_word(Word::new(gens).expect("composable"))
}

/// Decides `diff ∈ I_Leib` twice: by normalizing `α(diff)` in Leib^op, and
/// with the exact oracle. The instance passes when both say "member".
fn two_routes(
    engine: &Engine,
    oracle: &IdealOracle,
    name: &str,
    anchor: &str,
    mut p: serde_json::Value,
    lhs: &Element,
    rhs: &Element,
) -> CheckInstance {
    let run = || -> Result<(bool, bool)> {
        let diff = expand_rho(&(lhs.clone() - rhs.clone()))?;
        let route_a = engine.leibop_normalize(&alpha(&diff)?)?.is_zero();
        let route_b = diff.is_zero() || oracle.contains(engine, &diff)?;
        Ok((route_a, route_b))
    };
    let family = match oracle.family() {
        RowFamily::Full => "full",
        RowFamily::LeftTranslates => "left-translates",
    };
    p["oracle_family"] = json!(family);
    match run() {
        Ok((a, b)) => {
            p["alpha_route"] = json!(a);
            p["oracle_route"] = json!(b);
            CheckInstance::judge(name, anchor, p, lhs, rhs, Ok(a && b))
        }
        Err(e) => CheckInstance::judge(name, anchor, p, lhs, rhs, Err(e)),
    }
}

/// The ω law, the presimplicial ρ relations and the ∂/ρ change of basis,
/// each verified through α in Leib^op and with the ideal oracle, for
/// `n <= n_max`.
pub fn check_rho(engine: &Engine, n_max: Level) -> Result<Report> {
    let started = Instant::now();
    let mut oracles: BTreeMap<(Level, Level), IdealOracle> = BTreeMap::new();
    for n in 0..=n_max {
        for t in [n + 1, n + 2] {
            let family = if t <= FULL_FAMILY_MAX_TARGET {
                RowFamily::Full
            } else {
                RowFamily::LeftTranslates
            };
            oracles.insert((n, t), IdealOracle::with_family(engine, Side::Leib, n, t, t, family)?);
        }
    }
    let oracles = &oracles;
    let mut jobs: Vec<Job> = Vec::new();
    for n in 1..=n_max {
        for i in 0..=n {
            for j in 0..n {
                let p = json!({ "n": n, "i": i, "j": j });
                jobs.push(Box::new(move || {
                    let r = gen(Generator::rho(n, i));
                    let c = gen(Generator::chi(n, j));
                    let lhs = rho_word(vec![r, c]);
                    match engine.omega_gen(r, c) {
                        Ok(rhs) => two_routes(engine, &oracles[&(n, n + 1)], "omega", OMEGA, p.clone(), &lhs, &rhs),
                        Err(e) => CheckInstance::judge("omega", OMEGA, p.clone(), &lhs, &Element::zero(), Err(e)),
                    }
                }));
            }
        }
    }
    for n in 0..=n_max {
        for j in 0..=n {
            for i in 0..=j {
                let p = json!({ "n": n, "i": i, "j": j });
                jobs.push(Box::new(move || {
                    let lhs = rho_word(vec![gen(Generator::rho(n + 1, i)), gen(Generator::rho(n, j))]);
                    let rhs = rho_word(vec![gen(Generator::rho(n + 1, j + 1)), gen(Generator::rho(n, i))]);
                    two_routes(engine, &oracles[&(n, n + 2)], "rho-simp", SIMP, p.clone(), &lhs, &rhs)
                }));
            }
        }
    }
    for n in 0..=n_max {
        for j in 0..=n {
            let p = json!({ "n": n, "j": j });
            jobs.push(Box::new(move || {
                let lhs = Element::from_gen(gen(Generator::del(n, j)));
                match del_in_rho(n, j) {
                    Ok(rhs) => two_routes(engine, &oracles[&(n, n + 1)], "del-in-rho", ROUND_TRIP, p.clone(), &lhs, &rhs),
                    Err(e) => CheckInstance::judge("del-in-rho", ROUND_TRIP, p.clone(), &lhs, &Element::zero(), Err(e)),
                }
            }));
        }
    }
    Ok(Report::new("rho", json!({ "n_max": n_max, "full_family_max_target": FULL_FAMILY_MAX_TARGET }), run_jobs(jobs), started))
}
