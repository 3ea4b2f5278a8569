use std::time::Instant;

use serde_json::json;

use super::common::{run_jobs, Job};
use super::report::{CheckInstance, Report};
use crate::algebra::{Element, Level};
use crate::error::Result;
use crate::rewrite::{
    enumerate_basis, simp_normalize, simp_word_of_surjection, surjection_of_simp_word, BasisAlgebra, OrderPresSurj,
};

const COMPOSE: &str = "Simp-normal words compose as their surjections, contravariantly";
const ROUND_TRIP: &str = "Simp-normal words and order-preserving surjections are in bijection";
const SIGMA: &str = "σⁿ_j∘σ^{n+1}_i = σⁿ_i∘σ^{n+1}_{j+1} for i <= j";

/// The Simp ↔ Δ⁺ correspondence on complete tables: every Simp-normal word
/// between levels `<= t_max` (sets of size `<= t_max + 1`).
pub fn check_delta_plus(t_max: Level) -> Result<Report> {
    let started = Instant::now();
    let mut jobs: Vec<Job> = Vec::new();
    for n in 0..=t_max {
        for m in n..=t_max {
            for u in enumerate_basis(BasisAlgebra::Simp, n, m)? {
                let p = json!({ "n": n, "m": m, "word": u.to_string() });
                let u2 = u.clone();
                jobs.push(Box::new(move || {
                    let out = surjection_of_simp_word(&u2).map(|f| simp_word_of_surjection(&f));
                    let back = out.clone().map(Element::from_word).unwrap_or_default();
                    CheckInstance::judge("round-trip", ROUND_TRIP, p.clone(), &Element::from_word(u2.clone()), &back, out.map(|w| w == u2))
                }));
                for t in m..=t_max {
                    for v in enumerate_basis(BasisAlgebra::Simp, m, t)? {
                        let u = u.clone();
                        let p = json!({ "n": n, "m": m, "t": t, "first": u.to_string(), "second": v.to_string() });
                        jobs.push(Box::new(move || {
                            let vu = Element::from_word(v.compose(&u).expect("levels match"));
                            let run = || -> Result<(Element, Element)> {
                                let lhs = simp_normalize(&vu)?;
                                let f = surjection_of_simp_word(&u)?;
                                let g = surjection_of_simp_word(&v)?;
                                let fg = f.compose(&g).expect("codomain matches");
                                Ok((lhs, Element::from_word(simp_word_of_surjection(&fg))))
                            };
                            match run() {
                                Ok((l, r)) => {
                                    let ok = l == r;
                                    CheckInstance::judge("composition", COMPOSE, p.clone(), &l, &r, Ok(ok))
                                }
                                Err(e) => CheckInstance::judge("composition", COMPOSE, p.clone(), &vu, &Element::zero(), Err(e)),
                            }
                        }));
                    }
                }
            }
        }
        let total: usize = (0..=t_max).map(|m| OrderPresSurj::all(m, n).len()).sum();
        let words: usize = (n..=t_max).map(|m| enumerate_basis(BasisAlgebra::Simp, n, m).map(|b| b.len()).unwrap_or(0)).sum();
        jobs.push(Box::new(move || {
            let p = json!({ "n": n, "surjections": total, "words": words });
            CheckInstance::judge_values("table-size", ROUND_TRIP, p, &json!(words), &json!(total), words == total)
        }));
    }
    for n in 0..t_max {
        for j in 0..=n {
            for i in 0..=j {
                let p = json!({ "n": n, "i": i, "j": j });
                jobs.push(Box::new(move || {
                    let s = |m, k| OrderPresSurj::sigma(m, k).expect("k <= m");
                    let l = s(n, j).compose(&s(n + 1, i)).expect("composable");
                    let r = s(n, i).compose(&s(n + 1, j + 1)).expect("composable");
                    let (lw, rw) = (simp_word_of_surjection(&l), simp_word_of_surjection(&r));
                    CheckInstance::judge("sigma-relation", SIGMA, p.clone(), &Element::from_word(lw), &Element::from_word(rw), Ok(l == r))
                }));
            }
        }
    }
    Ok(Report::new("delta-plus", json!({ "t_max": t_max }), run_jobs(jobs), started))
}
