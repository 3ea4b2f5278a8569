use std::collections::HashMap;
use std::time::Instant;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::json;

use super::linalg::{canonical, SparseEchelon};
use super::oracle::{factorial, IdealOracle};
use super::report::{CheckInstance, Report};
use crate::algebra::{Element, GenKind, Level};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::laws::Side;
use crate::leibniz::IdealGenerator;
use crate::rewrite::{enumerate_basis, sym_basis_monomials, BasisAlgebra, Flavor, Monomial};

const DIMENSIONS: &str = "dim Leib(n,t) = dim Leib^op(n,t) = (t+1)!·C(t,n), with matching normal-form bases";
const RANK: &str = "normal forms of the free basis span a space of dimension (t+1)!·C(t,n)";
const VANISH: &str = "ideal generators normalize to 0";

fn binomial(t: usize, n: usize) -> u128 {
    (0..n as u128).fold(1, |acc, k| acc * (t as u128 - k) / (k + 1))
}

/// `(t+1)!·C(t,n)`.
pub fn expected_dimension(n: Level, t: Level) -> u128 {
    factorial(t + 1) * binomial(t, n)
}

/// Rank of the normal forms of every free basis monomial at `(n, t)`,
/// stopping once `stop` is reached.
fn normal_form_rank(engine: &Engine, side: Side, n: Level, t: Level, stop: usize) -> Result<usize> {
    let basis = sym_basis_monomials(n, t, Flavor::Simp);
    let column: HashMap<Monomial, u32> = basis.iter().cloned().enumerate().map(|(k, m)| (m, k as u32)).collect();
    let free = sym_basis_monomials(n, t, Flavor::Mag);
    let mut ech = SparseEchelon::new();
    for chunk in free.chunks(4096) {
        let rows = chunk
            .par_iter()
            .map(|m| {
                let x = Element::from_word(m.to_word(GenKind::Del));
                let mut row = Vec::new();
                for (mono, c) in engine.normal_terms(side, &x)? {
                    let col = *column
                        .get(&mono)
                        .ok_or_else(|| Error::NotNormal(format!("{} is outside the normal basis", mono.to_word(GenKind::Del))))?;
                    if !c.denominator().to_i128().is_some_and(|d| d == 1) {
                        return Err(Error::NotNormal(format!("non-integral normal-form coefficient {c}")));
                    }
                    row.push((col, c.numerator().to_i128().ok_or(Error::Overflow)?));
                }
                canonical(row)
            })
            .collect::<Result<Vec<_>>>()?;
        for r in rows {
            ech.insert(r)?;
            if ech.rank() >= stop {
                return Ok(ech.rank());
            }
        }
    }
    Ok(ech.rank())
}

/// The quotient dimensions, normal-form basis sizes and normal-form ranks
/// at each `(n, t)`, all compared with `(t+1)!·C(t,n)`. Fails with
/// `BoundExceeded` if some `t > max_target`.
pub fn check_main_theorem(engine: &Engine, pairs: &[(Level, Level)], max_target: Level) -> Result<Report> {
    let started = Instant::now();
    for &(n, t) in pairs {
        if t > max_target {
            return Err(Error::BoundExceeded {
                source_level: n,
                target_level: t,
                bound: max_target,
            });
        }
        if t < n {
            return Err(Error::NotHomogeneous(format!("bidegree ({n}, {t}) has target below source")));
        }
    }
    let mut checks = Vec::new();
    for &(n, t) in pairs {
        let expected = expected_dimension(n, t);
        let run = || -> Result<serde_json::Value> {
            let leib = IdealOracle::new(engine, Side::Leib, n, t, max_target)?.quotient_dimension()? as u128;
            let leibop = IdealOracle::new(engine, Side::LeibOp, n, t, max_target)?.quotient_dimension()? as u128;
            let rho_basis = sym_basis_monomials(n, t, Flavor::Simp)
                .into_iter()
                .map(|m| {
                    let w = Element::from_word(m.to_word(GenKind::Rho));
                    Ok(engine.leib_normalize(&w)? == w)
                })
                .collect::<Result<Vec<bool>>>()?;
            let rho_basis = if rho_basis.iter().all(|&b| b) { rho_basis.len() as u128 } else { 0 };
            let symsimp = enumerate_basis(BasisAlgebra::SymSimp, n, t)?.len() as u128;
            Ok(json!({
                "n": n, "t": t, "expected": expected as u64,
                "leib_oracle": leib as u64, "leibop_oracle": leibop as u64,
                "rho_basis": rho_basis as u64, "symsimp_basis": symsimp as u64,
            }))
        };
        checks.push(match run() {
            Ok(p) => {
                let ok = ["leib_oracle", "leibop_oracle", "rho_basis", "symsimp_basis"]
                    .iter()
                    .all(|k| p[k].as_u64() == Some(expected as u64));
                CheckInstance::judge_values("dimensions", DIMENSIONS, p.clone(), &p, &json!(expected as u64), ok)
            }
            Err(e) => CheckInstance::judge("dimensions", DIMENSIONS, json!({ "n": n, "t": t }), &Element::zero(), &Element::zero(), Err(e)),
        });
        for side in [Side::Leib, Side::LeibOp] {
            let p = json!({ "n": n, "t": t, "side": side.name() });
            let out = normal_form_rank(engine, side, n, t, expected as usize);
            checks.push(match out {
                Ok(rank) => {
                    let mut q = p.clone();
                    q["rank"] = json!(rank);
                    CheckInstance::judge_values("normal-form-rank", RANK, q, &json!(rank), &json!(expected as u64), rank as u128 == expected)
                }
                Err(e) => CheckInstance::judge("normal-form-rank", RANK, p, &Element::zero(), &Element::zero(), Err(e)),
            });
        }
        if t == n + 2 {
            for side in [Side::Leib, Side::LeibOp] {
                for j in 0..=n {
                    let p = json!({ "n": n, "j": j, "side": side.name() });
                    let out = IdealGenerator::new(side, n, j)
                        .and_then(|g| engine.ideal_generator(&g))
                        .and_then(|g| engine.normalize_in(side, &g));
                    let l = out.clone().unwrap_or_default();
                    checks.push(CheckInstance::judge("generators-vanish", VANISH, p, &l, &Element::zero(), out.map(|x| x.is_zero())));
                }
            }
        }
    }
    Ok(Report::new("main-theorem", json!({ "pairs": pairs, "max_target": max_target }), checks, started))
}
