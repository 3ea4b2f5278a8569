use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use super::common::{chi_words, elem, ordered_monomial, run_jobs, Job};
use super::report::{CheckInstance, Report};
use crate::algebra::{Element, GenKind, Level, Scalar, Word};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::groups::{chi_word_of_perm, perm_of_chi_word, Permutation};
use crate::rewrite::{enumerate_basis, straighten_word, tail_word, BasisAlgebra, Flavor, Monomial};

/// Distributive laws whose transposition diagrams can be checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiagramLaw {
    /// ζ between Mag and Sym.
    ZetaSymMag,
    /// ζ between Simp and Sym.
    ZetaSymSimp,
    /// ω between Simp (in ρ symbols) and Sym, compared inside Leib.
    OmegaLeib,
}

impl DiagramLaw {
    pub const ALL: [DiagramLaw; 3] = [DiagramLaw::ZetaSymMag, DiagramLaw::ZetaSymSimp, DiagramLaw::OmegaLeib];

    pub fn name(self) -> &'static str {
        match self {
            DiagramLaw::ZetaSymMag => "zeta-symmag",
            DiagramLaw::ZetaSymSimp => "zeta-symsimp",
            DiagramLaw::OmegaLeib => "omega-leib",
        }
    }

    fn flavor(self) -> Flavor {
        match self {
            DiagramLaw::ZetaSymMag => Flavor::Mag,
            _ => Flavor::Simp,
        }
    }

    fn kind(self) -> GenKind {
        match self {
            DiagramLaw::OmegaLeib => GenKind::Rho,
            _ => GenKind::Del,
        }
    }
}

type Combo = BTreeMap<Monomial, Scalar>;

fn add(c: &mut Combo, m: Monomial, s: Scalar) {
    let slot = c.entry(m).or_default();
    *slot += &s;
}

/// The law applied to `b ⊗ a` with `b` a normal tail word and `a` a
/// χ-word, read back as a combination of (permutation, normal tail).
/// ζ is applied letter by letter on words; ω works on permutations, since
/// its three-term case makes word-level expansion grow exponentially.
fn lambda(engine: &Engine, law: DiagramLaw, b: &Word, a: &Word) -> Result<Combo> {
    let w = b.compose(a).expect("b starts where a ends");
    let mut out = Combo::new();
    match law {
        DiagramLaw::OmegaLeib => {
            // Push each ρ of b, bottom first, through the permutation of a.
            let mut state: HashMap<(Permutation, Vec<usize>), i128> = HashMap::from([((perm_of_chi_word(a)?, Vec::new()), 1)]);
            for g in b.gens().iter().rev() {
                let mut next: HashMap<(Permutation, Vec<usize>), i128> = HashMap::new();
                for ((q, tail), c) in state {
                    for (q2, r, c2) in engine.omega_through_perm(g.index(), &q)? {
                        let mut t = Vec::with_capacity(tail.len() + 1);
                        t.push(r);
                        t.extend_from_slice(&tail);
                        let slot = next.entry((q2, t)).or_insert(0);
                        *slot = c.checked_mul(c2).and_then(|v| slot.checked_add(v)).ok_or(Error::Overflow)?;
                    }
                }
                next.retain(|_, c| *c != 0);
                state = next;
            }
            for ((q, tail), c) in state {
                let t = straighten_word(&tail_word(GenKind::Rho, a.source(), &tail), GenKind::Rho, Flavor::Simp)?;
                let m = Monomial::new(q, t.gens().iter().map(|g| g.index()).collect())?;
                add(&mut out, m, Scalar::from_int(i64::try_from(c).map_err(|_| Error::Overflow)?));
            }
        }
        _ => {
            let z = engine.zeta_word(&w)?;
            add(&mut out, ordered_monomial(&z, GenKind::Del, law.flavor())?, Scalar::one());
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

fn straighten(law: DiagramLaw, w: &Word) -> Result<Word> {
    straighten_word(w, law.kind(), law.flavor())
}

fn to_element(law: DiagramLaw, c: &Combo) -> Element {
    Element::from_terms(c.iter().map(|(m, s)| (s.clone(), m.to_word(law.kind()))))
}

fn same(engine: &Engine, law: DiagramLaw, l: &Element, r: &Element) -> Result<bool> {
    match law {
        DiagramLaw::OmegaLeib => engine.leib_equal(l, r),
        _ => Ok(l == r),
    }
}

/// `λ(bb′ ⊗ a)` against `(1 ⊗ μ)(λ ⊗ 1)(b ⊗ λ(b′ ⊗ a))`.
fn right_diagram(engine: &Engine, law: DiagramLaw, b: &Word, bp: &Word, a: &Word) -> Result<(Element, Element)> {
    let lhs = lambda(engine, law, &straighten(law, &b.compose(bp).expect("composable"))?, a)?;
    let mut rhs = Combo::new();
    for (m1, c1) in lambda(engine, law, bp, a)? {
        for (m2, c2) in lambda(engine, law, b, &chi_word_of_perm(m1.perm()))? {
            let tail = m2.tail_word(law.kind()).compose(&m1.tail_word(law.kind())).expect("composable");
            let tail = straighten(law, &tail)?;
            let m = Monomial::new(m2.perm().clone(), tail.gens().iter().map(|g| g.index()).collect())?;
            add(&mut rhs, m, &c1 * &c2);
        }
    }
    rhs.retain(|_, c| !c.is_zero());
    Ok((to_element(law, &lhs), to_element(law, &rhs)))
}

/// `λ(b ⊗ aa′)` against `(μ ⊗ 1)(1 ⊗ λ)(λ(b ⊗ a) ⊗ a′)`.
fn left_diagram(engine: &Engine, law: DiagramLaw, b: &Word, a: &Word, ap: &Word) -> Result<(Element, Element)> {
    let lhs = lambda(engine, law, b, &a.compose(ap).expect("same level"))?;
    let mut rhs = Combo::new();
    for (m1, c1) in lambda(engine, law, b, a)? {
        for (m2, c2) in lambda(engine, law, &m1.tail_word(law.kind()), ap)? {
            let m = Monomial::new(m1.perm().compose(m2.perm()), m2.tail().to_vec())?;
            add(&mut rhs, m, &c1 * &c2);
        }
    }
    rhs.retain(|_, c| !c.is_zero());
    Ok((to_element(law, &lhs), to_element(law, &rhs)))
}

fn unit_checks(engine: &Engine, law: DiagramLaw, b: Option<&Word>, a: Option<&Word>) -> Result<(Element, Element)> {
    match (b, a) {
        (None, Some(a)) => {
            let lhs = lambda(engine, law, &Word::identity(a.target()), a)?;
            let rhs = Monomial::new(perm_of_chi_word(a)?, Vec::new())?;
            Ok((to_element(law, &lhs), to_element(law, &Combo::from([(rhs, Scalar::one())]))))
        }
        (Some(b), None) => {
            let lhs = lambda(engine, law, b, &Word::identity(b.source()))?;
            let rhs = Monomial::new(
                crate::groups::Permutation::identity(b.target()),
                b.gens().iter().map(|g| g.index()).collect(),
            )?;
            Ok((to_element(law, &lhs), to_element(law, &Combo::from([(rhs, Scalar::one())]))))
        }
        _ => unreachable!("unit checks take exactly one side"),
    }
}

fn tails(law: DiagramLaw, s: Level, m: Level) -> Vec<Word> {
    let algebra = match law.flavor() {
        Flavor::Mag => BasisAlgebra::Mag,
        Flavor::Simp => BasisAlgebra::Simp,
    };
    enumerate_basis(algebra, s, m)
        .expect("m >= s")
        .into_iter()
        .map(|w| tail_word(law.kind(), s, &w.gens().iter().map(|g| g.index()).collect::<Vec<_>>()))
        .collect()
}

const RIGHT: &str = "right transposition: λ(bb′⊗a) = (1⊗μ)(λ⊗1)(b⊗λ(b′⊗a))";
const LEFT: &str = "left transposition: λ(b⊗aa′) = (μ⊗1)(1⊗λ)(λ(b⊗a)⊗a′)";
const UNIT: &str = "unitality: λ(1⊗a) = a⊗1 and λ(b⊗1) = 1⊗b";

fn judge(
    name: &str,
    anchor: &str,
    law: DiagramLaw,
    engine: &Engine,
    words: &[&Word],
    out: Result<(Element, Element)>,
) -> CheckInstance {
    let p = json!({
        "law": law.name(),
        "words": words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
    });
    match out {
        Ok((l, r)) => {
            let verdict = same(engine, law, &l, &r);
            CheckInstance::judge(name, anchor, p, &l, &r, verdict)
        }
        Err(e) => {
            let l = words.first().map(|w| elem(w)).unwrap_or_default();
            CheckInstance::judge(name, anchor, p, &l, &Element::zero(), Err(e))
        }
    }
}

/// Both transposition diagrams and unitality for `law`, over all tail words
/// and χ-words of length `1..=len_max` with generator levels `<= n_max`.
pub fn check_transposition_diagrams(engine: &Engine, law: DiagramLaw, n_max: Level, len_max: usize) -> Report {
    let started = Instant::now();
    let mut jobs: Vec<Job> = Vec::new();
    let top = n_max + 1;
    for s in 0..=n_max {
        let chis = chi_words(s, len_max);
        for a in &chis {
            let a = a.clone();
            jobs.push(Box::new(move || {
                judge("unit-left", UNIT, law, engine, &[&a], unit_checks(engine, law, None, Some(&a)))
            }));
        }
        for m in s + 1..=(s + len_max).min(top) {
            for b in tails(law, s, m) {
                jobs.push(Box::new(move || {
                    judge("unit-right", UNIT, law, engine, &[&b], unit_checks(engine, law, Some(&b), None))
                }));
            }
        }
        for a in &chis {
            for m in s + 1..=(s + len_max).min(top) {
                for bp in tails(law, s, m) {
                    for p in m + 1..=(m + len_max).min(top) {
                        for b in tails(law, m, p) {
                            let (a, bp) = (a.clone(), bp.clone());
                            jobs.push(Box::new(move || {
                                judge("right-diagram", RIGHT, law, engine, &[&b, &bp, &a], right_diagram(engine, law, &b, &bp, &a))
                            }));
                        }
                    }
                }
            }
        }
        for a in &chis {
            for ap in &chis {
                for m in s + 1..=(s + len_max).min(top) {
                    for b in tails(law, s, m) {
                        let (a, ap) = (a.clone(), ap.clone());
                        jobs.push(Box::new(move || {
                            judge("left-diagram", LEFT, law, engine, &[&b, &a, &ap], left_diagram(engine, law, &b, &a, &ap))
                        }));
                    }
                }
            }
        }
    }
    Report::new(
        &format!("transpositions/{}", law.name()),
        json!({ "law": law.name(), "n_max": n_max, "len_max": len_max }),
        run_jobs(jobs),
        started,
    )
}
