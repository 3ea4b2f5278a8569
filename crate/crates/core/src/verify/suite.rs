use std::fmt;
use std::str::FromStr;

use super::{
    check_alpha, check_delta_plus, check_main_theorem, check_rho, check_transposition_diagrams,
    check_zeta_preserves_braid, check_zeta_simp_and_sym, DiagramLaw, Report,
};
use crate::algebra::Level;
use crate::engine::Engine;
use crate::error::{Error, Result};

/// The named verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    ZetaBraid,
    ZetaSimpSym,
    Transpositions,
    Alpha,
    Rho,
    MainTheorem,
    DeltaPlus,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::ZetaBraid,
        Suite::ZetaSimpSym,
        Suite::Transpositions,
        Suite::Alpha,
        Suite::Rho,
        Suite::MainTheorem,
        Suite::DeltaPlus,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ZetaBraid => "zeta-braid",
            Suite::ZetaSimpSym => "zeta-simp-sym",
            Suite::Transpositions => "transpositions",
            Suite::Alpha => "alpha",
            Suite::Rho => "rho",
            Suite::MainTheorem => "main-theorem",
            Suite::DeltaPlus => "delta-plus",
            Suite::All => "all",
        }
    }

    /// The bound `--max-level` overrides: the top generator level for the
    /// identity suites, the top target level for main-theorem and
    /// delta-plus.
    pub fn default_max_level(self) -> Level {
        match self {
            Suite::ZetaBraid | Suite::ZetaSimpSym | Suite::DeltaPlus => 6,
            Suite::Transpositions => 4,
            Suite::Alpha | Suite::Rho | Suite::MainTheorem | Suite::All => 5,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("unknown suite `{s}`"),
        })
    }
}

/// Word length bound for the transposition diagrams.
pub const DIAGRAM_LEN_MAX: usize = 3;

/// Every `(n, t)` with `0 <= n <= t <= t_max`.
pub fn bidegrees_up_to(t_max: Level) -> Vec<(Level, Level)> {
    (0..=t_max).flat_map(|t| (0..=t).map(move |n| (n, t))).collect()
}

/// Runs `suite` (every suite for `All`) with `max_level`, or the suite's
/// default bound when `None`.
pub fn run_suite(engine: &Engine, suite: Suite, max_level: Option<Level>) -> Result<Vec<Report>> {
    let bound = |s: Suite| max_level.unwrap_or(s.default_max_level());
    Ok(match suite {
        Suite::ZetaBraid => vec![check_zeta_preserves_braid(engine, bound(suite))],
        Suite::ZetaSimpSym => vec![check_zeta_simp_and_sym(engine, bound(suite))],
        Suite::Transpositions => {
            let top = bound(suite).max(1);
            DiagramLaw::ALL
                .into_iter()
                .map(|law| check_transposition_diagrams(engine, law, top - 1, DIAGRAM_LEN_MAX))
                .collect()
        }
        Suite::Alpha => vec![check_alpha(engine, bound(suite))],
        Suite::Rho => vec![check_rho(engine, bound(suite))?],
        Suite::MainTheorem => {
            let t = bound(suite);
            vec![check_main_theorem(engine, &bidegrees_up_to(t), t)?]
        }
        Suite::DeltaPlus => vec![check_delta_plus(bound(suite))?],
        Suite::All => {
            let mut out = Vec::new();
            for s in &Suite::ALL[..7] {
                out.extend(run_suite(engine, *s, max_level)?);
            }
            out
        }
    })
}
