//! The `prop-rewriter` command line.
//!
//! Exit codes: 0 success or equal; 1 unequal, or a suite failed; 2 parse,
//! usage or I/O error; 3 normal form requested in Braid; 4 resource bound
//! exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{parse_element, Element, GenKind, Level, Word};
use crate::diagram::{render, DiagramFormat};
use crate::engine::{Algebra, Engine};
use crate::error::Error;
use crate::laws::{Laws, Mutation, Side};
use crate::rewrite::{enumerate_basis, sym_basis_monomials, BasisAlgebra, Flavor};
use crate::verify::{quotient_dimension_oracle, reports_to_json, run_suite, Report, Suite, DEFAULT_MAX_TARGET};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BRAID_NORMALIZE: u8 = 3;
pub const EXIT_BOUND: u8 = 4;

/// Environment variable overriding the default resource bound.
pub const MAX_LEVEL_ENV: &str = "PROP_REWRITER_MAX_LEVEL";

/// Largest target level listed for Mag and Simp when no bound is given.
pub const DEFAULT_MAX_TARGET_NO_GROUP: Level = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraFlag {
    Mag,
    Simp,
    Braid,
    Sym,
    Symmag,
    Symsimp,
    Leib,
    Leibop,
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatFlag {
    Svg,
    Tikz,
}

#[derive(Debug, Parser)]
#[command(name = "prop-rewriter", version, about = "Normal forms, bases and identity checks for bigraded diagram algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Normalize {
        #[arg(long, value_enum)]
        algebra: AlgebraFlag,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Exit 0 if the two expressions are equal in the algebra, 1 otherwise.
    Equal {
        #[arg(long, value_enum)]
        algebra: AlgebraFlag,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// List the normal-form basis from level `--source` to `--target`.
    Basis {
        #[arg(long, value_enum)]
        algebra: AlgebraFlag,
        #[arg(long)]
        source: Level,
        #[arg(long)]
        target: Level,
        #[arg(long, env = MAX_LEVEL_ENV)]
        max_level: Option<Level>,
    },
    /// Print the dimension from level `--source` to `--target`.
    Dim {
        #[arg(long, value_enum)]
        algebra: AlgebraFlag,
        #[arg(long)]
        source: Level,
        #[arg(long)]
        target: Level,
        #[arg(long, env = MAX_LEVEL_ENV)]
        max_level: Option<Level>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, env = MAX_LEVEL_ENV)]
        max_level: Option<Level>,
        /// Write the JSON report(s) to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Corrupt one law before running (mutation testing).
        #[arg(long, hide = true)]
        mutate: Option<String>,
    },
    /// Draw the strand diagram of an expression, one panel per summand.
    Diagram {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value = "svg")]
        format: FormatFlag,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundExceeded { .. } => EXIT_BOUND,
            Error::NoCanonicalForm(_) => EXIT_BRAID_NORMALIZE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn parse(s: &str) -> Result<Element, Failure> {
    parse_element(s).map_err(Failure::from)
}

impl From<AlgebraFlag> for Algebra {
    fn from(a: AlgebraFlag) -> Self {
        match a {
            AlgebraFlag::Mag => Algebra::Mag,
            AlgebraFlag::Simp => Algebra::Simp,
            AlgebraFlag::Braid => Algebra::Braid,
            AlgebraFlag::Sym => Algebra::Sym,
            AlgebraFlag::Symmag => Algebra::SymMag,
            AlgebraFlag::Symsimp => Algebra::SymSimp,
            AlgebraFlag::Leib => Algebra::Leib,
            AlgebraFlag::Leibop => Algebra::LeibOp,
            AlgebraFlag::Free => Algebra::Free,
        }
    }
}

fn bound_for(algebra: AlgebraFlag, max_level: Option<Level>) -> Level {
    max_level.unwrap_or(match algebra {
        AlgebraFlag::Mag | AlgebraFlag::Simp => DEFAULT_MAX_TARGET_NO_GROUP,
        _ => DEFAULT_MAX_TARGET,
    })
}

fn check_bounds(algebra: AlgebraFlag, n: Level, t: Level, max_level: Option<Level>) -> Result<(), Failure> {
    let bound = bound_for(algebra, max_level);
    if t > bound {
        return Err(Error::BoundExceeded {
            source_level: n,
            target_level: t,
            bound,
        }
        .into());
    }
    if t < n {
        return Err(usage(format!("--target {t} is below --source {n}")));
    }
    Ok(())
}

fn basis(algebra: AlgebraFlag, n: Level, t: Level) -> Result<Vec<Word>, Failure> {
    let b = match algebra {
        AlgebraFlag::Mag => enumerate_basis(BasisAlgebra::Mag, n, t)?,
        AlgebraFlag::Simp => enumerate_basis(BasisAlgebra::Simp, n, t)?,
        AlgebraFlag::Symmag => enumerate_basis(BasisAlgebra::SymMag, n, t)?,
        AlgebraFlag::Symsimp | AlgebraFlag::Leibop => enumerate_basis(BasisAlgebra::SymSimp, n, t)?,
        AlgebraFlag::Sym if n == t => enumerate_basis(BasisAlgebra::SymMag, n, t)?,
        AlgebraFlag::Sym => Vec::new(),
        AlgebraFlag::Leib => sym_basis_monomials(n, t, Flavor::Simp)
            .into_iter()
            .map(|m| m.to_word(GenKind::Rho))
            .collect(),
        AlgebraFlag::Braid | AlgebraFlag::Free => {
            return Err(usage("Braid and the free algebra are infinite-dimensional"))
        }
    };
    Ok(b)
}

fn dim(engine: &Engine, algebra: AlgebraFlag, n: Level, t: Level, bound: Level) -> Result<usize, Failure> {
    Ok(match algebra {
        AlgebraFlag::Leib => quotient_dimension_oracle(engine, Side::Leib, n, t, bound)?,
        AlgebraFlag::Leibop => quotient_dimension_oracle(engine, Side::LeibOp, n, t, bound)?,
        _ => basis(algebra, n, t)?.len(),
    })
}

fn verify(
    suite: &str,
    max_level: Option<Level>,
    json: Option<&PathBuf>,
    mutate: Option<&str>,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    let suite: Suite = suite.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        usage(format!("unknown suite `{suite}` (expected one of: {})", names.join(", ")))
    })?;
    let laws = match mutate {
        None => Laws::standard(),
        Some(name) => Mutation::from_name(name)
            .ok_or_else(|| usage(format!("unknown mutation `{name}`")))?
            .apply(&Laws::standard()),
    };
    let reports = run_suite(&Engine::new(laws), suite, max_level)?;
    for r in &reports {
        let _ = writeln!(out, "{}", r.summary());
        for f in r.failures().take(5) {
            if let Some(c) = &f.counterexample {
                let _ = writeln!(out, "  {} {}: {}  vs  {}", f.name, serde_json::Value::Object(f.params.clone()), c.lhs, c.rhs);
            }
            if let Some(e) = &f.error {
                let _ = writeln!(out, "    error: {e}");
            }
        }
    }
    if let Some(path) = json {
        std::fs::write(path, reports_to_json(&reports) + "\n").map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if reports.iter().all(|r: &Report| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    let engine = Engine::default();
    match cli.command {
        Command::Normalize { algebra, expr } => {
            let x = engine.normalize_as(algebra.into(), &parse(&expr)?)?;
            let _ = writeln!(out, "{x}");
            Ok(EXIT_OK)
        }
        Command::Equal { algebra, lhs, rhs } => {
            let same = engine.equal_as(algebra.into(), &parse(&lhs)?, &parse(&rhs)?)?;
            let _ = writeln!(out, "{}", if same { "equal" } else { "unequal" });
            Ok(if same { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Basis {
            algebra,
            source,
            target,
            max_level,
        } => {
            check_bounds(algebra, source, target, max_level)?;
            for w in basis(algebra, source, target)? {
                let _ = writeln!(out, "{w}");
            }
            Ok(EXIT_OK)
        }
        Command::Dim {
            algebra,
            source,
            target,
            max_level,
        } => {
            check_bounds(algebra, source, target, max_level)?;
            let d = dim(&engine, algebra, source, target, bound_for(algebra, max_level))?;
            let _ = writeln!(out, "{d}");
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_level,
            json,
            mutate,
        } => verify(&suite, max_level, json.as_ref(), mutate.as_deref(), out),
        Command::Diagram { expr, format, out: path } => {
            let format = match format {
                FormatFlag::Svg => DiagramFormat::Svg,
                FormatFlag::Tikz => DiagramFormat::Tikz,
            };
            let text = render(&parse(&expr)?, format);
            match path {
                Some(p) => std::fs::write(&p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?,
                None => {
                    let _ = out.write_all(text.as_bytes());
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn main() -> ExitCode {
    let code = run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code)
}
