use prop_rewriter::verify::{
    bidegrees_up_to, check_alpha, check_delta_plus, check_main_theorem, check_rho, check_transposition_diagrams,
    check_zeta_preserves_braid, check_zeta_simp_and_sym, expected_dimension, run_suite, DiagramLaw, Report, Suite,
};
use prop_rewriter::{Engine, Error, Laws, Mutation};

fn assert_green(r: &Report) {
    let bad: Vec<_> = r.failures().take(3).collect();
    assert!(r.passed, "{}: {:#?}", r.summary(), bad);
    assert!(!r.checks.is_empty(), "{} ran no checks", r.suite);
}

#[test]
fn zeta_suites_pass() {
    let e = Engine::default();
    assert_green(&check_zeta_preserves_braid(&e, 4));
    assert_green(&check_zeta_simp_and_sym(&e, 4));
}

#[test]
fn transposition_diagrams_pass() {
    let e = Engine::default();
    for law in DiagramLaw::ALL {
        let r = check_transposition_diagrams(&e, law, 3, 2);
        eprintln!("{}", r.summary());
        assert_green(&r);
    }
}

#[test]
fn alpha_rho_delta_pass_at_small_bounds() {
    let e = Engine::default();
    assert_green(&check_alpha(&e, 3));
    let rho = check_rho(&e, 3).unwrap();
    assert_green(&rho);
    for c in &rho.checks {
        assert_eq!(c.params["alpha_route"], c.params["oracle_route"], "{c:?}");
    }
    assert_green(&check_delta_plus(4).unwrap());
}

#[test]
fn main_theorem_small_bidegrees() {
    let e = Engine::default();
    let r = check_main_theorem(&e, &bidegrees_up_to(3), 3).unwrap();
    assert_green(&r);
    // Hand-computed: (t+1)! * C(t, n).
    for (n, t, d) in [(0, 0, 1), (0, 1, 2), (1, 2, 12), (0, 3, 24), (2, 3, 72)] {
        assert_eq!(expected_dimension(n, t), d);
    }
}

#[test]
fn main_theorem_respects_bounds() {
    let e = Engine::default();
    assert!(matches!(check_main_theorem(&e, &[(1, 4)], 3), Err(Error::BoundExceeded { .. })));
    assert!(check_main_theorem(&e, &[(3, 2)], 5).is_err());
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let e = Engine::default();
    let strip = |mut rs: Vec<Report>| {
        for r in &mut rs {
            r.elapsed_ms = 0;
        }
        rs
    };
    for suite in [Suite::ZetaBraid, Suite::Alpha, Suite::DeltaPlus] {
        let a = strip(run_suite(&e, suite, Some(3)).unwrap());
        let b = strip(run_suite(&e, suite, Some(3)).unwrap());
        assert_eq!(a, b, "{suite}");
    }
}

#[test]
fn counterexample_present_iff_failed() {
    let standard = Engine::default();
    let mutated = Engine::new(Mutation::ZetaLessWrongChi.apply(&Laws::standard()));
    for (e, expect_pass) in [(&standard, true), (&mutated, false)] {
        for r in run_suite(e, Suite::ZetaSimpSym, Some(3)).unwrap() {
            assert_eq!(r.passed, expect_pass);
            for c in &r.checks {
                assert_eq!(c.passed, c.counterexample.is_none(), "{c:?}");
            }
        }
    }
}

#[test]
fn every_mutation_is_detected() {
    for m in Mutation::ALL {
        let e = Engine::new(m.apply(&Laws::standard()));
        let mut caught = Vec::new();
        for suite in [Suite::ZetaBraid, Suite::ZetaSimpSym, Suite::Transpositions, Suite::Alpha, Suite::Rho] {
            let reports = run_suite(&e, suite, Some(3)).unwrap();
            if reports.iter().any(|r| !r.passed) {
                caught.push(suite);
                let cx = reports.iter().flat_map(|r| r.failures()).find_map(|c| c.counterexample.as_ref());
                assert!(cx.is_some(), "{}: failure without counterexample", m.name());
            }
        }
        let mt = check_main_theorem(&e, &bidegrees_up_to(3), 3).unwrap();
        if !mt.passed {
            caught.push(Suite::MainTheorem);
        }
        assert!(!caught.is_empty(), "{} went undetected", m.name());
    }
}
