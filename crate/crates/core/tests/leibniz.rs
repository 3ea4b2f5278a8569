mod common;

use std::collections::HashMap;
use std::sync::OnceLock;

use common::{element_between, scalar, Kinds};
use proptest::prelude::*;
use prop_rewriter::laws::{IdealLaw, Laws};
use prop_rewriter::leibniz::{alpha, del_in_rho, expand_rho, rho, IdealGenerator};
use prop_rewriter::rewrite::sym_basis_monomials;
use prop_rewriter::rewrite::Flavor;
use prop_rewriter::verify::{ideal_membership_oracle, quotient_dimension_oracle, IdealOracle};
use prop_rewriter::{parse_element, Element, Engine, GenKind, Level, Side};

fn p(s: &str) -> Element {
    parse_element(s).unwrap()
}

fn oracles() -> &'static HashMap<(Side, Level, Level), IdealOracle> {
    static CELL: OnceLock<HashMap<(Side, Level, Level), IdealOracle>> = OnceLock::new();
    CELL.get_or_init(|| {
        let e = Engine::default();
        let mut m = HashMap::new();
        for side in [Side::Leib, Side::LeibOp] {
            for t in 2..=4 {
                for n in 0..=t - 2 {
                    m.insert((side, n, t), IdealOracle::new(&e, side, n, t, 4).unwrap());
                }
            }
        }
        m
    })
}

/// A random element of the ideal at `(n, t)`: a sum of `a · g · b` with
/// `g` a generator at level `k`, `b: n → k`, `a: k+2 → t`.
fn ideal_member(side: Side) -> impl Strategy<Value = (Level, Level, Element)> {
    (2usize..=4)
        .prop_flat_map(|t| (0..=t - 2, Just(t)))
        .prop_flat_map(|(n, t)| (Just(n), Just(t), n..=t - 2))
        .prop_flat_map(move |(n, t, k)| {
            let parts = (0..=k, scalar(), element_between(Kinds::DelChi, k + 2, t, 2), element_between(Kinds::DelChi, n, k, 2));
            (Just(n), Just(t), Just(k), prop::collection::vec(parts, 1..=3))
        })
        .prop_map(move |(n, t, k, parts)| {
            let e = Engine::default();
            let mut x = Element::zero();
            for (j, c, a, b) in parts {
                let g = e.ideal_generator(&IdealGenerator::new(side, k, j).unwrap()).unwrap();
                x = x + a.compose(&g).compose(&b).scale(&c);
            }
            (n, t, x)
        })
}

fn side_strategy() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Leib), Just(Side::LeibOp)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The normalizer vanishes exactly on the ideal, as decided by exact
    /// linear algebra, on members and on perturbed members.
    #[test]
    fn normalizer_zero_iff_oracle_member(
        (n, t, member) in side_strategy().prop_flat_map(ideal_member),
        noise in prop::option::of((scalar(), any::<prop::sample::Index>())),
    ) {
        let e = Engine::default();
        let mut x = member;
        if let Some((c, i)) = noise {
            let basis = sym_basis_monomials(n, t, Flavor::Mag);
            x = x + Element::from_word(basis[i.index(basis.len())].to_word(GenKind::Del)).scale(&c);
        }
        for s in [Side::Leib, Side::LeibOp] {
            let nf_zero = e.normalize_in(s, &x).unwrap().is_zero();
            let member = x.is_zero() || oracles()[&(s, n, t)].contains(&e, &x).unwrap();
            prop_assert_eq!(nf_zero, member, "side {:?} x = {}", s, x);
        }
    }

    /// α carries one ideal onto the other.
    #[test]
    fn alpha_transports_membership(x in (0usize..=2).prop_flat_map(|n| (Just(n), n..=4)).prop_flat_map(|(n, t)| element_between(Kinds::DelChi, n, t, 3))) {
        let e = Engine::default();
        prop_assert_eq!(e.leib_normalize(&x).unwrap().is_zero(), e.leibop_normalize(&alpha(&x).unwrap()).unwrap().is_zero());
        prop_assert_eq!(e.leibop_normalize(&x).unwrap().is_zero(), e.leib_normalize(&alpha(&x).unwrap()).unwrap().is_zero());
    }

    /// Leib and Leib^op normal forms agree after transport by α.
    #[test]
    fn alpha_intertwines_normal_forms(x in (0usize..=2).prop_flat_map(|n| (Just(n), n..=4)).prop_flat_map(|(n, t)| element_between(Kinds::DelChi, n, t, 3))) {
        let e = Engine::default();
        let via_leib = e.leibop_normalize(&alpha(&expand_rho(&e.leib_normalize(&x).unwrap()).unwrap()).unwrap()).unwrap();
        let direct = e.leibop_normalize(&alpha(&x).unwrap()).unwrap();
        prop_assert_eq!(via_leib, direct);
    }
}

#[test]
fn oracle_examples() {
    let e = Engine::default();
    let o = IdealOracle::new(&e, Side::Leib, 0, 2, 5).unwrap();
    assert_eq!(o.free_dimension(), 12);
    assert_eq!(o.quotient_dimension().unwrap(), 6);
    for n in 0..=3 {
        let f: usize = (1..=n + 1).product();
        assert_eq!(quotient_dimension_oracle(&e, Side::LeibOp, n, n, 5).unwrap(), f);
    }
    assert_eq!(quotient_dimension_oracle(&e, Side::Leib, 1, 3, 5).unwrap(), 72);
    for side in [Side::Leib, Side::LeibOp] {
        for g in IdealGenerator::all(side, 2) {
            let x = e.ideal_generator(&g).unwrap();
            assert!(ideal_membership_oracle(&e, side, &x, 5).unwrap(), "{g:?}");
        }
    }
    assert!(matches!(
        quotient_dimension_oracle(&e, Side::Leib, 0, 6, 5),
        Err(prop_rewriter::Error::BoundExceeded { .. })
    ));
}

#[test]
fn literal_shifted_chi_variant_collapses_dimension() {
    let laws = Laws {
        leibop: IdealLaw::leibop_shifted_chi(),
        ..Laws::standard()
    };
    let e = Engine::new(laws);
    assert_eq!(quotient_dimension_oracle(&e, Side::LeibOp, 0, 3, 5).unwrap(), 12);
    assert_eq!(quotient_dimension_oracle(&Engine::default(), Side::LeibOp, 0, 3, 5).unwrap(), 24);
}

#[test]
fn rho_change_of_basis() {
    assert_eq!(rho(0, 0).unwrap(), p("d[0,0]"));
    assert_eq!(rho(2, 2).unwrap(), p("d[2,2] + x[3,2]*d[2,1] + x[3,2]*x[3,1]*d[2,0]"));
    assert!(rho(3, -1).unwrap().is_zero());
    for n in 0..4 {
        for j in 0..=n {
            let d = Element::from_gen(prop_rewriter::Generator::del(n, j).unwrap());
            assert_eq!(expand_rho(&del_in_rho(n, j).unwrap()).unwrap(), d);
        }
    }
}

#[test]
fn normal_form_examples() {
    let e = Engine::default();
    let g = p("d[1,1]*d[0,0] - d[1,0]*d[0,0] + x[2,1]*d[1,0]*d[0,0]");
    assert!(e.leib_normalize(&g).unwrap().is_zero());
    assert_eq!(e.leib_normalize(&p("d[1,0]*d[0,0]")).unwrap(), p("r[1,1]*r[0,0]"));
    let gop = p("d[1,0]*d[0,0] - d[1,1]*d[0,0] + x[2,0]*d[1,1]*d[0,0]");
    assert!(e.leibop_normalize(&gop).unwrap().is_zero());
    assert!(e.leib_normalize(&alpha(&gop).unwrap()).unwrap().is_zero());
    assert!(e.leibop_normalize(&alpha(&g).unwrap()).unwrap().is_zero());
}
