mod common;

use common::{element, element_between, Kinds};
use proptest::prelude::*;
use prop_rewriter::{parse_element, Element, Scalar};

/// Three composable elements `x: c→d`, `y: b→c`, `z: a→b`.
fn chain() -> impl Strategy<Value = (Element, Element, Element)> {
    prop::collection::vec(0usize..2, 3)
        .prop_flat_map(|steps| {
            let a = 0;
            let b = a + steps[0];
            let c = b + steps[1];
            let d = c + steps[2];
            (
                element_between(Kinds::DelChi, c, d, 3),
                element_between(Kinds::DelChi, b, c, 3),
                element_between(Kinds::DelChi, a, b, 3),
            )
        })
}

fn small_rational() -> impl Strategy<Value = (i64, i64)> {
    (-1000i64..=1000, 1i64..=1000)
}

proptest! {
    #[test]
    fn print_parse_round_trip(x in element(Kinds::DelChi, 4, 4)) {
        prop_assert_eq!(parse_element(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn print_parse_round_trip_rho(x in element(Kinds::RhoChi, 4, 4)) {
        prop_assert_eq!(parse_element(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn compose_is_associative_and_graded((x, y, z) in chain()) {
        let left = x.compose(&y).compose(&z);
        let right = x.compose(&y.compose(&z));
        prop_assert_eq!(&left, &right);
        if !left.is_zero() {
            let (a, _) = z.homogeneous_bidegree().unwrap();
            let (_, d) = x.homogeneous_bidegree().unwrap();
            prop_assert_eq!(left.homogeneous_bidegree(), Some((a, d)));
        }
    }

    #[test]
    fn compose_distributes_over_sums((x, y, z) in chain()) {
        let y2 = y.clone() + y.scale(&Scalar::from_int(3));
        prop_assert_eq!(x.compose(&(y.clone() + y2.clone())).compose(&z), x.compose(&y).compose(&z) + x.compose(&y2).compose(&z));
    }

    #[test]
    fn adding_the_negation_gives_zero(x in element(Kinds::DelChi, 4, 4)) {
        prop_assert!((x.clone() + (-x.clone())).is_zero());
        prop_assert!((x.clone() - x).is_zero());
    }

    /// Scalar arithmetic against cross-multiplied i128 fractions.
    #[test]
    fn scalar_matches_integer_fractions((p1, q1) in small_rational(), (p2, q2) in small_rational()) {
        let (a, b) = (Scalar::new(p1, q1).unwrap(), Scalar::new(p2, q2).unwrap());
        let same = |s: &Scalar, num: i128, den: i128| {
            let n: i128 = s.numerator().try_into().unwrap();
            let d: i128 = s.denominator().try_into().unwrap();
            n * den == num * d && d > 0
        };
        let (p1, q1, p2, q2) = (p1 as i128, q1 as i128, p2 as i128, q2 as i128);
        prop_assert!(same(&(a.clone() + b.clone()), p1 * q2 + p2 * q1, q1 * q2));
        prop_assert!(same(&(a.clone() - b.clone()), p1 * q2 - p2 * q1, q1 * q2));
        prop_assert!(same(&(a.clone() * b.clone()), p1 * p2, q1 * q2));
        match a.checked_div(&b) {
            Ok(c) => {
                let (num, den) = if p2 < 0 { (-p1 * q2, -q1 * p2) } else { (p1 * q2, q1 * p2) };
                prop_assert!(same(&c, num, den));
            }
            Err(_) => prop_assert_eq!(p2, 0),
        }
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }
}

#[test]
fn printing_is_canonical() {
    let x = parse_element("3/2*x[1,0] - d[0,0] - 1[2]").unwrap();
    assert_eq!(x.to_string(), "-d[0,0] + 3/2*x[1,0] - 1[2]");
    assert_eq!(parse_element("d[0,0] - d[0,0]").unwrap().to_string(), "0");
    assert_eq!(parse_element("2*(d[1,0] + d[1,1])*d[0,0]").unwrap().to_string(), "2*d[1,0]*d[0,0] + 2*d[1,1]*d[0,0]");
}

#[test]
fn parse_errors_report_positions() {
    for (s, pos) in [("d[0,0]*", 7), ("d[0,", 4), ("x[0,0]", 0)] {
        match parse_element(s) {
            Err(prop_rewriter::Error::Parse { position, .. }) => assert_eq!(position, pos, "{s}"),
            other => panic!("{s}: expected a parse error, got {other:?}"),
        }
    }
    // Products of non-composable words vanish in a categorical algebra.
    assert!(parse_element("d[1,0]*d[1,0]").unwrap().is_zero());
}
