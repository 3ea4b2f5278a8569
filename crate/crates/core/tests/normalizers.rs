mod common;

use common::{build_word, element, element_pair, scalar, Kinds};
use proptest::prelude::*;
use prop_rewriter::groups::{chi_word_of_perm, perm_of_chi_word, Permutation};
use prop_rewriter::rewrite::{enumerate_basis, mag_normalize, simp_normalize, straighten_word, BasisAlgebra, Flavor};
use prop_rewriter::{Algebra, Element, Engine, GenKind, Generator, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const NORMALIZING: [(Algebra, Kinds); 7] = [
    (Algebra::Mag, Kinds::Del),
    (Algebra::Simp, Kinds::Del),
    (Algebra::SymMag, Kinds::DelChi),
    (Algebra::SymSimp, Kinds::DelChi),
    (Algebra::Leib, Kinds::DelChi),
    (Algebra::Leib, Kinds::RhoChi),
    (Algebra::LeibOp, Kinds::DelChi),
];

fn hygiene(algebra: Algebra, x: &Element, y: &Element, a: &prop_rewriter::Scalar) -> Result<(), TestCaseError> {
    let e = Engine::default();
    let nx = e.normalize_as(algebra, x).unwrap();
    let ny = e.normalize_as(algebra, y).unwrap();
    prop_assert_eq!(&e.normalize_as(algebra, &nx).unwrap(), &nx, "idempotence in {}", algebra.name());
    let combo = x.scale(a) + y.clone();
    prop_assert_eq!(e.normalize_as(algebra, &combo).unwrap(), nx.scale(a) + ny, "linearity in {}", algebra.name());
    if !nx.is_zero() {
        prop_assert_eq!(nx.homogeneous_bidegree(), x.homogeneous_bidegree(), "bigrade in {}", algebra.name());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalizers_are_idempotent_linear_and_graded(
        (which, (x, y)) in (0..NORMALIZING.len()).prop_flat_map(|w| (Just(w), element_pair(NORMALIZING[w].1, 4, 4))),
        a in scalar(),
    ) {
        hygiene(NORMALIZING[which].0, &x, &y, &a)?;
    }

    /// Rewriting at random violating sites reaches the same normal form as
    /// the leftmost strategy.
    #[test]
    fn straightening_is_strategy_independent(
        t in 1usize..7,
        choices in prop::collection::vec(0usize..64, 0..8),
        seed in any::<u64>(),
        simp in any::<bool>(),
    ) {
        let w = build_word(0, t, Kinds::Del, &choices);
        let flavor = if simp { Flavor::Simp } else { Flavor::Mag };
        let expected = straighten_word(&w, GenKind::Del, flavor).unwrap();
        prop_assert_eq!(random_site_straighten(&w, flavor, seed), expected);
    }

    /// ζ applied at random sites, followed by reading the χ-prefix as a
    /// permutation and straightening the tail, agrees with symmag_normalize.
    #[test]
    fn zeta_is_strategy_independent(
        t in 1usize..5,
        n in 0usize..3,
        choices in prop::collection::vec(0usize..64, 0..10),
        seed in any::<u64>(),
    ) {
        let n = n.min(t);
        let w = build_word(n, t, Kinds::DelChi, &choices);
        let e = Engine::default();
        let expected = e.symmag_normalize(&Element::from_word(w.clone())).unwrap();
        prop_assert_eq!(Element::from_word(random_site_zeta(&e, &w, seed)), expected);
    }

    #[test]
    fn mag_and_simp_reject_chi(x in element(Kinds::DelChi, 3, 3)) {
        let has_chi = x.words().any(|w| w.contains_kind(GenKind::Chi));
        prop_assert_eq!(mag_normalize(&x).is_err(), has_chi);
        prop_assert_eq!(simp_normalize(&x).is_err(), has_chi);
    }
}

fn random_site_straighten(w: &Word, flavor: Flavor, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gens = w.gens().to_vec();
    loop {
        let sites: Vec<usize> = (0..gens.len().saturating_sub(1))
            .filter(|&k| {
                let (i, j) = (gens[k].index(), gens[k + 1].index());
                match flavor {
                    Flavor::Mag => i < j,
                    Flavor::Simp => i <= j,
                }
            })
            .collect();
        if sites.is_empty() {
            return Word::with_source(w.source(), gens).unwrap();
        }
        let k = sites[rng.gen_range(0..sites.len())];
        let (i, j) = (gens[k].index(), gens[k + 1].index());
        let (hi, lo) = (gens[k].level(), gens[k + 1].level());
        gens[k] = Generator::del(hi, j + 1).unwrap();
        gens[k + 1] = Generator::del(lo, i).unwrap();
    }
}

fn random_site_zeta(e: &Engine, w: &Word, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gens = w.gens().to_vec();
    loop {
        let sites: Vec<usize> = (0..gens.len().saturating_sub(1))
            .filter(|&k| gens[k].kind() == GenKind::Del && gens[k + 1].kind() == GenKind::Chi)
            .collect();
        if sites.is_empty() {
            break;
        }
        let k = sites[rng.gen_range(0..sites.len())];
        let z = e.zeta_gen(gens[k], gens[k + 1]).unwrap();
        let (rw, _) = z.terms().next().unwrap();
        let mut next = gens[..k].to_vec();
        next.extend_from_slice(rw.gens());
        next.extend_from_slice(&gens[k + 2..]);
        gens = next;
    }
    let split = gens.iter().position(|g| g.kind() == GenKind::Del).unwrap_or(gens.len());
    let tail = Word::with_source(w.source(), gens[split..].to_vec()).unwrap();
    let prefix = Word::with_source(tail.target(), gens[..split].to_vec()).unwrap();
    let perm = if prefix.is_empty() { Permutation::identity(prefix.source()) } else { perm_of_chi_word(&prefix).unwrap() };
    let tail = straighten_word(&tail, GenKind::Del, Flavor::Mag).unwrap();
    chi_word_of_perm(&perm).compose(&tail).unwrap()
}

fn catalan(k: u64) -> u64 {
    (0..k).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn binomial(t: u64, n: u64) -> u64 {
    (0..n).fold(1, |acc, k| acc * (t - k) / (k + 1))
}

fn factorial(k: u64) -> u64 {
    (1..=k).product()
}

/// Counts non-increasing (Mag) or strictly decreasing (Simp) subscript
/// sequences directly, reading each new top subscript against the one
/// below it.
fn brute_force_normal_words(n: usize, t: usize, flavor: Flavor) -> usize {
    fn rec(level: usize, t: usize, below: Option<usize>, flavor: Flavor) -> usize {
        if level == t {
            return 1;
        }
        (0..=level)
            .filter(|&j| match (below, flavor) {
                (None, _) => true,
                (Some(b), Flavor::Mag) => j >= b,
                (Some(b), Flavor::Simp) => j > b,
            })
            .map(|j| rec(level + 1, t, Some(j), flavor))
            .sum()
    }
    rec(n, t, None, flavor)
}

#[test]
fn basis_counts() {
    for t in 0..=7u64 {
        assert_eq!(enumerate_basis(BasisAlgebra::Mag, 0, t as usize).unwrap().len() as u64, catalan(t), "Mag(0,{t})");
        for n in 0..=t {
            let simp = enumerate_basis(BasisAlgebra::Simp, n as usize, t as usize).unwrap().len() as u64;
            assert_eq!(simp, binomial(t, n), "Simp({n},{t})");
            let mag = enumerate_basis(BasisAlgebra::Mag, n as usize, t as usize).unwrap().len();
            assert_eq!(mag, brute_force_normal_words(n as usize, t as usize, Flavor::Mag), "Mag({n},{t})");
            if t <= 4 {
                let symsimp = enumerate_basis(BasisAlgebra::SymSimp, n as usize, t as usize).unwrap().len() as u64;
                assert_eq!(symsimp, factorial(t + 1) * binomial(t, n), "SymSimp({n},{t})");
            }
        }
    }
}

#[test]
fn every_basis_word_is_normal() {
    let e = Engine::default();
    for t in 0..=4 {
        for n in 0..=t {
            for (alg, basis) in [
                (Algebra::Mag, BasisAlgebra::Mag),
                (Algebra::Simp, BasisAlgebra::Simp),
                (Algebra::SymMag, BasisAlgebra::SymMag),
                (Algebra::SymSimp, BasisAlgebra::SymSimp),
                (Algebra::LeibOp, BasisAlgebra::SymSimp),
            ] {
                for w in enumerate_basis(basis, n, t).unwrap() {
                    let x = Element::from_word(w.clone());
                    assert_eq!(e.normalize_as(alg, &x).unwrap(), x, "{w} in {}", alg.name());
                }
            }
        }
    }
}
