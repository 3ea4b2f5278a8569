//! Rule tables for the distributive laws ζ and ω and the two Leibniz ideal
//! generators.
//!
//! The engine reads every case from a [`Laws`] value, so corrupted tables
//! can be injected to confirm that the verification suites notice.

use serde::Serialize;

/// Which subscript of the input pair a template index is measured from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Anchor {
    /// The ∂ (or ρ) subscript.
    I,
    /// The χ subscript.
    J,
}

/// A subscript template: `anchor + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Index {
    pub anchor: Anchor,
    pub offset: i64,
}

impl Index {
    pub const fn i(offset: i64) -> Self {
        Index {
            anchor: Anchor::I,
            offset,
        }
    }

    pub const fn j(offset: i64) -> Self {
        Index {
            anchor: Anchor::J,
            offset,
        }
    }

    pub fn eval(&self, i: usize, j: usize) -> i64 {
        let base = match self.anchor {
            Anchor::I => i,
            Anchor::J => j,
        };
        base as i64 + self.offset
    }
}

/// One case of ζ: `∂ⁿᵢ χⁿⱼ ↦ χ^{n+1}_{c₁} ⋯ χ^{n+1}_{c_k} ∂ⁿ_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaCase {
    pub chis: Vec<Index>,
    pub del: Index,
}

/// ζ split by the relative position of `i` (∂ subscript) and `j` (χ subscript).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaLaw {
    /// `i < j`
    pub less: ZetaCase,
    /// `i = j`
    pub equal: ZetaCase,
    /// `i = j + 1`
    pub next: ZetaCase,
    /// `i > j + 1`
    pub far: ZetaCase,
}

impl ZetaLaw {
    pub fn standard() -> Self {
        ZetaLaw {
            less: ZetaCase {
                chis: vec![Index::j(1)],
                del: Index::i(0),
            },
            equal: ZetaCase {
                chis: vec![Index::i(1), Index::i(0)],
                del: Index::i(1),
            },
            next: ZetaCase {
                chis: vec![Index::i(-1), Index::i(0)],
                del: Index::i(-1),
            },
            far: ZetaCase {
                chis: vec![Index::j(0)],
                del: Index::i(0),
            },
        }
    }

    pub fn case(&self, i: usize, j: usize) -> &ZetaCase {
        if i < j {
            &self.less
        } else if i == j {
            &self.equal
        } else if i == j + 1 {
            &self.next
        } else {
            &self.far
        }
    }
}

/// One summand of an ω case: `coeff · χ^{n+1}_{c₁} ⋯ χ^{n+1}_{c_k} ρⁿ_r`.
/// A ρ subscript of −1 denotes the zero element `ρ₋₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaTerm {
    pub coeff: i64,
    pub chis: Vec<Index>,
    pub rho: Index,
}

/// ω split by the relative position of `i` (ρ subscript) and `j` (χ subscript).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaLaw {
    /// `j > i`
    pub greater: Vec<OmegaTerm>,
    /// `j < i`
    pub less: Vec<OmegaTerm>,
    /// `j = i`
    pub equal: Vec<OmegaTerm>,
}

impl OmegaLaw {
    pub fn standard() -> Self {
        let t = |coeff, chis: &[Index], rho| OmegaTerm {
            coeff,
            chis: chis.to_vec(),
            rho,
        };
        OmegaLaw {
            greater: vec![t(1, &[Index::j(1)], Index::i(0))],
            less: vec![t(1, &[Index::j(0)], Index::i(0))],
            equal: vec![
                t(1, &[Index::i(1), Index::i(0)], Index::i(1)),
                t(-1, &[Index::i(1), Index::i(0), Index::i(1)], Index::i(0)),
                t(1, &[Index::i(0), Index::i(1)], Index::i(-1)),
            ],
        }
    }

    pub fn case(&self, i: usize, j: usize) -> &[OmegaTerm] {
        if j > i {
            &self.greater
        } else if j < i {
            &self.less
        } else {
            &self.equal
        }
    }
}

/// A three-term ideal generator at `(n, j)`:
/// `∂^{n+1}_{j+first} ∂ⁿⱼ − (1 + chi_sign · χ^{n+2}_{j+chi_offset}) ∂^{n+1}_{j+second} ∂ⁿⱼ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdealLaw {
    pub first: i64,
    pub second: i64,
    pub chi_offset: i64,
    pub chi_sign: i64,
}

impl IdealLaw {
    /// `∂_{j+1}∂_j − (1 − χ_{j+1})∂_j∂_j`, the left Leibniz identity.
    pub fn leib() -> Self {
        IdealLaw {
            first: 1,
            second: 0,
            chi_offset: 1,
            chi_sign: -1,
        }
    }

    /// `∂_j∂_j − (1 − χ_j)∂_{j+1}∂_j`, the image of [`IdealLaw::leib`]
    /// under α.
    pub fn leibop() -> Self {
        IdealLaw {
            first: 0,
            second: 1,
            chi_offset: 0,
            chi_sign: -1,
        }
    }

    /// The opposite-side generator with `χ_{j+1}` in place of `χ_j`. Its
    /// quotient is strictly smaller than the Leibniz quotient (dimension 12
    /// instead of 24 at bidegree (0, 3)), so it is kept only as a
    /// comparison variant.
    pub fn leibop_shifted_chi() -> Self {
        IdealLaw {
            chi_offset: 1,
            ..IdealLaw::leibop()
        }
    }
}

/// The two Leibniz-type quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    Leib,
    LeibOp,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Leib => "leib",
            Side::LeibOp => "leibop",
        }
    }
}

/// The complete rule set used by an [`crate::Engine`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Laws {
    pub zeta: ZetaLaw,
    pub omega: OmegaLaw,
    pub leib: IdealLaw,
    pub leibop: IdealLaw,
}

impl Laws {
    pub fn standard() -> Self {
        Laws {
            zeta: ZetaLaw::standard(),
            omega: OmegaLaw::standard(),
            leib: IdealLaw::leib(),
            leibop: IdealLaw::leibop(),
        }
    }

    pub fn ideal(&self, side: Side) -> &IdealLaw {
        match side {
            Side::Leib => &self.leib,
            Side::LeibOp => &self.leibop,
        }
    }
}

impl Default for Laws {
    fn default() -> Self {
        Laws::standard()
    }
}

/// Single-case corruptions of the standard tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    ZetaLessWrongChi,
    ZetaFarWrongChi,
    ZetaEqualReversed,
    ZetaNextWrongDel,
    OmegaGreaterWrongChi,
    OmegaLessWrongChi,
    OmegaEqualMiddleSign,
    OmegaEqualDropLast,
    LeibSign,
    LeibOpSign,
}

impl Mutation {
    pub const ALL: [Mutation; 10] = [
        Mutation::ZetaLessWrongChi,
        Mutation::ZetaFarWrongChi,
        Mutation::ZetaEqualReversed,
        Mutation::ZetaNextWrongDel,
        Mutation::OmegaGreaterWrongChi,
        Mutation::OmegaLessWrongChi,
        Mutation::OmegaEqualMiddleSign,
        Mutation::OmegaEqualDropLast,
        Mutation::LeibSign,
        Mutation::LeibOpSign,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::ZetaLessWrongChi => "zeta-less-wrong-chi",
            Mutation::ZetaFarWrongChi => "zeta-far-wrong-chi",
            Mutation::ZetaEqualReversed => "zeta-equal-reversed",
            Mutation::ZetaNextWrongDel => "zeta-next-wrong-del",
            Mutation::OmegaGreaterWrongChi => "omega-greater-wrong-chi",
            Mutation::OmegaLessWrongChi => "omega-less-wrong-chi",
            Mutation::OmegaEqualMiddleSign => "omega-equal-middle-sign",
            Mutation::OmegaEqualDropLast => "omega-equal-drop-last",
            Mutation::LeibSign => "leib-sign",
            Mutation::LeibOpSign => "leibop-sign",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Mutation::ZetaLessWrongChi => "ζ, case i<j: χ_{j+1} replaced by χ_j",
            Mutation::ZetaFarWrongChi => "ζ, case i>j+1: χ_j replaced by χ_{j+1}",
            Mutation::ZetaEqualReversed => "ζ, case i=j: χ_{i+1}χ_i replaced by χ_iχ_{i+1}",
            Mutation::ZetaNextWrongDel => "ζ, case i=j+1: ∂_{i-1} replaced by ∂_i",
            Mutation::OmegaGreaterWrongChi => "ω, case j>i: χ_{j+1} replaced by χ_j",
            Mutation::OmegaLessWrongChi => "ω, case j<i: χ_j replaced by χ_{j+1}",
            Mutation::OmegaEqualMiddleSign => "ω, case j=i: sign of the middle term flipped",
            Mutation::OmegaEqualDropLast => "ω, case j=i: the ρ_{i-1} term dropped",
            Mutation::LeibSign => "Leib generator: (1 - χ) replaced by (1 + χ)",
            Mutation::LeibOpSign => "Leib^op generator: (1 - χ) replaced by (1 + χ)",
        }
    }

    pub fn from_name(name: &str) -> Option<Mutation> {
        Mutation::ALL.into_iter().find(|m| m.name() == name)
    }

    pub fn apply(self, laws: &Laws) -> Laws {
        let mut l = laws.clone();
        match self {
            Mutation::ZetaLessWrongChi => l.zeta.less.chis = vec![Index::j(0)],
            Mutation::ZetaFarWrongChi => l.zeta.far.chis = vec![Index::j(1)],
            Mutation::ZetaEqualReversed => l.zeta.equal.chis.reverse(),
            Mutation::ZetaNextWrongDel => l.zeta.next.del = Index::i(0),
            Mutation::OmegaGreaterWrongChi => l.omega.greater[0].chis = vec![Index::j(0)],
            Mutation::OmegaLessWrongChi => l.omega.less[0].chis = vec![Index::j(1)],
            Mutation::OmegaEqualMiddleSign => l.omega.equal[1].coeff *= -1,
            Mutation::OmegaEqualDropLast => {
                l.omega.equal.pop();
            }
            Mutation::LeibSign => l.leib.chi_sign *= -1,
            Mutation::LeibOpSign => l.leibop.chi_sign *= -1,
        }
        l
    }
}
