use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::species::Symbol;
use crate::Scalar;

/// Highest order accepted in `g` or `j` unless a caller overrides it.
pub const DEFAULT_ORDER_BOUND: u32 = 4;

/// Truncation orders: powers of `g` above `g` and of `j` above `j` are
/// dropped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Trunc {
    pub g: u32,
    pub j: u32,
}

impl Trunc {
    pub fn new(g: u32, j: u32) -> Self {
        Trunc { g, j }
    }

    pub fn min(self, other: Trunc) -> Trunc {
        Trunc {
            g: self.g.min(other.g),
            j: self.j.min(other.j),
        }
    }

    pub fn check(self, bound: u32) -> Result<Trunc> {
        let worst = self.g.max(self.j);
        if worst > bound {
            return Err(Error::BoundExceeded {
                what: "series order",
                size: worst as usize,
                bound: bound as usize,
            });
        }
        Ok(self)
    }

    fn admits(self, g: u32, j: u32) -> bool {
        g <= self.g && j <= self.j
    }
}

/// The formal variables of the target ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    G,
    J,
}

/// `word · ℏ^hbar · g^g · j^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub word: Vec<Symbol>,
    pub hbar: i32,
    pub g: u32,
    pub j: u32,
}

impl Monomial {
    pub fn word(word: Vec<Symbol>) -> Self {
        Monomial {
            word,
            hbar: 0,
            g: 0,
            j: 0,
        }
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        Monomial {
            word,
            hbar: self.hbar + other.hbar,
            g: self.g + other.g,
            j: self.j + other.j,
        }
    }
}

/// The scale `c` of an exponential series, a scalar times a power of `ℏ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coupling {
    pub coeff: Scalar,
    pub hbar: i32,
}

impl Coupling {
    /// `1/(iℏ) = -i ℏ^{-1}`
    pub fn inverse_i_hbar() -> Self {
        Coupling {
            coeff: -Scalar::i(),
            hbar: -1,
        }
    }

    pub fn scalar(coeff: Scalar) -> Self {
        Coupling { coeff, hbar: 0 }
    }

    pub fn pow(&self, n: u32) -> Coupling {
        Coupling {
            coeff: self.coeff.pow(n),
            hbar: self.hbar * n as i32,
        }
    }

    pub fn inv(&self) -> Result<Coupling> {
        Ok(Coupling {
            coeff: self.coeff.inv().ok_or(Error::NotInvertible)?,
            hbar: -self.hbar,
        })
    }
}

impl Default for Coupling {
    fn default() -> Self {
        Coupling::inverse_i_hbar()
    }
}

/// A truncated element of `A((ℏ))[[g, j]]` with `A` the free algebra on
/// decoration symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetPoly {
    trunc: Trunc,
    terms: BTreeMap<Monomial, Scalar>,
}

impl TargetPoly {
    pub fn zero(trunc: Trunc) -> Self {
        TargetPoly {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: Trunc) -> Self {
        TargetPoly::monomial(trunc, Monomial::word(Vec::new()), Scalar::one())
    }

    pub fn word(trunc: Trunc, word: Vec<Symbol>) -> Self {
        TargetPoly::monomial(trunc, Monomial::word(word), Scalar::one())
    }

    /// `c · m`, or zero if `m` lies beyond the truncation.
    pub fn monomial(trunc: Trunc, m: Monomial, c: Scalar) -> Self {
        let mut out = TargetPoly::zero(trunc);
        out.add_term(m, &c);
        out
    }

    /// `c^n · v^k` as an element, `v` one of the formal variables.
    pub fn scale_factor(trunc: Trunc, c: &Coupling, var_powers: (u32, u32)) -> Self {
        let m = Monomial {
            word: Vec::new(),
            hbar: c.hbar,
            g: var_powers.0,
            j: var_powers.1,
        };
        TargetPoly::monomial(trunc, m, c.coeff.clone())
    }

    pub fn from_terms(trunc: Trunc, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut out = TargetPoly::zero(trunc);
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    pub fn trunc(&self) -> Trunc {
        self.trunc
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() || !self.trunc.admits(m.g, m.j) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Drops everything above the new (lower) orders.
    pub fn truncate(&self, trunc: Trunc) -> TargetPoly {
        let trunc = trunc.min(self.trunc);
        TargetPoly::from_terms(trunc, self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    pub fn scale(&self, c: &Scalar) -> TargetPoly {
        let mut out = TargetPoly::zero(self.trunc);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &(v * c));
        }
        out
    }

    /// `self += c · other`, keeping the lower truncation.
    pub fn axpy(&mut self, c: &Scalar, other: &TargetPoly) {
        self.trunc = self.trunc.min(other.trunc);
        let trunc = self.trunc;
        self.terms.retain(|m, _| trunc.admits(m.g, m.j));
        for (m, v) in &other.terms {
            self.add_term(m.clone(), &(v * c));
        }
    }

    pub fn add(&self, other: &TargetPoly) -> TargetPoly {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &TargetPoly) -> TargetPoly {
        let mut out = self.clone();
        out.axpy(&-Scalar::one(), other);
        out
    }

    /// The product `⋆`: words concatenate, exponents add.
    pub fn mul(&self, other: &TargetPoly) -> TargetPoly {
        let mut out = TargetPoly::zero(self.trunc.min(other.trunc));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if out.trunc.admits(m1.g + m2.g, m1.j + m2.j) {
                    out.add_term(m1.times(m2), &(c1 * c2));
                }
            }
        }
        out
    }

    /// `self ⋆ other - other ⋆ self`
    pub fn commutator(&self, other: &TargetPoly) -> TargetPoly {
        self.mul(other).sub(&other.mul(self))
    }

    /// Coefficient of `v^k`, as an element with that variable removed
    /// (its truncation order set to 0).
    pub fn coefficient_of(&self, var: Var, k: u32) -> TargetPoly {
        let trunc = match var {
            Var::G => Trunc { g: 0, ..self.trunc },
            Var::J => Trunc { j: 0, ..self.trunc },
        };
        let mut out = TargetPoly::zero(trunc);
        for (m, c) in &self.terms {
            let (hit, mut m2) = match var {
                Var::G => (m.g == k, m.clone()),
                Var::J => (m.j == k, m.clone()),
            };
            if hit {
                match var {
                    Var::G => m2.g = 0,
                    Var::J => m2.j = 0,
                }
                out.add_term(m2, c);
            }
        }
        out
    }

    /// `d/dj |_{j=0}`; needs `j`-truncation at least 1.
    pub fn d_dj_at_zero(&self) -> Result<TargetPoly> {
        if self.trunc.j < 1 {
            return Err(Error::InsufficientTruncation {
                var: "j",
                needed: 1,
                have: self.trunc.j,
            });
        }
        Ok(self.coefficient_of(Var::J, 1))
    }

    /// Multiplies by `c`.
    pub fn times_coupling(&self, c: &Coupling) -> TargetPoly {
        self.mul(&TargetPoly::scale_factor(self.trunc, c, (0, 0)))
    }
}

impl fmt::Display for TargetPoly {
    /// `2 AB ℏ^-1 g j - i S` style, terms in monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            if m.word.is_empty() {
                f.write_str(" 1")?;
            } else {
                f.write_str(" ")?;
                for (p, s) in m.word.iter().enumerate() {
                    if p > 0 {
                        f.write_str("·")?;
                    }
                    f.write_str(s)?;
                }
            }
            if m.hbar != 0 {
                write!(f, " ℏ^{}", m.hbar)?;
            }
            if m.g != 0 {
                write!(f, " g^{}", m.g)?;
            }
            if m.j != 0 {
                write!(f, " j^{}", m.j)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    word: Vec<String>,
    hbar: i32,
    g: u32,
    j: u32,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    trunc: Trunc,
    terms: Vec<TermRepr>,
}

/// Longest word accepted when decoding.
pub const MAX_WORD_LEN: usize = 64;

/// Largest `|ℏ|` exponent accepted when decoding.
pub const MAX_HBAR_POWER: u32 = 1 << 16;

impl Serialize for TargetPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr {
                    word: m.word.iter().map(|w| w.to_string()).collect(),
                    hbar: m.hbar,
                    g: m.g,
                    j: m.j,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TargetPoly {
    /// Terms beyond the truncation are rejected rather than dropped.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PolyRepr::deserialize(d)?;
        let mut out = TargetPoly::zero(repr.trunc);
        for t in repr.terms {
            if !repr.trunc.admits(t.g, t.j) {
                return Err(D::Error::custom("term exceeds the truncation orders"));
            }
            if t.word.len() > MAX_WORD_LEN {
                return Err(D::Error::custom("word too long"));
            }
            if t.hbar.unsigned_abs() > MAX_HBAR_POWER {
                return Err(D::Error::custom("hbar power out of range"));
            }
            if t.word.iter().any(|w| w.is_empty()) {
                return Err(D::Error::custom("empty symbol in word"));
            }
            let m = Monomial {
                word: t.word.iter().map(|w| Symbol::from(w.as_str())).collect(),
                hbar: t.hbar,
                g: t.g,
                j: t.j,
            };
            out.add_term(m, &t.coeff);
        }
        Ok(out)
    }
}
