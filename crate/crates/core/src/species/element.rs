use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::accumulate;
use crate::error::{Error, Result};
use crate::setcomp::{refinements, Composition, FiniteSet, Label};
use crate::Scalar;

/// A coproduct component `Δ_{S,T}(a)` as a map on pairs of compositions.
pub type Coproduct = BTreeMap<(Composition, Composition), Scalar>;

/// An element of `Σ[I]`: a finite combination of compositions of one ground
/// set, zero coefficients absent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SigElement {
    ground: FiniteSet,
    terms: BTreeMap<Composition, Scalar>,
}

impl SigElement {
    pub fn zero(ground: FiniteSet) -> Self {
        SigElement {
            ground,
            terms: BTreeMap::new(),
        }
    }

    /// `H_( )`, the unit.
    pub fn unit() -> Self {
        SigElement::basis(Composition::empty())
    }

    /// The basis element `H_F`.
    pub fn basis(f: Composition) -> Self {
        let ground = f.ground();
        let mut terms = BTreeMap::new();
        terms.insert(f, Scalar::one());
        SigElement { ground, terms }
    }

    /// `H_(I)`.
    pub fn stick(ground: FiniteSet) -> Self {
        SigElement::basis(Composition::stick(ground))
    }

    pub fn from_terms(
        ground: FiniteSet,
        terms: impl IntoIterator<Item = (Composition, Scalar)>,
    ) -> Result<Self> {
        let mut out = SigElement::zero(ground);
        for (f, c) in terms {
            let g = f.ground();
            if g != out.ground {
                return Err(Error::GroundMismatch {
                    expected: out.ground.clone(),
                    found: g,
                });
            }
            accumulate(&mut out.terms, f, &c);
        }
        Ok(out)
    }

    pub fn ground(&self) -> &FiniteSet {
        &self.ground
    }

    pub fn terms(&self) -> &BTreeMap<Composition, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, f: &Composition) -> Scalar {
        self.terms.get(f).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, f: Composition, c: &Scalar) {
        accumulate(&mut self.terms, f, c);
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return SigElement::zero(self.ground.clone());
        }
        SigElement {
            ground: self.ground.clone(),
            terms: self.terms.iter().map(|(f, v)| (f.clone(), v * c)).collect(),
        }
    }

    fn check_ground(&self, other: &SigElement) -> Result<()> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch {
                expected: self.ground.clone(),
                found: other.ground.clone(),
            });
        }
        Ok(())
    }

    /// `self += c·other`.
    pub fn axpy(&mut self, c: &Scalar, other: &SigElement) -> Result<()> {
        self.check_ground(other)?;
        for (f, v) in &other.terms {
            accumulate(&mut self.terms, f.clone(), &(c * v));
        }
        Ok(())
    }

    pub fn add(&self, other: &SigElement) -> Result<Self> {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &SigElement) -> Result<Self> {
        let mut out = self.clone();
        out.axpy(&-Scalar::one(), other)?;
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    /// The product `μ_{S,T}`, bilinear extension of concatenation.
    pub fn mult(&self, other: &SigElement) -> Result<Self> {
        let ground = self.ground.disjoint_union(&other.ground)?;
        let mut terms = BTreeMap::new();
        for (f, a) in &self.terms {
            for (g, b) in &other.terms {
                let mut lumps = f.lumps().to_vec();
                lumps.extend(g.lumps().iter().cloned());
                accumulate(&mut terms, Composition::from_lumps_unchecked(lumps), &(a * b));
            }
        }
        Ok(SigElement { ground, terms })
    }

    /// The coproduct component `Δ_{S,T}`; requires `S ⊔ T = I`.
    pub fn comult(&self, s: &FiniteSet, t: &FiniteSet) -> Result<Coproduct> {
        let st = s.disjoint_union(t)?;
        if st != self.ground {
            return Err(Error::GroundMismatch {
                expected: self.ground.clone(),
                found: st,
            });
        }
        let mut out = Coproduct::new();
        for (f, c) in &self.terms {
            accumulate(
                &mut out,
                (f.restrict_unchecked(s), f.restrict_unchecked(t)),
                c,
            );
        }
        Ok(out)
    }

    /// The counit: the coefficient of `H_( )`.
    pub fn counit(&self) -> Scalar {
        self.coeff(&Composition::empty())
    }

    pub fn antipode(&self) -> Self {
        let mut out = SigElement::zero(self.ground.clone());
        for (f, c) in &self.terms {
            for g in refinements(&f.opposite()) {
                let sign = Scalar::sign(g.len());
                out.add_term(g, &(c * &sign));
            }
        }
        out
    }

    /// Killed by every `Δ_{S,T}` with `S`, `T` nonempty.
    pub fn is_primitive(&self) -> Result<bool> {
        if self.ground.is_empty() {
            return Err(Error::EmptyGround);
        }
        let n = self.ground.len();
        for mask in 1..(1u64 << n) - 1 {
            let s = self.ground.subset_from_mask(mask);
            let t = self.ground.difference(&s);
            if !self.comult(&s, &t)?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &SigElement) -> Result<Self> {
        self.mult(other)?.sub(&other.mult(self)?)
    }

    /// The Tits action `a ▷ b`, bilinear extension of `H_F ▷ H_G = H_{F▷G}`.
    pub fn tits(&self, other: &SigElement) -> Result<Self> {
        self.check_ground(other)?;
        let mut out = SigElement::zero(self.ground.clone());
        for (f, a) in &self.terms {
            for (g, b) in &other.terms {
                out.add_term(f.tits_unchecked(g), &(a * b));
            }
        }
        Ok(out)
    }

    /// `a ▷ H_G`.
    pub fn hopf_power_action(&self, g: &Composition) -> Result<Self> {
        self.tits(&SigElement::basis(g.clone()))
    }

    /// Pushforward along a bijection whose domain is exactly the ground set.
    pub fn relabel(&self, map: &BTreeMap<Label, Label>) -> Result<Self> {
        let domain: FiniteSet = map.keys().cloned().collect();
        if domain != self.ground {
            return Err(Error::NotBijection(format!(
                "domain {domain} differs from ground {}",
                self.ground
            )));
        }
        let image: FiniteSet = map.values().cloned().collect();
        if image.len() != map.len() {
            return Err(Error::NotBijection("two labels share an image".into()));
        }
        let mut out = SigElement::zero(image);
        for (f, c) in &self.terms {
            out.add_term(f.relabel(map)?, c);
        }
        Ok(out)
    }

    /// Applies a linear map given on basis elements.
    pub fn map_basis(
        &self,
        ground: FiniteSet,
        mut image: impl FnMut(&Composition) -> Result<SigElement>,
    ) -> Result<SigElement> {
        let mut out = SigElement::zero(ground);
        for (f, c) in &self.terms {
            out.axpy(c, &image(f)?)?;
        }
        Ok(out)
    }
}

/// `H̄_F = Σ_{G ≥ F̄} (-1)^{l(G)} H_G`.
pub fn antipode_of(f: &Composition) -> SigElement {
    SigElement::basis(f.clone()).antipode()
}

/// `a ⊗ b` as a pair-indexed map.
pub fn tensor(a: &SigElement, b: &SigElement) -> Coproduct {
    let mut out = Coproduct::new();
    for (f, x) in a.terms() {
        for (g, y) in b.terms() {
            accumulate(&mut out, (f.clone(), g.clone()), &(x * y));
        }
    }
    out
}

impl fmt::Display for SigElement {
    /// `H(12) - 1/2 H(1,2)`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (comp, c)) in self.terms.iter().enumerate() {
            let neg = c.is_real() && c.re() < &num_rational::BigRational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "H{comp}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SigElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.ground)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    comp: Composition,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementRepr {
    ground: FiniteSet,
    terms: Vec<TermRepr>,
}

impl Serialize for SigElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            ground: self.ground.clone(),
            terms: self
                .terms
                .iter()
                .map(|(comp, coeff)| TermRepr {
                    comp: comp.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SigElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(d)?;
        SigElement::from_terms(repr.ground, repr.terms.into_iter().map(|t| (t.comp, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}
