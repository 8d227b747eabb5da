use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use super::{accumulate, SigElement};
use crate::error::{Error, Result};
use crate::setcomp::{refinements, Composition, FiniteSet, Label};
use crate::Scalar;

/// A decoration symbol, a basis vector of the decoration space.
pub type Symbol = Arc<str>;

/// A total map from a ground set to decoration symbols.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Assignment(BTreeMap<Label, Symbol>);

impl Assignment {
    pub fn new(map: BTreeMap<Label, Symbol>) -> Self {
        Assignment(map)
    }

    pub fn from_pairs<S: AsRef<str>>(pairs: impl IntoIterator<Item = (Label, S)>) -> Self {
        Assignment(
            pairs
                .into_iter()
                .map(|(l, s)| (l, Symbol::from(s.as_ref())))
                .collect(),
        )
    }

    pub fn ground(&self) -> FiniteSet {
        self.0.keys().cloned().collect()
    }

    pub fn get(&self, l: &Label) -> Option<&Symbol> {
        self.0.get(l)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &Symbol)> {
        self.0.iter()
    }

    pub fn restrict(&self, s: &FiniteSet) -> Assignment {
        Assignment(
            self.0
                .iter()
                .filter(|(l, _)| s.contains(l))
                .map(|(l, v)| (l.clone(), v.clone()))
                .collect(),
        )
    }

    pub fn disjoint_union(&self, other: &Assignment) -> Result<Assignment> {
        self.ground().disjoint_union(&other.ground())?;
        let mut m = self.0.clone();
        m.extend(other.0.iter().map(|(l, v)| (l.clone(), v.clone())));
        Ok(Assignment(m))
    }

    pub fn relabel(&self, map: &BTreeMap<Label, Label>) -> Result<Assignment> {
        let mut out = BTreeMap::new();
        for (l, v) in &self.0 {
            let to = map.get(l).ok_or_else(|| Error::UnknownLabel(l.clone()))?;
            if out.insert(to.clone(), v.clone()).is_some() {
                return Err(Error::NotBijection("two labels share an image".into()));
            }
        }
        Ok(Assignment(out))
    }

    /// Checks that the assignment is total on exactly `ground`.
    pub fn check_total(&self, ground: &FiniteSet) -> Result<()> {
        if &self.ground() != ground {
            return Err(Error::IncompleteAssignment(ground.clone()));
        }
        Ok(())
    }
}

/// Coproduct component of a decorated element.
pub type DecoratedCoproduct =
    BTreeMap<((Composition, Assignment), (Composition, Assignment)), Scalar>;

/// An element of `Σ ⊗ E_V` at `I`: combinations of `H_F ⊗ A_I` with `A_I` a
/// decoration of every label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecoratedSigElement {
    ground: FiniteSet,
    terms: BTreeMap<(Composition, Assignment), Scalar>,
}

impl DecoratedSigElement {
    pub fn zero(ground: FiniteSet) -> Self {
        DecoratedSigElement {
            ground,
            terms: BTreeMap::new(),
        }
    }

    /// `a ⊗ A_I`.
    pub fn from_sig(a: &SigElement, decoration: &Assignment) -> Result<Self> {
        decoration.check_total(a.ground())?;
        let mut out = DecoratedSigElement::zero(a.ground().clone());
        for (f, c) in a.terms() {
            accumulate(&mut out.terms, (f.clone(), decoration.clone()), c);
        }
        Ok(out)
    }

    /// `H_F ⊗ A_I`.
    pub fn basis(f: Composition, decoration: Assignment) -> Result<Self> {
        let mut out = DecoratedSigElement::zero(f.ground());
        decoration.check_total(&out.ground)?;
        out.terms.insert((f, decoration), Scalar::one());
        Ok(out)
    }

    pub fn ground(&self) -> &FiniteSet {
        &self.ground
    }

    pub fn terms(&self) -> &BTreeMap<(Composition, Assignment), Scalar> {
        &self.terms
    }

    pub fn add(&self, other: &DecoratedSigElement) -> Result<Self> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch {
                expected: self.ground.clone(),
                found: other.ground.clone(),
            });
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, k.clone(), c);
        }
        Ok(out)
    }

    pub fn mult(&self, other: &DecoratedSigElement) -> Result<Self> {
        let ground = self.ground.disjoint_union(&other.ground)?;
        let mut out = DecoratedSigElement::zero(ground);
        for ((f, a), x) in &self.terms {
            for ((g, b), y) in &other.terms {
                let fg = f.concat(g)?;
                accumulate(&mut out.terms, (fg, a.disjoint_union(b)?), &(x * y));
            }
        }
        Ok(out)
    }

    pub fn comult(&self, s: &FiniteSet, t: &FiniteSet) -> Result<DecoratedCoproduct> {
        let st = s.disjoint_union(t)?;
        if st != self.ground {
            return Err(Error::GroundMismatch {
                expected: self.ground.clone(),
                found: st,
            });
        }
        let mut out = DecoratedCoproduct::new();
        for ((f, a), c) in &self.terms {
            let left = (f.restrict_unchecked(s), a.restrict(s));
            let right = (f.restrict_unchecked(t), a.restrict(t));
            accumulate(&mut out, (left, right), c);
        }
        Ok(out)
    }

    /// `s(H_F ⊗ A) = H̄_F ⊗ A`: the decoration rides along unchanged.
    pub fn antipode(&self) -> Self {
        let mut out = DecoratedSigElement::zero(self.ground.clone());
        for ((f, a), c) in &self.terms {
            for g in refinements(&f.opposite()) {
                let sign = Scalar::sign(g.len());
                accumulate(&mut out.terms, (g, a.clone()), &(c * &sign));
            }
        }
        out
    }

    /// Splits into `Σ a_k ⊗ A_k` grouped by decoration.
    pub fn by_decoration(&self) -> BTreeMap<Assignment, SigElement> {
        let mut out: BTreeMap<Assignment, SigElement> = BTreeMap::new();
        for ((f, a), c) in &self.terms {
            out.entry(a.clone())
                .or_insert_with(|| SigElement::zero(self.ground.clone()))
                .add_term(f.clone(), c);
        }
        out
    }
}
