use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::One;

use super::poly::{TargetPoly, Trunc};
use crate::arrows::{advanced_element, retarded_element};
use crate::error::{Error, Result};
use crate::setcomp::{FiniteSet, Label};
use crate::species::{Assignment, DecoratedSigElement, SigElement, Symbol};
use crate::zie::ZieElement;
use crate::Scalar;

/// Decoration symbols with the time coordinate used by the toy causal
/// model.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Registry {
    times: BTreeMap<Symbol, BigRational>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    /// Errors on a repeated symbol.
    pub fn insert(&mut self, symbol: &str, time: BigRational) -> Result<()> {
        if symbol.is_empty() {
            return Err(Error::Parse("empty decoration symbol".into()));
        }
        if self.times.insert(Symbol::from(symbol), time).is_some() {
            return Err(Error::Parse(format!("decoration {symbol} registered twice")));
        }
        Ok(())
    }

    pub fn with(mut self, symbol: &str, time: BigRational) -> Result<Self> {
        self.insert(symbol, time)?;
        Ok(self)
    }

    pub fn time(&self, symbol: &Symbol) -> Result<&BigRational> {
        self.times
            .get(symbol)
            .ok_or_else(|| Error::UnknownDecoration(symbol.to_string()))
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.times.keys()
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// A system of T-products: `T_I(A_I)` for every nonempty decorated set.
///
/// Implementations must be species morphisms: relabeling the decorated
/// labels leaves the output unchanged.
pub trait ProductSystem {
    fn trunc(&self) -> Trunc;

    /// `T_I(A_I)`; the ground set is that of the assignment and is nonempty.
    fn component(&self, decorations: &Assignment) -> Result<TargetPoly>;
}

impl<P: ProductSystem + ?Sized> ProductSystem for &P {
    fn trunc(&self) -> Trunc {
        (**self).trunc()
    }
    fn component(&self, decorations: &Assignment) -> Result<TargetPoly> {
        (**self).component(decorations)
    }
}

/// The free system: singletons give their symbol, larger sets a single
/// letter `[A B C]` naming the sorted multiset of symbols. No identity
/// beyond commutativity holds between its components.
#[derive(Clone, Copy, Debug)]
pub struct FreeSystem {
    pub trunc: Trunc,
}

impl ProductSystem for FreeSystem {
    fn trunc(&self) -> Trunc {
        self.trunc
    }

    fn component(&self, decorations: &Assignment) -> Result<TargetPoly> {
        let mut symbols: Vec<&Symbol> = decorations.iter().map(|(_, s)| s).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyGround);
        }
        symbols.sort();
        let letter = if symbols.len() == 1 {
            symbols[0].clone()
        } else {
            let names: Vec<&str> = symbols.iter().map(|s| s.as_ref()).collect();
            Symbol::from(format!("[{}]", names.join(" ")))
        };
        Ok(TargetPoly::word(self.trunc, vec![letter]))
    }
}

/// The toy causal model: symbols ordered by decreasing time, multiplied in
/// the free algebra.
#[derive(Clone, Debug)]
pub struct ToyModel {
    pub registry: Registry,
    pub trunc: Trunc,
}

impl ToyModel {
    pub fn new(registry: Registry, trunc: Trunc) -> Self {
        ToyModel { registry, trunc }
    }

    /// Labels sorted latest first. Equal times fall back to symbol, then
    /// label; the flag reports whether any tie occurred.
    pub fn time_order(&self, decorations: &Assignment) -> Result<(Vec<Label>, bool)> {
        let mut keyed = Vec::new();
        for (l, s) in decorations.iter() {
            keyed.push((self.registry.time(s)?, s, l));
        }
        keyed.sort_by(|a, b| b.0.cmp(a.0).then_with(|| a.1.cmp(b.1)).then_with(|| a.2.cmp(b.2)));
        let ties = keyed.windows(2).any(|w| w[0].0 == w[1].0);
        Ok((keyed.into_iter().map(|(_, _, l)| l.clone()).collect(), ties))
    }

    pub fn has_ties(&self, decorations: &Assignment) -> Result<bool> {
        Ok(self.time_order(decorations)?.1)
    }
}

impl ProductSystem for ToyModel {
    fn trunc(&self) -> Trunc {
        self.trunc
    }

    fn component(&self, decorations: &Assignment) -> Result<TargetPoly> {
        let (order, _) = self.time_order(decorations)?;
        if order.is_empty() {
            return Err(Error::EmptyGround);
        }
        let word = order
            .iter()
            .map(|l| decorations.get(l).expect("label from assignment").clone())
            .collect();
        Ok(TargetPoly::word(self.trunc, word))
    }
}

/// Generalized T-products: `T(H_F ⊗ A_I) = T_{S1}(A_{S1}) ⋆ ... ⋆ T_{Sk}(A_{Sk})`,
/// extended linearly.
pub fn evaluate<P: ProductSystem + ?Sized>(
    p: &P,
    a: &SigElement,
    decorations: &Assignment,
) -> Result<TargetPoly> {
    decorations.check_total(a.ground())?;
    let trunc = p.trunc();
    let mut cache: HashMap<FiniteSet, TargetPoly> = HashMap::new();
    let mut out = TargetPoly::zero(trunc);
    for (f, c) in a.terms() {
        let mut acc = TargetPoly::one(trunc);
        for lump in f.lumps() {
            if !cache.contains_key(lump) {
                let v = p.component(&decorations.restrict(lump))?;
                cache.insert(lump.clone(), v);
            }
            acc = acc.mul(&cache[lump]);
        }
        out.axpy(c, &acc);
    }
    Ok(out)
}

/// Linear extension over decorated terms.
pub fn evaluate_decorated<P: ProductSystem + ?Sized>(
    p: &P,
    x: &DecoratedSigElement,
) -> Result<TargetPoly> {
    let mut out = TargetPoly::zero(p.trunc());
    for ((f, dec), c) in x.terms() {
        let v = evaluate(p, &SigElement::basis(f.clone()), dec)?;
        out.axpy(c, &v);
    }
    Ok(out)
}

/// Reverse generalized T-products `T̄(a ⊗ A_I) = T(s(a) ⊗ A_I)`.
pub fn reverse<P: ProductSystem + ?Sized>(
    p: &P,
    a: &SigElement,
    decorations: &Assignment,
) -> Result<TargetPoly> {
    evaluate(p, &a.antipode(), decorations)
}

/// Generalized R-products: the restriction to primitive elements.
pub fn generalized_r<P: ProductSystem + ?Sized>(
    p: &P,
    z: &ZieElement,
    decorations: &Assignment,
) -> Result<TargetPoly> {
    evaluate(p, z.as_sig(), decorations)
}

/// `R_{Y;I}(S_Y; A_I) = T(R_(Y;I) ⊗ S_Y A_I)`.
pub fn r_product<P: ProductSystem + ?Sized>(
    p: &P,
    y: &Assignment,
    i: &Assignment,
) -> Result<TargetPoly> {
    let r = retarded_element(&y.ground(), &i.ground())?;
    evaluate(p, &r, &y.disjoint_union(i)?)
}

/// `A_{Y;I}(S_Y; A_I) = T(A_(Y;I) ⊗ S_Y A_I)`.
pub fn a_product<P: ProductSystem + ?Sized>(
    p: &P,
    y: &Assignment,
    i: &Assignment,
) -> Result<TargetPoly> {
    let a = advanced_element(&y.ground(), &i.ground())?;
    evaluate(p, &a, &y.disjoint_union(i)?)
}

/// `A_I` with every label of `ground` decorated by `symbol`.
pub fn constant_assignment(ground: &FiniteSet, symbol: &Symbol) -> Assignment {
    Assignment::new(ground.iter().map(|l| (l.clone(), symbol.clone())).collect())
}

pub(crate) fn one_over_factorial(n: usize) -> Scalar {
    Scalar::one() / Scalar::factorial(n)
}
