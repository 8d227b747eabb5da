use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::exponential::{inverse_t_exponential, t_exponential, Perturbed, Source};
use super::poly::{Coupling, TargetPoly, Trunc, Var};
use super::system::{ProductSystem, ToyModel};
use super::causal::respects;
use crate::arrows::Direction;
use crate::error::{Error, Result};
use crate::setcomp::{Composition, FiniteSet, Label};
use crate::species::{Assignment, Symbol};
use crate::Scalar;

/// A truncated scalar series in `ℏ` (Laurent), `g` and `j`, keyed by
/// `(ℏ, g, j)` exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarSeries {
    trunc: Trunc,
    terms: BTreeMap<(i32, u32, u32), Scalar>,
}

impl ScalarSeries {
    pub fn zero(trunc: Trunc) -> Self {
        ScalarSeries {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: Trunc) -> Self {
        let mut out = ScalarSeries::zero(trunc);
        out.add_term((0, 0, 0), &Scalar::one());
        out
    }

    pub fn trunc(&self) -> Trunc {
        self.trunc
    }

    pub fn terms(&self) -> &BTreeMap<(i32, u32, u32), Scalar> {
        &self.terms
    }

    pub fn coeff(&self, hbar: i32, g: u32, j: u32) -> Scalar {
        self.terms.get(&(hbar, g, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (i32, u32, u32), c: &Scalar) {
        if c.is_zero() || key.1 > self.trunc.g || key.2 > self.trunc.j {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &ScalarSeries) -> ScalarSeries {
        let mut out = ScalarSeries::zero(self.trunc.min(other.trunc));
        for (k, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(*k, c);
        }
        out
    }

    pub fn neg(&self) -> ScalarSeries {
        ScalarSeries {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &ScalarSeries) -> ScalarSeries {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ScalarSeries) -> ScalarSeries {
        let mut out = ScalarSeries::zero(self.trunc.min(other.trunc));
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term((a.0 + b.0, a.1 + b.1, a.2 + b.2), &(x * y));
            }
        }
        out
    }

    /// Geometric-series inverse; the part of degree 0 in `(g, j)` must be
    /// exactly 1.
    pub fn inverse(&self) -> Result<ScalarSeries> {
        let constant: Vec<_> = self.terms.iter().filter(|(k, _)| k.1 == 0 && k.2 == 0).collect();
        if constant.len() != 1 || *constant[0].0 != (0, 0, 0) || !constant[0].1.is_one() {
            return Err(Error::NotInvertible);
        }
        let y = self.sub(&ScalarSeries::one(self.trunc));
        let minus_y = y.neg();
        let mut out = ScalarSeries::one(self.trunc);
        let mut power = ScalarSeries::one(self.trunc);
        for _ in 0..(self.trunc.g + self.trunc.j) {
            power = power.mul(&minus_y);
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out)
    }
}

impl fmt::Display for ScalarSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, ((h, g, j), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} ℏ^{h} g^{g} j^{j}")?;
        }
        Ok(())
    }
}

/// A character of the free algebra: a value per symbol, extended
/// multiplicatively to words. Characters satisfy both vacuum stability
/// equations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character(BTreeMap<String, Scalar>);

impl Character {
    pub fn new(values: impl IntoIterator<Item = (String, Scalar)>) -> Self {
        Character(values.into_iter().collect())
    }

    pub fn set(&mut self, symbol: &str, value: Scalar) {
        self.0.insert(symbol.to_string(), value);
    }

    pub fn value(&self, symbol: &Symbol) -> Result<&Scalar> {
        self.0
            .get(symbol.as_ref())
            .ok_or_else(|| Error::UnknownDecoration(symbol.to_string()))
    }

    /// `⟨p⟩`: apply the character to every word, collecting by exponents.
    pub fn apply(&self, p: &TargetPoly) -> Result<ScalarSeries> {
        let mut out = ScalarSeries::zero(p.trunc());
        for (m, c) in p.terms() {
            let mut v = c.clone();
            for s in &m.word {
                v *= self.value(s)?;
            }
            out.add_term((m.hbar, m.g, m.j), &v);
        }
        Ok(out)
    }
}

/// `⟨O ⋆ 𝒮⟩ = ⟨O⟩⟨𝒮⟩` and `⟨𝒮^{-1} ⋆ O⟩ = ⟨O⟩ / ⟨𝒮⟩`.
pub fn stability_holds(
    chi: &Character,
    o: &TargetPoly,
    s: &TargetPoly,
    s_inv: &TargetPoly,
) -> Result<bool> {
    let (vo, vs) = (chi.apply(o)?, chi.apply(s)?);
    let first = chi.apply(&o.mul(s))? == vo.mul(&vs);
    let second = chi.apply(&s_inv.mul(o))? == vo.mul(&vs.inverse()?);
    Ok(first && second)
}

/// The two sides of the scattering identity: the Green's function
/// `⟨T̃_I(A_I)⟩` and `⟨T_S(A_S) ⋆ 𝒮(gS) ⋆ T_T(A_T)⟩ / ⟨𝒮(gS)⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScatteringSides {
    pub green: ScalarSeries,
    pub amplitude: ScalarSeries,
}

impl ScatteringSides {
    pub fn holds(&self) -> bool {
        self.green == self.amplitude
    }
}

/// `G_I(A_I) = ⟨T̃_I(A_I)⟩` for the retarded perturbation of the toy model.
pub fn green_function(
    model: &ToyModel,
    interaction: &Symbol,
    decorations: &Assignment,
    chi: &Character,
    c: &Coupling,
) -> Result<ScalarSeries> {
    let perturbed = Perturbed {
        base: model,
        interaction: interaction.clone(),
        dir: Direction::Retarded,
        c: c.clone(),
    };
    chi.apply(&perturbed.component(decorations)?)
}

/// Both sides of the scattering identity for outgoing labels `out`
/// (latest) and incoming labels `inc` (earliest); the interaction time
/// must lie strictly between them.
pub fn scattering_sides(
    model: &ToyModel,
    interaction: &Symbol,
    out: &Assignment,
    inc: &Assignment,
    chi: &Character,
    c: &Coupling,
) -> Result<ScatteringSides> {
    let all = out.disjoint_union(inc)?;
    let star = Label::Fresh(1);
    let mut lumps = Vec::new();
    if !out.ground().is_empty() {
        lumps.push(out.ground());
    }
    lumps.push(FiniteSet::singleton(star.clone()));
    if !inc.ground().is_empty() {
        lumps.push(inc.ground());
    }
    let with_star = all.disjoint_union(&Assignment::new(
        [(star, interaction.clone())].into_iter().collect(),
    ))?;
    if !respects(&Composition::new(lumps)?, &with_star, model)? {
        return Err(Error::NotRespecting(
            "interaction time must lie strictly between the outgoing and incoming blocks".into(),
        ));
    }
    let trunc = model.trunc();
    let green = green_function(model, interaction, &all, chi, c)?;
    let block = |a: &Assignment| -> Result<TargetPoly> {
        if a.ground().is_empty() {
            Ok(TargetPoly::one(trunc))
        } else {
            model.component(a)
        }
    };
    let source = [Source {
        symbol: interaction.clone(),
        var: Var::G,
    }];
    let s = t_exponential(model, &source, c)?;
    let middle = block(out)?.mul(&s).mul(&block(inc)?);
    let amplitude = chi.apply(&middle)?.mul(&chi.apply(&s)?.inverse()?);
    Ok(ScatteringSides { green, amplitude })
}

/// `𝒮(gS)` and `𝒮^{-1}(gS)` for the stability equations.
pub fn s_matrix_pair<P: ProductSystem + ?Sized>(
    p: &P,
    interaction: &Symbol,
    c: &Coupling,
) -> Result<(TargetPoly, TargetPoly)> {
    let source = [Source {
        symbol: interaction.clone(),
        var: Var::G,
    }];
    Ok((
        t_exponential(p, &source, c)?,
        inverse_t_exponential(p, &source, c)?,
    ))
}
