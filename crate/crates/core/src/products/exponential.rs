use super::poly::{Coupling, TargetPoly, Trunc, Var};
use super::system::{
    a_product, constant_assignment, evaluate, one_over_factorial, r_product, ProductSystem,
};
use crate::arrows::{advanced_element, fresh_set, retarded_element, Direction, FreshLabelPool};
use crate::error::Result;
use crate::setcomp::{Composition, FiniteSet, Label};
use crate::species::{antipode_of, Assignment, SigElement, Symbol};

/// One summand `v·X` of the argument of an exponential: the symbol `X`
/// weighted by the formal variable `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Source {
    pub symbol: Symbol,
    pub var: Var,
}

impl Source {
    pub fn new(symbol: &str, var: Var) -> Self {
        Source {
            symbol: Symbol::from(symbol),
            var,
        }
    }
}

/// Every map `[n] → sources`, as assignments with their `(g, j)` powers.
fn decorations_of(ground: &FiniteSet, sources: &[Source]) -> Vec<(Assignment, (u32, u32))> {
    let n = ground.len();
    let k = sources.len();
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push((Assignment::default(), (0, 0)));
        }
        return out;
    }
    let mut digits = vec![0usize; n];
    loop {
        let mut powers = (0, 0);
        let mut map = std::collections::BTreeMap::new();
        for (l, &d) in ground.iter().zip(&digits) {
            match sources[d].var {
                Var::G => powers.0 += 1,
                Var::J => powers.1 += 1,
            }
            map.insert(l.clone(), sources[d].symbol.clone());
        }
        out.push((Assignment::new(map), powers));
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            digits[pos] += 1;
            if digits[pos] < k {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

fn exponential_with<P: ProductSystem + ?Sized>(
    p: &P,
    sources: &[Source],
    c: &Coupling,
    element: impl Fn(&FiniteSet) -> SigElement,
) -> Result<TargetPoly> {
    let trunc = p.trunc();
    let mut out = TargetPoly::zero(trunc);
    let uses = |v: Var| sources.iter().any(|s| s.var == v);
    let max_n = if uses(Var::G) { trunc.g } else { 0 } + if uses(Var::J) { trunc.j } else { 0 };
    for n in 0..=max_n as usize {
        let ground = fresh_set(n);
        let base = element(&ground);
        let weight = one_over_factorial(n);
        for (dec, powers) in decorations_of(&ground, sources) {
            if powers.0 > trunc.g || powers.1 > trunc.j {
                continue;
            }
            let value = if n == 0 {
                TargetPoly::one(trunc).scale(&base.counit())
            } else {
                evaluate(p, &base, &dec)?
            };
            let factor = TargetPoly::scale_factor(trunc, &c.pow(n as u32), powers);
            out.axpy(&weight, &factor.mul(&value));
        }
    }
    Ok(out)
}

/// `𝒮(Σ v X) = Σ_n c^n/n! T_n((Σ v X)^n)`, expanded over every way of
/// decorating `n` fresh labels by the sources.
pub fn t_exponential<P: ProductSystem + ?Sized>(
    p: &P,
    sources: &[Source],
    c: &Coupling,
) -> Result<TargetPoly> {
    exponential_with(p, sources, c, |g| SigElement::stick(g.clone()))
}

/// `𝒮^{-1}(Σ v X) = Σ_n c^n/n! T̄_n((Σ v X)^n)`, using reverse products.
pub fn inverse_t_exponential<P: ProductSystem + ?Sized>(
    p: &P,
    sources: &[Source],
    c: &Coupling,
) -> Result<TargetPoly> {
    exponential_with(p, sources, c, |g| antipode_of(&Composition::stick(g.clone())))
}

/// The system perturbed by the retarded (or advanced) Steinmann arrow:
/// `T̃_I(A_I) = Σ_r (c g)^r / r! · R_{r;I}(S^r; A_I)` up to the base
/// system's `g` order.
#[derive(Clone, Debug)]
pub struct Perturbed<P> {
    pub base: P,
    pub interaction: Symbol,
    pub dir: Direction,
    pub c: Coupling,
}

impl<P: ProductSystem> Perturbed<P> {
    pub fn new(base: P, interaction: &str, dir: Direction, c: Coupling) -> Self {
        Perturbed {
            base,
            interaction: Symbol::from(interaction),
            dir,
            c,
        }
    }

    /// Fresh labels `Y` avoiding `ground`, decorated by the interaction.
    fn interaction_labels(&self, r: usize, ground: &FiniteSet) -> Assignment {
        let y = FreshLabelPool::new().take(r, ground);
        constant_assignment(&y, &self.interaction)
    }

    /// `T̃(a ⊗ A_I)` computed directly as `Σ_r (cg)^r/r! T([r]↓a ⊗ S^r A_I)`,
    /// without going through the components.
    pub fn evaluate_via_arrows(&self, a: &SigElement, decorations: &Assignment) -> Result<TargetPoly> {
        let trunc = self.base.trunc();
        let mut out = TargetPoly::zero(trunc);
        for r in 0..=trunc.g as usize {
            let ys = self.interaction_labels(r, a.ground());
            let moved = crate::arrows::iterated_arrow(a, &ys.ground(), self.dir)?;
            let v = evaluate(&self.base, &moved, &ys.disjoint_union(decorations)?)?;
            let factor = TargetPoly::scale_factor(trunc, &self.c.pow(r as u32), (r as u32, 0));
            out.axpy(&one_over_factorial(r), &factor.mul(&v));
        }
        Ok(out)
    }
}

impl<P: ProductSystem> ProductSystem for Perturbed<P> {
    fn trunc(&self) -> Trunc {
        self.base.trunc()
    }

    fn component(&self, decorations: &Assignment) -> Result<TargetPoly> {
        let trunc = self.base.trunc();
        let ground = decorations.ground();
        let mut out = TargetPoly::zero(trunc);
        for r in 0..=trunc.g as usize {
            let ys = self.interaction_labels(r, &ground);
            let v = match self.dir {
                Direction::Retarded => r_product(&self.base, &ys, decorations)?,
                Direction::Advanced => a_product(&self.base, &ys, decorations)?,
            };
            let factor = TargetPoly::scale_factor(trunc, &self.c.pow(r as u32), (r as u32, 0));
            out.axpy(&one_over_factorial(r), &factor.mul(&v));
        }
        Ok(out)
    }
}

/// `𝒱_{gS}(jA)` (retarded) or `𝒲_{gS}(jA)` (advanced) as the double sum
/// `Σ_{n,r} g^r j^n c^{r+n} / (r! n!) · R_{r;n}(S^r; A^n)`.
pub fn generating_function<P: ProductSystem + ?Sized>(
    p: &P,
    interaction: &Symbol,
    observable: &Symbol,
    c: &Coupling,
    dir: Direction,
) -> Result<TargetPoly> {
    let trunc = p.trunc();
    let mut out = TargetPoly::zero(trunc);
    for n in 0..=trunc.j as usize {
        let i: FiniteSet = (1..=n as u32).map(Label::Int).collect();
        let a = constant_assignment(&i, observable);
        for r in 0..=trunc.g as usize {
            let y = fresh_set(r);
            let s = constant_assignment(&y, interaction);
            let elem = match dir {
                Direction::Retarded => retarded_element(&y, &i)?,
                Direction::Advanced => advanced_element(&y, &i)?,
            };
            let v = if r + n == 0 {
                TargetPoly::one(trunc)
            } else {
                evaluate(p, &elem, &s.disjoint_union(&a)?)?
            };
            let factor = TargetPoly::scale_factor(trunc, &c.pow((r + n) as u32), (r as u32, n as u32));
            let weight = one_over_factorial(r) * one_over_factorial(n);
            out.axpy(&weight, &factor.mul(&v));
        }
    }
    Ok(out)
}

/// `𝒮^{-1}(gS) ⋆ 𝒮(gS + jA)` (retarded) or `𝒮(gS + jA) ⋆ 𝒮^{-1}(gS)`.
pub fn generating_function_product<P: ProductSystem + ?Sized>(
    p: &P,
    interaction: &Symbol,
    observable: &Symbol,
    c: &Coupling,
    dir: Direction,
) -> Result<TargetPoly> {
    let s = Source {
        symbol: interaction.clone(),
        var: Var::G,
    };
    let a = Source {
        symbol: observable.clone(),
        var: Var::J,
    };
    let inv = inverse_t_exponential(p, std::slice::from_ref(&s), c)?;
    let full = t_exponential(p, &[s, a], c)?;
    Ok(match dir {
        Direction::Retarded => inv.mul(&full),
        Direction::Advanced => full.mul(&inv),
    })
}

/// Bogoliubov's formula: `(1/c) d/dj|_{j=0}` of a generating function.
pub fn bogoliubov_extract(v: &TargetPoly, c: &Coupling) -> Result<TargetPoly> {
    Ok(v.d_dj_at_zero()?.times_coupling(&c.inv()?))
}

/// `T̃_i(A)` on a single label.
pub fn interacting_observable<P: ProductSystem>(
    perturbed: &Perturbed<P>,
    observable: &Symbol,
) -> Result<TargetPoly> {
    let dec = Assignment::new([(Label::Int(1), observable.clone())].into_iter().collect());
    perturbed.component(&dec)
}
