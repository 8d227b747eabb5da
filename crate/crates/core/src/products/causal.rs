use super::system::{evaluate, ToyModel};
use crate::error::Result;
use crate::setcomp::{compositions, Composition};
use crate::species::{Assignment, SigElement};

/// Does the configuration respect `G`? Every label in an earlier lump must
/// be strictly later in time than every label in a later lump.
pub fn respects(g: &Composition, decorations: &Assignment, model: &ToyModel) -> Result<bool> {
    decorations.check_total(&g.ground())?;
    let mut bounds = Vec::with_capacity(g.len());
    for lump in g.lumps() {
        let mut lo = None;
        let mut hi = None;
        for l in lump.iter() {
            let t = model.registry.time(decorations.get(l).expect("total"))?;
            if lo.is_none_or(|v| t < v) {
                lo = Some(t);
            }
            if hi.is_none_or(|v| t > v) {
                hi = Some(t);
            }
        }
        bounds.push((lo.expect("nonempty lump"), hi.expect("nonempty lump")));
    }
    // earlier lumps must lie strictly after every later one
    for a in 0..bounds.len() {
        for b in a + 1..bounds.len() {
            if bounds[a].0 <= bounds[b].1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks `T(H_F ⊗ A_I) = T(H_F ▷ H_G ⊗ A_I)` for every composition `G`
/// respected by the configuration and every `F`; the case `G = (S,T)` is
/// causal factorization itself.
pub fn verify_causal_factorization(model: &ToyModel, decorations: &Assignment) -> Result<bool> {
    let ground = decorations.ground();
    let all: Vec<Composition> = compositions(&ground)?.collect();
    for g in &all {
        if !respects(g, decorations, model)? {
            continue;
        }
        for f in &all {
            let lhs = evaluate(model, &SigElement::basis(f.clone()), decorations)?;
            let rhs = evaluate(model, &SigElement::basis(f.tits(g)?), decorations)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Elements `H_F - H_F'` with `F ▷ G = F' ▷ G`, which the Tits action by `G`
/// kills.
pub fn tits_kernel_elements(g: &Composition) -> Result<Vec<SigElement>> {
    let all: Vec<Composition> = compositions(&g.ground())?.collect();
    let mut by_image: std::collections::BTreeMap<Composition, Vec<&Composition>> =
        std::collections::BTreeMap::new();
    for f in &all {
        by_image.entry(f.tits(g)?).or_default().push(f);
    }
    let mut out = Vec::new();
    for fs in by_image.values() {
        for f in &fs[1..] {
            let a = SigElement::basis(fs[0].clone()).sub(&SigElement::basis((*f).clone()))?;
            out.push(a);
        }
    }
    Ok(out)
}
