use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::setcomp::{decompositions, Composition, FiniteSet, Label};
use crate::species::{antipode_of, SigElement};
use crate::Scalar;

/// Which Steinmann arrow: retarded `↓ = u_{1,0}` or advanced `↑ = u_{0,1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Retarded,
    Advanced,
}

impl Direction {
    fn coefficients(self) -> (Scalar, Scalar) {
        match self {
            Direction::Retarded => (Scalar::one(), Scalar::zero()),
            Direction::Advanced => (Scalar::zero(), Scalar::one()),
        }
    }
}

/// Hands out fresh labels `*1, *2, ...`, skipping any already present in
/// the set being extended.
#[derive(Clone, Debug, Default)]
pub struct FreshLabelPool {
    next: u32,
}

impl FreshLabelPool {
    pub fn new() -> Self {
        FreshLabelPool { next: 0 }
    }

    pub fn fresh(&mut self, avoid: &FiniteSet) -> Label {
        loop {
            self.next += 1;
            let l = Label::Fresh(self.next);
            if !avoid.contains(&l) {
                return l;
            }
        }
    }

    /// `r` distinct fresh labels avoiding `avoid`.
    pub fn take(&mut self, r: usize, avoid: &FiniteSet) -> FiniteSet {
        let mut out = FiniteSet::empty();
        for _ in 0..r {
            let l = self.fresh(&avoid.union(&out));
            out = out.with(l);
        }
        out
    }
}

/// `u_{a,b}`: the up derivation with
/// `u(H_(I)) = -a H_(*,I) + (a+b) H_(*I) - b H_(I,*)`, extended by the
/// Leibniz rule over the lumps of each composition.
pub fn up_derivation(a: &SigElement, star: &Label, ca: &Scalar, cb: &Scalar) -> Result<SigElement> {
    if a.ground().contains(star) {
        return Err(Error::LabelCollision(star.clone()));
    }
    let ground = a.ground().with(star.clone());
    let single = FiniteSet::singleton(star.clone());
    let (before, merged, after) = (-ca, ca + cb, -cb);
    let mut out = SigElement::zero(ground);
    for (f, c) in a.terms() {
        for m in 0..f.len() {
            let lumps = f.lumps();
            let build = |mid: Vec<FiniteSet>| {
                let mut v = lumps[..m].to_vec();
                v.extend(mid);
                v.extend(lumps[m + 1..].iter().cloned());
                Composition::from_lumps_unchecked(v)
            };
            let lump = lumps[m].clone();
            if !before.is_zero() {
                out.add_term(build(vec![single.clone(), lump.clone()]), &(c * &before));
            }
            if !merged.is_zero() {
                out.add_term(build(vec![lump.with(star.clone())]), &(c * &merged));
            }
            if !after.is_zero() {
                out.add_term(build(vec![lump, single.clone()]), &(c * &after));
            }
        }
    }
    Ok(out)
}

/// `*↓a` or `*↑a`.
pub fn arrow(a: &SigElement, star: &Label, dir: Direction) -> Result<SigElement> {
    let (ca, cb) = dir.coefficients();
    up_derivation(a, star, &ca, &cb)
}

/// `Y↓a`, applying the single arrows in the given label order.
pub fn iterated_arrow_in_order(a: &SigElement, order: &[Label], dir: Direction) -> Result<SigElement> {
    let mut cur = a.clone();
    for y in order {
        cur = arrow(&cur, y, dir)?;
    }
    Ok(cur)
}

/// `Y↓a` (or `Y↑a`), composing single arrows in canonical label order.
pub fn iterated_arrow(a: &SigElement, y: &FiniteSet, dir: Direction) -> Result<SigElement> {
    if !a.ground().is_disjoint(y) {
        return Err(Error::NotDisjoint {
            left: a.ground().clone(),
            right: y.clone(),
        });
    }
    iterated_arrow_in_order(a, y.labels(), dir)
}

/// `R_(Y;I) = Σ_{Y1⊔Y2=Y} H̄_(Y1) H_(Y2⊔I)`.
pub fn retarded_element(y: &FiniteSet, i: &FiniteSet) -> Result<SigElement> {
    closed_form(y, i, Direction::Retarded)
}

/// `A_(Y;I) = Σ_{Y1⊔Y2=Y} H_(Y1⊔I) H̄_(Y2)`.
pub fn advanced_element(y: &FiniteSet, i: &FiniteSet) -> Result<SigElement> {
    closed_form(y, i, Direction::Advanced)
}

fn closed_form(y: &FiniteSet, i: &FiniteSet, dir: Direction) -> Result<SigElement> {
    let ground = y.disjoint_union(i)?;
    let mut out = SigElement::zero(ground);
    for (y1, y2) in decompositions(y) {
        let term = match dir {
            Direction::Retarded => antipode_of(&Composition::stick(y1))
                .mult(&SigElement::stick(y2.union(i)))?,
            Direction::Advanced => SigElement::stick(y1.union(i))
                .mult(&antipode_of(&Composition::stick(y2)))?,
        };
        out.axpy(&Scalar::one(), &term)?;
    }
    Ok(out)
}
