use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{iterated_arrow, Direction};
use crate::error::{Error, Result};
use crate::setcomp::{decompositions, FiniteSet, Label};
use crate::species::SigElement;
use crate::Scalar;
use num_traits::One;

/// `{*1, ..., *r}`
pub fn fresh_set(r: usize) -> FiniteSet {
    (1..=r as u32).map(Label::Fresh).collect()
}

/// A truncated element of `Σ^E[I]`: component `r` lives on `[r] ⊔ I` and is
/// invariant under permutations of the fresh labels `*1..*r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    ground: FiniteSet,
    components: Vec<SigElement>,
}

fn swap_map(ground: &FiniteSet, a: u32, b: u32) -> BTreeMap<Label, Label> {
    ground
        .iter()
        .map(|l| {
            let img = match l {
                Label::Fresh(k) if *k == a => Label::Fresh(b),
                Label::Fresh(k) if *k == b => Label::Fresh(a),
                other => other.clone(),
            };
            (l.clone(), img)
        })
        .collect()
}

fn permutations(r: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for k in 1..=r as u32 {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Average over all permutations of `*1..*r`.
fn symmetrize(x: &SigElement, r: usize) -> Result<SigElement> {
    let perms = permutations(r);
    let weight = Scalar::ratio(1, perms.len() as i64);
    let mut out = SigElement::zero(x.ground().clone());
    for p in &perms {
        let map: BTreeMap<Label, Label> = x
            .ground()
            .iter()
            .map(|l| match l {
                Label::Fresh(k) if (*k as usize) <= r => (l.clone(), Label::Fresh(p[*k as usize - 1])),
                other => (other.clone(), other.clone()),
            })
            .collect();
        out.axpy(&weight, &x.relabel(&map)?)?;
    }
    Ok(out)
}

/// Relabels `*k ↦ targets[k-1]` on a component over `[r] ⊔ I`.
fn place(x: &SigElement, targets: &FiniteSet) -> Result<SigElement> {
    let map: BTreeMap<Label, Label> = x
        .ground()
        .iter()
        .map(|l| match l {
            Label::Fresh(k) if (*k as usize) <= targets.len() => {
                (l.clone(), targets.labels()[*k as usize - 1].clone())
            }
            other => (other.clone(), other.clone()),
        })
        .collect();
    x.relabel(&map)
}

/// Highest component order accepted; symmetrizing order `r` costs `r!`.
pub const MAX_SERIES_ORDER: usize = 6;

impl TruncatedSeries {
    /// Symmetrizes each component; component `r` must have ground
    /// `[r] ⊔ ground`.
    pub fn new(ground: FiniteSet, components: Vec<SigElement>) -> Result<Self> {
        if components.len() > MAX_SERIES_ORDER + 1 {
            return Err(Error::BoundExceeded {
                what: "series order",
                size: components.len() - 1,
                bound: MAX_SERIES_ORDER,
            });
        }
        let mut out = Vec::with_capacity(components.len());
        for (r, x) in components.into_iter().enumerate() {
            let expected = ground.disjoint_union(&fresh_set(r))?;
            if x.ground() != &expected {
                return Err(Error::GroundMismatch {
                    expected,
                    found: x.ground().clone(),
                });
            }
            let sym = symmetrize(&x, r)?;
            debug_assert_eq!(symmetrize(&sym, r)?, sym);
            out.push(sym);
        }
        Ok(TruncatedSeries {
            ground,
            components: out,
        })
    }

    pub fn ground(&self) -> &FiniteSet {
        &self.ground
    }

    /// Highest stored order; `None` for the empty series.
    pub fn r_max(&self) -> Option<usize> {
        self.components.len().checked_sub(1)
    }

    pub fn component(&self, r: usize) -> Option<&SigElement> {
        self.components.get(r)
    }

    pub fn components(&self) -> &[SigElement] {
        &self.components
    }

    /// Invariance under each adjacent transposition `*k ↔ *k+1`.
    pub fn is_symmetric(&self) -> Result<bool> {
        for (r, x) in self.components.iter().enumerate() {
            for k in 1..r as u32 {
                if &x.relabel(&swap_map(x.ground(), k, k + 1))? != x {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The product of `Σ^E`: component `r` is
    /// `Σ_{Y1⊔Y2=[r]} μ(x_{|Y1|}[Y1] ⊗ y_{|Y2|}[Y2])`, truncated at the
    /// shorter of the two series.
    pub fn mult(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let ground = self.ground.disjoint_union(&other.ground)?;
        let len = self.components.len().min(other.components.len());
        let mut comps = Vec::with_capacity(len);
        for r in 0..len {
            let big = ground.disjoint_union(&fresh_set(r))?;
            let mut acc = SigElement::zero(big);
            for (y1, y2) in decompositions(&fresh_set(r)) {
                let left = place(&self.components[y1.len()], &y1)?;
                let right = place(&other.components[y2.len()], &y2)?;
                acc.axpy(&Scalar::one(), &left.mult(&right)?)?;
            }
            comps.push(acc);
        }
        Ok(TruncatedSeries {
            ground,
            components: comps,
        })
    }
}

/// `r ↦ [r]↓a` (or `[r]↑a`) for `r = 0..=r_max`.
pub fn curried_arrow_series(a: &SigElement, r_max: usize, dir: Direction) -> Result<TruncatedSeries> {
    if r_max > MAX_SERIES_ORDER {
        return Err(Error::BoundExceeded {
            what: "series order",
            size: r_max,
            bound: MAX_SERIES_ORDER,
        });
    }
    let comps = (0..=r_max)
        .map(|r| iterated_arrow(a, &fresh_set(r), dir))
        .collect::<Result<Vec<_>>>()?;
    TruncatedSeries::new(a.ground().clone(), comps)
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    #[serde(rename = "R_max")]
    r_max: Option<usize>,
    ground: FiniteSet,
    components: Vec<SigElement>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            r_max: self.r_max(),
            ground: self.ground.clone(),
            components: self.components.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(d)?;
        if repr.r_max != repr.components.len().checked_sub(1) {
            return Err(serde::de::Error::custom("R_max does not match component count"));
        }
        TruncatedSeries::new(repr.ground, repr.components).map_err(serde::de::Error::custom)
    }
}
