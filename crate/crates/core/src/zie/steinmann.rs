use std::collections::{BTreeMap, BTreeSet};

use super::{dynkin_element, Cell};
use crate::linalg::{rank, SparseRow, Q};
use crate::setcomp::FiniteSet;
use crate::species::SigElement;

/// Four cells `S1..S4` differing only on an overlapping channel pair
/// `(S,T), (U,V)`: `S2` reverses `(S,T)`, `S3` reverses both, `S4` reverses
/// `(U,V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadruple {
    pub cells: [Cell; 4],
    pub first: (FiniteSet, FiniteSet),
    pub second: (FiniteSet, FiniteSet),
}

impl Quadruple {
    /// `D_{S1} - D_{S2} + D_{S3} - D_{S4}`.
    pub fn alternating_sum(&self) -> SigElement {
        let [a, b, c, d] = &self.cells;
        let mut out = dynkin_element(a).into_sig();
        out.axpy(&-crate::Scalar::from_int(1), dynkin_element(b).as_sig())
            .and_then(|_| out.axpy(&crate::Scalar::from_int(1), dynkin_element(c).as_sig()))
            .and_then(|_| out.axpy(&-crate::Scalar::from_int(1), dynkin_element(d).as_sig()))
            .expect("cells share a ground set");
        out
    }
}

/// `(S,T), (U,V)` overlap when `S∩U` and `T∩U` are both nonempty.
pub fn overlapping(s: &FiniteSet, t: &FiniteSet, u: &FiniteSet) -> bool {
    !s.is_disjoint(u) && !t.is_disjoint(u)
}

/// Every Steinmann quadruple among `cells`, which should be the complete
/// list of cells over one ground set. Quadruples are reported once per
/// unordered set of four cells.
pub fn steinmann_quadruples(cells: &[Cell]) -> Vec<Quadruple> {
    let Some(first) = cells.first() else {
        return Vec::new();
    };
    let ground = first.ground().clone();
    let n = ground.len();
    if n < 2 {
        return Vec::new();
    }
    let full = (1u64 << n) - 1;
    let by_orient: BTreeMap<u128, &Cell> = cells.iter().map(|c| (c.orientation(), c)).collect();
    let rep_bit = |m: u64| -> u128 {
        let rep = if m >> (n - 1) & 1 == 1 { full ^ m } else { m };
        1u128 << rep
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for c1 in cells {
        let chosen: Vec<u64> = (1..full).filter(|&m| c1.contains_mask(m)).collect();
        for &s in &chosen {
            for &u in &chosen {
                let t = full ^ s;
                if s & u == 0 || t & u == 0 {
                    continue;
                }
                let o1 = c1.orientation();
                let o2 = o1 ^ rep_bit(s);
                let o3 = o2 ^ rep_bit(u);
                let o4 = o1 ^ rep_bit(u);
                let (Some(c2), Some(c3), Some(c4)) =
                    (by_orient.get(&o2), by_orient.get(&o3), by_orient.get(&o4))
                else {
                    continue;
                };
                let mut key = [o1, o2, o3, o4];
                key.sort();
                if !seen.insert(key) {
                    continue;
                }
                let side = |m: u64| ground.subset_from_mask(m);
                out.push(Quadruple {
                    cells: [c1.clone(), (*c2).clone(), (*c3).clone(), (*c4).clone()],
                    first: (side(s), side(t)),
                    second: (side(u), side(full ^ u)),
                });
            }
        }
    }
    out
}

/// Rank of the Steinmann relations as vectors in the formal span of `cells`.
pub fn relation_rank(cells: &[Cell], quadruples: &[Quadruple]) -> usize {
    let index: BTreeMap<u128, usize> = cells
        .iter()
        .enumerate()
        .map(|(k, c)| (c.orientation(), k))
        .collect();
    let rows = quadruples.iter().map(|q| {
        let mut row = SparseRow::new();
        for (c, sign) in q.cells.iter().zip([1, -1, 1, -1]) {
            row.insert(index[&c.orientation()], Q::int(sign));
        }
        row
    });
    rank(rows)
}
