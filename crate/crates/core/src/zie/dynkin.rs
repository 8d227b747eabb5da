use std::collections::BTreeMap;

use num_traits::One;

use super::Cell;
use crate::error::{Error, Result};
use crate::linalg::{rank, SparseRow, Q};
use crate::setcomp::{Composition, FiniteSet};
use crate::species::SigElement;
use crate::Scalar;

/// A primitive element of `Σ[I]`, certified at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZieElement(SigElement);

impl ZieElement {
    pub fn new(a: SigElement) -> Result<Self> {
        if !a.is_primitive()? {
            return Err(Error::NotPrimitive);
        }
        Ok(ZieElement(a))
    }

    pub(crate) fn new_unchecked(a: SigElement) -> Self {
        debug_assert!(a.is_primitive().unwrap_or(false));
        ZieElement(a)
    }

    pub fn as_sig(&self) -> &SigElement {
        &self.0
    }

    pub fn into_sig(self) -> SigElement {
        self.0
    }

    /// The commutator, which stays primitive.
    pub fn bracket(&self, other: &ZieElement) -> Result<ZieElement> {
        Ok(ZieElement(self.0.commutator(&other.0)?))
    }
}

/// `D_S = -Σ_{F̄ ⊆ S} (-1)^{l(F)} H_F`.
///
/// `F̄ ⊆ S` means every two-lump coarsening of `F̄` is a chosen channel, i.e.
/// every proper suffix union of the lumps of `F` is a chosen first lump. The
/// compositions are generated back to front, pruning on that test.
pub fn dynkin_element(cell: &Cell) -> ZieElement {
    let ground = cell.ground().clone();
    let n = ground.len();
    let full = (1u64 << n) - 1;
    let mut out = SigElement::zero(ground.clone());
    let mut stack: Vec<u64> = Vec::new();

    fn walk(
        cell: &Cell,
        full: u64,
        used: u64,
        stack: &mut Vec<u64>,
        emit: &mut dyn FnMut(&[u64]),
    ) {
        if used == full {
            emit(stack);
            return;
        }
        let free = full & !used;
        // nonempty submasks of the free labels
        let mut lump = free;
        while lump != 0 {
            let next = used | lump;
            if next == full || cell.contains_mask(next) {
                stack.push(lump);
                walk(cell, full, next, stack, emit);
                stack.pop();
            }
            lump = (lump - 1) & free;
        }
    }

    let mut emit = |rev: &[u64]| {
        let lumps = rev
            .iter()
            .rev()
            .map(|m| ground.subset_from_mask(*m))
            .collect();
        let f = Composition::from_lumps_unchecked(lumps);
        let c = -Scalar::sign(f.len());
        out.add_term(f, &c);
    };
    walk(cell, full, 0, &mut stack, &mut emit);
    ZieElement::new_unchecked(out)
}

/// `D_i`, the Dynkin element of the total retarded cell.
pub fn total_retarded(ground: &FiniteSet, i: &crate::Label) -> Result<ZieElement> {
    Ok(dynkin_element(&Cell::total_retarded(ground, i)?))
}

/// `D_ī`, the Dynkin element of the total advanced cell.
pub fn total_advanced(ground: &FiniteSet, i: &crate::Label) -> Result<ZieElement> {
    Ok(dynkin_element(&Cell::total_advanced(ground, i)?))
}

/// Exact rank of a family of elements of one `Σ[I]`, over the Gaussian
/// rationals (complex entries are realified, doubling the rank).
pub fn rank_of(elements: &[SigElement]) -> usize {
    let mut index: BTreeMap<&Composition, usize> = BTreeMap::new();
    for e in elements {
        for f in e.terms().keys() {
            let k = index.len();
            index.entry(f).or_insert(k);
        }
    }
    let m = index.len();
    let complex = elements
        .iter()
        .any(|e| e.terms().values().any(|c| !c.is_real()));
    let mut rows: Vec<SparseRow> = Vec::new();
    for e in elements {
        let mut re_row = SparseRow::new();
        let mut im_row = SparseRow::new();
        for (f, c) in e.terms() {
            let k = index[f];
            let (re, im) = (Q::from_big(c.re().clone()), Q::from_big(c.im().clone()));
            if complex {
                // realification: [re, -im; im, re]
                insert(&mut re_row, k, re.clone());
                insert(&mut re_row, m + k, -&im);
                insert(&mut im_row, k, im);
                insert(&mut im_row, m + k, re);
            } else {
                insert(&mut re_row, k, re);
            }
        }
        rows.push(re_row);
        if complex {
            rows.push(im_row);
        }
    }
    let r = rank(rows);
    if complex {
        r / 2
    } else {
        r
    }
}

fn insert(row: &mut SparseRow, k: usize, v: Q) {
    if !v.is_zero() {
        row.insert(k, v);
    }
}

/// Stirling numbers of the second kind `S(n,k)`.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut s = vec![vec![0u128; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for j in 1..=i {
            s[i][j] = j as u128 * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    if k > n {
        0
    } else {
        s[n][k]
    }
}

/// `Σ_k S(n,k)(k-1)!`, the dimension of the primitive part of `Σ[n]`.
pub fn zie_dimension(n: usize) -> u128 {
    (1..=n)
        .map(|k| stirling2(n, k) * (1..k as u128).product::<u128>())
        .sum()
}

/// Exact rank of the span of all Dynkin elements over `cells`.
pub fn dynkin_rank(cells: &[Cell]) -> usize {
    let elements: Vec<SigElement> = cells.iter().map(|c| dynkin_element(c).into_sig()).collect();
    rank_of(&elements)
}

impl From<ZieElement> for SigElement {
    fn from(z: ZieElement) -> SigElement {
        z.0
    }
}

/// `Q_(I)` as a Zie element.
pub fn stick_q(ground: &FiniteSet) -> Result<ZieElement> {
    if ground.is_empty() {
        return Err(Error::EmptyGround);
    }
    let mut q = SigElement::zero(ground.clone());
    q.add_term(Composition::stick(ground.clone()), &Scalar::one());
    Ok(ZieElement::new_unchecked(q.from_q_coords()))
}
