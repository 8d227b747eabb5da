use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::poly::{TargetPoly, Trunc};
use super::system::ProductSystem;
use crate::error::{Error, Result};
use crate::setcomp::{FiniteSet, Label};
use crate::species::{Assignment, Symbol};
use crate::Scalar;

/// A formal linear combination of decoration symbols.
pub type Combination = BTreeMap<Symbol, Scalar>;

/// Largest block size for which a composed vertex map is tabulated.
pub const DEFAULT_VERTEX_BLOCK_BOUND: usize = 4;

/// All set partitions of `ground`, blocks in order of their least label.
pub fn set_partitions(ground: &FiniteSet) -> Vec<Vec<FiniteSet>> {
    let mut out: Vec<Vec<FiniteSet>> = vec![Vec::new()];
    for l in ground.labels().iter().rev() {
        let mut next = Vec::new();
        for p in &out {
            let mut alone = vec![FiniteSet::singleton(l.clone())];
            alone.extend(p.iter().cloned());
            next.push(alone);
            for k in 0..p.len() {
                let mut q = p.clone();
                q[k] = q[k].with(l.clone());
                next.push(q);
            }
        }
        out = next;
    }
    for p in &mut out {
        p.sort();
    }
    out
}

/// `Z_S(A_S)` for every block: an invertible map on single decorations and
/// symmetric multilinear vertex maps on blocks of size at least 2. Absent
/// singles act as the identity, absent blocks as zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexMap {
    singles: BTreeMap<Symbol, Combination>,
    multi: BTreeMap<Vec<Symbol>, Combination>,
}

fn clean(c: Combination) -> Combination {
    c.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl VertexMap {
    pub fn identity() -> Self {
        VertexMap::default()
    }

    /// Multi-keys are sorted multisets of at least two symbols; the map on
    /// single decorations must be invertible.
    pub fn new(
        singles: BTreeMap<Symbol, Combination>,
        multi: impl IntoIterator<Item = (Vec<Symbol>, Combination)>,
    ) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (mut key, value) in multi {
            if key.len() < 2 {
                return Err(Error::MalformedVertexMap(format!(
                    "block keys need at least two symbols, got {}",
                    key.len()
                )));
            }
            key.sort();
            if table.insert(key.clone(), clean(value)).is_some() {
                return Err(Error::MalformedVertexMap(format!("block {key:?} given twice")));
            }
        }
        let z = VertexMap {
            singles: singles.into_iter().map(|(k, v)| (k, clean(v))).collect(),
            multi: table,
        };
        if !z.singles_invertible() {
            return Err(Error::MalformedVertexMap(
                "map on single decorations is not invertible".into(),
            ));
        }
        Ok(z)
    }

    /// Every symbol mentioned as a key or in a value.
    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        for (k, v) in &self.singles {
            out.insert(k.clone());
            out.extend(v.keys().cloned());
        }
        for (k, v) in &self.multi {
            out.extend(k.iter().cloned());
            out.extend(v.keys().cloned());
        }
        out
    }

    fn singles_invertible(&self) -> bool {
        let mut universe: BTreeSet<Symbol> = self.singles.keys().cloned().collect();
        for v in self.singles.values() {
            universe.extend(v.keys().cloned());
        }
        let idx: BTreeMap<&Symbol, usize> = universe.iter().enumerate().map(|(k, s)| (s, k)).collect();
        let n = universe.len();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (s, &r) in &idx {
            for (t, c) in self.apply_single(s) {
                m[r][idx[&t]] = c;
            }
        }
        full_rank(m)
    }

    fn apply_single(&self, s: &Symbol) -> Combination {
        match self.singles.get(s) {
            Some(v) => v.clone(),
            None => [(s.clone(), Scalar::one())].into_iter().collect(),
        }
    }

    /// `Z_S` on the multiset of symbols decorating a block.
    pub fn apply(&self, symbols: &[Symbol]) -> Combination {
        match symbols.len() {
            0 => Combination::new(),
            1 => self.apply_single(&symbols[0]),
            _ => {
                let mut key = symbols.to_vec();
                key.sort();
                self.multi.get(&key).cloned().unwrap_or_default()
            }
        }
    }

    /// `Z` applied multilinearly to blocks decorated by combinations:
    /// the outer map of one block whose labels carry `inputs`.
    fn apply_multilinear(&self, inputs: &[Combination]) -> Combination {
        let mut out = Combination::new();
        for_each_choice(inputs, &mut |symbols, coeff| {
            for (t, c) in self.apply(symbols) {
                let e = out.entry(t).or_insert_with(Scalar::zero);
                *e += &(&c * coeff);
            }
        });
        clean(out)
    }

    /// `(self ∘ inner)_S = Σ_P self_P(inner_{B1}(A_{B1}), ..., inner_{Bk}(A_{Bk}))`,
    /// the vertex map of renormalizing by `self` then by `inner`. Tabulated on
    /// multisets of the mentioned symbols up to `max_block` elements.
    pub fn compose(&self, inner: &VertexMap, max_block: usize) -> Result<VertexMap> {
        let universe: Vec<Symbol> = self.symbols().union(&inner.symbols()).cloned().collect();
        let mut singles = BTreeMap::new();
        let mut multi = Vec::new();
        for size in 1..=max_block {
            for key in multisets(&universe, size) {
                let ground = FiniteSet::range(size as u32);
                let mut total = Combination::new();
                for part in set_partitions(&ground) {
                    let blocks: Vec<Combination> = part
                        .iter()
                        .map(|b| {
                            let syms: Vec<Symbol> = b
                                .iter()
                                .map(|l| match l {
                                    Label::Int(k) => key[*k as usize - 1].clone(),
                                    _ => unreachable!("range labels"),
                                })
                                .collect();
                            inner.apply(&syms)
                        })
                        .collect();
                    // the outer map on the set of blocks: a block of size k
                    // carries k decorated labels
                    for (t, c) in self.apply_multilinear(&blocks) {
                        let e = total.entry(t).or_insert_with(Scalar::zero);
                        *e += &c;
                    }
                }
                let total = clean(total);
                if size == 1 {
                    singles.insert(key[0].clone(), total);
                } else if !total.is_empty() {
                    multi.push((key, total));
                }
            }
        }
        VertexMap::new(singles, multi)
    }
}

fn for_each_choice(inputs: &[Combination], f: &mut dyn FnMut(&[Symbol], &Scalar)) {
    fn go(
        inputs: &[Combination],
        k: usize,
        chosen: &mut Vec<Symbol>,
        coeff: Scalar,
        f: &mut dyn FnMut(&[Symbol], &Scalar),
    ) {
        if k == inputs.len() {
            f(chosen, &coeff);
            return;
        }
        for (s, c) in &inputs[k] {
            chosen.push(s.clone());
            go(inputs, k + 1, chosen, &coeff * c, f);
            chosen.pop();
        }
    }
    go(inputs, 0, &mut Vec::new(), Scalar::one(), f);
}

fn multisets(universe: &[Symbol], size: usize) -> Vec<Vec<Symbol>> {
    fn go(universe: &[Symbol], start: usize, size: usize, cur: &mut Vec<Symbol>, out: &mut Vec<Vec<Symbol>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for k in start..universe.len() {
            cur.push(universe[k].clone());
            go(universe, k, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(universe, 0, size, &mut Vec::new(), &mut out);
    out
}

fn full_rank(mut m: Vec<Vec<Scalar>>) -> bool {
    let n = m.len();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return false;
        };
        m.swap(col, pivot);
        let inv = m[col][col].inv().expect("nonzero pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for k in col..n {
                let sub = &factor * &m[col][k];
                m[r][k] -= &sub;
            }
        }
    }
    true
}

/// `T'_I(A_I) = Σ_P T_P(Z_{S1}(A_{S1}) ⋯ Z_{Sk}(A_{Sk}))` over set
/// partitions `P = {S1, ..., Sk}` of `I`; block `Sj` is represented by its
/// least label.
#[derive(Clone, Debug)]
pub struct Renormalized<P> {
    pub base: P,
    pub z: VertexMap,
}

impl<P: ProductSystem> ProductSystem for Renormalized<P> {
    fn trunc(&self) -> Trunc {
        self.base.trunc()
    }

    fn component(&self, decorations: &Assignment) -> Result<TargetPoly> {
        let ground = decorations.ground();
        if ground.is_empty() {
            return Err(Error::EmptyGround);
        }
        let mut out = TargetPoly::zero(self.trunc());
        for part in set_partitions(&ground) {
            let reps: Vec<Label> = part.iter().map(|b| b.labels()[0].clone()).collect();
            let blocks: Vec<Combination> = part
                .iter()
                .map(|b| {
                    let syms: Vec<Symbol> =
                        b.iter().map(|l| decorations.get(l).expect("total").clone()).collect();
                    self.z.apply(&syms)
                })
                .collect();
            let mut err = None;
            for_each_choice(&blocks, &mut |symbols, coeff| {
                if err.is_some() {
                    return;
                }
                let dec = Assignment::new(reps.iter().cloned().zip(symbols.iter().cloned()).collect());
                match self.base.component(&dec) {
                    Ok(v) => out.axpy(coeff, &v),
                    Err(e) => err = Some(e),
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
        Ok(out)
    }
}
