use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Label;
use crate::error::{Error, Result};

/// A finite set of labels, stored sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FiniteSet(Vec<Label>);

impl FiniteSet {
    pub fn empty() -> Self {
        FiniteSet(Vec::new())
    }

    /// Rejects duplicate labels.
    pub fn try_new(labels: impl IntoIterator<Item = Label>) -> Result<Self> {
        let mut v: Vec<Label> = labels.into_iter().collect();
        v.sort();
        let before = v.len();
        v.dedup();
        if v.len() != before {
            return Err(Error::Parse("duplicate label in set".into()));
        }
        Ok(FiniteSet(v))
    }

    /// `{1, ..., n}`
    pub fn range(n: u32) -> Self {
        FiniteSet((1..=n).map(Label::Int).collect())
    }

    pub fn singleton(l: Label) -> Self {
        FiniteSet(vec![l])
    }

    pub(crate) fn from_sorted_unchecked(v: Vec<Label>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        FiniteSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Label> {
        self.0.iter()
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.0.binary_search(l).is_ok()
    }

    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.0.binary_search(l).ok()
    }

    pub fn is_subset(&self, other: &FiniteSet) -> bool {
        self.0.iter().all(|l| other.contains(l))
    }

    pub fn is_disjoint(&self, other: &FiniteSet) -> bool {
        self.0.iter().all(|l| !other.contains(l))
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match x.cmp(y) {
                    std::cmp::Ordering::Less => v.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Greater => v.push(b.next().unwrap().clone()),
                    std::cmp::Ordering::Equal => {
                        v.push(a.next().unwrap().clone());
                        b.next();
                    }
                },
                (Some(_), None) => v.push(a.next().unwrap().clone()),
                (None, Some(_)) => v.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        FiniteSet(v)
    }

    pub fn intersection(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet(self.0.iter().filter(|l| other.contains(l)).cloned().collect())
    }

    pub fn difference(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet(self.0.iter().filter(|l| !other.contains(l)).cloned().collect())
    }

    pub fn with(&self, l: Label) -> FiniteSet {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&l) {
            v.insert(pos, l);
        }
        FiniteSet(v)
    }

    pub fn without(&self, l: &Label) -> FiniteSet {
        FiniteSet(self.0.iter().filter(|x| *x != l).cloned().collect())
    }

    /// Disjoint union; errors on overlap.
    pub fn disjoint_union(&self, other: &FiniteSet) -> Result<FiniteSet> {
        if !self.is_disjoint(other) {
            return Err(Error::NotDisjoint {
                left: self.clone(),
                right: other.clone(),
            });
        }
        Ok(self.union(other))
    }

    /// Subset selected by the bits of `mask` (bit `k` = `k`-th smallest label).
    pub fn subset_from_mask(&self, mask: u64) -> FiniteSet {
        FiniteSet(
            self.0
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, l)| l.clone())
                .collect(),
        )
    }

    /// Bit mask of `sub` relative to `self`; `None` if `sub` is not a subset.
    pub fn mask_of(&self, sub: &FiniteSet) -> Option<u64> {
        let mut m = 0u64;
        for l in sub.iter() {
            m |= 1 << self.index_of(l)?;
        }
        Some(m)
    }

    /// All `2^n` subsets, in mask order.
    pub fn subsets(&self) -> impl Iterator<Item = FiniteSet> + '_ {
        assert!(self.len() < 64);
        (0u64..1 << self.len()).map(move |m| self.subset_from_mask(m))
    }
}

impl FromIterator<Label> for FiniteSet {
    /// Sorts and deduplicates.
    fn from_iter<T: IntoIterator<Item = Label>>(iter: T) -> Self {
        let mut v: Vec<Label> = iter.into_iter().collect();
        v.sort();
        v.dedup();
        FiniteSet(v)
    }
}

impl<'a> IntoIterator for &'a FiniteSet {
    type Item = &'a Label;
    type IntoIter = std::slice::Iter<'a, Label>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for FiniteSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Label>::deserialize(d)?;
        FiniteSet::try_new(v).map_err(serde::de::Error::custom)
    }
}
