use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{FiniteSet, Label};
use crate::error::{Error, Result};

/// An ordered sequence of disjoint nonempty lumps.
///
/// Lumps keep their labels sorted, and compositions compare
/// lexicographically by lump sequence, so they can serve directly as basis
/// keys.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    lumps: Vec<FiniteSet>,
}

impl Composition {
    pub fn new(lumps: Vec<FiniteSet>) -> Result<Self> {
        let mut seen = FiniteSet::empty();
        for lump in &lumps {
            if lump.is_empty() {
                return Err(Error::InvalidComposition("empty lump".into()));
            }
            seen = seen.disjoint_union(lump).map_err(|_| {
                Error::InvalidComposition(format!("lump {lump} overlaps an earlier lump"))
            })?;
        }
        Ok(Composition { lumps })
    }

    pub(crate) fn from_lumps_unchecked(lumps: Vec<FiniteSet>) -> Self {
        debug_assert!(lumps.iter().all(|l| !l.is_empty()));
        Composition { lumps }
    }

    /// The unique composition of the empty set.
    pub fn empty() -> Self {
        Composition { lumps: Vec::new() }
    }

    /// The one-lump composition `(I)`, or `( )` when `I` is empty.
    pub fn stick(ground: FiniteSet) -> Self {
        if ground.is_empty() {
            Composition::empty()
        } else {
            Composition {
                lumps: vec![ground],
            }
        }
    }

    /// Singleton lumps in the given order.
    pub fn linear(order: impl IntoIterator<Item = Label>) -> Result<Self> {
        Composition::new(order.into_iter().map(FiniteSet::singleton).collect())
    }

    pub fn lumps(&self) -> &[FiniteSet] {
        &self.lumps
    }

    /// The length `l(F)`.
    pub fn len(&self) -> usize {
        self.lumps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lumps.is_empty()
    }

    pub fn ground(&self) -> FiniteSet {
        self.lumps.iter().flat_map(|l| l.iter().cloned()).collect()
    }

    /// Index of the lump containing `l`.
    pub fn lump_of(&self, l: &Label) -> Option<usize> {
        self.lumps.iter().position(|s| s.contains(l))
    }

    pub fn concat(&self, other: &Composition) -> Result<Composition> {
        let (a, b) = (self.ground(), other.ground());
        if !a.is_disjoint(&b) {
            return Err(Error::NotDisjoint { left: a, right: b });
        }
        let mut lumps = self.lumps.clone();
        lumps.extend(other.lumps.iter().cloned());
        Ok(Composition { lumps })
    }

    /// `F|_S`; `S` must be a subset of the ground set.
    pub fn restrict(&self, s: &FiniteSet) -> Result<Composition> {
        let ground = self.ground();
        if !s.is_subset(&ground) {
            return Err(Error::NotSubset {
                sub: s.clone(),
                ground,
            });
        }
        Ok(self.restrict_unchecked(s))
    }

    pub(crate) fn restrict_unchecked(&self, s: &FiniteSet) -> Composition {
        Composition {
            lumps: self
                .lumps
                .iter()
                .map(|l| l.intersection(s))
                .filter(|l| !l.is_empty())
                .collect(),
        }
    }

    /// The opposite composition, lumps reversed.
    pub fn opposite(&self) -> Composition {
        let mut lumps = self.lumps.clone();
        lumps.reverse();
        Composition { lumps }
    }

    fn check_same_ground(&self, other: &Composition) -> Result<FiniteSet> {
        let (a, b) = (self.ground(), other.ground());
        if a != b {
            return Err(Error::GroundMismatch {
                expected: a,
                found: b,
            });
        }
        Ok(a)
    }

    /// `self ≤ finer`: every lump of `self` is a union of consecutive lumps of
    /// `finer`, in order.
    pub fn coarsens(&self, finer: &Composition) -> Result<bool> {
        self.check_same_ground(finer)?;
        Ok(self.coarsens_unchecked(finer))
    }

    pub(crate) fn coarsens_unchecked(&self, finer: &Composition) -> bool {
        let mut it = finer.lumps.iter();
        for lump in &self.lumps {
            let mut acc = FiniteSet::empty();
            while acc.len() < lump.len() {
                match it.next() {
                    Some(f) if f.is_subset(lump) => acc = acc.union(f),
                    _ => return false,
                }
            }
        }
        it.next().is_none()
    }

    fn local_lengths(&self, coarser: &Composition) -> Result<Vec<usize>> {
        if !coarser.coarsens(self)? {
            return Err(Error::NotComparable);
        }
        Ok(coarser
            .lumps
            .iter()
            .map(|t| self.restrict_unchecked(t).len())
            .collect())
    }

    /// `l(F/G) = Π_j l(F|_{T_j})` for `G ≤ F` with lumps `T_j`.
    pub fn length_ratio(&self, coarser: &Composition) -> Result<u64> {
        Ok(self
            .local_lengths(coarser)?
            .into_iter()
            .map(|k| k as u64)
            .product())
    }

    /// `(F/G)! = Π_j l(F|_{T_j})!`
    pub fn factorial_ratio(&self, coarser: &Composition) -> Result<u64> {
        Ok(self
            .local_lengths(coarser)?
            .into_iter()
            .map(|k| (1..=k as u64).product::<u64>())
            .product())
    }

    /// The Tits product `F ▷ G`: each lump of `F` is split by the lumps of
    /// `G`, keeping `F`-major order.
    pub fn tits(&self, other: &Composition) -> Result<Composition> {
        self.check_same_ground(other)?;
        Ok(self.tits_unchecked(other))
    }

    pub(crate) fn tits_unchecked(&self, other: &Composition) -> Composition {
        let mut lumps = Vec::new();
        for s in &self.lumps {
            for u in &other.lumps {
                let x = u.intersection(s);
                if !x.is_empty() {
                    lumps.push(x);
                }
            }
        }
        Composition { lumps }
    }

    /// `S` is a (not necessarily contiguous) union of lumps.
    pub fn is_union_of_lumps(&self, s: &FiniteSet) -> bool {
        self.lumps
            .iter()
            .all(|l| l.is_subset(s) || l.is_disjoint(s))
    }

    /// Deshuffling: `F|_S` when `S` is a union of lumps, otherwise `None`.
    pub fn deshuffle(&self, s: &FiniteSet) -> Option<Composition> {
        self.is_union_of_lumps(s).then(|| self.restrict_unchecked(s))
    }

    /// The two-lump coarsenings `(S_1..S_j, S_{j+1}..S_k)`, `1 ≤ j < k`.
    pub fn two_lump_coarsenings(&self) -> Vec<(FiniteSet, FiniteSet)> {
        let k = self.len();
        let mut prefix = Vec::with_capacity(k);
        let mut acc = FiniteSet::empty();
        for l in &self.lumps {
            acc = acc.union(l);
            prefix.push(acc.clone());
        }
        let ground = acc;
        (0..k.saturating_sub(1))
            .map(|j| (prefix[j].clone(), ground.difference(&prefix[j])))
            .collect()
    }

    /// Pushforward along a label bijection defined on the ground set.
    pub fn relabel(&self, map: &BTreeMap<Label, Label>) -> Result<Composition> {
        let lumps = self
            .lumps
            .iter()
            .map(|lump| {
                lump.iter()
                    .map(|l| map.get(l).cloned().ok_or_else(|| Error::UnknownLabel(l.clone())))
                    .collect::<Result<FiniteSet>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(lumps).map_err(|_| Error::NotBijection("images collide".into()))
    }
}

impl fmt::Display for Composition {
    /// `(12,3)` when every label is a single character, otherwise
    /// `(10 11,3)` with space-separated labels inside lumps.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lumps.is_empty() {
            return f.write_str("( )");
        }
        let compact = self.lumps.iter().all(|l| Label::compact(l.labels()));
        f.write_str("(")?;
        for (k, lump) in self.lumps.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            for (j, l) in lump.iter().enumerate() {
                if j > 0 && !compact {
                    f.write_str(" ")?;
                }
                write!(f, "{l}")?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_lump(text: &str) -> Result<FiniteSet> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty lump".into()));
    }
    let mut labels = Vec::new();
    if text.contains(char::is_whitespace) {
        for tok in text.split_whitespace() {
            labels.push(tok.parse::<Label>()?);
        }
    } else {
        let chars: Vec<char> = text.chars().collect();
        let mut k = 0;
        while k < chars.len() {
            if chars[k] == '*' {
                let mut end = k + 1;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                let tok: String = chars[k..end].iter().collect();
                labels.push(tok.parse::<Label>()?);
                k = end;
            } else {
                labels.push(chars[k].to_string().parse::<Label>()?);
                k += 1;
            }
        }
    }
    FiniteSet::try_new(labels)
}

/// Parses the text form `(12,3)`, `( )`, or `(10 11,3)`.
impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Composition> {
        let s = s.trim();
        let body = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("composition {s:?} must be parenthesized")))?;
        if body.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let lumps = body.split(',').map(parse_lump).collect::<Result<Vec<_>>>()?;
        Composition::new(lumps)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.lumps.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let lumps = Vec::<FiniteSet>::deserialize(d)?;
        Composition::new(lumps).map_err(serde::de::Error::custom)
    }
}
