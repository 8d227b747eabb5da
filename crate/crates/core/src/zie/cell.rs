use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use num_rational::BigRational;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{strictly_feasible, Q};
use crate::setcomp::{FiniteSet, Label};

/// Default bound on `|I|` for cell enumeration.
pub const DEFAULT_CELL_BOUND: usize = 6;

/// Hard limit from the orientation bitset width.
pub const MAX_CELL_GROUND: usize = 8;

/// Attempts at drawing a generic random point before giving up.
pub const GENERIC_RETRIES: usize = 32;

/// An orientation of every two-lump channel `{(S,T),(T,S)}` of `I`, realized
/// by a chamber of the arrangement `Σ_{i∈S} x_i = 0` in the sum-zero space.
///
/// Channel pairs are indexed by the mask of the side not containing the
/// largest label; bit `m` of `orient` is set when that side is chosen as the
/// first lump. Every value carries a witness point with `Σ_{i∈S} x_i > 0`
/// exactly for the chosen channels.
#[derive(Clone)]
pub struct Cell {
    ground: FiniteSet,
    orient: u128,
    witness: Vec<Q>,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Cell) -> bool {
        self.ground == other.ground && self.orient == other.orient
    }
}

impl Eq for Cell {}

impl Hash for Cell {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ground.hash(state);
        self.orient.hash(state);
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Cell) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Cell) -> std::cmp::Ordering {
        (&self.ground, self.orient).cmp(&(&other.ground, other.orient))
    }
}

fn check_ground(ground: &FiniteSet) -> Result<()> {
    if ground.is_empty() {
        return Err(Error::EmptyGround);
    }
    if ground.len() > MAX_CELL_GROUND {
        return Err(Error::BoundExceeded {
            what: "cell ground set",
            size: ground.len(),
            bound: MAX_CELL_GROUND,
        });
    }
    Ok(())
}

fn full_mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

/// Channel sums `Σ_{i∈m} x_i` for every pair representative `m`.
fn pair_sums(x: &[Q]) -> impl Iterator<Item = (u64, Q)> + '_ {
    let n = x.len();
    (1u64..1 << (n - 1)).map(move |m| {
        let s = (0..n)
            .filter(|k| m >> k & 1 == 1)
            .fold(Q::zero(), |acc, k| &acc + &x[k]);
        (m, s)
    })
}

impl Cell {
    pub fn ground(&self) -> &FiniteSet {
        &self.ground
    }

    /// The orientation bitset; equal bitsets over one ground are equal cells.
    pub fn orientation(&self) -> u128 {
        self.orient
    }

    pub(crate) fn n(&self) -> usize {
        self.ground.len()
    }

    /// Is `(m, I∖m)` chosen? `m` must be a proper nonempty subset mask.
    pub(crate) fn contains_mask(&self, m: u64) -> bool {
        let n = self.n();
        debug_assert!(m != 0 && m != full_mask(n));
        if m >> (n - 1) & 1 == 1 {
            self.orient >> (full_mask(n) ^ m) & 1 == 0
        } else {
            self.orient >> m & 1 == 1
        }
    }

    /// Is the channel `(S, I∖S)` chosen?
    pub fn contains(&self, s: &FiniteSet) -> Result<bool> {
        let m = self.ground.mask_of(s).ok_or_else(|| Error::NotSubset {
            sub: s.clone(),
            ground: self.ground.clone(),
        })?;
        if m == 0 || m == full_mask(self.n()) {
            return Err(Error::InvalidComposition(format!(
                "{s} is not a proper nonempty subset of {}",
                self.ground
            )));
        }
        Ok(self.contains_mask(m))
    }

    /// The chosen channels `(S,T)`, sorted.
    pub fn channels(&self) -> Vec<(FiniteSet, FiniteSet)> {
        let n = self.n();
        let mut out: Vec<(FiniteSet, FiniteSet)> = (1u64..1 << (n - 1))
            .map(|m| {
                let s = if self.orient >> m & 1 == 1 { m } else { full_mask(n) ^ m };
                let t = full_mask(n) ^ s;
                (self.ground.subset_from_mask(s), self.ground.subset_from_mask(t))
            })
            .collect();
        out.sort();
        out
    }

    /// A point of the open chamber, coordinates aligned with the sorted
    /// ground set.
    pub fn witness(&self) -> Vec<BigRational> {
        self.witness.iter().map(Q::to_big).collect()
    }

    pub(crate) fn witness_q(&self) -> &[Q] {
        &self.witness
    }

    /// The cell whose chamber contains `x`; `x` must sum to zero and avoid
    /// every hyperplane.
    pub fn from_point(ground: &FiniteSet, x: &[BigRational]) -> Result<Cell> {
        Cell::from_point_q(ground, x.iter().cloned().map(Q::from_big).collect())
    }

    pub(crate) fn from_point_q(ground: &FiniteSet, x: Vec<Q>) -> Result<Cell> {
        check_ground(ground)?;
        if x.len() != ground.len() {
            return Err(Error::NotGeneric(format!(
                "point has {} coordinates for {} labels",
                x.len(),
                ground.len()
            )));
        }
        let total = x.iter().fold(Q::zero(), |acc, v| &acc + v);
        if !total.is_zero() {
            return Err(Error::NotGeneric("coordinates do not sum to zero".into()));
        }
        let mut orient = 0u128;
        for (m, s) in pair_sums(&x) {
            match s.signum() {
                0 => {
                    let side = ground.subset_from_mask(m);
                    return Err(Error::NotGeneric(format!(
                        "({side},{})",
                        ground.difference(&side)
                    )));
                }
                1 => orient |= 1 << m,
                _ => {}
            }
        }
        Ok(Cell {
            ground: ground.clone(),
            orient,
            witness: x,
        })
    }

    /// Realizes an orientation bitset, or `None` if it is not a chamber.
    pub(crate) fn from_orientation(ground: &FiniteSet, orient: u128) -> Option<Cell> {
        let n = ground.len();
        let rows: Vec<Vec<Q>> = (1u64..1 << (n - 1))
            .map(|m| {
                let sign = if orient >> m & 1 == 1 { 1 } else { -1 };
                (0..n - 1)
                    .map(|j| Q::int(if m >> j & 1 == 1 { sign } else { 0 }))
                    .collect()
            })
            .collect();
        let y = strictly_feasible(&rows)?;
        let last = y.iter().fold(Q::zero(), |acc, v| &acc - v);
        let mut witness = y;
        witness.push(last);
        Some(Cell {
            ground: ground.clone(),
            orient,
            witness,
        })
    }

    /// Builds the cell choosing `(S, I∖S)` for every listed `S`; every channel
    /// pair must be oriented exactly once and the result must be realizable.
    pub fn from_channels(
        ground: &FiniteSet,
        chosen: impl IntoIterator<Item = FiniteSet>,
    ) -> Result<Cell> {
        check_ground(ground)?;
        let n = ground.len();
        let mut orient = 0u128;
        let mut seen = BTreeSet::new();
        for s in chosen {
            let m = ground.mask_of(&s).ok_or_else(|| Error::NotSubset {
                sub: s.clone(),
                ground: ground.clone(),
            })?;
            if m == 0 || m == full_mask(n) {
                return Err(Error::NotACell(format!("{s} is not a channel side")));
            }
            let (rep, positive) = if m >> (n - 1) & 1 == 1 {
                (full_mask(n) ^ m, false)
            } else {
                (m, true)
            };
            if !seen.insert(rep) {
                return Err(Error::NotACell(format!(
                    "channel pair of {s} oriented more than once"
                )));
            }
            if positive {
                orient |= 1 << rep;
            }
        }
        if seen.len() as u64 != (1u64 << (n - 1)) - 1 {
            return Err(Error::NotACell("some channel pair is not oriented".into()));
        }
        Cell::from_orientation(ground, orient)
            .ok_or_else(|| Error::NotACell("orientation is not realizable".into()))
    }

    /// `S_i = {(S,T): i ∈ S}`, witnessed by the projection of `e_i`.
    pub fn total_retarded(ground: &FiniteSet, i: &Label) -> Result<Cell> {
        check_ground(ground)?;
        let k = ground
            .index_of(i)
            .ok_or_else(|| Error::UnknownLabel(i.clone()))?;
        let n = ground.len() as i64;
        let x = (0..ground.len())
            .map(|j| {
                let num = if j == k { n - 1 } else { -1 };
                &Q::int(num) / &Q::int(n)
            })
            .collect();
        Cell::from_point_q(ground, x)
    }

    /// `S̄_i = {(S,T): i ∈ T}`.
    pub fn total_advanced(ground: &FiniteSet, i: &Label) -> Result<Cell> {
        Ok(Cell::total_retarded(ground, i)?.opposite())
    }

    /// Every channel reversed; the chamber of `-x`.
    pub fn opposite(&self) -> Cell {
        let count = 1u32 << (self.n() - 1);
        let pairs = if count == 128 { u128::MAX - 1 } else { (1u128 << count) - 2 };
        Cell {
            ground: self.ground.clone(),
            orient: !self.orient & pairs,
            witness: self.witness.iter().map(|v| -v).collect(),
        }
    }

    /// Reverses the channel `(S, I∖S)`; errors if the result is not a cell.
    pub fn flip(&self, s: &FiniteSet) -> Result<Cell> {
        self.contains(s)?;
        let n = self.n();
        let m = self.ground.mask_of(s).expect("checked by contains");
        let rep = if m >> (n - 1) & 1 == 1 { full_mask(n) ^ m } else { m };
        Cell::from_orientation(&self.ground, self.orient ^ (1 << rep))
            .ok_or_else(|| Error::NotACell(format!("flipping {s} leaves the arrangement")))
    }
}

/// Random point of the sum-zero space avoiding every channel hyperplane.
pub fn random_generic_point<R: Rng>(ground: &FiniteSet, rng: &mut R) -> Result<Cell> {
    check_ground(ground)?;
    let n = ground.len();
    for _ in 0..GENERIC_RETRIES {
        let mut x: Vec<Q> = (0..n - 1)
            .map(|_| Q::int(rng.gen_range(-1_000_000i64..=1_000_000)))
            .collect();
        let last = x.iter().fold(Q::zero(), |acc, v| &acc - v);
        x.push(last);
        if let Ok(c) = Cell::from_point_q(ground, x) {
            return Ok(c);
        }
    }
    Err(Error::GenericityFailure(GENERIC_RETRIES))
}

/// Every cell over `ground`, sorted by orientation, with the default bound.
pub fn enumerate_cells<R: Rng>(ground: &FiniteSet, rng: &mut R) -> Result<Vec<Cell>> {
    enumerate_cells_with_bound(ground, DEFAULT_CELL_BOUND, rng)
}

/// Breadth-first search over the chamber graph, flipping one channel at a
/// time and keeping the flips that stay realizable.
pub fn enumerate_cells_with_bound<R: Rng>(
    ground: &FiniteSet,
    bound: usize,
    rng: &mut R,
) -> Result<Vec<Cell>> {
    if ground.len() > bound.min(MAX_CELL_GROUND) {
        return Err(Error::BoundExceeded {
            what: "cell enumeration",
            size: ground.len(),
            bound: bound.min(MAX_CELL_GROUND),
        });
    }
    let start = random_generic_point(ground, rng)?;
    let n = ground.len();
    let mut seen = BTreeSet::from([start.orient]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(cell) = queue.pop_front() {
        for m in 1u64..1 << (n - 1) {
            let orient = cell.orient ^ (1 << m);
            if seen.contains(&orient) {
                continue;
            }
            if let Some(next) = Cell::from_orientation(ground, orient) {
                seen.insert(orient);
                queue.push_back(next);
            }
        }
        out.push(cell);
    }
    out.sort();
    Ok(out)
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (s, t)) in self.channels().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let comp = crate::Composition::from_lumps_unchecked(vec![s.clone(), t.clone()]);
            write!(f, "{comp}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cell{self} over {}", self.ground)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CellRepr {
    ground: FiniteSet,
    channels: Vec<(FiniteSet, FiniteSet)>,
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CellRepr {
            ground: self.ground.clone(),
            channels: self.channels(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cell {
    /// The witness is recomputed and the orientation re-verified on load.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CellRepr::deserialize(d)?;
        if repr.ground.len() > MAX_CELL_GROUND {
            return Err(D::Error::custom("cell ground set too large"));
        }
        for (s, t) in &repr.channels {
            let union = s.disjoint_union(t).map_err(D::Error::custom)?;
            if union != repr.ground {
                return Err(D::Error::custom(format!(
                    "channel ({s},{t}) does not split the ground set"
                )));
            }
        }
        Cell::from_channels(&repr.ground, repr.channels.into_iter().map(|(s, _)| s))
            .map_err(D::Error::custom)
    }
}
