use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{all, COMPOSITION_COUNTS};
use super::{Tally, VerifyConfig};
use crate::error::Result;
use crate::setcomp::{decompositions, FiniteSet};
use crate::zie::{
    cell_completion, dynkin_element, dynkin_rank, enumerate_cells_with_bound, random_generic_point,
    relation_rank, ruelle_holds, stick_q, steinmann_quadruples, zie_dimension, Cell, Tree,
};

/// Number of cells over an `n`-set, `n = 1..=6`.
pub const CELL_COUNTS: [u64; 6] = [1, 2, 6, 32, 370, 11292];

/// `dim Zie[n] = Σ_k S(n,k)(k-1)!`, `n = 1..=6`.
pub const ZIE_DIMENSIONS: [u64; 6] = [1, 2, 6, 26, 150, 1082];

fn cells(ground: &FiniteSet, config: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Cell>> {
    let bound = config.bound.unwrap_or(crate::zie::DEFAULT_CELL_BOUND);
    enumerate_cells_with_bound(ground, bound, rng)
}

/// Every bracketing of every ordered split of `ground` into leaf blocks.
fn all_trees(ground: &FiniteSet) -> Result<Vec<Tree>> {
    let mut out = vec![Tree::leaf(ground.clone())?];
    for (l, r) in decompositions(ground) {
        if l.is_empty() || r.is_empty() {
            continue;
        }
        let right = all_trees(&r)?;
        for a in all_trees(&l)? {
            for b in &right {
                out.push(Tree::node(a.clone(), b.clone())?);
            }
        }
    }
    Ok(out)
}

pub(super) fn dynkin(t: &mut Tally, config: &VerifyConfig) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for m in 1..=config.n {
        let ground = FiniteSet::range(m as u32);
        if let Some(&expected) = COMPOSITION_COUNTS.get(m) {
            t.equal("dimension", all(&ground)?.len() as u64, expected);
        }
        t.record_result("stick Q primitive", stick_q(&ground)?.as_sig().is_primitive(), || {
            format!("n={m}")
        });
        // trees with many leaves are exhaustively covered up to four labels
        if m <= 4 {
            for tree in all_trees(&ground)? {
                t.record_result("tree image primitive", tree.to_q().as_sig().is_primitive(), || {
                    format!("{tree}")
                });
            }
        }
        let cs = cells(&ground, config, &mut rng)?;
        if let Some(&expected) = CELL_COUNTS.get(m - 1) {
            t.equal("cell count", cs.len() as u64, expected);
        }
        for c in &cs {
            t.record_result("Dynkin element primitive", dynkin_element(c).as_sig().is_primitive(), || {
                format!("{c}")
            });
        }
    }
    Ok(())
}

/// The four cells of the s/u-channel example over `{1,2,3,4}`.
pub fn four_point_example() -> Result<[Cell; 4]> {
    let ground = FiniteSet::range(4);
    let side = |v: &[u32]| FiniteSet::try_new(v.iter().map(|&k| crate::Label::Int(k)));
    let common = [&[1][..], &[1, 3], &[1, 3, 4], &[3], &[1, 2, 3]];
    let variable: [[&[u32]; 2]; 4] = [[&[2, 3], &[1, 2]], [&[2, 3], &[3, 4]], [&[1, 4], &[3, 4]], [&[1, 4], &[1, 2]]];
    let mut out = Vec::with_capacity(4);
    for v in variable {
        let sides = common.iter().chain(v.iter()).map(|s| side(s)).collect::<Result<Vec<_>>>()?;
        out.push(Cell::from_channels(&ground, sides)?);
    }
    Ok(out.try_into().expect("four cells"))
}

pub(super) fn steinmann(t: &mut Tally, config: &VerifyConfig) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for m in 1..=config.n {
        let ground = FiniteSet::range(m as u32);
        let cs = cells(&ground, config, &mut rng)?;
        let quads = steinmann_quadruples(&cs);
        for q in &quads {
            t.record("quadruple sums to zero", q.alternating_sum().is_zero(), || {
                format!("across {:?} and {:?}", q.first, q.second)
            });
        }
        let rank = dynkin_rank(&cs);
        t.equal("Dynkin rank equals dim Zie", rank as u128, zie_dimension(m));
        if let Some(&expected) = ZIE_DIMENSIONS.get(m - 1) {
            t.equal("dim Zie frozen value", rank as u64, expected);
        }
        t.equal(
            "Steinmann relations span the kernel",
            cs.len() - relation_rank(&cs, &quads),
            rank,
        );
        if m == 4 {
            let mut key: Vec<u128> = four_point_example()?.iter().map(Cell::orientation).collect();
            key.sort();
            let found = quads.iter().any(|q| {
                let mut k: Vec<u128> = q.cells.iter().map(Cell::orientation).collect();
                k.sort();
                k == key
            });
            t.record("four-point example enumerated", found, || "not among the quadruples".into());
        }
    }
    Ok(())
}

/// Checks one pair against completions drawn from two independent streams.
fn check_pair(t: &mut Tally, a: &Cell, b: &Cell, r1: &mut ChaCha8Rng, r2: &mut ChaCha8Rng) -> Result<()> {
    let first = cell_completion(a, b, r1)?;
    let second = cell_completion(a, b, r2)?;
    t.record_result("Ruelle identity", ruelle_holds(a, b, &first), || format!("{a} with {b}"));
    t.record_result("Ruelle identity, second completion", ruelle_holds(a, b, &second), || {
        format!("{a} with {b}")
    });
    Ok(())
}

/// Pairs exhaustively up to four labels in total, then 100 random pairs for
/// every larger total up to `n`.
pub(super) fn ruelle(t: &mut Tally, config: &VerifyConfig) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut other = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(1));
    let mut cache: BTreeMap<FiniteSet, Vec<Cell>> = BTreeMap::new();
    for m in 2..=config.n.min(4) {
        let ground = FiniteSet::range(m as u32);
        for (s, tt) in decompositions(&ground) {
            if s.is_empty() || tt.is_empty() {
                continue;
            }
            for side in [&s, &tt] {
                if !cache.contains_key(side) {
                    let cs = cells(side, config, &mut rng)?;
                    cache.insert(side.clone(), cs);
                }
            }
            for a in &cache[&s] {
                for b in &cache[&tt] {
                    check_pair(t, a, b, &mut rng, &mut other)?;
                }
            }
        }
    }
    for m in 5..=config.n {
        let labels: Vec<_> = FiniteSet::range(m as u32).labels().to_vec();
        for _ in 0..100 {
            let mut shuffled = labels.clone();
            shuffled.shuffle(&mut rng);
            let k = rng.gen_range(1..m);
            let s = FiniteSet::try_new(shuffled[..k].iter().cloned())?;
            let tt = FiniteSet::try_new(shuffled[k..].iter().cloned())?;
            let a = random_generic_point(&s, &mut rng)?;
            let b = random_generic_point(&tt, &mut rng)?;
            check_pair(t, &a, &b, &mut rng, &mut other)?;
        }
    }
    Ok(())
}
