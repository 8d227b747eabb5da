//! Exact rational linear algebra: sparse rank and strict feasibility of
//! homogeneous sign systems.

mod q;
mod simplex;

use std::collections::BTreeMap;

pub use q::Q;
pub use simplex::strictly_feasible;

/// A sparse row: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, Q>;

/// Rank by sparse Gaussian elimination over the rationals.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    // pivot column -> normalized pivot row (leading entry 1)
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        row.retain(|_, v| !v.is_zero());
        while let Some((&lead, lead_val)) = row.iter().next() {
            match pivots.get(&lead) {
                Some(p) => {
                    let factor = lead_val.clone();
                    for (c, v) in p {
                        let cur = row.remove(c).unwrap_or_else(Q::zero);
                        let next = &cur - &(&factor * v);
                        if !next.is_zero() {
                            row.insert(*c, next);
                        }
                    }
                }
                None => {
                    let inv = lead_val.clone();
                    let normalized = row.iter().map(|(c, v)| (*c, v / &inv)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> SparseRow {
        v.iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(k, x)| (k, Q::int(*x)))
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(vec![]), 0);
        assert_eq!(rank(vec![row(&[1, 2]), row(&[2, 4])]), 1);
        assert_eq!(rank(vec![row(&[1, 2, 3]), row(&[0, 1, 1]), row(&[1, 3, 4])]), 2);
        assert_eq!(rank(vec![row(&[0, 0]), row(&[0, 5]), row(&[3, 0])]), 2);
    }
}
