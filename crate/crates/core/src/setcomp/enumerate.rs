use super::{Composition, FiniteSet};
use crate::error::{Error, Result};

/// Default bound on `|I|` for exhaustive composition enumeration.
pub const DEFAULT_COMPOSITION_BOUND: usize = 8;

/// Lazy stream of every composition of a ground set.
///
/// Compositions are emitted by length, and within one length in
/// lexicographic order of the surjection `I -> {0..k-1}` read along the
/// sorted ground set.
pub struct Compositions {
    ground: FiniteSet,
    k: usize,
    vals: Vec<usize>,
    done: bool,
}

/// All compositions of `ground`, guarded by [`DEFAULT_COMPOSITION_BOUND`].
pub fn compositions(ground: &FiniteSet) -> Result<Compositions> {
    compositions_with_bound(ground, DEFAULT_COMPOSITION_BOUND)
}

pub fn compositions_with_bound(ground: &FiniteSet, bound: usize) -> Result<Compositions> {
    if ground.len() > bound {
        return Err(Error::BoundExceeded {
            what: "composition enumeration",
            size: ground.len(),
            bound,
        });
    }
    Ok(Compositions::new(ground.clone()))
}

impl Compositions {
    fn new(ground: FiniteSet) -> Self {
        let n = ground.len();
        let mut it = Compositions {
            ground,
            k: if n == 0 { 0 } else { 1 },
            vals: vec![0; n],
            done: false,
        };
        it.fill_from(0);
        it
    }

    fn missing(&self, upto: usize, extra: Option<usize>) -> usize {
        let mut used = vec![false; self.k];
        for &v in &self.vals[..upto] {
            used[v] = true;
        }
        if let Some(v) = extra {
            used[v] = true;
        }
        used.iter().filter(|u| !**u).count()
    }

    /// Smallest surjective completion of `vals[..from]`.
    fn fill_from(&mut self, from: usize) {
        let n = self.vals.len();
        for pos in from..n {
            let mut used = vec![false; self.k];
            for &v in &self.vals[..pos] {
                used[v] = true;
            }
            let missing: Vec<usize> = (0..self.k).filter(|v| !used[*v]).collect();
            self.vals[pos] = if n - pos > missing.len() { 0 } else { missing[0] };
        }
    }

    fn advance(&mut self) {
        let n = self.vals.len();
        for p in (0..n).rev() {
            for v in self.vals[p] + 1..self.k {
                if self.missing(p, Some(v)) < n - p {
                    self.vals[p] = v;
                    self.fill_from(p + 1);
                    return;
                }
            }
        }
        if self.k >= n {
            self.done = true;
        } else {
            self.k += 1;
            self.fill_from(0);
        }
    }

    fn current(&self) -> Composition {
        let mut lumps = vec![Vec::new(); self.k];
        for (l, &v) in self.ground.iter().zip(&self.vals) {
            lumps[v].push(l.clone());
        }
        Composition::from_lumps_unchecked(
            lumps.into_iter().map(FiniteSet::from_sorted_unchecked).collect(),
        )
    }
}

impl Iterator for Compositions {
    type Item = Composition;
    fn next(&mut self) -> Option<Composition> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

/// Ordered Bell number `a(n)`, the number of compositions of an `n`-set.
pub fn ordered_bell(n: usize) -> u128 {
    let mut a = vec![1u128; n + 1];
    let mut binom = vec![vec![1u128; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..i {
            binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
        }
    }
    for m in 1..=n {
        a[m] = (1..=m).map(|k| binom[m][k] * a[m - k]).sum();
    }
    a[n]
}

/// Every `G ≥ F`, each lump of `F` replaced by one of its compositions.
///
/// The last lump varies fastest.
pub fn refinements(f: &Composition) -> impl Iterator<Item = Composition> {
    let options: Vec<Vec<Composition>> = f
        .lumps()
        .iter()
        .map(|l| Compositions::new(l.clone()).collect())
        .collect();
    let mut idx = vec![0usize; options.len()];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut lumps = Vec::new();
        for (opts, &i) in options.iter().zip(&idx) {
            lumps.extend(opts[i].lumps().iter().cloned());
        }
        done = true;
        for p in (0..idx.len()).rev() {
            idx[p] += 1;
            if idx[p] < options[p].len() {
                done = false;
                break;
            }
            idx[p] = 0;
        }
        Some(Composition::from_lumps_unchecked(lumps))
    })
}

/// All ordered decompositions `S ⊔ T = I`, including empty parts.
pub fn decompositions(ground: &FiniteSet) -> impl Iterator<Item = (FiniteSet, FiniteSet)> + '_ {
    ground.subsets().map(move |s| {
        let t = ground.difference(&s);
        (s, t)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_streams() {
        let empty: Vec<_> = compositions(&FiniteSet::empty()).unwrap().collect();
        assert_eq!(empty, vec![Composition::empty()]);
        let two: Vec<String> = compositions(&FiniteSet::range(2))
            .unwrap()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(two, ["(12)", "(1,2)", "(2,1)"]);
        for n in 0..=6 {
            let c = compositions(&FiniteSet::range(n as u32)).unwrap().count();
            assert_eq!(c as u128, ordered_bell(n));
        }
        assert!(compositions(&FiniteSet::range(9)).is_err());
    }

    #[test]
    fn refinement_counts() {
        let f: Composition = "(12,3)".parse().unwrap();
        assert_eq!(refinements(&f).count(), 3);
        let f: Composition = "(1,2)".parse().unwrap();
        assert_eq!(refinements(&f).collect::<Vec<_>>(), vec![f]);
        assert_eq!(refinements(&Composition::empty()).count(), 1);
    }
}
