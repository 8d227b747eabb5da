use rand::Rng;

use super::{dynkin_element, Cell};
use crate::error::{Error, Result};
use crate::linalg::Q;

/// Attempts at rescaling the two witnesses before giving up.
pub const COMPLETION_RETRIES: usize = 32;

/// A pair of cells over `S ⊔ T` extending `S1 ⊔ S2`, one on each side of
/// the hyperplane of the channel `(S,T)`.
#[derive(Clone, Debug)]
pub struct Completion {
    /// Contains `(S,T)`.
    pub forward: Cell,
    /// Equal to `forward` with `(S,T)` replaced by `(T,S)`.
    pub backward: Cell,
}

/// Does `big` contain `S1 ⊔ S2` in the sense of the face of the `(S,T)`
/// hyperplane: every `(A,B) ∈ S1` gives `(A, B⊔T)` and `(A⊔T, B)`, every
/// `(A,B) ∈ S2` gives `(S⊔A, B)` and `(A, S⊔B)`?
pub fn extends(big: &Cell, c1: &Cell, c2: &Cell) -> Result<bool> {
    let (s, t) = (c1.ground(), c2.ground());
    for (a, _) in c1.channels() {
        if !big.contains(&a)? || !big.contains(&a.union(t))? {
            return Ok(false);
        }
    }
    for (a, _) in c2.channels() {
        if !big.contains(&a)? || !big.contains(&s.union(&a))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Completes `S1` over `S` and `S2` over `T` across the channel `(S,T)`.
///
/// The witnesses of `S1` and `S2` are rescaled by random positive integers,
/// juxtaposed, and pushed by `±ε λ_{ST}` with `λ_{ST}` equal to `|T|` on `S`
/// and `-|S|` on `T`; `ε` is chosen exactly below every nonzero channel sum.
pub fn cell_completion<R: Rng>(c1: &Cell, c2: &Cell, rng: &mut R) -> Result<Completion> {
    let (s, t) = (c1.ground(), c2.ground());
    let ground = s.disjoint_union(t)?;
    let n = ground.len();
    let full = (1u64 << n) - 1;
    let (ns, nt) = (s.len() as i64, t.len() as i64);
    let s_mask = ground.mask_of(s).expect("subset");
    for _ in 0..COMPLETION_RETRIES {
        let a = Q::int(rng.gen_range(1..=1000));
        let b = Q::int(rng.gen_range(1..=1000));
        let mut x = vec![Q::zero(); n];
        let mut lambda = vec![Q::zero(); n];
        for (l, v) in s.iter().zip(c1.witness_q()) {
            let k = ground.index_of(l).expect("label of S");
            x[k] = &a * v;
            lambda[k] = Q::int(nt);
        }
        for (l, v) in t.iter().zip(c2.witness_q()) {
            let k = ground.index_of(l).expect("label of T");
            x[k] = &b * v;
            lambda[k] = Q::int(-ns);
        }
        let mut eps = Q::one();
        let mut degenerate = false;
        for m in 1..full {
            let (mut xs, mut ls) = (Q::zero(), Q::zero());
            for k in 0..n {
                if m >> k & 1 == 1 {
                    xs = &xs + &x[k];
                    ls = &ls + &lambda[k];
                }
            }
            if xs.is_zero() {
                if m != s_mask && m != full ^ s_mask {
                    degenerate = true;
                    break;
                }
                continue;
            }
            if !ls.is_zero() {
                let abs = |q: &Q| if q.signum() < 0 { -q } else { q.clone() };
                let bound = &abs(&xs) / &(&abs(&ls) * &Q::int(2));
                if bound < eps {
                    eps = bound;
                }
            }
        }
        if degenerate {
            continue;
        }
        let shifted = |sign: i64| -> Vec<Q> {
            x.iter()
                .zip(&lambda)
                .map(|(xv, lv)| xv + &(&(&eps * lv) * &Q::int(sign)))
                .collect()
        };
        let (Ok(forward), Ok(backward)) = (
            Cell::from_point_q(&ground, shifted(1)),
            Cell::from_point_q(&ground, shifted(-1)),
        ) else {
            continue;
        };
        if forward.contains(s)? && extends(&forward, c1, c2)? {
            debug_assert_eq!(backward, forward.flip(s).expect("opposite side is a cell"));
            return Ok(Completion { forward, backward });
        }
    }
    Err(Error::GenericityFailure(COMPLETION_RETRIES))
}

/// Checks `[D_{S1}, D_{S2}] = D_{S^{[S,T]}} - D_{S^{[T,S]}}` for one
/// completion.
pub fn verify_ruelle<R: Rng>(c1: &Cell, c2: &Cell, rng: &mut R) -> Result<bool> {
    let completion = cell_completion(c1, c2, rng)?;
    ruelle_holds(c1, c2, &completion)
}

/// The identity for a given completion.
pub fn ruelle_holds(c1: &Cell, c2: &Cell, completion: &Completion) -> Result<bool> {
    let bracket = dynkin_element(c1).bracket(&dynkin_element(c2))?;
    let rhs = dynkin_element(&completion.forward)
        .as_sig()
        .sub(dynkin_element(&completion.backward).as_sig())?;
    Ok(bracket.as_sig() == &rhs)
}
