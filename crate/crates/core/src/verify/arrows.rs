use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::algebra::all;
use super::{Tally, VerifyConfig};
use crate::arrows::{
    advanced_element, arrow, curried_arrow_series, fresh_set, iterated_arrow, iterated_cell_arrow,
    retarded_element, up_derivation, Direction,
};
use crate::error::Result;
use crate::setcomp::{decompositions, FiniteSet, Label};
use crate::species::{tensor, SigElement};
use crate::zie::{dynkin_element, enumerate_cells};
use crate::Scalar;

fn coefficient_pairs() -> [(Scalar, Scalar); 3] {
    [
        (Scalar::from_int(1), Scalar::from_int(0)),
        (Scalar::from_int(0), Scalar::from_int(1)),
        (Scalar::from_int(2), Scalar::from_int(-3)),
    ]
}

/// `[1..k]` and `[k+1..m]`.
fn contiguous_split(m: u32, k: u32) -> (FiniteSet, FiniteSet) {
    let s = FiniteSet::range(k);
    let t = FiniteSet::range(m).difference(&s);
    (s, t)
}

fn basis(ground: &FiniteSet) -> Result<Vec<SigElement>> {
    Ok(all(ground)?.into_iter().map(SigElement::basis).collect())
}

pub(super) fn arrows(t: &mut Tally, config: &VerifyConfig) -> Result<()> {
    let n = config.n as u32;
    let (s1, s2) = (Label::Fresh(1), Label::Fresh(2));
    let star = FiniteSet::singleton(s1.clone());
    let h_star = SigElement::stick(star.clone());

    for (a, b) in coefficient_pairs() {
        let tag = format!("({a},{b})");
        for m in 0..=n {
            for k in 0..=m {
                let (s, tt) = contiguous_split(m, k);
                let right = basis(&tt)?;
                for x in basis(&s)? {
                    let ux = up_derivation(&x, &s1, &a, &b)?;
                    for y in &right {
                        let lhs = up_derivation(&x.mult(y)?, &s1, &a, &b)?;
                        let rhs = ux.mult(y)?.add(&x.mult(&up_derivation(y, &s1, &a, &b)?)?)?;
                        t.record("derivation law", lhs == rhs, || format!("{tag} on {x}·{y}"));
                    }
                }
            }
            let ground = FiniteSet::range(m);
            for f in all(&ground)? {
                let u = up_derivation(&SigElement::basis(f.clone()), &s1, &a, &b)?;
                for (s, tt) in decompositions(&ground) {
                    let fs = SigElement::basis(f.restrict(&s)?);
                    let ft = SigElement::basis(f.restrict(&tt)?);
                    let left_ok = u.comult(&s.union(&star), &tt)? == tensor(&up_derivation(&fs, &s1, &a, &b)?, &ft);
                    let right_ok = u.comult(&s, &tt.union(&star))? == tensor(&fs, &up_derivation(&ft, &s1, &a, &b)?);
                    t.record("coderivation law", left_ok && right_ok, || format!("{tag} on {f}, S={s}"));
                }
            }
        }
    }

    let swap: BTreeMap<Label, Label> = [(s1.clone(), s2.clone()), (s2.clone(), s1.clone())].into_iter().collect();
    for m in 0..=n {
        let ground = FiniteSet::range(m);
        let mut full = swap.clone();
        full.extend(ground.iter().map(|l| (l.clone(), l.clone())));
        for x in basis(&ground)? {
            for dir in [Direction::Retarded, Direction::Advanced] {
                let one_two = arrow(&arrow(&x, &s1, dir)?, &s2, dir)?;
                let two_one = arrow(&arrow(&x, &s2, dir)?, &s1, dir)?;
                let ok = one_two == two_one && one_two.relabel(&full)? == one_two;
                t.record("arrows commute", ok, || format!("{dir:?} on {x}"));
            }
            let up = arrow(&x, &s1, Direction::Advanced)?;
            let down = arrow(&x, &s1, Direction::Retarded)?;
            t.record("advanced minus retarded is adjoint of H_(*)", up.sub(&down)? == h_star.commutator(&x)?, || {
                format!("on {x}")
            });
        }
    }
    // the mixed biderivation is pinned as non-commuting
    let (a, b) = (Scalar::from_int(2), Scalar::from_int(-3));
    let x = SigElement::stick(FiniteSet::range(1));
    let one_two = up_derivation(&up_derivation(&x, &s1, &a, &b)?, &s2, &a, &b)?;
    let two_one = up_derivation(&up_derivation(&x, &s2, &a, &b)?, &s1, &a, &b)?;
    t.record("mixed biderivation does not commute", one_two != two_one, || "u(2,-3) commuted".into());

    for r in 0..=3 {
        let y = fresh_set(r);
        for m in 1..=n {
            let i = FiniteSet::range(m);
            let stick = SigElement::stick(i.clone());
            let ok = iterated_arrow(&stick, &y, Direction::Retarded)? == retarded_element(&y, &i)?
                && iterated_arrow(&stick, &y, Direction::Advanced)? == advanced_element(&y, &i)?;
            t.record("iterated arrows match closed forms", ok, || format!("|Y|={r}, n={m}"));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for m in 1..=n.min(4) {
        for cell in enumerate_cells(&FiniteSet::range(m), &mut rng)? {
            let d = dynkin_element(&cell).into_sig();
            for r in 1..=2 {
                let y = fresh_set(r);
                for dir in [Direction::Retarded, Direction::Advanced] {
                    let moved = iterated_cell_arrow(&cell, &y, dir)?;
                    let ok = iterated_arrow(&d, &y, dir)? == dynkin_element(&moved).into_sig();
                    t.record("arrows carry Dynkin elements to Dynkin elements", ok, || {
                        format!("{dir:?} |Y|={r} on {cell}")
                    });
                }
            }
        }
    }

    for dir in [Direction::Retarded, Direction::Advanced] {
        for m in 1..=n {
            for k in 1..m {
                let (s, tt) = contiguous_split(m, k);
                let right = basis(&tt)?;
                for x in basis(&s)? {
                    let sx = curried_arrow_series(&x, 2, dir)?;
                    for y in &right {
                        let lhs = curried_arrow_series(&x.mult(y)?, 2, dir)?;
                        let rhs = sx.mult(&curried_arrow_series(y, 2, dir)?)?;
                        t.record("curried series is multiplicative", lhs == rhs, || format!("{dir:?} on {x}·{y}"));
                    }
                }
            }
        }
    }
    Ok(())
}
