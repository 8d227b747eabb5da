use std::collections::BTreeMap;

use num_traits::Zero;

use super::Tally;
use crate::error::Result;
use crate::setcomp::{compositions, decompositions, Composition, FiniteSet};
use crate::species::{accumulate, tensor, Assignment, Coproduct, DecoratedSigElement, SigElement};
use crate::Scalar;

/// Number of compositions of an `n`-set, `n = 0..=8`.
pub const COMPOSITION_COUNTS: [u64; 9] = [1, 1, 3, 13, 75, 541, 4683, 47293, 545835];

pub(super) fn all(ground: &FiniteSet) -> Result<Vec<Composition>> {
    Ok(compositions(ground)?.collect())
}

/// Ordered triples `(R, S, T)` of pairwise disjoint sets covering `ground`.
fn triples(ground: &FiniteSet) -> Vec<(FiniteSet, FiniteSet, FiniteSet)> {
    let mut out = Vec::new();
    for (r, st) in decompositions(ground) {
        for (s, t) in decompositions(&st) {
            out.push((r.clone(), s, t));
        }
    }
    out
}

fn counit_element(ground: &FiniteSet) -> SigElement {
    if ground.is_empty() {
        SigElement::unit()
    } else {
        SigElement::zero(ground.clone())
    }
}

type Triple = BTreeMap<(Composition, Composition, Composition), Scalar>;

fn coassoc_left(f: &Composition, r: &FiniteSet, s: &FiniteSet, t: &FiniteSet) -> Result<Triple> {
    let mut out = Triple::new();
    for ((x, y), c) in SigElement::basis(f.clone()).comult(&r.union(s), t)? {
        for ((a, b), d) in SigElement::basis(x).comult(r, s)? {
            accumulate(&mut out, (a, b, y.clone()), &(&c * &d));
        }
    }
    Ok(out)
}

fn coassoc_right(f: &Composition, r: &FiniteSet, s: &FiniteSet, t: &FiniteSet) -> Result<Triple> {
    let mut out = Triple::new();
    for ((x, y), c) in SigElement::basis(f.clone()).comult(r, &s.union(t))? {
        for ((a, b), d) in SigElement::basis(y).comult(s, t)? {
            accumulate(&mut out, (x.clone(), a, b), &(&c * &d));
        }
    }
    Ok(out)
}

/// `Δ_{S,T}(a)·Δ_{S,T}(b)` computed factorwise.
fn product_of_coproducts(a: &SigElement, b: &SigElement, s: &FiniteSet, t: &FiniteSet) -> Result<Coproduct> {
    let (sa, sb) = (a.ground(), b.ground());
    let da = a.comult(&s.intersection(sa), &t.intersection(sa))?;
    let db = b.comult(&s.intersection(sb), &t.intersection(sb))?;
    let mut out = Coproduct::new();
    for ((a1, a2), x) in &da {
        for ((b1, b2), y) in &db {
            accumulate(&mut out, (a1.concat(b1)?, a2.concat(b2)?), &(x * y));
        }
    }
    Ok(out)
}

/// Every map from `ground` to the two symbols `A`, `B`.
fn two_colorings(ground: &FiniteSet) -> Vec<Assignment> {
    (0u64..1 << ground.len())
        .map(|mask| {
            Assignment::from_pairs(
                ground
                    .iter()
                    .enumerate()
                    .map(|(k, l)| (l.clone(), if mask >> k & 1 == 1 { "B" } else { "A" })),
            )
        })
        .collect()
}

pub(super) fn hopf(t: &mut Tally, n: usize) -> Result<()> {
    for m in 0..=n {
        let ground = FiniteSet::range(m as u32);
        let basis = all(&ground)?;
        if let Some(&expected) = COMPOSITION_COUNTS.get(m) {
            t.equal("dimension", basis.len() as u64, expected);
        }
        let unit = SigElement::unit();
        let eps = counit_element(&ground);
        for f in &basis {
            let hf = SigElement::basis(f.clone());
            let unit_ok = unit.mult(&hf)? == hf && hf.mult(&unit)? == hf;
            t.record("unit", unit_ok, || format!("at {f}"));
            let counit_ok = hf.counit() == if m == 0 { Scalar::from_int(1) } else { Scalar::zero() }
                && hf.comult(&ground, &FiniteSet::empty())? == tensor(&hf, &unit)
                && hf.comult(&FiniteSet::empty(), &ground)? == tensor(&unit, &hf);
            t.record("counit", counit_ok, || format!("at {f}"));
            t.record("antipode involution", hf.antipode().antipode() == hf, || format!("at {f}"));

            let mut left = SigElement::zero(ground.clone());
            let mut right = SigElement::zero(ground.clone());
            for (s, tt) in decompositions(&ground) {
                let fs = SigElement::basis(f.restrict(&s)?);
                let ft = SigElement::basis(f.restrict(&tt)?);
                left.axpy(&Scalar::from_int(1), &fs.mult(&ft.antipode())?)?;
                right.axpy(&Scalar::from_int(1), &fs.antipode().mult(&ft)?)?;
            }
            t.record("inversion relation H·H̄", left == eps, || format!("at {f}: {left}"));
            t.record("inversion relation H̄·H", right == eps, || format!("at {f}: {right}"));

            for (r, s, tt) in triples(&ground) {
                let ok = coassoc_left(f, &r, &s, &tt)? == coassoc_right(f, &r, &s, &tt)?;
                t.record("coassociativity", ok, || format!("at {f} over ({r},{s},{tt})"));
            }

            for a in two_colorings(&ground) {
                let d = DecoratedSigElement::basis(f.clone(), a.clone())?;
                let expected = DecoratedSigElement::from_sig(&hf.antipode(), &a)?;
                t.record("decorated antipode", d.antipode() == expected, || format!("at {f}"));
                let mut sum = DecoratedSigElement::zero(ground.clone());
                for (s, tt) in decompositions(&ground) {
                    let ds = DecoratedSigElement::basis(f.restrict(&s)?, a.restrict(&s))?;
                    let dt = DecoratedSigElement::basis(f.restrict(&tt)?, a.restrict(&tt))?;
                    sum = sum.add(&ds.mult(&dt.antipode())?)?;
                }
                let expected = if m == 0 {
                    DecoratedSigElement::basis(Composition::empty(), Assignment::default())?
                } else {
                    DecoratedSigElement::zero(ground.clone())
                };
                t.record("decorated inversion relation", sum == expected, || format!("at {f}"));
            }
        }

        for (r, s, tt) in triples(&ground) {
            for f in all(&r)? {
                for g in all(&s)? {
                    let fg = SigElement::basis(f.concat(&g)?);
                    for h in all(&tt)? {
                        let hh = SigElement::basis(h.clone());
                        let lhs = fg.mult(&hh)?;
                        let rhs = SigElement::basis(f.clone()).mult(&SigElement::basis(g.clone()).mult(&hh)?)?;
                        t.record("associativity", lhs == rhs, || format!("({f}·{g})·{h}"));
                    }
                }
            }
        }

        for (s1, t1) in decompositions(&ground) {
            for f in all(&s1)? {
                for g in all(&t1)? {
                    let (hf, hg) = (SigElement::basis(f.clone()), SigElement::basis(g.clone()));
                    let fg = hf.mult(&hg)?;
                    for (s, tt) in decompositions(&ground) {
                        let ok = fg.comult(&s, &tt)? == product_of_coproducts(&hf, &hg, &s, &tt)?;
                        t.record("bimonoid compatibility", ok, || format!("Δ_({s},{tt})({f}·{g})"));
                    }
                }
            }
        }
    }
    Ok(())
}

pub(super) fn qbasis(t: &mut Tally, n: usize) -> Result<()> {
    for m in 0..=n {
        let ground = FiniteSet::range(m as u32);
        let basis = all(&ground)?;
        for f in &basis {
            let hf = SigElement::basis(f.clone());
            t.record("H to Q to H round trip", hf.to_q_coords().from_q_coords() == hf, || format!("at {f}"));
            t.record(
                "Q to H to Q round trip",
                SigElement::q_basis(f.clone()).to_q_coords() == hf,
                || format!("at {f}"),
            );
            let q = SigElement::q_basis(f.clone());
            for (s, tt) in decompositions(&ground) {
                let expected = match f.deshuffle(&s) {
                    Some(fs) => tensor(&SigElement::q_basis(fs), &SigElement::q_basis(f.restrict(&tt)?)),
                    None => Coproduct::new(),
                };
                t.record("Q deshuffle coproduct", q.comult(&s, &tt)? == expected, || {
                    format!("Δ_({s},{tt}) Q_{f}")
                });
            }
        }
        for (s1, t1) in decompositions(&ground) {
            let right = all(&t1)?;
            for f in all(&s1)? {
                let qf = SigElement::q_basis(f.clone());
                for g in &right {
                    let ok = qf.mult(&SigElement::q_basis(g.clone()))? == SigElement::q_basis(f.concat(g)?);
                    t.record("Q product is concatenation", ok, || format!("Q_{f}·Q_{g}"));
                }
            }
        }
    }
    Ok(())
}
