use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::all;
use super::{Tally, VerifyConfig};
use crate::arrows::Direction;
use crate::error::{Error, Result};
use crate::products::{
    bogoliubov_extract, evaluate, generating_function, generating_function_product, interacting_observable,
    inverse_t_exponential, respects, reverse, scattering_sides, t_exponential, tits_kernel_elements,
    verify_causal_factorization, Character, Coupling, FreeSystem, Perturbed, Registry, Source, TargetPoly,
    ToyModel, Trunc, Var,
};
use crate::setcomp::{decompositions, Label};
use crate::species::{Assignment, SigElement, Symbol};
use crate::Scalar;

const LETTERS: [&str; 8] = ["A", "B", "C", "D", "E", "F", "G", "H"];

/// Label `k` carries the `k`-th letter.
fn letters(m: usize) -> Assignment {
    Assignment::from_pairs((0..m).map(|k| (Label::Int(k as u32 + 1), LETTERS[k])))
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..m {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

fn toy(times: &[(&str, i64)], trunc: Trunc) -> Result<ToyModel> {
    let mut reg = Registry::new();
    for (s, v) in times {
        reg.insert(s, BigRational::from_integer((*v).into()))?;
    }
    Ok(ToyModel::new(reg, trunc))
}

pub(super) fn products(t: &mut Tally, config: &VerifyConfig) -> Result<()> {
    let t0 = Trunc::new(0, 0);
    let free = FreeSystem { trunc: t0 };
    for m in 0..=config.n {
        let d = letters(m);
        let ground = d.ground();
        for (s, tt) in decompositions(&ground) {
            let (ds, dt) = (d.restrict(&s), d.restrict(&tt));
            let right = all(&tt)?;
            for f in all(&s)? {
                let hf = SigElement::basis(f.clone());
                let tf = evaluate(&free, &hf, &ds)?;
                for g in &right {
                    let hg = SigElement::basis(g.clone());
                    let lhs = evaluate(&free, &hf.mult(&hg)?, &d)?;
                    let rhs = tf.mul(&evaluate(&free, &hg, &dt)?);
                    t.record("homomorphic extension", lhs == rhs, || format!("{f}·{g}"));
                }
            }
        }
        if m == 0 {
            continue;
        }
        for f in all(&ground)? {
            let mut left = TargetPoly::zero(t0);
            let mut right = TargetPoly::zero(t0);
            for (s, tt) in decompositions(&ground) {
                let fs = SigElement::basis(f.restrict(&s)?);
                let ft = SigElement::basis(f.restrict(&tt)?);
                let (ds, dt) = (d.restrict(&s), d.restrict(&tt));
                left = left.add(&evaluate(&free, &fs, &ds)?.mul(&reverse(&free, &ft, &dt)?));
                right = right.add(&reverse(&free, &fs, &ds)?.mul(&evaluate(&free, &ft, &dt)?));
            }
            t.record("inversion relations", left.is_zero() && right.is_zero(), || format!("at {f}"));
        }
    }

    let c = Coupling::default();
    let tj = Trunc::new(0, config.nj);
    let free_j = FreeSystem { trunc: tj };
    let source = [Source::new("A", Var::J)];
    let s = t_exponential(&free_j, &source, &c)?;
    let s_inv = inverse_t_exponential(&free_j, &source, &c)?;
    let one = TargetPoly::one(tj);
    t.record("exponential times inverse is one", s.mul(&s_inv) == one && s_inv.mul(&s) == one, || {
        format!("Nj={}", config.nj)
    });
    generating_functions(t, config)?;

    let ng_small = config.ng.min(1);
    let base = FreeSystem { trunc: Trunc::new(ng_small, 0) };
    for dir in [Direction::Retarded, Direction::Advanced] {
        let pert = Perturbed::new(base, "S", dir, c.clone());
        for m in 1..=config.n.min(2) {
            let d = letters(m);
            for f in all(&d.ground())? {
                let hf = SigElement::basis(f.clone());
                let ok = evaluate(&pert, &hf, &d)? == pert.evaluate_via_arrows(&hf, &d)?;
                t.record("perturbed system is the arrow transform", ok, || format!("{dir:?} at {f}"));
            }
        }
    }

    for m in 1..=config.n {
        for perm in permutations(m) {
            let times: Vec<(&str, i64)> = perm.iter().enumerate().map(|(k, &p)| (LETTERS[k], p as i64)).collect();
            let model = toy(&times, t0)?;
            let d = letters(m);
            t.record_result("causal factorization", verify_causal_factorization(&model, &d), || {
                format!("times {times:?}")
            });
            for g in all(&d.ground())? {
                if !respects(&g, &d, &model)? {
                    continue;
                }
                for a in tits_kernel_elements(&g)? {
                    t.record("Tits kernel is invisible", evaluate(&model, &a, &d)?.is_zero(), || {
                        format!("G={g}, times {times:?}")
                    });
                }
            }
        }
    }
    Ok(())
}

fn generating_functions(t: &mut Tally, config: &VerifyConfig) -> Result<()> {
    let c = Coupling::default();
    let p = FreeSystem { trunc: Trunc::new(config.ng, config.nj) };
    let (s, a) = (Symbol::from("S"), Symbol::from("A"));
    for dir in [Direction::Retarded, Direction::Advanced] {
        let name = match dir {
            Direction::Retarded => "retarded generating function",
            Direction::Advanced => "advanced generating function",
        };
        let lhs = generating_function(&p, &s, &a, &c, dir)?;
        let rhs = generating_function_product(&p, &s, &a, &c, dir)?;
        t.record(name, lhs == rhs, || format!("Ng={} Nj={}", config.ng, config.nj));
    }
    Ok(())
}

pub(super) fn bogoliubov(t: &mut Tally, config: &VerifyConfig) -> Result<()> {
    let c = Coupling::default();
    let (s, a) = (Symbol::from("S"), Symbol::from("A"));
    generating_functions(t, config)?;
    for ng in 0..=config.ng {
        let p = FreeSystem { trunc: Trunc::new(ng, config.nj.max(1)) };
        let v = generating_function(&p, &s, &a, &c, Direction::Retarded)?;
        let pert = Perturbed::new(FreeSystem { trunc: Trunc::new(ng, 0) }, "S", Direction::Retarded, c.clone());
        let extracted = bogoliubov_extract(&v, &c)?;
        let direct = interacting_observable(&pert, &a)?;
        t.record("Bogoliubov extraction", extracted == direct, || format!("Ng={ng}: {extracted} vs {direct}"));
    }
    Ok(())
}

fn character(symbols: &[&str], rng: &mut ChaCha8Rng) -> Character {
    Character::new(symbols.iter().map(|s| {
        let mut v = 0;
        while v == 0 {
            v = rng.gen_range(-5i64..=5);
        }
        (s.to_string(), Scalar::from_int(v))
    }))
}

/// `n` external labels split as outgoing `1..=k` at late times and incoming
/// at early times, with the interaction at time zero.
pub(super) fn scattering(t: &mut Tally, config: &VerifyConfig) -> Result<()> {
    let c = Coupling::default();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = config.n;
    let names: Vec<String> = (1..=n).map(|k| format!("X{k}")).collect();
    let mut times = vec![("S", 0i64)];
    for k in 0..=n {
        for (j, name) in names.iter().enumerate() {
            let time = if j < k { 10 + j as i64 } else { -10 - j as i64 };
            times.retain(|(s, _)| *s != name.as_str());
            times.push((name.as_str(), time));
        }
        let model = toy(&times, Trunc::new(config.ng, 0))?;
        let labelled = |r: std::ops::Range<usize>| {
            Assignment::from_pairs(r.map(|j| (Label::Int(j as u32 + 1), names[j].as_str())))
        };
        let (out, inc) = (labelled(0..k), labelled(k..n));
        let mut symbols: Vec<&str> = names.iter().map(String::as_str).collect();
        symbols.push("S");
        let chi = character(&symbols, &mut rng);
        let sides = scattering_sides(&model, &Symbol::from("S"), &out, &inc, &chi, &c)?;
        t.record("scattering identity", sides.holds(), || {
            format!("{k} outgoing: {} vs {}", sides.green, sides.amplitude)
        });
        let mut vanishing = chi.clone();
        vanishing.set("S", Scalar::from_int(0));
        let sides = scattering_sides(&model, &Symbol::from("S"), &out, &inc, &vanishing, &c)?;
        t.record("scattering identity with vanishing interaction", sides.holds(), || format!("{k} outgoing"));
        if k > 0 && k < n {
            let refused = matches!(
                scattering_sides(&model, &Symbol::from("S"), &inc, &out, &chi, &c),
                Err(Error::NotRespecting(_))
            );
            t.record("non-respecting configuration refused", refused, || format!("{k} outgoing"));
        }
    }
    Ok(())
}

/// Scattering checks on a caller-supplied model: labels later than the
/// interaction are outgoing, earlier ones incoming.
pub(super) fn scattering_scenario(
    t: &mut Tally,
    model: &ToyModel,
    interaction: &Symbol,
    externals: &Assignment,
    chi: &Character,
) -> Result<()> {
    let c = Coupling::default();
    let at = model.registry.time(interaction)?.clone();
    let (mut out, mut inc) = (Vec::new(), Vec::new());
    for (l, s) in externals.iter() {
        let time = model.registry.time(s)?;
        if *time == at {
            return Err(Error::NotRespecting(format!("{l} is simultaneous with the interaction")));
        }
        let side = if *time > at { &mut out } else { &mut inc };
        side.push((l.clone(), s.clone()));
    }
    let (out, inc) = (Assignment::new(out.into_iter().collect()), Assignment::new(inc.into_iter().collect()));
    let sides = scattering_sides(model, interaction, &out, &inc, chi, &c)?;
    t.record("scattering identity", sides.holds(), || format!("{} vs {}", sides.green, sides.amplitude));
    let mut vanishing = chi.clone();
    vanishing.set(interaction, Scalar::from_int(0));
    let sides = scattering_sides(model, interaction, &out, &inc, &vanishing, &c)?;
    t.record("scattering identity with vanishing interaction", sides.holds(), || {
        format!("{} vs {}", sides.green, sides.amplitude)
    });
    if !out.ground().is_empty() && !inc.ground().is_empty() {
        let refused = matches!(
            scattering_sides(model, interaction, &inc, &out, chi, &c),
            Err(Error::NotRespecting(_))
        );
        t.record("non-respecting configuration refused", refused, String::new);
    }
    Ok(())
}

/// Causal factorization and the Tits kernel on a caller-supplied model.
pub(super) fn causal_scenario(t: &mut Tally, model: &ToyModel, decorations: &Assignment) -> Result<()> {
    t.record_result("causal factorization", verify_causal_factorization(model, decorations), String::new);
    for g in all(&decorations.ground())? {
        if !respects(&g, decorations, model)? {
            continue;
        }
        for a in tits_kernel_elements(&g)? {
            t.record("Tits kernel is invisible", evaluate(model, &a, decorations)?.is_zero(), || format!("G={g}"));
        }
    }
    Ok(())
}
