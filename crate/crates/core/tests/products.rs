use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use sigma_core::arrows::Direction;
use sigma_core::products::{
    a_product, bogoliubov_extract, constant_assignment, evaluate, generalized_r,
    generating_function, generating_function_product, green_function, interacting_observable,
    inverse_t_exponential, r_product, respects, reverse, s_matrix_pair, scattering_sides,
    stability_holds, t_exponential, tits_kernel_elements, verify_causal_factorization,
    Character, Coupling, FreeSystem, Monomial, Perturbed, ProductSystem, Registry, Renormalized,
    ScalarSeries, Source, TargetPoly, ToyModel, Trunc, Var, VertexMap,
};
use sigma_core::setcomp::{compositions, decompositions};
use sigma_core::species::{Assignment, SigElement, Symbol};
use sigma_core::zie::{dynkin_element, Cell, Tree, ZieElement};
use sigma_core::{Composition, Error, FiniteSet, Label, Scalar};

fn c(s: &str) -> Composition {
    s.parse().unwrap()
}

fn h(s: &str) -> SigElement {
    SigElement::basis(c(s))
}

fn sym(s: &str) -> Symbol {
    Symbol::from(s)
}

fn t(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn name(s: &str) -> Label {
    Label::name(s).unwrap()
}

fn dec(pairs: &[(Label, &str)]) -> Assignment {
    Assignment::from_pairs(pairs.iter().map(|(l, s)| (l.clone(), *s)))
}

fn int_dec(symbols: &[&str]) -> Assignment {
    Assignment::from_pairs(
        symbols
            .iter()
            .enumerate()
            .map(|(k, s)| (Label::Int(k as u32 + 1), *s)),
    )
}

fn w(trunc: Trunc, letters: &[&str]) -> TargetPoly {
    TargetPoly::word(trunc, letters.iter().map(|s| sym(s)).collect())
}

const T0: Trunc = Trunc { g: 0, j: 0 };

fn toy(pairs: &[(&str, i64)], trunc: Trunc) -> ToyModel {
    let mut reg = Registry::new();
    for (s, time) in pairs {
        reg.insert(s, t(*time)).unwrap();
    }
    ToyModel::new(reg, trunc)
}

fn free(trunc: Trunc) -> FreeSystem {
    FreeSystem { trunc }
}

#[test]
fn toy_components() {
    let model = toy(&[("A", 2), ("B", 1)], T0);
    assert_eq!(model.component(&dec(&[(name("a"), "A")])).unwrap(), w(T0, &["A"]));
    let ab = dec(&[(name("a"), "A"), (name("b"), "B")]);
    let ba = dec(&[(name("a"), "B"), (name("b"), "A")]);
    assert_eq!(model.component(&ab).unwrap(), w(T0, &["A", "B"]));
    assert_eq!(model.component(&ba).unwrap(), w(T0, &["A", "B"]));
    assert!(!model.has_ties(&ab).unwrap());
    let tied = toy(&[("A", 1), ("B", 1)], T0);
    assert!(tied.has_ties(&ab).unwrap());
    assert!(matches!(
        model.component(&dec(&[(name("a"), "Z")])),
        Err(Error::UnknownDecoration(_))
    ));
}

#[test]
fn generalized_products() {
    let model = toy(&[("A", 1), ("B", 2)], T0);
    let d = dec(&[(name("a"), "A"), (name("b"), "B")]);
    assert_eq!(
        evaluate(&model, &SigElement::stick(d.ground()), &d).unwrap(),
        model.component(&d).unwrap()
    );
    assert_eq!(evaluate(&model, &h("(a,b)"), &d).unwrap(), w(T0, &["A", "B"]));
    // Q_(ab) = H_(ab) - 1/2 H_(a,b) - 1/2 H_(b,a)
    let q = SigElement::q_basis(c("(a b)"));
    let half = Scalar::ratio(1, 2);
    let expected = w(T0, &["B", "A"]).scale(&half).sub(&w(T0, &["A", "B"]).scale(&half));
    assert_eq!(evaluate(&model, &q, &d).unwrap(), expected);
    assert!(matches!(
        evaluate(&model, &h("(a,b,c)"), &d),
        Err(Error::IncompleteAssignment(_))
    ));
}

#[test]
fn reverse_products() {
    let p = free(T0);
    let one = int_dec(&["A"]);
    assert_eq!(reverse(&p, &h("(1)"), &one).unwrap(), w(T0, &["A"]).scale(&-Scalar::one()));
    let two = int_dec(&["A", "B"]);
    let got = reverse(&p, &h("(12)"), &two).unwrap();
    let expected = w(T0, &["[A B]"])
        .scale(&-Scalar::one())
        .add(&w(T0, &["A", "B"]))
        .add(&w(T0, &["B", "A"]));
    assert_eq!(got, expected);
    assert_eq!(got.terms().len(), 3);
}

#[test]
fn homomorphic_extension() {
    let p = free(T0);
    let symbols = ["A", "B", "C"];
    for n in 1..=3usize {
        let d = int_dec(&symbols[..n]);
        let ground = d.ground();
        for (s, tt) in decompositions(&ground) {
            for f in compositions(&s).unwrap() {
                for g in compositions(&tt).unwrap() {
                    let (hf, hg) = (SigElement::basis(f.clone()), SigElement::basis(g.clone()));
                    let lhs = evaluate(&p, &hf.mult(&hg).unwrap(), &d).unwrap();
                    let rhs = evaluate(&p, &hf, &d.restrict(&s))
                        .unwrap()
                        .mul(&evaluate(&p, &hg, &d.restrict(&tt)).unwrap());
                    assert_eq!(lhs, rhs, "{f}·{g}");
                }
            }
        }
    }
}

#[test]
fn inversion_relations() {
    let p = free(T0);
    let symbols = ["A", "B", "C"];
    for n in 1..=3usize {
        let d = int_dec(&symbols[..n]);
        let ground = d.ground();
        for f in compositions(&ground).unwrap() {
            let mut left = TargetPoly::zero(T0);
            let mut right = TargetPoly::zero(T0);
            for (s, tt) in decompositions(&ground) {
                let fs = SigElement::basis(f.restrict(&s).unwrap());
                let ft = SigElement::basis(f.restrict(&tt).unwrap());
                let (ds, dt) = (d.restrict(&s), d.restrict(&tt));
                left = left.add(
                    &evaluate(&p, &fs, &ds).unwrap().mul(&reverse(&p, &ft, &dt).unwrap()),
                );
                right = right.add(
                    &reverse(&p, &fs, &ds).unwrap().mul(&evaluate(&p, &ft, &dt).unwrap()),
                );
            }
            assert!(left.is_zero(), "T·T̄ at {f}: {left}");
            assert!(right.is_zero(), "T̄·T at {f}: {right}");
        }
    }
}

#[test]
fn generalized_r_products() {
    let p = free(T0);
    let one = int_dec(&["A"]);
    let q = ZieElement::new(SigElement::q_basis(c("(1)"))).unwrap();
    assert_eq!(generalized_r(&p, &q, &one).unwrap(), w(T0, &["A"]));

    let two = int_dec(&["A", "B"]);
    let cell = Cell::from_channels(&FiniteSet::range(2), [FiniteSet::range(1)]).unwrap();
    let got = generalized_r(&p, &dynkin_element(&cell), &two).unwrap();
    assert_eq!(got, w(T0, &["[A B]"]).sub(&w(T0, &["B", "A"])));

    // Lie morphism on tree generators
    let pairs = [("[1]", "[2,3]"), ("[1,2]", "[3]"), ("[2]", "[1,3]"), ("[1]", "[2]"), ("[13]", "[2]")];
    let d = int_dec(&["A", "B", "C"]);
    for (x, y) in pairs {
        let zx = x.parse::<Tree>().unwrap().to_q();
        let zy = y.parse::<Tree>().unwrap().to_q();
        let bracket = zx.bracket(&zy).unwrap();
        let dx = d.restrict(zx.as_sig().ground());
        let dy = d.restrict(zy.as_sig().ground());
        let dxy = dx.disjoint_union(&dy).unwrap();
        let lhs = generalized_r(&p, &bracket, &dxy).unwrap();
        let rhs = generalized_r(&p, &zx, &dx)
            .unwrap()
            .commutator(&generalized_r(&p, &zy, &dy).unwrap());
        assert_eq!(lhs, rhs, "[{x},{y}]");
    }
}

#[test]
fn r_and_a_products() {
    let p = free(T0);
    let i = int_dec(&["A"]);
    let empty = Assignment::default();
    assert_eq!(r_product(&p, &empty, &i).unwrap(), p.component(&i).unwrap());
    let y = dec(&[(Label::Fresh(1), "S")]);
    let yi = y.disjoint_union(&i).unwrap();
    let joint = p.component(&yi).unwrap();
    let (ts, ta) = (p.component(&y).unwrap(), p.component(&i).unwrap());
    assert_eq!(r_product(&p, &y, &i).unwrap(), joint.sub(&ts.mul(&ta)));
    assert_eq!(a_product(&p, &y, &i).unwrap(), joint.sub(&ta.mul(&ts)));
}

#[test]
fn t_exponentials_are_inverse() {
    let trunc = Trunc::new(0, 3);
    let p = free(trunc);
    let cpl = Coupling::default();
    let src = [Source::new("A", Var::J)];
    let s = t_exponential(&p, &src, &cpl).unwrap();
    let s_inv = inverse_t_exponential(&p, &src, &cpl).unwrap();
    let one = TargetPoly::one(trunc);
    assert_eq!(s.mul(&s_inv), one);
    assert_eq!(s_inv.mul(&s), one);
    assert_eq!(s.coefficient_of(Var::J, 0), TargetPoly::one(Trunc::new(0, 0)));
    // order 1: c j A with c = -i ℏ^{-1}
    let m = Monomial {
        word: vec![sym("A")],
        hbar: -1,
        g: 0,
        j: 1,
    };
    assert_eq!(s.coeff(&m), -Scalar::i());
    assert_eq!(s_inv.coeff(&m), Scalar::i());
}

#[test]
fn perturbed_system() {
    let trunc0 = Trunc::new(0, 0);
    let base0 = free(trunc0);
    let i = int_dec(&["A"]);
    let unperturbed = Perturbed::new(base0, "S", Direction::Retarded, Coupling::default());
    assert_eq!(unperturbed.component(&i).unwrap(), base0.component(&i).unwrap());

    let trunc = Trunc::new(2, 0);
    let base = free(trunc);
    let pert = Perturbed::new(base, "S", Direction::Retarded, Coupling::default());
    let got = pert.component(&i).unwrap().coefficient_of(Var::G, 1);
    // c (T(S A) - T(S) T(A))
    let expected = w(Trunc::new(0, 0), &["[A S]"])
        .sub(&w(Trunc::new(0, 0), &["S", "A"]))
        .times_coupling(&Coupling::default());
    assert_eq!(got, expected);

    for dir in [Direction::Retarded, Direction::Advanced] {
        let pert = Perturbed::new(base, "S", dir, Coupling::default());
        let d = int_dec(&["A", "B"]);
        for f in compositions(&d.ground()).unwrap() {
            let hf = SigElement::basis(f.clone());
            assert_eq!(
                evaluate(&pert, &hf, &d).unwrap(),
                pert.evaluate_via_arrows(&hf, &d).unwrap(),
                "homomorphism at {f}"
            );
        }
    }
}

#[test]
fn generating_function_identity() {
    let cpl = Coupling::default();
    let (s, a) = (sym("S"), sym("A"));
    for (ng, nj) in [(0, 2), (2, 2), (1, 3)] {
        let p = free(Trunc::new(ng, nj));
        for dir in [Direction::Retarded, Direction::Advanced] {
            let lhs = generating_function(&p, &s, &a, &cpl, dir).unwrap();
            let rhs = generating_function_product(&p, &s, &a, &cpl, dir).unwrap();
            assert_eq!(lhs, rhs, "Ng={ng} Nj={nj} {dir:?}");
            assert_eq!(
                rhs.coefficient_of(Var::J, 0),
                TargetPoly::one(Trunc::new(ng, 0)),
                "j^0 part"
            );
        }
    }
    let p = free(Trunc::new(0, 2));
    assert_eq!(
        generating_function(&p, &s, &a, &cpl, Direction::Retarded).unwrap(),
        t_exponential(&p, &[Source::new("A", Var::J)], &cpl).unwrap()
    );
}

#[test]
fn bogoliubov_formula() {
    let cpl = Coupling::default();
    let (s, a) = (sym("S"), sym("A"));
    for ng in 0..=2 {
        let p = free(Trunc::new(ng, 1));
        let v = generating_function(&p, &s, &a, &cpl, Direction::Retarded).unwrap();
        let extracted = bogoliubov_extract(&v, &cpl).unwrap();
        let pert = Perturbed::new(free(Trunc::new(ng, 0)), "S", Direction::Retarded, cpl.clone());
        assert_eq!(extracted, interacting_observable(&pert, &a).unwrap(), "Ng={ng}");
        if ng == 0 {
            assert_eq!(extracted, w(Trunc::new(0, 0), &["A"]));
        }
    }
    let p = free(Trunc::new(1, 0));
    let v = generating_function(&p, &s, &a, &cpl, Direction::Retarded).unwrap();
    assert!(matches!(
        bogoliubov_extract(&v, &cpl),
        Err(Error::InsufficientTruncation { .. })
    ));
}

#[test]
fn respecting_compositions() {
    let model = toy(&[("A", 2), ("B", 1)], T0);
    let d = dec(&[(name("a"), "A"), (name("b"), "B")]);
    assert!(respects(&c("(a b)"), &d, &model).unwrap());
    assert!(respects(&c("(a,b)"), &d, &model).unwrap());
    assert!(!respects(&c("(b,a)"), &d, &model).unwrap());
}

fn permutations(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for k in 1..=n as i64 {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=p.len() {
                let mut q: Vec<i64> = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

#[test]
fn causal_factorization_all_orders() {
    let symbols = ["A", "B", "C", "D"];
    for n in 1..=4usize {
        for times in permutations(n) {
            let pairs: Vec<(&str, i64)> = symbols[..n].iter().cloned().zip(times).collect();
            let model = toy(&pairs, T0);
            let d = int_dec(&symbols[..n]);
            assert!(verify_causal_factorization(&model, &d).unwrap(), "{pairs:?}");
        }
    }
}

#[test]
fn tits_kernel_is_invisible() {
    let model = toy(&[("A", 3), ("B", 2), ("C", 1)], T0);
    let d = int_dec(&["A", "B", "C"]);
    let mut checked = 0;
    for g in compositions(&d.ground()).unwrap() {
        if !respects(&g, &d, &model).unwrap() {
            continue;
        }
        for a in tits_kernel_elements(&g).unwrap() {
            assert!(a.tits(&SigElement::basis(g.clone())).unwrap().is_zero());
            assert!(evaluate(&model, &a, &d).unwrap().is_zero());
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn characters_and_stability() {
    let trunc = Trunc::new(2, 0);
    let chi = Character::new([
        ("A".to_string(), Scalar::from_int(3)),
        ("B".to_string(), Scalar::zero()),
        ("S".to_string(), Scalar::ratio(1, 2)),
        ("[A S]".to_string(), Scalar::from_int(5)),
        ("[S S]".to_string(), Scalar::from_int(-1)),
    ]);
    let killed = w(trunc, &["A", "B"]);
    assert!(chi.apply(&killed).unwrap().is_zero());
    let ab = chi.apply(&w(trunc, &["A", "S"])).unwrap();
    assert_eq!(ab.coeff(0, 0, 0), Scalar::ratio(3, 2));

    let p = free(trunc);
    let (s, s_inv) = s_matrix_pair(&p, &sym("S"), &Coupling::default()).unwrap();
    let observables = [
        w(trunc, &["A"]),
        w(trunc, &["A", "S"]).add(&w(trunc, &["[A S]"]).scale(&Scalar::i())),
        TargetPoly::one(trunc).add(&w(trunc, &["S", "B", "A"])),
    ];
    for o in &observables {
        assert!(stability_holds(&chi, o, &s, &s_inv).unwrap());
    }
}

#[test]
fn scalar_series_inverse() {
    let trunc = Trunc::new(2, 1);
    let p = TargetPoly::from_terms(
        trunc,
        [
            (Monomial::word(vec![]), Scalar::one()),
            (
                Monomial {
                    word: vec![],
                    hbar: -1,
                    g: 1,
                    j: 0,
                },
                Scalar::from_int(2),
            ),
        ],
    );
    let chi = Character::default();
    let x = chi.apply(&p).unwrap();
    let inv = x.inverse().unwrap();
    assert_eq!(x.mul(&inv), ScalarSeries::one(trunc));
    let bad = x.add(&x);
    assert!(matches!(bad.inverse(), Err(Error::NotInvertible)));
}

fn scattering_model(n_out: usize, n_in: usize, ng: u32) -> (ToyModel, Assignment, Assignment) {
    let mut pairs = vec![("S", 0)];
    let outs = ["O1", "O2"];
    let ins = ["P1", "P2"];
    for (k, s) in outs[..n_out].iter().enumerate() {
        pairs.push((s, 10 + k as i64));
    }
    for (k, s) in ins[..n_in].iter().enumerate() {
        pairs.push((s, -10 - k as i64));
    }
    let model = toy(&pairs, Trunc::new(ng, 0));
    let out = Assignment::from_pairs(outs[..n_out].iter().enumerate().map(|(k, s)| (Label::Int(k as u32 + 1), *s)));
    let inc = Assignment::from_pairs(
        ins[..n_in]
            .iter()
            .enumerate()
            .map(|(k, s)| (Label::Int(n_out as u32 + k as u32 + 1), *s)),
    );
    (model, out, inc)
}

#[test]
fn scattering_identity() {
    let cpl = Coupling::default();
    let chi = Character::new(
        [("S", 2), ("O1", 3), ("O2", -1), ("P1", 5), ("P2", 7)]
            .into_iter()
            .map(|(s, v)| (s.to_string(), Scalar::from_int(v))),
    );
    for (n_out, n_in) in [(1, 1), (2, 1), (1, 2), (0, 2)] {
        for ng in 0..=2 {
            let (model, out, inc) = scattering_model(n_out, n_in, ng);
            let sides = scattering_sides(&model, &sym("S"), &out, &inc, &chi, &cpl).unwrap();
            assert!(sides.holds(), "out={n_out} in={n_in} Ng={ng}: {} vs {}", sides.green, sides.amplitude);
            if ng == 0 {
                let all = out.disjoint_union(&inc).unwrap();
                let direct = chi.apply(&model.component(&all).unwrap()).unwrap();
                assert_eq!(sides.green, direct);
            }
        }
    }
    // vanishing interaction expectation
    let chi0 = Character::new(
        [("S", 0), ("O1", 3), ("P1", 5)]
            .into_iter()
            .map(|(s, v)| (s.to_string(), Scalar::from_int(v))),
    );
    let (model, out, inc) = scattering_model(1, 1, 2);
    assert!(scattering_sides(&model, &sym("S"), &out, &inc, &chi0, &cpl).unwrap().holds());
    // interaction outside the window
    let (model, out, inc) = scattering_model(1, 1, 1);
    assert!(matches!(
        scattering_sides(&model, &sym("S"), &inc, &out, &chi, &cpl),
        Err(Error::NotRespecting(_))
    ));
    let g = green_function(&model, &sym("S"), &out.disjoint_union(&inc).unwrap(), &chi, &cpl).unwrap();
    assert!(!g.is_zero());
}

fn combo(pairs: &[(&str, i64)]) -> BTreeMap<Symbol, Scalar> {
    pairs.iter().map(|(s, v)| (sym(s), Scalar::from_int(*v))).collect()
}

#[test]
fn vertex_renormalization() {
    let p = free(T0);
    let id = Renormalized {
        base: p,
        z: VertexMap::identity(),
    };
    for n in 1..=3usize {
        let d = int_dec(&["A", "B", "C"][..n]);
        assert_eq!(id.component(&d).unwrap(), p.component(&d).unwrap());
    }
    let z = VertexMap::new(BTreeMap::new(), [(vec![sym("A"), sym("B")], combo(&[("V", 1)]))]).unwrap();
    let ren = Renormalized { base: p, z };
    let d = int_dec(&["A", "B"]);
    let expected = w(T0, &["[A B]"]).add(&w(T0, &["V"]));
    assert_eq!(ren.component(&d).unwrap(), expected);

    assert!(VertexMap::new(BTreeMap::new(), [(vec![sym("A")], combo(&[("V", 1)]))]).is_err());
    let singular: BTreeMap<Symbol, _> = [(sym("A"), combo(&[("B", 1)])), (sym("B"), combo(&[("A", 2), ("B", 0)]))]
        .into_iter()
        .collect();
    assert!(VertexMap::new(singular.clone(), []).is_ok());
    let degenerate: BTreeMap<Symbol, _> =
        [(sym("A"), combo(&[("B", 1)])), (sym("B"), combo(&[("B", 1)]))].into_iter().collect();
    assert!(matches!(
        VertexMap::new(degenerate, []),
        Err(Error::MalformedVertexMap(_))
    ));
}

#[test]
fn vertex_maps_compose() {
    let p = free(T0);
    let z1 = VertexMap::new(
        [(sym("A"), combo(&[("A", 2), ("B", 1)]))].into_iter().collect(),
        [
            (vec![sym("A"), sym("B")], combo(&[("V", 1)])),
            (vec![sym("A"), sym("A")], combo(&[("B", -1), ("V", 3)])),
            (vec![sym("A"), sym("B"), sym("V")], combo(&[("A", 1)])),
        ],
    )
    .unwrap();
    let z2 = VertexMap::new(
        [(sym("B"), combo(&[("B", -1)]))].into_iter().collect(),
        [
            (vec![sym("B"), sym("B")], combo(&[("A", 1), ("V", -2)])),
            (vec![sym("A"), sym("V")], combo(&[("B", 5)])),
        ],
    )
    .unwrap();
    let composed = z1.compose(&z2, 3).unwrap();
    let twice = Renormalized {
        base: Renormalized { base: p, z: z1 },
        z: z2,
    };
    let once = Renormalized { base: p, z: composed };
    let symbols = ["A", "B", "V"];
    for n in 1..=3usize {
        let mut idx = vec![0usize; n];
        loop {
            let chosen: Vec<&str> = idx.iter().map(|&k| symbols[k]).collect();
            let d = int_dec(&chosen);
            assert_eq!(twice.component(&d).unwrap(), once.component(&d).unwrap(), "{chosen:?}");
            let mut pos = 0;
            while pos < n {
                idx[pos] += 1;
                if idx[pos] < symbols.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
}

#[test]
fn target_poly_json() {
    let trunc = Trunc::new(1, 2);
    let p = TargetPoly::from_terms(
        trunc,
        [(
            Monomial {
                word: vec![sym("A"), sym("B")],
                hbar: -2,
                g: 1,
                j: 2,
            },
            Scalar::ratio(1, 2),
        )],
    );
    let json = serde_json::to_string(&p).unwrap();
    assert_eq!(
        json,
        r#"{"trunc":{"g":1,"j":2},"terms":[{"word":["A","B"],"hbar":-2,"g":1,"j":2,"coeff":{"re":"1/2","im":"0"}}]}"#
    );
    let back: TargetPoly = serde_json::from_str(&json).unwrap();
    assert_eq!(back, p);
    let over = r#"{"trunc":{"g":0,"j":0},"terms":[{"word":[],"hbar":0,"g":1,"j":0,"coeff":{"re":"1","im":"0"}}]}"#;
    assert!(serde_json::from_str::<TargetPoly>(over).is_err());
}

fn relabel_map(ground: &FiniteSet, perm: &[usize], fresh_base: u32) -> BTreeMap<Label, Label> {
    ground
        .iter()
        .zip(perm)
        .map(|(l, &k)| (l.clone(), Label::Int(fresh_base + k as u32)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn systems_are_equivariant(
        n in 1usize..=4,
        seed_perm in proptest::sample::subsequence((0usize..4).collect::<Vec<_>>(), 4).prop_shuffle(),
        symbols in proptest::collection::vec(0usize..3, 4),
    ) {
        let names = ["A", "B", "S"];
        let chosen: Vec<&str> = symbols[..n].iter().map(|&k| names[k]).collect();
        let d = int_dec(&chosen);
        let perm: Vec<usize> = seed_perm.iter().cloned().filter(|&k| k < n).collect();
        let map = relabel_map(&d.ground(), &perm, 20);
        let moved = d.relabel(&map).unwrap();
        let model = toy(&[("A", 3), ("B", -1), ("S", 1)], Trunc::new(1, 0));
        prop_assert_eq!(model.component(&d).unwrap(), model.component(&moved).unwrap());
        let p = free(Trunc::new(1, 0));
        prop_assert_eq!(p.component(&d).unwrap(), p.component(&moved).unwrap());
        let pert = Perturbed::new(p, "S", Direction::Retarded, Coupling::default());
        prop_assert_eq!(pert.component(&d).unwrap(), pert.component(&moved).unwrap());
        let a = SigElement::stick(d.ground()).antipode();
        let b = a.relabel(&map).unwrap();
        prop_assert_eq!(evaluate(&p, &a, &d).unwrap(), evaluate(&p, &b, &moved).unwrap());
    }
}

#[test]
fn constant_assignments() {
    let a = constant_assignment(&FiniteSet::range(2), &sym("S"));
    assert_eq!(a.get(&Label::Int(2)).unwrap().as_ref(), "S");
}
