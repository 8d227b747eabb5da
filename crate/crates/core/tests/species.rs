use std::collections::BTreeMap;

use num_traits::{One, Zero};
use proptest::prelude::*;
use sigma_core::species::{
    antipode_of, h_to_q, q_to_h, tensor, Assignment, DecoratedSigElement, SigElement,
};
use sigma_core::{Composition, FiniteSet, Label, Scalar};

fn c(s: &str) -> Composition {
    s.parse().unwrap()
}

fn h(s: &str) -> SigElement {
    SigElement::basis(c(s))
}

fn set(v: &[u32]) -> FiniteSet {
    v.iter().map(|&x| Label::Int(x)).collect()
}

fn lin(terms: &[(i64, i64, &str)]) -> SigElement {
    let ground = c(terms[0].2).ground();
    SigElement::from_terms(
        ground,
        terms.iter().map(|(p, q, s)| (c(s), Scalar::ratio(*p, *q))),
    )
    .unwrap()
}

#[test]
fn products() {
    assert_eq!(h("(1)").mult(&h("(2)")).unwrap(), h("(1,2)"));
    let two = h("(12)").scale(&Scalar::from_int(2));
    assert_eq!(two.mult(&h("(3)")).unwrap(), h("(12,3)").scale(&Scalar::from_int(2)));
    assert_eq!(
        h("(1)").commutator(&h("(2)")).unwrap(),
        lin(&[(1, 1, "(1,2)"), (-1, 1, "(2,1)")])
    );
    assert!(h("(1)").mult(&h("(1,2)")).is_err());
    assert!(SigElement::unit().commutator(&h("(1,2)")).unwrap().is_zero());
}

#[test]
fn coproducts() {
    let one = set(&[1]);
    let two = set(&[2]);
    let d = h("(12)").comult(&one, &two).unwrap();
    assert_eq!(d, tensor(&h("(1)"), &h("(2)")));
    let d = h("(2,1)").comult(&one, &two).unwrap();
    assert_eq!(d, tensor(&h("(1)"), &h("(2)")));
    let a = lin(&[(1, 1, "(12)"), (3, 1, "(2,1)")]);
    let d = a.comult(&FiniteSet::empty(), &set(&[1, 2])).unwrap();
    assert_eq!(d, tensor(&SigElement::unit(), &a));
    assert!(a.comult(&one, &one).is_err());
    assert!(a.comult(&one, &set(&[3])).is_err());
}

#[test]
fn antipode_examples() {
    assert_eq!(SigElement::unit().antipode(), SigElement::unit());
    assert_eq!(
        h("(12)").antipode(),
        lin(&[(-1, 1, "(12)"), (1, 1, "(1,2)"), (1, 1, "(2,1)")])
    );
    assert_eq!(h("(1)").antipode(), h("(1)").neg());
    assert_eq!(antipode_of(&c("(1,2)")), h("(2,1)"));
}

#[test]
fn q_basis_examples() {
    assert_eq!(q_to_h(&c("(1,2)")), h("(1,2)"));
    assert_eq!(
        q_to_h(&c("(12)")),
        lin(&[(1, 1, "(12)"), (-1, 2, "(1,2)"), (-1, 2, "(2,1)")])
    );
    assert_eq!(
        h_to_q(&c("(12)")),
        lin(&[(1, 1, "(12)"), (1, 2, "(1,2)"), (1, 2, "(2,1)")])
    );
    let f = c("(123,4)");
    assert_eq!(SigElement::q_basis(f.clone()).to_q_coords(), h(&f.to_string()));
}

#[test]
fn primitivity_examples() {
    assert!(q_to_h(&c("(12)")).is_primitive().unwrap());
    assert!(!h("(12)").is_primitive().unwrap());
    assert!(h("(1)").is_primitive().unwrap());
    assert!(SigElement::unit().is_primitive().is_err());
    assert!(q_to_h(&c("(1234)")).is_primitive().unwrap());
}

#[test]
fn tits_action_examples() {
    for f in ["(1,2,3)", "(12,3)", "(3,21)"] {
        assert_eq!(h(f).hopf_power_action(&c("(123)")).unwrap(), h(f));
    }
    assert_eq!(h("(123)").hopf_power_action(&c("(2,13)")).unwrap(), h("(2,13)"));
    let a = lin(&[(1, 1, "(12,3)"), (-1, 1, "(3,12)")]);
    assert_eq!(
        a.hopf_power_action(&c("(13,2)")).unwrap(),
        lin(&[(1, 1, "(1,2,3)"), (-1, 1, "(3,1,2)")])
    );
    assert!(h("(1,2)").hopf_power_action(&c("(13)")).is_err());
}

#[test]
fn relabeling() {
    let swap: BTreeMap<Label, Label> =
        [(Label::Int(1), Label::Int(2)), (Label::Int(2), Label::Int(1))].into();
    let id: BTreeMap<Label, Label> =
        [(Label::Int(1), Label::Int(1)), (Label::Int(2), Label::Int(2))].into();
    let a = lin(&[(1, 1, "(12)"), (2, 3, "(1,2)")]);
    assert_eq!(a.relabel(&id).unwrap(), a);
    assert_eq!(h("(1,2)").relabel(&swap).unwrap(), h("(2,1)"));
    assert_eq!(a.relabel(&swap).unwrap().relabel(&swap).unwrap(), a);
    let bad: BTreeMap<Label, Label> =
        [(Label::Int(1), Label::Int(3)), (Label::Int(2), Label::Int(3))].into();
    assert!(a.relabel(&bad).is_err());
}

#[test]
fn decorated_examples() {
    let a = Assignment::from_pairs([(Label::Int(1), "A")]);
    let b = Assignment::from_pairs([(Label::Int(2), "B")]);
    let ha = DecoratedSigElement::basis(c("(1)"), a.clone()).unwrap();
    let hb = DecoratedSigElement::basis(c("(2)"), b.clone()).unwrap();
    let neg = DecoratedSigElement::from_sig(&h("(1)").neg(), &a).unwrap();
    assert_eq!(ha.antipode(), neg);
    let ab = a.disjoint_union(&b).unwrap();
    assert_eq!(
        ha.mult(&hb).unwrap(),
        DecoratedSigElement::basis(c("(1,2)"), ab.clone()).unwrap()
    );
    let d = DecoratedSigElement::basis(c("(12)"), ab)
        .unwrap()
        .comult(&set(&[1]), &set(&[2]))
        .unwrap();
    assert_eq!(d.len(), 1);
    let ((left, right), coeff) = d.into_iter().next().unwrap();
    assert_eq!(left, (c("(1)"), a));
    assert_eq!(right, (c("(2)"), b));
    assert!(coeff.is_one());
    assert!(DecoratedSigElement::basis(c("(12)"), Assignment::default()).is_err());
}

#[test]
fn json_round_trip() {
    let a = lin(&[(1, 1, "(12)"), (-1, 2, "(2,1)")]);
    let s = serde_json::to_string(&a).unwrap();
    assert_eq!(
        s,
        r#"{"ground":[1,2],"terms":[{"comp":[[1,2]],"coeff":{"re":"1","im":"0"}},{"comp":[[2],[1]],"coeff":{"re":"-1/2","im":"0"}}]}"#
    );
    assert_eq!(serde_json::from_str::<SigElement>(&s).unwrap(), a);
    let bad = r#"{"ground":[1],"terms":[{"comp":[[1,2]],"coeff":{"re":"1","im":"0"}}]}"#;
    assert!(serde_json::from_str::<SigElement>(bad).is_err());
    assert_eq!(a.to_string(), "H(12) - 1/2 H(2,1)");
}

fn arb_element(n: u32) -> impl Strategy<Value = SigElement> {
    let comps: Vec<Composition> = sigma_core::setcomp::compositions(&FiniteSet::range(n))
        .unwrap()
        .collect();
    let m = comps.len();
    proptest::collection::vec((0..m, -5i64..=5, 1i64..=4), 0..6).prop_map(move |v| {
        SigElement::from_terms(
            FiniteSet::range(n),
            v.into_iter()
                .map(|(k, p, q)| (comps[k].clone(), Scalar::ratio(p, q))),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn antipode_is_involution(a in arb_element(3)) {
        prop_assert_eq!(a.antipode().antipode(), a);
    }

    #[test]
    fn q_coords_round_trip(a in arb_element(4)) {
        prop_assert_eq!(a.to_q_coords().from_q_coords(), a);
    }

    #[test]
    fn tits_action_is_idempotent(a in arb_element(3), k in 0usize..13) {
        let g = sigma_core::setcomp::compositions(&FiniteSet::range(3)).unwrap().nth(k).unwrap();
        let once = a.hopf_power_action(&g).unwrap();
        prop_assert_eq!(once.hopf_power_action(&g).unwrap(), once);
    }

    #[test]
    fn zero_coefficients_vanish(a in arb_element(2)) {
        let z = a.sub(&a).unwrap();
        prop_assert!(z.is_zero());
        prop_assert_eq!(z.counit(), Scalar::zero());
    }
}
