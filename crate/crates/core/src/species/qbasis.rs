use num_traits::One;

use super::SigElement;
use crate::setcomp::{refinements, Composition};
use crate::Scalar;

/// `Q_F` in the H-basis: `Σ_{G≥F} (-1)^{l(G)-l(F)} / l(G/F) · H_G`.
pub fn q_to_h(f: &Composition) -> SigElement {
    let mut out = SigElement::zero(f.ground());
    for g in refinements(f) {
        let ratio = g.length_ratio(f).expect("refinement is comparable");
        let c = Scalar::sign(g.len() - f.len()) * Scalar::ratio(1, ratio as i64);
        out.add_term(g, &c);
    }
    out
}

/// `H_F` in the Q-basis: `Σ_{G≥F} 1/(G/F)! · Q_G`. Keys of the result index
/// Q-basis elements.
pub fn h_to_q(f: &Composition) -> SigElement {
    let mut out = SigElement::zero(f.ground());
    for g in refinements(f) {
        let fact = g.factorial_ratio(f).expect("refinement is comparable");
        out.add_term(g, &Scalar::ratio(1, fact as i64));
    }
    out
}

impl SigElement {
    /// Rewrites an H-basis element in Q-basis coordinates.
    pub fn to_q_coords(&self) -> SigElement {
        let mut out = SigElement::zero(self.ground().clone());
        for (f, c) in self.terms() {
            out.axpy(c, &h_to_q(f)).expect("same ground");
        }
        out
    }

    /// Reads `self` as Q-basis coordinates and rewrites it in the H-basis.
    pub fn from_q_coords(&self) -> SigElement {
        let mut out = SigElement::zero(self.ground().clone());
        for (f, c) in self.terms() {
            out.axpy(c, &q_to_h(f)).expect("same ground");
        }
        out
    }

    /// `Q_F` as an H-basis element.
    pub fn q_basis(f: Composition) -> SigElement {
        let mut e = SigElement::zero(f.ground());
        e.add_term(f, &Scalar::one());
        e.from_q_coords()
    }
}
