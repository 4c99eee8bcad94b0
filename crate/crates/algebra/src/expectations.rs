//! Conditional-expectation formulas on the monomial basis: the diagonal
//! expectation kills every off-diagonal monomial, the inner-core expectation
//! keeps exactly the monomials whose legs differ by a left unit.

use rlcm_core::Family;

use crate::diagonal::DiagonalElement;
use crate::element::{AlgebraElement, StarAlgebra};

impl<'a, S: Family> StarAlgebra<'a, S> {
    /// `Φ_D(v_p v_q*) = δ_{p,q}·v_p v_p*`.
    pub fn phi_d(&self, a: &AlgebraElement<S::Elem>) -> DiagonalElement<S::Elem> {
        let mut out = DiagonalElement::zero();
        for (m, c) in a.terms() {
            if m.is_diagonal() {
                out.add_term(m.p().clone(), c.clone());
            }
        }
        out
    }

    /// `Φ_{C_I}` keeps `v_p v_q*` exactly when `p = x·q` for a unit `x`
    /// (then `v_p v_q* = v_x e_{qS}` already lies in the inner core).
    /// Callers must have established (C1) and `S* ≠ ∅` for the result to be
    /// the inner-core expectation.
    pub fn phi_ci(&self, a: &AlgebraElement<S::Elem>) -> AlgebraElement<S::Elem> {
        let mut out = AlgebraElement::zero();
        for (m, c) in a.terms() {
            if m.is_diagonal() || self.fam.unit_left_quotient(m.p(), m.q()).is_some() {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// The composition `Φ_D ∘ Φ_{C_I}` as an element map, realizing
    /// `e_{qS} v_x ↦ δ_{x,1} e_{qS}` on inner-core normal forms.
    pub fn phi_d_after_ci(&self, a: &AlgebraElement<S::Elem>) -> DiagonalElement<S::Elem> {
        self.phi_d(&self.phi_ci(a))
    }
}
