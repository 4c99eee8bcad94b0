//! The commutative diagonal spanned by the ideal projections `e_{pS}`, with
//! `e_{pS}·e_{qS} = e_{pS∩qS}` and `e_∅ = 0`.

use std::collections::BTreeMap;

use rlcm_core::{Family, LcmOutcome};

use crate::coeff::Gaussian;
use crate::element::{AlgebraElement, StarAlgebra};

/// Exact combination `Σ λ_r e_{rS}`, keyed by canonical ideal
/// representatives.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiagonalElement<E: Ord> {
    terms: BTreeMap<E, Gaussian>,
}

impl<E: Clone + Eq + Ord + std::fmt::Debug> DiagonalElement<E> {
    pub fn zero() -> Self {
        DiagonalElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&E, &Gaussian)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, rep: &E) -> Gaussian {
        self.terms.get(rep).cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn add_term(&mut self, rep: E, c: Gaussian) {
        if c.is_zero() {
            return;
        }
        let now_zero = {
            let entry = self.terms.entry(rep.clone()).or_insert_with(Gaussian::zero);
            *entry += c;
            entry.is_zero()
        };
        if now_zero {
            self.terms.remove(&rep);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.add_term(r.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        DiagonalElement {
            terms: self
                .terms
                .iter()
                .map(|(r, c)| (r.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        DiagonalElement {
            terms: self.terms.iter().map(|(r, v)| (r.clone(), c * v)).collect(),
        }
    }
}

impl<'a, S: Family> StarAlgebra<'a, S> {
    pub fn diagonal_one(&self) -> DiagonalElement<S::Elem> {
        let mut d = DiagonalElement::zero();
        d.add_term(self.fam.ideal_rep(&self.identity_elem()), Gaussian::one());
        d
    }

    pub fn diagonal_e(&self, p: &S::Elem) -> DiagonalElement<S::Elem> {
        let mut d = DiagonalElement::zero();
        d.add_term(self.fam.ideal_rep(p), Gaussian::one());
        d
    }

    /// Product in the diagonal semilattice: pairwise meets through the right
    /// LCM, with disjoint meets contributing zero.
    pub fn diagonal_mul(
        &self,
        a: &DiagonalElement<S::Elem>,
        b: &DiagonalElement<S::Elem>,
    ) -> DiagonalElement<S::Elem> {
        let mut out = DiagonalElement::zero();
        for (r1, c1) in a.terms() {
            for (r2, c2) in b.terms() {
                match self.fam.right_lcm(r1, r2) {
                    LcmOutcome::Disjoint => {}
                    LcmOutcome::Lcm(r) => out.add_term(self.fam.ideal_rep(&r), c1 * c2),
                }
            }
        }
        out
    }

    pub fn diagonal_to_algebra(&self, d: &DiagonalElement<S::Elem>) -> AlgebraElement<S::Elem> {
        let mut out = AlgebraElement::zero();
        for (r, c) in d.terms() {
            out.add_term(self.monomial(r.clone(), r.clone()), c.clone());
        }
        out
    }

    /// Extract the diagonal part of an element that is supported on diagonal
    /// monomials; `None` when off-diagonal terms are present.
    pub fn algebra_to_diagonal(
        &self,
        a: &AlgebraElement<S::Elem>,
    ) -> Option<DiagonalElement<S::Elem>> {
        let mut out = DiagonalElement::zero();
        for (m, c) in a.terms() {
            if !m.is_diagonal() {
                return None;
            }
            out.add_term(m.p().clone(), c.clone());
        }
        Some(out)
    }
}
