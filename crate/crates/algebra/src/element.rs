//! The spanning monomials `v_p v_q*` and their exact linear combinations.

use std::collections::BTreeMap;

use rlcm_core::{CoreError, Family, LcmOutcome};

use crate::coeff::Gaussian;

/// A monomial `v_p v_q*`, canonicalized so that `(p,q)` and `(px,qx)` share
/// a key for every unit `x`: the `q`-side is moved to its ideal
/// representative and the `p`-side is adjusted by the same unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial<E> {
    p: E,
    q: E,
}

impl<E: Clone + Eq + Ord + std::fmt::Debug> Monomial<E> {
    pub fn canonical<S: Family<Elem = E>>(fam: &S, p: E, q: E) -> Self {
        let qrep = fam.ideal_rep(&q);
        if qrep != q {
            if let Some(u) = fam.unit_right_quotient(&q, &qrep) {
                let p2 = fam.multiply(&p, &u);
                return Monomial { p: p2, q: qrep };
            }
        }
        Monomial { p, q }
    }

    pub fn p(&self) -> &E {
        &self.p
    }

    pub fn q(&self) -> &E {
        &self.q
    }

    pub fn is_diagonal(&self) -> bool {
        self.p == self.q
    }
}

/// Finite exact linear combination of monomials; zero coefficients pruned.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement<E: Ord> {
    terms: BTreeMap<Monomial<E>, Gaussian>,
}

impl<E: Clone + Eq + Ord + std::fmt::Debug> AlgebraElement<E> {
    pub fn zero() -> Self {
        AlgebraElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<E>, &Gaussian)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial<E>) -> Gaussian {
        self.terms.get(m).cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn add_term(&mut self, m: Monomial<E>, c: Gaussian) {
        if c.is_zero() {
            return;
        }
        let now_zero = {
            let entry = self.terms.entry(m.clone()).or_insert_with(Gaussian::zero);
            *entry += c;
            entry.is_zero()
        };
        if now_zero {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
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
        AlgebraElement {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), c * v)).collect(),
        }
    }
}

/// Context with the family in scope; all algebra operations live here so
/// monomials are always canonicalized consistently.
pub struct StarAlgebra<'a, S: Family> {
    pub fam: &'a S,
}

impl<'a, S: Family> StarAlgebra<'a, S> {
    /// The algebra is spanned over a monoid; families with `S* = ∅` must be
    /// wrapped in their unitisation first.
    pub fn new(fam: &'a S) -> Result<Self, CoreError> {
        if fam.has_identity() {
            Ok(StarAlgebra { fam })
        } else {
            Err(CoreError::NoIdentity(fam.name()))
        }
    }

    pub fn identity_elem(&self) -> S::Elem {
        self.fam.identity().expect("checked at construction")
    }

    pub fn monomial(&self, p: S::Elem, q: S::Elem) -> Monomial<S::Elem> {
        Monomial::canonical(self.fam, p, q)
    }

    pub fn from_monomial(&self, m: Monomial<S::Elem>) -> AlgebraElement<S::Elem> {
        let mut out = AlgebraElement::zero();
        out.add_term(m, Gaussian::one());
        out
    }

    /// `v_p`
    pub fn v(&self, p: S::Elem) -> AlgebraElement<S::Elem> {
        let one = self.identity_elem();
        self.from_monomial(self.monomial(p, one))
    }

    /// `v_q*`
    pub fn v_star(&self, q: S::Elem) -> AlgebraElement<S::Elem> {
        let one = self.identity_elem();
        self.from_monomial(self.monomial(one, q))
    }

    /// `e_{pS} = v_p v_p*`
    pub fn e_ideal(&self, p: S::Elem) -> AlgebraElement<S::Elem> {
        self.from_monomial(self.monomial(p.clone(), p))
    }

    pub fn one(&self) -> AlgebraElement<S::Elem> {
        let one = self.identity_elem();
        self.e_ideal(one)
    }

    /// Product of two monomials: zero or a single monomial, by
    /// `v_q* v_s = 0` when `qS ∩ sS = ∅`, else `v_{q'} v_{s'}*` with
    /// `q q' = s s' = lcm`.
    pub fn mono_mul(
        &self,
        m1: &Monomial<S::Elem>,
        m2: &Monomial<S::Elem>,
    ) -> Option<Monomial<S::Elem>> {
        match self.fam.right_lcm(m1.q(), m2.p()) {
            LcmOutcome::Disjoint => None,
            LcmOutcome::Lcm(r) => {
                let qq = self
                    .fam
                    .left_divide(m1.q(), &r)
                    .expect("lcm is a right multiple of both sides");
                let ss = self
                    .fam
                    .left_divide(m2.p(), &r)
                    .expect("lcm is a right multiple of both sides");
                Some(self.monomial(
                    self.fam.multiply(m1.p(), &qq),
                    self.fam.multiply(m2.q(), &ss),
                ))
            }
        }
    }

    pub fn mul(
        &self,
        a: &AlgebraElement<S::Elem>,
        b: &AlgebraElement<S::Elem>,
    ) -> AlgebraElement<S::Elem> {
        let mut out = AlgebraElement::zero();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                if let Some(m) = self.mono_mul(m1, m2) {
                    out.add_term(m, c1 * c2);
                }
            }
        }
        out
    }

    pub fn adjoint(&self, a: &AlgebraElement<S::Elem>) -> AlgebraElement<S::Elem> {
        let mut out = AlgebraElement::zero();
        for (m, c) in a.terms() {
            out.add_term(self.monomial(m.q().clone(), m.p().clone()), c.conj());
        }
        out
    }
}
