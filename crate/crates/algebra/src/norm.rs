//! The exact norm of a diagonal combination `Σ λ_i e_{p_iS}`: the maximum of
//! `|Σ_{i∈A} λ_i|` over the subsets `A ⊆ F` whose projection `Q_{F,A}` is
//! nonzero.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Signed;

use rlcm_core::{Family, SearchBudget, Verdict};

use crate::coeff::{rational_sqrt, Gaussian};
use crate::diagonal::DiagonalElement;
use crate::element::StarAlgebra;
use crate::projection::ProjectionSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalNorm<E> {
    /// Exact squared norm.
    pub norm_sqr: BigRational,
    /// Exact norm when the square root is rational (always, for real
    /// coefficients); `None` flags an irrational value reported squared.
    pub norm: Option<BigRational>,
    /// A maximizing subset and a basis element witnessing it.
    pub achieved_on: BTreeSet<E>,
    pub witness: E,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormOutcome<E> {
    Exact(DiagonalNorm<E>),
    /// Some required nonvanishing verdict exhausted its budget.
    Unknown(rlcm_core::Exhausted),
}

impl<E> NormOutcome<E> {
    pub fn exact(self) -> Option<DiagonalNorm<E>> {
        match self {
            NormOutcome::Exact(n) => Some(n),
            NormOutcome::Unknown(_) => None,
        }
    }
}

impl<'a, S: Family> StarAlgebra<'a, S> {
    /// Norm of a diagonal element by exhaustive subset maximization; every
    /// candidate subset is gated by the exact nonvanishing oracle.
    pub fn diagonal_norm(
        &self,
        d: &DiagonalElement<S::Elem>,
        budget: &SearchBudget,
    ) -> NormOutcome<S::Elem> {
        let reps: Vec<S::Elem> = d.terms().map(|(r, _)| r.clone()).collect();
        let coeffs: Vec<Gaussian> = d.terms().map(|(_, c)| c.clone()).collect();
        let n = reps.len();
        assert!(n <= 20, "norm maximization limited to 20 ideals");
        let f: BTreeSet<S::Elem> = reps.iter().cloned().collect();
        let mut best: Option<DiagonalNorm<S::Elem>> = None;
        for mask in 0u32..(1 << n) {
            let mut sum = Gaussian::zero();
            let mut a = BTreeSet::new();
            for i in 0..n {
                if mask >> i & 1 == 1 {
                    sum += coeffs[i].clone();
                    a.insert(reps[i].clone());
                }
            }
            let value = sum.norm_sqr();
            if let Some(b) = &best {
                if value <= b.norm_sqr {
                    continue;
                }
            }
            let spec = ProjectionSpec {
                f: f.clone(),
                a,
            };
            match self.is_nonzero_projection(&spec, budget) {
                Verdict::Holds(witness) => {
                    let norm = rational_sqrt(&value);
                    best = Some(DiagonalNorm {
                        norm_sqr: value,
                        norm,
                        achieved_on: spec.a,
                        witness,
                    });
                }
                Verdict::Fails(_) => {}
                Verdict::Unknown(e) => return NormOutcome::Unknown(e),
            }
        }
        let zero_witness = self.identity_elem();
        NormOutcome::Exact(best.unwrap_or(DiagonalNorm {
            norm_sqr: BigRational::from_integer(0.into()),
            norm: Some(BigRational::from_integer(0.into())),
            achieved_on: BTreeSet::new(),
            witness: zero_witness,
        }))
    }
}

/// Exact absolute value for the real case, used by callers that know the
/// coefficients are real.
pub fn rational_abs(r: &BigRational) -> BigRational {
    r.abs()
}
