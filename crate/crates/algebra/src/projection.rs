//! The commuting projections `Q_{F,A} = ∏_{i∈A} e_i ∏_{j∈F∖A} (1−e_j)`:
//! exact expansion in the diagonal, the partition-of-unity identity, and the
//! nonvanishing criterion through the residual oracle.

use std::collections::BTreeSet;

use rlcm_core::{
    divides, residual_nonempty, Family, LcmOutcome, ResidualQuery, SearchBudget, Verdict,
};

use crate::diagonal::DiagonalElement;
use crate::element::StarAlgebra;

/// `F` a finite set of ideal classes (by canonical representative), `A ⊆ F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionSpec<E: Ord> {
    pub f: BTreeSet<E>,
    pub a: BTreeSet<E>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("A must be a subset of F")]
pub struct NotASubset;

impl<E: Clone + Ord> ProjectionSpec<E> {
    pub fn new(f: BTreeSet<E>, a: BTreeSet<E>) -> Result<Self, NotASubset> {
        if a.is_subset(&f) {
            Ok(ProjectionSpec { f, a })
        } else {
            Err(NotASubset)
        }
    }
}

/// Why a projection vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroReason<E> {
    /// The ideals in `A` have empty intersection.
    MeetEmpty,
    /// `⋂A ⊆ Y` for this `Y ∈ F∖A`, so a factor `(1−e)` kills the meet.
    Absorbed { by: E },
    /// The reduced residual set is empty.
    ResidualEmpty,
}

impl<'a, S: Family> StarAlgebra<'a, S> {
    /// Exact expansion of `Q_{F,A}` in the diagonal.
    pub fn q_projection(&self, spec: &ProjectionSpec<S::Elem>) -> DiagonalElement<S::Elem> {
        let mut d = self.diagonal_one();
        for i in &spec.a {
            d = self.diagonal_mul(&d, &self.diagonal_e(i));
        }
        for j in spec.f.difference(&spec.a) {
            let dj = self.diagonal_mul(&d, &self.diagonal_e(j));
            d = d.sub(&dj);
        }
        d
    }

    /// `Σ_{A ⊆ F} Q_{F,A} = 1`, verified by exact expansion.
    pub fn q_sum_identity(&self, f: &BTreeSet<S::Elem>) -> bool {
        let reps: Vec<S::Elem> = f.iter().cloned().collect();
        let n = reps.len();
        assert!(n <= 20, "subset expansion limited to 20 ideals");
        let mut total = DiagonalElement::zero();
        for mask in 0u32..(1 << n) {
            let a: BTreeSet<S::Elem> = reps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, r)| r.clone())
                .collect();
            let spec = ProjectionSpec {
                f: f.clone(),
                a,
            };
            total = total.add(&self.q_projection(&spec));
        }
        total == self.diagonal_one()
    }

    /// Decide `Q_{F,A} ≠ 0` through the set criterion: the meet `σ_A` of `A`
    /// must exist, must not be absorbed by any `Y ∈ F∖A`, and the residual
    /// `σ_A·S ∖ ⋃(σ_AS ∩ YS)` must be nonempty. `Holds` carries an explicit
    /// witness basis element.
    pub fn is_nonzero_projection(
        &self,
        spec: &ProjectionSpec<S::Elem>,
        budget: &SearchBudget,
    ) -> Verdict<S::Elem, ZeroReason<S::Elem>> {
        let fam = self.fam;
        // meet of A
        let mut sigma = self.identity_elem();
        for i in &spec.a {
            match fam.right_lcm(&sigma, i) {
                LcmOutcome::Disjoint => return Verdict::Fails(ZeroReason::MeetEmpty),
                LcmOutcome::Lcm(r) => sigma = r,
            }
        }
        // reduce each Y ∈ F∖A to an obstacle in σ_A⁻¹Y
        let mut obstacles = Vec::new();
        for y in spec.f.difference(&spec.a) {
            if divides(fam, y, &sigma) {
                // σ_A ∈ Y: the factor (1−e_{σ⁻¹Y}) = (1−e_S) = 0
                return Verdict::Fails(ZeroReason::Absorbed { by: y.clone() });
            }
            match fam.right_lcm(&sigma, y) {
                LcmOutcome::Disjoint => {} // e_{σS}·e_Y = 0: factor is 1
                LcmOutcome::Lcm(r) => {
                    let q = fam
                        .left_divide(&sigma, &r)
                        .expect("lcm is a right multiple of σ");
                    obstacles.push(q);
                }
            }
        }
        let query = ResidualQuery::new(self.identity_elem(), obstacles);
        match residual_nonempty(fam, &query, budget) {
            Verdict::Holds(w) => Verdict::Holds(fam.multiply(&sigma, &w)),
            Verdict::Fails(_) => Verdict::Fails(ZeroReason::ResidualEmpty),
            Verdict::Unknown(e) => Verdict::Unknown(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug)]
    struct Toy;
    impl Family for Toy {
        type Elem = u64;
        fn name(&self) -> String {
            "toy".into()
        }
        fn identity(&self) -> Option<u64> {
            Some(1)
        }
        fn multiply(&self, p: &u64, q: &u64) -> u64 {
            p * q
        }
        fn is_unit(&self, p: &u64) -> bool {
            *p == 1
        }
        fn unit_inverse(&self, x: &u64) -> Result<u64, rlcm_core::CoreError> {
            if *x == 1 {
                Ok(1)
            } else {
                Err(rlcm_core::CoreError::NotAUnit(x.to_string()))
            }
        }
        fn left_divide(&self, p: &u64, r: &u64) -> Option<u64> {
            (r % p == 0).then(|| r / p)
        }
        fn right_lcm(&self, p: &u64, q: &u64) -> rlcm_core::LcmOutcome<u64> {
            rlcm_core::LcmOutcome::Lcm(num_lcm(*p, *q))
        }
        fn ideal_rep(&self, p: &u64) -> u64 {
            *p
        }
        fn unit_right_quotient(&self, p: &u64, q: &u64) -> Option<u64> {
            (p == q).then_some(1)
        }
        fn unit_left_quotient(&self, p: &u64, q: &u64) -> Option<u64> {
            (p == q).then_some(1)
        }
        fn generators(&self) -> Vec<u64> {
            vec![2, 3]
        }
        fn format_elem(&self, e: &u64) -> String {
            e.to_string()
        }
        fn parse_elem(&self, s: &str) -> Result<u64, rlcm_core::ElemParseError> {
            s.parse()
                .map_err(|_| rlcm_core::ElemParseError::new(s, 0, "int"))
        }
    }

    fn num_lcm(a: u64, b: u64) -> u64 {
        a / gcd(a, b) * b
    }
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn single_ideal_partition() {
        let fam = Toy;
        let alg = StarAlgebra::new(&fam).unwrap();
        let f: BTreeSet<u64> = [2u64].into();
        assert!(alg.q_sum_identity(&f));
        // Q_{F,{2}} = e_2, Q_{F,∅} = 1 − e_2
        let spec = ProjectionSpec::new(f.clone(), f.clone()).unwrap();
        assert_eq!(alg.q_projection(&spec), alg.diagonal_e(&2));
    }

    #[test]
    fn empty_f_is_the_unit() {
        let fam = Toy;
        let alg = StarAlgebra::new(&fam).unwrap();
        let spec = ProjectionSpec::new(BTreeSet::new(), BTreeSet::new()).unwrap();
        assert_eq!(alg.q_projection(&spec), alg.diagonal_one());
        assert!(alg.q_sum_identity(&BTreeSet::new()));
    }

    #[test]
    fn subset_validation() {
        assert!(ProjectionSpec::new(BTreeSet::from([2u64]), BTreeSet::from([3u64])).is_err());
    }
}
