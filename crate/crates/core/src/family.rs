use std::fmt::Debug;

use crate::budget::SearchBudget;
use crate::error::{CoreError, ElemParseError};
use crate::residual::ResidualAnswer;

/// Intersection of two principal right ideals: empty, or again principal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LcmOutcome<E> {
    Disjoint,
    Lcm(E),
}

impl<E> LcmOutcome<E> {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, LcmOutcome::Disjoint)
    }

    pub fn lcm(self) -> Option<E> {
        match self {
            LcmOutcome::Disjoint => None,
            LcmOutcome::Lcm(r) => Some(r),
        }
    }

    pub fn as_lcm(&self) -> Option<&E> {
        match self {
            LcmOutcome::Disjoint => None,
            LcmOutcome::Lcm(r) => Some(r),
        }
    }
}

/// A registered right LCM semigroup family.
///
/// Elements are plain values; every operation takes the family as context, so
/// cross-family products are ruled out by the type system (two families have
/// distinct `Elem` types). Same-typed families with different parameters can
/// reject foreign elements via [`Family::validate`].
///
/// Contracts, all exact:
///
/// * `multiply` is associative and left cancellative.
/// * `right_lcm(p, q)` returns `Lcm(r)` with `pS ∩ qS = rS`, normalized by
///   [`Family::ideal_rep`], or `Disjoint` when the intersection is empty.
///   Right LCMs are only unique up to a unit; each family fixes a
///   deterministic unit normalization so that equal ideals get equal
///   representatives. For families with `S* = ∅` the contract is read on the
///   unitisation: `Lcm(r)` means `pS̃ ∩ qS̃ = rS̃` (equivalently, common right
///   multiples of `p` and `q` are exactly `{r} ∪ rS`).
/// * `left_divide(p, r)` returns the unique `s` with `p·s = r`, if any.
/// * `unit_right_quotient(p, q)` solves `q = p·x` for a unit `x`;
///   `unit_left_quotient(p, q)` solves `p = x·q` for a unit `x`.
pub trait Family {
    type Elem: Clone + Eq + Ord + Debug;

    fn name(&self) -> String;

    /// The identity element, when the family is a monoid.
    fn identity(&self) -> Option<Self::Elem>;

    fn multiply(&self, p: &Self::Elem, q: &Self::Elem) -> Self::Elem;

    fn is_unit(&self, p: &Self::Elem) -> bool;

    fn unit_inverse(&self, x: &Self::Elem) -> Result<Self::Elem, CoreError>;

    fn left_divide(&self, p: &Self::Elem, r: &Self::Elem) -> Option<Self::Elem>;

    fn right_lcm(&self, p: &Self::Elem, q: &Self::Elem) -> LcmOutcome<Self::Elem>;

    /// Deterministic representative of the ideal class `pS` under right
    /// multiplication by units. Idempotent.
    fn ideal_rep(&self, p: &Self::Elem) -> Self::Elem;

    /// A unit `x` with `p·x = q`, if one exists.
    fn unit_right_quotient(&self, p: &Self::Elem, q: &Self::Elem) -> Option<Self::Elem>;

    /// A unit `x` with `x·q = p`, if one exists.
    fn unit_left_quotient(&self, p: &Self::Elem, q: &Self::Elem) -> Option<Self::Elem>;

    /// Registered semigroup generators, used for deterministic ball
    /// enumeration. Must be nonempty for enumerable families.
    fn generators(&self) -> Vec<Self::Elem>;

    /// Generators of the unit group `S*`, inverses included; empty when the
    /// unit group is trivial or absent.
    fn unit_generators(&self) -> Vec<Self::Elem> {
        Vec::new()
    }

    fn is_commutative(&self) -> bool {
        false
    }

    fn has_identity(&self) -> bool {
        self.identity().is_some()
    }

    /// Check that an element is well formed for this family instance.
    fn validate(&self, _e: &Self::Elem) -> Result<(), CoreError> {
        Ok(())
    }

    fn format_elem(&self, e: &Self::Elem) -> String;

    fn parse_elem(&self, s: &str) -> Result<Self::Elem, ElemParseError>;

    /// Family override deciding `σS ∩ (S ∖ ⋃ q_iS) ≠ ∅` exactly, when the
    /// family knows a shortcut. `None` defers to the generic strategy.
    fn residual_shortcut(
        &self,
        _sigma: &Self::Elem,
        _obstacles: &[Self::Elem],
    ) -> Option<ResidualAnswer<Self::Elem>> {
        None
    }

    /// Representative of the class of `a` under left multiplication by units
    /// (the congruence `a ∼ b ⟺ a = xb`). The default minimizes over the
    /// orbit of `a` under the unit ball; families with an exact normal form
    /// override it.
    fn left_class_rep(&self, a: &Self::Elem, budget: &SearchBudget) -> Self::Elem
    where
        Self: Sized,
    {
        let units = crate::ball::unit_ball(self, budget.depth);
        let mut best = a.clone();
        for x in &units {
            let candidate = self.multiply(x, a);
            if candidate < best {
                best = candidate;
            }
        }
        best
    }
}

/// `r` is a right multiple of `q` in the closed sense: `r ∈ {q} ∪ qS`.
pub fn divides<S: Family>(fam: &S, q: &S::Elem, r: &S::Elem) -> bool {
    q == r || fam.left_divide(q, r).is_some()
}

/// `r ∈ qS` in the strict sense (for monoids this coincides with `divides`).
pub fn in_strict_ideal<S: Family>(fam: &S, q: &S::Elem, r: &S::Elem) -> bool {
    fam.left_divide(q, r).is_some()
}
