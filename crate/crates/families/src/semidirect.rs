//! Semidirect products `G ⋊_θ P` of a group `G` by an action `θ` of a right
//! LCM monoid `P` through injective group endomorphisms, with multiplication
//! `(s,p)(t,q) = (s·θ_p(t), pq)`.
//!
//! Every catalog instance has `P` free abelian with trivial units, so the
//! unit group is `G × {1_P}` and principal right ideals are classified by a
//! coset-normal form of the group part: `(g,p)S = (h,p)S` iff
//! `g⁻¹h ∈ θ_p(G)`. The right LCM of `(g₁,p₁)` and `(g₂,p₂)` is computed on
//! the lcm `q` of `p₁,p₂` by solving `θ_{p₁}(h₁)·θ_{p₂}(h₂)⁻¹ = g₁⁻¹g₂`; the
//! ideals are disjoint exactly when that equation has no solution.

use std::fmt::Debug;

use rlcm_core::{CoreError, ElemParseError, Family, LcmOutcome};

use crate::util::{split_top_level, strip_parens};

/// Index of `θ_p(G)` in `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexClass {
    Finite(u128),
    Infinite,
}

/// Result of solving `θ_p(h₁)·θ_q(h₂)⁻¹ = g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome<G> {
    Solution(G, G),
    NoSolution,
    /// The family has no exact solver for these inputs; callers must surface
    /// this loudly rather than guess.
    Unsupported(&'static str),
}

/// The data of an action `θ` of a free abelian monoid `P` on a group `G` by
/// injective endomorphisms, together with exact solvers for the derived
/// ideal arithmetic.
pub trait SdAction {
    type G: Clone + Eq + Ord + Debug;
    type P: Clone + Eq + Ord + Debug;

    fn family_name(&self) -> String;

    fn g_one(&self) -> Self::G;
    fn g_mul(&self, a: &Self::G, b: &Self::G) -> Self::G;
    fn g_inv(&self, a: &Self::G) -> Self::G;
    /// Group generators, inverses included; used for ball enumeration.
    fn g_generators(&self) -> Vec<Self::G>;

    fn p_one(&self) -> Self::P;
    fn p_mul(&self, a: &Self::P, b: &Self::P) -> Self::P;
    /// `r` with `p·r = q`, if any. `P` is abelian, so sides agree.
    fn p_divide(&self, p: &Self::P, q: &Self::P) -> Option<Self::P>;
    fn p_lcm(&self, p: &Self::P, q: &Self::P) -> Self::P;
    fn p_generators(&self) -> Vec<Self::P>;

    fn apply(&self, p: &Self::P, g: &Self::G) -> Self::G;
    fn image_member(&self, p: &Self::P, g: &Self::G) -> bool;
    fn preimage(&self, p: &Self::P, g: &Self::G) -> Option<Self::G>;
    /// Deterministic representative of the right coset `g·θ_p(G)`.
    fn coset_normal(&self, p: &Self::P, g: &Self::G) -> Self::G;
    fn index_class(&self, p: &Self::P) -> IndexClass;
    /// Complete set of coset representatives for `G/θ_p(G)`, when finite.
    fn coset_reps(&self, p: &Self::P) -> Option<Vec<Self::G>>;
    fn product_image_solve(&self, p: &Self::P, q: &Self::P, g: &Self::G) -> SolveOutcome<Self::G>;
    /// For `g ≠ 1`: some `p` with `g ∉ θ_p(G)`, when one exists.
    fn image_escape(&self, g: &Self::G) -> Option<Self::P>;

    fn g_format(&self, g: &Self::G) -> String;
    fn g_parse(&self, s: &str) -> Result<Self::G, ElemParseError>;
    fn p_format(&self, p: &Self::P) -> String;
    fn p_parse(&self, s: &str) -> Result<Self::P, ElemParseError>;

    fn validate_g(&self, _g: &Self::G) -> Result<(), CoreError> {
        Ok(())
    }
    fn validate_p(&self, _p: &Self::P) -> Result<(), CoreError> {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SdElem<G, P> {
    pub g: G,
    pub p: P,
}

impl<G, P> SdElem<G, P> {
    pub fn new(g: G, p: P) -> Self {
        SdElem { g, p }
    }
}

#[derive(Debug, Clone)]
pub struct Semidirect<A: SdAction> {
    pub action: A,
}

impl<A: SdAction> Semidirect<A> {
    pub fn new(action: A) -> Self {
        Semidirect { action }
    }

    pub fn elem(&self, g: A::G, p: A::P) -> SdElem<A::G, A::P> {
        SdElem::new(g, p)
    }

    /// `right_lcm` with the unsupported-solver case surfaced as an error.
    pub fn try_right_lcm(
        &self,
        a: &SdElem<A::G, A::P>,
        b: &SdElem<A::G, A::P>,
    ) -> Result<LcmOutcome<SdElem<A::G, A::P>>, CoreError> {
        let act = &self.action;
        let q = act.p_lcm(&a.p, &b.p);
        let g = act.g_mul(&act.g_inv(&a.g), &b.g);
        match act.product_image_solve(&a.p, &b.p, &g) {
            SolveOutcome::NoSolution => Ok(LcmOutcome::Disjoint),
            SolveOutcome::Solution(h1, _h2) => {
                let lead = act.g_mul(&a.g, &act.apply(&a.p, &h1));
                let rep = SdElem::new(act.coset_normal(&q, &lead), q);
                Ok(LcmOutcome::Lcm(rep))
            }
            SolveOutcome::Unsupported(what) => Err(CoreError::UnsupportedSolver {
                family: act.family_name(),
                what: what.into(),
            }),
        }
    }
}

impl<A: SdAction> Family for Semidirect<A> {
    type Elem = SdElem<A::G, A::P>;

    fn name(&self) -> String {
        self.action.family_name()
    }

    fn identity(&self) -> Option<Self::Elem> {
        Some(SdElem::new(self.action.g_one(), self.action.p_one()))
    }

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let act = &self.action;
        SdElem::new(
            act.g_mul(&a.g, &act.apply(&a.p, &b.g)),
            act.p_mul(&a.p, &b.p),
        )
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        a.p == self.action.p_one()
    }

    fn unit_inverse(&self, x: &Self::Elem) -> Result<Self::Elem, CoreError> {
        if self.is_unit(x) {
            Ok(SdElem::new(self.action.g_inv(&x.g), self.action.p_one()))
        } else {
            Err(CoreError::NotAUnit(self.format_elem(x)))
        }
    }

    fn left_divide(&self, a: &Self::Elem, r: &Self::Elem) -> Option<Self::Elem> {
        let act = &self.action;
        let q = act.p_divide(&a.p, &r.p)?;
        let t = act.preimage(&a.p, &act.g_mul(&act.g_inv(&a.g), &r.g))?;
        Some(SdElem::new(t, q))
    }

    fn right_lcm(&self, a: &Self::Elem, b: &Self::Elem) -> LcmOutcome<Self::Elem> {
        self.try_right_lcm(a, b)
            .expect("catalog semidirect actions carry total LCM solvers")
    }

    fn ideal_rep(&self, a: &Self::Elem) -> Self::Elem {
        SdElem::new(self.action.coset_normal(&a.p, &a.g), a.p.clone())
    }

    fn unit_right_quotient(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        // (g,p)(x,1) = (g·θ_p(x), p)
        if a.p != b.p {
            return None;
        }
        let act = &self.action;
        let x = act.preimage(&a.p, &act.g_mul(&act.g_inv(&a.g), &b.g))?;
        Some(SdElem::new(x, act.p_one()))
    }

    fn unit_left_quotient(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        // (x,1)(h,p) = (x·h, p)
        if a.p != b.p {
            return None;
        }
        let act = &self.action;
        Some(SdElem::new(
            act.g_mul(&a.g, &act.g_inv(&b.g)),
            act.p_one(),
        ))
    }

    fn generators(&self) -> Vec<Self::Elem> {
        let act = &self.action;
        let mut out: Vec<Self::Elem> = act
            .g_generators()
            .into_iter()
            .map(|g| SdElem::new(g, act.p_one()))
            .collect();
        out.extend(
            act.p_generators()
                .into_iter()
                .map(|p| SdElem::new(act.g_one(), p)),
        );
        out
    }

    fn unit_generators(&self) -> Vec<Self::Elem> {
        let act = &self.action;
        act.g_generators()
            .into_iter()
            .map(|g| SdElem::new(g, act.p_one()))
            .collect()
    }

    fn validate(&self, e: &Self::Elem) -> Result<(), CoreError> {
        self.action.validate_g(&e.g)?;
        self.action.validate_p(&e.p)
    }

    fn format_elem(&self, e: &Self::Elem) -> String {
        format!(
            "({},{})",
            self.action.g_format(&e.g),
            self.action.p_format(&e.p)
        )
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem, ElemParseError> {
        let inner = strip_parens(s, s)?;
        let parts = split_top_level(inner, ',');
        if parts.len() < 2 {
            return Err(ElemParseError::new(s, 0, "expected `(g,p)`"));
        }
        // the group literal may itself contain top-level commas only when
        // bracketed, so everything before the last comma is the group part
        let (g_part, p_part) = (
            parts[..parts.len() - 1].join(","),
            parts[parts.len() - 1],
        );
        let g = self.action.g_parse(&g_part)?;
        let p = self.action.p_parse(p_part)?;
        let e = SdElem::new(g, p);
        self.validate(&e)
            .map_err(|err| ElemParseError::new(s, 0, err.to_string()))?;
        Ok(e)
    }

    fn left_class_rep(&self, a: &Self::Elem, _budget: &rlcm_core::SearchBudget) -> Self::Elem {
        // (x,1)(g,p) = (xg,p): the class of (g,p) is G × {p}
        SdElem::new(self.action.g_one(), a.p.clone())
    }
}
