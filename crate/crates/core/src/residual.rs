use crate::ball::shortlex_ball;
use crate::budget::{Exhausted, SearchBudget, Verdict};
use crate::family::{divides, in_strict_ideal, Family};

/// Query whether `σS ∩ (S ∖ ⋃_i q_iS) ≠ ∅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualQuery<E> {
    pub sigma: E,
    pub obstacles: Vec<E>,
}

impl<E> ResidualQuery<E> {
    pub fn new(sigma: E, obstacles: Vec<E>) -> Self {
        ResidualQuery { sigma, obstacles }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmptyReason {
    /// `σS ⊆ q_iS` for the obstacle at this index.
    Containment { obstacle_index: usize },
    /// Family shortcut decided emptiness.
    FamilyShortcut { why: String },
}

/// Exact answer a family shortcut may produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResidualAnswer<E> {
    Nonempty(E),
    Empty(EmptyReason),
}

/// Decide, or semi-decide within budget, whether `σS` meets the complement
/// of `⋃ q_iS`. Strategy order: containment pruning, then the monoid
/// shortcut (`σ` itself escapes once containment is excluded), then the
/// family shortcut, then a budgeted ball search.
pub fn residual_nonempty<S: Family>(
    fam: &S,
    query: &ResidualQuery<S::Elem>,
    budget: &SearchBudget,
) -> Verdict<S::Elem, EmptyReason> {
    let sigma = &query.sigma;

    if query.obstacles.is_empty() {
        let witness = if fam.has_identity() {
            sigma.clone()
        } else {
            match fam.generators().first() {
                Some(g) => fam.multiply(sigma, g),
                None => sigma.clone(),
            }
        };
        return Verdict::Holds(witness);
    }

    // (1) containment pruning: σS ⊆ q_iS ⟺ σ ∈ {q_i} ∪ q_iS
    for (i, q) in query.obstacles.iter().enumerate() {
        if divides(fam, q, sigma) {
            return Verdict::Fails(EmptyReason::Containment { obstacle_index: i });
        }
    }

    // (2) monoid shortcut: σ ∈ σS and σ ∉ q_iS was just established
    if fam.has_identity() {
        return Verdict::Holds(sigma.clone());
    }

    // (3) family shortcut
    if let Some(answer) = fam.residual_shortcut(sigma, &query.obstacles) {
        return match answer {
            ResidualAnswer::Nonempty(w) => Verdict::Holds(w),
            ResidualAnswer::Empty(reason) => Verdict::Fails(reason),
        };
    }

    // (4) budgeted ball search over right multiples of σ
    let ball = shortlex_ball(fam, &fam.generators(), budget.depth);
    let mut tried = 0usize;
    for u in &ball {
        if tried >= budget.max_candidates {
            break;
        }
        tried += 1;
        let w = fam.multiply(sigma, u);
        if query.obstacles.iter().all(|q| !in_strict_ideal(fam, q, &w)) {
            return Verdict::Holds(w);
        }
    }
    Verdict::Unknown(Exhausted {
        budget: budget.clone(),
        candidates_tried: tried,
        note: format!(
            "no witness for σ={:?} against {} obstacles",
            sigma,
            query.obstacles.len()
        ),
    })
}
