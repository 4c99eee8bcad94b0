use std::fmt;

/// Bounds for budgeted searches. Enumeration order is deterministic and
/// total up to the budget: shortlex over the registered generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximal generator-word length for element and unit enumeration.
    pub depth: usize,
    /// Maximal number of candidates a search may inspect.
    pub max_candidates: usize,
}

impl SearchBudget {
    pub fn new(depth: usize, max_candidates: usize) -> Self {
        SearchBudget {
            depth,
            max_candidates,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            depth: 4,
            max_candidates: 20_000,
        }
    }
}

impl fmt::Display for SearchBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "depth={} candidates={}", self.depth, self.max_candidates)
    }
}

/// Descriptor of an exhausted budget, carried by `Verdict::Unknown`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exhausted {
    pub budget: SearchBudget,
    pub candidates_tried: usize,
    pub note: String,
}

impl fmt::Display for Exhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "budget exhausted ({}, tried {}): {}",
            self.budget, self.candidates_tried, self.note
        )
    }
}

/// Outcome of a budgeted property check. `Holds` carries witness data,
/// `Fails` a machine-checkable counterexample (replayed through the family
/// operations before being reported), `Unknown` the exhausted budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<H, F> {
    Holds(H),
    Fails(F),
    Unknown(Exhausted),
}

/// Verdict with the evidence erased, for reports and expectation tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    Holds,
    Fails,
    Unknown,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictKind::Holds => write!(f, "Holds"),
            VerdictKind::Fails => write!(f, "Fails"),
            VerdictKind::Unknown => write!(f, "Unknown"),
        }
    }
}

impl<H, F> Verdict<H, F> {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::Holds(_) => VerdictKind::Holds,
            Verdict::Fails(_) => VerdictKind::Fails,
            Verdict::Unknown(_) => VerdictKind::Unknown,
        }
    }

    pub fn is_holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn is_fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn holds(self) -> Option<H> {
        match self {
            Verdict::Holds(h) => Some(h),
            _ => None,
        }
    }

    pub fn fails(self) -> Option<F> {
        match self {
            Verdict::Fails(c) => Some(c),
            _ => None,
        }
    }
}
