use crate::error::{CoreError, ElemParseError};
use crate::family::{Family, LcmOutcome};

/// Element of the unitisation `S̃ = S ∪ {1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum UnitizedElem<E> {
    One,
    Elem(E),
}

impl<E> UnitizedElem<E> {
    pub fn as_base(&self) -> Option<&E> {
        match self {
            UnitizedElem::One => None,
            UnitizedElem::Elem(e) => Some(e),
        }
    }
}

/// Unitisation of a family with `S* = ∅`: adjoins a formal identity acting
/// as a two-sided unit. For a right LCM semigroup, `pS ∩ qS = rS` holds
/// exactly when `pS̃ ∩ qS̃ = rS̃`, so the base family's `right_lcm` transfers
/// unchanged; only division by the adjoined identity is new.
#[derive(Debug, Clone)]
pub struct Unitized<S> {
    pub base: S,
}

impl<S: Family> Unitized<S> {
    pub fn new(base: S) -> Self {
        debug_assert!(
            !base.has_identity(),
            "unitisation is for families without identity"
        );
        Unitized { base }
    }
}

impl<S: Family> Family for Unitized<S> {
    type Elem = UnitizedElem<S::Elem>;

    fn name(&self) -> String {
        format!("{}~", self.base.name())
    }

    fn identity(&self) -> Option<Self::Elem> {
        Some(UnitizedElem::One)
    }

    fn multiply(&self, p: &Self::Elem, q: &Self::Elem) -> Self::Elem {
        use UnitizedElem::*;
        match (p, q) {
            (One, x) | (x, One) => x.clone(),
            (Elem(a), Elem(b)) => Elem(self.base.multiply(a, b)),
        }
    }

    fn is_unit(&self, p: &Self::Elem) -> bool {
        matches!(p, UnitizedElem::One)
    }

    fn unit_inverse(&self, x: &Self::Elem) -> Result<Self::Elem, CoreError> {
        match x {
            UnitizedElem::One => Ok(UnitizedElem::One),
            UnitizedElem::Elem(e) => Err(CoreError::NotAUnit(format!("{:?}", e))),
        }
    }

    fn left_divide(&self, p: &Self::Elem, r: &Self::Elem) -> Option<Self::Elem> {
        use UnitizedElem::*;
        match (p, r) {
            (One, x) => Some(x.clone()),
            (Elem(_), One) => None,
            (Elem(a), Elem(b)) => {
                if a == b {
                    Some(One)
                } else {
                    self.base.left_divide(a, b).map(Elem)
                }
            }
        }
    }

    fn right_lcm(&self, p: &Self::Elem, q: &Self::Elem) -> LcmOutcome<Self::Elem> {
        use UnitizedElem::*;
        match (p, q) {
            (One, x) | (x, One) => LcmOutcome::Lcm(x.clone()),
            (Elem(a), Elem(b)) => match self.base.right_lcm(a, b) {
                LcmOutcome::Disjoint => LcmOutcome::Disjoint,
                LcmOutcome::Lcm(r) => LcmOutcome::Lcm(Elem(r)),
            },
        }
    }

    fn ideal_rep(&self, p: &Self::Elem) -> Self::Elem {
        match p {
            UnitizedElem::One => UnitizedElem::One,
            UnitizedElem::Elem(e) => UnitizedElem::Elem(self.base.ideal_rep(e)),
        }
    }

    fn unit_right_quotient(&self, p: &Self::Elem, q: &Self::Elem) -> Option<Self::Elem> {
        if p == q {
            Some(UnitizedElem::One)
        } else {
            None
        }
    }

    fn unit_left_quotient(&self, p: &Self::Elem, q: &Self::Elem) -> Option<Self::Elem> {
        if p == q {
            Some(UnitizedElem::One)
        } else {
            None
        }
    }

    fn generators(&self) -> Vec<Self::Elem> {
        self.base
            .generators()
            .into_iter()
            .map(UnitizedElem::Elem)
            .collect()
    }

    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }

    fn validate(&self, e: &Self::Elem) -> Result<(), CoreError> {
        match e {
            UnitizedElem::One => Ok(()),
            UnitizedElem::Elem(x) => self.base.validate(x),
        }
    }

    fn format_elem(&self, e: &Self::Elem) -> String {
        match e {
            UnitizedElem::One => "1".to_string(),
            UnitizedElem::Elem(x) => self.base.format_elem(x),
        }
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem, ElemParseError> {
        if s.trim() == "1" {
            Ok(UnitizedElem::One)
        } else {
            self.base.parse_elem(s).map(UnitizedElem::Elem)
        }
    }
}
