use crate::family::Family;

/// A principal right ideal `pS`, keyed by the canonical representative of
/// `p` modulo right multiplication by units.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdealClass<E> {
    pub rep: E,
}

impl<E> IdealClass<E> {
    pub fn new(rep: E) -> Self {
        IdealClass { rep }
    }
}

pub fn ideal_class<S: Family>(fam: &S, p: &S::Elem) -> IdealClass<S::Elem> {
    IdealClass::new(fam.ideal_rep(p))
}

/// `pS = qS`, i.e. `q = p·x` for a unit `x`. Decided on canonical
/// representatives; the unit solver route is cross-checked in tests.
pub fn ideal_equal<S: Family>(fam: &S, p: &S::Elem, q: &S::Elem) -> bool {
    fam.ideal_rep(p) == fam.ideal_rep(q)
}
