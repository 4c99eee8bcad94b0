//! Core interface for right LCM semigroups.
//!
//! A right LCM semigroup is a left cancellative semigroup in which any two
//! principal right ideals are either disjoint or intersect in another
//! principal right ideal. This crate defines the [`Family`] trait that every
//! concrete semigroup implements, together with the derived operations every
//! higher layer builds on: ideal classes modulo right multiplication by
//! units, the residual-nonemptiness oracle, deterministic ball enumeration,
//! budgeted verdicts, and the unitisation wrapper for families without an
//! identity.

pub mod ball;
pub mod budget;
pub mod error;
pub mod family;
pub mod ideal;
pub mod residual;
pub mod sample;
pub mod unitized;

pub use ball::{shortlex_ball, unit_ball};
pub use budget::{Exhausted, SearchBudget, Verdict, VerdictKind};
pub use error::{CoreError, ElemParseError};
pub use family::{divides, in_strict_ideal, Family, LcmOutcome};
pub use ideal::{ideal_class, ideal_equal, IdealClass};
pub use residual::{residual_nonempty, EmptyReason, ResidualAnswer, ResidualQuery};
pub use sample::Rng;
pub use unitized::{Unitized, UnitizedElem};
