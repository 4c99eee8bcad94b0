//! Concrete right LCM semigroup families.
//!
//! Ships the catalog used throughout the workspace: the multiplicative
//! integers `ℕ^×` and their identity-free variant, free monoids, free
//! abelian monoids, semidirect products `G ⋊_θ P` of a group by an action of
//! a free abelian monoid through injective endomorphisms, and Zappa-Szep
//! products `X* ⋈ G` built from Mealy automata. Families can also be loaded
//! from a line-oriented text configuration, see [`config`].

pub mod catalog;
pub mod config;
pub mod free_abelian;
pub mod free_monoid;
pub mod freegroup;
pub mod mealy;
pub mod nx;
pub mod poly;
pub mod semidirect;
pub mod util;
pub mod zappa;

pub mod actions {
    pub mod fgp;
    pub mod polyq;
    pub mod seqprod;
    pub mod shift;
    pub mod zxn;
}

pub use catalog::{preset, preset_names, AnyFamily, Expectations, Preset};
pub use free_abelian::FreeAbelianFamily;
pub use free_monoid::FreeMonoidFamily;
pub use mealy::{MealyAutomaton, StateRef};
pub use nx::{NxFamily, NxNoUnitsFamily};
pub use semidirect::{IndexClass, SdAction, SdElem, Semidirect, SolveOutcome};
pub use zappa::{ZappaSzepFamily, ZsElem};
