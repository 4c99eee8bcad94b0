//! Named catalog of families, with the verdicts the catalog pins for the
//! checker front-end.

use std::collections::BTreeMap;

use rlcm_core::VerdictKind;

use crate::actions::fgp::FgpAction;
use crate::actions::polyq::PolyAction;
use crate::actions::seqprod::SeqProdAction;
use crate::actions::shift::ShiftAction;
use crate::actions::zxn::ZxnAction;
use crate::config::build_family;
use crate::free_abelian::FreeAbelianFamily;
use crate::free_monoid::FreeMonoidFamily;
use crate::nx::{NxFamily, NxNoUnitsFamily};
use crate::semidirect::Semidirect;
use crate::zappa::ZappaSzepFamily;

/// Concrete family, dispatched by the front-end.
#[derive(Debug, Clone)]
pub enum AnyFamily {
    Nx(NxFamily),
    NxNoUnits(NxNoUnitsFamily),
    FreeMonoid(FreeMonoidFamily),
    FreeAbelian(FreeAbelianFamily),
    Zxn(Semidirect<ZxnAction>),
    SeqProd(Semidirect<SeqProdAction>),
    Shift(Semidirect<ShiftAction>),
    PolyQ(Semidirect<PolyAction>),
    Fgp(Semidirect<FgpAction>),
    Zappa(ZappaSzepFamily),
}

/// Run an expression with `$f` bound to the concrete family value.
#[macro_export]
macro_rules! with_family {
    ($any:expr, |$f:ident| $body:expr) => {
        match $any {
            $crate::catalog::AnyFamily::Nx($f) => $body,
            $crate::catalog::AnyFamily::NxNoUnits($f) => $body,
            $crate::catalog::AnyFamily::FreeMonoid($f) => $body,
            $crate::catalog::AnyFamily::FreeAbelian($f) => $body,
            $crate::catalog::AnyFamily::Zxn($f) => $body,
            $crate::catalog::AnyFamily::SeqProd($f) => $body,
            $crate::catalog::AnyFamily::Shift($f) => $body,
            $crate::catalog::AnyFamily::PolyQ($f) => $body,
            $crate::catalog::AnyFamily::Fgp($f) => $body,
            $crate::catalog::AnyFamily::Zappa($f) => $body,
        }
    };
}

/// Verdicts the catalog expects from `check`; used for the exit code and by
/// the acceptance suite.
#[derive(Debug, Clone, Default)]
pub struct Expectations {
    pub map: BTreeMap<&'static str, VerdictKind>,
}

impl Expectations {
    fn of(pairs: &[(&'static str, VerdictKind)]) -> Self {
        Expectations {
            map: pairs.iter().cloned().collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: &'static str,
    pub about: &'static str,
    pub config: &'static str,
    pub expect: Expectations,
}

pub const NX_CONFIG: &str = "[family]\nkind = nx\ngenerators = 2 3\n";
pub const NX_NO_UNITS_CONFIG: &str = "[family]\nkind = nx-no-units\ngenerators = 2 3\n";
pub const FREE_MONOID_CONFIG: &str = "[family]\nkind = free-monoid\nalphabet = ab\n";
pub const FREE_ABELIAN_CONFIG: &str = "[family]\nkind = free-abelian\nrank = 2\n";
pub const ZXN_CONFIG: &str = "[family]\nkind = zxn\nprimes = 2 3\n";
pub const SEQPROD_CONFIG: &str = "[family]\nkind = seqprod\n";
pub const SHIFT_N2_CONFIG: &str = "[family]\nkind = shift\nrank = 2\n";
pub const POLYQ_CONFIG: &str = "[family]\nkind = polyq\npolys = T ; T+1\n";
pub const F2_CONFIG: &str = "[family]\nkind = fgp\nrank = 2\nexponents = 2 1 ; 1 2\n";
pub const ODOMETER_CONFIG: &str = "[family]\nkind = zappa-szep\nalphabet = 01\n[automaton]\na, 0 -> 1, 1\na, 1 -> 0, a\n";
pub const LAMPLIGHTER_CONFIG: &str = "[family]\nkind = zappa-szep\nalphabet = 01\n[automaton]\na, 0 -> 1, a\na, 1 -> 0, b\nb, 0 -> 0, a\nb, 1 -> 1, b\n";

pub fn presets() -> Vec<Preset> {
    use VerdictKind::*;
    vec![
        Preset {
            name: "nx",
            about: "multiplicative positive integers",
            config: NX_CONFIG,
            expect: Expectations::of(&[
                ("C1", Holds),
                ("C2", Holds),
                ("D1", Holds),
                ("strong-effectiveness", Holds),
                ("effective", Holds),
            ]),
        },
        Preset {
            name: "nx-no-units",
            about: "multiplicative integers ≥ 2 (no identity)",
            config: NX_NO_UNITS_CONFIG,
            expect: Expectations::of(&[("C1", Holds), ("C2", Holds), ("D1", Holds)]),
        },
        Preset {
            name: "free-monoid-ab",
            about: "free monoid on {a,b}",
            config: FREE_MONOID_CONFIG,
            expect: Expectations::of(&[("C1", Holds), ("C2", Holds), ("D1", Holds)]),
        },
        Preset {
            name: "free-abelian-2",
            about: "free abelian monoid of rank 2",
            config: FREE_ABELIAN_CONFIG,
            expect: Expectations::of(&[("C1", Holds), ("C2", Holds), ("D1", Holds)]),
        },
        Preset {
            name: "zxn",
            about: "ℤ ⋊ ℕ^× by multiplication",
            config: ZXN_CONFIG,
            expect: Expectations::of(&[
                ("C1", Holds),
                ("C2", Fails),
                ("D1", Holds),
                ("strong-effectiveness", Holds),
                ("effective", Holds),
                ("D3", Fails),
                ("D2-witness", Holds),
            ]),
        },
        Preset {
            name: "seqprod-23",
            about: "⊕ℤ ⋊ |2,3⟩: doubling has infinite index, θ₃ index 3",
            config: SEQPROD_CONFIG,
            expect: Expectations::of(&[
                ("C1", Holds),
                ("D1", Holds),
                ("strong-effectiveness", Holds),
                ("effective", Holds),
                ("D3", Fails),
                ("D2-witness", Holds),
            ]),
        },
        Preset {
            name: "shift-n2",
            about: "shift of ℕ² on ⊕ℤ",
            config: SHIFT_N2_CONFIG,
            expect: Expectations::of(&[
                ("C1", Holds),
                ("D1", Holds),
                ("strong-effectiveness", Holds),
                ("effective", Holds),
                ("D3", Holds),
            ]),
        },
        Preset {
            name: "polyq",
            about: "ℚ[T] ⋊ |T, T+1⟩ by multiplication",
            config: POLYQ_CONFIG,
            expect: Expectations::of(&[
                ("C1", Holds),
                ("D1", Holds),
                ("strong-effectiveness", Holds),
                ("effective", Holds),
                ("D3", Holds),
            ]),
        },
        Preset {
            name: "f2",
            about: "F₂ ⋊ ℕ² with a ↦ a², b ↦ b²",
            config: F2_CONFIG,
            expect: Expectations::of(&[
                ("C1", Holds),
                ("D1", Holds),
                ("strong-effectiveness", Holds),
                ("effective", Holds),
                ("D3", Holds),
            ]),
        },
        Preset {
            name: "odometer",
            about: "binary adding machine X* ⋈ ℤ",
            config: ODOMETER_CONFIG,
            expect: Expectations::of(&[("D1", Holds), ("recurrent", Holds), ("C1", Holds)]),
        },
        Preset {
            name: "lamplighter",
            about: "two-state non-abelian automaton X* ⋈ G",
            config: LAMPLIGHTER_CONFIG,
            expect: Expectations::of(&[("D1", Holds), ("recurrent", Holds), ("C1", Holds)]),
        },
    ]
}

pub fn preset_names() -> Vec<&'static str> {
    presets().iter().map(|p| p.name).collect()
}

pub fn preset(name: &str) -> Option<Preset> {
    presets().into_iter().find(|p| p.name == name)
}

/// Build a catalog family by preset name.
pub fn build_preset(name: &str) -> Option<AnyFamily> {
    let p = preset(name)?;
    Some(build_family(p.config).expect("catalog configs are valid").0)
}
