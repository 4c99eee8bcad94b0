//! Line-oriented family configuration.
//!
//! Grammar (bit-exact, one directive per line):
//!
//! ```text
//! file        := { line }
//! line        := blank | comment | section | keyval | transition
//! comment     := '#' …
//! section     := '[' name ']'            ; `[family]`, `[automaton]`, `[budgets]`
//! keyval      := key '=' value           ; whitespace around tokens ignored
//! transition  := state ',' letter '->' letter ',' state
//!                                        ; only inside `[automaton]`; the
//!                                        ; state `1` denotes the identity
//! ```
//!
//! `[family]` keys: `kind` (required), then per kind:
//! `nx` / `nx-no-units`: `generators = 2 3`; `free-monoid`: `alphabet = ab`;
//! `free-abelian`: `rank = 2`; `zxn`: `primes = 2 3`; `seqprod`: none;
//! `shift`: `rank = 2`; `polyq`: `polys = T ; T+1`;
//! `fgp`: `rank = 2`, `exponents = 2 1 ; 1 2` (one row per `P`-generator);
//! `zappa-szep`: `alphabet = 01` plus an `[automaton]` section.
//! `[budgets]` keys: `radius`, `depth`, `candidates`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::actions::fgp::FgpAction;
use crate::actions::polyq::PolyAction;
use crate::actions::seqprod::SeqProdAction;
use crate::actions::shift::ShiftAction;
use crate::actions::zxn::ZxnAction;
use crate::catalog::AnyFamily;
use crate::free_abelian::FreeAbelianFamily;
use crate::free_monoid::FreeMonoidFamily;
use crate::mealy::{MealyAutomaton, StateRef};
use crate::nx::{NxFamily, NxNoUnitsFamily};
use crate::poly::Poly;
use crate::semidirect::Semidirect;
use crate::zappa::ZappaSzepFamily;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {0}: {1}")]
    Line(usize, String),
    #[error("missing `[family]` section with a `kind` key")]
    MissingKind,
    #[error("unknown family kind `{0}`")]
    UnknownKind(String),
    #[error("kind `{kind}` requires key `{key}`")]
    MissingKey { kind: String, key: String },
    #[error("invalid automaton: {0}")]
    Automaton(#[from] crate::mealy::MealyError),
    #[error("invalid polynomial generators: {0}")]
    Poly(#[from] crate::actions::polyq::PolyActionError),
    #[error("invalid exponent table: {0}")]
    Fgp(#[from] crate::actions::fgp::FgpError),
    #[error("{0}")]
    Other(String),
}

/// Budgets section, all optional.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigBudgets {
    pub radius: Option<usize>,
    pub depth: Option<usize>,
    pub candidates: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct RawConfig {
    pub keys: BTreeMap<String, String>,
    pub automaton_lines: Vec<(usize, String)>,
    pub budgets: ConfigBudgets,
}

pub fn parse_config(text: &str) -> Result<RawConfig, ConfigError> {
    let mut keys = BTreeMap::new();
    let mut automaton_lines = Vec::new();
    let mut budgets = ConfigBudgets::default();
    let mut section = String::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with('[') && line.ends_with(']') {
            section = line[1..line.len() - 1].trim().to_string();
            if !matches!(section.as_str(), "family" | "automaton" | "budgets") {
                return Err(ConfigError::Line(
                    lineno,
                    format!("unknown section `{}`", section),
                ));
            }
            continue;
        }
        match section.as_str() {
            "family" => {
                let (k, v) = line.split_once('=').ok_or_else(|| {
                    ConfigError::Line(lineno, "expected `key = value`".into())
                })?;
                keys.insert(k.trim().to_string(), v.trim().to_string());
            }
            "automaton" => automaton_lines.push((lineno, line.to_string())),
            "budgets" => {
                let (k, v) = line.split_once('=').ok_or_else(|| {
                    ConfigError::Line(lineno, "expected `key = value`".into())
                })?;
                let n: usize = v.trim().parse().map_err(|_| {
                    ConfigError::Line(lineno, format!("expected a number, got `{}`", v.trim()))
                })?;
                match k.trim() {
                    "radius" => budgets.radius = Some(n),
                    "depth" => budgets.depth = Some(n),
                    "candidates" => budgets.candidates = Some(n),
                    other => {
                        return Err(ConfigError::Line(
                            lineno,
                            format!("unknown budget key `{}`", other),
                        ))
                    }
                }
            }
            _ => {
                return Err(ConfigError::Line(
                    lineno,
                    "directive outside a section".into(),
                ))
            }
        }
    }
    Ok(RawConfig {
        keys,
        automaton_lines,
        budgets,
    })
}

fn need<'a>(raw: &'a RawConfig, kind: &str, key: &str) -> Result<&'a str, ConfigError> {
    raw.keys
        .get(key)
        .map(|s| s.as_str())
        .ok_or_else(|| ConfigError::MissingKey {
            kind: kind.into(),
            key: key.into(),
        })
}

fn parse_numbers<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, ConfigError> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<T>()
                .map_err(|_| ConfigError::Other(format!("bad number `{}`", t)))
        })
        .collect()
}

pub fn parse_automaton(
    alphabet: &str,
    lines: &[(usize, String)],
) -> Result<MealyAutomaton, ConfigError> {
    let letters: Vec<char> = alphabet.chars().collect();
    // first pass: collect state names in order of appearance
    let mut states: Vec<char> = Vec::new();
    let mut parsed: Vec<(usize, char, char, char, char)> = Vec::new();
    for (lineno, line) in lines {
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| ConfigError::Line(*lineno, "expected `state, letter -> letter, state`".into()))?;
        let lparts: Vec<&str> = lhs.split(',').map(str::trim).collect();
        let rparts: Vec<&str> = rhs.split(',').map(str::trim).collect();
        if lparts.len() != 2 || rparts.len() != 2 {
            return Err(ConfigError::Line(
                *lineno,
                "expected `state, letter -> letter, state`".into(),
            ));
        }
        let one_char = |s: &str| -> Result<char, ConfigError> {
            let mut it = s.chars();
            match (it.next(), it.next()) {
                (Some(c), None) => Ok(c),
                _ => Err(ConfigError::Line(*lineno, format!("token `{}` must be a single character", s))),
            }
        };
        let (st, li, lo, nx) = (
            one_char(lparts[0])?,
            one_char(lparts[1])?,
            one_char(rparts[0])?,
            one_char(rparts[1])?,
        );
        if st != '1' && !states.contains(&st) {
            states.push(st);
        }
        parsed.push((*lineno, st, li, lo, nx));
    }
    // second pass: fill the table
    let mut table: Vec<Vec<Option<(u8, StateRef)>>> = vec![vec![None; letters.len()]; states.len()];
    for (lineno, st, li, lo, nx) in parsed {
        if st == '1' {
            return Err(ConfigError::Line(lineno, "`1` cannot carry transitions".into()));
        }
        let si = states.iter().position(|&s| s == st).unwrap();
        let lii = letters
            .iter()
            .position(|&c| c == li)
            .ok_or(crate::mealy::MealyError::UnknownLetter(li))?;
        let loi = letters
            .iter()
            .position(|&c| c == lo)
            .ok_or(crate::mealy::MealyError::UnknownLetter(lo))?;
        let next = if nx == '1' {
            StateRef::Identity
        } else {
            let ni = states
                .iter()
                .position(|&s| s == nx)
                .ok_or(crate::mealy::MealyError::UnknownState(nx.to_string()))?;
            StateRef::State(ni as u32)
        };
        table[si][lii] = Some((loi as u8, next));
    }
    let mut transitions = Vec::with_capacity(states.len());
    for (si, row) in table.into_iter().enumerate() {
        let mut out = Vec::with_capacity(letters.len());
        for (xi, cell) in row.into_iter().enumerate() {
            out.push(cell.ok_or(crate::mealy::MealyError::MissingTransition(
                states[si].to_string(),
                letters[xi],
            ))?);
        }
        transitions.push(out);
    }
    Ok(MealyAutomaton::new(letters, states, transitions)?)
}

/// Build a family from configuration text.
pub fn build_family(text: &str) -> Result<(AnyFamily, ConfigBudgets), ConfigError> {
    let raw = parse_config(text)?;
    let kind = raw.keys.get("kind").ok_or(ConfigError::MissingKind)?.clone();
    let fam = match kind.as_str() {
        "nx" => AnyFamily::Nx(NxFamily::new(parse_numbers(need(&raw, "nx", "generators")?)?)),
        "nx-no-units" => AnyFamily::NxNoUnits(NxNoUnitsFamily::new(parse_numbers(need(
            &raw,
            "nx-no-units",
            "generators",
        )?)?)),
        "free-monoid" => AnyFamily::FreeMonoid(FreeMonoidFamily::new(
            need(&raw, "free-monoid", "alphabet")?.chars().collect(),
        )),
        "free-abelian" => AnyFamily::FreeAbelian(FreeAbelianFamily::new(
            need(&raw, "free-abelian", "rank")?
                .parse()
                .map_err(|_| ConfigError::Other("bad rank".into()))?,
        )),
        "zxn" => AnyFamily::Zxn(Semidirect::new(ZxnAction::new(parse_numbers(need(
            &raw, "zxn", "primes",
        )?)?))),
        "seqprod" => AnyFamily::SeqProd(Semidirect::new(SeqProdAction)),
        "shift" => AnyFamily::Shift(Semidirect::new(ShiftAction::new(
            need(&raw, "shift", "rank")?
                .parse()
                .map_err(|_| ConfigError::Other("bad rank".into()))?,
        ))),
        "polyq" => {
            let polys = need(&raw, "polyq", "polys")?
                .split(';')
                .map(|s| Poly::parse(s.trim()).map_err(|e| ConfigError::Other(e.to_string())))
                .collect::<Result<Vec<Poly>, _>>()?;
            AnyFamily::PolyQ(Semidirect::new(PolyAction::new(polys)?))
        }
        "fgp" => {
            let rank: usize = need(&raw, "fgp", "rank")?
                .parse()
                .map_err(|_| ConfigError::Other("bad rank".into()))?;
            let rows = need(&raw, "fgp", "exponents")?
                .split(';')
                .map(parse_numbers::<u64>)
                .collect::<Result<Vec<Vec<u64>>, _>>()?;
            AnyFamily::Fgp(Semidirect::new(FgpAction::new(rank, rows)?))
        }
        "zappa-szep" => {
            let automaton = parse_automaton(
                need(&raw, "zappa-szep", "alphabet")?,
                &raw.automaton_lines,
            )?;
            AnyFamily::Zappa(ZappaSzepFamily::new(automaton))
        }
        other => return Err(ConfigError::UnknownKind(other.into())),
    };
    Ok((fam, raw.budgets))
}
