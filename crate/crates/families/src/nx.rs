//! Multiplicative integers: the monoid `ℕ^×` and its identity-free variant
//! `ℕ^× ∖ {1}`.

use num_integer::Integer;
use rlcm_core::{CoreError, ElemParseError, Family, LcmOutcome};

use crate::util::{checked_mul_u64, parse_u64};

/// `ℕ^× = {1, 2, 3, …}` under multiplication. Right LCMs are ordinary least
/// common multiples; the only unit is 1.
#[derive(Debug, Clone)]
pub struct NxFamily {
    pub gens: Vec<u64>,
}

impl NxFamily {
    pub fn new(gens: Vec<u64>) -> Self {
        NxFamily { gens }
    }
}

impl Family for NxFamily {
    type Elem = u64;

    fn name(&self) -> String {
        "nx".into()
    }

    fn identity(&self) -> Option<u64> {
        Some(1)
    }

    fn multiply(&self, p: &u64, q: &u64) -> u64 {
        checked_mul_u64(*p, *q)
    }

    fn is_unit(&self, p: &u64) -> bool {
        *p == 1
    }

    fn unit_inverse(&self, x: &u64) -> Result<u64, CoreError> {
        if *x == 1 {
            Ok(1)
        } else {
            Err(CoreError::NotAUnit(x.to_string()))
        }
    }

    fn left_divide(&self, p: &u64, r: &u64) -> Option<u64> {
        (r % p == 0).then(|| r / p)
    }

    fn right_lcm(&self, p: &u64, q: &u64) -> LcmOutcome<u64> {
        LcmOutcome::Lcm(p.lcm(q))
    }

    fn ideal_rep(&self, p: &u64) -> u64 {
        *p
    }

    fn unit_right_quotient(&self, p: &u64, q: &u64) -> Option<u64> {
        (p == q).then_some(1)
    }

    fn unit_left_quotient(&self, p: &u64, q: &u64) -> Option<u64> {
        (p == q).then_some(1)
    }

    fn generators(&self) -> Vec<u64> {
        self.gens.clone()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn validate(&self, e: &u64) -> Result<(), CoreError> {
        if *e >= 1 {
            Ok(())
        } else {
            Err(CoreError::ForeignElement("0 is not in ℕ^×".into()))
        }
    }

    fn format_elem(&self, e: &u64) -> String {
        e.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<u64, ElemParseError> {
        let v = parse_u64(s, s)?;
        if v == 0 {
            return Err(ElemParseError::new(s, 0, "0 is not in ℕ^×"));
        }
        Ok(v)
    }
}

/// `ℕ^× ∖ {1}`, a right LCM semigroup with empty unit group. Right LCMs
/// follow the unitisation contract: `Lcm(r)` means common right multiples of
/// `p` and `q` are exactly `{r} ∪ rS`, with `r` the arithmetic lcm.
#[derive(Debug, Clone)]
pub struct NxNoUnitsFamily {
    pub gens: Vec<u64>,
}

impl NxNoUnitsFamily {
    pub fn new(gens: Vec<u64>) -> Self {
        NxNoUnitsFamily { gens }
    }
}

impl Family for NxNoUnitsFamily {
    type Elem = u64;

    fn name(&self) -> String {
        "nx-no-units".into()
    }

    fn identity(&self) -> Option<u64> {
        None
    }

    fn multiply(&self, p: &u64, q: &u64) -> u64 {
        checked_mul_u64(*p, *q)
    }

    fn is_unit(&self, _p: &u64) -> bool {
        false
    }

    fn unit_inverse(&self, x: &u64) -> Result<u64, CoreError> {
        Err(CoreError::NotAUnit(x.to_string()))
    }

    fn left_divide(&self, p: &u64, r: &u64) -> Option<u64> {
        (r % p == 0 && r / p >= 2).then(|| r / p)
    }

    fn right_lcm(&self, p: &u64, q: &u64) -> LcmOutcome<u64> {
        LcmOutcome::Lcm(p.lcm(q))
    }

    fn ideal_rep(&self, p: &u64) -> u64 {
        *p
    }

    fn unit_right_quotient(&self, _p: &u64, _q: &u64) -> Option<u64> {
        None
    }

    fn unit_left_quotient(&self, _p: &u64, _q: &u64) -> Option<u64> {
        None
    }

    fn generators(&self) -> Vec<u64> {
        self.gens.clone()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn validate(&self, e: &u64) -> Result<(), CoreError> {
        if *e >= 2 {
            Ok(())
        } else {
            Err(CoreError::ForeignElement(format!("{} is not in ℕ^× ∖ {{1}}", e)))
        }
    }

    fn format_elem(&self, e: &u64) -> String {
        e.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<u64, ElemParseError> {
        let v = parse_u64(s, s)?;
        if v < 2 {
            return Err(ElemParseError::new(s, 0, "elements are integers ≥ 2"));
        }
        Ok(v)
    }
}
