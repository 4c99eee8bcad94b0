//! `ℤ ⋊ ℕ^×` with `θ_p(g) = p·g`: every `θ_p` has finite index `p`, and the
//! lcm solver is a linear congruence.

use rlcm_core::{CoreError, ElemParseError};

use crate::semidirect::{IndexClass, SdAction, SolveOutcome};
use crate::util::{checked_mul_i64, checked_mul_u64, parse_i64, parse_u64, two_adic_valuation, xgcd};

#[derive(Debug, Clone)]
pub struct ZxnAction {
    /// Primes registered for ball enumeration on the `ℕ^×` side.
    pub primes: Vec<u64>,
}

impl ZxnAction {
    pub fn new(primes: Vec<u64>) -> Self {
        ZxnAction { primes }
    }
}

impl SdAction for ZxnAction {
    type G = i64;
    type P = u64;

    fn family_name(&self) -> String {
        "zxn".into()
    }

    fn g_one(&self) -> i64 {
        0
    }

    fn g_mul(&self, a: &i64, b: &i64) -> i64 {
        a.checked_add(*b).expect("i64 overflow")
    }

    fn g_inv(&self, a: &i64) -> i64 {
        -a
    }

    fn g_generators(&self) -> Vec<i64> {
        vec![1, -1]
    }

    fn p_one(&self) -> u64 {
        1
    }

    fn p_mul(&self, a: &u64, b: &u64) -> u64 {
        checked_mul_u64(*a, *b)
    }

    fn p_divide(&self, p: &u64, q: &u64) -> Option<u64> {
        (q % p == 0).then(|| q / p)
    }

    fn p_lcm(&self, p: &u64, q: &u64) -> u64 {
        num_integer::lcm(*p, *q)
    }

    fn p_generators(&self) -> Vec<u64> {
        self.primes.clone()
    }

    fn apply(&self, p: &u64, g: &i64) -> i64 {
        checked_mul_i64(*p as i64, *g)
    }

    fn image_member(&self, p: &u64, g: &i64) -> bool {
        g.rem_euclid(*p as i64) == 0
    }

    fn preimage(&self, p: &u64, g: &i64) -> Option<i64> {
        self.image_member(p, g).then(|| g / *p as i64)
    }

    fn coset_normal(&self, p: &u64, g: &i64) -> i64 {
        g.rem_euclid(*p as i64)
    }

    fn index_class(&self, p: &u64) -> IndexClass {
        IndexClass::Finite(*p as u128)
    }

    fn coset_reps(&self, p: &u64) -> Option<Vec<i64>> {
        Some((0..*p as i64).collect())
    }

    fn product_image_solve(&self, p: &u64, q: &u64, g: &i64) -> SolveOutcome<i64> {
        // p·h1 - q·h2 = g
        let (d, x, y) = xgcd(*p as i64, *q as i64);
        if g.rem_euclid(d) != 0 {
            return SolveOutcome::NoSolution;
        }
        let scale = g / d;
        SolveOutcome::Solution(checked_mul_i64(x, scale), -checked_mul_i64(y, scale))
    }

    fn image_escape(&self, g: &i64) -> Option<u64> {
        if *g == 0 {
            return None;
        }
        Some(2u64.pow(two_adic_valuation(*g) + 1))
    }

    fn g_format(&self, g: &i64) -> String {
        g.to_string()
    }

    fn g_parse(&self, s: &str) -> Result<i64, ElemParseError> {
        parse_i64(s, s)
    }

    fn p_format(&self, p: &u64) -> String {
        p.to_string()
    }

    fn p_parse(&self, s: &str) -> Result<u64, ElemParseError> {
        let v = parse_u64(s, s)?;
        if v == 0 {
            return Err(ElemParseError::new(s, 0, "ℕ^× has no 0"));
        }
        Ok(v)
    }

    fn validate_p(&self, p: &u64) -> Result<(), CoreError> {
        if *p >= 1 {
            Ok(())
        } else {
            Err(CoreError::ForeignElement("0 is not in ℕ^×".into()))
        }
    }
}
