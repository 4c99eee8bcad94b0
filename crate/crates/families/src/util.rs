//! Small parsing helpers shared by the element grammars.

use rlcm_core::ElemParseError;

/// Split at top level on `sep`, respecting nesting of `()`, `{}` and `[]`.
pub fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Strip one layer of surrounding parentheses; errors when absent.
pub fn strip_parens<'a>(s: &'a str, whole: &str) -> Result<&'a str, ElemParseError> {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') && t.len() >= 2 {
        Ok(&t[1..t.len() - 1])
    } else {
        Err(ElemParseError::new(whole, 0, "expected `(...)`"))
    }
}

pub fn parse_i64(s: &str, whole: &str) -> Result<i64, ElemParseError> {
    s.trim()
        .parse()
        .map_err(|_| ElemParseError::new(whole, 0, format!("expected integer, got `{}`", s)))
}

pub fn parse_u64(s: &str, whole: &str) -> Result<u64, ElemParseError> {
    s.trim()
        .parse()
        .map_err(|_| ElemParseError::new(whole, 0, format!("expected positive integer, got `{}`", s)))
}

pub fn parse_u32(s: &str, whole: &str) -> Result<u32, ElemParseError> {
    s.trim()
        .parse()
        .map_err(|_| ElemParseError::new(whole, 0, format!("expected exponent, got `{}`", s)))
}

pub fn checked_mul_i64(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("i64 overflow in semigroup arithmetic")
}

pub fn checked_mul_u64(a: u64, b: u64) -> u64 {
    a.checked_mul(b).expect("u64 overflow in semigroup arithmetic")
}

pub fn checked_pow_i64(base: i64, exp: u32) -> i64 {
    base.checked_pow(exp).expect("i64 overflow in power")
}

pub fn checked_pow_u64(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp).expect("u64 overflow in power")
}

/// Extended gcd over i64: returns (d, x, y) with a·x + b·y = d = gcd(a, b) ≥ 0.
pub fn xgcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (d, x, y) = xgcd(b, a.rem_euclid(b));
        // a = (a div b)·b + (a mod b) with euclidean division
        let q = (a - a.rem_euclid(b)) / b;
        (d, y, x - q * y)
    }
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    xgcd(a, b).0
}

pub fn two_adic_valuation(n: i64) -> u32 {
    debug_assert!(n != 0);
    n.trailing_zeros()
}
