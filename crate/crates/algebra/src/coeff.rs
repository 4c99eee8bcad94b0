//! Exact Gaussian-rational scalars `a + b·i` with `a, b ∈ ℚ`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use rlcm_core::ElemParseError;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn zero() -> Self {
        Gaussian::default()
    }

    pub fn one() -> Self {
        Gaussian::new(BigRational::one(), BigRational::zero())
    }

    pub fn i() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Gaussian::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Gaussian::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus, exact.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn format(&self) -> String {
        fn rat(r: &BigRational) -> String {
            if r.is_integer() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.is_zero() {
            return "0".into();
        }
        if self.im.is_zero() {
            return rat(&self.re);
        }
        let imag = if self.im.abs().is_one() {
            "i".to_string()
        } else {
            format!("{}i", rat(&self.im.abs()))
        };
        if self.re.is_zero() {
            return if self.im.is_negative() {
                format!("-{}", imag)
            } else {
                imag
            };
        }
        format!(
            "{}{}{}",
            rat(&self.re),
            if self.im.is_negative() { "-" } else { "+" },
            imag
        )
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for Gaussian {
    fn add_assign(&mut self, rhs: Gaussian) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: Gaussian) -> Gaussian {
        &self * &rhs
    }
}

impl Mul for &Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Exact square root of a nonnegative rational, when it is rational.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &sn * &sn == *num && &sd * &sd == *den {
        Some(BigRational::new(
            BigInt::from(sn),
            BigInt::from(sd),
        ))
    } else {
        None
    }
}

/// Parse a rational literal `a` or `a/b`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let num: BigInt = n.trim().parse().ok()?;
        let den: BigInt = d.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num, den))
    } else {
        let num: BigInt = t.parse().ok()?;
        Some(BigRational::from_integer(num))
    }
}

/// Parse a Gaussian literal: `a/b`, `a/b i`, `i`, `-i`, or `a/b+c/d i`.
pub fn parse_gaussian(s: &str) -> Result<Gaussian, ElemParseError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(ElemParseError::new(s, 0, "empty scalar"));
    }
    // split into one or two signed parts
    let mut parts: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (idx, c) in t.char_indices() {
        if (c == '+' || c == '-') && idx != 0 {
            parts.push(cur.clone());
            cur.clear();
            if c == '-' {
                cur.push('-');
            }
        } else {
            cur.push(c);
        }
    }
    parts.push(cur);
    if parts.len() > 2 {
        return Err(ElemParseError::new(s, 0, "too many terms in scalar"));
    }
    let mut g = Gaussian::zero();
    for part in parts {
        let (imag, body) = if let Some(stripped) = part.strip_suffix('i') {
            (true, stripped.to_string())
        } else {
            (false, part.clone())
        };
        let value = match body.as_str() {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            b => parse_rational(b)
                .ok_or_else(|| ElemParseError::new(s, 0, format!("bad rational `{}`", b)))?,
        };
        if imag {
            g.im += value;
        } else {
            g.re += value;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_conjugation() {
        let z = parse_gaussian("1/2+3i").unwrap();
        let w = parse_gaussian("2-i").unwrap();
        assert_eq!((&z * &w).format(), "4+11/2i");
        assert_eq!(z.conj().format(), "1/2-3i");
        assert_eq!(z.norm_sqr(), parse_rational("37/4").unwrap());
    }

    #[test]
    fn sqrt_of_perfect_squares() {
        assert_eq!(
            rational_sqrt(&parse_rational("9/4").unwrap()),
            parse_rational("3/2")
        );
        assert_eq!(rational_sqrt(&parse_rational("2").unwrap()), None);
    }

    #[test]
    fn literal_round_trips() {
        for s in ["0", "1", "-1", "3/2", "i", "-i", "1/2+3i", "2-i", "5/3i"] {
            let g = parse_gaussian(s).unwrap();
            assert_eq!(parse_gaussian(&g.format()).unwrap(), g, "{}", s);
        }
    }
}
