//! Dense polynomials over ℚ, enough for the polynomial-ring catalog family:
//! ring operations, euclidean division, (x)gcd, parsing and printing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rlcm_core::ElemParseError;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Poly {
    /// Coefficients, lowest degree first, no trailing zeros.
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly { coeffs: vec![c] }.trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        Poly { coeffs }.trimmed()
    }

    pub fn monomial(c: BigRational, deg: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            coeffs.push(a + b);
        }
        Poly { coeffs }.trimmed()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs }.trimmed()
    }

    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        let d = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        while !rem.is_zero() && rem.degree().unwrap() >= d {
            let shift = rem.degree().unwrap() - d;
            let coef = rem.leading().unwrap() / &lead;
            let term = Poly::monomial(coef, shift);
            rem = rem.sub(&term.mul(divisor));
            quot = quot.add(&term);
        }
        (quot, rem)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.divrem(self).1.is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (d, u, v) monic with u·self + v·other = d.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Poly::one(), Poly::zero());
        let (mut v0, mut v1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            (r0, r1) = (r1, r);
            (u0, u1) = (u1.clone(), u0.sub(&q.mul(&u1)));
            (v0, v1) = (v1.clone(), v0.sub(&q.mul(&v1)));
        }
        if r0.is_zero() {
            return (Poly::zero(), Poly::zero(), Poly::zero());
        }
        let lead = r0.leading().unwrap().clone();
        let scale = Poly::constant(lead.recip());
        (r0.monic(), u0.mul(&scale), v0.mul(&scale))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.recip();
                Poly {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match i {
                0 => format!("{}", mag),
                1 if mag.is_one() => "T".into(),
                1 => format!("{}T", mag),
                _ if mag.is_one() => format!("T^{}", i),
                _ => format!("{}T^{}", mag, i),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{}", body)
                } else {
                    body
                });
            } else {
                parts.push(format!("{}{}", if c.is_negative() { "-" } else { "+" }, body));
            }
        }
        parts.join("")
    }

    /// Parse sums of `cT^k` terms, e.g. `T^2-3/2T+1`.
    pub fn parse(s: &str) -> Result<Poly, ElemParseError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(ElemParseError::new(s, 0, "empty polynomial"));
        }
        let chars: Vec<char> = t.chars().collect();
        let mut acc = Poly::zero();
        let mut i = 0usize;
        while i < chars.len() {
            let mut sign = BigRational::one();
            while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            if i >= chars.len() {
                return Err(ElemParseError::new(s, i, "dangling sign"));
            }
            // optional rational coefficient
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            let coef = if start == i {
                BigRational::one()
            } else {
                parse_rational(&chars[start..i].iter().collect::<String>())
                    .ok_or_else(|| ElemParseError::new(s, start, "bad coefficient"))?
            };
            // optional T power
            let deg = if i < chars.len() && chars[i] == 'T' {
                i += 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let dstart = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    chars[dstart..i]
                        .iter()
                        .collect::<String>()
                        .parse::<usize>()
                        .map_err(|_| ElemParseError::new(s, dstart, "bad exponent"))?
                } else {
                    1
                }
            } else {
                0
            };
            acc = acc.add(&Poly::monomial(sign * coef, deg));
        }
        Ok(acc)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.parse().ok()?;
        let den: BigInt = d.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num, den))
    } else {
        let num: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(num))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn euclidean_division() {
        let (q, r) = p("T^3+1").divrem(&p("T+1"));
        assert_eq!(q, p("T^2-T+1"));
        assert!(r.is_zero());
        let (_, r) = p("T^2+1").divrem(&p("T"));
        assert_eq!(r, p("1"));
    }

    #[test]
    fn xgcd_is_a_bezout_identity() {
        let a = p("T^2-1");
        let b = p("T^2+T");
        let (d, u, v) = a.xgcd(&b);
        assert_eq!(d, p("T+1"));
        assert_eq!(u.mul(&a).add(&v.mul(&b)), d);
    }

    #[test]
    fn format_round_trip() {
        for s in ["T^2-3/2T+1", "T", "2T^3+T", "1/2"] {
            assert_eq!(Poly::parse(s).unwrap().format(), s);
        }
    }
}
