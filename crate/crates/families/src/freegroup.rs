//! Freely reduced words over a finite generating set, in syllable form.
//!
//! A word is a sequence of syllables `(generator, exponent)` with nonzero
//! exponents and distinct adjacent generators. Free reduction is a sound
//! congruence for any group generated by the letters; for automaton groups
//! it may be strictly finer than group equality, which the Mealy layer
//! exposes separately as depth-bounded action equivalence.

use rlcm_core::ElemParseError;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord {
    syllables: Vec<(u32, i64)>,
}

impl FreeWord {
    pub fn one() -> Self {
        FreeWord::default()
    }

    pub fn generator(k: u32, exp: i64) -> Self {
        let mut w = FreeWord::one();
        w.push(k, exp);
        w
    }

    pub fn from_syllables(sylls: Vec<(u32, i64)>) -> Self {
        let mut w = FreeWord::one();
        for (k, e) in sylls {
            w.push(k, e);
        }
        w
    }

    pub fn is_one(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllables(&self) -> &[(u32, i64)] {
        &self.syllables
    }

    /// Total number of letters, counting multiplicity.
    pub fn length(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// Append `gen^exp`, merging and cancelling as needed.
    pub fn push(&mut self, gen: u32, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((g, e)) if *g == gen => {
                *e += exp;
                if *e == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((gen, exp)),
        }
    }

    pub fn pop_syllable(&mut self) -> Option<(u32, i64)> {
        self.syllables.pop()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut r = self.clone();
        for &(g, e) in &other.syllables {
            r.push(g, e);
        }
        r
    }

    pub fn inv(&self) -> FreeWord {
        FreeWord {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    /// Iterate single letters `(generator, sign)` left to right.
    pub fn letters(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.syllables.iter().flat_map(|&(g, e)| {
            let sign = e.signum();
            (0..e.unsigned_abs()).map(move |_| (g, sign))
        })
    }

    pub fn format_with(&self, name: impl Fn(u32) -> char) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut out = String::new();
        for &(g, e) in &self.syllables {
            out.push(name(g));
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }

    /// Parse `a^2b^-1a`-style words; `1` is the identity, `a'` is `a^-1`.
    pub fn parse_with(
        s: &str,
        index: impl Fn(char) -> Option<u32>,
    ) -> Result<FreeWord, ElemParseError> {
        let t = s.trim();
        if t == "1" {
            return Ok(FreeWord::one());
        }
        let chars: Vec<char> = t.chars().collect();
        let mut w = FreeWord::one();
        let mut i = 0usize;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let gen = index(c)
                .ok_or_else(|| ElemParseError::new(s, i, format!("unknown generator `{}`", c)))?;
            i += 1;
            let mut exp: i64 = 1;
            if i < chars.len() && chars[i] == '\'' {
                exp = -1;
                i += 1;
            } else if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                exp = lit
                    .parse()
                    .map_err(|_| ElemParseError::new(s, start, "bad exponent"))?;
            }
            w.push(gen, exp);
        }
        Ok(w)
    }
}

/// Shortlex ball of freely reduced words over generators `0..n`, both signs,
/// of length at most `radius`. Deterministic order: by length, then lex.
pub fn free_word_ball(n: u32, radius: usize) -> Vec<FreeWord> {
    let mut out = vec![FreeWord::one()];
    let mut frontier = vec![FreeWord::one()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..n {
                for sign in [1i64, -1] {
                    let mut v = w.clone();
                    v.push(g, sign);
                    if v.length() == w.length() + 1 {
                        next.push(v);
                    }
                }
            }
        }
        next.sort();
        next.dedup();
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_cancels_inverse_pairs() {
        let w = FreeWord::from_syllables(vec![(0, 2), (1, 1), (1, -1), (0, -2)]);
        assert!(w.is_one());
        let u = FreeWord::from_syllables(vec![(0, 3), (1, 2)]);
        assert!(u.mul(&u.inv()).is_one());
        assert_eq!(u.inv().inv(), u);
    }

    #[test]
    fn ball_counts_free_group_elements() {
        // |B(2, r)| = 1 + 4·(3^r - 1)/2 for the free group on 2 generators
        assert_eq!(free_word_ball(2, 1).len(), 5);
        assert_eq!(free_word_ball(2, 2).len(), 17);
        assert_eq!(free_word_ball(2, 3).len(), 53);
    }

    #[test]
    fn parse_and_format_round_trip() {
        let names = |g: u32| (b'a' + g as u8) as char;
        let index = |c: char| {
            if c.is_ascii_lowercase() {
                Some(c as u32 - 'a' as u32)
            } else {
                None
            }
        };
        let w = FreeWord::parse_with("a^2b'a", index).unwrap();
        assert_eq!(w.syllables(), &[(0, 2), (1, -1), (0, 1)]);
        assert_eq!(w.format_with(names), "a^2b^-1a");
        assert_eq!(FreeWord::parse_with("1", index).unwrap(), FreeWord::one());
    }
}
