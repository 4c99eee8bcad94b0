//! Free monoid on a finite alphabet; right LCMs are given by the prefix
//! order.

use rlcm_core::{CoreError, ElemParseError, Family, LcmOutcome};

#[derive(Debug, Clone)]
pub struct FreeMonoidFamily {
    pub alphabet: Vec<char>,
}

impl FreeMonoidFamily {
    pub fn new(alphabet: Vec<char>) -> Self {
        FreeMonoidFamily { alphabet }
    }

    fn letter_index(&self, c: char) -> Option<u8> {
        self.alphabet.iter().position(|&a| a == c).map(|i| i as u8)
    }
}

impl Family for FreeMonoidFamily {
    type Elem = Vec<u8>;

    fn name(&self) -> String {
        "free-monoid".into()
    }

    fn identity(&self) -> Option<Vec<u8>> {
        Some(Vec::new())
    }

    fn multiply(&self, p: &Vec<u8>, q: &Vec<u8>) -> Vec<u8> {
        let mut r = p.clone();
        r.extend_from_slice(q);
        r
    }

    fn is_unit(&self, p: &Vec<u8>) -> bool {
        p.is_empty()
    }

    fn unit_inverse(&self, x: &Vec<u8>) -> Result<Vec<u8>, CoreError> {
        if x.is_empty() {
            Ok(Vec::new())
        } else {
            Err(CoreError::NotAUnit(self.format_elem(x)))
        }
    }

    fn left_divide(&self, p: &Vec<u8>, r: &Vec<u8>) -> Option<Vec<u8>> {
        r.strip_prefix(p.as_slice()).map(|s| s.to_vec())
    }

    fn right_lcm(&self, p: &Vec<u8>, q: &Vec<u8>) -> LcmOutcome<Vec<u8>> {
        if p.starts_with(q) {
            LcmOutcome::Lcm(p.clone())
        } else if q.starts_with(p) {
            LcmOutcome::Lcm(q.clone())
        } else {
            LcmOutcome::Disjoint
        }
    }

    fn ideal_rep(&self, p: &Vec<u8>) -> Vec<u8> {
        p.clone()
    }

    fn unit_right_quotient(&self, p: &Vec<u8>, q: &Vec<u8>) -> Option<Vec<u8>> {
        (p == q).then(Vec::new)
    }

    fn unit_left_quotient(&self, p: &Vec<u8>, q: &Vec<u8>) -> Option<Vec<u8>> {
        (p == q).then(Vec::new)
    }

    fn generators(&self) -> Vec<Vec<u8>> {
        (0..self.alphabet.len() as u8).map(|i| vec![i]).collect()
    }

    fn validate(&self, e: &Vec<u8>) -> Result<(), CoreError> {
        for &i in e {
            if i as usize >= self.alphabet.len() {
                return Err(CoreError::ForeignElement(format!(
                    "letter index {} outside alphabet of size {}",
                    i,
                    self.alphabet.len()
                )));
            }
        }
        Ok(())
    }

    fn format_elem(&self, e: &Vec<u8>) -> String {
        if e.is_empty() {
            "1".into()
        } else {
            e.iter().map(|&i| self.alphabet[i as usize]).collect()
        }
    }

    fn parse_elem(&self, s: &str) -> Result<Vec<u8>, ElemParseError> {
        let t = s.trim();
        if t == "1" {
            return Ok(Vec::new());
        }
        t.chars()
            .enumerate()
            .map(|(i, c)| {
                self.letter_index(c)
                    .ok_or_else(|| ElemParseError::new(s, i, format!("letter `{}` outside alphabet", c)))
            })
            .collect()
    }
}
