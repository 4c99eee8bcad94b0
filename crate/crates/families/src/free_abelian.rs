//! Free abelian monoid `ℕ^k` on exponent vectors; lcm is the componentwise
//! maximum.

use rlcm_core::{CoreError, ElemParseError, Family, LcmOutcome};

use crate::util::{parse_u32, split_top_level, strip_parens};

#[derive(Debug, Clone)]
pub struct FreeAbelianFamily {
    pub rank: usize,
}

impl FreeAbelianFamily {
    pub fn new(rank: usize) -> Self {
        FreeAbelianFamily { rank }
    }
}

impl Family for FreeAbelianFamily {
    type Elem = Vec<u32>;

    fn name(&self) -> String {
        format!("free-abelian-{}", self.rank)
    }

    fn identity(&self) -> Option<Vec<u32>> {
        Some(vec![0; self.rank])
    }

    fn multiply(&self, p: &Vec<u32>, q: &Vec<u32>) -> Vec<u32> {
        p.iter().zip(q).map(|(a, b)| a + b).collect()
    }

    fn is_unit(&self, p: &Vec<u32>) -> bool {
        p.iter().all(|&a| a == 0)
    }

    fn unit_inverse(&self, x: &Vec<u32>) -> Result<Vec<u32>, CoreError> {
        if self.is_unit(x) {
            Ok(x.clone())
        } else {
            Err(CoreError::NotAUnit(self.format_elem(x)))
        }
    }

    fn left_divide(&self, p: &Vec<u32>, r: &Vec<u32>) -> Option<Vec<u32>> {
        p.iter()
            .zip(r)
            .map(|(a, b)| b.checked_sub(*a))
            .collect::<Option<Vec<u32>>>()
    }

    fn right_lcm(&self, p: &Vec<u32>, q: &Vec<u32>) -> LcmOutcome<Vec<u32>> {
        LcmOutcome::Lcm(p.iter().zip(q).map(|(a, b)| *a.max(b)).collect())
    }

    fn ideal_rep(&self, p: &Vec<u32>) -> Vec<u32> {
        p.clone()
    }

    fn unit_right_quotient(&self, p: &Vec<u32>, q: &Vec<u32>) -> Option<Vec<u32>> {
        (p == q).then(|| vec![0; self.rank])
    }

    fn unit_left_quotient(&self, p: &Vec<u32>, q: &Vec<u32>) -> Option<Vec<u32>> {
        (p == q).then(|| vec![0; self.rank])
    }

    fn generators(&self) -> Vec<Vec<u32>> {
        (0..self.rank)
            .map(|i| {
                let mut v = vec![0; self.rank];
                v[i] = 1;
                v
            })
            .collect()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn validate(&self, e: &Vec<u32>) -> Result<(), CoreError> {
        if e.len() == self.rank {
            Ok(())
        } else {
            Err(CoreError::ForeignElement(format!(
                "expected rank {}, got {}",
                self.rank,
                e.len()
            )))
        }
    }

    fn format_elem(&self, e: &Vec<u32>) -> String {
        let inner: Vec<String> = e.iter().map(|a| a.to_string()).collect();
        format!("({})", inner.join(","))
    }

    fn parse_elem(&self, s: &str) -> Result<Vec<u32>, ElemParseError> {
        let inner = strip_parens(s, s)?;
        let parts = split_top_level(inner, ',');
        if parts.len() != self.rank {
            return Err(ElemParseError::new(
                s,
                0,
                format!("expected {} components, got {}", self.rank, parts.len()),
            ));
        }
        parts.iter().map(|p| parse_u32(p, s)).collect()
    }
}
