//! Shift action of `ℕ^k` on `G = ⊕_{ℕ^k} ℤ`: `θ_p` translates supports by
//! `p`, so `θ_p(G)` consists of the elements supported inside `p + ℕ^k` and
//! has infinite index for every `p ≠ 0`.

use std::collections::BTreeMap;

use rlcm_core::{CoreError, ElemParseError};

use crate::semidirect::{IndexClass, SdAction, SolveOutcome};
use crate::util::{parse_i64, parse_u32, split_top_level, strip_parens};

/// Finitely supported `ℕ^k → ℤ`, zero values absent.
pub type Grid = BTreeMap<Vec<u32>, i64>;

#[derive(Debug, Clone)]
pub struct ShiftAction {
    pub rank: usize,
}

impl ShiftAction {
    pub fn new(rank: usize) -> Self {
        ShiftAction { rank }
    }

    fn above(&self, p: &[u32], key: &[u32]) -> bool {
        key.iter().zip(p).all(|(k, q)| k >= q)
    }

    fn shift_key(&self, key: &[u32], p: &[u32], up: bool) -> Vec<u32> {
        key.iter()
            .zip(p)
            .map(|(k, q)| if up { k + q } else { k - q })
            .collect()
    }
}

fn insert_nonzero(m: &mut Grid, key: Vec<u32>, v: i64) {
    if v != 0 {
        m.insert(key, v);
    }
}

impl SdAction for ShiftAction {
    type G = Grid;
    type P = Vec<u32>;

    fn family_name(&self) -> String {
        format!("shift-n{}", self.rank)
    }

    fn g_one(&self) -> Grid {
        Grid::new()
    }

    fn g_mul(&self, a: &Grid, b: &Grid) -> Grid {
        let mut out = a.clone();
        for (k, v) in b {
            let newv = out.get(k).copied().unwrap_or(0) + v;
            if newv == 0 {
                out.remove(k);
            } else {
                out.insert(k.clone(), newv);
            }
        }
        out
    }

    fn g_inv(&self, a: &Grid) -> Grid {
        a.iter().map(|(k, v)| (k.clone(), -v)).collect()
    }

    fn g_generators(&self) -> Vec<Grid> {
        let origin = vec![0; self.rank];
        let mut plus = Grid::new();
        plus.insert(origin.clone(), 1);
        let mut minus = Grid::new();
        minus.insert(origin, -1);
        vec![plus, minus]
    }

    fn p_one(&self) -> Vec<u32> {
        vec![0; self.rank]
    }

    fn p_mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn p_divide(&self, p: &Vec<u32>, q: &Vec<u32>) -> Option<Vec<u32>> {
        p.iter()
            .zip(q)
            .map(|(x, y)| y.checked_sub(*x))
            .collect()
    }

    fn p_lcm(&self, p: &Vec<u32>, q: &Vec<u32>) -> Vec<u32> {
        p.iter().zip(q).map(|(x, y)| *x.max(y)).collect()
    }

    fn p_generators(&self) -> Vec<Vec<u32>> {
        (0..self.rank)
            .map(|i| {
                let mut v = vec![0; self.rank];
                v[i] = 1;
                v
            })
            .collect()
    }

    fn apply(&self, p: &Vec<u32>, g: &Grid) -> Grid {
        g.iter()
            .map(|(k, v)| (self.shift_key(k, p, true), *v))
            .collect()
    }

    fn image_member(&self, p: &Vec<u32>, g: &Grid) -> bool {
        g.keys().all(|k| self.above(p, k))
    }

    fn preimage(&self, p: &Vec<u32>, g: &Grid) -> Option<Grid> {
        if !self.image_member(p, g) {
            return None;
        }
        Some(
            g.iter()
                .map(|(k, v)| (self.shift_key(k, p, false), *v))
                .collect(),
        )
    }

    fn coset_normal(&self, p: &Vec<u32>, g: &Grid) -> Grid {
        g.iter()
            .filter(|(k, _)| !self.above(p, k))
            .map(|(k, v)| (k.clone(), *v))
            .collect()
    }

    fn index_class(&self, p: &Vec<u32>) -> IndexClass {
        if p.iter().all(|&x| x == 0) {
            IndexClass::Finite(1)
        } else {
            IndexClass::Infinite
        }
    }

    fn coset_reps(&self, p: &Vec<u32>) -> Option<Vec<Grid>> {
        match self.index_class(p) {
            IndexClass::Finite(_) => Some(vec![Grid::new()]),
            IndexClass::Infinite => None,
        }
    }

    fn product_image_solve(&self, p: &Vec<u32>, q: &Vec<u32>, g: &Grid) -> SolveOutcome<Grid> {
        // θ_p(h1) − θ_q(h2) = g: the p-shifted part absorbs everything above
        // p, the rest must sit above q
        let mut h1 = Grid::new();
        let mut h2 = Grid::new();
        for (k, v) in g {
            if self.above(p, k) {
                insert_nonzero(&mut h1, self.shift_key(k, p, false), *v);
            } else if self.above(q, k) {
                insert_nonzero(&mut h2, self.shift_key(k, q, false), -*v);
            } else {
                return SolveOutcome::NoSolution;
            }
        }
        SolveOutcome::Solution(h1, h2)
    }

    fn image_escape(&self, g: &Grid) -> Option<Vec<u32>> {
        let k0 = g.keys().next()?;
        Some(k0.iter().map(|x| x + 1).collect())
    }

    fn g_format(&self, g: &Grid) -> String {
        if g.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = g
            .iter()
            .map(|(k, v)| {
                let ks: Vec<String> = k.iter().map(|x| x.to_string()).collect();
                format!("({}):{}", ks.join(","), v)
            })
            .collect();
        format!("{{{}}}", parts.join(","))
    }

    fn g_parse(&self, s: &str) -> Result<Grid, ElemParseError> {
        let t = s.trim();
        if t == "0" {
            return Ok(Grid::new());
        }
        if !(t.starts_with('{') && t.ends_with('}')) {
            return Err(ElemParseError::new(s, 0, "expected `{(i,j):v,...}` or `0`"));
        }
        let inner = &t[1..t.len() - 1];
        let mut out = Grid::new();
        if inner.trim().is_empty() {
            return Ok(out);
        }
        for part in split_top_level(inner, ',') {
            let (kpart, vpart) = part
                .rsplit_once(':')
                .ok_or_else(|| ElemParseError::new(s, 0, "expected `(key):value`"))?;
            let kinner = strip_parens(kpart, s)?;
            let key = split_top_level(kinner, ',')
                .iter()
                .map(|c| parse_u32(c, s))
                .collect::<Result<Vec<u32>, _>>()?;
            if key.len() != self.rank {
                return Err(ElemParseError::new(s, 0, format!("key rank must be {}", self.rank)));
            }
            insert_nonzero(&mut out, key, parse_i64(vpart, s)?);
        }
        Ok(out)
    }

    fn p_format(&self, p: &Vec<u32>) -> String {
        let inner: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        format!("({})", inner.join(","))
    }

    fn p_parse(&self, s: &str) -> Result<Vec<u32>, ElemParseError> {
        let inner = strip_parens(s, s)?;
        let v = split_top_level(inner, ',')
            .iter()
            .map(|c| parse_u32(c, s))
            .collect::<Result<Vec<u32>, _>>()?;
        if v.len() != self.rank {
            return Err(ElemParseError::new(s, 0, format!("rank must be {}", self.rank)));
        }
        Ok(v)
    }

    fn validate_g(&self, g: &Grid) -> Result<(), CoreError> {
        for k in g.keys() {
            if k.len() != self.rank {
                return Err(CoreError::ForeignElement(format!(
                    "support key of rank {} in rank-{} shift",
                    k.len(),
                    self.rank
                )));
            }
        }
        Ok(())
    }

    fn validate_p(&self, p: &Vec<u32>) -> Result<(), CoreError> {
        if p.len() == self.rank {
            Ok(())
        } else {
            Err(CoreError::ForeignElement("wrong rank".into()))
        }
    }
}
