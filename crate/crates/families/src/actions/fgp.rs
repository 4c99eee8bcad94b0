//! Free group `F_n` acted on by `ℕ^d` through endomorphisms sending each
//! generator to a fixed power of itself: `θ_i(a_k) = a_k^{m[i][k]}`.
//!
//! Image membership is syllable-wise divisibility, and the ideal solver is a
//! syllable-split search: `g ∈ θ_p(G)·θ_q(G)` iff some split point leaves an
//! α-divisible prefix, a β-divisible suffix, and a boundary syllable whose
//! exponent is a gcd-combination. Requires each row to contain an entry > 1
//! and the rows to be coprime columnwise, which makes the action respect the
//! order.

use rlcm_core::{CoreError, ElemParseError};

use crate::freegroup::FreeWord;
use crate::semidirect::{IndexClass, SdAction, SolveOutcome};
use crate::util::{parse_u32, split_top_level, strip_parens, xgcd};

pub type PExp = Vec<u32>;

#[derive(Debug, Clone)]
pub struct FgpAction {
    /// Number of free-group generators.
    pub n: usize,
    /// `rows[i][k]` is the exponent `θ_i` applies to generator `k`.
    pub rows: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FgpError {
    #[error("row {0} is all ones: the endomorphism would be the identity")]
    IdentityRow(usize),
    #[error("rows {0} and {1} share a common factor in column {2}")]
    NotCoprime(usize, usize, usize),
    #[error("row {0} has length {1}, expected {2}")]
    RowLength(usize, usize, usize),
    #[error("exponents must be ≥ 1")]
    ZeroExponent,
    #[error("need at least one row and one generator")]
    Empty,
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

impl FgpAction {
    /// Validates: each row has some entry > 1 (injective, nontrivial), and
    /// for each column the row entries are pairwise coprime.
    pub fn new(n: usize, rows: Vec<Vec<u64>>) -> Result<Self, FgpError> {
        if n == 0 || rows.is_empty() {
            return Err(FgpError::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(FgpError::RowLength(i, row.len(), n));
            }
            if row.iter().any(|&m| m == 0) {
                return Err(FgpError::ZeroExponent);
            }
            if row.iter().all(|&m| m == 1) {
                return Err(FgpError::IdentityRow(i));
            }
        }
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                for k in 0..n {
                    if gcd_u64(rows[i][k], rows[j][k]) > 1 {
                        return Err(FgpError::NotCoprime(i, j, k));
                    }
                }
            }
        }
        Ok(FgpAction { n, rows })
    }

    /// The power `θ_e` applies to generator `k`.
    pub fn multiplier(&self, e: &PExp, k: u32) -> i64 {
        let mut m: i64 = 1;
        for (i, &ei) in e.iter().enumerate() {
            let base = self.rows[i][k as usize] as i64;
            for _ in 0..ei {
                m = m.checked_mul(base).expect("exponent overflow");
            }
        }
        m
    }

    /// Generator indices fixed by the entire action (all rows have entry 1).
    pub fn fixed_generator_columns(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&k| self.rows.iter().all(|row| row[k] == 1))
            .collect()
    }

    fn gen_char(&self, k: u32) -> char {
        (b'a' + k as u8) as char
    }
}

impl SdAction for FgpAction {
    type G = FreeWord;
    type P = PExp;

    fn family_name(&self) -> String {
        format!("f{}-powers", self.n)
    }

    fn g_one(&self) -> FreeWord {
        FreeWord::one()
    }

    fn g_mul(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        a.mul(b)
    }

    fn g_inv(&self, a: &FreeWord) -> FreeWord {
        a.inv()
    }

    fn g_generators(&self) -> Vec<FreeWord> {
        (0..self.n as u32)
            .flat_map(|k| [FreeWord::generator(k, 1), FreeWord::generator(k, -1)])
            .collect()
    }

    fn p_one(&self) -> PExp {
        vec![0; self.rows.len()]
    }

    fn p_mul(&self, a: &PExp, b: &PExp) -> PExp {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn p_divide(&self, p: &PExp, q: &PExp) -> Option<PExp> {
        p.iter().zip(q).map(|(x, y)| y.checked_sub(*x)).collect()
    }

    fn p_lcm(&self, p: &PExp, q: &PExp) -> PExp {
        p.iter().zip(q).map(|(x, y)| *x.max(y)).collect()
    }

    fn p_generators(&self) -> Vec<PExp> {
        (0..self.rows.len())
            .map(|i| {
                let mut v = vec![0; self.rows.len()];
                v[i] = 1;
                v
            })
            .collect()
    }

    fn apply(&self, e: &PExp, g: &FreeWord) -> FreeWord {
        FreeWord::from_syllables(
            g.syllables()
                .iter()
                .map(|&(k, t)| {
                    (
                        k,
                        t.checked_mul(self.multiplier(e, k)).expect("overflow"),
                    )
                })
                .collect(),
        )
    }

    fn image_member(&self, e: &PExp, g: &FreeWord) -> bool {
        g.syllables()
            .iter()
            .all(|&(k, t)| t % self.multiplier(e, k) == 0)
    }

    fn preimage(&self, e: &PExp, g: &FreeWord) -> Option<FreeWord> {
        let mut sylls = Vec::with_capacity(g.syllables().len());
        for &(k, t) in g.syllables() {
            let m = self.multiplier(e, k);
            if t % m != 0 {
                return None;
            }
            sylls.push((k, t / m));
        }
        Some(FreeWord::from_syllables(sylls))
    }

    fn coset_normal(&self, e: &PExp, g: &FreeWord) -> FreeWord {
        // strip the maximal image suffix, reducing the boundary syllable
        let mut w = g.clone();
        loop {
            let Some((k, t)) = w.pop_syllable() else {
                break;
            };
            let m = self.multiplier(e, k);
            let r = t.rem_euclid(m);
            if r == 0 {
                continue;
            }
            w.push(k, r);
            break;
        }
        w
    }

    fn index_class(&self, e: &PExp) -> IndexClass {
        let nontrivial = (0..self.n as u32).any(|k| self.multiplier(e, k) > 1);
        if !nontrivial {
            IndexClass::Finite(1)
        } else if self.n == 1 {
            IndexClass::Finite(self.multiplier(e, 0) as u128)
        } else {
            // cosets (a_k a_l)^j are pairwise distinct, as in the free-group
            // examples: differences have syllables of exponent ±1
            IndexClass::Infinite
        }
    }

    fn coset_reps(&self, e: &PExp) -> Option<Vec<FreeWord>> {
        match self.index_class(e) {
            IndexClass::Finite(1) => Some(vec![FreeWord::one()]),
            IndexClass::Finite(m) => {
                Some((0..m as i64).map(|j| FreeWord::generator(0, j)).collect())
            }
            IndexClass::Infinite => None,
        }
    }

    fn product_image_solve(&self, p: &PExp, q: &PExp, g: &FreeWord) -> SolveOutcome<FreeWord> {
        let sylls = g.syllables();
        let m = sylls.len();
        if m == 0 {
            return SolveOutcome::Solution(FreeWord::one(), FreeWord::one());
        }
        let alpha: Vec<i64> = sylls.iter().map(|&(k, _)| self.multiplier(p, k)).collect();
        let beta: Vec<i64> = sylls.iter().map(|&(k, _)| self.multiplier(q, k)).collect();
        // prefix_a[j]: syllables before j are α-divisible
        let mut prefix_a = vec![true; m + 1];
        for j in 0..m {
            prefix_a[j + 1] = prefix_a[j] && sylls[j].1 % alpha[j] == 0;
        }
        let mut suffix_b = vec![true; m + 1];
        for j in (0..m).rev() {
            suffix_b[j] = suffix_b[j + 1] && sylls[j].1 % beta[j] == 0;
        }
        for j in 0..m {
            if !(prefix_a[j] && suffix_b[j + 1]) {
                continue;
            }
            let (k, t) = sylls[j];
            let (d, x, _) = xgcd(alpha[j], beta[j]);
            if t % d != 0 {
                continue;
            }
            // s ≡ 0 (mod α), s ≡ t (mod β); reduce modulo lcm to stay small
            let l = alpha[j] / d * beta[j];
            let s = (((alpha[j] as i128 * x as i128 % l as i128) * ((t / d) as i128 % l as i128))
                % l as i128) as i64;
            let mut u = FreeWord::from_syllables(sylls[..j].to_vec());
            u.push(k, s);
            let v = u.inv().mul(g); // = θ_q(h2)^{-1}
            let h1 = self
                .preimage(p, &u)
                .expect("prefix built from α-divisible syllables");
            let Some(h2) = self.preimage(q, &v.inv()) else {
                continue;
            };
            return SolveOutcome::Solution(h1, h2);
        }
        SolveOutcome::NoSolution
    }

    fn image_escape(&self, g: &FreeWord) -> Option<PExp> {
        if g.is_one() {
            return None;
        }
        // find a row that moves some generator occurring in g, then raise it
        // until the multiplier exceeds every exponent of that generator
        for (i, row) in self.rows.iter().enumerate() {
            for &(k, t) in g.syllables() {
                let base = row[k as usize];
                if base > 1 {
                    let mut power: i64 = 1;
                    let mut e = 0u32;
                    while power <= t.abs() {
                        power = power.checked_mul(base as i64).expect("overflow");
                        e += 1;
                    }
                    let mut exps = self.p_one();
                    exps[i] = e;
                    debug_assert!(!self.image_member(&exps, g));
                    return Some(exps);
                }
            }
        }
        None
    }

    fn g_format(&self, g: &FreeWord) -> String {
        g.format_with(|k| self.gen_char(k))
    }

    fn g_parse(&self, s: &str) -> Result<FreeWord, ElemParseError> {
        let n = self.n;
        FreeWord::parse_with(s, |c| {
            if c.is_ascii_lowercase() && ((c as usize) - ('a' as usize)) < n {
                Some(c as u32 - 'a' as u32)
            } else {
                None
            }
        })
    }

    fn p_format(&self, p: &PExp) -> String {
        let inner: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        format!("({})", inner.join(","))
    }

    fn p_parse(&self, s: &str) -> Result<PExp, ElemParseError> {
        let inner = strip_parens(s, s)?;
        let v = split_top_level(inner, ',')
            .iter()
            .map(|c| parse_u32(c, s))
            .collect::<Result<Vec<u32>, _>>()?;
        if v.len() != self.rows.len() {
            return Err(ElemParseError::new(
                s,
                0,
                format!("expected {} exponents", self.rows.len()),
            ));
        }
        Ok(v)
    }

    fn validate_g(&self, g: &FreeWord) -> Result<(), CoreError> {
        for &(k, _) in g.syllables() {
            if k as usize >= self.n {
                return Err(CoreError::ForeignElement(format!(
                    "generator index {} outside F_{}",
                    k, self.n
                )));
            }
        }
        Ok(())
    }
}
