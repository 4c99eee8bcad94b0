//! `⊕_ℕ ℤ ⋊ |2,3⟩`: the submonoid of `ℕ^×` generated by 2 and 3 acts on
//! finitely supported integer sequences by `θ₂(g) = 2g` and
//! `(θ₃(g))₀ = 3g₀`, `(θ₃(g))_n = g_n` for `n ≥ 1`. Doubling has infinite
//! index, `θ₃` has index 3.

use rlcm_core::ElemParseError;

use crate::semidirect::{IndexClass, SdAction, SolveOutcome};
use crate::util::{checked_pow_i64, parse_i64, parse_u64, split_top_level, strip_parens, xgcd};

/// Finitely supported sequence, trailing zeros trimmed.
pub type Seq = Vec<i64>;

/// Exponents `(a, b)` encoding `2^a·3^b`.
pub type Exp23 = (u32, u32);

#[derive(Debug, Clone, Default)]
pub struct SeqProdAction;

fn trim(mut v: Seq) -> Seq {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn zip_with(a: &Seq, b: &Seq, f: impl Fn(i64, i64) -> i64) -> Seq {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| f(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect(),
    )
}

impl SeqProdAction {
    fn scale(&self, (a, b): &Exp23, coord: usize) -> i64 {
        if coord == 0 {
            checked_pow_i64(2, *a) * checked_pow_i64(3, *b)
        } else {
            checked_pow_i64(2, *a)
        }
    }

    pub fn value_of(&self, (a, b): &Exp23) -> u64 {
        2u64.pow(*a) * 3u64.pow(*b)
    }

    pub fn exps_of(&self, mut v: u64) -> Option<Exp23> {
        if v == 0 {
            return None;
        }
        let mut a = 0;
        let mut b = 0;
        while v % 2 == 0 {
            v /= 2;
            a += 1;
        }
        while v % 3 == 0 {
            v /= 3;
            b += 1;
        }
        (v == 1).then_some((a, b))
    }
}

impl SdAction for SeqProdAction {
    type G = Seq;
    type P = Exp23;

    fn family_name(&self) -> String {
        "seqprod-23".into()
    }

    fn g_one(&self) -> Seq {
        Vec::new()
    }

    fn g_mul(&self, a: &Seq, b: &Seq) -> Seq {
        zip_with(a, b, |x, y| x.checked_add(y).expect("i64 overflow"))
    }

    fn g_inv(&self, a: &Seq) -> Seq {
        a.iter().map(|x| -x).collect()
    }

    fn g_generators(&self) -> Vec<Seq> {
        vec![vec![1], vec![-1], vec![0, 1], vec![0, -1]]
    }

    fn p_one(&self) -> Exp23 {
        (0, 0)
    }

    fn p_mul(&self, a: &Exp23, b: &Exp23) -> Exp23 {
        (a.0 + b.0, a.1 + b.1)
    }

    fn p_divide(&self, p: &Exp23, q: &Exp23) -> Option<Exp23> {
        (p.0 <= q.0 && p.1 <= q.1).then(|| (q.0 - p.0, q.1 - p.1))
    }

    fn p_lcm(&self, p: &Exp23, q: &Exp23) -> Exp23 {
        (p.0.max(q.0), p.1.max(q.1))
    }

    fn p_generators(&self) -> Vec<Exp23> {
        vec![(1, 0), (0, 1)]
    }

    fn apply(&self, p: &Exp23, g: &Seq) -> Seq {
        trim(
            g.iter()
                .enumerate()
                .map(|(i, x)| x.checked_mul(self.scale(p, i)).expect("i64 overflow"))
                .collect(),
        )
    }

    fn image_member(&self, p: &Exp23, g: &Seq) -> bool {
        g.iter().enumerate().all(|(i, x)| x % self.scale(p, i) == 0)
    }

    fn preimage(&self, p: &Exp23, g: &Seq) -> Option<Seq> {
        let mut out = Vec::with_capacity(g.len());
        for (i, x) in g.iter().enumerate() {
            let s = self.scale(p, i);
            if x % s != 0 {
                return None;
            }
            out.push(x / s);
        }
        Some(trim(out))
    }

    fn coset_normal(&self, p: &Exp23, g: &Seq) -> Seq {
        trim(
            g.iter()
                .enumerate()
                .map(|(i, x)| x.rem_euclid(self.scale(p, i)))
                .collect(),
        )
    }

    fn index_class(&self, p: &Exp23) -> IndexClass {
        if p.0 > 0 {
            IndexClass::Infinite
        } else {
            IndexClass::Finite(3u128.pow(p.1))
        }
    }

    fn coset_reps(&self, p: &Exp23) -> Option<Vec<Seq>> {
        match self.index_class(p) {
            IndexClass::Infinite => None,
            IndexClass::Finite(n) => Some((0..n as i64).map(|j| trim(vec![j])).collect()),
        }
    }

    fn product_image_solve(&self, p: &Exp23, q: &Exp23, g: &Seq) -> SolveOutcome<Seq> {
        // coordinatewise: scale_p(i)·x_i − scale_q(i)·y_i = g_i
        let mut h1 = Vec::with_capacity(g.len());
        let mut h2 = Vec::with_capacity(g.len());
        for (i, gi) in g.iter().enumerate() {
            let (sp, sq) = (self.scale(p, i), self.scale(q, i));
            let (d, x, y) = xgcd(sp, sq);
            if gi.rem_euclid(d) != 0 {
                return SolveOutcome::NoSolution;
            }
            let k = gi / d;
            h1.push(x.checked_mul(k).expect("i64 overflow"));
            h2.push(-(y.checked_mul(k).expect("i64 overflow")));
        }
        SolveOutcome::Solution(trim(h1), trim(h2))
    }

    fn image_escape(&self, g: &Seq) -> Option<Exp23> {
        let v = g
            .iter()
            .filter(|x| **x != 0)
            .map(|x| x.trailing_zeros())
            .min()?;
        Some((v + 1, 0))
    }

    fn g_format(&self, g: &Seq) -> String {
        if g.is_empty() {
            return "0".into();
        }
        let inner: Vec<String> = g.iter().map(|x| x.to_string()).collect();
        format!("({})", inner.join(","))
    }

    fn g_parse(&self, s: &str) -> Result<Seq, ElemParseError> {
        let t = s.trim();
        if t == "0" {
            return Ok(Vec::new());
        }
        let inner = strip_parens(t, s)?;
        let coords = split_top_level(inner, ',')
            .iter()
            .map(|c| parse_i64(c, s))
            .collect::<Result<Vec<i64>, _>>()?;
        Ok(trim(coords))
    }

    fn p_format(&self, p: &Exp23) -> String {
        self.value_of(p).to_string()
    }

    fn p_parse(&self, s: &str) -> Result<Exp23, ElemParseError> {
        let v = parse_u64(s, s)?;
        self.exps_of(v)
            .ok_or_else(|| ElemParseError::new(s, 0, "expected a product of powers of 2 and 3"))
    }
}
