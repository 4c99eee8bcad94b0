//! `ℚ[T] ⋊ |p₁,…,p_d⟩`: chosen non-constant, pairwise coprime polynomials
//! act on the additive group of `ℚ[T]` by multiplication. Every nontrivial
//! index is `|ℚ|^deg = ∞`; solving uses the Bezout identity in `ℚ[T]`.

use rlcm_core::{CoreError, ElemParseError};

use crate::poly::Poly;
use crate::semidirect::{IndexClass, SdAction, SolveOutcome};
use crate::util::{parse_u32, split_top_level, strip_parens};

#[derive(Debug, Clone)]
pub struct PolyAction {
    pub gens: Vec<Poly>,
}

/// Exponent vector over the registered polynomial generators.
pub type PExp = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyActionError {
    #[error("generator {0} is constant")]
    ConstantGenerator(usize),
    #[error("generators {0} and {1} are not coprime")]
    NotCoprime(usize, usize),
    #[error("need at least one generator")]
    Empty,
}

impl PolyAction {
    /// Validates the catalog hypotheses: non-constant and pairwise coprime
    /// generators (so principal ideals intersect in the product).
    pub fn new(gens: Vec<Poly>) -> Result<Self, PolyActionError> {
        if gens.is_empty() {
            return Err(PolyActionError::Empty);
        }
        for (i, g) in gens.iter().enumerate() {
            if g.degree().unwrap_or(0) == 0 {
                return Err(PolyActionError::ConstantGenerator(i));
            }
        }
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if gens[i].gcd(&gens[j]).degree() != Some(0) {
                    return Err(PolyActionError::NotCoprime(i, j));
                }
            }
        }
        Ok(PolyAction { gens })
    }

    pub fn poly_of(&self, e: &PExp) -> Poly {
        let mut acc = Poly::one();
        for (g, k) in self.gens.iter().zip(e) {
            acc = acc.mul(&g.pow(*k));
        }
        acc
    }
}

impl SdAction for PolyAction {
    type G = Poly;
    type P = PExp;

    fn family_name(&self) -> String {
        "polyq".into()
    }

    fn g_one(&self) -> Poly {
        Poly::zero()
    }

    fn g_mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }

    fn g_inv(&self, a: &Poly) -> Poly {
        a.neg()
    }

    fn g_generators(&self) -> Vec<Poly> {
        vec![
            Poly::one(),
            Poly::one().neg(),
            Poly::parse("T").unwrap(),
            Poly::parse("T").unwrap().neg(),
        ]
    }

    fn p_one(&self) -> PExp {
        vec![0; self.gens.len()]
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
        (0..self.gens.len())
            .map(|i| {
                let mut v = vec![0; self.gens.len()];
                v[i] = 1;
                v
            })
            .collect()
    }

    fn apply(&self, p: &PExp, g: &Poly) -> Poly {
        self.poly_of(p).mul(g)
    }

    fn image_member(&self, p: &PExp, g: &Poly) -> bool {
        self.poly_of(p).divides(g)
    }

    fn preimage(&self, p: &PExp, g: &Poly) -> Option<Poly> {
        let (q, r) = g.divrem(&self.poly_of(p));
        r.is_zero().then_some(q)
    }

    fn coset_normal(&self, p: &PExp, g: &Poly) -> Poly {
        g.divrem(&self.poly_of(p)).1
    }

    fn index_class(&self, p: &PExp) -> IndexClass {
        if p.iter().all(|&x| x == 0) {
            IndexClass::Finite(1)
        } else {
            IndexClass::Infinite
        }
    }

    fn coset_reps(&self, p: &PExp) -> Option<Vec<Poly>> {
        match self.index_class(p) {
            IndexClass::Finite(_) => Some(vec![Poly::zero()]),
            IndexClass::Infinite => None,
        }
    }

    fn product_image_solve(&self, p: &PExp, q: &PExp, g: &Poly) -> SolveOutcome<Poly> {
        // α·h1 − β·h2 = g via the Bezout identity
        let alpha = self.poly_of(p);
        let beta = self.poly_of(q);
        let (d, u, v) = alpha.xgcd(&beta);
        let (scale, rem) = g.divrem(&d);
        if !rem.is_zero() {
            return SolveOutcome::NoSolution;
        }
        SolveOutcome::Solution(u.mul(&scale), v.mul(&scale).neg())
    }

    fn image_escape(&self, g: &Poly) -> Option<PExp> {
        if g.is_zero() {
            return None;
        }
        let dg = self.gens[0].degree().unwrap();
        let k = (g.degree().unwrap() / dg + 1) as u32;
        let mut e = self.p_one();
        e[0] = k;
        Some(e)
    }

    fn g_format(&self, g: &Poly) -> String {
        g.format()
    }

    fn g_parse(&self, s: &str) -> Result<Poly, ElemParseError> {
        Poly::parse(s)
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
        if v.len() != self.gens.len() {
            return Err(ElemParseError::new(
                s,
                0,
                format!("expected {} exponents", self.gens.len()),
            ));
        }
        Ok(v)
    }

    fn validate_p(&self, p: &PExp) -> Result<(), CoreError> {
        if p.len() == self.gens.len() {
            Ok(())
        } else {
            Err(CoreError::ForeignElement("wrong exponent length".into()))
        }
    }
}
