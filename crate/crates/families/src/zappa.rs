//! Zappa-Szep products `X* ⋈ G` of the free monoid on the alphabet of a
//! Mealy automaton with the group its states generate, under
//! `(x,g)(y,h) = (x(g·y), g|_y h)`.
//!
//! Principal right ideals are classified by the word coordinate alone, so
//! the right LCM is a prefix comparison; the unit group is `{∅} × G`.

use rlcm_core::{CoreError, ElemParseError, Family, LcmOutcome, SearchBudget};

use crate::freegroup::{free_word_ball, FreeWord};
use crate::mealy::MealyAutomaton;
use crate::util::split_top_level;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ZsElem {
    pub w: Vec<u8>,
    pub g: FreeWord,
}

impl ZsElem {
    pub fn new(w: Vec<u8>, g: FreeWord) -> Self {
        ZsElem { w, g }
    }
}

#[derive(Debug, Clone)]
pub struct ZappaSzepFamily {
    pub automaton: MealyAutomaton,
    /// Depth for the bounded unit-quotient search (left units act on the
    /// whole word coordinate, so solving `p = x·q` needs a group search).
    pub solve_depth: usize,
}

impl ZappaSzepFamily {
    pub fn new(automaton: MealyAutomaton) -> Self {
        ZappaSzepFamily {
            automaton,
            solve_depth: 4,
        }
    }

    pub fn group_ball(&self, radius: usize) -> Vec<FreeWord> {
        free_word_ball(self.automaton.states.len() as u32, radius)
    }
}

impl Family for ZappaSzepFamily {
    type Elem = ZsElem;

    fn name(&self) -> String {
        "zappa-szep".into()
    }

    fn identity(&self) -> Option<ZsElem> {
        Some(ZsElem::new(Vec::new(), FreeWord::one()))
    }

    fn multiply(&self, a: &ZsElem, b: &ZsElem) -> ZsElem {
        let (moved, rest) = self.automaton.act(&a.g, &b.w);
        let mut w = a.w.clone();
        w.extend_from_slice(&moved);
        ZsElem::new(w, rest.mul(&b.g))
    }

    fn is_unit(&self, a: &ZsElem) -> bool {
        a.w.is_empty()
    }

    fn unit_inverse(&self, x: &ZsElem) -> Result<ZsElem, CoreError> {
        if self.is_unit(x) {
            Ok(ZsElem::new(Vec::new(), x.g.inv()))
        } else {
            Err(CoreError::NotAUnit(self.format_elem(x)))
        }
    }

    fn left_divide(&self, a: &ZsElem, r: &ZsElem) -> Option<ZsElem> {
        // (w,g)(y,k) = (w(g·y), g|_y k): y is determined by the word suffix
        let suffix = r.w.strip_prefix(a.w.as_slice())?;
        let (y, _) = self.automaton.act(&a.g.inv(), suffix);
        let (_, rest) = self.automaton.act(&a.g, &y);
        Some(ZsElem::new(y, rest.inv().mul(&r.g)))
    }

    fn right_lcm(&self, a: &ZsElem, b: &ZsElem) -> LcmOutcome<ZsElem> {
        if a.w.starts_with(&b.w) {
            LcmOutcome::Lcm(ZsElem::new(a.w.clone(), FreeWord::one()))
        } else if b.w.starts_with(&a.w) {
            LcmOutcome::Lcm(ZsElem::new(b.w.clone(), FreeWord::one()))
        } else {
            LcmOutcome::Disjoint
        }
    }

    fn ideal_rep(&self, a: &ZsElem) -> ZsElem {
        ZsElem::new(a.w.clone(), FreeWord::one())
    }

    fn unit_right_quotient(&self, a: &ZsElem, b: &ZsElem) -> Option<ZsElem> {
        // (w,g)(∅,x) = (w, g·x)
        (a.w == b.w).then(|| ZsElem::new(Vec::new(), a.g.inv().mul(&b.g)))
    }

    fn unit_left_quotient(&self, a: &ZsElem, b: &ZsElem) -> Option<ZsElem> {
        // (∅,k)(z,h) = (k·z, k|_z·h): bounded exact search for k; a hit is
        // verified by replay, a miss within the ball returns None
        if a.w.len() != b.w.len() {
            return None;
        }
        for k in self.group_ball(self.solve_depth) {
            let (moved, rest) = self.automaton.act(&k, &b.w);
            if moved == a.w && rest.mul(&b.g) == a.g {
                return Some(ZsElem::new(Vec::new(), k));
            }
        }
        None
    }

    fn generators(&self) -> Vec<ZsElem> {
        let mut out: Vec<ZsElem> = (0..self.automaton.letters.len() as u8)
            .map(|x| ZsElem::new(vec![x], FreeWord::one()))
            .collect();
        out.extend(self.unit_generators());
        out
    }

    fn unit_generators(&self) -> Vec<ZsElem> {
        (0..self.automaton.states.len() as u32)
            .flat_map(|s| {
                [
                    ZsElem::new(Vec::new(), FreeWord::generator(s, 1)),
                    ZsElem::new(Vec::new(), FreeWord::generator(s, -1)),
                ]
            })
            .collect()
    }

    fn validate(&self, e: &ZsElem) -> Result<(), CoreError> {
        let nl = self.automaton.letters.len() as u8;
        if e.w.iter().any(|&x| x >= nl) {
            return Err(CoreError::ForeignElement("letter outside alphabet".into()));
        }
        let ns = self.automaton.states.len() as u32;
        if e.g.syllables().iter().any(|&(s, _)| s >= ns) {
            return Err(CoreError::ForeignElement("state outside automaton".into()));
        }
        Ok(())
    }

    fn format_elem(&self, e: &ZsElem) -> String {
        let w: String = if e.w.is_empty() {
            "_".into()
        } else {
            e.w.iter()
                .map(|&x| self.automaton.letters[x as usize])
                .collect()
        };
        format!("({},{})", w, self.automaton.format_group(&e.g))
    }

    fn parse_elem(&self, s: &str) -> Result<ZsElem, ElemParseError> {
        let t = s.trim();
        if t == "1" {
            return Ok(self.identity().unwrap());
        }
        let inner = crate::util::strip_parens(t, s)?;
        let parts = split_top_level(inner, ',');
        if parts.len() != 2 {
            return Err(ElemParseError::new(s, 0, "expected `(word,group)`"));
        }
        let wpart = parts[0].trim();
        let w: Vec<u8> = if wpart == "_" {
            Vec::new()
        } else {
            wpart
                .chars()
                .map(|c| {
                    self.automaton
                        .letter_index(c)
                        .ok_or_else(|| ElemParseError::new(s, 0, format!("letter `{}` outside alphabet", c)))
                })
                .collect::<Result<_, _>>()?
        };
        let g = FreeWord::parse_with(parts[1], |c| self.automaton.state_index(c))?;
        Ok(ZsElem::new(w, g))
    }

    fn left_class_rep(&self, a: &ZsElem, budget: &SearchBudget) -> ZsElem {
        // orbit of the word coordinate under the unit ball, group part
        // dropped only when a unit exactly reproduces the element
        let mut best = a.clone();
        for k in self.group_ball(budget.depth) {
            let (moved, rest) = self.automaton.act(&k, &a.w);
            let cand = ZsElem::new(moved, rest.mul(&a.g));
            if cand < best {
                best = cand;
            }
        }
        best
    }
}
