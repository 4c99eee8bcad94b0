//! Finite-state letter transducers defining self-similar actions.
//!
//! A state `s` acts on a letter `x` by emitting an output letter and handing
//! the rest of the word to a next state (the restriction `s|_x`); wordwise,
//! `g·(xw) = (g·x)(g|_x·w)`. Each state must act as a permutation of the
//! alphabet. Group elements are freely reduced words in the states; the
//! action of an inverse letter uses the inverse permutation together with
//! `s⁻¹|_x = (s|_{s⁻¹·x})⁻¹`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::freegroup::FreeWord;

/// Next-state reference: a real state or the implicit identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateRef {
    Identity,
    State(u32),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MealyError {
    #[error("state `{0}` does not permute the alphabet")]
    NotAPermutation(String),
    #[error("duplicate state name `{0}`")]
    DuplicateState(String),
    #[error("state name `{0}` must be a single letter (`1` is reserved for the identity)")]
    BadStateName(String),
    #[error("transition references unknown state `{0}`")]
    UnknownState(String),
    #[error("transition references unknown letter `{0}`")]
    UnknownLetter(char),
    #[error("missing transition for state `{0}` on letter `{1}`")]
    MissingTransition(String, char),
    #[error("alphabet must be nonempty, without `_`, `,`, parens or whitespace")]
    BadAlphabet,
}

#[derive(Debug, Clone)]
pub struct MealyAutomaton {
    pub letters: Vec<char>,
    pub states: Vec<char>,
    /// `transitions[s][x] = (output letter, next state)`
    pub transitions: Vec<Vec<(u8, StateRef)>>,
}

impl MealyAutomaton {
    pub fn new(
        letters: Vec<char>,
        states: Vec<char>,
        transitions: Vec<Vec<(u8, StateRef)>>,
    ) -> Result<Self, MealyError> {
        if letters.is_empty()
            || letters
                .iter()
                .any(|c| c.is_whitespace() || matches!(c, '_' | ',' | '(' | ')'))
        {
            return Err(MealyError::BadAlphabet);
        }
        let mut seen = BTreeSet::new();
        for &s in &states {
            if s == '1' {
                return Err(MealyError::BadStateName(s.to_string()));
            }
            if !seen.insert(s) {
                return Err(MealyError::DuplicateState(s.to_string()));
            }
        }
        let a = MealyAutomaton {
            letters,
            states,
            transitions,
        };
        for (si, row) in a.transitions.iter().enumerate() {
            let outputs: BTreeSet<u8> = row.iter().map(|&(o, _)| o).collect();
            if row.len() != a.letters.len() || outputs.len() != a.letters.len() {
                return Err(MealyError::NotAPermutation(a.states[si].to_string()));
            }
        }
        Ok(a)
    }

    pub fn letter_index(&self, c: char) -> Option<u8> {
        self.letters.iter().position(|&l| l == c).map(|i| i as u8)
    }

    pub fn state_index(&self, c: char) -> Option<u32> {
        self.states.iter().position(|&s| s == c).map(|i| i as u32)
    }

    /// One positive letter step: `(s·x, s|_x)`.
    fn step(&self, s: u32, x: u8) -> (u8, StateRef) {
        self.transitions[s as usize][x as usize]
    }

    /// One inverse letter step: `(s⁻¹·y, restriction)` where the restriction
    /// is `(s|_{s⁻¹·y})⁻¹`.
    fn step_inv(&self, s: u32, y: u8) -> (u8, StateRef) {
        let row = &self.transitions[s as usize];
        let x = row
            .iter()
            .position(|&(o, _)| o == y)
            .expect("validated permutation") as u8;
        (x, row[x as usize].1)
    }

    /// Act with a group word on a single letter; returns the output letter
    /// and the restriction `g|_x`.
    pub fn act_letter(&self, g: &FreeWord, x: u8) -> (u8, FreeWord) {
        let mut cur = x;
        // rightmost letter of the word acts first; its restriction sits
        // rightmost in the output word
        let letters: Vec<(u32, i64)> = g.letters().collect();
        let mut collected: Vec<(u32, i64)> = Vec::with_capacity(letters.len());
        for &(s, sign) in letters.iter().rev() {
            let (y, r) = if sign > 0 {
                self.step(s, cur)
            } else {
                self.step_inv(s, cur)
            };
            cur = y;
            if let StateRef::State(t) = r {
                collected.push((t, sign));
            }
        }
        collected.reverse();
        (cur, FreeWord::from_syllables(collected))
    }

    /// Act on a word: returns `g·w` and the restriction `g|_w`.
    pub fn act(&self, g: &FreeWord, w: &[u8]) -> (Vec<u8>, FreeWord) {
        let mut out = Vec::with_capacity(w.len());
        let mut cur = g.clone();
        for &x in w {
            let (y, rest) = self.act_letter(&cur, x);
            out.push(y);
            cur = rest;
        }
        (out, cur)
    }

    /// Depth-bounded semantic equality: `g` and `h` act identically on all
    /// words of length ≤ `depth`. For a faithful action this converges to
    /// group equality as the depth grows.
    pub fn acts_equal(&self, g: &FreeWord, h: &FreeWord, depth: usize) -> bool {
        let diff = g.mul(&h.inv());
        self.is_identity_upto(&diff, depth)
    }

    /// `g` fixes every word of length ≤ `depth`.
    pub fn is_identity_upto(&self, g: &FreeWord, depth: usize) -> bool {
        if g.is_one() {
            return true;
        }
        let mut level: Vec<FreeWord> = vec![g.clone()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for rest in &level {
                for x in 0..self.letters.len() as u8 {
                    let (y, r) = self.act_letter(rest, x);
                    if y != x {
                        return false;
                    }
                    next.push(r);
                }
            }
            level = next;
        }
        true
    }

    pub fn words_of_length(&self, n: usize) -> Vec<Vec<u8>> {
        let k = self.letters.len() as u8;
        let mut out: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..k).map(move |x| {
                        let mut v = w.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out
    }

    pub fn words_up_to(&self, n: usize) -> Vec<Vec<u8>> {
        (0..=n).flat_map(|l| self.words_of_length(l)).collect()
    }

    pub fn format_group(&self, g: &FreeWord) -> String {
        g.format_with(|k| self.states[k as usize])
    }
}
