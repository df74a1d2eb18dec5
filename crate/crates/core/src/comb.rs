//! Finite linear combinations of words with Laurent coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactq::LaurentPoly;
use crate::words::{compare, Order, Word};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WordComb(BTreeMap<Word, LaurentPoly>);

impl WordComb {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: Word, c: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn add_term(&mut self, w: Word, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&w) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.0.remove(&w);
                }
            }
            None => {
                self.0.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Terms in ascending anti-lex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Word, &LaurentPoly)> {
        self.0.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.0.keys()
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.0.get(w).cloned().unwrap_or_default()
    }

    pub fn get(&self, w: &Word) -> Option<&LaurentPoly> {
        self.0.get(w)
    }

    /// Largest word in anti-lex order.
    pub fn max_word(&self) -> Option<&Word> {
        self.0.keys().next_back()
    }

    pub fn min_word(&self) -> Option<&Word> {
        self.0.keys().next()
    }

    pub fn max_word_by(&self, order: Order) -> Option<&Word> {
        self.0.keys().max_by(|a, b| compare(order, a, b))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.0 {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.0 {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.0 {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::from_int(-1));
        out
    }

    /// Coefficientwise bar involution.
    pub fn bar_coeffs(&self) -> Self {
        Self(self.0.iter().map(|(w, c)| (w.clone(), c.bar())).collect())
    }

    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.0 {
            out.add_term(f(w), c.clone());
        }
        out
    }

    pub fn into_inner(self) -> BTreeMap<Word, LaurentPoly> {
        self.0
    }
}

impl FromIterator<(Word, LaurentPoly)> for WordComb {
    fn from_iter<T: IntoIterator<Item = (Word, LaurentPoly)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }
}

impl fmt::Display for WordComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(w, c)| format!("({c})*[{w}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for WordComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// JSON term record, shared by the element schemas.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TermJson {
    pub word: Word,
    pub coeff: LaurentPoly,
}

impl WordComb {
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.0
            .iter()
            .map(|(w, c)| TermJson {
                word: w.clone(),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[TermJson]) -> Self {
        terms
            .iter()
            .map(|t| (t.word.clone(), t.coeff.clone()))
            .collect()
    }
}
