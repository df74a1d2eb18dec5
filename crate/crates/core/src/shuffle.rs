//! The quantum shuffle algebra: the q-twisted shuffle product, deletion
//! operators, reversal maps, evaluation of free-algebra elements, Lyndon
//! brackets, and the brute-force goodness test.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::comb::{TermJson, WordComb};
use crate::exactq::LaurentPoly;
use crate::linalg::Echelon;
use crate::rootdata::{cartan, DimVector, Letter};
use crate::words::{
    coset_reps, lyndon_factorize, standard_factorize, theta_reverse, weyl_act, words_of_weight,
    CosetKind, Word,
};

/// Homogeneous element of the shuffle algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShuffleElt {
    pub weight: DimVector,
    pub terms: WordComb,
}

impl ShuffleElt {
    pub fn zero(weight: DimVector) -> Self {
        Self {
            weight,
            terms: WordComb::zero(),
        }
    }

    pub fn word(w: &Word) -> Self {
        Self {
            weight: w.weight(),
            terms: WordComb::word(w.clone()),
        }
    }

    pub fn unit() -> Self {
        Self::word(&Word::empty())
    }

    pub fn from_comb(weight: DimVector, terms: WordComb) -> Self {
        debug_assert!(terms.words().all(|w| w.weight() == weight));
        Self { weight, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.terms.coeff(w)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_comb(self.weight.clone(), self.terms.scale(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.weight, other.weight, "adding elements of different weights");
        Self::from_comb(self.weight.clone(), self.terms.add(&other.terms))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.weight, other.weight, "subtracting elements of different weights");
        Self::from_comb(self.weight.clone(), self.terms.sub(&other.terms))
    }
}

impl fmt::Display for ShuffleElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms)
    }
}

#[derive(Serialize, Deserialize)]
struct ShuffleJson {
    weight: DimVector,
    terms: Vec<TermJson>,
}

impl Serialize for ShuffleElt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ShuffleJson {
            weight: self.weight.clone(),
            terms: self.terms.to_json_terms(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ShuffleElt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ShuffleJson::deserialize(d)?;
        Ok(ShuffleElt {
            weight: j.weight,
            terms: WordComb::from_json_terms(&j.terms),
        })
    }
}

/// Element of the free algebra; the product is concatenation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeElt {
    pub terms: WordComb,
}

impl FreeElt {
    pub fn word(w: &Word) -> Self {
        Self {
            terms: WordComb::word(w.clone()),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = WordComb::zero();
        for (a, x) in self.terms.iter() {
            for (b, y) in other.terms.iter() {
                out.add_term(a.concat(b), x * y);
            }
        }
        Self { terms: out }
    }

    pub fn min_word(&self) -> Option<&Word> {
        self.terms.min_word()
    }
}

/// Exponent d of one shuffle term: each time a letter of the right block
/// ends up before a letter of the left block, add their pairing.
fn shuffle_exponent(nu: &Word, nu2: &Word, w: &crate::words::SignedPerm) -> i64 {
    let m = nu.len();
    let mut d = 0;
    for (k, &a) in nu.letters().iter().enumerate() {
        for (l, &b) in nu2.letters().iter().enumerate() {
            if w.images[k] > w.images[m + l] {
                d += cartan(a, b);
            }
        }
    }
    d
}

/// nu o nu' as a combination of words.
pub fn shuffle_words(nu: &Word, nu2: &Word) -> WordComb {
    let joined = nu.concat(nu2);
    let mut out = WordComb::zero();
    for w in coset_reps(CosetKind::Sym, nu.len(), nu2.len()) {
        let d = shuffle_exponent(nu, nu2, &w);
        out.add_term(weyl_act(&w, &joined), LaurentPoly::q_pow(-d));
    }
    out
}

pub fn shuffle_comb(x: &WordComb, y: &WordComb) -> WordComb {
    let mut out = WordComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&shuffle_words(a, b), &(ca * cb));
        }
    }
    out
}

pub fn shuffle_mul(x: &ShuffleElt, y: &ShuffleElt) -> ShuffleElt {
    ShuffleElt::from_comb(&x.weight + &y.weight, shuffle_comb(&x.terms, &y.terms))
}

/// Removes a trailing `i` from each word, dropping the other words.
pub fn right_delete_comb(i: Letter, x: &WordComb) -> WordComb {
    x.iter()
        .filter(|(w, _)| w.last() == Some(i))
        .map(|(w, c)| (w.prefix(w.len() - 1), c.clone()))
        .collect()
}

/// Removes a leading `i` from each word, dropping the other words.
pub fn left_delete_comb(i: Letter, x: &WordComb) -> WordComb {
    x.iter()
        .filter(|(w, _)| w.first() == Some(i))
        .map(|(w, c)| (w.suffix_from(1), c.clone()))
        .collect()
}

fn minus_letter(weight: &DimVector, i: Letter) -> DimVector {
    weight.checked_sub(&DimVector::letter(i)).unwrap_or_default()
}

pub fn right_delete(i: Letter, x: &ShuffleElt) -> ShuffleElt {
    ShuffleElt::from_comb(minus_letter(&x.weight, i), right_delete_comb(i, &x.terms))
}

pub fn left_delete(i: Letter, x: &ShuffleElt) -> ShuffleElt {
    ShuffleElt::from_comb(minus_letter(&x.weight, i), left_delete_comb(i, &x.terms))
}

/// Word reversal.
pub fn sigma(x: &ShuffleElt) -> ShuffleElt {
    ShuffleElt::from_comb(x.weight.clone(), x.terms.map_words(Word::reversed))
}

/// Word reversal followed by theta on every letter.
pub fn theta_sigma(x: &ShuffleElt) -> ShuffleElt {
    ShuffleElt::from_comb(x.weight.theta_vec(), x.terms.map_words(theta_reverse))
}

/// Xi(nu) = nu_1 o nu_2 o ... o nu_k.
pub fn xi_word(nu: &Word) -> WordComb {
    let mut acc = WordComb::word(Word::empty());
    for &l in nu.letters() {
        acc = shuffle_comb(&acc, &WordComb::word(Word::letter(l)));
    }
    acc
}

pub fn xi_eval(u: &FreeElt) -> WordComb {
    let mut out = WordComb::zero();
    for (w, c) in u.terms.iter() {
        out.add_scaled(&xi_word(w), c);
    }
    out
}

/// Sign of the q-exponent in [x, y]_q = xy - q^(+-|x|.|y|) yx.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BracketConvention {
    #[default]
    Plus,
    Minus,
}

/// Bracketing of a Lyndon word through its standard factorization,
/// extended multiplicatively over the Lyndon factors of any word.
pub fn lyndon_bracket(nu: &Word, conv: BracketConvention) -> FreeElt {
    let fact = lyndon_factorize(nu);
    fact.factors
        .iter()
        .fold(FreeElt::word(&Word::empty()), |acc, f| {
            acc.concat(&bracket_lyndon(f, conv))
        })
}

fn bracket_lyndon(nu: &Word, conv: BracketConvention) -> FreeElt {
    let Some((a, b)) = standard_factorize(nu) else {
        return FreeElt::word(nu);
    };
    let ba = bracket_lyndon(&a, conv);
    let bb = bracket_lyndon(&b, conv);
    let e = b.weight().dot(&a.weight());
    let e = match conv {
        BracketConvention::Plus => e,
        BracketConvention::Minus => -e,
    };
    let mut terms = bb.concat(&ba).terms;
    terms.add_scaled(&ba.concat(&bb).terms, &LaurentPoly::monomial(-1, e));
    FreeElt { terms }
}

/// Good words of weight beta, found as the pivots of an echelon form of
/// the span of all Xi(mu).
pub fn good_words_bruteforce(beta: &DimVector) -> Vec<Word> {
    let mut ech = Echelon::new();
    for mu in words_of_weight(beta) {
        ech.insert(&xi_word(&mu));
    }
    ech.pivots()
}
