//! Characters of standard, costandard and simple modules at zero framing,
//! graded decomposition matrices and dimension tables.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bases::{compute_bases, BasisError, LMatrix};
use crate::exactq::LaurentPoly;
use crate::rootdata::{tkpf, DimVector};
use crate::shuffle::BracketConvention;
use crate::thetamod::{costandard_elt, standard_elt, theta_kappa, ThetaElt};
use crate::words::{compare, is_symmetric_word, is_theta_lyndon, theta_good_words, Order, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("leading word of the element for {nu} under {order} is {got}, coefficient {coeff}")]
    WrongLeading { nu: Word, order: &'static str, got: String, coeff: String },
    #[error("multiplicity of {mu} in the element for {nu} is not exact: {detail}")]
    Inexact { nu: Word, mu: Word, detail: String },
    #[error("multiplicity of {mu} in the element for {nu} is not in N[q,q^-1]: {d}")]
    Negative { nu: Word, mu: Word, d: String },
    #[error("simple character for {nu} has coefficient {c} at {word}")]
    NegativeCharacter { nu: Word, word: Word, c: String },
    #[error("simple character for {nu} is not bar-symmetric")]
    NotBarSymmetric { nu: Word },
    #[error("bar(x) - x for {nu} has coefficient {r} at {mu}, not antisymmetric with zero constant term")]
    NotAntisymmetric { nu: Word, mu: Word, r: String },
    #[error("{0}")]
    Costandard(String),
    #[error("number of simples {got} differs from tkpf {want}")]
    Count { got: usize, want: u64 },
    #[error(transparent)]
    Basis(#[from] BasisError),
}

/// How multiplicities are extracted from a triangular family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PeelMethod {
    /// Remainders are made bar-invariant; off-diagonal multiplicities lie
    /// in qZ[q] for standards and q^-1 Z[q^-1] for costandards.
    #[default]
    BarInvariant,
    /// Each multiplicity is the coefficient of the lower word divided by
    /// its theta-kappa.
    Naive,
}

pub fn std_char(nu: &Word) -> ThetaElt {
    standard_elt(nu)
}

pub fn costd_char(nu: &Word) -> Result<ThetaElt, CharError> {
    costandard_elt(nu).map(|(e, _)| e).map_err(CharError::Costandard)
}

/// Result of peeling a triangular family. `decomp[i][j]` is the
/// multiplicity of simple j in element i; indices follow `words`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peeled {
    pub simples: Vec<ThetaElt>,
    pub decomp: LMatrix,
}

fn leading(x: &ThetaElt, order: Order) -> Option<&Word> {
    x.terms.max_word_by(order)
}

/// Peels `family` (indexed like `words`) into simple characters. Words
/// are processed in ascending `order`; element i must have leading word
/// words[i] under `order` with coefficient theta-kappa.
pub fn peel(
    words: &[Word],
    family: &[ThetaElt],
    order: Order,
    method: PeelMethod,
    positive: bool,
) -> Result<Peeled, CharError> {
    let n = words.len();
    let mut pos: Vec<usize> = (0..n).collect();
    pos.sort_by(|&a, &b| compare(order, &words[a], &words[b]));
    let mut simples: Vec<Option<ThetaElt>> = vec![None; n];
    let mut decomp = vec![vec![LaurentPoly::zero(); n]; n];

    for (p, &i) in pos.iter().enumerate() {
        let nu = &words[i];
        let x = &family[i];
        let tk = theta_kappa(nu);
        if leading(x, order) != Some(nu) || x.coeff(nu) != tk {
            return Err(CharError::WrongLeading {
                nu: nu.clone(),
                order: order.tag(),
                got: leading(x, order).map_or("none".into(), |w| w.to_string()),
                coeff: x.coeff(nu).to_string(),
            });
        }
        let below = &pos[..p];
        let mut l = x.clone();
        match method {
            PeelMethod::Naive => {
                for &j in below.iter().rev() {
                    let mu = &words[j];
                    let c = l.coeff(mu);
                    if c.is_zero() {
                        continue;
                    }
                    let d = c.exact_div(&theta_kappa(mu)).map_err(|e| CharError::Inexact {
                        nu: nu.clone(),
                        mu: mu.clone(),
                        detail: e.to_string(),
                    })?;
                    l = l.sub(&simples[j].as_ref().unwrap().scale(&d));
                    decomp[i][j] = d;
                }
            }
            PeelMethod::BarInvariant => {
                let mut r = x.bar_coeffs().sub(x);
                for &j in below.iter().rev() {
                    let mu = &words[j];
                    let c = r.coeff(mu);
                    if c.is_zero() {
                        continue;
                    }
                    let rj = c.exact_div(&theta_kappa(mu)).map_err(|e| CharError::Inexact {
                        nu: nu.clone(),
                        mu: mu.clone(),
                        detail: e.to_string(),
                    })?;
                    let lj = simples[j].as_ref().unwrap();
                    r = r.sub(&lj.scale(&rj));
                    if !rj.coeff(0).eq(&0.into()) || rj.bar() != -&rj {
                        return Err(CharError::NotAntisymmetric {
                            nu: nu.clone(),
                            mu: mu.clone(),
                            r: rj.to_string(),
                        });
                    }
                    // bar(d) - d = rj
                    let d = if positive { -&rj.positive_part() } else { rj.positive_part().bar() };
                    l = l.sub(&lj.scale(&d));
                    decomp[i][j] = d;
                }
                if !r.is_zero() {
                    return Err(CharError::NotBarSymmetric { nu: nu.clone() });
                }
            }
        }
        for &j in below {
            if !decomp[i][j].is_nonnegative() {
                return Err(CharError::Negative {
                    nu: nu.clone(),
                    mu: words[j].clone(),
                    d: decomp[i][j].to_string(),
                });
            }
        }
        if let Some((w, c)) = l.terms.iter().find(|(_, c)| !c.is_nonnegative()) {
            return Err(CharError::NegativeCharacter {
                nu: nu.clone(),
                word: w.clone(),
                c: c.to_string(),
            });
        }
        if l.bar_coeffs() != l {
            return Err(CharError::NotBarSymmetric { nu: nu.clone() });
        }
        if leading(&l, order) != Some(nu) || l.coeff(nu) != tk {
            return Err(CharError::WrongLeading {
                nu: nu.clone(),
                order: order.tag(),
                got: leading(&l, order).map_or("none".into(), |w| w.to_string()),
                coeff: l.coeff(nu).to_string(),
            });
        }
        decomp[i][i] = LaurentPoly::one();
        simples[i] = Some(l);
    }
    Ok(Peeled {
        simples: simples.into_iter().map(Option::unwrap).collect(),
        decomp,
    })
}

/// Standard, costandard and simple characters of one weight, with the
/// decomposition matrix of the standards. Rows follow `words`
/// (anti-lex ascending).
#[derive(Clone, Debug)]
pub struct CharTable {
    pub weight: DimVector,
    pub words: Vec<Word>,
    pub standards: Vec<ThetaElt>,
    pub costandards: Vec<ThetaElt>,
    pub simples: Vec<ThetaElt>,
    pub decomp: LMatrix,
    pub method: PeelMethod,
}

pub fn simple_chars(beta: &DimVector, method: PeelMethod) -> Result<CharTable, CharError> {
    let words = theta_good_words(beta);
    let standards: Vec<ThetaElt> = words.iter().map(std_char).collect();
    let costandards = words.iter().map(costd_char).collect::<Result<Vec<_>, _>>()?;
    let peeled = peel(&words, &standards, Order::AntiLex, method, true)?;
    let want = tkpf(beta);
    if peeled.simples.len() as u64 != want {
        return Err(CharError::Count {
            got: peeled.simples.len(),
            want,
        });
    }
    Ok(CharTable {
        weight: beta.clone(),
        words,
        standards,
        costandards,
        simples: peeled.simples,
        decomp: peeled.decomp,
        method,
    })
}

/// Graded dimension of each simple module and the totals.
#[derive(Clone, Debug, Serialize)]
pub struct DimTable {
    pub weight: String,
    pub simples: usize,
    pub tkpf: u64,
    pub rows: Vec<DimRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimRow {
    pub word: Word,
    pub graded_dim: LaurentPoly,
    pub dim: String,
    pub words_in_support: usize,
}

pub fn dim_table(beta: &DimVector) -> Result<DimTable, CharError> {
    let t = simple_chars(beta, PeelMethod::default())?;
    let rows = t
        .words
        .iter()
        .zip(&t.simples)
        .map(|(w, l)| {
            let g = l.terms.iter().fold(LaurentPoly::zero(), |a, (_, c)| &a + c);
            DimRow {
                word: w.clone(),
                dim: g.eval_one().to_string(),
                graded_dim: g,
                words_in_support: l.terms.len(),
            }
        })
        .collect();
    Ok(DimTable {
        weight: beta.to_string(),
        simples: t.simples.len(),
        tkpf: tkpf(beta),
        rows,
    })
}

/// Structural checks on a character table.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CharReport {
    pub weight: String,
    pub decomp_ok: bool,
    pub simples_ok: bool,
    pub count_ok: bool,
    pub symmetric_match_dual_canonical: bool,
    /// words whose simple character differs from the dual canonical element
    pub dual_canonical_mismatch: Vec<String>,
    pub lyndon_or_symmetric_standard_simple: bool,
    pub costandard_same_simples: bool,
    pub failures: Vec<String>,
}

/// Checks a table against the dual canonical basis and the costandard
/// characters peeled under `costd_order`.
pub fn check_table(t: &CharTable, costd_order: Order) -> CharReport {
    let n = t.words.len();
    let mut rep = CharReport {
        weight: t.weight.to_string(),
        decomp_ok: true,
        simples_ok: true,
        count_ok: n as u64 == tkpf(&t.weight),
        symmetric_match_dual_canonical: true,
        lyndon_or_symmetric_standard_simple: true,
        ..Default::default()
    };
    for i in 0..n {
        for j in 0..n {
            let d = &t.decomp[i][j];
            let ok = if i == j {
                d.is_one()
            } else if compare(Order::AntiLex, &t.words[j], &t.words[i]).is_gt() {
                d.is_zero()
            } else {
                d.is_nonnegative()
            };
            if !ok {
                rep.decomp_ok = false;
                rep.failures.push(format!("decomp[{}][{}] = {d}", t.words[i], t.words[j]));
            }
        }
    }
    for (w, l) in t.words.iter().zip(&t.simples) {
        if l.bar_coeffs() != *l || l.max_word() != Some(w) || l.coeff(w) != theta_kappa(w) {
            rep.simples_ok = false;
            rep.failures.push(format!("simple {w} fails bar-symmetry or leading term"));
        }
    }
    match compute_bases(&t.weight, BracketConvention::Plus) {
        Ok(b) => {
            for (i, w) in t.words.iter().enumerate() {
                if t.simples[i] != b.dual_canonical[i] {
                    rep.dual_canonical_mismatch.push(w.to_string());
                    if is_symmetric_word(w) {
                        rep.symmetric_match_dual_canonical = false;
                        rep.failures.push(format!("symmetric {w}: simple differs from dual canonical"));
                    }
                }
            }
        }
        Err(e) => {
            rep.symmetric_match_dual_canonical = false;
            rep.failures.push(e.to_string());
        }
    }
    for (i, w) in t.words.iter().enumerate() {
        if (is_theta_lyndon(w) || is_symmetric_word(w)) && t.standards[i] != t.simples[i] {
            rep.lyndon_or_symmetric_standard_simple = false;
            rep.failures.push(format!("{w}: standard differs from simple"));
        }
    }
    match peel(&t.words, &t.costandards, costd_order, t.method, false) {
        Ok(p) if p.simples == t.simples => rep.costandard_same_simples = true,
        Ok(_) => rep.failures.push(format!("costandard peeling under {} gives other simples", costd_order.tag())),
        Err(e) => rep.failures.push(format!("costandard peeling under {}: {e}", costd_order.tag())),
    }
    rep
}
