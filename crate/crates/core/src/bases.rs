//! PBW, canonical and dual bases of the zero-framing module in word
//! coordinates, the pairing between lower elements and word elements, the
//! lower bar involution and the transition matrices between families.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::comb::WordComb;
use crate::exactq::{LaurentPoly, RationalQ};
use crate::linalg::{invert, Matrix};
use crate::rootdata::DimVector;
use crate::shuffle::BracketConvention;
use crate::thetamod::{theta_kappa, theta_l, theta_m, ThetaElt};
use crate::words::{is_symmetric_word, is_theta_lyndon, theta_good_words, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasisError {
    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(DimVector, DimVector),
    #[error("bases require zero framing, got {0}")]
    NonZeroFraming(DimVector),
    #[error("element is not in the module image; residual {0}")]
    NotInImage(String),
    #[error("pairing Gram matrix of weight {0} is singular")]
    Singular(DimVector),
    #[error("coefficient of {word} is not a Laurent polynomial: {coeff}")]
    NotLaurent { word: Word, coeff: String },
    #[error("inexact PBW division for {word}: {detail}")]
    InexactPbw { word: Word, detail: String },
    #[error("transition {name} is not unitriangular at ({row}, {col}): {entry}")]
    NotUnitriangular { name: String, row: Word, col: Word, entry: String },
    #[error("canonical basis normalization fails at ({row}, {col}): {entry}")]
    NotInQZq { row: Word, col: Word, entry: String },
    #[error("check failed: {0}")]
    Check(String),
}

/// A lower-module element written as sum of coeff * F_{sigma(mu)} v,
/// i.e. in the basis of monomial elements theta-m_mu.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerElt {
    pub weight: DimVector,
    pub fcoords: BTreeMap<Word, RationalQ>,
}

impl LowerElt {
    pub fn monomial(nu: &Word) -> Self {
        Self {
            weight: nu.theta_weight(),
            fcoords: [(nu.clone(), RationalQ::one())].into_iter().collect(),
        }
    }

    /// Antilinear bar: conjugates the coordinates.
    pub fn bar(&self) -> Self {
        Self {
            weight: self.weight.clone(),
            fcoords: self.fcoords.iter().map(|(w, c)| (w.clone(), c.bar())).collect(),
        }
    }
}

/// The pairing (x, y): the coordinate of F_{sigma(mu)} v in x times the
/// coefficient of the word mu in y, summed.
pub fn pair(x: &LowerElt, y: &ThetaElt) -> Result<RationalQ, BasisError> {
    if x.weight != y.weight {
        return Err(BasisError::WeightMismatch(x.weight.clone(), y.weight.clone()));
    }
    Ok(x.fcoords.iter().fold(RationalQ::zero(), |s, (w, c)| {
        &s + &(c * &RationalQ::from(y.coeff(w)))
    }))
}

fn rq(p: &LaurentPoly) -> RationalQ {
    RationalQ::from(p.clone())
}

fn laurent(c: &RationalQ, word: &Word) -> Result<LaurentPoly, BasisError> {
    c.to_laurent().ok_or_else(|| BasisError::NotLaurent {
        word: word.clone(),
        coeff: c.to_string(),
    })
}

/// One weight space: theta-good words, the monomial elements indexed by
/// them, and the Gram matrix `gram[i][j]` = coefficient of word i in
/// monomial j, which is the pairing matrix of the monomial basis.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub weight: DimVector,
    pub framing: DimVector,
    pub words: Vec<Word>,
    pub monomials: Vec<ThetaElt>,
    pub gram: Matrix,
    gram_inv: Matrix,
}

impl WeightSpace {
    pub fn new(weight: &DimVector) -> Result<Self, BasisError> {
        let framing = DimVector::zero();
        let words = theta_good_words(weight);
        let monomials: Vec<ThetaElt> = words.iter().map(|w| theta_m(w, &framing)).collect();
        let gram: Matrix = words
            .iter()
            .map(|r| monomials.iter().map(|m| rq(&m.coeff(r))).collect())
            .collect();
        let gram_inv = invert(&gram).ok_or_else(|| BasisError::Singular(weight.clone()))?;
        Ok(Self {
            weight: weight.clone(),
            framing,
            words,
            monomials,
            gram,
            gram_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index(&self, w: &Word) -> Option<usize> {
        self.words.binary_search(w).ok()
    }

    /// Coefficients of y on the theta-good words.
    pub fn good_coeffs(&self, y: &ThetaElt) -> Vec<RationalQ> {
        self.words.iter().map(|w| rq(&y.coeff(w))).collect()
    }

    /// Coordinates of y in the monomial basis; fails if y is not in
    /// their span.
    pub fn expand(&self, y: &ThetaElt) -> Result<Vec<RationalQ>, BasisError> {
        if y.weight != self.weight {
            return Err(BasisError::WeightMismatch(y.weight.clone(), self.weight.clone()));
        }
        let b = self.good_coeffs(y);
        let a = mat_vec(&self.gram_inv, &b);
        let back = self.synthesize_rational(&a);
        let mut residual = Vec::new();
        for (w, c) in y.terms.iter() {
            if back.get(w).is_none_or(|d| *d != rq(c)) {
                residual.push(w.to_string());
            }
        }
        for w in back.keys() {
            if y.terms.get(w).is_none() {
                residual.push(w.to_string());
            }
        }
        if residual.is_empty() {
            Ok(a)
        } else {
            Err(BasisError::NotInImage(format!("words [{}]", residual.join(" "))))
        }
    }

    pub fn expand_in_monomials(&self, y: &ThetaElt) -> Result<LowerElt, BasisError> {
        Ok(self.lower(&self.expand(y)?))
    }

    pub fn lower(&self, coords: &[RationalQ]) -> LowerElt {
        LowerElt {
            weight: self.weight.clone(),
            fcoords: self
                .words
                .iter()
                .zip(coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    fn synthesize_rational(&self, coords: &[RationalQ]) -> BTreeMap<Word, RationalQ> {
        let mut out: BTreeMap<Word, RationalQ> = BTreeMap::new();
        for (m, a) in self.monomials.iter().zip(coords) {
            if a.is_zero() {
                continue;
            }
            for (w, c) in m.terms.iter() {
                let e = out.entry(w.clone()).or_insert_with(RationalQ::zero);
                *e = &*e + &(a * &rq(c));
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Sum of coords[j] * monomial j, which must have Laurent coefficients.
    pub fn synthesize(&self, coords: &[RationalQ]) -> Result<ThetaElt, BasisError> {
        let mut terms = WordComb::zero();
        for (w, c) in self.synthesize_rational(coords) {
            let l = laurent(&c, &w)?;
            terms.add_term(w, l);
        }
        Ok(ThetaElt::from_comb(&self.framing, &self.weight, terms))
    }

    /// The lower bar involution: conjugate monomial coordinates.
    pub fn bar_lower(&self, y: &ThetaElt) -> Result<ThetaElt, BasisError> {
        let a: Vec<RationalQ> = self.expand(y)?.iter().map(RationalQ::bar).collect();
        self.synthesize(&a)
    }

    /// (x, y) for x given by monomial coordinates.
    pub fn pair_coords(&self, x: &[RationalQ], y: &ThetaElt) -> RationalQ {
        self.words.iter().zip(x).fold(RationalQ::zero(), |s, (w, c)| {
            if c.is_zero() {
                s
            } else {
                &s + &(c * &rq(&y.coeff(w)))
            }
        })
    }

    pub fn gram_is_symmetric(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.gram[i][j] == self.gram[j][i]))
    }
}

fn mat_vec(a: &Matrix, v: &[RationalQ]) -> Vec<RationalQ> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).fold(RationalQ::zero(), |s, (x, y)| {
                if x.is_zero() || y.is_zero() {
                    s
                } else {
                    &s + &(x * y)
                }
            })
        })
        .collect()
}

fn column(a: &Matrix, j: usize) -> Vec<RationalQ> {
    a.iter().map(|r| r[j].clone()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisKind {
    Monomial,
    Lyndon,
    Pbw,
    Canonical,
    DualPbw,
    DualCanonical,
}

/// Laurent matrix indexed by theta-good words in anti-lex order.
pub type LMatrix = Vec<Vec<LaurentPoly>>;

fn to_lmatrix(m: &Matrix, words: &[Word]) -> Result<LMatrix, BasisError> {
    m.iter()
        .enumerate()
        .map(|(i, r)| r.iter().map(|c| laurent(c, &words[i])).collect())
        .collect()
}

/// Whether all nonzero off-diagonal entries (i, j) have j > i; returns
/// the first offender otherwise.
fn upper_offender(m: &Matrix) -> Option<(usize, usize)> {
    for (i, r) in m.iter().enumerate() {
        for (j, c) in r.iter().enumerate() {
            if j < i && !c.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

fn lower_offender(m: &Matrix) -> Option<(usize, usize)> {
    for (i, r) in m.iter().enumerate() {
        for (j, c) in r.iter().enumerate() {
            if j > i && !c.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Triangularity {
    Diagonal,
    Upper,
    Lower,
    Neither,
}

pub fn triangularity(m: &Matrix) -> Triangularity {
    match (upper_offender(m), lower_offender(m)) {
        (None, None) => Triangularity::Diagonal,
        (None, Some(_)) => Triangularity::Upper,
        (Some(_), None) => Triangularity::Lower,
        (Some(_), Some(_)) => Triangularity::Neither,
    }
}

/// All families of one weight, computed together. Matrix rows and
/// columns follow `space.words`. Coordinates are monomial coordinates.
#[derive(Clone, Debug)]
pub struct WeightBases {
    pub space: WeightSpace,
    pub convention: BracketConvention,
    pub lyndon: Vec<ThetaElt>,
    /// lyndon_coords[i][j]: coefficient of theta-m_j in theta-l_i.
    pub lyndon_coords: Matrix,
    pub lyndon_diag: Vec<LaurentPoly>,
    pub pbw: Vec<ThetaElt>,
    pub pbw_coords: Matrix,
    /// bar(theta-P_i) = sum_j bar_pbw[i][j] theta-P_j.
    pub bar_pbw: LMatrix,
    pub canonical: Vec<ThetaElt>,
    /// theta-b_i = sum_j can_to_pbw[i][j] theta-P_j.
    pub can_to_pbw: LMatrix,
    pub canonical_coords: Matrix,
    pub dual_pbw: Vec<ThetaElt>,
    pub dual_canonical: Vec<ThetaElt>,
}

impl WeightBases {
    pub fn family(&self, kind: BasisKind) -> &[ThetaElt] {
        match kind {
            BasisKind::Monomial => &self.space.monomials,
            BasisKind::Lyndon => &self.lyndon,
            BasisKind::Pbw => &self.pbw,
            BasisKind::Canonical => &self.canonical,
            BasisKind::DualPbw => &self.dual_pbw,
            BasisKind::DualCanonical => &self.dual_canonical,
        }
    }

    pub fn words(&self) -> &[Word] {
        &self.space.words
    }

    /// Monomial coordinates of the lower families; `None` for the duals,
    /// which live on the word side.
    pub fn coords(&self, kind: BasisKind) -> Option<&Matrix> {
        match kind {
            BasisKind::Lyndon => Some(&self.lyndon_coords),
            BasisKind::Pbw => Some(&self.pbw_coords),
            BasisKind::Canonical => Some(&self.canonical_coords),
            _ => None,
        }
    }

    /// Pairing matrix of a lower family (rows) against a word-side
    /// family (columns).
    pub fn pairing_matrix(&self, lower: BasisKind, upper: BasisKind) -> Option<Matrix> {
        let coords = match lower {
            BasisKind::Monomial => None,
            k => Some(self.coords(k)?),
        };
        let n = self.space.dim();
        let ups = self.family(upper);
        Some(
            (0..n)
                .map(|i| {
                    let x = match coords {
                        Some(c) => c[i].clone(),
                        None => unit(n, i),
                    };
                    ups.iter().map(|y| self.space.pair_coords(&x, y)).collect()
                })
                .collect(),
        )
    }
}

fn unit(n: usize, i: usize) -> Vec<RationalQ> {
    (0..n)
        .map(|j| if i == j { RationalQ::one() } else { RationalQ::zero() })
        .collect()
}

/// Computes the Lyndon, PBW, canonical and dual families of one weight.
pub fn compute_bases(weight: &DimVector, conv: BracketConvention) -> Result<WeightBases, BasisError> {
    let space = WeightSpace::new(weight)?;
    let words = space.words.clone();
    let n = words.len();
    let framing = space.framing.clone();

    let lyndon: Vec<ThetaElt> = words.iter().map(|w| theta_l(w, &framing, conv)).collect();
    let lyndon_coords: Matrix = lyndon.iter().map(|l| space.expand(l)).collect::<Result<_, _>>()?;
    let mut lyndon_diag = Vec::with_capacity(n);
    for i in 0..n {
        lyndon_diag.push(laurent(&lyndon_coords[i][i], &words[i])?);
    }

    // theta-P = theta-l / (diagonal unit * theta-kappa)
    let mut pbw = Vec::with_capacity(n);
    let mut pbw_coords = Vec::with_capacity(n);
    for i in 0..n {
        let d = &lyndon_diag[i];
        if d.as_unit().is_none() {
            return Err(BasisError::InexactPbw {
                word: words[i].clone(),
                detail: format!("diagonal coefficient {d} is not a unit"),
            });
        }
        let denom = d * &theta_kappa(&words[i]);
        let mut terms = WordComb::zero();
        for (w, c) in lyndon[i].terms.iter() {
            let qd = c.exact_div(&denom).map_err(|e| BasisError::InexactPbw {
                word: words[i].clone(),
                detail: e.to_string(),
            })?;
            terms.add_term(w.clone(), qd);
        }
        pbw.push(ThetaElt::from_comb(&framing, weight, terms));
        let dq = rq(&denom).inv().expect("nonzero");
        pbw_coords.push(lyndon_coords[i].iter().map(|c| c * &dq).collect::<Vec<_>>());
    }

    let pbw_inv = invert(&pbw_coords).ok_or_else(|| BasisError::Singular(weight.clone()))?;
    let bar_rows: Matrix = pbw_coords
        .iter()
        .map(|r| r.iter().map(RationalQ::bar).collect())
        .collect();
    let bar_pbw_q = crate::linalg::mat_mul(&bar_rows, &pbw_inv);
    for i in 0..n {
        for j in 0..n {
            let c = &bar_pbw_q[i][j];
            let bad = if i == j { *c != RationalQ::one() } else { j < i && !c.is_zero() };
            if bad {
                return Err(BasisError::NotUnitriangular {
                    name: "bar(PBW) -> PBW".into(),
                    row: words[i].clone(),
                    col: words[j].clone(),
                    entry: c.to_string(),
                });
            }
        }
    }
    let bar_pbw = to_lmatrix(&bar_pbw_q, &words)?;

    // canonical basis, largest word first
    let zero = LaurentPoly::zero();
    let mut can: LMatrix = vec![vec![zero.clone(); n]; n];
    for i in (0..n).rev() {
        // r = bar(P_i) - P_i in PBW coordinates, rewritten in canonical coordinates
        let mut r_p: Vec<LaurentPoly> = bar_pbw[i].clone();
        r_p[i] = &r_p[i] - &LaurentPoly::one();
        let mut r_b = vec![zero.clone(); n];
        for j in i + 1..n {
            let mut v = r_p[j].clone();
            for k in i + 1..j {
                if !r_b[k].is_zero() && !can[k][j].is_zero() {
                    v = &v - &(&r_b[k] * &can[k][j]);
                }
            }
            r_b[j] = v;
        }
        let mut row = vec![zero.clone(); n];
        row[i] = LaurentPoly::one();
        for j in i + 1..n {
            let r = &r_b[j];
            if r.is_zero() {
                continue;
            }
            if !r.coeff(0).eq(&0.into()) || r.bar() != -r {
                return Err(BasisError::NotInQZq {
                    row: words[i].clone(),
                    col: words[j].clone(),
                    entry: format!("bar(P) - P has coefficient {r}"),
                });
            }
            let c = r.positive_part();
            for k in j..n {
                if !can[j][k].is_zero() {
                    row[k] = &row[k] + &(&c * &can[j][k]);
                }
            }
        }
        for j in i + 1..n {
            if !row[j].in_qzq() {
                return Err(BasisError::NotInQZq {
                    row: words[i].clone(),
                    col: words[j].clone(),
                    entry: row[j].to_string(),
                });
            }
        }
        can[i] = row;
    }
    let mut canonical = Vec::with_capacity(n);
    let mut canonical_coords = Vec::with_capacity(n);
    for i in 0..n {
        let mut terms = WordComb::zero();
        let mut coords = vec![RationalQ::zero(); n];
        for j in i..n {
            if can[i][j].is_zero() {
                continue;
            }
            terms.add_scaled(&pbw[j].terms, &can[i][j]);
            let c = rq(&can[i][j]);
            for k in 0..n {
                if !pbw_coords[j][k].is_zero() {
                    coords[k] = &coords[k] + &(&c * &pbw_coords[j][k]);
                }
            }
        }
        canonical.push(ThetaElt::from_comb(&framing, weight, terms));
        canonical_coords.push(coords);
    }

    let dual_pbw = duals(&space, &pbw_coords)?;
    let dual_canonical = duals(&space, &canonical_coords)?;

    Ok(WeightBases {
        space,
        convention: conv,
        lyndon,
        lyndon_coords,
        lyndon_diag,
        pbw,
        pbw_coords,
        bar_pbw,
        canonical,
        can_to_pbw: can,
        canonical_coords,
        dual_pbw,
        dual_canonical,
    })
}

/// Word-side elements dual to the lower family with the given monomial
/// coordinates: their good-word coefficients are the columns of the
/// inverse coordinate matrix.
fn duals(space: &WeightSpace, coords: &Matrix) -> Result<Vec<ThetaElt>, BasisError> {
    let inv = invert(coords).ok_or_else(|| BasisError::Singular(space.weight.clone()))?;
    (0..space.dim())
        .map(|j| {
            let y = column(&inv, j);
            let z = mat_vec(&space.gram_inv, &y);
            space.synthesize(&z)
        })
        .collect()
}

/// Outcome of the structural checks on one weight.
#[derive(Clone, Debug, Default, Serialize)]
pub struct BasisReport {
    pub weight: String,
    pub dim: usize,
    pub gram_symmetric: bool,
    pub lyndon_triangularity: Option<Triangularity>,
    /// words whose Lyndon diagonal differs from prod (-1)^(len-1) q^(-N)
    pub lyndon_diag_mismatch: Vec<String>,
    pub bar_canonical_fixed: bool,
    pub q0_orthonormal: bool,
    pub dual_pbw_ok: bool,
    pub dual_canonical_ok: bool,
    pub dual_max_ok: bool,
    pub dual_equal_on_lyndon_or_symmetric: bool,
    pub failures: Vec<String>,
}

/// prod over Lyndon factors of (-1)^(len-1) q^(-N(weight))
pub fn expected_lyndon_diag(nu: &Word) -> LaurentPoly {
    crate::words::lyndon_factorize(nu)
        .factors
        .iter()
        .fold(LaurentPoly::one(), |acc, f| {
            let sign: i64 = if f.len() % 2 == 1 { 1 } else { -1 };
            let n = crate::rootdata::n_of(&f.weight());
            &acc * &LaurentPoly::monomial(sign, -n)
        })
}

fn is_identity(m: &Matrix) -> bool {
    m.iter().enumerate().all(|(i, r)| {
        r.iter()
            .enumerate()
            .all(|(j, c)| if i == j { *c == RationalQ::one() } else { c.is_zero() })
    })
}

/// Runs the structural checks of the basis layer on one weight.
pub fn check_bases(b: &WeightBases) -> BasisReport {
    let words = b.words();
    let n = words.len();
    let mut rep = BasisReport {
        weight: b.space.weight.to_string(),
        dim: n,
        gram_symmetric: b.space.gram_is_symmetric(),
        lyndon_triangularity: Some(triangularity(&b.lyndon_coords)),
        ..Default::default()
    };
    for (i, w) in words.iter().enumerate() {
        if b.lyndon_diag[i] != expected_lyndon_diag(w) {
            rep.lyndon_diag_mismatch.push(format!("{w}: {}", b.lyndon_diag[i]));
        }
    }
    rep.bar_canonical_fixed = true;
    for (i, x) in b.canonical.iter().enumerate() {
        match b.space.bar_lower(x) {
            Ok(y) if y == *x => {}
            Ok(_) => {
                rep.bar_canonical_fixed = false;
                rep.failures.push(format!("canonical element {} is not bar-invariant", words[i]));
            }
            Err(e) => {
                rep.bar_canonical_fixed = false;
                rep.failures.push(e.to_string());
            }
        }
    }
    rep.q0_orthonormal = true;
    for i in 0..n {
        for j in 0..n {
            let v = b.space.pair_coords(&b.canonical_coords[i], &b.canonical[j]);
            let want = if i == j { 1 } else { 0 };
            let ok = v
                .eval_at_zero()
                .is_some_and(|z| z == num_rational::BigRational::from_integer(want.into()));
            if !ok {
                rep.q0_orthonormal = false;
                rep.failures.push(format!(
                    "(b_{}, b_{}) = {v} is not {want} at q = 0",
                    words[i], words[j]
                ));
            }
        }
    }
    rep.dual_pbw_ok = b
        .pairing_matrix(BasisKind::Pbw, BasisKind::DualPbw)
        .is_some_and(|m| is_identity(&m));
    rep.dual_canonical_ok = b
        .pairing_matrix(BasisKind::Canonical, BasisKind::DualCanonical)
        .is_some_and(|m| is_identity(&m));
    rep.dual_max_ok = true;
    for (i, y) in b.dual_canonical.iter().enumerate() {
        let w = &words[i];
        if y.max_word() != Some(w) || y.coeff(w) != theta_kappa(w) {
            rep.dual_max_ok = false;
            rep.failures.push(format!(
                "dual canonical {w}: max word {:?}, coefficient {}",
                y.max_word(),
                y.coeff(w)
            ));
        }
    }
    rep.dual_equal_on_lyndon_or_symmetric = true;
    for (i, w) in words.iter().enumerate() {
        if (is_theta_lyndon(w) || is_symmetric_word(w)) && b.dual_canonical[i] != b.dual_pbw[i] {
            rep.dual_equal_on_lyndon_or_symmetric = false;
            rep.failures.push(format!("dual canonical and dual PBW differ at {w}"));
        }
    }
    rep
}
