//! Exact linear algebra: fraction-free echelon forms over Z[q, q^-1] with
//! word-indexed columns, and Gaussian elimination over Q(q).

use crate::comb::WordComb;
use crate::exactq::{LaurentPoly, RationalQ};
use crate::words::Word;

/// Gcd in Z[q, q^-1], normalized to a polynomial with nonzero constant term
/// and positive leading coefficient.
pub fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_unit(b);
    }
    if b.is_zero() {
        return normalize_unit(a);
    }
    // den of a/b in lowest terms is b / gcd(a, b)
    let r = RationalQ::new(a.clone(), b.clone()).expect("nonzero divisor");
    let g = b.exact_div(r.den()).expect("reduced denominator divides b");
    normalize_unit(&g)
}

fn normalize_unit(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let p = p.shift(-p.min_exp().unwrap());
    let top = p.coeff(p.max_exp().unwrap());
    if top < 0.into() {
        -p
    } else {
        p
    }
}

/// Divides a combination by the gcd of its coefficients.
pub fn make_primitive(row: &WordComb) -> WordComb {
    let mut g = LaurentPoly::zero();
    for (_, c) in row.iter() {
        g = laurent_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() || g.is_one() {
        return row.clone();
    }
    row.iter()
        .map(|(w, c)| (w.clone(), c.exact_div(&g).expect("gcd divides every coefficient")))
        .collect()
}

/// Row echelon form keyed by the anti-lex-largest word of each row.
#[derive(Clone, Default, Debug)]
pub struct Echelon {
    /// Rows sorted by pivot word, descending.
    rows: Vec<(Word, WordComb)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `row` against the current rows.
    pub fn reduce(&self, row: &WordComb) -> WordComb {
        let mut r = row.clone();
        for (p, b) in &self.rows {
            let c = r.coeff(p);
            if c.is_zero() {
                continue;
            }
            let lead = b.coeff(p);
            let mut next = r.scale(&lead);
            next.add_scaled(b, &-&c);
            r = make_primitive(&next);
        }
        r
    }

    /// Adds a row; returns its new pivot if it was independent.
    pub fn insert(&mut self, row: &WordComb) -> Option<Word> {
        let r = self.reduce(row);
        let p = r.max_word()?.clone();
        let pos = self.rows.partition_point(|(q, _)| *q > p);
        self.rows.insert(pos, (p.clone(), r));
        Some(p)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot words, ascending.
    pub fn pivots(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.rows.iter().map(|(p, _)| p.clone()).collect();
        v.sort();
        v
    }
}

pub type Matrix = Vec<Vec<RationalQ>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { RationalQ::one() } else { RationalQ::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut s = RationalQ::zero();
                    for t in 0..k {
                        if !a[i][t].is_zero() && !b[t][j].is_zero() {
                            s = &s + &(&a[i][t] * &b[t][j]);
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Inverse by Gauss-Jordan; `None` if singular.
pub fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m: Matrix = a.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].inv().ok()?;
        for j in 0..n {
            m[col][j] = &m[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                if !m[col][j].is_zero() {
                    m[r][j] = &m[r][j] - &(&f * &m[col][j]);
                }
                if !inv[col][j].is_zero() {
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
    }
    Some(inv)
}

/// Solves `a x = b`; `None` if `a` is singular.
pub fn solve(a: &Matrix, b: &[RationalQ]) -> Option<Vec<RationalQ>> {
    let inv = invert(a)?;
    Some(
        inv.iter()
            .map(|row| {
                row.iter()
                    .zip(b)
                    .fold(RationalQ::zero(), |s, (x, y)| &s + &(x * y))
            })
            .collect(),
    )
}
