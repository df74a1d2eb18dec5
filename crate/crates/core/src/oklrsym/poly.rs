//! Multivariate polynomials over the rationals in variables x_1, ..., x_n.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent vector of length n; index 0 is x_1.
pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

fn rat(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        MultiPoly::monomial(n, vec![0; n], c)
    }

    pub fn int(n: usize, c: i64) -> Self {
        MultiPoly::constant(n, rat(c))
    }

    pub fn one(n: usize) -> Self {
        MultiPoly::int(n, 1)
    }

    pub fn monomial(n: usize, exp: Exponent, c: BigRational) -> Self {
        assert_eq!(exp.len(), n, "exponent length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MultiPoly { n, terms }
    }

    /// The variable x_{idx+1}.
    pub fn var(n: usize, idx: usize) -> Self {
        assert!(idx < n, "variable x_{} out of range for n = {n}", idx + 1);
        let mut e = vec![0; n];
        e[idx] = 1;
        MultiPoly::monomial(n, e, BigRational::one())
    }

    /// sign * x_{idx+1}
    pub fn signed_var(n: usize, idx: usize, sign: i64) -> Self {
        MultiPoly::var(n, idx).scale(&rat(sign))
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, exp: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        assert_eq!(self.n, other.n);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.n);
        }
        MultiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, other.n);
        let mut out = MultiPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(self.n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiply by x_{idx+1}.
    pub fn mul_var(&self, idx: usize) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[idx] += 1;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Substitute the polynomial `images[j]` for variable j.  All images
    /// must live in the same ring of `m` variables.
    pub fn subst(&self, images: &[MultiPoly], m: usize) -> MultiPoly {
        assert_eq!(images.len(), self.n);
        let mut out = MultiPoly::zero(m);
        let mut cache: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(m), p.clone()]).collect();
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(m, c.clone());
            for (j, &a) in e.iter().enumerate() {
                let powers = &mut cache[j];
                while powers.len() <= a as usize {
                    let next = powers.last().unwrap().mul(&images[j]);
                    powers.push(next);
                }
                t = t.mul(&powers[a as usize]);
            }
            out.add_assign(&t);
        }
        out
    }

    /// Swap x_{i+1} and x_{j+1}.
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Replace x_{idx+1} by -x_{idx+1}.
    pub fn negate_var(&self, idx: usize) -> MultiPoly {
        MultiPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), if e[idx] % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// (f(.., x_{k+1}, x_k, ..) - f) / (x_k - x_{k+1}) with 0-based k for x_{k+1}, x_{k+2}.
    pub fn demazure(&self, k: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (e, c) in &self.terms {
            let (a, b) = (e[k], e[k + 1]);
            if a == b {
                continue;
            }
            // (x^b y^a - x^a y^b) / (x - y) = -sign * (xy)^min * h_{|a-b|-1}(x, y)
            let (lo, d, sign) = if a > b { (b, a - b, -1) } else { (a, b - a, 1) };
            for i in 0..d {
                let mut e2 = e.clone();
                e2[k] = lo + i;
                e2[k + 1] = lo + d - 1 - i;
                out.add_term(e2, c * rat(sign));
            }
        }
        out
    }

    /// (f(-x_1, ..) - f) / x_1
    pub fn demazure0(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (e, c) in &self.terms {
            if e[0] % 2 == 1 {
                let mut e2 = e.clone();
                e2[0] -= 1;
                out.add_term(e2, c * rat(-2));
            }
        }
        out
    }

    /// Exact division by `d`; None when `d` does not divide `self`.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.n, d.n);
        let (dm, dc) = d.terms.iter().next_back()?;
        let mut q = MultiPoly::zero(self.n);
        let mut r = self.clone();
        while let Some((m, c)) = r.terms.iter().next_back() {
            if m.iter().zip(dm).any(|(a, b)| a < b) {
                return None;
            }
            let e: Exponent = m.iter().zip(dm).map(|(a, b)| a - b).collect();
            let t = MultiPoly::monomial(self.n, e, c / dc);
            r = r.sub(&t.mul(d));
            q.add_assign(&t);
        }
        Some(q)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Common total degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Rebuild in a larger or equal ring, keeping variable positions.
    pub fn embed(&self, m: usize) -> MultiPoly {
        assert!(m >= self.n);
        MultiPoly {
            n: m,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(m, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }
}

/// All exponent vectors of length n with total degree at most d.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Exponent> {
    fn rec(n: usize, d: u32, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for a in 0..=d {
            cur.push(a);
            rec(n, d - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort_by_key(|e| (e.iter().sum::<u32>(), e.clone()));
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{a}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn demazure_matches_division() {
        for e in monomials_up_to(3, 5) {
            let f = MultiPoly::monomial(3, e, rat(3));
            let num = f.swap_vars(0, 1).sub(&f);
            let den = x(3, 0).sub(&x(3, 1));
            assert_eq!(num.exact_div(&den).unwrap(), f.demazure(0));
            let num0 = f.negate_var(0).sub(&f);
            assert_eq!(num0.exact_div(&x(3, 0)).unwrap(), f.demazure0());
        }
    }

    #[test]
    fn exact_div_detects_remainder() {
        let f = x(2, 0).mul(&x(2, 0)).add(&MultiPoly::one(2));
        assert!(f.exact_div(&x(2, 0).add(&x(2, 1))).is_none());
        let g = x(2, 0).mul(&x(2, 0)).sub(&x(2, 1).mul(&x(2, 1)));
        assert_eq!(g.exact_div(&x(2, 0).add(&x(2, 1))).unwrap(), x(2, 0).sub(&x(2, 1)));
    }

    #[test]
    fn substitution_and_display() {
        // (v - u)^2 at u = x2, v = -x1
        let u = MultiPoly::var(2, 0);
        let v = MultiPoly::var(2, 1);
        let p = v.sub(&u).pow(2);
        let s = p.subst(&[x(2, 1), x(2, 0).neg()], 2);
        assert_eq!(s, x(2, 0).add(&x(2, 1)).pow(2));
        assert_eq!(s.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(MultiPoly::zero(1).to_string(), "0");
    }

    #[test]
    fn monomial_count() {
        assert_eq!(monomials_up_to(3, 6).len(), 84);
        assert_eq!(monomials_up_to(0, 6), vec![Vec::<u32>::new()]);
    }
}
