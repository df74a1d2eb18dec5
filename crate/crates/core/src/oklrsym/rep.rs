//! The polynomial representation: components f e(nu) indexed by
//! compositions, and the action of e(nu), x_l, tau_k and tau_0.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::params::{theta, ParamMatrices, Vertex, VertexWeight};
use super::poly::MultiPoly;
use super::OklrError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Plain KLR algebra: no tau_0, compositions with weight beta.
    Klr,
    /// Orientifold KLR algebra: isotropic compositions of a self-dual beta.
    Orientifold,
}

pub type Comp = Vec<Vertex>;

pub fn comp_string(nu: &[Vertex]) -> String {
    nu.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

/// Generators; `X(l)` is x_l with 1 <= l <= n and `T(0)` is tau_0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    E(Comp),
    X(usize),
    T(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(nu) => write!(f, "e({})", comp_string(nu)),
            Gen::X(l) => write!(f, "x{l}"),
            Gen::T(k) => write!(f, "t{k}"),
        }
    }
}

pub fn word_string(gens: &[Gen]) -> String {
    if gens.is_empty() {
        return "1".into();
    }
    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
}

/// Element of the direct sum of k[x_1..x_n] e(nu).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyVec {
    n: usize,
    comps: BTreeMap<Comp, MultiPoly>,
}

impl PolyVec {
    pub fn zero(n: usize) -> Self {
        PolyVec { n, comps: BTreeMap::new() }
    }

    pub fn single(nu: Comp, f: MultiPoly) -> Self {
        let mut v = PolyVec::zero(f.nvars());
        v.add_comp(nu, &f);
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, nu: &[Vertex]) -> MultiPoly {
        self.comps.get(nu).cloned().unwrap_or_else(|| MultiPoly::zero(self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Comp, &MultiPoly)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn add_comp(&mut self, nu: Comp, f: &MultiPoly) {
        if f.is_zero() {
            return;
        }
        let e = self.comps.entry(nu.clone()).or_insert_with(|| MultiPoly::zero(f.nvars()));
        e.add_assign(f);
        if e.is_zero() {
            self.comps.remove(&nu);
        }
    }

    pub fn add_assign(&mut self, other: &PolyVec) {
        for (nu, f) in &other.comps {
            self.add_comp(nu.clone(), f);
        }
    }

    pub fn neg(&self) -> PolyVec {
        PolyVec { n: self.n, comps: self.comps.iter().map(|(k, f)| (k.clone(), f.neg())).collect() }
    }

    /// Multiply every component by `p` from the left.
    pub fn mul_poly(&self, p: &MultiPoly) -> PolyVec {
        let mut out = PolyVec::zero(self.n);
        for (nu, f) in &self.comps {
            out.add_comp(nu.clone(), &p.mul(f));
        }
        out
    }
}

impl fmt::Display for PolyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.comps.iter().map(|(nu, p)| format!("({p}) e({})", comp_string(nu))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The polynomial representation of R(beta) or its orientifold version.
#[derive(Clone, Debug)]
pub struct Rep {
    mode: Mode,
    n: usize,
    beta: VertexWeight,
    params: ParamMatrices,
    comps: Vec<Comp>,
    tau_coeff: HashMap<(Vertex, Vertex, usize), MultiPoly>,
    tau0_coeff: HashMap<Vertex, MultiPoly>,
}

fn enumerate_words(letters: &[Vertex], n: usize, accept: &dyn Fn(&[Vertex]) -> bool) -> Vec<Comp> {
    fn rec(letters: &[Vertex], n: usize, cur: &mut Comp, out: &mut Vec<Comp>, accept: &dyn Fn(&[Vertex]) -> bool) {
        if cur.len() == n {
            if accept(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for &i in letters {
            cur.push(i);
            rec(letters, n, cur, out, accept);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(letters, n, &mut Vec::new(), &mut out, accept);
    out
}

impl Rep {
    pub fn new(mode: Mode, beta: &VertexWeight, params: ParamMatrices) -> Result<Self, OklrError> {
        let letters = beta.support();
        let (n, comps) = match mode {
            Mode::Klr => {
                let n = beta.height() as usize;
                (n, enumerate_words(&letters, n, &|w| VertexWeight::of_word(w) == *beta))
            }
            Mode::Orientifold => {
                if !beta.is_self_dual() || beta.iter().any(|(i, m)| i == theta(i) && m % 2 == 1) {
                    return Err(OklrError::NotSelfDual(beta.to_string()));
                }
                let n = beta.height() as usize / 2;
                (n, enumerate_words(&letters, n, &|w| VertexWeight::isotropic_of_word(w) == *beta))
            }
        };
        let mut tau_coeff = HashMap::new();
        let mut tau0_coeff = HashMap::new();
        if params.has_polynomial_rep() {
            for &i in &letters {
                for &j in &letters {
                    if i == j {
                        continue;
                    }
                    for k in 1..n {
                        let images = [MultiPoly::var(n, k - 1), MultiPoly::var(n, k)];
                        tau_coeff.insert((i, j, k), params.p_ij(i, j).subst(&images, n));
                    }
                }
                if n > 0 && theta(i) != i {
                    tau0_coeff.insert(i, params.p_i(i).subst(&[MultiPoly::var(n, 0)], n));
                }
            }
        }
        Ok(Rep { mode, n, beta: beta.clone(), params, comps, tau_coeff, tau0_coeff })
    }

    pub fn orientifold(beta: &VertexWeight, lambda: &VertexWeight) -> Result<Self, OklrError> {
        Rep::new(Mode::Orientifold, beta, ParamMatrices::quiver(lambda)?)
    }

    pub fn klr(beta: &VertexWeight) -> Result<Self, OklrError> {
        Rep::new(Mode::Klr, beta, ParamMatrices::quiver(&VertexWeight::zero())?)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> &VertexWeight {
        &self.beta
    }

    pub fn params(&self) -> &ParamMatrices {
        &self.params
    }

    pub fn comps(&self) -> &[Comp] {
        &self.comps
    }

    /// Indices k of the tau generators present: 0 only in orientifold mode.
    pub fn tau_indices(&self) -> Vec<usize> {
        let start = if self.mode == Mode::Orientifold { 0 } else { 1 };
        (start..self.n).collect()
    }

    pub fn check_gen(&self, g: &Gen) -> Result<(), OklrError> {
        match g {
            Gen::E(nu) if nu.len() != self.n => Err(OklrError::IndexOutOfRange(g.to_string())),
            Gen::X(l) if *l == 0 || *l > self.n => Err(OklrError::IndexOutOfRange(g.to_string())),
            Gen::T(k) if *k >= self.n => Err(OklrError::IndexOutOfRange(g.to_string())),
            Gen::T(0) if self.mode == Mode::Klr => Err(OklrError::NoTau0),
            _ => Ok(()),
        }
    }

    /// s_k . nu
    pub fn act(k: usize, nu: &[Vertex]) -> Comp {
        let mut out = nu.to_vec();
        if k == 0 {
            out[0] = theta(out[0]);
        } else {
            out.swap(k - 1, k);
        }
        out
    }

    /// Idempotent on the left of tau_{k_1} ... tau_{k_m} e(nu).
    pub fn act_word(ks: &[usize], nu: &[Vertex]) -> Comp {
        ks.iter().rev().fold(nu.to_vec(), |acc, &k| Rep::act(k, &acc))
    }

    pub fn apply(&self, g: &Gen, v: &PolyVec) -> Result<PolyVec, OklrError> {
        self.check_gen(g)?;
        let n = self.n;
        let mut out = PolyVec::zero(n);
        match g {
            Gen::E(mu) => {
                if let Some(f) = v.comps.get(mu) {
                    out.add_comp(mu.clone(), f);
                }
            }
            Gen::X(l) => {
                for (nu, f) in &v.comps {
                    out.add_comp(nu.clone(), &f.mul_var(l - 1));
                }
            }
            Gen::T(0) => {
                if !self.params.has_polynomial_rep() {
                    return Err(OklrError::NoPolynomialRep);
                }
                for (nu, f) in &v.comps {
                    if theta(nu[0]) == nu[0] {
                        out.add_comp(nu.clone(), &f.demazure0());
                    } else {
                        let p = &self.tau0_coeff[&nu[0]];
                        out.add_comp(Rep::act(0, nu), &p.mul(&f.negate_var(0)));
                    }
                }
            }
            Gen::T(k) => {
                for (nu, f) in &v.comps {
                    let (i, j) = (nu[k - 1], nu[*k]);
                    if i == j {
                        out.add_comp(nu.clone(), &f.demazure(k - 1));
                    } else {
                        let p = &self.tau_coeff[&(i, j, *k)];
                        out.add_comp(Rep::act(*k, nu), &p.mul(&f.swap_vars(k - 1, *k)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Apply g_1 g_2 ... g_m, rightmost first.
    pub fn apply_word(&self, gens: &[Gen], v: &PolyVec) -> Result<PolyVec, OklrError> {
        let mut cur = v.clone();
        for g in gens.iter().rev() {
            if cur.is_zero() {
                self.check_gen(g)?;
                continue;
            }
            cur = self.apply(g, &cur)?;
        }
        Ok(cur)
    }
}

/// Self-dual weights of theta-height n on the given theta-stable window.
pub fn self_dual_weights(window: &[Vertex], n: usize) -> Vec<VertexWeight> {
    let mut reps: Vec<Vertex> = window.iter().copied().filter(|&i| i >= theta(i)).collect();
    reps.sort();
    reps.dedup();
    let mut out = Vec::new();
    multisets(&reps, n, &mut Vec::new(), 0, &mut |ms| {
        out.push(VertexWeight::isotropic_of_word(ms));
    });
    out.sort();
    out
}

/// Weights of height n on the window.
pub fn plain_weights(window: &[Vertex], n: usize) -> Vec<VertexWeight> {
    let mut letters = window.to_vec();
    letters.sort();
    letters.dedup();
    let mut out = Vec::new();
    multisets(&letters, n, &mut Vec::new(), 0, &mut |ms| out.push(VertexWeight::of_word(ms)));
    out.sort();
    out
}

fn multisets(items: &[Vertex], n: usize, cur: &mut Vec<Vertex>, start: usize, f: &mut dyn FnMut(&[Vertex])) {
    if cur.len() == n {
        f(cur);
        return;
    }
    for idx in start..items.len() {
        cur.push(items[idx]);
        multisets(items, n, cur, idx, f);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::super::params::univariate;
    use super::*;

    fn w(s: &str) -> VertexWeight {
        s.parse().unwrap()
    }

    #[test]
    fn compositions() {
        let r = Rep::orientifold(&w("1:1,-1:1"), &w("0")).unwrap();
        assert_eq!(r.comps(), &[vec![-1], vec![1]]);
        let r = Rep::orientifold(&w("1:1,-1:1,3:1,-3:1"), &w("0")).unwrap();
        assert_eq!(r.comps().len(), 8);
        let r = Rep::orientifold(&w("0:2"), &w("0")).unwrap();
        assert_eq!(r.comps(), &[vec![0]]);
        assert!(Rep::orientifold(&w("1:1"), &w("0")).is_err());
        let r = Rep::klr(&w("1:1,3:1")).unwrap();
        assert_eq!(r.comps().len(), 2);
        assert_eq!(self_dual_weights(&[-3, -1, 1, 3], 2).len(), 3);
        assert_eq!(plain_weights(&[-3, -1, 1, 3], 2).len(), 10);
    }

    #[test]
    fn tau0_examples() {
        let n1 = |e: u32| MultiPoly::one(1).mul(&MultiPoly::var(1, 0).pow(e));
        let f = n1(3).add(&n1(2));
        // lambda = 0: f(-x_1) e(alpha_{-1}) and tau_0^2 = 1
        let r = Rep::orientifold(&w("1:1,-1:1"), &w("0")).unwrap();
        let v = PolyVec::single(vec![1], f.clone());
        let once = r.apply(&Gen::T(0), &v).unwrap();
        assert_eq!(once, PolyVec::single(vec![-1], f.negate_var(0)));
        assert_eq!(r.apply(&Gen::T(0), &once).unwrap(), v);
        // lambda(1) = 2, lambda(-1) = 1: tau_0^2 = x^2 (-x) on e(alpha_1)
        let r = Rep::orientifold(&w("1:1,-1:1"), &w("1:2,-1:1")).unwrap();
        let twice = r.apply_word(&[Gen::T(0), Gen::T(0)], &v).unwrap();
        assert_eq!(twice, PolyVec::single(vec![1], f.mul(&univariate(&[0, 0, 0, -1]))));
        assert_eq!(r.params().q_i(1).subst(&[MultiPoly::signed_var(1, 0, -1)], 1), univariate(&[0, 0, 0, -1]));
    }

    #[test]
    fn demazure_kills_symmetric() {
        let r = Rep::orientifold(&w("1:2,-1:2"), &w("0")).unwrap();
        let x1 = MultiPoly::var(2, 0);
        let x2 = MultiPoly::var(2, 1);
        let sym = x1.mul(&x2).add(&x1.pow(2)).add(&x2.pow(2));
        let v = PolyVec::single(vec![1, 1], sym);
        assert!(r.apply(&Gen::T(1), &v).unwrap().is_zero());
    }

    #[test]
    fn index_errors() {
        let r = Rep::klr(&w("1:2")).unwrap();
        let v = PolyVec::single(vec![1, 1], MultiPoly::one(2));
        assert!(matches!(r.apply(&Gen::T(0), &v), Err(OklrError::NoTau0)));
        assert!(matches!(r.apply(&Gen::T(2), &v), Err(OklrError::IndexOutOfRange(_))));
        assert!(matches!(r.apply(&Gen::X(3), &v), Err(OklrError::IndexOutOfRange(_))));
    }
}
