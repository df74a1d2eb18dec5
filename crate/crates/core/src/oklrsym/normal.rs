//! Normal form on the spanning set tau_w f e(nu) for n <= 2, computed by
//! rewriting with the defining relations, and the faithfulness probe.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::audits::{weyl_reduced_words, DependencyFinder};
use super::params::theta;
use super::poly::{monomials_up_to, Exponent, MultiPoly};
use super::relations::{relations_for, Term};
use super::rep::{comp_string, word_string, Comp, Gen, Mode, PolyVec, Rep};
use super::{OklrError, ReportBuilder, ReportEntry};

/// sum of tau_w f e(nu), keyed by (reduced word, nu).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalElt {
    n: usize,
    terms: BTreeMap<(Vec<usize>, Comp), MultiPoly>,
}

impl NormalElt {
    pub fn zero(n: usize) -> Self {
        NormalElt { n, terms: BTreeMap::new() }
    }

    fn single(n: usize, w: Vec<usize>, nu: Comp, f: MultiPoly) -> Self {
        let mut out = NormalElt::zero(n);
        out.add_term(w, nu, &f);
        out
    }

    fn add_term(&mut self, w: Vec<usize>, nu: Comp, f: &MultiPoly) {
        if f.is_zero() {
            return;
        }
        let key = (w, nu);
        let e = self.terms.entry(key.clone()).or_insert_with(|| MultiPoly::zero(f.nvars()));
        e.add_assign(f);
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &NormalElt, c: &BigRational) {
        for ((w, nu), f) in &other.terms {
            self.add_term(w.clone(), nu.clone(), &f.scale(c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::fmt::Display for NormalElt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((w, nu), p)| {
                let t: Vec<String> = w.iter().map(|k| format!("t{k}")).collect();
                let t = if t.is_empty() { String::new() } else { format!("{}*", t.join("*")) };
                format!("{t}({p}) e({})", comp_string(nu))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rewriting into the spanning set, using one lex-least reduced word per
/// Weyl group element.
pub struct NormalForm<'a> {
    rep: &'a Rep,
    normal: BTreeSet<Vec<usize>>,
    /// Right-hand side of (t1 t0)^2 - (t0 t1)^2 on e(nu).
    braid4: BTreeMap<Comp, Vec<Term>>,
}

impl<'a> NormalForm<'a> {
    pub fn new(rep: &'a Rep) -> Result<Self, OklrError> {
        if rep.n() > 2 {
            return Err(OklrError::Unsupported("the rewriting normal form is implemented for n <= 2".into()));
        }
        if !rep.params().has_polynomial_rep() {
            return Err(OklrError::NoPolynomialRep);
        }
        let normal = weyl_reduced_words(rep).into_iter().collect();
        let mut braid4 = BTreeMap::new();
        if rep.mode() == Mode::Orientifold && rep.n() == 2 {
            for nu in rep.comps() {
                let rel = relations_for(rep, nu)
                    .into_iter()
                    .find(|r| r.case.starts_with("t1t0t1t0"))
                    .expect("four-term relation");
                if let Some(e) = rel.error {
                    return Err(OklrError::Unsupported(e));
                }
                let rhs: Vec<Term> =
                    rel.terms[2..].iter().map(|t| Term { coeff: t.coeff.neg(), gens: t.gens.clone() }).collect();
                braid4.insert(nu.clone(), rhs);
            }
        }
        Ok(NormalForm { rep, normal, braid4 })
    }

    fn n(&self) -> usize {
        self.rep.n()
    }

    /// sum over nu of e(nu)
    pub fn unit(&self) -> NormalElt {
        let mut out = NormalElt::zero(self.n());
        for nu in self.rep.comps() {
            out.add_term(vec![], nu.clone(), &MultiPoly::one(self.n()));
        }
        out
    }

    /// g_1 ... g_m as an element of the algebra.
    pub fn word(&self, gens: &[Gen]) -> Result<NormalElt, OklrError> {
        let mut cur = self.unit();
        for g in gens.iter().rev() {
            cur = self.left_mul(g, &cur)?;
        }
        Ok(cur)
    }

    pub fn left_mul(&self, g: &Gen, x: &NormalElt) -> Result<NormalElt, OklrError> {
        self.rep.check_gen(g)?;
        let mut out = NormalElt::zero(self.n());
        for ((w, nu), f) in &x.terms {
            let part = match g {
                Gen::E(mu) => {
                    if Rep::act_word(w, nu) == *mu {
                        NormalElt::single(self.n(), w.clone(), nu.clone(), f.clone())
                    } else {
                        continue;
                    }
                }
                Gen::X(l) => self.x_times(*l, w, nu, f),
                Gen::T(a) => self.tau_times(*a, w, nu, f),
            };
            out.add_scaled(&part, &BigRational::one());
        }
        Ok(out)
    }

    fn x_times(&self, l: usize, w: &[usize], nu: &Comp, f: &MultiPoly) -> NormalElt {
        let n = self.n();
        if w.is_empty() {
            return NormalElt::single(n, vec![], nu.clone(), f.mul_var(l - 1));
        }
        let a = w[0];
        let rest = &w[1..];
        let mu = Rep::act_word(rest, nu);
        // x_l tau_a e(mu) = sign tau_a x_m e(mu) + corr e(mu)
        let (sign, m, corr) = if a == 0 {
            if l == 1 {
                (-1, 1, if theta(mu[0]) == mu[0] { -2 } else { 0 })
            } else {
                (1, l, 0)
            }
        } else {
            let m = if l == a { a + 1 } else if l == a + 1 { a } else { l };
            let eq = mu[a - 1] == mu[a];
            let c = if eq && m == a { -1 } else if eq && m == a + 1 { 1 } else { 0 };
            (1, m, -c)
        };
        let inner = self.x_times(m, rest, nu, f);
        let mut out = NormalElt::zero(n);
        for ((w2, nu2), g) in &inner.terms {
            out.add_scaled(&self.tau_times(a, w2, nu2, g), &BigRational::from_integer(sign.into()));
        }
        if corr != 0 {
            out.add_term(rest.to_vec(), nu.clone(), &f.scale(&BigRational::from_integer(corr.into())));
        }
        out
    }

    fn poly_times(&self, p: &MultiPoly, x: &NormalElt) -> NormalElt {
        let mut out = NormalElt::zero(self.n());
        for (e, c) in p.terms() {
            let mut cur = x.clone();
            for (idx, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    cur = self.left_mul(&Gen::X(idx + 1), &cur).expect("x in range");
                }
            }
            out.add_scaled(&cur, c);
        }
        out
    }

    fn quad_coeff(&self, a: usize, mu: &[i32]) -> MultiPoly {
        let n = self.n();
        let params = self.rep.params();
        if a == 0 {
            params.q_i(mu[0]).subst(&[MultiPoly::signed_var(n, 0, -1)], n)
        } else {
            params.q_ij(mu[a - 1], mu[a]).subst(&[MultiPoly::var(n, a), MultiPoly::var(n, a - 1)], n)
        }
    }

    /// R_nu applied to f e(nu).
    fn braid4_rhs(&self, nu: &Comp, f: &MultiPoly) -> NormalElt {
        let n = self.n();
        let mut out = NormalElt::zero(n);
        for t in &self.braid4[nu] {
            let mut cur = NormalElt::single(n, vec![], nu.clone(), f.clone());
            for g in t.gens.iter().rev() {
                cur = self.left_mul(g, &cur).expect("generator in range");
            }
            out.add_scaled(&self.poly_times(&t.coeff, &cur), &BigRational::one());
        }
        out
    }

    fn tau_times(&self, a: usize, v: &[usize], nu: &Comp, f: &MultiPoly) -> NormalElt {
        let n = self.n();
        let mut av = vec![a];
        av.extend_from_slice(v);
        if self.normal.contains(&av) {
            return NormalElt::single(n, av, nu.clone(), f.clone());
        }
        if v[0] == a {
            let mu = Rep::act_word(&v[1..], nu);
            let q = self.quad_coeff(a, &mu);
            return self.poly_times(&q, &NormalElt::single(n, v[1..].to_vec(), nu.clone(), f.clone()));
        }
        match (a, v) {
            (1, [0, 1, 0]) => {
                let mut out = NormalElt::single(n, vec![0, 1, 0, 1], nu.clone(), f.clone());
                out.add_scaled(&self.braid4_rhs(nu, f), &BigRational::one());
                out
            }
            (1, [0, 1, 0, 1]) => {
                // t1 (t1 t0 t1 t0 - R) = Q t0 t1 t0 - t1 R
                let mu = Rep::act_word(&[0, 1, 0], nu);
                let q = self.quad_coeff(1, &mu);
                let mut out = self.poly_times(&q, &NormalElt::single(n, vec![0, 1, 0], nu.clone(), f.clone()));
                let r = self.braid4_rhs(nu, f);
                let tr = self.left_mul(&Gen::T(1), &r).expect("t1 in range");
                out.add_scaled(&tr, &BigRational::from_integer((-1).into()));
                out
            }
            _ => unreachable!("word {av:?} cannot occur for n <= 2"),
        }
    }

    /// Action of a normal-form element in the polynomial representation.
    pub fn eval(&self, x: &NormalElt, v: &PolyVec) -> Result<PolyVec, OklrError> {
        let mut out = PolyVec::zero(self.n());
        for ((w, nu), f) in &x.terms {
            let comp = v.get(nu);
            if comp.is_zero() {
                continue;
            }
            let gens: Vec<Gen> = w.iter().map(|&k| Gen::T(k)).collect();
            let r = self.rep.apply_word(&gens, &PolyVec::single(nu.clone(), f.mul(&comp)))?;
            out.add_assign(&r);
        }
        Ok(out)
    }
}

type ColKey = (usize, usize, Comp, Exponent);

fn eval_row(
    rep: &Rep,
    inputs: &[Exponent],
    f: impl Fn(&PolyVec) -> Result<PolyVec, OklrError>,
) -> Result<BTreeMap<ColKey, BigRational>, OklrError> {
    let n = rep.n();
    let mut row = BTreeMap::new();
    for (ci, nu) in rep.comps().iter().enumerate() {
        for (mi, m) in inputs.iter().enumerate() {
            let v = PolyVec::single(nu.clone(), MultiPoly::monomial(n, m.clone(), BigRational::one()));
            for (mu, p) in f(&v)?.iter() {
                for (e, c) in p.terms() {
                    row.insert((ci, mi, mu.clone(), e.clone()), c.clone());
                }
            }
        }
    }
    Ok(row)
}

/// Random algebra words, seeded.
pub fn random_words(rep: &Rep, count: usize, max_len: usize, seed: u64) -> Vec<Vec<Gen>> {
    let mut pool: Vec<Gen> = rep.comps().iter().cloned().map(Gen::E).collect();
    pool.extend((1..=rep.n()).map(Gen::X));
    pool.extend(rep.tau_indices().into_iter().map(Gen::T));
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.max(1));
            (0..len).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect()
        })
        .collect()
}

/// Every random word's normal form must act like the word itself, and
/// every combination of words acting as zero on monomials of degree at
/// most `max_deg` must have zero normal form.
pub fn faithfulness_proxy(
    rep: &Rep,
    count: usize,
    max_len: usize,
    max_deg: u32,
    seed: u64,
) -> Result<Vec<ReportEntry>, OklrError> {
    let form = NormalForm::new(rep)?;
    let inputs = monomials_up_to(rep.n(), max_deg);
    let words = random_words(rep, count, max_len, seed);
    let mut report = ReportBuilder::default();
    let mut forms = Vec::new();
    let mut finder = DependencyFinder::<ColKey>::new();
    let mut kernel = 0;
    for (idx, gens) in words.iter().enumerate() {
        let nf = form.word(gens)?;
        let direct = eval_row(rep, &inputs, |v| rep.apply_word(gens, v))?;
        let via_nf = eval_row(rep, &inputs, |v| form.eval(&nf, v))?;
        let agree = if direct == via_nf {
            Ok(())
        } else {
            Err(format!("normal form {nf} acts differently from {}", word_string(gens)))
        };
        report.record("faithfulness", "normal-form-action", &rep.beta().to_string(), agree);
        forms.push(nf);
        if let Some(combo) = finder.insert(idx, direct) {
            kernel += 1;
            let mut total = NormalElt::zero(rep.n());
            for (i, c) in &combo {
                total.add_scaled(&forms[*i], c);
            }
            let res = if total.is_zero() {
                Ok(())
            } else {
                let parts: Vec<String> = combo.iter().map(|(i, c)| format!("({c})*{}", word_string(&words[*i]))).collect();
                Err(format!("{} acts as zero but has normal form {total}", parts.join(" + ")))
            };
            report.record("faithfulness", "kernel-reduces-to-zero", &rep.beta().to_string(), res);
        }
    }
    if kernel == 0 {
        report.record("faithfulness", "kernel-reduces-to-zero", &rep.beta().to_string(), Ok(()));
    }
    Ok(report.finish())
}
