//! Defining relations as operator identities, their evaluation on
//! monomials, and transport along the symmetry maps.

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::params::{theta, VertexWeight};
use super::poly::{monomials_up_to, MultiPoly};
use super::rep::{comp_string, word_string, Comp, Gen, Mode, PolyVec, Rep};
use super::{OklrError, ReportBuilder, ReportEntry};

/// coeff * g_1 ... g_m
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: MultiPoly,
    pub gens: Vec<Gen>,
}

/// A relation instance: the sum of `terms` must act as zero on every
/// f e(input).  `error` records a right-hand side that could not be formed.
#[derive(Clone, Debug)]
pub struct Relation {
    pub family: String,
    pub case: String,
    pub input: Comp,
    pub terms: Vec<Term>,
    pub error: Option<String>,
}

struct Builder<'a> {
    rep: &'a Rep,
    nu: Comp,
    out: Vec<Relation>,
}

impl<'a> Builder<'a> {
    fn n(&self) -> usize {
        self.rep.n()
    }

    fn x(&self, l: usize) -> MultiPoly {
        MultiPoly::var(self.n(), l - 1)
    }

    fn one(&self) -> MultiPoly {
        MultiPoly::one(self.n())
    }

    fn q2(&self, i: i32, j: i32, a: MultiPoly, b: MultiPoly) -> MultiPoly {
        self.rep.params().q_ij(i, j).subst(&[a, b], self.n())
    }

    fn q1(&self, i: i32, a: MultiPoly) -> MultiPoly {
        self.rep.params().q_i(i).subst(&[a], self.n())
    }

    fn term(&self, c: MultiPoly, gens: &[Gen]) -> Term {
        let mut gens = gens.to_vec();
        gens.push(Gen::E(self.nu.clone()));
        Term { coeff: c, gens }
    }

    fn push(&mut self, family: &str, case: String, terms: Vec<Term>) {
        self.out.push(Relation { family: family.into(), case, input: self.nu.clone(), terms, error: None });
    }

    fn push_err(&mut self, family: &str, case: String, msg: String) {
        self.out.push(Relation { family: family.into(), case, input: self.nu.clone(), terms: vec![], error: Some(msg) });
    }

    /// lhs - rhs with a divided right-hand side num / den times `tail`.
    fn with_quotient(&mut self, family: &str, case: String, lhs: Vec<Term>, num: MultiPoly, den: MultiPoly, tail: &[&[Gen]]) {
        match num.exact_div(&den) {
            Some(c) => {
                let mut terms = lhs;
                for gens in tail {
                    terms.push(self.term(c.neg(), gens));
                }
                self.push(family, case, terms);
            }
            None => self.push_err(family, case, format!("({num}) is not divisible by ({den})")),
        }
    }
}

/// All relation instances with e(nu) on the right.
pub fn relations_for(rep: &Rep, nu: &[i32]) -> Vec<Relation> {
    let n = rep.n();
    let orient = rep.mode() == Mode::Orientifold;
    let mut b = Builder { rep, nu: nu.to_vec(), out: Vec::new() };
    let one = b.one();
    let neg = |p: &MultiPoly| p.neg();
    use Gen::{E, T, X};

    // idempotent relations
    for mu in rep.comps() {
        let terms = if mu.as_slice() == nu {
            vec![b.term(one.clone(), &[E(mu.clone())]), b.term(neg(&one), &[])]
        } else {
            vec![b.term(one.clone(), &[E(mu.clone())])]
        };
        b.push("idempotent", "e(mu)e(nu)".into(), terms);
    }
    for l in 1..=n {
        let terms = vec![b.term(one.clone(), &[X(l)]), b.term(neg(&one), &[E(nu.to_vec()), X(l)])];
        b.push("idempotent", format!("x{l}e(nu)"), terms);
    }
    for k in rep.tau_indices() {
        let s_nu = Rep::act(k, nu);
        let terms = vec![b.term(one.clone(), &[T(k)]), b.term(neg(&one), &[E(s_nu), T(k)])];
        b.push("idempotent", format!("t{k}e(nu)"), terms);
    }

    // polynomial relations
    for l in 1..=n {
        for l2 in l + 1..=n {
            let terms = vec![b.term(one.clone(), &[X(l), X(l2)]), b.term(neg(&one), &[X(l2), X(l)])];
            b.push("polynomial", format!("x{l}x{l2}"), terms);
        }
    }

    // quadratic relations
    for k in 1..n {
        let q = b.q2(nu[k - 1], nu[k], b.x(k + 1), b.x(k));
        let terms = vec![b.term(one.clone(), &[T(k), T(k)]), b.term(q.neg(), &[])];
        b.push("quadratic", format!("t{k}^2"), terms);
    }
    if orient && n >= 1 {
        let q = b.q1(nu[0], b.x(1).neg());
        let terms = vec![b.term(one.clone(), &[T(0), T(0)]), b.term(q.neg(), &[])];
        b.push("quadratic", "t0^2".into(), terms);
    }

    // braid relations
    for k in 1..n {
        for k2 in k + 2..n {
            let terms = vec![b.term(one.clone(), &[T(k), T(k2)]), b.term(neg(&one), &[T(k2), T(k)])];
            b.push("braid", format!("t{k}t{k2}"), terms);
        }
    }
    if orient {
        for k in 2..n {
            let terms = vec![b.term(one.clone(), &[T(0), T(k)]), b.term(neg(&one), &[T(k), T(0)])];
            b.push("braid", format!("t0t{k}"), terms);
        }
    }
    for k in 1..n.saturating_sub(1) {
        let lhs = vec![
            b.term(one.clone(), &[T(k + 1), T(k), T(k + 1)]),
            b.term(neg(&one), &[T(k), T(k + 1), T(k)]),
        ];
        let case = format!("t{}t{k}t{}", k + 1, k + 1);
        if nu[k - 1] == nu[k + 1] {
            let (i, j) = (nu[k - 1], nu[k]);
            let num = b.q2(i, j, b.x(k + 1), b.x(k)).sub(&b.q2(i, j, b.x(k + 1), b.x(k + 2)));
            let den = b.x(k).sub(&b.x(k + 2));
            b.with_quotient("braid", case, lhs, num, den, &[&[]]);
        } else {
            b.push("braid", case, lhs);
        }
    }
    if orient && n >= 2 {
        let lhs = vec![
            b.term(one.clone(), &[T(1), T(0), T(1), T(0)]),
            b.term(neg(&one), &[T(0), T(1), T(0), T(1)]),
        ];
        let (i, j) = (nu[0], nu[1]);
        let (x1, x2) = (b.x(1), b.x(2));
        if i != j && j == theta(i) {
            let num = b.q1(j, x2.clone()).sub(&b.q1(i, x1.clone()));
            b.with_quotient("braid", "t1t0t1t0:nu1!=nu2=theta(nu1)".into(), lhs, num, x1.add(&x2), &[&[T(1)]]);
        } else if i != theta(i) && j == theta(j) {
            let num = b.q2(i, j, x2.clone(), x1.neg()).sub(&b.q2(i, j, x2.neg(), x1.neg()));
            b.with_quotient("braid", "t1t0t1t0:nu1!=theta(nu1),nu2=theta(nu2)".into(), lhs, num, x2, &[&[T(0)]]);
        } else if i == theta(i) && i != j && j == theta(j) {
            let num = b.q2(i, j, x2.clone(), x1.neg()).sub(&b.q2(i, j, x2.clone(), x1.clone()));
            let den = x1.mul(&x2);
            b.with_quotient("braid", "t1t0t1t0:theta(nu1)=nu1!=nu2=theta(nu2)".into(), lhs, num, den, &[&[X(1), T(0)], &[]]);
        } else {
            b.push("braid", "t1t0t1t0:else".into(), lhs);
        }
    }

    // mixed relations
    for k in 1..n {
        for l in 1..=n {
            let sl = if l == k { k + 1 } else if l == k + 1 { k } else { l };
            let eq = nu[k - 1] == nu[k];
            let c = if eq && l == k { -1 } else if eq && l == k + 1 { 1 } else { 0 };
            let terms = vec![
                b.term(one.clone(), &[T(k), X(l)]),
                b.term(neg(&one), &[X(sl), T(k)]),
                b.term(MultiPoly::int(n, -c), &[]),
            ];
            b.push("mixed", format!("t{k}x{l}"), terms);
        }
    }
    if orient && n >= 1 {
        let c = if nu[0] == theta(nu[0]) { -2 } else { 0 };
        let terms = vec![
            b.term(one.clone(), &[T(0), X(1)]),
            b.term(one.clone(), &[X(1), T(0)]),
            b.term(MultiPoly::int(n, -c), &[]),
        ];
        b.push("mixed", "t0x1".into(), terms);
        for l in 2..=n {
            let terms = vec![b.term(one.clone(), &[T(0), X(l)]), b.term(neg(&one), &[X(l), T(0)])];
            b.push("mixed", format!("t0x{l}"), terms);
        }
    }
    b.out
}

/// Apply the sum of terms to v.
pub fn eval_terms(rep: &Rep, terms: &[Term], v: &PolyVec) -> Result<PolyVec, OklrError> {
    let mut total = PolyVec::zero(rep.n());
    for t in terms {
        if t.coeff.is_zero() {
            continue;
        }
        let w = rep.apply_word(&t.gens, v)?;
        total.add_assign(&w.mul_poly(&t.coeff));
    }
    Ok(total)
}

/// Check a relation on every monomial of degree at most `max_deg`.
pub fn check_relation(rep: &Rep, rel: &Relation, max_deg: u32) -> Result<(), String> {
    if let Some(e) = &rel.error {
        return Err(e.clone());
    }
    for m in monomials_up_to(rep.n(), max_deg) {
        let f = MultiPoly::monomial(rep.n(), m, BigRational::one());
        let v = PolyVec::single(rel.input.clone(), f.clone());
        let r = eval_terms(rep, &rel.terms, &v).map_err(|e| e.to_string())?;
        if !r.is_zero() {
            let lhs: Vec<String> =
                rel.terms.iter().map(|t| format!("({})*{}", t.coeff, word_string(&t.gens))).collect();
            return Err(format!("on ({f}) e({}): {} gives {r}", comp_string(&rel.input), lhs.join(" + ")));
        }
    }
    Ok(())
}

/// Every relation family on every composition.
pub fn verify_relations(rep: &Rep, max_deg: u32) -> Vec<ReportEntry> {
    let mut report = ReportBuilder::default();
    for nu in rep.comps() {
        for rel in relations_for(rep, nu) {
            let res = check_relation(rep, &rel, max_deg);
            report.record(&rel.family, &rel.case, &comp_string(&rel.input), res);
        }
    }
    report.finish()
}

/// The three isomorphisms between (orientifold) KLR algebras, and the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryMap {
    Identity,
    /// e(nu) -> e(w_0 nu), x_l -> x_{n-l+1}, tau_k -> -tau_{n-k} on R(beta).
    Reverse,
    /// e(nu) -> e(theta_w nu), x_l -> -x_{n-l+1}, tau_k -> tau_{n-k}, R(beta) -> R(theta beta).
    ThetaReverse,
    /// e(nu) -> e(theta nu), x_l -> -x_l, tau_k -> -tau_k on the orientifold algebra.
    Sign,
}

impl SymmetryMap {
    pub fn name(self) -> &'static str {
        match self {
            SymmetryMap::Identity => "identity",
            SymmetryMap::Reverse => "reverse",
            SymmetryMap::ThetaReverse => "theta-reverse",
            SymmetryMap::Sign => "sign",
        }
    }

    pub fn applies_to(self, mode: Mode) -> bool {
        match self {
            SymmetryMap::Identity => true,
            SymmetryMap::Reverse | SymmetryMap::ThetaReverse => mode == Mode::Klr,
            SymmetryMap::Sign => mode == Mode::Orientifold,
        }
    }

    pub fn for_mode(mode: Mode) -> Vec<SymmetryMap> {
        [SymmetryMap::Identity, SymmetryMap::Reverse, SymmetryMap::ThetaReverse, SymmetryMap::Sign]
            .into_iter()
            .filter(|m| m.applies_to(mode))
            .collect()
    }

    pub fn target_weight(self, beta: &VertexWeight) -> VertexWeight {
        match self {
            SymmetryMap::ThetaReverse => beta.theta(),
            _ => beta.clone(),
        }
    }

    pub fn map_comp(self, nu: &[i32]) -> Comp {
        match self {
            SymmetryMap::Identity => nu.to_vec(),
            SymmetryMap::Reverse => nu.iter().rev().copied().collect(),
            SymmetryMap::ThetaReverse => nu.iter().rev().map(|&i| theta(i)).collect(),
            SymmetryMap::Sign => nu.iter().map(|&i| theta(i)).collect(),
        }
    }

    /// (sign, l') with x_l -> sign * x_{l'}
    fn map_x(self, l: usize, n: usize) -> (i64, usize) {
        match self {
            SymmetryMap::Identity => (1, l),
            SymmetryMap::Reverse => (1, n + 1 - l),
            SymmetryMap::ThetaReverse => (-1, n + 1 - l),
            SymmetryMap::Sign => (-1, l),
        }
    }

    fn map_t(self, k: usize, n: usize) -> (i64, usize) {
        match self {
            SymmetryMap::Identity => (1, k),
            SymmetryMap::Reverse => (-1, n - k),
            SymmetryMap::ThetaReverse => (1, n - k),
            SymmetryMap::Sign => (-1, k),
        }
    }

    pub fn map_relation(self, rel: &Relation, n: usize) -> Relation {
        let images: Vec<MultiPoly> = (1..=n)
            .map(|l| {
                let (s, l2) = self.map_x(l, n);
                MultiPoly::signed_var(n, l2 - 1, s)
            })
            .collect();
        let terms = rel
            .terms
            .iter()
            .map(|t| {
                let mut sign = 1;
                let gens = t
                    .gens
                    .iter()
                    .map(|g| match g {
                        Gen::E(mu) => Gen::E(self.map_comp(mu)),
                        Gen::X(l) => {
                            let (s, l2) = self.map_x(*l, n);
                            sign *= s;
                            Gen::X(l2)
                        }
                        Gen::T(k) => {
                            let (s, k2) = self.map_t(*k, n);
                            sign *= s;
                            Gen::T(k2)
                        }
                    })
                    .collect();
                Term { coeff: t.coeff.subst(&images, n).scale(&BigRational::from_integer(sign.into())), gens }
            })
            .collect();
        Relation {
            family: format!("{}:{}", self.name(), rel.family),
            case: rel.case.clone(),
            input: self.map_comp(&rel.input),
            terms,
            error: rel.error.clone(),
        }
    }
}

/// Push every defining relation of the source algebra through each
/// applicable map and check the images in the target representation.
pub fn verify_symmetry_maps(
    mode: Mode,
    beta: &VertexWeight,
    lambda: &VertexWeight,
    max_deg: u32,
) -> Result<Vec<ReportEntry>, OklrError> {
    let params = super::params::ParamMatrices::quiver(lambda)?;
    let source = Rep::new(mode, beta, params.clone())?;
    let mut report = ReportBuilder::default();
    for map in SymmetryMap::for_mode(mode) {
        let target = Rep::new(mode, &map.target_weight(beta), params.clone())?;
        for nu in source.comps() {
            for rel in relations_for(&source, nu) {
                let image = map.map_relation(&rel, source.n());
                let res = check_relation(&target, &image, max_deg);
                report.record(&image.family, &image.case, &comp_string(&rel.input), res);
            }
        }
    }
    Ok(report.finish())
}
