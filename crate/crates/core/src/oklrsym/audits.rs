//! Grading audit, evaluation-rank independence of the spanning set
//! tau_w x^a e(nu), the left-regular check at n = 1, and the dependence of
//! tau_w on the reduced expression.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::params::{arrows, theta, ParamMatrices, Vertex, VertexWeight};
use super::poly::{monomials_up_to, Exponent, MultiPoly};
use super::rep::{comp_string, Comp, Gen, Mode, PolyVec, Rep};
use super::{OklrError, ReportBuilder, ReportEntry};
use crate::words::SignedPerm;

/// Declared degree of a generator times e(nu).
pub fn declared_degree(rep: &Rep, g: &Gen, nu: &[Vertex]) -> i64 {
    match g {
        Gen::E(_) => 0,
        Gen::X(_) => 2,
        Gen::T(0) => {
            if theta(nu[0]) == nu[0] {
                -2
            } else {
                i64::from(rep.params().theta_lambda(nu[0]))
            }
        }
        Gen::T(k) => {
            let (i, j) = (nu[k - 1], nu[*k]);
            if i == j {
                -2
            } else {
                i64::from(arrows(i, j) + arrows(j, i))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingObservation {
    pub generator: String,
    pub weight_word: String,
    pub target: String,
    pub declared: i64,
    /// Twice the change in polynomial degree.
    pub raw: i64,
    /// raw plus the offset difference between target and source components.
    pub normalized: i64,
}

/// Components carry offsets d(nu) so that f e(nu) has degree 2 deg f + d(nu);
/// the audit passes when such offsets exist making every generator
/// homogeneous of its declared degree.
#[derive(Clone, Debug, Serialize)]
pub struct GradingAudit {
    pub entries: Vec<ReportEntry>,
    pub offsets: BTreeMap<String, i64>,
    pub observations: Vec<GradingObservation>,
}

pub fn verify_grading(rep: &Rep, max_deg: u32) -> GradingAudit {
    let n = rep.n();
    let mut report = ReportBuilder::default();
    let mut gens: Vec<Gen> = (1..=n).map(Gen::X).collect();
    gens.extend(rep.tau_indices().into_iter().map(Gen::T));
    // (gen, source) -> (target, raw)
    let mut edges: Vec<(Gen, Comp, Comp, i64)> = Vec::new();
    for nu in rep.comps() {
        for g in &gens {
            let mut seen: Option<(Comp, i64)> = None;
            let mut res = Ok(());
            for m in monomials_up_to(n, max_deg) {
                let din: u32 = m.iter().sum();
                let f = MultiPoly::monomial(n, m, BigRational::one());
                let out = rep.apply(g, &PolyVec::single(nu.clone(), f.clone())).expect("generator in range");
                let comps: Vec<_> = out.iter().collect();
                if comps.is_empty() {
                    continue;
                }
                let homogeneous = comps.len() == 1 && comps[0].1.homogeneous_degree().is_some();
                if !homogeneous {
                    res = Err(format!("{g} on ({f}) e({}) gives inhomogeneous {out}", comp_string(nu)));
                    break;
                }
                let target = comps[0].0.clone();
                let raw = 2 * (i64::from(comps[0].1.homogeneous_degree().unwrap()) - i64::from(din));
                match &seen {
                    None => seen = Some((target, raw)),
                    Some((t, r)) if *t == target && *r == raw => {}
                    Some((t, r)) => {
                        res = Err(format!(
                            "{g} on e({}) shifts by {r} into e({}) but by {raw} into e({}) on ({f})",
                            comp_string(nu),
                            comp_string(t),
                            comp_string(&target)
                        ));
                        break;
                    }
                }
            }
            if let (Ok(()), Some((t, r))) = (&res, &seen) {
                edges.push((g.clone(), nu.clone(), t.clone(), *r));
            }
            report.record("grading", &g.to_string(), &comp_string(nu), res);
        }
    }

    // solve d(target) - d(source) = declared - raw
    let mut offsets: BTreeMap<Comp, i64> = BTreeMap::new();
    let mut adj: BTreeMap<Comp, Vec<(Comp, i64)>> = BTreeMap::new();
    for (g, s, t, raw) in &edges {
        let diff = declared_degree(rep, g, s) - raw;
        adj.entry(s.clone()).or_default().push((t.clone(), diff));
        adj.entry(t.clone()).or_default().push((s.clone(), -diff));
    }
    for start in rep.comps() {
        if offsets.contains_key(start) {
            continue;
        }
        offsets.insert(start.clone(), 0);
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(c) = queue.pop_front() {
            let dc = offsets[&c];
            for (t, diff) in adj.get(&c).cloned().unwrap_or_default() {
                if !offsets.contains_key(&t) {
                    offsets.insert(t.clone(), dc + diff);
                    queue.push_back(t);
                }
            }
        }
    }
    let mut observations = Vec::new();
    for (g, s, t, raw) in &edges {
        let declared = declared_degree(rep, g, s);
        let normalized = raw + offsets[t] - offsets[s];
        let res = if normalized == declared {
            Ok(())
        } else {
            Err(format!(
                "{g} e({}) has degree {normalized} after offsets, declared {declared}",
                comp_string(s)
            ))
        };
        report.record("grading", &g.to_string(), &comp_string(s), res);
        observations.push(GradingObservation {
            generator: g.to_string(),
            weight_word: comp_string(s),
            target: comp_string(t),
            declared,
            raw: *raw,
            normalized,
        });
    }
    GradingAudit {
        entries: report.finish(),
        offsets: offsets.into_iter().map(|(k, v)| (comp_string(&k), v)).collect(),
        observations,
    }
}

/// Lex-least reduced words of all elements of the Weyl group acting on
/// the representation: type B_n in orientifold mode, S_n otherwise.
pub fn weyl_reduced_words(rep: &Rep) -> Vec<Vec<usize>> {
    let mut words: Vec<Vec<usize>> = SignedPerm::all(rep.n())
        .into_iter()
        .filter(|w| rep.mode() == Mode::Orientifold || w.is_unsigned())
        .map(|w| w.reduced_word())
        .collect();
    words.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    words
}

fn tau_word_string(ks: &[usize]) -> String {
    if ks.is_empty() {
        return "1".into();
    }
    ks.iter().map(|k| format!("t{k}")).collect::<Vec<_>>().join("*")
}

fn exp_string(a: &[u32]) -> String {
    let parts: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{p}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

type ColKey = (usize, Comp, Exponent);
type Row = BTreeMap<ColKey, BigRational>;

/// Incremental row reduction that reports the combination of earlier
/// rows equal to a dependent row.
#[derive(Default)]
pub(crate) struct DependencyFinder<K: Ord + Clone> {
    pivots: Vec<(K, BTreeMap<K, BigRational>, BTreeMap<usize, BigRational>)>,
}

impl<K: Ord + Clone> DependencyFinder<K> {
    pub(crate) fn new() -> Self {
        DependencyFinder { pivots: Vec::new() }
    }

    /// Insert row `idx`; on dependency returns coefficients c with
    /// sum c_j row_j = 0 and c_idx = 1.
    pub(crate) fn insert(&mut self, idx: usize, row: BTreeMap<K, BigRational>) -> Option<BTreeMap<usize, BigRational>> {
        let mut r = row;
        let mut combo: BTreeMap<usize, BigRational> = BTreeMap::from([(idx, BigRational::one())]);
        for (key, prow, pcombo) in &self.pivots {
            let Some(c) = r.get(key).cloned() else { continue };
            let factor = c / &prow[key];
            for (k, v) in prow {
                let e = r.entry(k.clone()).or_insert_with(BigRational::zero);
                *e -= &factor * v;
                if e.is_zero() {
                    r.remove(k);
                }
            }
            for (k, v) in pcombo {
                let e = combo.entry(*k).or_insert_with(BigRational::zero);
                *e -= &factor * v;
                if e.is_zero() {
                    combo.remove(k);
                }
            }
        }
        match r.keys().next().cloned() {
            None => Some(combo),
            Some(key) => {
                self.pivots.push((key, r, combo));
                None
            }
        }
    }
}

/// Evaluation-rank independence of {tau_w x^a e(nu) : |a| <= x_deg} on
/// monomials of degree at most `max_deg`, one block per composition.
pub fn verify_pbw_independence(rep: &Rep, max_deg: u32, x_deg: u32) -> Result<Vec<ReportEntry>, OklrError> {
    if !rep.params().has_polynomial_rep() {
        return Err(OklrError::NoPolynomialRep);
    }
    let n = rep.n();
    let ws = weyl_reduced_words(rep);
    let exps = monomials_up_to(n, x_deg);
    let inputs = monomials_up_to(n, max_deg);
    let mut report = ReportBuilder::default();
    for nu in rep.comps() {
        let mut labels = Vec::new();
        let mut finder = DependencyFinder::<ColKey>::new();
        let mut res = Ok(());
        for w in &ws {
            let gens: Vec<Gen> = w.iter().map(|&k| Gen::T(k)).collect();
            for a in &exps {
                let xa = MultiPoly::monomial(n, a.clone(), BigRational::one());
                let mut row = Row::new();
                for (mi, m) in inputs.iter().enumerate() {
                    let f = MultiPoly::monomial(n, m.clone(), BigRational::one()).mul(&xa);
                    let out = rep.apply_word(&gens, &PolyVec::single(nu.clone(), f))?;
                    for (mu, p) in out.iter() {
                        for (e, c) in p.terms() {
                            row.insert((mi, mu.clone(), e.clone()), c.clone());
                        }
                    }
                }
                labels.push(format!("{}*{}", tau_word_string(w), exp_string(a)));
                if let Some(combo) = finder.insert(labels.len() - 1, row) {
                    let parts: Vec<String> = combo.iter().map(|(i, c)| format!("({c})*{}", labels[*i])).collect();
                    res = Err(format!(
                        "{} = 0 on e({}) up to degree {max_deg}",
                        parts.join(" + "),
                        comp_string(nu)
                    ));
                    break;
                }
            }
            if res.is_err() {
                break;
            }
        }
        report.record("pbw", &format!("|W|={} x-degree<={x_deg}", ws.len()), &comp_string(nu), res);
    }
    Ok(report.finish())
}

/// Element sum_nu (f_nu e(nu) + tau_0 g_nu e(nu)) of the span of the
/// n = 1 spanning set.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct RegElt {
    plain: BTreeMap<Vertex, MultiPoly>,
    tau: BTreeMap<Vertex, MultiPoly>,
}

fn add_into(m: &mut BTreeMap<Vertex, MultiPoly>, k: Vertex, p: &MultiPoly) {
    if p.is_zero() {
        return;
    }
    let e = m.entry(k).or_insert_with(|| MultiPoly::zero(1));
    e.add_assign(p);
    if e.is_zero() {
        m.remove(&k);
    }
}

impl RegElt {
    fn is_zero(&self) -> bool {
        self.plain.is_empty() && self.tau.is_empty()
    }

    fn add(&self, o: &RegElt, sign: i64) -> RegElt {
        let mut out = self.clone();
        let s = BigRational::from_integer(sign.into());
        for (k, p) in &o.plain {
            add_into(&mut out.plain, *k, &p.scale(&s));
        }
        for (k, p) in &o.tau {
            add_into(&mut out.tau, *k, &p.scale(&s));
        }
        out
    }

    fn e(&self, mu: Vertex) -> RegElt {
        RegElt {
            plain: self.plain.iter().filter(|(k, _)| **k == mu).map(|(k, p)| (*k, p.clone())).collect(),
            tau: self.tau.iter().filter(|(k, _)| theta(**k) == mu).map(|(k, p)| (*k, p.clone())).collect(),
        }
    }

    fn x(&self) -> RegElt {
        let x = MultiPoly::var(1, 0);
        let mut out = RegElt::default();
        for (k, p) in &self.plain {
            add_into(&mut out.plain, *k, &x.mul(p));
        }
        for (k, g) in &self.tau {
            add_into(&mut out.tau, *k, &x.mul(g).neg());
            if theta(*k) == *k {
                add_into(&mut out.plain, *k, &g.scale(&BigRational::from_integer((-2).into())));
            }
        }
        out
    }

    fn t0(&self, params: &ParamMatrices) -> RegElt {
        let minus = [MultiPoly::signed_var(1, 0, -1)];
        let mut out = RegElt::default();
        for (k, p) in &self.plain {
            add_into(&mut out.tau, *k, p);
        }
        for (k, g) in &self.tau {
            let q = params.q_i(*k).subst(&minus, 1);
            add_into(&mut out.plain, *k, &q.mul(g));
        }
        out
    }

    fn poly(&self, p: &MultiPoly) -> RegElt {
        let mut out = RegElt::default();
        let mut power = self.clone();
        let deg = p.total_degree().unwrap_or(0);
        for d in 0..=deg {
            let c = p.coeff(&[d]);
            if !c.is_zero() {
                let scaled = RegElt {
                    plain: power.plain.iter().map(|(k, f)| (*k, f.scale(&c))).collect(),
                    tau: power.tau.iter().map(|(k, f)| (*k, f.scale(&c))).collect(),
                };
                out = out.add(&scaled, 1);
            }
            power = power.x();
        }
        out
    }

    fn display(&self) -> String {
        let mut parts = Vec::new();
        for (k, p) in &self.plain {
            parts.push(format!("({}) e({k})", p.to_string().replace("x1", "x")));
        }
        for (k, p) in &self.tau {
            parts.push(format!("t0 ({}) e({k})", p.to_string().replace("x1", "x")));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Left multiplication on the span of {x^a e(nu), tau_0 x^a e(nu)} at n = 1,
/// defined from the relations.  The defining relations hold for these
/// operators exactly when the spanning set is a basis; a failing relation
/// yields a nonzero combination of spanning elements that vanishes in the
/// algebra.  Works for arbitrary Q', including ones with no polynomial
/// representation.
pub fn regular_module_check(
    params: &ParamMatrices,
    beta: &VertexWeight,
    max_deg: u32,
) -> Result<Vec<ReportEntry>, OklrError> {
    if !beta.is_self_dual() || beta.height() != 2 {
        return Err(OklrError::Unsupported(format!(
            "the left-regular check needs theta-height 1, got {beta}"
        )));
    }
    let mut comps: Vec<Vertex> = beta.support();
    comps.dedup();
    let mut basis = Vec::new();
    for &nu in &comps {
        for a in 0..=max_deg {
            let m = MultiPoly::monomial(1, vec![a], BigRational::one());
            basis.push(RegElt { plain: BTreeMap::from([(nu, m.clone())]), tau: BTreeMap::new() });
            basis.push(RegElt { plain: BTreeMap::new(), tau: BTreeMap::from([(nu, m)]) });
        }
    }
    let minus = [MultiPoly::signed_var(1, 0, -1)];
    let mut report = ReportBuilder::default();
    for &mu in &comps {
        let fixed = theta(mu) == mu;
        let q = params.q_i(mu).subst(&minus, 1);
        for b in &basis {
            let be = b.e(mu);
            let checks: Vec<(&str, RegElt)> = vec![
                ("t0^2", be.t0(params).t0(params).add(&be.poly(&q), -1)),
                (
                    "t0x1",
                    be.x().t0(params).add(&be.t0(params).x(), 1).add(&be, if fixed { 2 } else { 0 }),
                ),
                ("t0e(nu)", be.t0(params).add(&b.t0(params).e(theta(mu)), -1)),
                ("x1e(nu)", be.x().add(&b.x().e(mu), -1)),
            ];
            for (case, residual) in checks {
                let res = if residual.is_zero() {
                    Ok(())
                } else {
                    Err(format!(
                        "dependency {} = 0 (relation applied to {})",
                        residual.display(),
                        b.display()
                    ))
                };
                report.record("pbw-regular", case, &mu.to_string(), res);
            }
        }
    }
    Ok(report.finish())
}

/// Lex-greatest reduced word.
fn max_reduced_word(w: &SignedPerm) -> Vec<usize> {
    let n = w.n();
    let mut cur = w.clone();
    let mut out = Vec::new();
    while cur.length() > 0 {
        let k = (0..n)
            .rev()
            .find(|&k| SignedPerm::simple(n, k).compose(&cur).length() < cur.length())
            .expect("left descent");
        out.push(k);
        cur = SignedPerm::simple(n, k).compose(&cur);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauWordComparison {
    pub lex_least: String,
    pub lex_greatest: String,
    pub weight_word: String,
    pub differs: bool,
}

/// Compare tau_w built from the lex-least and lex-greatest reduced words
/// of each Weyl group element, on monomials up to `max_deg`.
pub fn tau_w_dependence(rep: &Rep, max_deg: u32) -> Result<Vec<TauWordComparison>, OklrError> {
    let n = rep.n();
    let mut out = Vec::new();
    let elements: BTreeSet<SignedPerm> = SignedPerm::all(n)
        .into_iter()
        .filter(|w| rep.mode() == Mode::Orientifold || w.is_unsigned())
        .collect();
    for w in elements {
        let lo = w.reduced_word();
        let hi = max_reduced_word(&w);
        if lo == hi {
            continue;
        }
        let glo: Vec<Gen> = lo.iter().map(|&k| Gen::T(k)).collect();
        let ghi: Vec<Gen> = hi.iter().map(|&k| Gen::T(k)).collect();
        for nu in rep.comps() {
            let mut differs = false;
            for m in monomials_up_to(n, max_deg) {
                let v = PolyVec::single(nu.clone(), MultiPoly::monomial(n, m, BigRational::one()));
                if rep.apply_word(&glo, &v)? != rep.apply_word(&ghi, &v)? {
                    differs = true;
                    break;
                }
            }
            out.push(TauWordComparison {
                lex_least: tau_word_string(&lo),
                lex_greatest: tau_word_string(&hi),
                weight_word: comp_string(nu),
                differs,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::params::univariate;
    use super::super::{all_pass, Status};
    use super::*;

    fn w(s: &str) -> VertexWeight {
        s.parse().unwrap()
    }

    #[test]
    fn grading_examples() {
        let r = Rep::orientifold(&w("1:1,-1:1"), &w("0")).unwrap();
        let audit = verify_grading(&r, 4);
        assert!(all_pass(&audit.entries));
        let t0 = audit.observations.iter().find(|o| o.generator == "t0" && o.weight_word == "1").unwrap();
        assert_eq!((t0.raw, t0.normalized), (0, 0));
        let x1 = audit.observations.iter().find(|o| o.generator == "x1").unwrap();
        assert_eq!(x1.normalized, 2);

        let r = Rep::orientifold(&w("1:1,-1:1"), &w("1:1")).unwrap();
        let audit = verify_grading(&r, 4);
        assert!(all_pass(&audit.entries));
        let t0 = audit.observations.iter().find(|o| o.generator == "t0" && o.weight_word == "1").unwrap();
        assert_eq!(t0.declared, 1);
        assert_eq!(t0.normalized, 1);
        assert_eq!(t0.raw, 2);
    }

    #[test]
    fn grading_rank_three() {
        for lam in ["0", "1:1,3:2"] {
            let r = Rep::orientifold(&w("1:2,-1:2,3:1,-3:1"), &w(lam)).unwrap();
            assert!(all_pass(&verify_grading(&r, 3).entries));
        }
        let r = Rep::orientifold(&w("0:2,2:1,-2:1"), &w("2:1")).unwrap();
        assert!(all_pass(&verify_grading(&r, 3).entries));
        let r = Rep::klr(&w("1:1,3:1,5:1")).unwrap();
        assert!(all_pass(&verify_grading(&r, 3).entries));
    }

    #[test]
    fn pbw_rank() {
        let r = Rep::orientifold(&w("1:1,-1:1"), &w("1:1")).unwrap();
        let rep = verify_pbw_independence(&r, 4, 2).unwrap();
        assert_eq!(rep.len(), 2);
        assert!(all_pass(&rep));
        let r = Rep::orientifold(&w("1:1,-1:1,3:1,-3:1"), &w("0")).unwrap();
        assert!(all_pass(&verify_pbw_independence(&r, 6, 2).unwrap()));
        let r = Rep::orientifold(&w("0:2,2:1,-2:1"), &w("0")).unwrap();
        assert!(all_pass(&verify_pbw_independence(&r, 6, 2).unwrap()));
        let r = Rep::orientifold(&w("0"), &w("0")).unwrap();
        assert!(all_pass(&verify_pbw_independence(&r, 6, 2).unwrap()));
    }

    #[test]
    fn pbw_rank_detects_too_few_columns() {
        // On constants alone the divided difference tau_0 e(0) acts as zero.
        let r = Rep::orientifold(&w("0:2"), &w("0")).unwrap();
        let rep = verify_pbw_independence(&r, 0, 1).unwrap();
        assert!(rep.iter().all(|e| e.status == Status::Fail));
        assert!(rep[0].witness.as_ref().unwrap().contains("t0"));
    }

    #[test]
    fn regular_module_detects_degenerate_q_vector() {
        let beta = w("1:1,-1:1");
        let good = ParamMatrices::quiver(&w("1:2,-1:1")).unwrap();
        assert!(all_pass(&regular_module_check(&good, &beta, 4).unwrap()));
        let fixed = ParamMatrices::quiver(&w("0")).unwrap();
        assert!(all_pass(&regular_module_check(&fixed, &w("0:2"), 4).unwrap()));
        // Q_1(u) = u, Q_{-1}(u) = 1 is not self-conjugate
        let bad = good.with_q_vec(1, univariate(&[0, 1])).with_q_vec(-1, univariate(&[1]));
        let rep = regular_module_check(&bad, &beta, 3).unwrap();
        let fails: Vec<_> = rep.iter().filter(|e| e.status == Status::Fail).collect();
        assert!(!fails.is_empty());
        assert!(fails.iter().all(|e| e.case == "t0^2"));
        assert!(fails[0].witness.as_ref().unwrap().starts_with("dependency t0"));
    }

    #[test]
    fn reduced_expression_dependence() {
        let r = Rep::orientifold(&w("1:2,-1:2"), &w("1:1")).unwrap();
        let cmp = tau_w_dependence(&r, 3).unwrap();
        assert!(cmp.iter().any(|c| c.differs && c.weight_word == "1,-1"));
        let r = Rep::orientifold(&w("1:2,-1:2"), &w("0")).unwrap();
        assert!(tau_w_dependence(&r, 3).unwrap().iter().all(|c| !c.differs));
    }

    #[test]
    fn weyl_group_sizes() {
        let r = Rep::orientifold(&w("1:2,-1:2"), &w("0")).unwrap();
        let ws = weyl_reduced_words(&r);
        assert_eq!(ws.len(), 8);
        assert_eq!(ws.last().unwrap(), &vec![0, 1, 0, 1]);
        let r = Rep::klr(&w("1:1,3:1,5:1")).unwrap();
        assert_eq!(weyl_reduced_words(&r).len(), 6);
    }
}
