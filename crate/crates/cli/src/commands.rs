use std::fmt::Display;
use std::str::FromStr;

use anyhow::{anyhow, Result};
use oklr_core::bases::{compute_bases, BasisKind};
use oklr_core::characters::{dim_table, simple_chars, PeelMethod};
use oklr_core::exactq::LaurentPoly;
use oklr_core::identities::{verify_ek, verify_axioms};
use oklr_core::oklrsym::params::univariate;
use oklr_core::oklrsym::rep::{plain_weights, self_dual_weights};
use oklr_core::oklrsym::{
    faithfulness_proxy, regular_module_check, verify_grading, verify_pbw_independence, verify_relations,
    verify_symmetry_maps, Mode, ParamMatrices, Rep, ReportEntry, Status, VertexWeight,
};
use oklr_core::rootdata::DimVector;
use oklr_core::shuffle::{shuffle_words, BracketConvention};
use oklr_core::thetamod::{star_words, theta_good_bruteforce};
use oklr_core::words::{good_lyndon_words, good_words, theta_good_words, theta_lyndon_words, Order, Word};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{BasisArg, CharArg, Suite, ValueName, WordKind};
use crate::cache::{Cache, CacheKey};
use crate::output::{comb_from_json, comb_json, comb_text, word_key, Output};

/// Malformed input; reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

pub fn parse<T: FromStr>(what: &str, s: &str) -> Result<T>
where
    T::Err: Display,
{
    s.parse().map_err(|e| usage(format!("invalid {what}: {e}")))
}

fn self_dual(beta: &DimVector) -> Result<()> {
    if beta.is_self_dual() {
        Ok(())
    } else {
        Err(usage(format!("weight {beta} is not self-dual")))
    }
}

pub fn words_enum(weight: &str, kind: WordKind, lambda: Option<&str>) -> Result<Output> {
    let beta: DimVector = parse("weight", weight)?;
    let lam: Option<DimVector> = lambda.map(|l| parse("framing", l)).transpose()?;
    if lam.is_some() && kind != WordKind::ThetaGood {
        return Err(usage("--lambda applies to --kind theta-good only"));
    }
    let words = match kind {
        WordKind::Good => good_words(&beta),
        WordKind::Lyndon => good_lyndon_words(&beta),
        WordKind::ThetaGood => {
            self_dual(&beta)?;
            match &lam {
                Some(l) if !l.is_zero() => theta_good_bruteforce(&beta, l),
                _ => theta_good_words(&beta),
            }
        }
        WordKind::ThetaLyndon => {
            self_dual(&beta)?;
            theta_lyndon_words(&beta)
        }
    };
    let keys: Vec<String> = words.iter().map(word_key).collect();
    let json = json!({
        "weight": beta.to_string(),
        "kind": kind.name(),
        "framing": lam.unwrap_or_else(DimVector::zero).to_string(),
        "count": keys.len(),
        "words": keys,
    });
    let rows = keys.iter().enumerate().map(|(i, w)| vec![(i + 1).to_string(), w.clone()]).collect();
    Ok(Output::new(json, &["#", "word"], rows))
}

fn comb_output(weight: String, framing: Option<String>, terms: &oklr_core::comb::WordComb) -> Output {
    let mut json = json!({ "weight": weight, "terms": comb_json(terms) });
    if let Some(f) = framing {
        json["framing"] = Value::String(f);
    }
    let rows = terms.iter().rev().map(|(w, c)| vec![word_key(w), c.to_string()]).collect();
    Output::new(json, &["word", "coefficient"], rows)
}

pub fn shuffle_mul(a: &str, b: &str) -> Result<Output> {
    let a: Word = parse("word", a)?;
    let b: Word = parse("word", b)?;
    Ok(comb_output(a.concat(&b).weight().to_string(), None, &shuffle_words(&a, &b)))
}

pub fn shuffle_star(a: &str, b: &str, lambda: &str) -> Result<Output> {
    let a: Word = parse("word", a)?;
    let b: Word = parse("word", b)?;
    let lam: DimVector = parse("framing", lambda)?;
    let terms = star_words(&a, &b, &lam);
    Ok(comb_output(a.concat(&b).theta_weight().to_string(), Some(lam.to_string()), &terms))
}

fn cached(cache: Option<&Cache>, key: CacheKey, f: impl FnOnce() -> Result<Value>) -> Result<Value> {
    match cache {
        Some(c) => c.get_or_compute(&key, f),
        None => f(),
    }
}

fn order_tag() -> &'static str {
    Order::AntiLex.tag()
}

fn basis_kind(k: BasisArg) -> BasisKind {
    match k {
        BasisArg::Monomial => BasisKind::Monomial,
        BasisArg::Lyndon => BasisKind::Lyndon,
        BasisArg::Pbw => BasisKind::Pbw,
        BasisArg::Canonical => BasisKind::Canonical,
        BasisArg::DualCanonical => BasisKind::DualCanonical,
    }
}

/// Payload for a family of elements indexed by words.
fn family_payload(weight: &DimVector, kind: &str, words: &[Word], elts: &[oklr_core::thetamod::ThetaElt]) -> Value {
    let elements: Vec<Value> = words
        .iter()
        .zip(elts)
        .map(|(w, e)| json!({ "word": word_key(w), "terms": comb_json(&e.terms) }))
        .collect();
    json!({ "weight": weight.to_string(), "kind": kind, "elements": elements })
}

fn family_output(payload: Value) -> Result<Output> {
    let mut rows = Vec::new();
    for e in payload["elements"].as_array().ok_or_else(|| anyhow!("malformed payload"))? {
        let terms = comb_from_json(&e["terms"])?;
        rows.push(vec![e["word"].as_str().unwrap_or_default().to_string(), comb_text(&terms)]);
    }
    Ok(Output::new(payload, &["word", "element"], rows))
}

pub fn basis(weight: &str, kind: BasisArg, cache: Option<&Cache>) -> Result<Output> {
    let beta: DimVector = parse("weight", weight)?;
    self_dual(&beta)?;
    let name = kind.name();
    let key = CacheKey::new(&format!("basis {name}"), &beta.to_string(), "0", order_tag());
    let payload = cached(cache, key, || {
        let b = compute_bases(&beta, BracketConvention::default())?;
        Ok(family_payload(&beta, &name, b.words(), b.family(basis_kind(kind))))
    })?;
    family_output(payload)
}

pub fn character(what: CharArg, weight: &str, cache: Option<&Cache>) -> Result<Output> {
    let beta: DimVector = parse("weight", weight)?;
    self_dual(&beta)?;
    let name = what.name();
    let key = CacheKey::new(&format!("char {name}"), &beta.to_string(), "0", order_tag());
    let payload = cached(cache, key, || {
        Ok(match what {
            CharArg::Dims => serde_json::to_value(dim_table(&beta)?)?,
            _ => {
                let t = simple_chars(&beta, PeelMethod::default())?;
                match what {
                    CharArg::Standard => family_payload(&beta, &name, &t.words, &t.standards),
                    CharArg::Simple => family_payload(&beta, &name, &t.words, &t.simples),
                    _ => json!({
                        "weight": beta.to_string(),
                        "words": t.words.iter().map(word_key).collect::<Vec<_>>(),
                        "decomp": t.decomp,
                    }),
                }
            }
        })
    })?;
    match what {
        CharArg::Standard | CharArg::Simple => family_output(payload),
        CharArg::Decomp => {
            let words: Vec<String> = serde_json::from_value(payload["words"].clone())?;
            let m: Vec<Vec<LaurentPoly>> = serde_json::from_value(payload["decomp"].clone())?;
            let mut headers = vec!["word"];
            headers.extend(words.iter().map(String::as_str));
            let rows = words
                .iter()
                .zip(&m)
                .map(|(w, r)| std::iter::once(w.clone()).chain(r.iter().map(|c| c.to_string())).collect())
                .collect();
            Ok(Output::new(payload.clone(), &headers, rows))
        }
        CharArg::Dims => {
            let mut rows = Vec::new();
            for r in payload["rows"].as_array().ok_or_else(|| anyhow!("malformed payload"))? {
                let g: LaurentPoly = serde_json::from_value(r["graded_dim"].clone())?;
                rows.push(vec![
                    r["word"].as_str().unwrap_or_default().to_string(),
                    g.to_string(),
                    r["dim"].as_str().unwrap_or_default().to_string(),
                ]);
            }
            Ok(Output::new(payload, &["word", "graded dim", "dim"], rows))
        }
    }
}

pub struct VerifyOpts<'a> {
    pub suite: Suite,
    pub n: Option<usize>,
    pub beta: Option<&'a str>,
    pub lambda: &'a str,
    pub max_degree: Option<u32>,
    pub plain: bool,
    pub degenerate_q: bool,
    pub seed: u64,
}

const WINDOW: [i32; 7] = [-3, -2, -1, 0, 1, 2, 3];

fn weights(o: &VerifyOpts, n: usize) -> Result<Vec<VertexWeight>> {
    if let Some(b) = o.beta {
        return Ok(vec![parse("weight", b)?]);
    }
    Ok((1..=n)
        .flat_map(|h| {
            if o.plain {
                plain_weights(&WINDOW, h)
            } else {
                self_dual_weights(&WINDOW, h)
            }
        })
        .collect())
}

fn degenerate(params: ParamMatrices, beta: &VertexWeight) -> ParamMatrices {
    beta.support()
        .into_iter()
        .filter(|&i| i > 0)
        .fold(params, |p, i| p.with_q_vec(i, univariate(&[0, 1])).with_q_vec(-i, univariate(&[1])))
}

fn klr_weight(o: &VerifyOpts, beta: &VertexWeight, lam: &VertexWeight) -> Result<Vec<ReportEntry>> {
    let mode = if o.plain { Mode::Klr } else { Mode::Orientifold };
    let rep = match mode {
        Mode::Klr => Rep::klr(beta),
        Mode::Orientifold => Rep::orientifold(beta, lam),
    }
    .map_err(|e| usage(e.to_string()))?;
    Ok(match o.suite {
        Suite::Klr => {
            let d = o.max_degree.unwrap_or(6);
            let mut out = verify_relations(&rep, d);
            out.extend(verify_symmetry_maps(mode, beta, lam, d)?);
            out
        }
        Suite::Grading => verify_grading(&rep, o.max_degree.unwrap_or(6)).entries,
        Suite::Pbw => {
            let d = o.max_degree.unwrap_or(4);
            let mut out = Vec::new();
            if o.degenerate_q {
                let params = degenerate(ParamMatrices::quiver(lam)?, beta);
                return Ok(regular_module_check(&params, beta, d)?);
            }
            out.extend(verify_pbw_independence(&rep, d, d.min(2))?);
            if rep.n() <= 2 {
                out.extend(faithfulness_proxy(&rep, 40, 6, d, o.seed)?);
            }
            if mode == Mode::Orientifold && beta.height() == 2 {
                out.extend(regular_module_check(rep.params(), beta, d)?);
            }
            out
        }
        Suite::Ek | Suite::Axioms => unreachable!(),
    })
}

pub fn verify(o: &VerifyOpts) -> Result<Output> {
    let entries = match o.suite {
        Suite::Ek | Suite::Axioms => {
            if o.beta.is_some() || o.plain || o.degenerate_q || o.max_degree.is_some() {
                return Err(usage("ek and axioms take only --n (word length) and --lambda"));
            }
            let lam: DimVector = parse("framing", o.lambda)?;
            let len = o.n.unwrap_or(4);
            if o.suite == Suite::Ek {
                verify_ek(&lam, 3, len)
            } else {
                verify_axioms(&lam, 3, len)
            }
        }
        _ => {
            let n = o.n.unwrap_or(2);
            if o.suite == Suite::Pbw && n > 2 {
                return Err(usage("verify pbw runs at n <= 2"));
            }
            if o.degenerate_q && (o.suite != Suite::Pbw || o.plain) {
                return Err(usage("--degenerate-q applies to the orientifold pbw suite"));
            }
            let lam: VertexWeight = parse("framing", o.lambda)?;
            let mut ws = weights(o, n)?;
            if o.degenerate_q {
                ws.retain(|b| b.height() == 2);
            }
            let parts: Vec<Result<Vec<ReportEntry>>> =
                ws.par_iter().map(|b| klr_weight(o, b, &lam)).collect();
            let mut out = Vec::new();
            for p in parts {
                out.extend(p?);
            }
            out
        }
    };
    let ok = entries.iter().all(|e| e.status == Status::Pass);
    let rows = entries
        .iter()
        .map(|e| {
            vec![
                e.family.clone(),
                e.case.clone(),
                e.weight_word.clone(),
                if e.status == Status::Pass { "pass" } else { "fail" }.to_string(),
                e.witness.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let json = json!({
        "suite": o.suite.name(),
        "framing": o.lambda,
        "passed": ok,
        "checks": entries.len(),
        "failures": entries.iter().filter(|e| e.status == Status::Fail).count(),
        "entries": entries,
    });
    let mut out = Output::new(json, &["family", "case", "weight", "status", "witness"], rows);
    out.ok = ok;
    Ok(out)
}
