use std::io::Write;

use anyhow::Result;
use oklr_core::comb::WordComb;
use oklr_core::exactq::LaurentPoly;
use oklr_core::words::Word;
use serde_json::{Map, Value};

use crate::args::Format;

/// Result of one command: the JSON document plus a flat table view.
pub struct Output {
    pub json: Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub ok: bool,
}

impl Output {
    pub fn new(json: Value, headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        Output {
            json,
            headers: headers.iter().map(|s| s.to_string()).collect(),
            rows,
            ok: true,
        }
    }
}

pub fn word_key(w: &Word) -> String {
    if w.is_empty() {
        "()".into()
    } else {
        w.to_string()
    }
}

/// `{"word": {"exp": coeff}}` with words as keys.
pub fn comb_json(c: &WordComb) -> Value {
    let map: Map<String, Value> = c
        .iter()
        .map(|(w, p)| (word_key(w), serde_json::to_value(p).expect("laurent to json")))
        .collect();
    Value::Object(map)
}

pub fn comb_from_json(v: &Value) -> Result<WordComb> {
    let mut out = WordComb::zero();
    for (k, c) in v.as_object().ok_or_else(|| anyhow::anyhow!("expected a word map"))? {
        let w: Word = if k == "()" { Word::empty() } else { k.parse()? };
        out.add_term(w, serde_json::from_value::<LaurentPoly>(c.clone())?);
    }
    Ok(out)
}

/// Human form, e.g. `(1+q^-2)[1,1] + [1,-1]`.
pub fn comb_text(c: &WordComb) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = c
        .iter()
        .rev()
        .map(|(w, p)| {
            if p.is_one() {
                format!("[{}]", word_key(w))
            } else if p.num_terms() == 1 && !p.to_string().starts_with('-') {
                format!("{p}[{}]", word_key(w))
            } else {
                format!("({p})[{}]", word_key(w))
            }
        })
        .collect();
    parts.join(" + ")
}

pub fn render(out: &Output, format: Format, w: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *w, &out.json)?;
            writeln!(w)?;
        }
        Format::Csv => {
            let mut cw = csv::Writer::from_writer(&mut *w);
            cw.write_record(&out.headers)?;
            for r in &out.rows {
                cw.write_record(r)?;
            }
            cw.flush()?;
        }
        Format::Table => {
            let ncol = out.headers.len();
            let mut width = vec![0; ncol];
            for r in std::iter::once(&out.headers).chain(&out.rows) {
                for (i, c) in r.iter().enumerate().take(ncol) {
                    width[i] = width[i].max(c.chars().count());
                }
            }
            let line = |r: &[String]| -> String {
                let cells: Vec<String> = r
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        if i + 1 == ncol {
                            c.clone()
                        } else {
                            format!("{c:<0$}", width[i])
                        }
                    })
                    .collect();
                cells.join("  ").trim_end().to_string()
            };
            writeln!(w, "{}", line(&out.headers))?;
            let rule: Vec<String> = width.iter().map(|&n| "-".repeat(n)).collect();
            writeln!(w, "{}", rule.join("  "))?;
            for r in &out.rows {
                writeln!(w, "{}", line(r))?;
            }
        }
    }
    Ok(())
}
