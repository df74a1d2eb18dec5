//! Pass/fail report lines shared by the verification suites.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub family: String,
    pub case: String,
    pub weight_word: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

pub fn all_pass(entries: &[ReportEntry]) -> bool {
    entries.iter().all(|e| e.status == Status::Pass)
}

/// Collects results keyed by (family, case, weight word), keeping the first
/// witness of a failure.
#[derive(Default)]
pub(crate) struct ReportBuilder {
    entries: Vec<ReportEntry>,
    index: std::collections::HashMap<(String, String, String), usize>,
}

impl ReportBuilder {
    pub(crate) fn record(&mut self, family: &str, case: &str, word: &str, res: Result<(), String>) {
        let key = (family.to_string(), case.to_string(), word.to_string());
        let idx = *self.index.entry(key).or_insert_with(|| {
            self.entries.push(ReportEntry {
                family: family.into(),
                case: case.into(),
                weight_word: word.into(),
                status: Status::Pass,
                witness: None,
            });
            self.entries.len() - 1
        });
        if let Err(w) = res {
            let e = &mut self.entries[idx];
            if e.status == Status::Pass {
                e.status = Status::Fail;
                e.witness = Some(w);
            }
        }
    }

    pub(crate) fn finish(self) -> Vec<ReportEntry> {
        self.entries
    }
}
