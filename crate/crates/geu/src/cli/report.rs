//! Deterministic command reports.
//!
//! A report echoes the command and budgets, carries one record per check,
//! and renders byte-identically for identical inputs and settings; witness
//! selection is the lexicographically first violation under the canonical
//! enumeration orders. Wall-clock data never enters a report.

use serde::Serialize;
use std::collections::BTreeMap;

use super::document::ProblemDocument;

#[derive(Debug, Clone, Serialize)]
pub struct BudgetsEcho {
    pub acts: u64,
    pub partitions: u64,
    pub probes: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub version: Option<String>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<(String, String)>>,
    pub vacuous: u64,
}

impl Record {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Record {
            name: name.into(),
            version: None,
            holds,
            mode: None,
            detail: None,
            witness: None,
            vacuous: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub budgets: BudgetsEcho,
    pub records: Vec<Record>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preference: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub acts: Option<Vec<BTreeMap<String, String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub problem: Option<ProblemDocument>,
}

impl Report {
    pub fn new(command: String, digest: String, budgets: crate::budgets::Budgets) -> Self {
        Report {
            command,
            input_digest: digest,
            budgets: BudgetsEcho {
                acts: budgets.acts,
                partitions: budgets.partitions,
                probes: budgets.probes,
            },
            records: Vec::new(),
            value: None,
            preference: None,
            acts: None,
            problem: None,
        }
    }

    pub fn all_hold(&self) -> bool {
        self.records.iter().all(|r| r.holds)
    }

    /// 0 when every record holds, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_hold() { 0 } else { 1 }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialization");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# geu {}\n", self.command));
        out.push_str(&format!("# input {}\n", self.input_digest));
        out.push_str(&format!(
            "# budgets acts={} partitions={} probes={}\n",
            self.budgets.acts, self.budgets.partitions, self.budgets.probes
        ));
        for record in &self.records {
            let version = record.version.as_deref().map(|v| format!(" {v}")).unwrap_or_default();
            let verdict = if record.holds { "pass" } else { "FAIL" };
            out.push_str(&format!("{}{}: {}", record.name, version, verdict));
            if let Some(mode) = &record.mode {
                out.push_str(&format!(" [{mode}]"));
            }
            if let Some(detail) = &record.detail {
                out.push_str(&format!(" ({detail})"));
            }
            if let Some(witness) = &record.witness {
                if witness.is_empty() {
                    out.push_str(" witness: none exists");
                } else {
                    let rendered: Vec<String> =
                        witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    out.push_str(&format!(" witness: {}", rendered.join(" ")));
                }
            }
            if record.vacuous > 0 {
                out.push_str(&format!(" (vacuous {})", record.vacuous));
            }
            out.push('\n');
        }
        if let Some(value) = &self.value {
            out.push_str(&format!("value: {value}\n"));
        }
        if let Some(pairs) = &self.preference {
            for (a, b) in pairs {
                out.push_str(&format!("pref: {a} <= {b}\n"));
            }
        }
        if let Some(acts) = &self.acts {
            for act in acts {
                let cells: Vec<String> = act.iter().map(|(s, c)| format!("{s}->{c}")).collect();
                out.push_str(&format!("act: {}\n", cells.join(" ")));
            }
        }
        if let Some(problem) = &self.problem {
            out.push_str(&super::document::document_to_json(problem));
        }
        out
    }
}
