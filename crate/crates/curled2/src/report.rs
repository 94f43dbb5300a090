//! Serialisable verification reports.

use std::collections::BTreeMap;
use std::time::Instant;

use curled2_core::verify::{checks_for, CheckOutcome, VerifyConfig};
use curled2_core::{FieldSpec, Result};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    pub counts: BTreeMap<String, u64>,
    /// Wall-clock time; left empty unless timings were requested, so that
    /// reports are byte-for-byte reproducible by default.
    pub elapsed_ms: Option<u64>,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub field: String,
    pub seed: u64,
    pub checks: Vec<CheckEntry>,
}

impl VerificationReport {
    /// Runs every applicable check. Checks are independent, so they run on
    /// scoped threads; entries are sorted by name afterwards.
    pub fn run(spec: FieldSpec, cfg: &VerifyConfig, timings: bool) -> Result<Self> {
        let checks = checks_for(spec)?;
        let results: Vec<Result<(CheckOutcome, u64)>> = std::thread::scope(|s| {
            let handles: Vec<_> = checks
                .iter()
                .map(|&(_, f)| {
                    s.spawn(move || {
                        let start = Instant::now();
                        let out = f(spec, cfg)?;
                        Ok((out, start.elapsed().as_millis() as u64))
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("check panicked")).collect()
        });
        let mut entries = Vec::with_capacity(results.len());
        for r in results {
            let (out, ms) = r?;
            entries.push(CheckEntry {
                name: out.name,
                status: if out.passed { Status::Pass } else { Status::Fail },
                counts: out.counts,
                elapsed_ms: timings.then_some(ms),
                details: out.details,
            });
        }
        entries.sort_by(|a, b| a.name.cmp(&b.name));
        Ok(VerificationReport {
            field: spec.to_string(),
            seed: cfg.seed,
            checks: entries,
        })
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut s = format!("field {}  seed {}\n", self.field, self.seed);
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            let time = c.elapsed_ms.map(|ms| format!("  {ms} ms")).unwrap_or_default();
            s.push_str(&format!("{:<width$}  {status}{time}", c.name));
            if !c.details.is_empty() {
                s.push_str("  ");
                s.push_str(&c.details);
            }
            s.push('\n');
        }
        s
    }
}
