//! Verification reports and their JSON and Markdown renderings.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

use crate::harness::Target;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Confirmed,
    Refuted,
    Partial,
}

impl Status {
    /// Process exit code for this status.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Confirmed => 0,
            Status::Refuted => 2,
            Status::Partial => 3,
        }
    }
}

/// A graph that contradicts the statement under test, or that could not be
/// checked automatically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub n: usize,
    pub graph6: String,
    pub classification: String,
}

/// One line of per-order results.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub n: usize,
    pub checked: u64,
    pub summary: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target: Target,
    /// The property checked, stated in full.
    pub clause: String,
    pub n_range: (usize, usize),
    pub instances_checked: u64,
    pub status: Status,
    pub discrepancies: Vec<Discrepancy>,
    /// Items that need manual review but do not contradict the statement.
    pub notices: Vec<String>,
    pub rows: Vec<Row>,
    pub resume: Option<String>,
    pub wall_time: f64,
    pub tool_version: String,
    pub config_hash: String,
}

impl VerificationReport {
    pub fn new(target: Target, n_range: (usize, usize), config_hash: String) -> Self {
        VerificationReport {
            target,
            clause: target.clause().to_owned(),
            n_range,
            instances_checked: 0,
            status: Status::Confirmed,
            discrepancies: Vec::new(),
            notices: Vec::new(),
            rows: Vec::new(),
            resume: None,
            wall_time: 0.0,
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            config_hash,
        }
    }

    pub fn row(&mut self, n: usize, checked: u64, summary: impl Into<String>) {
        self.instances_checked += checked;
        self.rows.push(Row { n, checked, summary: summary.into() });
    }

    pub fn discrepancy(&mut self, n: usize, graph6: impl Into<String>, classification: impl Into<String>) {
        self.discrepancies.push(Discrepancy { n, graph6: graph6.into(), classification: classification.into() });
    }

    /// Marks the run as incomplete.
    pub fn partial(&mut self, notice: impl Into<String>) {
        self.notices.push(notice.into());
        if self.status == Status::Confirmed {
            self.status = Status::Partial;
        }
    }

    /// Sets the final status: refuted when discrepancies exist.
    pub fn finish(&mut self) {
        if !self.discrepancies.is_empty() {
            self.status = Status::Refuted;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# {}\n", self.target.name());
        let _ = writeln!(s, "> {}\n", self.clause);
        let _ = writeln!(s, "| field | value |\n|---|---|");
        let _ = writeln!(s, "| status | {:?} |", self.status);
        let _ = writeln!(s, "| n range | {}..={} |", self.n_range.0, self.n_range.1);
        let _ = writeln!(s, "| instances checked | {} |", self.instances_checked);
        let _ = writeln!(s, "| wall time | {:.2} s |", self.wall_time);
        let _ = writeln!(s, "| version | {} |", self.tool_version);
        let _ = writeln!(s, "| config hash | `{}` |", self.config_hash);
        if let Some(r) = &self.resume {
            let _ = writeln!(s, "| resume | `{r}` |");
        }
        if !self.rows.is_empty() {
            let _ = writeln!(s, "\n## Results\n\n| n | checked | summary |\n|---|---|---|");
            for r in &self.rows {
                let _ = writeln!(s, "| {} | {} | {} |", r.n, r.checked, r.summary.replace('|', "\\|"));
            }
        }
        if !self.discrepancies.is_empty() {
            let _ = writeln!(s, "\n## Discrepancies\n\n| n | graph6 | classification |\n|---|---|---|");
            for d in &self.discrepancies {
                let _ = writeln!(s, "| {} | `{}` | {} |", d.n, d.graph6, d.classification);
            }
        }
        if !self.notices.is_empty() {
            let _ = writeln!(s, "\n## Notices\n");
            for n in &self.notices {
                let _ = writeln!(s, "- {n}");
            }
        }
        s
    }

    /// Writes `<target>.json` and `<target>.md` into `dir`.
    pub fn write(&self, dir: &Path) -> Result<(PathBuf, PathBuf)> {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let json = dir.join(format!("{}.json", self.target.name()));
        let md = dir.join(format!("{}.md", self.target.name()));
        fs::write(&json, self.to_json()).with_context(|| format!("writing {}", json.display()))?;
        fs::write(&md, self.to_markdown()).with_context(|| format!("writing {}", md.display()))?;
        Ok((json, md))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

pub fn export_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Markdown => report.to_markdown(),
    }
}
