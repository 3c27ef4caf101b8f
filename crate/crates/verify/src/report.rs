//! Report types and their JSON/text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    /// Imported theory, recorded but not computed.
    Assumed,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Assumed => "ASSUMED",
        }
    }
}

/// Where the expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Stated in the literature.
    Published,
    /// Immediate from the definitions.
    Trivial,
    /// Computed from published data by a short argument.
    Derived,
    /// A theorem imported without computation.
    Assumed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub computed: String,
    pub expected: String,
    pub source: Source,
    pub citation: String,
    pub status: Status,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub assumed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub toolkit_version: String,
    pub selector: String,
    /// SHA-256 of every data file read, keyed by path relative to the
    /// data directory.
    pub data_digests: BTreeMap<String, String>,
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts the checks by id and recomputes the summary.
    pub fn new(
        selector: &str,
        data_digests: BTreeMap<String, String>,
        mut checks: Vec<CheckResult>,
        notes: Vec<String>,
    ) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary { total: checks.len(), ..Summary::default() };
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Inconclusive => summary.inconclusive += 1,
                Status::Assumed => summary.assumed += 1,
            }
        }
        VerificationReport {
            toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
            selector: selector.to_string(),
            data_digests,
            checks,
            notes,
            summary,
        }
    }

    /// 0 if nothing failed or was inconclusive, 1 on any failure, 2 if the
    /// worst outcome is inconclusive.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.inconclusive > 0 {
            2
        } else {
            0
        }
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

const SECTIONS: [(&str, &str); 7] = [
    ("bounds", "Ramification and root-discriminant bounds"),
    ("cft", "Class field theory of Q(i, sqrt(-19)) and Q(sqrt(-19), alpha)"),
    ("ext", "Extensions of mu_2 by Z/2"),
    ("hopf", "Explicit rank-4 group schemes"),
    ("curve", "2-torsion of X_0(19)"),
    ("groups", "F_2[S3]-modules and finite-group lemmas"),
    ("theory", "Imported theory (not computed)"),
];

pub fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
    }
}

fn render_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "verify {} ({})", r.toolkit_version, r.selector);
    for (path, digest) in &r.data_digests {
        let _ = writeln!(out, "  data {path} sha256:{digest}");
    }
    for (prefix, title) in SECTIONS {
        let checks: Vec<&CheckResult> =
            r.checks.iter().filter(|c| c.id.split('.').next() == Some(prefix)).collect();
        if checks.is_empty() {
            continue;
        }
        let _ = writeln!(out, "\n== {title} ==");
        for c in checks {
            let _ = writeln!(out, "[{}] {}: {}", c.status.tag(), c.id, c.description);
            let _ = writeln!(out, "    computed: {}", c.computed);
            if c.expected != c.computed {
                let _ = writeln!(out, "    expected: {}", c.expected);
            }
            let _ = writeln!(out, "    cites \"{}\" ({:?})", c.citation, c.source);
        }
    }
    if !r.notes.is_empty() {
        let _ = writeln!(out, "\n== Notes ==");
        for n in &r.notes {
            let _ = writeln!(out, "- {n}");
        }
    }
    let s = &r.summary;
    let _ = writeln!(
        out,
        "\n{} checks: {} pass, {} fail, {} inconclusive, {} assumed",
        s.total, s.pass, s.fail, s.inconclusive, s.assumed
    );
    out
}
