//! Machine-readable verification reports and per-identity summaries.

use serde::{Deserialize, Serialize};

use super::{IdentityReport, Status, Suite};

/// One row of the JSON report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: String,
    pub reading: String,
    pub n: usize,
    pub status: Status,
    pub residual: Vec<String>,
}

impl From<&IdentityReport> for ReportRecord {
    fn from(r: &IdentityReport) -> Self {
        ReportRecord {
            identity: r.identity.clone(),
            reading: r.reading.clone(),
            n: r.n,
            status: r.status,
            residual: r.residual.to_fraction_strings(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailedReading {
    pub reading: String,
    pub min_failing_n: usize,
    /// Residual at `min_failing_n`, ascending `p/q` coefficients.
    pub residual: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub identity: String,
    /// Readings with no mismatch and at least one exact `n`.
    pub exact_readings: Vec<String>,
    pub failed_readings: Vec<FailedReading>,
    /// Readings that never produced a value in the requested range.
    pub inapplicable_readings: Vec<String>,
}

impl IdentitySummary {
    pub fn holds(&self) -> bool {
        !self.exact_readings.is_empty()
    }
}

/// Groups reports by identity (first-seen order) and reading (sorted).
pub fn summarize(reports: &[IdentityReport]) -> Vec<IdentitySummary> {
    let mut out: Vec<IdentitySummary> = Vec::new();
    let mut identities: Vec<&str> = Vec::new();
    for r in reports {
        if !identities.contains(&r.identity.as_str()) {
            identities.push(&r.identity);
        }
    }
    for id in identities {
        let rows: Vec<&IdentityReport> = reports.iter().filter(|r| r.identity == id).collect();
        let mut readings: Vec<&str> = rows.iter().map(|r| r.reading.as_str()).collect();
        readings.sort_unstable();
        readings.dedup();
        let mut summary = IdentitySummary {
            identity: id.to_string(),
            exact_readings: Vec::new(),
            failed_readings: Vec::new(),
            inapplicable_readings: Vec::new(),
        };
        for reading in readings {
            let of_reading = || rows.iter().filter(move |r| r.reading == reading);
            let first_failure = of_reading()
                .filter(|r| r.status == Status::Mismatch)
                .min_by_key(|r| r.n);
            if let Some(fail) = first_failure {
                summary.failed_readings.push(FailedReading {
                    reading: reading.to_string(),
                    min_failing_n: fail.n,
                    residual: fail.residual.to_fraction_strings(),
                });
            } else if of_reading().any(|r| r.status == Status::Exact) {
                summary.exact_readings.push(reading.to_string());
            } else {
                summary.inapplicable_readings.push(reading.to_string());
            }
        }
        out.push(summary);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMetadata {
    pub tool: String,
    pub version: String,
    pub suite: Suite,
    pub max_n: usize,
}

/// Complete report file: metadata, every row, and the summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub metadata: ReportMetadata,
    pub reports: Vec<ReportRecord>,
    pub summary: Vec<IdentitySummary>,
}

impl ReportDocument {
    pub fn new(suite: Suite, max_n: usize, reports: &[IdentityReport]) -> Self {
        ReportDocument {
            metadata: ReportMetadata {
                tool: env!("CARGO_PKG_NAME").to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
                suite,
                max_n,
            },
            reports: reports.iter().map(ReportRecord::from).collect(),
            summary: summarize(reports),
        }
    }

    /// True when every identity has at least one exact reading.
    pub fn all_hold(&self) -> bool {
        self.summary.iter().all(IdentitySummary::holds)
    }
}
