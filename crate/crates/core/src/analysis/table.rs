//! Reproduction of the warping-degree table for standard diagrams of prime
//! knots up to nine crossings.
//!
//! Records are line-delimited JSON:
//!
//! ```text
//! {"name":"3_1","crossings":3,"dt":[4,6,2],"expected":[1,1],"alternating":true}
//! ```
//!
//! A row may carry `"allow_pair_mismatch": true` together with a `"note"`
//! naming why its diagram differs from the reference one. Such rows may
//! disagree on the pair but must still satisfy the sum identity.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::codecs::{dt_to_diagram, DtCode, Report};
use crate::error::{Error, Result};

/// The shipped table of 84 knots, `3_1` through `9_49`.
pub const BUILTIN_TABLE: &str = include_str!("../../data/rolfsen_le9.jsonl");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotRecord {
    pub name: String,
    pub crossings: usize,
    pub dt: DtCode,
    /// Unordered pair `{d(D), d(-D)}`, stored as `[min, max]`.
    pub expected: [usize; 2],
    pub alternating: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub allow_pair_mismatch: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl KnotRecord {
    fn validate(&self) -> std::result::Result<(), String> {
        if self.crossings != self.dt.crossing_count() {
            return Err(format!(
                "{}: crossings = {} but DT code has {} entries",
                self.name,
                self.crossings,
                self.dt.crossing_count()
            ));
        }
        if self.expected[0] > self.expected[1] {
            return Err(format!("{}: expected pair must be [min, max]", self.name));
        }
        if self.allow_pair_mismatch && self.note.as_deref().is_none_or(str::is_empty) {
            return Err(format!("{}: flagged row needs a note", self.name));
        }
        Ok(())
    }
}

pub fn parse_records(text: &str) -> Result<Vec<KnotRecord>> {
    let mut records = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let data_err = |message: String| Error::Data {
            line: i + 1,
            message,
        };
        let record: KnotRecord = serde_json::from_str(line).map_err(|e| data_err(e.to_string()))?;
        record.validate().map_err(data_err)?;
        records.push(record);
    }
    Ok(records)
}

pub fn load_records(path: &Path) -> Result<Vec<KnotRecord>> {
    parse_records(&std::fs::read_to_string(path)?)
}

pub fn builtin_records() -> Vec<KnotRecord> {
    parse_records(BUILTIN_TABLE).expect("shipped table is valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Match,
    /// Pair differs on a row flagged `allow_pair_mismatch`.
    FlaggedMismatch,
    /// Pair differs, alternation disagrees, or the sum identity fails.
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub name: String,
    pub crossings: usize,
    pub expected: [usize; 2],
    pub computed: [usize; 2],
    pub alternating: bool,
    /// `d + d' = c - 1` for alternating rows, `d + d' <= c - 2` otherwise.
    pub sum_identity: bool,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReproduction {
    pub rows: Vec<TableRow>,
}

impl TableReproduction {
    pub fn matches(&self) -> usize {
        self.count(RowStatus::Match)
    }

    pub fn flagged(&self) -> usize {
        self.count(RowStatus::FlaggedMismatch)
    }

    pub fn unexplained(&self) -> usize {
        self.count(RowStatus::Mismatch)
    }

    fn count(&self, status: RowStatus) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn row(&self, name: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

impl fmt::Display for TableReproduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knot   c  expected  computed  status")?;
        for r in &self.rows {
            let status = match r.status {
                RowStatus::Match => "match",
                RowStatus::FlaggedMismatch => "flagged",
                RowStatus::Mismatch => "MISMATCH",
            };
            writeln!(
                f,
                "{:<6} {:>2}  {{{},{}}}     {{{},{}}}     {}{}",
                r.name,
                r.crossings,
                r.expected[0],
                r.expected[1],
                r.computed[0],
                r.computed[1],
                status,
                if r.alternating {
                    ""
                } else {
                    " (non-alternating)"
                }
            )?;
        }
        write!(
            f,
            "{} rows, {} match, {} flagged, {} unexplained mismatches",
            self.rows.len(),
            self.matches(),
            self.flagged(),
            self.unexplained()
        )
    }
}

/// Computes `{d(D), d(-D)}` for each record's diagram and compares it with
/// the expected pair, ignoring order.
pub fn reproduce_table(records: &[KnotRecord]) -> Result<TableReproduction> {
    let mut rows = Vec::with_capacity(records.len());
    for rec in records {
        let diagram = dt_to_diagram(&rec.dt);
        let report = Report::compute(&diagram)?;
        let (lo, hi) = report.pair();
        let sum = lo + hi;
        let c = rec.crossings;
        let sum_identity = if rec.alternating {
            sum + 1 == c
        } else {
            sum + 2 <= c
        };
        let consistent = sum_identity && report.alternating == rec.alternating;
        let status = if !consistent {
            RowStatus::Mismatch
        } else if [lo, hi] == rec.expected {
            RowStatus::Match
        } else if rec.allow_pair_mismatch {
            RowStatus::FlaggedMismatch
        } else {
            RowStatus::Mismatch
        };
        rows.push(TableRow {
            name: rec.name.clone(),
            crossings: c,
            expected: rec.expected,
            computed: [lo, hi],
            alternating: rec.alternating,
            sum_identity,
            status,
        });
    }
    Ok(TableReproduction { rows })
}
