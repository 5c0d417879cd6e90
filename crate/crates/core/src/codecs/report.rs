use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::Result;
use crate::warping::{warping_degree, warping_profile};

/// Summary of a diagram: `c(D)`, `d(D)`, `d(-D)`, the span of the warping
/// profile, alternation, and `slack = c - d - d' - 1`.
///
/// Serializes with keys in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub crossings: usize,
    pub d: usize,
    pub d_reversed: usize,
    pub span: usize,
    pub alternating: bool,
    pub slack: i64,
}

impl Report {
    /// Computes the report. `d(-D)` is counted on the reversed word rather
    /// than derived from the profile of `D`.
    pub fn compute(diagram: &Diagram) -> Result<Report> {
        let profile = warping_profile(diagram)?;
        let crossings = diagram.crossing_count();
        let d = profile.min();
        let d_reversed = warping_degree(&diagram.reverse());
        Ok(Report {
            crossings,
            d,
            d_reversed,
            span: profile.span(),
            alternating: diagram.is_alternating(),
            slack: crossings as i64 - d as i64 - d_reversed as i64 - 1,
        })
    }

    /// The degree pair as `(min, max)`.
    pub fn pair(&self) -> (usize, usize) {
        (self.d.min(self.d_reversed), self.d.max(self.d_reversed))
    }
}

pub fn emit_report(report: &Report) -> String {
    serde_json::to_string(report).expect("report serialization cannot fail")
}
