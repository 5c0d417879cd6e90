//! Text notations for diagrams and the JSON report.

pub mod dt;
pub mod gauss;
pub mod report;

pub use dt::{diagram_to_dt, dt_to_diagram, parse_dt, DtCode};
pub use gauss::{format_gauss, parse_gauss, parse_gauss_raw};
pub use report::{emit_report, Report};
