//! Warping degrees of oriented knot diagrams.
//!
//! A diagram is a cyclic Gauss word. For a base point `a`, `d(D_a)` counts
//! the crossings first reached along their under pass; `d(D)` minimizes it
//! over base points. The crate computes these quantities, converts between
//! Gauss and DT notation, builds torus-knot diagrams from braids, and checks
//! the identities relating `d(D)`, `d(-D)` and the crossing count.
//!
//! ```
//! use warpdeg::{parse_gauss, warping_degree};
//!
//! let trefoil = parse_gauss("O1U2O3U1O2U3").unwrap();
//! assert_eq!(warping_degree(&trefoil), 1);
//! assert_eq!(warping_degree(&trefoil.reverse()), 1);
//! ```

pub mod analysis;
pub mod codecs;
pub mod diagram;
pub mod error;
pub mod generators;
pub mod warping;

pub use codecs::{
    diagram_to_dt, dt_to_diagram, emit_report, format_gauss, parse_dt, parse_gauss, DtCode, Report,
};
pub use diagram::{BasePoint, CrossingId, Diagram, Pass, Symbol};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use generators::{braid_closure, enumerate_words, random_word, torus_diagram, BraidWord};
pub use warping::{
    arc_labels, cutting_number, is_warping, span, warping_degree, warping_degree_at,
    warping_profile, ArcLabels, ArcTriple, WarpProfile,
};
