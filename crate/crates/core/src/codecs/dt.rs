//! Dowker–Thistlethwaite codes.
//!
//! Walking a diagram with `c` crossings labels its visits `1..=2c`. When every
//! crossing is visited once at an odd and once at an even label, the code
//! lists the even partner of each odd label `1, 3, ..., 2c - 1`.
//!
//! Sign convention: a positive entry means the odd visit passes over, a
//! negative entry that it passes under. Published tables disagree on this
//! choice; flipping it mirrors the diagram, which leaves the unordered pair
//! `{d(D), d(-D)}` unchanged.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{BasePoint, Diagram, Pass, Symbol};
use crate::error::{Error, ParseError, ParseErrorKind, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DtCode(Vec<i64>);

impl DtCode {
    /// Checks that the absolute values are a permutation of `{2, 4, ..., 2c}`.
    pub fn new(entries: Vec<i64>) -> std::result::Result<Self, ParseError> {
        let max = 2 * entries.len() as i64;
        let mut used = vec![false; entries.len() + 1];
        for (i, &v) in entries.iter().enumerate() {
            let at = |kind| ParseError {
                column: i + 1,
                kind,
            };
            if v == 0 {
                return Err(at(ParseErrorKind::DtZero(v)));
            }
            if v % 2 != 0 {
                return Err(at(ParseErrorKind::DtOdd(v)));
            }
            let label = v.abs();
            if label > max {
                return Err(at(ParseErrorKind::DtOutOfRange { value: v, max }));
            }
            let slot = (label / 2) as usize;
            if used[slot] {
                return Err(at(ParseErrorKind::DtRepeated { value: v, label }));
            }
            used[slot] = true;
        }
        Ok(DtCode(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn crossing_count(&self) -> usize {
        self.0.len()
    }

    /// The same code with every sign flipped (the mirror diagram).
    pub fn negate(&self) -> DtCode {
        DtCode(self.0.iter().map(|v| -v).collect())
    }
}

impl TryFrom<Vec<i64>> for DtCode {
    type Error = ParseError;

    fn try_from(entries: Vec<i64>) -> std::result::Result<Self, ParseError> {
        DtCode::new(entries)
    }
}

impl From<DtCode> for Vec<i64> {
    fn from(code: DtCode) -> Self {
        code.0
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses whitespace- or comma-separated signed integers. Surrounding
/// brackets are tolerated. Error columns point into `text`.
pub fn parse_dt(text: &str) -> Result<DtCode> {
    let mut entries = Vec::new();
    let mut columns = Vec::new();
    let mut start = None;
    let chars: Vec<char> = text.chars().collect();
    let is_sep = |c: char| c.is_whitespace() || matches!(c, ',' | '[' | ']' | '(' | ')');
    for i in 0..=chars.len() {
        let sep = i == chars.len() || is_sep(chars[i]);
        match (start, sep) {
            (None, false) => start = Some(i),
            (Some(s), true) => {
                let tok: String = chars[s..i].iter().collect();
                let v: i64 = tok.parse().map_err(|_| ParseError {
                    column: s + 1,
                    kind: ParseErrorKind::MalformedToken(tok.clone()),
                })?;
                entries.push(v);
                columns.push(s + 1);
                start = None;
            }
            _ => {}
        }
    }
    DtCode::new(entries).map_err(|e| {
        Error::Parse(ParseError {
            column: columns[e.column - 1],
            kind: e.kind,
        })
    })
}

/// Builds the Gauss word whose visits `2i - 1` and `|a_i|` are crossing `i`,
/// then canonicalizes it.
pub fn dt_to_diagram(code: &DtCode) -> Diagram {
    let c = code.crossing_count();
    let mut symbols = vec![Symbol::over(1); 2 * c];
    for (i, &v) in code.entries().iter().enumerate() {
        let id = i as u32 + 1;
        let odd_pass = if v > 0 { Pass::Over } else { Pass::Under };
        symbols[2 * i] = Symbol::new(id, odd_pass);
        symbols[v.unsigned_abs() as usize - 1] = Symbol::new(id, odd_pass.flip());
    }
    Diagram::from_valid(symbols).canonicalize()
}

/// Reads the DT code of `diagram` with visit 1 just after `base`.
///
/// Fails with [`Error::DtParity`] when some crossing is visited twice at
/// labels of equal parity, which happens only for words that no planar
/// diagram realizes.
pub fn diagram_to_dt(diagram: &Diagram, base: BasePoint) -> Result<DtCode> {
    diagram.require_crossings()?;
    diagram.check_gap(base)?;
    let n = diagram.gap_count();
    let label = |pos: usize| (pos + n - base.0) % n + 1;
    let mut entries = vec![0i64; diagram.crossing_count()];
    for (pos, s) in diagram.symbols().iter().enumerate() {
        let own = label(pos);
        if own % 2 == 0 {
            continue;
        }
        let other = label(diagram.partner(pos));
        if other % 2 != 0 {
            return Err(Error::DtParity(s.crossing.0));
        }
        let sign = if s.pass == Pass::Over { 1 } else { -1 };
        entries[own / 2] = sign * other as i64;
    }
    Ok(DtCode::new(entries).expect("visit labels form a permutation"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::gauss::parse_gauss;
    use crate::warping::warping_degree;

    fn pair(d: &Diagram) -> (usize, usize) {
        let a = warping_degree(d);
        let b = warping_degree(&d.reverse());
        (a.min(b), a.max(b))
    }

    #[test]
    fn trefoil_from_dt() {
        let d = dt_to_diagram(&parse_dt("4 6 2").unwrap());
        // pairs (1,4) (3,6) (5,2) read off by hand: O1 U3 O2 U1 O3 U2
        assert_eq!(d, parse_gauss("O1U3O2U1O3U2").unwrap());
        assert_eq!(d.to_string(), "O1U2O3U1O2U3");
        assert!(d.is_alternating());
        assert_eq!(pair(&d), (1, 1));
    }

    #[test]
    fn figure_eight_from_dt() {
        let d = dt_to_diagram(&parse_dt("4, 6, 8, 2").unwrap());
        assert_eq!(d.crossing_count(), 4);
        assert!(d.is_alternating());
        assert_eq!(pair(&d), (1, 2));
    }

    #[test]
    fn smallest_code() {
        let d = dt_to_diagram(&parse_dt("[2]").unwrap());
        assert_eq!(d.to_string(), "O1U1");
        assert_eq!(diagram_to_dt(&d, BasePoint(0)).unwrap().to_string(), "2");
    }

    #[test]
    fn trefoil_to_dt() {
        let d = parse_gauss("O1U2O3U1O2U3").unwrap();
        assert_eq!(
            diagram_to_dt(&d, BasePoint(0)).unwrap().entries(),
            &[4, 6, 2]
        );
    }

    #[test]
    fn negative_entries_flip_passes() {
        let d = dt_to_diagram(&parse_dt("-4 -6 -2").unwrap());
        assert_eq!(d.to_string(), "U1O2U3O1U2O3");
        assert_eq!(
            diagram_to_dt(&d, BasePoint(0)).unwrap().entries(),
            &[-4, -6, -2]
        );
    }

    #[test]
    fn rejects_bad_codes() {
        let err = |t: &str| match parse_dt(t) {
            Err(Error::Parse(e)) => (e.column, e.kind),
            other => panic!("{other:?}"),
        };
        assert_eq!(err("4 0 2").1, ParseErrorKind::DtZero(0));
        assert_eq!(err("4 5 2"), (3, ParseErrorKind::DtOdd(5)));
        assert!(matches!(err("4 -4 2").1, ParseErrorKind::DtRepeated { .. }));
        assert!(matches!(
            err("4 8 2").1,
            ParseErrorKind::DtOutOfRange { .. }
        ));
        assert!(matches!(err("4 x 2").1, ParseErrorKind::MalformedToken(_)));
    }

    #[test]
    fn non_planar_word_has_no_dt_code() {
        let d = parse_gauss("O1O2U1U2").unwrap();
        assert!(matches!(
            diagram_to_dt(&d, BasePoint(0)),
            Err(Error::DtParity(1))
        ));
        assert!(diagram_to_dt(&Diagram::unknot(), BasePoint(0)).is_err());
    }

    #[test]
    fn mirror_sign_convention_keeps_pair() {
        let code = parse_dt("6 -14 16 12 4 -2 8 -10").unwrap();
        let a = dt_to_diagram(&code);
        let b = dt_to_diagram(&code.negate());
        assert_eq!(b, a.mirror());
        assert_eq!(pair(&a), pair(&b));
    }
}
