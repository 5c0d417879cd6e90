use crate::codecs::Report;
use crate::diagram::{BasePoint, Diagram, Pass};
use crate::error::{Error, Result};
use crate::warping::warping_profile;

/// Computes the [`Report`] and checks `d(D) + d(-D) + 1 <= c(D)`, with
/// equality exactly for alternating diagrams. A violation means the
/// implementation is wrong and is returned as [`Error::Inconsistency`].
pub fn theorem_check(diagram: &Diagram) -> Result<Report> {
    let report = Report::compute(diagram)?;
    if report.slack < 0 || (report.slack == 0) != report.alternating {
        return Err(Error::Inconsistency(format!(
            "{diagram}: c = {}, d = {}, d' = {}, alternating = {}",
            report.crossings, report.d, report.d_reversed, report.alternating
        )));
    }
    Ok(report)
}

/// Gaps sitting just before an over pass.
pub fn gaps_before_over(diagram: &Diagram) -> impl Iterator<Item = BasePoint> + '_ {
    diagram
        .symbols()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.pass == Pass::Over)
        .map(|(g, _)| BasePoint(g))
}

/// For an alternating diagram, whether every base point just before an over
/// pass realizes `d(D)`.
pub fn lemma26_check(diagram: &Diagram) -> Result<bool> {
    diagram.require_crossings()?;
    if !diagram.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let profile = warping_profile(diagram)?;
    let min = profile.min();
    Ok(gaps_before_over(diagram).all(|g| profile.at(g) == Some(min)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::{dt_to_diagram, parse_dt, parse_gauss};

    #[test]
    fn trefoil_is_tight() {
        let r = theorem_check(&parse_gauss("O1U2O3U1O2U3").unwrap()).unwrap();
        assert_eq!(r.slack, 0);
        assert!(r.alternating);
    }

    #[test]
    fn non_alternating_table_diagrams() {
        // 8_19 and 9_47 from the shipped table
        let r =
            theorem_check(&dt_to_diagram(&parse_dt("6 -14 16 12 4 -2 8 -10").unwrap())).unwrap();
        assert_eq!((r.crossings, r.d + r.d_reversed, r.slack), (8, 6, 1));
        let r = theorem_check(&dt_to_diagram(
            &parse_dt("-6 16 14 -18 4 2 8 10 12").unwrap(),
        ))
        .unwrap();
        assert_eq!((r.crossings, r.pair(), r.slack), (9, (2, 5), 1));
    }

    #[test]
    fn lemma26_examples() {
        for w in ["O1U2O3U1O2U3", "O1U2O3U4O2U1O4U3", "O1U1"] {
            assert!(lemma26_check(&parse_gauss(w).unwrap()).unwrap(), "{w}");
        }
        assert!(matches!(
            lemma26_check(&parse_gauss("O1O2U1U2").unwrap()),
            Err(Error::NotAlternating)
        ));
        assert!(lemma26_check(&Diagram::unknot()).is_err());
    }
}
