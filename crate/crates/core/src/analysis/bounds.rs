//! Bounds on `e(K)`, the minimum of `d(D) + d(-D)` over minimal-crossing
//! diagrams of a knot, and the torus-knot values.

use serde::Serialize;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::generators::{torus_diagram, validate_torus};
use crate::warping::warping_degree;

/// `min d(D) + d(-D)` over the given diagrams. When they are all the
/// minimal-crossing diagrams of a knot this is `e(K)`; otherwise it is an
/// upper bound.
pub fn e_upper_bound(diagrams: &[Diagram]) -> Result<usize> {
    let first = diagrams
        .first()
        .ok_or_else(|| Error::InvalidInput("no diagrams given".into()))?;
    let c = first.crossing_count();
    if let Some(d) = diagrams.iter().find(|d| d.crossing_count() != c) {
        return Err(Error::InvalidInput(format!(
            "mixed crossing counts: {c} and {}",
            d.crossing_count()
        )));
    }
    Ok(diagrams
        .iter()
        .map(|d| warping_degree(d) + warping_degree(&d.reverse()))
        .min()
        .expect("nonempty"))
}

/// `(e, c - e)` for the torus knot `T(p, q)`: `e = (p - 1)(q - 1)` and the
/// gap is `p - 1`, using `c(T(p,q)) = (p - 1) q`. Cross-checked against the
/// standard diagram, which must attain `e`.
pub fn e_torus(p: u32, q: u32) -> Result<(u64, u64)> {
    validate_torus(p, q)?;
    let (p64, q64) = (p as u64, q as u64);
    let e = (p64 - 1) * (q64 - 1);
    let c = (p64 - 1) * q64;
    let bound = e_upper_bound(&[torus_diagram(p, q)?])? as u64;
    if bound != e {
        return Err(Error::Inconsistency(format!(
            "standard diagram of T({p},{q}) gives d + d' = {bound}, expected {e}"
        )));
    }
    Ok((e, c - e))
}

/// Computed and predicted warping data for the standard `T(p, q)` diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TorusReport {
    pub p: u32,
    pub q: u32,
    pub crossings: usize,
    pub d: usize,
    pub d_reversed: usize,
    /// `(p - 1)(q - 1) / 2`.
    pub predicted_d: usize,
    /// `c - d - d'`, predicted to be `p - 1`.
    pub gap: i64,
    pub holds: bool,
}

pub fn torus_report(p: u32, q: u32) -> Result<TorusReport> {
    let diagram = torus_diagram(p, q)?;
    let crossings = diagram.crossing_count();
    let d = warping_degree(&diagram);
    let d_reversed = warping_degree(&diagram.reverse());
    let predicted_d = ((p - 1) * (q - 1) / 2) as usize;
    let gap = crossings as i64 - d as i64 - d_reversed as i64;
    Ok(TorusReport {
        p,
        q,
        crossings,
        d,
        d_reversed,
        predicted_d,
        gap,
        holds: d == predicted_d && d_reversed == predicted_d && gap == p as i64 - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::parse_gauss;

    #[test]
    fn upper_bound_examples() {
        let trefoil = parse_gauss("O1U2O3U1O2U3").unwrap();
        assert_eq!(e_upper_bound(std::slice::from_ref(&trefoil)).unwrap(), 2);
        assert_eq!(e_upper_bound(&[torus_diagram(3, 4).unwrap()]).unwrap(), 6);
        let fig8 = parse_gauss("O1U2O3U4O2U1O4U3").unwrap();
        assert_eq!(e_upper_bound(std::slice::from_ref(&fig8)).unwrap(), 3);
        assert!(e_upper_bound(&[]).is_err());
        assert!(e_upper_bound(&[trefoil, fig8]).is_err());
    }

    #[test]
    fn torus_e_values() {
        assert_eq!(e_torus(2, 3).unwrap(), (2, 1));
        assert_eq!(e_torus(3, 5).unwrap(), (8, 2));
        for n in 1..=5 {
            assert_eq!(e_torus(n + 1, n + 2).unwrap().1, n as u64);
        }
        assert!(e_torus(4, 6).is_err());
    }

    #[test]
    fn torus_report_three_four() {
        let r = torus_report(3, 4).unwrap();
        assert_eq!((r.crossings, r.d, r.d_reversed, r.gap), (8, 3, 3, 2));
        assert!(r.holds);
    }
}
