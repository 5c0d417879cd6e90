//! Warping degrees, warping profiles, arc labels and cutting numbers.
//!
//! Walking along the diagram from a base point, a crossing is *warping* when
//! its under pass is met before its over pass. `d(D_a)` counts warping
//! crossings, and `d(D)` is the minimum of `d(D_a)` over all base points.

use crate::diagram::{BasePoint, CrossingId, Diagram, Pass};
use crate::error::{Error, Result};

fn gap_ok(diagram: &Diagram, base: BasePoint) -> Result<()> {
    if diagram.crossing_count() == 0 && base.0 == 0 {
        Ok(())
    } else {
        diagram.check_gap(base)
    }
}

/// `d(D_a)`: the number of warping crossings seen from `base`.
pub fn warping_degree_at(diagram: &Diagram, base: BasePoint) -> Result<usize> {
    gap_ok(diagram, base)?;
    Ok(count_from(diagram, base.0))
}

fn count_from(diagram: &Diagram, gap: usize) -> usize {
    let n = diagram.gap_count();
    let offset = |i: usize| (i + n - gap) % n;
    diagram
        .symbols()
        .iter()
        .enumerate()
        .filter(|&(i, s)| s.pass == Pass::Under && offset(diagram.partner(i)) > offset(i))
        .count()
}

/// Whether `crossing` is a warping crossing of `D_a`.
pub fn is_warping(diagram: &Diagram, base: BasePoint, crossing: CrossingId) -> Result<bool> {
    diagram.check_gap(base)?;
    let (over, under) = diagram.positions_of(crossing)?;
    let n = diagram.gap_count();
    Ok((under + n - base.0) % n < (over + n - base.0) % n)
}

/// `d(D_a)` for every gap `a = 0..2c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarpProfile {
    values: Vec<usize>,
}

impl WarpProfile {
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, base: BasePoint) -> Option<usize> {
        self.values.get(base.0).copied()
    }

    pub fn min(&self) -> usize {
        self.values.iter().copied().min().unwrap_or(0)
    }

    pub fn max(&self) -> usize {
        self.values.iter().copied().max().unwrap_or(0)
    }

    pub fn span(&self) -> usize {
        self.max() - self.min()
    }

    /// Gaps whose value equals the minimum.
    pub fn minimizers(&self) -> impl Iterator<Item = BasePoint> + '_ {
        let m = self.min();
        self.values
            .iter()
            .enumerate()
            .filter(move |&(_, &v)| v == m)
            .map(|(g, _)| BasePoint(g))
    }
}

/// Computes `d(D_a)` directly at gap 0, then walks the remaining gaps with
/// the step law: passing an over pass raises the count by one, passing an
/// under pass lowers it by one.
pub fn warping_profile(diagram: &Diagram) -> Result<WarpProfile> {
    diagram.require_crossings()?;
    let mut values = Vec::with_capacity(diagram.gap_count());
    let mut current = count_from(diagram, 0) as isize;
    for s in diagram.symbols() {
        values.push(current as usize);
        current += match s.pass {
            Pass::Over => 1,
            Pass::Under => -1,
        };
    }
    debug_assert_eq!(current as usize, values[0]);
    debug_assert!(values
        .iter()
        .enumerate()
        .all(|(g, &v)| v == count_from(diagram, g)));
    Ok(WarpProfile { values })
}

/// `d(D)`; zero for the crossingless diagram.
pub fn warping_degree(diagram: &Diagram) -> usize {
    match warping_profile(diagram) {
        Ok(p) => p.min(),
        Err(_) => 0,
    }
}

/// `max_a d(D_a) - min_a d(D_a)`.
pub fn span(diagram: &Diagram) -> Result<usize> {
    Ok(warping_profile(diagram)?.span())
}

/// Arc indices of a crossing: `over` is the arc passing over it, `under_in`
/// the arc ending at its under pass and `under_out = under_in + 1` the arc
/// leaving it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcTriple {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
}

/// The diagram cut at the base point and at every under pass, leaving `c + 1`
/// arcs numbered from 1 along the orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcLabels {
    arc_of_symbol: Vec<usize>,
    triples: Vec<(CrossingId, ArcTriple)>,
}

impl ArcLabels {
    /// Arc containing each symbol, indexed by word position.
    pub fn arc_of_symbol(&self) -> &[usize] {
        &self.arc_of_symbol
    }

    /// Per-crossing triples, sorted by crossing id.
    pub fn triples(&self) -> &[(CrossingId, ArcTriple)] {
        &self.triples
    }

    pub fn triple(&self, crossing: CrossingId) -> Option<ArcTriple> {
        self.triples
            .binary_search_by_key(&crossing, |&(id, _)| id)
            .ok()
            .map(|i| self.triples[i].1)
    }

    pub fn arc_count(&self) -> usize {
        self.triples.len() + 1
    }
}

pub fn arc_labels(diagram: &Diagram, base: BasePoint) -> Result<ArcLabels> {
    diagram.require_crossings()?;
    diagram.check_gap(base)?;
    let n = diagram.gap_count();
    let symbols = diagram.symbols();
    let mut arc_of_symbol = vec![0; n];
    let mut arc = 1;
    for k in 0..n {
        let i = (base.0 + k) % n;
        arc_of_symbol[i] = arc;
        if symbols[i].pass == Pass::Under {
            arc += 1;
        }
    }
    let mut triples: Vec<_> = symbols
        .iter()
        .enumerate()
        .filter(|(_, s)| s.pass == Pass::Over)
        .map(|(i, s)| {
            let under_in = arc_of_symbol[diagram.partner(i)];
            (
                s.crossing,
                ArcTriple {
                    over: arc_of_symbol[i],
                    under_in,
                    under_out: under_in + 1,
                },
            )
        })
        .collect();
    triples.sort_unstable_by_key(|&(id, _)| id);
    Ok(ArcLabels {
        arc_of_symbol,
        triples,
    })
}

/// `cut(p) = 2α - β - γ` for the arc triple of `crossing`. Always odd;
/// positive exactly when the crossing is warping.
pub fn cutting_number(diagram: &Diagram, base: BasePoint, crossing: CrossingId) -> Result<i64> {
    let labels = arc_labels(diagram, base)?;
    let t = labels
        .triple(crossing)
        .ok_or(Error::UnknownCrossing(crossing.0))?;
    Ok(2 * t.over as i64 - t.under_in as i64 - t.under_out as i64)
}
