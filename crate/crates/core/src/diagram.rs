//! Oriented knot diagrams as cyclic Gauss words.
//!
//! A diagram with `c` crossings is a cyclic word of `2c` symbols, listed in
//! traversal order. Each crossing is passed twice: once over, once under.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Whether the strand passes over or under at a symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pass {
    Over,
    Under,
}

impl Pass {
    pub fn flip(self) -> Pass {
        match self {
            Pass::Over => Pass::Under,
            Pass::Under => Pass::Over,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pass::Over => 'O',
            Pass::Under => 'U',
        }
    }

    pub(crate) fn name(self) -> &'static str {
        match self {
            Pass::Over => "Over",
            Pass::Under => "Under",
        }
    }
}

/// Label of a crossing. Any positive integer is allowed as input;
/// [`Diagram::canonicalize`] renumbers to `1..=c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingId(pub u32);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub crossing: CrossingId,
    pub pass: Pass,
}

impl Symbol {
    pub fn new(crossing: u32, pass: Pass) -> Self {
        Symbol {
            crossing: CrossingId(crossing),
            pass,
        }
    }

    pub fn over(crossing: u32) -> Self {
        Symbol::new(crossing, Pass::Over)
    }

    pub fn under(crossing: u32) -> Self {
        Symbol::new(crossing, Pass::Under)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.pass.letter(), self.crossing)
    }
}

/// A base point, placed in the gap just before symbol `gap`.
///
/// `d(D_a)` is constant along each strand segment between two passes, so the
/// `2c` gaps represent every possible base point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasePoint(pub usize);

/// An oriented knot diagram, stored as its Gauss word read from gap 0.
///
/// Equality is literal; compare [`Diagram::canonicalize`]d words to ignore
/// crossing names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    symbols: Vec<Symbol>,
    /// `partner[i]` is the position of the other pass through the crossing at `i`.
    partner: Vec<usize>,
}

impl Diagram {
    /// Validates a Gauss word: every crossing must occur exactly twice, once
    /// over and once under.
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        let mut seen: HashMap<CrossingId, (usize, Pass)> = HashMap::new();
        let mut partner = vec![usize::MAX; symbols.len()];
        for (i, s) in symbols.iter().enumerate() {
            if s.crossing.0 == 0 {
                return Err(Error::InvalidDiagram("crossing id 0".into()));
            }
            match seen.get(&s.crossing) {
                None => {
                    seen.insert(s.crossing, (i, s.pass));
                }
                Some(&(j, pass)) => {
                    if partner[j] != usize::MAX {
                        return Err(Error::InvalidDiagram(format!(
                            "crossing {} appears more than twice",
                            s.crossing
                        )));
                    }
                    if pass == s.pass {
                        return Err(Error::InvalidDiagram(format!(
                            "crossing {} has two {} passes",
                            s.crossing,
                            pass.name()
                        )));
                    }
                    partner[i] = j;
                    partner[j] = i;
                }
            }
        }
        if let Some(i) = partner.iter().position(|&p| p == usize::MAX) {
            let s = symbols[i];
            return Err(Error::InvalidDiagram(format!(
                "crossing {} missing {} pass",
                s.crossing,
                s.pass.flip().name()
            )));
        }
        Ok(Diagram { symbols, partner })
    }

    /// The crossingless diagram.
    pub fn unknot() -> Self {
        Diagram {
            symbols: Vec::new(),
            partner: Vec::new(),
        }
    }

    /// Builds a word whose validity the caller has already established.
    pub(crate) fn from_valid(symbols: Vec<Symbol>) -> Self {
        let d = Diagram::new(symbols);
        debug_assert!(d.is_ok(), "{d:?}");
        d.expect("caller guarantees a valid Gauss word")
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// `c(D)`.
    pub fn crossing_count(&self) -> usize {
        self.symbols.len() / 2
    }

    /// Number of base-point gaps, `2c`.
    pub fn gap_count(&self) -> usize {
        self.symbols.len()
    }

    pub(crate) fn partner(&self, position: usize) -> usize {
        self.partner[position]
    }

    pub(crate) fn check_gap(&self, base: BasePoint) -> Result<()> {
        if base.0 < self.gap_count() {
            Ok(())
        } else {
            Err(Error::GapOutOfRange {
                gap: base.0,
                gaps: self.gap_count(),
            })
        }
    }

    pub(crate) fn require_crossings(&self) -> Result<()> {
        if self.symbols.is_empty() {
            Err(Error::Degenerate)
        } else {
            Ok(())
        }
    }

    /// Positions of the over and under pass of `crossing`.
    pub fn positions_of(&self, crossing: CrossingId) -> Result<(usize, usize)> {
        let i = self
            .symbols
            .iter()
            .position(|s| s.crossing == crossing)
            .ok_or(Error::UnknownCrossing(crossing.0))?;
        let j = self.partner[i];
        Ok(match self.symbols[i].pass {
            Pass::Over => (i, j),
            Pass::Under => (j, i),
        })
    }

    /// Crossing ids in order of first occurrence from gap 0.
    pub fn crossings(&self) -> impl Iterator<Item = CrossingId> + '_ {
        self.symbols
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.partner[i] > i)
            .map(|(_, s)| s.crossing)
    }

    /// `-D`: the same diagram traversed backwards. Gap `g` of `self`
    /// corresponds to gap `(2c - g) mod 2c` of the result.
    pub fn reverse(&self) -> Diagram {
        let n = self.symbols.len();
        let symbols = self.symbols.iter().rev().copied().collect();
        let partner = self.partner.iter().rev().map(|&p| n - 1 - p).collect();
        Diagram { symbols, partner }
    }

    /// `D*`: every over pass becomes an under pass and vice versa.
    pub fn mirror(&self) -> Diagram {
        Diagram {
            symbols: self
                .symbols
                .iter()
                .map(|s| Symbol {
                    crossing: s.crossing,
                    pass: s.pass.flip(),
                })
                .collect(),
            partner: self.partner.clone(),
        }
    }

    /// Relabels crossings `1, 2, ...` in order of first occurrence.
    pub fn canonicalize(&self) -> Diagram {
        let mut names: HashMap<CrossingId, u32> = HashMap::new();
        let symbols = self
            .symbols
            .iter()
            .map(|s| {
                let next = names.len() as u32 + 1;
                let id = *names.entry(s.crossing).or_insert(next);
                Symbol::new(id, s.pass)
            })
            .collect();
        Diagram {
            symbols,
            partner: self.partner.clone(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.crossings()
            .enumerate()
            .all(|(i, id)| id.0 as usize == i + 1)
    }

    /// Word read starting from `base`, still describing the same diagram.
    pub fn rotate(&self, base: BasePoint) -> Result<Diagram> {
        if self.symbols.is_empty() && base.0 == 0 {
            return Ok(self.clone());
        }
        self.check_gap(base)?;
        let mut symbols = self.symbols.clone();
        symbols.rotate_left(base.0);
        Ok(Diagram::from_valid(symbols))
    }

    /// True iff over and under passes strictly alternate around the cycle.
    /// The crossingless word counts as alternating.
    pub fn is_alternating(&self) -> bool {
        let n = self.symbols.len();
        (0..n).all(|i| self.symbols[i].pass != self.symbols[(i + 1) % n].pass)
    }
}

/// Formats as compact Gauss text, e.g. `O1U2O3U1O2U3`.
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
