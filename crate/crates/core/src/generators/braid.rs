//! Closures of braid words and the standard torus-knot diagrams.

use crate::diagram::{Diagram, Pass, Symbol};
use crate::error::{Error, ParseError, ParseErrorKind, Result};

/// A braid on `strands` strands. Letter `i > 0` is the generator `σ_i`
/// crossing positions `i` and `i + 1`; `-i` is its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        for (i, &l) in letters.iter().enumerate() {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(ParseError {
                    column: i + 1,
                    kind: ParseErrorKind::BraidLetter {
                        letter: l as i64,
                        max: strands - 1,
                    },
                }
                .into());
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// `(σ_1 σ_2 ... σ_{p-1})^q` on `p` strands.
    pub fn torus(p: usize, q: usize) -> Result<Self> {
        let period: Vec<i32> = (1..p as i32).collect();
        BraidWord::new(p, period.repeat(q))
    }

    /// Parses `"p:q"` as a torus braid, otherwise a whitespace or comma
    /// separated list of signed generator indices. Without `strands`, the
    /// smallest strand count that fits the letters is used.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        if let Some((p, q)) = text.split_once(':') {
            let num = |s: &str, column: usize| {
                s.trim().parse::<u32>().map_err(|_| {
                    Error::from(ParseError {
                        column,
                        kind: ParseErrorKind::MalformedToken(s.trim().to_string()),
                    })
                })
            };
            let p = num(p, 1)?;
            let q = num(q, text.find(':').unwrap_or(0) + 2)?;
            validate_torus(p, q)?;
            return BraidWord::torus(p as usize, q as usize);
        }
        let mut letters = Vec::new();
        for (column, tok) in tokens(text) {
            let l: i32 = tok.parse().map_err(|_| {
                Error::from(ParseError {
                    column,
                    kind: ParseErrorKind::MalformedToken(tok.to_string()),
                })
            })?;
            letters.push(l);
        }
        let fit = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max();
        BraidWord::new(strands.or(fit).unwrap_or(2), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Where each top position ends up at the bottom of the braid.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (bottom, &top) in at.iter().enumerate() {
            perm[top] = bottom;
        }
        perm
    }

    /// Cycle lengths of the closure permutation, starting from position 1.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = Vec::new();
        for start in 0..self.strands {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            if len > 0 {
                cycles.push(len);
            }
        }
        cycles
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text
        .char_indices()
        .chain(std::iter::once((text.len(), ' ')))
    {
        let sep = c.is_whitespace() || c == ',';
        match (start, sep) {
            (None, false) => start = Some(i),
            (Some(s), true) => {
                out.push((text[..s].chars().count() + 1, &text[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out.into_iter()
}

/// Traverses the closure of `word` from the top of strand 1.
///
/// Each letter becomes one crossing, numbered by first visit. In `σ_i` the
/// strand moving from position `i` to `i + 1` passes over; in `σ_i^{-1}` it
/// passes under.
pub fn braid_closure(word: &BraidWord) -> Result<Diagram> {
    let cycles = word.cycle_lengths();
    if cycles.len() != 1 {
        return Err(Error::MultiComponent { cycles });
    }
    let mut symbols = Vec::with_capacity(2 * word.letters.len());
    let mut pos = 0usize;
    for _ in 0..word.strands {
        for (k, &l) in word.letters.iter().enumerate() {
            let left = l.unsigned_abs() as usize - 1;
            let rising = if l > 0 { Pass::Over } else { Pass::Under };
            if pos == left {
                symbols.push(Symbol::new(k as u32 + 1, rising));
                pos = left + 1;
            } else if pos == left + 1 {
                symbols.push(Symbol::new(k as u32 + 1, rising.flip()));
                pos = left;
            }
        }
    }
    debug_assert_eq!(pos, 0);
    Ok(Diagram::from_valid(symbols).canonicalize())
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn validate_torus(p: u32, q: u32) -> Result<()> {
    let bad = |reason| Err(Error::InvalidTorus { p, q, reason });
    if p == 0 {
        bad("p must be positive")
    } else if p >= q {
        bad("need p < q")
    } else if gcd(p, q) != 1 {
        bad("p,q must be coprime")
    } else {
        Ok(())
    }
}

/// The standard diagram of the `(p, q)` torus knot: the closure of
/// `(σ_1 ... σ_{p-1})^q`, with `(p - 1) q` crossings. `p = 1` gives the
/// crossingless diagram.
pub fn torus_diagram(p: u32, q: u32) -> Result<Diagram> {
    validate_torus(p, q)?;
    if p == 1 {
        return Ok(Diagram::unknot());
    }
    braid_closure(&BraidWord::torus(p as usize, q as usize)?)
}
