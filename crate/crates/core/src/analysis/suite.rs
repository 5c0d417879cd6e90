//! Exhaustive verification of the warping-degree identities over every
//! canonical Gauss word up to a crossing bound.

use std::fmt;
use std::thread;

use serde::Serialize;

use crate::analysis::theorem::lemma26_check;
use crate::diagram::{BasePoint, Diagram, Pass};
use crate::error::{Error, Result};
use crate::generators::{enumerate_words, WordEnumerator};
use crate::warping::{arc_labels, is_warping, warping_degree, warping_degree_at, warping_profile};

/// Counterexamples kept in a report; counting continues past this.
pub const MAX_COUNTEREXAMPLES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// `d(D_a) + d(-D_a) = c(D)` at every gap.
    Complement,
    /// Cutting numbers are odd, positive exactly on warping crossings, and
    /// negate under reversal.
    SignCriterion,
    /// Moving the base point past an over pass adds one, past an under pass
    /// subtracts one; the stepped profile equals direct recounts.
    StepLaw,
    /// `max_a d(D_a) - min_a d(D_a) >= 1`, with equality iff alternating.
    SpanBound,
    /// `d(D) + d(-D) + 1 <= c(D)`, with equality iff alternating.
    MainInequality,
    /// Alternating words attain `d(D)` just before every over pass.
    AlternatingMinimizer,
    /// `d(D*) = d(-D)`.
    MirrorIdentity,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::Complement,
        Property::SignCriterion,
        Property::StepLaw,
        Property::SpanBound,
        Property::MainInequality,
        Property::AlternatingMinimizer,
        Property::MirrorIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Complement => "complement",
            Property::SignCriterion => "sign-criterion",
            Property::StepLaw => "step-law",
            Property::SpanBound => "span-bound",
            Property::MainInequality => "main-inequality",
            Property::AlternatingMinimizer => "alternating-minimizer",
            Property::MirrorIdentity => "mirror-identity",
        }
    }

    fn index(self) -> usize {
        Property::ALL.iter().position(|&p| p == self).unwrap()
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub property: Property,
    /// Individual instances checked (gaps, gap-crossing pairs, or words).
    pub checked: u64,
    pub failed: u64,
}

/// A failing word, printed as canonical Gauss text.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub crossings: usize,
    /// Position in the enumeration of `crossings`-crossing words.
    pub rank: u64,
    pub property: Property,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub max_crossings: usize,
    pub words_checked: u64,
    /// `(n, words)` for each crossing count.
    pub words_by_crossings: Vec<(usize, u64)>,
    pub properties: Vec<PropertyTally>,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    fn empty(max_crossings: usize) -> Self {
        VerificationReport {
            max_crossings,
            words_checked: 0,
            words_by_crossings: (1..=max_crossings).map(|n| (n, 0)).collect(),
            properties: Property::ALL
                .iter()
                .map(|&property| PropertyTally {
                    property,
                    checked: 0,
                    failed: 0,
                })
                .collect(),
            counterexamples: Vec::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.properties.iter().all(|t| t.failed == 0)
    }

    pub fn tally(&self, property: Property) -> PropertyTally {
        self.properties[property.index()]
    }

    fn merge(&mut self, other: VerificationReport) {
        self.words_checked += other.words_checked;
        for (mine, theirs) in self
            .words_by_crossings
            .iter_mut()
            .zip(other.words_by_crossings)
        {
            mine.1 += theirs.1;
        }
        for (mine, theirs) in self.properties.iter_mut().zip(other.properties) {
            mine.checked += theirs.checked;
            mine.failed += theirs.failed;
        }
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort();
        self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
    }

    fn record(&mut self, property: Property, ok: bool, instances: u64) -> bool {
        let t = &mut self.properties[property.index()];
        t.checked += instances;
        if !ok {
            t.failed += 1;
        }
        ok
    }
}

/// Runs every [`Property`] family on one word, adding to `report`.
/// Returns the properties that failed.
pub fn check_word(diagram: &Diagram, report: &mut VerificationReport) -> Vec<Property> {
    let mut failed = Vec::new();
    let c = diagram.crossing_count();
    let n = diagram.gap_count();
    if c == 0 {
        return failed;
    }
    let reversed = diagram.reverse();
    let rev_gap = |g: usize| (n - g) % n;
    let direct: Vec<usize> = (0..n)
        .map(|g| warping_degree_at(diagram, BasePoint(g)).unwrap())
        .collect();
    let direct_rev: Vec<usize> = (0..n)
        .map(|g| warping_degree_at(&reversed, BasePoint(g)).unwrap())
        .collect();
    let mut check = |p: Property, ok: bool, instances: usize| {
        if !report.record(p, ok, instances as u64) {
            failed.push(p);
        }
    };

    let complement = (0..n).all(|g| direct[g] + direct_rev[rev_gap(g)] == c);
    check(Property::Complement, complement, n);

    let sign = (0..n).all(|g| {
        let base = BasePoint(g);
        let labels = arc_labels(diagram, base).unwrap();
        let labels_rev = arc_labels(&reversed, BasePoint(rev_gap(g))).unwrap();
        labels.triples().iter().all(|&(id, t)| {
            let cut = 2 * t.over as i64 - t.under_in as i64 - t.under_out as i64;
            let Some(r) = labels_rev.triple(id) else {
                return false;
            };
            let cut_rev = 2 * r.over as i64 - r.under_in as i64 - r.under_out as i64;
            let warping = is_warping(diagram, base, id).unwrap();
            cut % 2 != 0 && (cut > 0) == warping && cut_rev == -cut
        })
    });
    check(Property::SignCriterion, sign, n * c);

    let steps = diagram.symbols().iter().enumerate().all(|(g, s)| {
        let delta = direct[(g + 1) % n] as i64 - direct[g] as i64;
        delta == if s.pass == Pass::Over { 1 } else { -1 }
    });
    let profile_ok = warping_profile(diagram)
        .map(|p| p.values() == &direct[..])
        .unwrap_or(false);
    check(Property::StepLaw, steps && profile_ok, n);

    let alternating = diagram.is_alternating();
    let min = *direct.iter().min().unwrap();
    let max = *direct.iter().max().unwrap();
    let span = max - min;
    check(
        Property::SpanBound,
        span >= 1 && (span == 1) == alternating,
        1,
    );

    let d = min;
    let d_rev = *direct_rev.iter().min().unwrap();
    let main = d + d_rev < c && (d + d_rev + 1 == c) == alternating;
    check(Property::MainInequality, main, 1);

    if alternating {
        check(
            Property::AlternatingMinimizer,
            lemma26_check(diagram).unwrap_or(false),
            1,
        );
    }

    check(
        Property::MirrorIdentity,
        warping_degree(&diagram.mirror()) == d_rev,
        1,
    );
    failed
}

fn run_worker(max_crossings: usize, worker: usize, workers: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::empty(max_crossings);
    for n in 1..=max_crossings {
        let words: WordEnumerator = enumerate_words(n)?;
        for (i, word) in words.partition(worker, workers).enumerate() {
            let rank = (worker + i * workers) as u64;
            report.words_checked += 1;
            report.words_by_crossings[n - 1].1 += 1;
            for property in check_word(&word, &mut report) {
                if report.counterexamples.len() < MAX_COUNTEREXAMPLES {
                    report.counterexamples.push(Counterexample {
                        crossings: n,
                        rank,
                        property,
                        word: word.to_string(),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Checks every property family on all canonical words with
/// `1..=max_crossings` crossings, split across `jobs` threads. The result
/// does not depend on `jobs`.
pub fn lemma_suite(max_crossings: usize, jobs: usize) -> Result<VerificationReport> {
    if jobs == 0 {
        return Err(Error::InvalidInput("need at least one job".into()));
    }
    if max_crossings == 0 {
        return Err(Error::Degenerate);
    }
    // fail fast on the cap before spawning anything
    enumerate_words(max_crossings)?;
    let parts: Vec<Result<VerificationReport>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| scope.spawn(move || run_worker(max_crossings, w, jobs)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification worker panicked"))
            .collect()
    });
    let mut report = VerificationReport::empty(max_crossings);
    for part in parts {
        report.merge(part?);
    }
    Ok(report)
}
