//! Exhaustive and random abstract Gauss words.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Diagram, Pass, Symbol};
use crate::error::{Error, Result};

/// Default upper bound on the crossing count accepted by [`enumerate_words`].
pub const DEFAULT_ENUMERATION_CAP: usize = 6;

/// Number of canonical words with `n` crossings: `(2n - 1)!! * 2^n`.
pub fn canonical_word_count(n: usize) -> u64 {
    (1..=n as u64).map(|k| (2 * k - 1) * 2).product()
}

/// Streams every canonical word with `n` crossings exactly once, in
/// lexicographic order of `(crossing, pass)` symbols with `Over < Under`.
#[derive(Debug, Clone)]
pub struct WordEnumerator {
    n: usize,
    word: Vec<Symbol>,
    /// Option index taken at each depth.
    choice: Vec<usize>,
    /// Whether the symbol at each depth opened its crossing.
    opened: Vec<bool>,
    /// First pass of each crossing that is open (seen once).
    open: Vec<Option<Pass>>,
    open_count: usize,
    next_id: u32,
    started: bool,
    done: bool,
}

impl WordEnumerator {
    fn new(n: usize) -> Self {
        WordEnumerator {
            n,
            word: Vec::with_capacity(2 * n),
            choice: Vec::with_capacity(2 * n),
            opened: Vec::with_capacity(2 * n),
            open: vec![None; n + 1],
            open_count: 0,
            next_id: 1,
            started: false,
            done: false,
        }
    }

    /// Every `workers`-th word starting at rank `worker`.
    pub fn partition(self, worker: usize, workers: usize) -> impl Iterator<Item = Diagram> {
        assert!(workers > 0 && worker < workers);
        self.skip(worker).step_by(workers)
    }

    /// The `k`-th option at the current depth, if any. Closing an open
    /// crossing sorts before opening the next one.
    fn option(&self, k: usize) -> Option<Symbol> {
        let mut k = k;
        for id in 1..self.next_id {
            if let Some(p) = self.open[id as usize] {
                if k == 0 {
                    return Some(Symbol::new(id, p.flip()));
                }
                k -= 1;
            }
        }
        let remaining = 2 * self.n - self.word.len();
        if self.next_id as usize <= self.n && self.open_count + 2 <= remaining {
            return match k {
                0 => Some(Symbol::over(self.next_id)),
                1 => Some(Symbol::under(self.next_id)),
                _ => None,
            };
        }
        None
    }

    fn push(&mut self, k: usize, s: Symbol) {
        let id = s.crossing.0 as usize;
        let opens = self.open[id].is_none();
        if opens {
            self.open[id] = Some(s.pass);
            self.open_count += 1;
            self.next_id += 1;
        } else {
            self.open[id] = None;
            self.open_count -= 1;
        }
        self.word.push(s);
        self.choice.push(k);
        self.opened.push(opens);
    }

    fn pop(&mut self) -> Option<usize> {
        let s = self.word.pop()?;
        let k = self.choice.pop()?;
        let id = s.crossing.0 as usize;
        if self.opened.pop()? {
            self.open[id] = None;
            self.open_count -= 1;
            self.next_id -= 1;
        } else {
            self.open[id] = Some(s.pass.flip());
            self.open_count += 1;
        }
        Some(k)
    }

    /// Extends the prefix with first options until the word is full.
    fn descend(&mut self) {
        while self.word.len() < 2 * self.n {
            let s = self.option(0).expect("a partial word always extends");
            self.push(0, s);
        }
    }
}

impl Iterator for WordEnumerator {
    type Item = Diagram;

    fn next(&mut self) -> Option<Diagram> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
        } else {
            loop {
                let Some(k) = self.pop() else {
                    self.done = true;
                    return None;
                };
                if let Some(s) = self.option(k + 1) {
                    self.push(k + 1, s);
                    break;
                }
            }
            self.descend();
        }
        if self.n == 0 {
            self.done = true;
        }
        Some(Diagram::from_valid(self.word.clone()))
    }
}

/// All canonical words with `n` crossings, refusing `n` above
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_words(n: usize) -> Result<WordEnumerator> {
    enumerate_words_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_words_capped(n: usize, cap: usize) -> Result<WordEnumerator> {
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    if n == 0 {
        return Err(Error::Degenerate);
    }
    Ok(WordEnumerator::new(n))
}

/// A uniformly shuffled word on `n` crossings, canonicalized. Deterministic
/// for a given seed.
pub fn random_word(n: usize, seed: u64) -> Result<Diagram> {
    if n == 0 {
        return Err(Error::Degenerate);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut symbols: Vec<Symbol> = (1..=n as u32)
        .flat_map(|id| [Symbol::over(id), Symbol::under(id)])
        .collect();
    symbols.shuffle(&mut rng);
    Ok(Diagram::from_valid(symbols).canonicalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Every permutation of the 2n labeled symbols, canonicalized and deduped.
    fn brute_force(n: usize) -> HashSet<String> {
        fn permute(rest: &mut Vec<Symbol>, acc: &mut Vec<Symbol>, out: &mut HashSet<String>) {
            if rest.is_empty() {
                let d = Diagram::new(acc.clone()).unwrap();
                out.insert(d.canonicalize().to_string());
                return;
            }
            for i in 0..rest.len() {
                let s = rest.remove(i);
                acc.push(s);
                permute(rest, acc, out);
                acc.pop();
                rest.insert(i, s);
            }
        }
        let mut symbols: Vec<Symbol> = (1..=n as u32)
            .flat_map(|id| [Symbol::over(id), Symbol::under(id)])
            .collect();
        let mut out = HashSet::new();
        permute(&mut symbols, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn one_crossing_words() {
        let words: Vec<_> = enumerate_words(1).unwrap().map(|d| d.to_string()).collect();
        assert_eq!(words, vec!["O1U1", "U1O1"]);
    }

    #[test]
    fn matches_brute_force_oracle() {
        for n in 1..=4 {
            let words: Vec<_> = enumerate_words(n).unwrap().map(|d| d.to_string()).collect();
            let set: HashSet<_> = words.iter().cloned().collect();
            assert_eq!(set.len(), words.len(), "duplicates at n = {n}");
            assert_eq!(set, brute_force(n), "n = {n}");
            assert_eq!(words.len() as u64, canonical_word_count(n));
        }
        assert_eq!(brute_force(2).len(), 12);
    }

    #[test]
    fn stream_is_sorted_and_canonical() {
        let words: Vec<Vec<Symbol>> = enumerate_words(3)
            .unwrap()
            .inspect(|d| assert!(d.is_canonical()))
            .map(|d| d.symbols().to_vec())
            .collect();
        assert!(words.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn counts() {
        assert_eq!(canonical_word_count(1), 2);
        assert_eq!(canonical_word_count(2), 12);
        assert_eq!(canonical_word_count(6), 665_280);
        assert_eq!(enumerate_words(5).unwrap().count(), 30_240);
    }

    #[test]
    fn partitions_cover_the_stream() {
        let all: Vec<_> = enumerate_words(3).unwrap().collect();
        let mut merged = Vec::new();
        for w in 0..4 {
            merged.extend(enumerate_words(3).unwrap().partition(w, 4));
        }
        assert_eq!(merged.len(), all.len());
        let a: HashSet<_> = all.iter().map(|d| d.to_string()).collect();
        let b: HashSet<_> = merged.iter().map(|d| d.to_string()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_words(7),
            Err(Error::EnumerationCap { n: 7, cap: 6 })
        ));
        assert!(enumerate_words_capped(7, 7).is_ok());
        assert!(enumerate_words(0).is_err());
    }

    #[test]
    fn random_words_are_reproducible() {
        assert_eq!(random_word(3, 42).unwrap(), random_word(3, 42).unwrap());
        for seed in 0..20 {
            let s = random_word(1, seed).unwrap().to_string();
            assert!(s == "O1U1" || s == "U1O1");
        }
    }

    #[test]
    fn random_words_hit_every_two_crossing_word() {
        let expected: HashSet<_> = enumerate_words(2).unwrap().map(|d| d.to_string()).collect();
        let seen: HashSet<_> = (0..10_000)
            .map(|seed| random_word(2, seed).unwrap().to_string())
            .collect();
        assert_eq!(seen, expected);
    }
}
