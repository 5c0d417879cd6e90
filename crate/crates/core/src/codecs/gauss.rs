//! Gauss word text: `O1U2O3U1O2U3`, `o1 u2 o3`, or `O1+, U2-, ...`.
//!
//! A token is a pass letter (`O`/`U`, any case) followed by a positive
//! crossing number and an optional crossing sign, which is ignored.
//! Tokens may be run together or separated by whitespace and commas.

use std::collections::HashMap;

use crate::diagram::{Diagram, Pass, Symbol};
use crate::error::{ParseError, ParseErrorKind, Result};

struct Token {
    symbol: Symbol,
    column: usize,
}

fn tokenize(text: &str) -> std::result::Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == ',' {
            i += 1;
            continue;
        }
        let start = i;
        let malformed = |end: usize| {
            let end = (end..chars.len())
                .find(|&j| chars[j].is_whitespace() || chars[j] == ',')
                .unwrap_or(chars.len());
            ParseError {
                column: start + 1,
                kind: ParseErrorKind::MalformedToken(chars[start..end].iter().collect()),
            }
        };
        let pass = match c {
            'O' | 'o' => Pass::Over,
            'U' | 'u' => Pass::Under,
            _ => return Err(malformed(i)),
        };
        i += 1;
        let digits_start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        if i == digits_start {
            return Err(malformed(i));
        }
        let digits: String = chars[digits_start..i].iter().collect();
        let id: u32 = digits.parse().map_err(|_| malformed(i))?;
        if id == 0 {
            return Err(ParseError {
                column: start + 1,
                kind: ParseErrorKind::ZeroCrossing,
            });
        }
        if i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            i += 1;
        }
        tokens.push(Token {
            symbol: Symbol::new(id, pass),
            column: start + 1,
        });
    }
    Ok(tokens)
}

fn validate(tokens: &[Token]) -> std::result::Result<(), ParseError> {
    let mut first: HashMap<u32, (Pass, usize)> = HashMap::new();
    let mut count: HashMap<u32, usize> = HashMap::new();
    for t in tokens {
        let id = t.symbol.crossing.0;
        let n = count.entry(id).or_insert(0);
        *n += 1;
        if *n > 2 {
            return Err(ParseError {
                column: t.column,
                kind: ParseErrorKind::TooManyPasses {
                    crossing: id,
                    count: tokens.iter().filter(|u| u.symbol.crossing.0 == id).count(),
                },
            });
        }
        match first.get(&id) {
            Some(&(pass, _)) if pass == t.symbol.pass => {
                return Err(ParseError {
                    column: t.column,
                    kind: ParseErrorKind::DuplicatePass {
                        crossing: id,
                        pass: pass.name(),
                    },
                });
            }
            Some(_) => {}
            None => {
                first.insert(id, (t.symbol.pass, t.column));
            }
        }
    }
    for t in tokens {
        let id = t.symbol.crossing.0;
        if count[&id] == 1 {
            return Err(ParseError {
                column: t.column,
                kind: ParseErrorKind::MissingPass {
                    crossing: id,
                    missing: t.symbol.pass.flip().name(),
                },
            });
        }
    }
    Ok(())
}

/// Parses Gauss text without renaming crossings.
pub fn parse_gauss_raw(text: &str) -> Result<Diagram> {
    let tokens = tokenize(text)?;
    validate(&tokens)?;
    Ok(Diagram::from_valid(
        tokens.into_iter().map(|t| t.symbol).collect(),
    ))
}

/// Parses Gauss text into a canonically labeled diagram.
pub fn parse_gauss(text: &str) -> Result<Diagram> {
    Ok(parse_gauss_raw(text)?.canonicalize())
}

/// Compact token form; the inverse of [`parse_gauss_raw`].
pub fn format_gauss(diagram: &Diagram) -> String {
    diagram.to_string()
}
