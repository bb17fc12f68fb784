//! Words over the infinite generating set `x0, x1, x2, ...` and their inverses.
//!
//! The text format is a whitespace-separated list of tokens `x<k>` or
//! `x<k>^-1`, with `k` a decimal nonnegative integer. The empty string is the
//! empty word.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A single letter `x_index^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub const fn pos(index: usize) -> Letter {
        Letter { index, sign: Sign::Pos }
    }

    pub const fn neg(index: usize) -> Letter {
        Letter { index, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Letter {
        Letter { index: self.index, sign: self.sign.flip() }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "x{}", self.index),
            Sign::Neg => write!(f, "x{}^-1", self.index),
        }
    }
}

/// The four letters of the two-generator Cayley graph, in the fixed order
/// `x0, x0^-1, x1, x1^-1`.
pub const TWO_GENERATORS: [Letter; 4] = [Letter::pos(0), Letter::neg(0), Letter::pos(1), Letter::neg(1)];

/// A word in the free monoid on the letters; not necessarily reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenWord {
    pub letters: Vec<Letter>,
}

impl GenWord {
    pub fn new(letters: Vec<Letter>) -> GenWord {
        GenWord { letters }
    }

    pub fn empty() -> GenWord {
        GenWord::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Formal inverse: reversed order, every letter inverted.
    pub fn inverse(&self) -> GenWord {
        GenWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &GenWord) -> GenWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GenWord { letters }
    }
}

impl From<Vec<Letter>> for GenWord {
    fn from(letters: Vec<Letter>) -> Self {
        GenWord { letters }
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

impl FromStr for GenWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenWord> {
        parse_word(s)
    }
}

fn parse_token(token: &str) -> Option<Letter> {
    let body = token.strip_prefix('x')?;
    let (digits, sign) = match body.strip_suffix("^-1") {
        Some(d) => (d, Sign::Neg),
        None => (body, Sign::Pos),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index = digits.parse().ok()?;
    Some(Letter { index, sign })
}

/// Parses a word. `position` in a parse error is the zero-based token index.
pub fn parse_word(text: &str) -> Result<GenWord> {
    text.split_whitespace()
        .enumerate()
        .map(|(position, token)| parse_token(token).ok_or_else(|| Error::Parse { token: token.to_string(), position }))
        .collect::<Result<Vec<_>>>()
        .map(GenWord::new)
}

pub fn format_word(w: &GenWord) -> String {
    let parts: Vec<String> = w.letters.iter().map(|l| l.to_string()).collect();
    parts.join(" ")
}

/// Cancels adjacent inverse pairs until none remain. Group relations are not
/// applied.
pub fn free_reduce(w: &GenWord) -> GenWord {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    GenWord::new(out)
}

/// The relators `x1^{x0^2} (x1^{x0 x1})^-1` and `x1^{x0^3} (x1^{x0^2 x1})^-1`
/// of the two-generator presentation of F, with `a^b = b^-1 a b`.
pub fn two_generator_relators() -> [GenWord; 2] {
    let conj = |a: &str, b: &str| {
        let a = parse_word(a).expect("fixture");
        let b = parse_word(b).expect("fixture");
        b.inverse().concat(&a).concat(&b)
    };
    [
        conj("x1", "x0 x0").concat(&conj("x1", "x0 x1").inverse()),
        conj("x1", "x0 x0 x0").concat(&conj("x1", "x0 x0 x1").inverse()),
    ]
}
