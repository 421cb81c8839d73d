use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Digits `(d_0, d_1, ..., d_m)` driving a standard sequence. After `d_m`
/// the last digit repeats forever, so `(1)` is the Fibonacci word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectiveSequence {
    digits: Vec<u64>,
}

impl DirectiveSequence {
    pub fn new(digits: Vec<u64>) -> Result<Self> {
        let render = || {
            digits
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match digits.first() {
            None => Err(Error::InvalidDirective {
                input: String::new(),
                reason: "at least one digit is required".into(),
            }),
            Some(0) if digits.len() == 1 => Err(Error::InvalidDirective {
                input: render(),
                reason: "an all-zero directive describes no word".into(),
            }),
            Some(0) => Err(Error::ZeroLeadingDigit {
                hint: zero_leading_hint(&digits),
            }),
            Some(_) if digits.contains(&0) => Err(Error::InvalidDirective {
                input: render(),
                reason: "digits after d_0 must be positive".into(),
            }),
            Some(_) => Ok(DirectiveSequence { digits }),
        }
    }

    /// The Fibonacci directive `(1)`.
    pub fn fibonacci() -> Self {
        DirectiveSequence { digits: vec![1] }
    }

    /// `d_n`, following the tail rule.
    pub fn digit(&self, n: usize) -> u64 {
        self.digits[n.min(self.digits.len() - 1)]
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }
}

/// With `d_0 = 0` the slope is `[0; 1, d_1, ...]`; its complement
/// `[0; d_1 + 1, d_2, ...]` has directive `(d_1, d_2, ...)` and gives the
/// same word with `a` and `b` exchanged.
fn zero_leading_hint(digits: &[u64]) -> String {
    digits[1..]
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl FromStr for DirectiveSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidDirective {
                        input: s.to_string(),
                        reason: format!("{part:?} is not a non-negative decimal integer"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        DirectiveSequence::new(digits)
    }
}

impl fmt::Display for DirectiveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}
