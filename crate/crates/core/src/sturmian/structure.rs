//! Where the runs of the oc-sequence of a standard word begin and end, and
//! the factorization of the word into squares of reversed standard words.

use std::fmt;

use crate::error::{Error, Result};
use crate::sturmian::balance::is_balanced_linear;
use crate::sturmian::standard::{
    letters, standard_lengths, standard_prefix, standard_words, u_words,
};
use crate::sturmian::DirectiveSequence;
use crate::word::Word;

/// Number of `u_n` needed so that `u_{count}` is longer than `len`.
fn u_count_beyond(d: &DirectiveSequence, len: usize) -> usize {
    // |u_n| = |s_n| - 2 and the lengths list starts at s_{-1}.
    let lens = standard_lengths(d, len.saturating_add(2));
    (lens.len() - 2).max(1)
}

/// The prefixes `u_n xy u_n` (`n >= 1`) of length at most `len`, shortest
/// first.
pub fn semicentral_prefixes(d: &DirectiveSequence, len: usize) -> Result<Vec<Word>> {
    if len == 0 {
        return Err(Error::OutOfRange("prefix length must be at least 1".into()));
    }
    let us = u_words(d, u_count_beyond(d, len / 2))?;
    Ok(us
        .iter()
        .enumerate()
        .map(|(i, u)| {
            let (x, y) = letters(i + 1);
            u.with(x).with(y).concat(u)
        })
        .filter(|v| v.len() <= len)
        .collect())
}

/// The nonempty central prefixes of length at most `len`, found by testing
/// every prefix of the standard word.
pub fn central_prefixes(d: &DirectiveSequence, len: usize) -> Result<Vec<Word>> {
    let w = standard_prefix(d, len)?;
    let mut out = Vec::new();
    for l in 1..=len {
        let v = w.prefix(l);
        if v.is_palindrome() && is_central_fast(&v)? {
            out.push(v);
        }
    }
    Ok(out)
}

fn is_central_fast(v: &Word) -> Result<bool> {
    for ext in [
        v.preceded_by('a'),
        v.preceded_by('b'),
        v.with('a'),
        v.with('b'),
    ] {
        if !is_balanced_linear(&ext)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryKind {
    /// The prefix ending here is closed and the previous one is open.
    OpenToClosed,
    /// The prefix ending here is open and the previous one is closed.
    ClosedToOpen,
}

impl fmt::Display for BoundaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundaryKind::OpenToClosed => "open->closed",
            BoundaryKind::ClosedToOpen => "closed->open",
        })
    }
}

/// A position (1-based prefix length) where the oc-sequence flips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Boundary {
    pub position: usize,
    pub kind: BoundaryKind,
}

/// Every flip of the oc-sequence at a position `<= len`.
///
/// Closed-to-open flips sit right after the central prefixes
/// `u_n xy u_{n+1}` (`n >= 0`, with `u_0 xy u_1 = a^{d_0}`); open-to-closed
/// flips sit right after the semicentral prefixes `u_n xy u_n` (`n >= 1`).
pub fn run_boundaries(d: &DirectiveSequence, len: usize) -> Result<Vec<Boundary>> {
    if len == 0 {
        return Err(Error::OutOfRange("prefix length must be at least 1".into()));
    }
    // lens[j] = |s_{j-1}|, and |u_n| = |s_n| - 2.
    let lens = standard_lengths(d, len.saturating_add(2));
    let s = |n: usize| lens[n + 1];
    let mut out = Vec::new();
    for n in 0..lens.len() - 2 {
        let closed_run_end = s(n).saturating_add(s(n + 1)).saturating_sub(2);
        if closed_run_end < len {
            out.push(Boundary {
                position: closed_run_end + 1,
                kind: BoundaryKind::ClosedToOpen,
            });
        }
        if n >= 1 {
            let semicentral = 2 * s(n) - 2;
            if semicentral < len {
                out.push(Boundary {
                    position: semicentral + 1,
                    kind: BoundaryKind::OpenToClosed,
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `w = a^{d_0} b a^{d_0 - 1} (u_1^{-1} u_2)^2 (u_2^{-1} u_3)^2 ...`, cut after
/// a finite number of squares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFactorization {
    pub head: Word,
    /// `halves[i]` is `u_{i+1}^{-1} u_{i+2}`; each appears squared.
    pub halves: Vec<Word>,
}

impl SquareFactorization {
    /// `head` followed by every square.
    pub fn word(&self) -> Word {
        self.halves
            .iter()
            .fold(self.head.clone(), |acc, h| acc.concat(h).concat(h))
    }

    pub fn squares(&self) -> impl Iterator<Item = Word> + '_ {
        self.halves.iter().map(|h| h.concat(h))
    }

    /// One factor per line, halves joined by a middle dot.
    pub fn render_human(&self) -> String {
        std::iter::once(self.head.to_string())
            .chain(self.halves.iter().map(|h| format!("{h}·{h}")))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// One factor per line, squares written out in full.
    pub fn render_machine(&self) -> String {
        std::iter::once(self.head.to_string())
            .chain(self.squares().map(|s| s.to_string()))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// `r_{n-1} r_n^{d_n - 1}` with `r_j` the reversal of `s_j`; equals
/// `u_n^{-1} u_{n+1}` for `n >= 1`.
pub fn reversed_standard_half(d: &DirectiveSequence, n: usize) -> Result<Word> {
    let words = standard_words(d, n as isize)?;
    Ok(half_from_reversals(d, &words, n))
}

/// `words` holds `s_{-1}, s_0, ...`, so `s_j` sits at index `j + 1`.
fn half_from_reversals(d: &DirectiveSequence, words: &[Word], n: usize) -> Word {
    let r_prev = words[n].reversed();
    let r_cur = words[n + 1].reversed();
    r_prev.concat(&r_cur.repeat((d.digit(n) - 1) as usize))
}

/// The head and the first `terms` half-factors. Each half-factor is checked
/// against [`reversed_standard_half`].
pub fn square_factorization(d: &DirectiveSequence, terms: usize) -> Result<SquareFactorization> {
    if terms == 0 {
        return Err(Error::OutOfRange("at least one square is required".into()));
    }
    let d0 = d.digit(0) as usize;
    let head = Word::from_symbols(vec!['a'; d0])
        .with('b')
        .concat(&Word::from_symbols(vec!['a'; d0 - 1]));
    let us = u_words(d, terms + 1)?;
    let words = standard_words(d, terms as isize)?;
    let mut halves = Vec::with_capacity(terms);
    for n in 1..=terms {
        let (short, long) = (&us[n - 1], &us[n]);
        if !long.starts_with(short) {
            return Err(Error::OutOfRange(format!(
                "u_{n} is not a prefix of u_{}",
                n + 1
            )));
        }
        let half = long.suffix(long.len() - short.len());
        let expected = half_from_reversals(d, &words, n);
        if half != expected {
            return Err(Error::OutOfRange(format!(
                "u_{n}^-1 u_{} = {half} differs from r_{} r_{n}^{} = {expected}",
                n + 1,
                n - 1,
                d.digit(n) - 1
            )));
        }
        halves.push(half);
    }
    Ok(SquareFactorization { head, halves })
}
