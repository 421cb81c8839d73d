//! Open/closed classification of prefixes.
//!
//! The length-`i` prefix of `w` is closed exactly when its longest border is
//! longer than the longest border of every shorter prefix, so the oc-sequence
//! is the sequence of increments of the running maximum `B'` of the border
//! array, with `B'[0] = -1`.

use std::fmt;
use std::str::FromStr;

use crate::border::border_lengths;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// Bit `i` (1-based) is set iff the length-`i` prefix is closed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OcSequence(Vec<bool>);

impl OcSequence {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        OcSequence(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bit for the prefix of length `i` (1-based).
    pub fn get(&self, i: usize) -> bool {
        self.0[i - 1]
    }

    pub fn last(&self) -> Option<bool> {
        self.0.last().copied()
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn count_zeros(&self) -> usize {
        self.len() - self.count_ones()
    }

    pub fn prefix(&self, len: usize) -> OcSequence {
        OcSequence(self.0[..len.min(self.len())].to_vec())
    }

    pub fn runs(&self) -> RunLengths {
        runs(self)
    }
}

impl FromStr for OcSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                found => Err(Error::InvalidOcCharacter {
                    position: i + 1,
                    found,
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(OcSequence)
    }
}

impl fmt::Display for OcSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0
            .iter()
            .try_for_each(|&b| f.write_str(if b { "1" } else { "0" }))
    }
}

impl fmt::Debug for OcSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OcSequence({self})")
    }
}

/// A maximal run of equal bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Run {
    pub bit: bool,
    pub len: usize,
}

/// Maximal-run decomposition of an oc-sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RunLengths(Vec<Run>);

impl RunLengths {
    /// Builds a run list, rejecting empty runs and equal neighbours.
    pub fn new(runs: Vec<Run>) -> Result<Self> {
        if runs.iter().any(|r| r.len == 0) {
            return Err(Error::OutOfRange("runs must have positive length".into()));
        }
        if runs.windows(2).any(|p| p[0].bit == p[1].bit) {
            return Err(Error::OutOfRange("consecutive runs must alternate".into()));
        }
        Ok(RunLengths(runs))
    }

    pub fn runs(&self) -> &[Run] {
        &self.0
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.0.iter().map(|r| r.len).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_oc(&self) -> OcSequence {
        OcSequence(
            self.0
                .iter()
                .flat_map(|r| std::iter::repeat_n(r.bit, r.len))
                .collect(),
        )
    }
}

impl fmt::Display for RunLengths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0
            .iter()
            .try_for_each(|r| write!(f, "({},{})", u8::from(r.bit), r.len))
    }
}

/// oc bits of any slice. Shared by [`compute_oc_sequence`] and callers that
/// hold symbols in another representation.
pub(crate) fn oc_bits<T: PartialEq>(s: &[T]) -> Vec<bool> {
    let mut best: isize = -1;
    border_lengths(s)
        .into_iter()
        .map(|b| {
            let b = b as isize;
            // B'[i] - B'[i-1] is 0 or 1 because B[i] <= B[i-1] + 1.
            if b > best {
                best = b;
                true
            } else {
                false
            }
        })
        .collect()
}

/// The oc-sequence of `w`, in linear time.
pub fn compute_oc_sequence(w: &Word) -> OcSequence {
    OcSequence(oc_bits(w.symbols()))
}

pub fn is_closed(w: &Word) -> bool {
    oc_bits(w.symbols()).last().copied().unwrap_or(true)
}

/// The unique symbol `x` of `alphabet` such that `wx` is closed, if any.
pub fn closed_extension(w: &Word, alphabet: &Alphabet) -> Result<Option<char>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(alphabet
        .symbols()
        .iter()
        .copied()
        .find(|&x| is_closed(&w.with(x))))
}

pub fn runs(oc: &OcSequence) -> RunLengths {
    let mut out: Vec<Run> = Vec::new();
    for &bit in oc.bits() {
        match out.last_mut() {
            Some(run) if run.bit == bit => run.len += 1,
            _ => out.push(Run { bit, len: 1 }),
        }
    }
    RunLengths(out)
}

/// Whether every factor `1^t 0^s 1` of `oc` has `t <= s`.
pub fn check_run_inequality(oc: &OcSequence) -> bool {
    runs(oc).runs().windows(3).all(|w| match w {
        [ones, zeros, next] if ones.bit && !zeros.bit && next.bit => ones.len <= zeros.len,
        _ => true,
    })
}

/// For a closed `w`, the word it is a complete return to: its prefix of
/// length `|oc(w)|_1 - 1`. `None` if `w` is open.
pub fn complete_return_root(w: &Word) -> Result<Option<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let oc = compute_oc_sequence(w);
    Ok(oc.last().unwrap().then(|| w.prefix(oc.count_ones() - 1)))
}

/// `period(w) = 1 + |oc(w)|_0` holds for every closed word.
pub fn period_from_oc(oc: &OcSequence) -> usize {
    1 + oc.count_zeros()
}
