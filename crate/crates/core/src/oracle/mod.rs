//! Brute-force references and exhaustive enumerators.
//!
//! Nothing here calls the fast routines it is meant to check: closedness is
//! decided by counting occurrences, balance by comparing every pair of
//! factors.

mod census;
pub mod suites;

pub use census::{
    maximality_witness, uniqueness_census, CensusClass, CensusReport, LengthSummary, WitnessPair,
    WitnessReport,
};
pub use suites::{run_suites, SuiteResult};

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// Default bound on the number of candidate words an enumeration may visit.
pub const ENUMERATION_CAP: u128 = 1 << 20;

fn occurrences(s: &[char], f: &[char]) -> usize {
    if f.len() > s.len() {
        return 0;
    }
    (0..=s.len() - f.len())
        .filter(|&i| &s[i..i + f.len()] == f)
        .count()
}

/// Some factor other than `w` itself occurs exactly twice in `w`, as a
/// prefix and as a suffix. The empty word is closed.
pub fn naive_is_closed(w: &Word) -> bool {
    let s = w.symbols();
    let n = s.len();
    if n == 0 {
        return true;
    }
    (0..n).any(|l| s[..l] == s[n - l..] && occurrences(s, &s[..l]) == 2)
}

/// Closed iff the longest prefix occurring twice occurs exactly twice and
/// is a suffix.
pub fn naive_is_closed_by_repeated_prefix(w: &Word) -> bool {
    let s = w.symbols();
    let n = s.len();
    if n == 0 {
        return true;
    }
    let l = (0..n)
        .rev()
        .find(|&l| occurrences(s, &s[..l]) >= 2)
        .unwrap_or(0);
    occurrences(s, &s[..l]) == 2 && s[n - l..] == s[..l]
}

/// Closed iff the longest border has no occurrence other than as a prefix
/// and as a suffix.
pub fn naive_is_closed_by_border(w: &Word) -> bool {
    let s = w.symbols();
    if s.is_empty() {
        return true;
    }
    occurrences(s, &s[..naive_longest_border_len(s)]) == 2
}

fn naive_longest_border_len(s: &[char]) -> usize {
    let n = s.len();
    (0..n).rev().find(|&l| s[..l] == s[n - l..]).unwrap_or(0)
}

/// `|w|` minus its longest border; 1 for the empty word.
pub fn naive_period(w: &Word) -> usize {
    let n = w.len();
    if n == 0 {
        return 1;
    }
    (1..=n)
        .find(|&p| (p..n).all(|i| w[i] == w[i - p]))
        .unwrap_or(n)
}

/// The oc-sequence bit by bit from [`naive_is_closed`], as a `0`/`1` string.
pub fn naive_oc_string(w: &Word) -> String {
    (1..=w.len())
        .map(|i| {
            if naive_is_closed(&w.prefix(i)) {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

/// Every two factors of equal length hold the same number of each letter,
/// up to one. For binary words this is the usual balance.
pub fn naive_is_balanced(w: &Word) -> bool {
    let s = w.symbols();
    let n = s.len();
    let letters = w.alphabet();
    for len in 1..n {
        for i in 0..=n - len {
            for j in i + 1..=n - len {
                for &c in letters.symbols() {
                    let ci = s[i..i + len].iter().filter(|&&x| x == c).count();
                    let cj = s[j..j + len].iter().filter(|&&x| x == c).count();
                    if ci.abs_diff(cj) > 1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All words over `alphabet` of length `0..=max_len`, shortest first and
/// lexicographic within a length.
pub fn all_words(alphabet: &[char], max_len: usize) -> Vec<Word> {
    let mut letters = alphabet.to_vec();
    letters.sort_unstable();
    letters.dedup();
    let mut out = vec![Word::new()];
    let mut layer = vec![Word::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| letters.iter().map(move |&c| w.with(c)))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filter {
    All,
    /// Definitional factor-pair balance.
    Balanced,
    /// `aw` and `bw` both balanced; binary alphabets only.
    LeftSpecial,
    Closed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub alphabet: Alphabet,
    pub max_length: usize,
    pub filter: Filter,
    pub cap: u128,
}

impl EnumerationSpec {
    pub fn new(alphabet: Alphabet, max_length: usize, filter: Filter) -> Self {
        EnumerationSpec {
            alphabet,
            max_length,
            filter,
            cap: ENUMERATION_CAP,
        }
    }

    pub fn with_cap(mut self, cap: u128) -> Self {
        self.cap = cap;
        self
    }
}

/// Nonempty words of length at most `max_length` passing the filter, in
/// length-then-lexicographic order.
///
/// Balanced words are grown one letter at a time from balanced words (every
/// factor of a balanced word is balanced), so the candidate count stays
/// polynomial; the other filters visit every word.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<Word>> {
    let k = spec.alphabet.len() as u128;
    match spec.filter {
        Filter::All | Filter::Closed => {
            let mut total: u128 = 0;
            let mut layer: u128 = 1;
            for _ in 0..spec.max_length {
                layer = layer.saturating_mul(k);
                total = total.saturating_add(layer);
                if total > spec.cap {
                    return Err(Error::BoundsExceeded {
                        candidates: total,
                        cap: spec.cap,
                    });
                }
            }
            let mut words = all_words(spec.alphabet.symbols(), spec.max_length);
            words.remove(0);
            if spec.filter == Filter::Closed {
                words.retain(naive_is_closed);
            }
            Ok(words)
        }
        Filter::Balanced => balanced_words(spec),
        Filter::LeftSpecial => {
            if !spec.alphabet.is_binary_ab() {
                return Err(Error::OutOfRange(
                    "left special words are enumerated over {a, b} only".into(),
                ));
            }
            let mut words = balanced_words(spec)?;
            words.retain(|w| {
                naive_is_balanced(&w.preceded_by('a')) && naive_is_balanced(&w.preceded_by('b'))
            });
            Ok(words)
        }
    }
}

fn balanced_words(spec: &EnumerationSpec) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    let mut layer = vec![Word::new()];
    let mut candidates: u128 = 0;
    for _ in 0..spec.max_length {
        candidates += layer.len() as u128 * spec.alphabet.len() as u128;
        if candidates > spec.cap {
            return Err(Error::BoundsExceeded {
                candidates,
                cap: spec.cap,
            });
        }
        layer = layer
            .iter()
            .flat_map(|w| spec.alphabet.symbols().iter().map(move |&c| w.with(c)))
            .filter(naive_is_balanced)
            .collect();
        out.extend(layer.iter().cloned());
    }
    Ok(out)
}
