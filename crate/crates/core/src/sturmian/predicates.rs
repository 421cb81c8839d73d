//! Central, semicentral and special Sturmian words.

use serde::Serialize;

use crate::border::{exponent, period};
use crate::error::{Error, Result};
use crate::oc::{compute_oc_sequence, is_closed};
use crate::sturmian::balance::is_balanced;
use crate::word::Word;

fn require_ab(w: &Word) -> Result<()> {
    match w.symbols().iter().find(|&&c| c != 'a' && c != 'b') {
        Some(&c) => Err(Error::NotBinary(c)),
        None => Ok(()),
    }
}

fn all_balanced(words: &[Word]) -> Result<bool> {
    for w in words {
        if !is_balanced(w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `aw` and `bw` are both balanced.
pub fn is_left_special_sturmian(w: &Word) -> Result<bool> {
    require_ab(w)?;
    all_balanced(&[w.preceded_by('a'), w.preceded_by('b')])
}

/// `wa` and `wb` are both balanced.
pub fn is_right_special_sturmian(w: &Word) -> Result<bool> {
    require_ab(w)?;
    all_balanced(&[w.with('a'), w.with('b')])
}

/// `awa`, `awb`, `bwa` and `bwb` are all balanced.
pub fn is_strictly_bispecial(w: &Word) -> Result<bool> {
    require_ab(w)?;
    let framed: Vec<Word> = [('a', 'a'), ('a', 'b'), ('b', 'a'), ('b', 'b')]
        .iter()
        .map(|&(x, y)| w.preceded_by(x).with(y))
        .collect();
    all_balanced(&framed)
}

/// A palindromic bispecial Sturmian word.
pub fn is_central(v: &Word) -> Result<bool> {
    require_ab(v)?;
    if !v.is_palindrome() {
        return Ok(false);
    }
    all_balanced(&[
        v.preceded_by('a'),
        v.preceded_by('b'),
        v.with('a'),
        v.with('b'),
    ])
}

/// `v = u x y u` with `u` central and `x != y`.
pub fn is_semicentral(v: &Word) -> Result<bool> {
    require_ab(v)?;
    let n = v.len();
    if n < 2 || n % 2 == 1 {
        return Ok(false);
    }
    let k = (n - 2) / 2;
    let s = v.symbols();
    if s[k] == s[k + 1] || s[..k] != s[k + 2..] {
        return Ok(false);
    }
    is_central(&v.prefix(k))
}

fn occurrences(haystack: &[char], needle: &[char]) -> usize {
    if needle.len() > haystack.len() {
        return 0;
    }
    (0..=haystack.len() - needle.len())
        .filter(|&i| &haystack[i..i + needle.len()] == needle)
        .count()
}

fn distinct_neighbours(s: &[char], factor: &[char], before: bool) -> usize {
    let mut letters: Vec<char> = Vec::new();
    let m = factor.len();
    for i in 0..=s.len() - m {
        if &s[i..i + m] != factor {
            continue;
        }
        let neighbour = if before {
            i.checked_sub(1).map(|j| s[j])
        } else {
            s.get(i + m).copied()
        };
        if let Some(c) = neighbour {
            if !letters.contains(&c) {
                letters.push(c);
            }
        }
    }
    letters.len()
}

/// Longest factor of `s` satisfying `pred`, scanning factors by decreasing
/// length.
fn longest_factor(s: &[char], pred: impl Fn(&[char]) -> bool) -> Option<Vec<char>> {
    (0..=s.len()).rev().find_map(|len| {
        (0..=s.len() - len)
            .map(|i| &s[i..i + len])
            .find(|f| pred(f))
            .map(<[char]>::to_vec)
    })
}

/// The defining property: the longest repeated prefix, the longest repeated
/// suffix, the longest left special factor and the longest right special
/// factor all exist and coincide. Cubic; for cross-checking
/// [`is_semicentral`].
pub fn is_semicentral_by_definition(v: &Word) -> bool {
    let s = v.symbols();
    if s.is_empty() {
        return false;
    }
    let repeated_prefix = (0..s.len())
        .rev()
        .find(|&l| occurrences(s, &s[..l]) >= 2)
        .map(|l| s[..l].to_vec());
    let repeated_suffix = (0..s.len())
        .rev()
        .find(|&l| occurrences(s, &s[s.len() - l..]) >= 2)
        .map(|l| s[s.len() - l..].to_vec());
    let left_special = longest_factor(s, |f| distinct_neighbours(s, f, true) >= 2);
    let right_special = longest_factor(s, |f| distinct_neighbours(s, f, false) >= 2);
    match (
        repeated_prefix,
        repeated_suffix,
        left_special,
        right_special,
    ) {
        (Some(p), Some(q), Some(l), Some(r)) => p == q && q == l && l == r,
        _ => false,
    }
}

/// All structural predicates of a word in one record.
///
/// Sturmian-specific flags are `None` for words over more than two symbols.
/// A two-symbol word over other letters is renamed to `{a, b}` first; every
/// flag is invariant under exchanging letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub word: String,
    pub balanced: Option<bool>,
    pub central: Option<bool>,
    pub semicentral: Option<bool>,
    pub left_special: Option<bool>,
    pub right_special: Option<bool>,
    pub strictly_bispecial: Option<bool>,
    pub closed: bool,
    pub period: usize,
    /// `|w| / period(w)` as `p/q` (or an integer); `None` for the empty word.
    pub exponent: Option<String>,
    pub oc: String,
}

fn to_ab(w: &Word) -> Option<Word> {
    if w.alphabet().is_binary_ab() {
        return Some(w.clone());
    }
    let mut seen: Vec<char> = Vec::new();
    let mut out = Vec::with_capacity(w.len());
    for &c in w.symbols() {
        let idx = match seen.iter().position(|&s| s == c) {
            Some(i) => i,
            None => {
                seen.push(c);
                seen.len() - 1
            }
        };
        out.push(*['a', 'b'].get(idx)?);
    }
    Some(Word::from_symbols(out))
}

pub fn classify(w: &Word) -> Classification {
    let binary = to_ab(w);
    let flag = |f: fn(&Word) -> Result<bool>| binary.as_ref().map(|b| f(b).expect("binary word"));
    Classification {
        word: w.to_string(),
        balanced: flag(is_balanced),
        central: flag(is_central),
        semicentral: flag(is_semicentral),
        left_special: flag(is_left_special_sturmian),
        right_special: flag(is_right_special_sturmian),
        strictly_bispecial: flag(is_strictly_bispecial),
        closed: is_closed(w),
        period: period(w),
        exponent: exponent(w).ok().map(|e| e.to_string()),
        oc: compute_oc_sequence(w).to_string(),
    }
}
