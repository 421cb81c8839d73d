//! Border arrays, periods and exponents.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::word::Word;

/// Longest-border lengths of every nonempty prefix of a word.
///
/// Stored 0-based; [`BorderArray::get`] takes the 1-based prefix length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BorderArray(Vec<usize>);

impl BorderArray {
    pub fn from_entries(entries: Vec<usize>) -> Self {
        BorderArray(entries)
    }

    /// Length of the longest border of the prefix of length `i` (1-based).
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Running maximum of the entries.
    pub fn running_max(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0usize, |max, &b| {
                *max = (*max).max(b);
                Some(*max)
            })
            .collect()
    }
}

impl fmt::Display for BorderArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Morris–Pratt failure function over any slice: `out[i]` is the length of
/// the longest border of `s[..=i]`. Linear time.
pub(crate) fn border_lengths<T: PartialEq>(s: &[T]) -> Vec<usize> {
    let mut borders = vec![0usize; s.len()];
    let mut k = 0usize;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = borders[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        borders[i] = k;
    }
    borders
}

pub fn compute_border_array(w: &Word) -> BorderArray {
    BorderArray(border_lengths(w.symbols()))
}

/// The longest proper prefix of `w` that is also a suffix.
pub fn longest_border(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let borders = border_lengths(w.symbols());
    Ok(w.prefix(borders[w.len() - 1]))
}

/// The least period of `w`; the empty word has period 1 by convention.
pub fn period(w: &Word) -> usize {
    match border_lengths(w.symbols()).last() {
        Some(&b) => w.len() - b,
        None => 1,
    }
}

/// `|w| / period(w)` as an exact fraction. Refused on the empty word.
pub fn exponent(w: &Word) -> Result<Ratio<usize>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(Ratio::new(w.len(), period(w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn direct_longest_border(s: &[char]) -> usize {
        (0..s.len())
            .rev()
            .find(|&l| s[..l] == s[s.len() - l..])
            .unwrap_or(0)
    }

    #[test]
    fn border_array_fixture() {
        let b = compute_border_array(&Word::from("abcaacab"));
        assert_eq!(b.entries(), &[0, 0, 0, 1, 1, 0, 1, 2]);
        assert_eq!(b.to_string(), "0,0,0,1,1,0,1,2");
        assert_eq!(b.running_max(), vec![0, 0, 0, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn border_array_empty_and_power() {
        assert!(compute_border_array(&Word::new()).is_empty());
        let w = Word::from("aaaa");
        let expected: Vec<usize> = (1..=4)
            .map(|i| direct_longest_border(&w.symbols()[..i]))
            .collect();
        assert_eq!(expected, vec![0, 1, 2, 3]);
        assert_eq!(compute_border_array(&w).entries(), expected.as_slice());
    }

    #[test]
    fn longest_border_examples() {
        assert_eq!(
            longest_border(&Word::from("abcaacab")).unwrap(),
            Word::from("ab")
        );
        assert_eq!(longest_border(&Word::from("ab")).unwrap(), Word::new());
        assert_eq!(
            longest_border(&Word::from("ababa")).unwrap(),
            Word::from("aba")
        );
        assert_eq!(longest_border(&Word::new()), Err(Error::EmptyWord));
    }

    #[test]
    fn period_examples() {
        assert_eq!(period(&Word::from("aabaab")), 3);
        assert_eq!(period(&Word::new()), 1);
        assert_eq!(period(&Word::from("abc")), 3);
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(
            exponent(&Word::from("aabaab")).unwrap(),
            Ratio::from_integer(2)
        );
        assert_eq!(
            exponent(&Word::from("abc")).unwrap(),
            Ratio::from_integer(1)
        );
        assert_eq!(exponent(&Word::from("ababa")).unwrap(), Ratio::new(5, 2));
        assert_eq!(exponent(&Word::new()), Err(Error::EmptyWord));
    }

    #[test]
    fn border_array_invariants_on_ternary_words() {
        for w in crate::oracle::all_words(&['a', 'b', 'c'], 7) {
            let b = compute_border_array(&w);
            for i in 1..=w.len() {
                let bi = b.get(i);
                assert!(bi < i);
                if i >= 2 {
                    assert!(bi <= b.get(i - 1) + 1);
                }
                assert_eq!(bi, direct_longest_border(&w.symbols()[..i]), "{w:?} at {i}");
            }
        }
    }
}
