//! Balance of binary words: finite Sturmian words are exactly the balanced
//! ones.
//!
//! Three independent tests live here. [`is_balanced`] compares the letter
//! counts of all equal-length factors; [`is_balanced_by_palindromes`] looks
//! for a palindrome `v` with both `ava` and `bvb` as factors;
//! [`is_balanced_linear`] recognises the word as a digital straight segment
//! in one pass and is the one to use on long inputs.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::word::Word;

/// The (at most two) distinct symbols of `w`, in order of first occurrence.
fn binary_symbols(w: &Word) -> Result<Vec<char>> {
    let mut seen: Vec<char> = Vec::with_capacity(2);
    for &c in w.symbols() {
        if !seen.contains(&c) {
            seen.push(c);
        }
        if seen.len() > 2 {
            return Err(Error::TooManySymbols(w.alphabet().len()));
        }
    }
    Ok(seen)
}

/// For every length, the counts of one letter over all factors of that
/// length differ by at most one. Quadratic.
pub fn is_balanced(w: &Word) -> Result<bool> {
    let symbols = binary_symbols(w)?;
    let Some(&marked) = symbols.first() else {
        return Ok(true);
    };
    let n = w.len();
    let mut prefix = vec![0usize; n + 1];
    for (i, &c) in w.symbols().iter().enumerate() {
        prefix[i + 1] = prefix[i] + usize::from(c == marked);
    }
    for len in 1..n {
        let counts = (0..=n - len).map(|i| prefix[i + len] - prefix[i]);
        let (lo, hi) = counts.fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        if hi - lo > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A binary word is unbalanced iff some palindrome `v` has both `xvx` and
/// `yvy` as factors for the two distinct letters `x`, `y`.
pub fn is_balanced_by_palindromes(w: &Word) -> Result<bool> {
    let symbols = binary_symbols(w)?;
    if symbols.len() < 2 {
        return Ok(true);
    }
    let s = w.symbols();
    let mut framed: [HashSet<&[char]>; 2] = [HashSet::new(), HashSet::new()];
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] != s[j] {
                continue;
            }
            let inner = &s[i + 1..j];
            if inner.iter().eq(inner.iter().rev()) {
                framed[usize::from(s[i] == symbols[1])].insert(inner);
            }
        }
    }
    Ok(framed[0].is_disjoint(&framed[1]))
}

/// One-pass balance test.
///
/// Reading the second symbol as a unit step up, the word is balanced iff its
/// lattice path is a naive digital straight segment: there are integers
/// `a, b, mu` with `mu <= a x - b y < mu + b` at every path point. The
/// characteristics and the leaning points are updated incrementally, so the
/// whole test is linear.
pub fn is_balanced_linear(w: &Word) -> Result<bool> {
    let symbols = binary_symbols(w)?;
    if symbols.len() < 2 {
        return Ok(true);
    }
    // Orient the path so that it lies in the first octant.
    let up = symbols[1];
    let mut dss = DigitalSegment::new();
    let mut y = 0i64;
    for (i, &c) in w.symbols().iter().enumerate() {
        y += i64::from(c == up);
        if !dss.extend(i as i64 + 1, y) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Point {
    x: i64,
    y: i64,
}

/// Arithmetical recognition of a first-octant naive digital segment starting
/// at the origin.
#[derive(Debug)]
struct DigitalSegment {
    a: i64,
    b: i64,
    mu: i64,
    upper_first: Point,
    upper_last: Point,
    lower_first: Point,
    lower_last: Point,
}

impl DigitalSegment {
    fn new() -> Self {
        let origin = Point { x: 0, y: 0 };
        DigitalSegment {
            a: 0,
            b: 1,
            mu: 0,
            upper_first: origin,
            upper_last: origin,
            lower_first: origin,
            lower_last: origin,
        }
    }

    /// Adds the next point of the path; false if no segment contains it.
    fn extend(&mut self, x: i64, y: i64) -> bool {
        let m = Point { x, y };
        let r = self.a * x - self.b * y;
        if self.mu <= r && r < self.mu + self.b {
            if r == self.mu {
                self.upper_last = m;
            }
            if r == self.mu + self.b - 1 {
                self.lower_last = m;
            }
        } else if r == self.mu - 1 {
            // Just above the strip: the slope grows.
            self.lower_first = self.lower_last;
            self.upper_last = m;
            self.a = m.y - self.upper_first.y;
            self.b = m.x - self.upper_first.x;
            self.mu = self.a * m.x - self.b * m.y;
        } else if r == self.mu + self.b {
            // Just below the strip: the slope shrinks.
            self.upper_first = self.upper_last;
            self.lower_last = m;
            self.a = m.y - self.lower_first.y;
            self.b = m.x - self.lower_first.x;
            self.mu = self.a * m.x - self.b * m.y - self.b + 1;
        } else {
            return false;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_three(w: &str) -> [bool; 3] {
        let w = Word::from(w);
        [
            is_balanced(&w).unwrap(),
            is_balanced_by_palindromes(&w).unwrap(),
            is_balanced_linear(&w).unwrap(),
        ]
    }

    #[test]
    fn examples() {
        assert_eq!(all_three("aabb"), [false; 3]);
        assert_eq!(all_three("aaba"), [true; 3]);
        assert_eq!(all_three(""), [true; 3]);
        assert_eq!(all_three("abaababaab"), [true; 3]);
        assert_eq!(all_three("abbaab"), [false; 3]);
    }

    #[test]
    fn works_over_any_two_symbols() {
        assert_eq!(all_three("xxyx"), [true; 3]);
        assert_eq!(all_three("xxyy"), [false; 3]);
    }

    #[test]
    fn refuses_three_symbols() {
        let w = Word::from("abc");
        assert_eq!(is_balanced(&w), Err(Error::TooManySymbols(3)));
        assert!(is_balanced_by_palindromes(&w).is_err());
        assert!(is_balanced_linear(&w).is_err());
    }

    #[test]
    fn three_tests_agree_on_all_short_words() {
        for w in crate::oracle::all_words(&['a', 'b'], 14) {
            let q = is_balanced(&w).unwrap();
            assert_eq!(q, is_balanced_by_palindromes(&w).unwrap(), "{w:?}");
            assert_eq!(q, is_balanced_linear(&w).unwrap(), "{w:?}");
        }
    }
}
