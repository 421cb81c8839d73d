//! Standard sequences `s_{-1} = b`, `s_0 = a`, `s_{n+1} = s_n^{d_n} s_{n-1}`
//! and the companion sequence `u_n` defined by `s_n = u_n xy`.

use crate::error::{Error, Result};
use crate::sturmian::DirectiveSequence;
use crate::word::Word;

/// Largest word this module will materialize.
pub const MAX_MATERIALIZED_LEN: usize = 1 << 30;

/// The letter pair `xy` closing `s_n`: `ab` for odd `n`, `ba` for even `n`.
pub fn letters(n: usize) -> (char, char) {
    if n % 2 == 1 {
        ('a', 'b')
    } else {
        ('b', 'a')
    }
}

fn a_power(k: u64) -> Result<Word> {
    let k = usize::try_from(k).map_err(|_| Error::LengthOverflow)?;
    check_len(k)?;
    Ok(Word::from_symbols(vec!['a'; k]))
}

fn check_len(len: usize) -> Result<()> {
    if len > MAX_MATERIALIZED_LEN {
        Err(Error::OutOfRange(format!(
            "a word of length {len} exceeds the materialization limit {MAX_MATERIALIZED_LEN}"
        )))
    } else {
        Ok(())
    }
}

fn checked_len(d: u64, cur: usize, prev: usize) -> Result<usize> {
    usize::try_from(d)
        .ok()
        .and_then(|d| d.checked_mul(cur))
        .and_then(|x| x.checked_add(prev))
        .ok_or(Error::LengthOverflow)
}

/// Walks a standard sequence one term at a time, holding `s_{n-1}` and `s_n`.
#[derive(Clone, Debug)]
pub struct StandardSequence {
    directive: DirectiveSequence,
    n: isize,
    previous: Word,
    current: Word,
}

impl StandardSequence {
    /// Starts at `n = 0` with `s_{-1} = b`, `s_0 = a`.
    pub fn new(directive: &DirectiveSequence) -> Self {
        StandardSequence {
            directive: directive.clone(),
            n: 0,
            previous: Word::from("b"),
            current: Word::from("a"),
        }
    }

    pub fn index(&self) -> isize {
        self.n
    }

    /// `s_n`.
    pub fn current(&self) -> &Word {
        &self.current
    }

    /// `s_{n-1}`.
    pub fn previous(&self) -> &Word {
        &self.previous
    }

    /// `u_n`, i.e. `s_n` without its last two letters; defined for `n >= 1`.
    pub fn u_current(&self) -> Option<Word> {
        (self.n >= 1).then(|| self.current.prefix(self.current.len() - 2))
    }

    /// Moves to `s_{n+1} = s_n^{d_n} s_{n-1}`.
    pub fn advance(&mut self) -> Result<()> {
        let d = self.directive.digit(self.n as usize);
        let len = checked_len(d, self.current.len(), self.previous.len())?;
        check_len(len)?;
        let next = self.current.repeat(d as usize).concat(&self.previous);
        self.previous = std::mem::replace(&mut self.current, next);
        self.n += 1;
        Ok(())
    }
}

/// `s_{-1}, ..., s_{n_max}`.
pub fn standard_words(d: &DirectiveSequence, n_max: isize) -> Result<Vec<Word>> {
    if n_max < -1 {
        return Err(Error::OutOfRange(format!(
            "n_max = {n_max} must be at least -1"
        )));
    }
    let mut seq = StandardSequence::new(d);
    let mut out = vec![seq.previous().clone()];
    if n_max >= 0 {
        out.push(seq.current().clone());
    }
    while seq.index() < n_max {
        seq.advance()?;
        out.push(seq.current().clone());
    }
    Ok(out)
}

/// The length-`len` prefix of the standard word with directive `d`.
pub fn standard_prefix(d: &DirectiveSequence, len: usize) -> Result<Word> {
    if len == 0 {
        return Err(Error::OutOfRange("prefix length must be at least 1".into()));
    }
    check_len(len)?;
    // Every s_n with n >= 0 is a prefix of s_{n+1}, so one buffer grows by
    // copying its own prefixes and can be cut at `len` at any time.
    let d0 = usize::try_from(d.digit(0)).map_err(|_| Error::LengthOverflow)?;
    let mut buf: Vec<char> = Vec::with_capacity(len);
    buf.extend(std::iter::repeat_n('a', d0.min(len)));
    if buf.len() < len {
        buf.push('b');
    }
    let (mut prev_len, mut cur_len) = (1usize, d0.saturating_add(1));
    let mut n = 1;
    while buf.len() < len {
        let reps = d.digit(n);
        let copy = |upto: usize, buf: &mut Vec<char>| {
            let take = upto.min(len - buf.len());
            buf.extend_from_within(..take);
        };
        for _ in 1..reps {
            if buf.len() >= len {
                break;
            }
            copy(cur_len, &mut buf);
        }
        if buf.len() < len {
            copy(prev_len, &mut buf);
        }
        let next = checked_len(reps, cur_len, prev_len).unwrap_or(usize::MAX);
        prev_len = cur_len;
        cur_len = next;
        n += 1;
    }
    Ok(Word::from_symbols(buf))
}

/// `u_1, ..., u_{n_max}` through `u_{n+1} = (u_n xy)^{d_n} u_{n-1}`, seeded
/// with `u_1 = a^{d_0 - 1}` and `u_2 = (u_1 ab)^{d_1} b^{-1}`.
pub fn u_words(d: &DirectiveSequence, n_max: usize) -> Result<Vec<Word>> {
    if n_max < 1 {
        return Err(Error::OutOfRange("n_max must be at least 1".into()));
    }
    let mut out = vec![a_power(d.digit(0) - 1)?];
    if n_max >= 2 {
        let s1 = out[0].concat(&Word::from("ab"));
        let len = checked_len(d.digit(1), s1.len(), 0)?;
        check_len(len)?;
        let repeated = s1.repeat(d.digit(1) as usize);
        out.push(repeated.prefix(repeated.len() - 1));
    }
    for n in 2..n_max {
        let (x, y) = letters(n);
        let head = out[n - 1].with(x).with(y);
        let reps = d.digit(n);
        let len = checked_len(reps, head.len(), out[n - 2].len())?;
        check_len(len)?;
        out.push(head.repeat(reps as usize).concat(&out[n - 2]));
    }
    Ok(out)
}

/// `|s_{-1}|, |s_0|, |s_1|, ...` while the lengths stay at most `limit`, plus
/// the first length exceeding it.
pub(crate) fn standard_lengths(d: &DirectiveSequence, limit: usize) -> Vec<usize> {
    let mut lens = vec![1usize, 1usize];
    let mut n = 0;
    while *lens.last().unwrap() <= limit {
        let cur = lens[lens.len() - 1];
        let prev = lens[lens.len() - 2];
        lens.push(checked_len(d.digit(n), cur, prev).unwrap_or(usize::MAX));
        n += 1;
    }
    lens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dir(s: &str) -> DirectiveSequence {
        s.parse().unwrap()
    }

    fn strings(words: &[Word]) -> Vec<String> {
        words.iter().map(Word::to_string).collect()
    }

    #[test]
    fn fibonacci_prefix() {
        assert_eq!(
            standard_prefix(&dir("1"), 21).unwrap().to_string(),
            "abaababaabaababaababa"
        );
    }

    #[test]
    fn table_word_prefix() {
        assert_eq!(
            standard_prefix(&dir("2,2,1"), 15).unwrap().to_string(),
            "aabaabaaabaabaa"
        );
        assert_eq!(standard_prefix(&dir("3"), 3).unwrap().to_string(), "aaa");
        assert!(standard_prefix(&dir("3"), 0).is_err());
    }

    #[test]
    fn standard_words_examples() {
        assert_eq!(
            strings(&standard_words(&dir("1"), 3).unwrap()),
            ["b", "a", "ab", "aba", "abaab"]
        );
        assert_eq!(
            strings(&standard_words(&dir("2"), 1).unwrap()),
            ["b", "a", "aab"]
        );
        assert_eq!(
            strings(&standard_words(&dir("5,1"), 0).unwrap()),
            ["b", "a"]
        );
        assert_eq!(strings(&standard_words(&dir("5,1"), -1).unwrap()), ["b"]);
        assert!(standard_words(&dir("1"), -2).is_err());
    }

    #[test]
    fn u_words_examples() {
        assert_eq!(
            strings(&u_words(&dir("1"), 5).unwrap()),
            ["", "a", "aba", "abaaba", "abaababaaba"]
        );
        assert_eq!(strings(&u_words(&dir("2,2,1"), 2).unwrap()), ["a", "aabaa"]);
        assert_eq!(strings(&u_words(&dir("3"), 1).unwrap()), ["aa"]);
    }

    #[test]
    fn prefix_agrees_with_last_standard_word() {
        for d in ["1", "2,2,1", "3,1,4", "1,5", "4"] {
            let d = dir(d);
            let words = standard_words(&d, 7).unwrap();
            let last = words.last().unwrap();
            assert_eq!(&standard_prefix(&d, last.len()).unwrap(), last);
            for (i, s) in words.iter().enumerate().skip(2) {
                assert!(last.starts_with(s), "s_{} not a prefix", i as isize - 1);
            }
        }
    }

    #[test]
    fn sequence_state_tracks_u() {
        let d = dir("2,3");
        let mut seq = StandardSequence::new(&d);
        assert_eq!(seq.u_current(), None);
        seq.advance().unwrap();
        assert_eq!(seq.current().to_string(), "aab");
        assert_eq!(seq.u_current().unwrap().to_string(), "a");
        seq.advance().unwrap();
        assert_eq!(seq.previous().to_string(), "aab");
        assert_eq!(seq.current().to_string(), "aabaabaaba");
    }

    #[test]
    fn overflow_is_reported() {
        let d = DirectiveSequence::new(vec![u64::MAX]).unwrap();
        let mut seq = StandardSequence::new(&d);
        assert!(seq.advance().is_err());
    }

    #[test]
    fn lengths_cover_limit() {
        let lens = standard_lengths(&dir("1"), 10);
        assert_eq!(lens, vec![1, 1, 2, 3, 5, 8, 13]);
    }
}
