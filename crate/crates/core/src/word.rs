//! Finite words over small alphabets.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite word. Symbols are single characters; the empty word is allowed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<char>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<char>) -> Self {
        Word(symbols)
    }

    /// Parses a contiguous text token. Whitespace and control characters are
    /// rejected; any other character is a symbol.
    pub fn parse(token: &str) -> Result<Self> {
        if token.chars().any(|c| c.is_whitespace() || c.is_control()) {
            return Err(Error::InvalidWordToken(token.to_string()));
        }
        Ok(Word(token.chars().collect()))
    }

    /// Parses a token and checks every symbol against a declared alphabet.
    pub fn parse_over(token: &str, alphabet: &Alphabet) -> Result<Self> {
        let word = Self::parse(token)?;
        word.check_alphabet(alphabet)?;
        Ok(word)
    }

    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        match self.0.iter().find(|c| !alphabet.contains(**c)) {
            Some(&symbol) => Err(Error::SymbolNotInAlphabet {
                symbol,
                alphabet: alphabet.to_string(),
            }),
            None => Ok(()),
        }
    }

    pub fn symbols(&self) -> &[char] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<char> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The prefix of length `len` (clamped to the word length).
    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len.min(self.len())].to_vec())
    }

    pub fn suffix(&self, len: usize) -> Word {
        let len = len.min(self.len());
        Word(self.0[self.len() - len..].to_vec())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.0.starts_with(&other.0)
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.0.ends_with(&other.0)
    }

    /// `self` followed by a single symbol.
    pub fn with(&self, symbol: char) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + 1);
        symbols.extend_from_slice(&self.0);
        symbols.push(symbol);
        Word(symbols)
    }

    /// A single symbol followed by `self`.
    pub fn preceded_by(&self, symbol: char) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + 1);
        symbols.push(symbol);
        symbols.extend_from_slice(&self.0);
        Word(symbols)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.0);
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// The sorted set of distinct symbols occurring in the word.
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.0.iter().copied())
    }

    /// Applies the letter exchange `a <-> b`, leaving other symbols alone.
    pub fn swap_ab(&self) -> Word {
        Word(
            self.0
                .iter()
                .map(|&c| match c {
                    'a' => 'b',
                    'b' => 'a',
                    other => other,
                })
                .collect(),
        )
    }

    /// Whether the two words differ only by a renaming of their letters.
    pub fn is_isomorphic(&self, other: &Word) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut forward = std::collections::HashMap::new();
        let mut backward = std::collections::HashMap::new();
        self.0.iter().zip(&other.0).all(|(&x, &y)| {
            *forward.entry(x).or_insert(y) == y && *backward.entry(y).or_insert(x) == x
        })
    }
}

impl Index<usize> for Word {
    type Output = char;

    fn index(&self, index: usize) -> &char {
        &self.0[index]
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl From<&str> for Word {
    /// Infallible conversion for literals; panics on whitespace.
    fn from(s: &str) -> Self {
        Word::parse(s).expect("word literal must not contain whitespace")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{self}")
        }
    }
}

/// A finite alphabet, kept sorted and free of duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet(Vec<char>);

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Self {
        let mut symbols: Vec<char> = symbols.into_iter().collect();
        symbols.sort_unstable();
        symbols.dedup();
        Alphabet(symbols)
    }

    /// The two-letter alphabet `{a, b}` used by all Sturmian routines.
    pub fn binary() -> Self {
        Alphabet(vec!['a', 'b'])
    }

    pub fn contains(&self, symbol: char) -> bool {
        self.0.binary_search(&symbol).is_ok()
    }

    pub fn symbols(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether this alphabet is a subset of `{a, b}`.
    pub fn is_binary_ab(&self) -> bool {
        self.0.iter().all(|&c| c == 'a' || c == 'b')
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}
