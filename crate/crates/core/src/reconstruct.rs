//! Linear-time reconstruction of a finite Sturmian word from its
//! oc-sequence.
//!
//! The word starting with `a` is rebuilt letter by letter together with its
//! border array: a closed prefix extends the longest border, and an open one
//! takes the letter that keeps the period fixed.

use crate::border::BorderArray;
use crate::error::{Error, Result};
use crate::oc::{compute_oc_sequence, OcSequence};
use crate::sturmian::is_balanced_linear;
use crate::word::Word;

/// The Sturmian word starting with `a` whose oc-sequence is `oc`.
///
/// The result is checked with [`validate_roundtrip`]; an oc-sequence no
/// Sturmian word realizes yields [`Error::NotSturmianOc`].
pub fn reconstruct(oc: &OcSequence) -> Result<Word> {
    reconstruct_with_borders(oc, true).map(|(w, _)| w)
}

/// Runs the reconstruction without the final check. On an oc-sequence that
/// no Sturmian word realizes the output is some word, but not a meaningful
/// one.
pub fn reconstruct_unchecked(oc: &OcSequence) -> Result<Word> {
    reconstruct_with_borders(oc, false).map(|(w, _)| w)
}

/// The reconstructed word along with the border array built on the way.
pub fn reconstruct_with_borders(oc: &OcSequence, validate: bool) -> Result<(Word, BorderArray)> {
    if oc.is_empty() || !oc.get(1) {
        return Err(Error::InvalidOcStart);
    }
    let n = oc.len();
    let bits = oc.bits();
    // 1-based with a sentinel at index 0: B[0] = -1, w[0] = b.
    let mut b: Vec<isize> = Vec::with_capacity(n + 1);
    let mut w: Vec<char> = Vec::with_capacity(n + 1);
    b.extend([-1, 0]);
    w.extend(['b', 'a']);
    let mut ones: isize = 0;
    let mut j: Option<isize> = None;
    for i in 2..=n {
        let prev = b[i - 1];
        let next = if bits[i - 1] || prev < ones {
            prev + 1
        } else {
            if bits[i - 2] {
                ones = prev;
                let x = w[ones as usize + 1];
                let mut k = b[ones as usize];
                while k >= 0 && w[k as usize + 1] == x {
                    k = b[k as usize];
                }
                j = Some(k);
            }
            // The first 0 always follows a 1, so the cursor is set by now.
            j.expect("scan cursor assigned at the first 1->0 transition") + 1
        };
        b.push(next);
        w.push(w[next as usize]);
    }
    w.remove(0);
    let word = Word::from_symbols(w);
    if validate && !validate_roundtrip(oc, &word) {
        return Err(Error::NotSturmianOc(oc.to_string()));
    }
    let borders = b[1..].iter().map(|&v| v as usize).collect();
    Ok((word, BorderArray::from_entries(borders)))
}

/// `oc(w) = oc` and `w` is balanced.
pub fn validate_roundtrip(oc: &OcSequence, w: &Word) -> bool {
    compute_oc_sequence(w) == *oc && is_balanced_linear(w).unwrap_or(false)
}
