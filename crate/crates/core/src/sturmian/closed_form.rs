//! Continuants and the closed form of the oc-sequence of a standard word.
//!
//! For a standard word with directive `(d_0, d_1, ...)` the oc-sequence is
//! `1^{k_0} 0^{k_0} 1^{k_1} 0^{k_1} ...` where `k_0 = d_0` and
//! `k_n = K[1, d_0, ..., d_{n-1}, d_n - 1]`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::oc::{runs, OcSequence};
use crate::sturmian::DirectiveSequence;

/// `K[a_0, ..., a_n]`, with `K[] = 1` and `K[a_0] = a_0`.
pub fn continuant(seq: &[u64]) -> BigUint {
    ContinuantTable::new(seq).last().clone()
}

/// Continuants of every prefix of an integer sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuantTable {
    /// `values[j]` is the continuant of the first `j` entries.
    values: Vec<BigUint>,
}

impl ContinuantTable {
    pub fn new(seq: &[u64]) -> Self {
        let mut table = ContinuantTable {
            values: vec![BigUint::one()],
        };
        for &a in seq {
            table.push(a);
        }
        table
    }

    /// Appends `a_j`: `K[.., a_j] = a_j K[.., a_{j-1}] + K[.., a_{j-2}]`.
    pub fn push(&mut self, a: u64) {
        let n = self.values.len();
        let next = if n == 1 {
            BigUint::from(a)
        } else {
            &self.values[n - 1] * a + &self.values[n - 2]
        };
        self.values.push(next);
    }

    /// Continuant of the first `len` entries.
    pub fn get(&self, len: usize) -> &BigUint {
        &self.values[len]
    }

    pub fn last(&self) -> &BigUint {
        self.values.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Lazily produces `k_0, k_1, ...`.
#[derive(Clone, Debug)]
pub struct HalfRunLengths {
    directive: DirectiveSequence,
    /// Continuants of `[1, d_0, ..., d_{n-1}]`, i.e. the lengths `|s_n|`.
    lengths: ContinuantTable,
    n: usize,
}

impl HalfRunLengths {
    pub fn new(directive: &DirectiveSequence) -> Self {
        HalfRunLengths {
            directive: directive.clone(),
            lengths: ContinuantTable::new(&[1]),
            n: 0,
        }
    }
}

impl Iterator for HalfRunLengths {
    type Item = BigUint;

    fn next(&mut self) -> Option<BigUint> {
        let n = self.n;
        let d_n = self.directive.digit(n);
        let k = if n == 0 {
            BigUint::from(d_n)
        } else {
            // One more recurrence step on [1, d_0, ..., d_{n-1}] with d_n - 1.
            self.lengths.get(n + 1) * (d_n - 1) + self.lengths.get(n)
        };
        self.lengths.push(d_n);
        self.n += 1;
        Some(k)
    }
}

/// `(k_0, ..., k_{m-1})`.
pub fn run_lengths_closed_form(d: &DirectiveSequence, m: usize) -> Result<Vec<BigUint>> {
    if m == 0 {
        return Err(Error::OutOfRange(
            "at least one run length is required".into(),
        ));
    }
    Ok(HalfRunLengths::new(d).take(m).collect())
}

/// The length-`len` prefix of `prod_n 1^{k_n} 0^{k_n}`.
pub fn oc_closed_form(d: &DirectiveSequence, len: usize) -> Result<OcSequence> {
    if len == 0 {
        return Err(Error::OutOfRange("prefix length must be at least 1".into()));
    }
    let mut bits = Vec::with_capacity(len);
    for k in HalfRunLengths::new(d) {
        let k = k.to_usize().unwrap_or(usize::MAX);
        for bit in [true, false] {
            let take = k.min(len - bits.len());
            bits.extend(std::iter::repeat_n(bit, take));
        }
        if bits.len() == len {
            break;
        }
    }
    Ok(OcSequence::from_bits(bits))
}

/// For `oc = 1^{k_0} 0^{k'_0} ... 1^{k_n} 0^{k'_n} 1^{m}` (with `m >= 1`),
/// whether `k_j = k'_j` for every `j`. Words with such an oc-sequence are
/// prefixes of standard words exactly when this holds.
pub fn ocst_shape_test(oc: &OcSequence) -> Result<bool> {
    if oc.is_empty() || !oc.get(1) {
        return Err(Error::InvalidOcStart);
    }
    if oc.last() != Some(true) {
        return Err(Error::ShapeMismatch(oc.to_string()));
    }
    let r = runs(oc);
    let complete = &r.runs()[..r.len() - 1];
    Ok(complete.chunks(2).all(|pair| pair[0].len == pair[1].len))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dir(s: &str) -> DirectiveSequence {
        s.parse().unwrap()
    }

    fn nat(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    /// Continuants straight from the three-term definition, recursively.
    fn continuant_by_definition(seq: &[u64]) -> BigUint {
        match seq.len() {
            0 => BigUint::one(),
            1 => BigUint::from(seq[0]),
            n => {
                continuant_by_definition(&seq[..n - 1]) * seq[n - 1]
                    + continuant_by_definition(&seq[..n - 2])
            }
        }
    }

    #[test]
    fn continuant_examples() {
        assert_eq!(continuant(&[]), BigUint::from(1u32));
        assert_eq!(continuant(&[1, 1]), BigUint::from(2u32));
        assert_eq!(continuant(&[1, 2, 1]), BigUint::from(4u32));
        assert_eq!(continuant(&[1, 2, 2, 0]), BigUint::from(3u32));
    }

    #[test]
    fn continuant_is_arbitrary_precision() {
        let seq = vec![1u64; 200];
        let k = continuant(&seq);
        // K[1^n] is the Fibonacci number F_{n+1}.
        let (mut a, mut b) = (BigUint::one(), BigUint::one());
        for _ in 1..200 {
            let c = &a + &b;
            a = b;
            b = c;
        }
        assert_eq!(k, b);
        assert!(k.bits() > 128);
    }

    #[test]
    fn table_matches_definition() {
        let seq = [3u64, 1, 4, 1, 5, 0, 2, 6];
        let table = ContinuantTable::new(&seq);
        for j in 0..=seq.len() {
            assert_eq!(table.get(j), &continuant_by_definition(&seq[..j]));
        }
    }

    #[test]
    fn half_runs_match_the_continuant_formula() {
        for d in ["1", "2,2,1", "3,1,4,1,5", "1,2,3"] {
            let d = dir(d);
            let ks = run_lengths_closed_form(&d, 8).unwrap();
            assert_eq!(ks[0], BigUint::from(d.digit(0)));
            for (n, k) in ks.iter().enumerate().skip(1) {
                let mut seq = vec![1];
                seq.extend((0..n).map(|i| d.digit(i)));
                seq.push(d.digit(n) - 1);
                assert_eq!(*k, continuant_by_definition(&seq), "k_{n} for {d}");
            }
        }
    }

    #[test]
    fn run_length_examples() {
        let ks = run_lengths_closed_form(&dir("2,2,1"), 3).unwrap();
        assert_eq!(ks, nat(&[2, 4, 3]));
        assert_eq!(
            run_lengths_closed_form(&dir("1"), 6).unwrap(),
            nat(&[1, 1, 2, 3, 5, 8])
        );
        assert_eq!(run_lengths_closed_form(&dir("1"), 1).unwrap(), nat(&[1]));
        assert!(run_lengths_closed_form(&dir("1"), 0).is_err());
    }

    #[test]
    fn oc_closed_form_examples() {
        assert_eq!(
            oc_closed_form(&dir("2,2,1"), 15).unwrap().to_string(),
            "110011110000111"
        );
        assert_eq!(
            oc_closed_form(&dir("1"), 8).unwrap().to_string(),
            "10101100"
        );
        assert_eq!(oc_closed_form(&dir("7,2"), 1).unwrap().to_string(), "1");
    }

    #[test]
    fn shape_test_examples() {
        let oc = |s: &str| s.parse::<OcSequence>().unwrap();
        assert_eq!(ocst_shape_test(&oc("110011110000111")), Ok(true));
        assert_eq!(ocst_shape_test(&oc("11001101")), Ok(false));
        assert_eq!(ocst_shape_test(&oc("1")), Ok(true));
        assert_eq!(ocst_shape_test(&oc("")), Err(Error::InvalidOcStart));
        assert_eq!(ocst_shape_test(&oc("01")), Err(Error::InvalidOcStart));
        assert!(matches!(
            ocst_shape_test(&oc("10")),
            Err(Error::ShapeMismatch(_))
        ));
    }
}
