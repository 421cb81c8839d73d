//! Exhaustive invariant suites, shared by `ocwords selftest` and the
//! acceptance tests.
//!
//! Every suite walks all words up to a length bound and counts violations.

use std::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;

use crate::border::{compute_border_array, exponent, period};
use crate::error::{Error, Result};
use crate::oc::{check_run_inequality, closed_extension, compute_oc_sequence, is_closed};
use crate::oracle::{
    all_words, enumerate, naive_is_balanced, naive_is_closed, naive_is_closed_by_border,
    naive_is_closed_by_repeated_prefix, naive_period, uniqueness_census, EnumerationSpec, Filter,
};
use crate::reconstruct::{reconstruct, reconstruct_with_borders};
use crate::sturmian::standard::letters;
use crate::sturmian::{
    continuant, is_balanced, is_balanced_by_palindromes, is_balanced_linear, is_central,
    is_right_special_sturmian, is_semicentral, is_semicentral_by_definition, oc_closed_form,
    ocst_shape_test, run_boundaries, semicentral_prefixes, square_factorization, standard_prefix,
    standard_words, u_words, BoundaryKind, DirectiveSequence,
};
use crate::word::{Alphabet, Word};

/// Largest `max_n` accepted by [`run_suites`].
pub const SUITES_MAX_N: usize = 16;
/// Ternary enumerations stop here whatever `max_n` is.
pub const TERNARY_MAX_N: usize = 9;
/// Longest central word fed to the central-prefix suite.
pub const CENTRAL_Q_MAX: usize = 8;

const KEPT_EXAMPLES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
    /// The first few violations, described.
    pub examples: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            checked: 0,
            violations: 0,
            examples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.examples.len() < KEPT_EXAMPLES {
                self.examples.push(describe());
            }
        }
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} checks)", self.name, self.checked)
        } else {
            write!(
                f,
                "FAIL {} ({} of {} checks violated; first: {})",
                self.name,
                self.violations,
                self.checked,
                self.examples.join("; ")
            )
        }
    }
}

fn corpus(binary_n: usize, ternary_n: usize) -> impl Iterator<Item = Word> {
    all_words(&['a', 'b'], binary_n).into_iter().chain(
        all_words(&['a', 'b', 'c'], ternary_n)
            .into_iter()
            .filter(|w| w.alphabet().len() == 3),
    )
}

fn binary(n: usize) -> impl Iterator<Item = Word> {
    all_words(&['a', 'b'], n).into_iter()
}

/// Nonempty balanced words over `{a, b}`, grown letter by letter.
fn balanced_binary(n: usize) -> impl Iterator<Item = Word> {
    enumerate(&EnumerationSpec::new(
        Alphabet::binary(),
        n,
        Filter::Balanced,
    ))
    .expect("balanced words stay far below the enumeration cap")
    .into_iter()
}

/// `is_closed` and the last oc bit agree with occurrence counting. Since
/// every prefix of an enumerated word is enumerated too, this covers every
/// bit of every oc-sequence.
pub fn closedness_oracle(binary_n: usize, ternary_n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("closedness matches the brute-force oracle");
    for w in corpus(binary_n, ternary_n) {
        let naive = naive_is_closed(&w);
        let oc = compute_oc_sequence(&w);
        r.check(
            is_closed(&w) == naive && oc.last().unwrap_or(true) == naive,
            || format!("{w:?}: fast {}, naive {naive}", is_closed(&w)),
        );
    }
    r
}

/// Closed iff the longest repeated prefix, or the longest border, has no
/// internal occurrence.
pub fn closedness_characterizations(binary_n: usize, ternary_n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("closedness characterizations agree");
    for w in corpus(binary_n, ternary_n) {
        let c = is_closed(&w);
        r.check(
            naive_is_closed_by_border(&w) == c && naive_is_closed_by_repeated_prefix(&w) == c,
            || format!("{w:?}"),
        );
    }
    r
}

/// Border array, period and the running maximum of borders.
pub fn border_laws(binary_n: usize, ternary_n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("border array laws");
    for w in corpus(binary_n, ternary_n) {
        let b = compute_border_array(&w);
        r.check(period(&w) == naive_period(&w), || format!("{w:?}: period"));
        if w.is_empty() {
            continue;
        }
        let oc = compute_oc_sequence(&w);
        r.check(oc.get(1), || format!("{w:?}: oc starts with 0"));
        let mut prev: isize = -1;
        let mut steps_ok = true;
        for (i, &m) in b.running_max().iter().enumerate() {
            let step = m as isize - prev;
            steps_ok &= (step == 0 || step == 1) && oc.get(i + 1) == (step == 1);
            prev = m as isize;
        }
        r.check(steps_ok, || format!("{w:?}: running maximum {b}"));
        let power = Word::from_symbols(vec![w[0]; w.len()]);
        r.check(compute_oc_sequence(&power).count_zeros() == 0, || {
            format!("{power:?} has an open prefix")
        });
    }
    r
}

pub fn run_inequality(binary_n: usize, ternary_n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("run inequality 1^t 0^s 1 => t <= s");
    for w in corpus(binary_n, ternary_n) {
        r.check(check_run_inequality(&compute_oc_sequence(&w)), || {
            format!("{w:?}")
        });
    }
    r
}

/// At most one letter closes a word; exactly one closes a closed word; a
/// closing letter keeps the period.
pub fn closed_extension_laws(binary_n: usize, ternary_n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("closed extensions");
    for (letters, n) in [
        (&['a', 'b'][..], binary_n),
        (&['a', 'b', 'c'][..], ternary_n),
    ] {
        let alphabet = Alphabet::new(letters.iter().copied());
        for w in all_words(letters, n).into_iter().skip(1) {
            let closing: Vec<char> = letters
                .iter()
                .copied()
                .filter(|&x| is_closed(&w.with(x)))
                .collect();
            let expected = if is_closed(&w) {
                1
            } else {
                closing.len().min(1)
            };
            r.check(closing.len() == expected, || {
                format!("{w:?} closed by {closing:?}")
            });
            r.check(
                closing.iter().all(|&x| period(&w.with(x)) == period(&w)),
                || format!("{w:?}: closing letter changes the period"),
            );
            r.check(
                closed_extension(&w, &alphabet) == Ok(closing.first().copied()),
                || format!("{w:?}: closed_extension"),
            );
        }
    }
    r
}

/// Closed words have period `1 + |oc|_0`; exponent at least 2 forces
/// closedness.
pub fn period_laws(binary_n: usize, ternary_n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("period and exponent laws");
    for w in corpus(binary_n, ternary_n).skip(1) {
        let closed = is_closed(&w);
        if closed {
            let zeros = compute_oc_sequence(&w).count_zeros();
            r.check(period(&w) == 1 + zeros, || format!("{w:?}: period"));
        }
        let e = exponent(&w).expect("nonempty");
        if e >= Ratio::from_integer(2) {
            r.check(closed, || format!("{w:?}: exponent {e} but open"));
        }
    }
    r
}

/// The quadratic, palindrome and linear balance tests against the
/// definitional factor-pair comparison.
pub fn balance_agreement(n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("balance tests agree");
    for w in binary(n) {
        let naive = naive_is_balanced(&w);
        r.check(
            is_balanced(&w) == Ok(naive)
                && is_balanced_by_palindromes(&w) == Ok(naive)
                && is_balanced_linear(&w) == Ok(naive),
            || format!("{w:?}: naive {naive}"),
        );
    }
    r
}

/// Central words are closed palindromes, semicentral words are open, and
/// the semicentral form agrees with the defining property on balanced words.
pub fn central_semicentral_laws(n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("central words closed, semicentral words open");
    for w in binary(n) {
        if is_central(&w) == Ok(true) {
            r.check(w.is_palindrome() && is_closed(&w), || {
                format!("central {w:?}")
            });
        }
        let semi = is_semicentral(&w) == Ok(true);
        if semi {
            r.check(!is_closed(&w), || format!("semicentral {w:?} is closed"));
        }
        if naive_is_balanced(&w) {
            r.check(semi == is_semicentral_by_definition(&w), || {
                format!("{w:?}: semicentral form {semi}, definition disagrees")
            });
        }
    }
    r
}

/// For a nonempty right special Sturmian `w`, exactly one of `wa`, `wb` is
/// closed.
pub fn right_special_extensions(n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("right special words have one closed extension");
    for w in balanced_binary(n) {
        if is_right_special_sturmian(&w) == Ok(true) {
            let a = is_closed(&w.with('a'));
            let b = is_closed(&w.with('b'));
            r.check(a != b, || format!("{w:?}: wa closed {a}, wb closed {b}"));
        }
    }
    r
}

/// For every word whose oc-sequence ends in 1, the run-shape test decides
/// whether the word is a prefix of a standard word, i.e. left special.
pub fn prefix_shape(n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("oc shape characterizes prefixes of standard words");
    for w in binary(n).skip(1) {
        let oc = compute_oc_sequence(&w);
        if oc.last() != Some(true) {
            continue;
        }
        let left_special = is_balanced(&w.preceded_by('a')) == Ok(true)
            && is_balanced(&w.preceded_by('b')) == Ok(true);
        let shape = ocst_shape_test(&oc);
        r.check(shape == Ok(left_special), || {
            format!("{w:?}: oc {oc}, shape {shape:?}, left special {left_special}")
        });
    }
    r
}

/// For central `q` and letters `x != y`, every prefix of `(qxy)^5` longer
/// than `qxy` and ending in `xq` is central and equals
/// `(qxy)^m p = p (yxq)^m` for some `m > 0` and central `p`. Shorter
/// prefixes ending in `xq` (such as `a` for `q` empty) cannot have that form.
pub fn central_prefix_occurrences(q_max: usize) -> SuiteResult {
    let mut r = SuiteResult::new("prefixes of (qxy)^k ending in xq are central");
    for q in binary(q_max) {
        if is_central(&q) != Ok(true) {
            continue;
        }
        for (x, y) in [('a', 'b'), ('b', 'a')] {
            let qxy = q.with(x).with(y);
            let yxq = q.preceded_by(x).preceded_by(y);
            let xq = q.preceded_by(x);
            let big = qxy.repeat(5);
            for len in qxy.len() + 1..=big.len() {
                let pre = big.prefix(len);
                if !pre.ends_with(&xq) {
                    continue;
                }
                let decomposes = (1..=len / qxy.len()).any(|m| {
                    let p = pre.suffix(len - m * qxy.len());
                    pre.starts_with(&qxy.repeat(m))
                        && p.concat(&yxq.repeat(m)) == pre
                        && is_central(&p) == Ok(true)
                });
                r.check(is_central(&pre) == Ok(true) && decomposes, || {
                    format!("q = {q:?}, prefix {pre:?}")
                });
            }
        }
    }
    r
}

/// Reconstruction inverts the oc-sequence on balanced words starting with
/// `a`, and the border array it builds is the true one.
pub fn roundtrip(n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("reconstruction round trip");
    for w in balanced_binary(n).filter(|w| w[0] == 'a') {
        let oc = compute_oc_sequence(&w);
        let back = reconstruct(&oc);
        r.check(back.as_ref() == Ok(&w), || format!("{w:?} -> {back:?}"));
        let borders = reconstruct_with_borders(&oc, true).map(|(_, b)| b);
        r.check(borders == Ok(compute_border_array(&w)), || {
            format!("{w:?}: border array")
        });
    }
    r
}

/// No oc-class of balanced words holds two words other than a word and its
/// letter swap.
pub fn uniqueness(n: usize) -> SuiteResult {
    let mut r = SuiteResult::new("oc-sequence determines balanced words up to a <-> b");
    match uniqueness_census(n) {
        Ok(report) => {
            for class in &report.classes {
                r.check(class.violation().is_none(), || {
                    format!("class {} = {:?}", class.oc, class.members)
                });
            }
        }
        Err(e) => r.check(false, || e.to_string()),
    }
    r
}

/// Directives used by [`standard_laws`] inside [`run_suites`].
pub fn sample_directives() -> Vec<DirectiveSequence> {
    [
        "1",
        "2",
        "3",
        "2,2,1",
        "1,2",
        "2,1",
        "3,1,4,1,5",
        "1,1,2",
        "4,1",
        "1,4,2",
        "2,3",
        "5",
    ]
    .iter()
    .map(|s| s.parse().expect("valid directive"))
    .collect()
}

/// Structure of standard words for each directive: generation identities,
/// the closed form of the oc-sequence on a prefix of length `n_direct`, run
/// boundaries, and semicentral prefixes (found by scanning every prefix of
/// length at most `n_scan`).
pub fn standard_laws(
    directives: &[DirectiveSequence],
    n_direct: usize,
    n_scan: usize,
) -> SuiteResult {
    let mut r = SuiteResult::new("standard word structure");
    if n_direct == 0 {
        return r;
    }
    for d in directives {
        if let Err(e) = standard_case(&mut r, d, n_direct, n_scan) {
            r.check(false, || format!("{d}: {e}"));
        }
    }
    r
}

fn standard_case(
    r: &mut SuiteResult,
    d: &DirectiveSequence,
    n_direct: usize,
    n_scan: usize,
) -> Result<()> {
    let depth = 8;
    let s = standard_words(d, depth as isize)?;
    let u = u_words(d, depth)?;
    for n in 1..=depth {
        let s_n = &s[n + 1];
        let (x, y) = letters(n);
        r.check(
            u[n - 1] == s_n.prefix(s_n.len() - 2)
                && s_n.suffix(2) == Word::from_symbols(vec![x, y]),
            || format!("{d}: s_{n} = u_{n} xy"),
        );
        if n < depth {
            let left = u[n - 1].with(x).with(y).concat(&u[n]);
            let right = u[n].with(y).with(x).concat(&u[n - 1]);
            r.check(left == right, || {
                format!("{d}: u_{n} xy u_{} != u_{} yx u_{n}", n + 1, n + 1)
            });
        }
        let mut seq = vec![1];
        seq.extend((0..n).map(|i| d.digit(i)));
        r.check(continuant(&seq) == BigUint::from(s_n.len()), || {
            format!("{d}: |s_{n}| is not a continuant")
        });
    }

    let w = standard_prefix(d, n_direct)?;
    let oc = compute_oc_sequence(&w);
    r.check(oc_closed_form(d, n_direct)? == oc, || {
        format!("{d}: closed form at {n_direct}")
    });

    let flips: Vec<(usize, BoundaryKind)> = (2..=n_direct)
        .filter(|&i| oc.get(i) != oc.get(i - 1))
        .map(|i| {
            let kind = if oc.get(i) {
                BoundaryKind::OpenToClosed
            } else {
                BoundaryKind::ClosedToOpen
            };
            (i, kind)
        })
        .collect();
    let predicted: Vec<(usize, BoundaryKind)> = run_boundaries(d, n_direct)?
        .into_iter()
        .map(|b| (b.position, b.kind))
        .collect();
    r.check(flips == predicted, || {
        format!("{d}: run boundaries up to {n_direct}")
    });
    for &(pos, kind) in &predicted {
        if kind == BoundaryKind::OpenToClosed {
            let v = w.prefix(pos - 1);
            r.check(is_semicentral(&v) == Ok(true), || {
                format!("{d}: prefix {v:?} before an open->closed flip is not semicentral")
            });
        }
    }

    let n_scan = n_scan.min(n_direct);
    if n_scan > 0 {
        let scanned: Vec<Word> = (1..=n_scan)
            .map(|l| w.prefix(l))
            .filter(|v| is_semicentral(v) == Ok(true))
            .collect();
        r.check(scanned == semicentral_prefixes(d, n_scan)?, || {
            format!("{d}: semicentral prefixes up to {n_scan}")
        });
    }

    let f = square_factorization(d, 5)?;
    let fw = f.word();
    r.check(standard_prefix(d, fw.len())? == fw, || {
        format!("{d}: square factorization")
    });
    Ok(())
}

/// Every suite, with bounds derived from `max_n`.
pub fn run_suites(max_n: usize) -> Result<Vec<SuiteResult>> {
    if max_n > SUITES_MAX_N {
        return Err(Error::OutOfRange(format!(
            "max-n {max_n} exceeds the bound {SUITES_MAX_N}"
        )));
    }
    let ternary = max_n.min(TERNARY_MAX_N);
    let n_direct = if max_n == 0 {
        0
    } else {
        (1usize << max_n).min(2000)
    };
    Ok(vec![
        closedness_oracle(max_n, ternary),
        closedness_characterizations(max_n, ternary),
        border_laws(max_n, ternary),
        run_inequality(max_n, ternary),
        closed_extension_laws(max_n, ternary),
        period_laws(max_n, ternary),
        balance_agreement(max_n),
        central_semicentral_laws(max_n),
        right_special_extensions(max_n),
        prefix_shape(max_n),
        central_prefix_occurrences(max_n.min(CENTRAL_Q_MAX)),
        roundtrip(max_n),
        uniqueness(max_n),
        standard_laws(&sample_directives(), n_direct, 4 * max_n),
    ])
}
