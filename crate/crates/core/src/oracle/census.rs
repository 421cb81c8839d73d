//! Grouping balanced words by oc-sequence.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::oc::compute_oc_sequence;
use crate::oracle::{all_words, enumerate, naive_is_balanced, EnumerationSpec, Filter};
use crate::word::{Alphabet, Word};

pub const CENSUS_MAX_N: usize = 16;
pub const WITNESS_MAX_N: usize = 14;

/// Balanced words of one length sharing one oc-sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusClass {
    pub oc: String,
    pub members: Vec<Word>,
}

impl CensusClass {
    /// Two members that are neither equal nor exchanged by `a <-> b`.
    pub fn violation(&self) -> Option<(&Word, &Word)> {
        for (i, u) in self.members.iter().enumerate() {
            for v in &self.members[i + 1..] {
                if *v != u.swap_ab() {
                    return Some((u, v));
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthSummary {
    pub length: usize,
    pub words: usize,
    pub classes: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    /// Classes ordered by length, then by oc-sequence.
    pub classes: Vec<CensusClass>,
    pub summary: Vec<LengthSummary>,
}

impl CensusReport {
    pub fn violations(&self) -> impl Iterator<Item = &CensusClass> {
        self.classes.iter().filter(|c| c.violation().is_some())
    }

    pub fn class_of(&self, oc: &str) -> Option<&CensusClass> {
        self.classes.iter().find(|c| c.oc == oc)
    }

    pub fn render_table(&self) -> String {
        let mut out = format!(
            "{:>6} {:>8} {:>8} {:>10}\n",
            "length", "words", "classes", "violations"
        );
        for s in &self.summary {
            let _ = writeln!(
                out,
                "{:>6} {:>8} {:>8} {:>10}",
                s.length, s.words, s.classes, s.violations
            );
        }
        out
    }

    /// One class per line: the oc-sequence, a tab, the members joined by
    /// commas.
    pub fn render_records(&self) -> String {
        let mut out = String::new();
        for c in &self.classes {
            let members: Vec<String> = c.members.iter().map(Word::to_string).collect();
            let _ = writeln!(out, "{}\t{}", c.oc, members.join(","));
        }
        out
    }
}

/// Groups the balanced words over `{a, b}` of each length `1..=n` by
/// oc-sequence.
pub fn uniqueness_census(n: usize) -> Result<CensusReport> {
    if n > CENSUS_MAX_N {
        return Err(Error::OutOfRange(format!(
            "census length {n} exceeds the bound {CENSUS_MAX_N}"
        )));
    }
    let words = enumerate(&EnumerationSpec::new(
        Alphabet::binary(),
        n,
        Filter::Balanced,
    ))?;
    let mut by_length: BTreeMap<usize, BTreeMap<String, Vec<Word>>> = BTreeMap::new();
    for w in words {
        by_length
            .entry(w.len())
            .or_default()
            .entry(compute_oc_sequence(&w).to_string())
            .or_default()
            .push(w);
    }
    let mut report = CensusReport {
        classes: Vec::new(),
        summary: Vec::new(),
    };
    for (length, groups) in by_length {
        let mut summary = LengthSummary {
            length,
            words: 0,
            classes: groups.len(),
            violations: 0,
        };
        for (oc, members) in groups {
            let class = CensusClass { oc, members };
            summary.words += class.members.len();
            summary.violations += usize::from(class.violation().is_some());
            report.classes.push(class);
        }
        report.summary.push(summary);
    }
    Ok(report)
}

/// An unbalanced word and a balanced, non-isomorphic one with the same
/// oc-sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    pub unbalanced: Word,
    pub balanced: Word,
    pub oc: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WitnessReport {
    pub pairs: Vec<WitnessPair>,
}

impl WitnessReport {
    pub fn render_records(&self) -> String {
        let mut out = String::new();
        for p in &self.pairs {
            let _ = writeln!(out, "{}\t{}\t{}", p.oc, p.unbalanced, p.balanced);
        }
        out
    }
}

/// For every unbalanced word over `{a, b}` of length at most `n` starting
/// with `a`, the balanced words starting with `a` sharing its oc-sequence.
/// Each pair shows that admitting the unbalanced word breaks uniqueness.
pub fn maximality_witness(n: usize) -> Result<WitnessReport> {
    if n > WITNESS_MAX_N {
        return Err(Error::OutOfRange(format!(
            "witness length {n} exceeds the bound {WITNESS_MAX_N}"
        )));
    }
    let mut balanced: BTreeMap<String, Vec<Word>> = BTreeMap::new();
    let mut unbalanced = Vec::new();
    for w in all_words(&['a', 'b'], n) {
        if w.is_empty() || w[0] != 'a' {
            continue;
        }
        let oc = compute_oc_sequence(&w).to_string();
        if naive_is_balanced(&w) {
            balanced.entry(oc).or_default().push(w);
        } else {
            unbalanced.push((oc, w));
        }
    }
    let mut report = WitnessReport::default();
    for (oc, s) in unbalanced {
        for t in balanced.get(&oc).into_iter().flatten() {
            if *t != s && *t != s.swap_ab() {
                report.pairs.push(WitnessPair {
                    unbalanced: s.clone(),
                    balanced: t.clone(),
                    oc: oc.clone(),
                });
            }
        }
    }
    Ok(report)
}
