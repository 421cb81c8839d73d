//! Open and closed prefixes of finite words.
//!
//! A word is *closed* when it is empty or a complete return to its longest
//! border; otherwise it is *open*. The oc-sequence of a word records, for
//! every prefix, whether that prefix is closed. This crate computes
//! oc-sequences in linear time, generates standard Sturmian words from their
//! directive sequences, gives closed forms for their oc-sequences, and
//! reconstructs a finite Sturmian word from its oc-sequence.
//!
//! Every fast routine has a brute-force counterpart in [`oracle`] used for
//! exhaustive verification on short words.

pub mod border;
pub mod cli;
mod error;
pub mod oc;
pub mod oracle;
pub mod reconstruct;
pub mod sturmian;
pub mod word;

pub use border::{compute_border_array, exponent, longest_border, period, BorderArray};
pub use error::{Error, Result};
pub use oc::{
    check_run_inequality, closed_extension, complete_return_root, compute_oc_sequence, is_closed,
    runs, OcSequence, Run, RunLengths,
};
pub use reconstruct::{
    reconstruct, reconstruct_unchecked, reconstruct_with_borders, validate_roundtrip,
};
pub use sturmian::DirectiveSequence;
pub use word::{Alphabet, Word};
