//! Standard Sturmian words and the structure of their oc-sequences.
//!
//! All words here are over `{a, b}` and start with `a` (`d_0 >= 1`).

pub mod balance;
pub mod closed_form;
mod directive;
pub mod predicates;
pub mod standard;
pub mod structure;

pub use balance::{is_balanced, is_balanced_by_palindromes, is_balanced_linear};
pub use closed_form::{
    continuant, oc_closed_form, ocst_shape_test, run_lengths_closed_form, ContinuantTable,
    HalfRunLengths,
};
pub use directive::DirectiveSequence;
pub use predicates::{
    classify, is_central, is_left_special_sturmian, is_right_special_sturmian, is_semicentral,
    is_semicentral_by_definition, is_strictly_bispecial, Classification,
};
pub use standard::{standard_prefix, standard_words, u_words, StandardSequence};
pub use structure::{
    central_prefixes, reversed_standard_half, run_boundaries, semicentral_prefixes,
    square_factorization, Boundary, BoundaryKind, SquareFactorization,
};
