//! Reconstruction of finite words from counts of scattered-factor occurrences.
//!
//! The crate covers the word algebra behind the counts (shuffle, infiltration,
//! reduction to Lyndon words), reconstruction of binary words from the counts
//! of `a^ℓ b`, an adaptive query game built on it, reconstruction over larger
//! alphabets from pairwise projections, and exact evaluation of query-count
//! bounds.

pub mod binary;
pub mod bounds;
pub mod combinatorics;
pub mod error;
pub mod formats;
pub mod lyndon;
pub mod multi;
pub mod polynomial;
pub mod protocol;
pub mod words;

pub use binary::{
    reconstruct_binary, BinaryOutcome, BlockDecomposition, BlockOutcome, BlockSystem, Orientation,
};
pub use error::{Error, Result};
pub use lyndon::{
    eval_reduction, is_lyndon, lyndon_split, lyndon_words, reduce_to_lyndon, LyndonExpression,
};
pub use polynomial::{infiltrate, shuffle, WordPolynomial};
pub use protocol::{
    adaptive_reconstruct, nonadaptive_set, replay, Oracle, Outcome, QueryTranscript, WordOracle,
};
pub use words::{
    find_confusable, is_uniquely_determined_brute, parikh, scattered_factor_count, Alphabet,
    BigCount, Letter, Word,
};
