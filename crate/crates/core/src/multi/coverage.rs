//! Deciding whether projections onto given letter subsets determine every
//! word: they do iff every pair of letters lies together in some subset.

use std::sync::Arc;

use crate::error::Result;
use crate::words::{Alphabet, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coverage {
    Reconstructible,
    /// Two distinct words with equal projections onto every subset.
    Witness(Word, Word),
}

/// Per-letter incidence bitsets over the subsets.
fn incidence(q: usize, sets: &[Vec<Letter>]) -> Vec<Vec<u64>> {
    let words = sets.len().div_ceil(64);
    let mut rows = vec![vec![0u64; words]; q];
    for (i, set) in sets.iter().enumerate() {
        for &l in set {
            if let Some(row) = rows.get_mut(l as usize) {
                row[i / 64] |= 1 << (i % 64);
            }
        }
    }
    rows
}

/// First pair `(a, b)`, `a < b`, lying in no common subset.
pub fn uncovered_pair(alphabet: &Alphabet, sets: &[Vec<Letter>]) -> Option<(Letter, Letter)> {
    let q = alphabet.size();
    let rows = incidence(q, sets);
    for a in 0..q {
        for b in a + 1..q {
            if rows[a].iter().zip(&rows[b]).all(|(x, y)| x & y == 0) {
                return Some((a as Letter, b as Letter));
            }
        }
    }
    None
}

/// Decides the coverage condition in `O(q² k / 64)` word operations. For an
/// uncovered pair `a < b` the witness is `a b t` against `b a t`, `t` the
/// other letters in alphabet order.
pub fn coverage_decide(alphabet: &Arc<Alphabet>, sets: &[Vec<Letter>]) -> Coverage {
    match uncovered_pair(alphabet, sets) {
        None => Coverage::Reconstructible,
        Some((a, b)) => {
            let rest: Vec<Letter> = alphabet.letters().filter(|&l| l != a && l != b).collect();
            let build = |x, y| {
                let mut letters = vec![x, y];
                letters.extend(&rest);
                Word::from_letters(alphabet, letters)
            };
            Coverage::Witness(build(a, b), build(b, a))
        }
    }
}

/// One subset per non-blank line, written as its symbols.
pub fn parse_sets(alphabet: &Alphabet, text: &str) -> Result<Vec<Vec<Letter>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| alphabet.parse_letters(l))
        .collect()
}
