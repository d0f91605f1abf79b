//! Word polynomials with the shuffle and infiltration products.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::words::{Alphabet, BigCount, Letter, Word};

/// Formal sum of words with positive integer coefficients.
///
/// Terms iterate in lexicographic order of their words; zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordPolynomial {
    terms: BTreeMap<Word, BigCount>,
}

impl WordPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(w: Word) -> Self {
        let mut p = Self::new();
        p.add_term(w, BigCount::from(1u32));
        p
    }

    pub fn add_term(&mut self, w: Word, coefficient: BigCount) {
        if coefficient.is_zero() {
            return;
        }
        *self.terms.entry(w).or_default() += coefficient;
    }

    /// The coefficient `(P, v)`; zero for absent words.
    pub fn coefficient(&self, v: &Word) -> BigCount {
        self.terms.get(v).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &BigCount)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> BigCount {
        self.terms.values().sum()
    }

    /// Lexicographically largest word with a non-zero coefficient.
    pub fn max_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    fn append_letter(&self, letter: Letter) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut letters = w.letters().to_vec();
                letters.push(letter);
                (Word::from_letters(w.alphabet(), letters), c.clone())
            })
            .collect();
        WordPolynomial { terms }
    }

    /// Parses the `c1*w1 + c2*w2` form produced by `Display`.
    pub fn parse(alphabet: &Arc<Alphabet>, s: &str) -> Result<Self> {
        let mut p = Self::new();
        let s = s.trim();
        if s == "0" {
            return Ok(p);
        }
        for term in s.split(" + ") {
            let (c, w) = term
                .split_once('*')
                .ok_or_else(|| Error::Parse(format!("term {term:?} lacks a coefficient")))?;
            let c: BigCount = c
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            let w = w.trim();
            let w = if w == "ε" {
                Word::empty(alphabet)
            } else {
                Word::parse(alphabet, w)?
            };
            p.add_term(w, c);
        }
        Ok(p)
    }
}

impl AddAssign<&WordPolynomial> for WordPolynomial {
    fn add_assign(&mut self, rhs: &WordPolynomial) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl Add for WordPolynomial {
    type Output = WordPolynomial;

    fn add(mut self, rhs: WordPolynomial) -> WordPolynomial {
        self += &rhs;
        self
    }
}

impl fmt::Display for WordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if w.is_empty() {
                write!(f, "{c}*ε")?;
            } else {
                write!(f, "{c}*{w}")?;
            }
        }
        Ok(())
    }
}

/// The shuffle product `u1 ⧢ u2`.
pub fn shuffle(u1: &Word, u2: &Word) -> Result<WordPolynomial> {
    interleave(u1, u2, false)
}

/// The infiltration product `u1 ↓ u2`.
pub fn infiltrate(u1: &Word, u2: &Word) -> Result<WordPolynomial> {
    interleave(u1, u2, true)
}

// Suffix recursion: P(i, j) = P(i-1, j)·x_i + P(i, j-1)·y_j, plus
// P(i-1, j-1)·x_i when merging is allowed and x_i = y_j.
fn interleave(u1: &Word, u2: &Word, merge: bool) -> Result<WordPolynomial> {
    u1.check_same_alphabet(u2)?;
    let (x, y) = (u1.letters(), u2.letters());
    let alphabet = u1.alphabet();
    let mut prev: Vec<WordPolynomial> = (0..=y.len())
        .map(|j| WordPolynomial::monomial(Word::from_letters(alphabet, y[..j].to_vec())))
        .collect();
    for i in 1..=x.len() {
        let mut row = Vec::with_capacity(y.len() + 1);
        row.push(WordPolynomial::monomial(Word::from_letters(
            alphabet,
            x[..i].to_vec(),
        )));
        for j in 1..=y.len() {
            let mut cell = prev[j].append_letter(x[i - 1]);
            cell += &row[j - 1].append_letter(y[j - 1]);
            if merge && x[i - 1] == y[j - 1] {
                cell += &prev[j - 1].append_letter(x[i - 1]);
            }
            row.push(cell);
        }
        prev = row;
    }
    Ok(prev.pop().expect("row has at least one cell"))
}
