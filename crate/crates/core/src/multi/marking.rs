//! K-valid markings: each occurrence of a letter `a` gets a mark in
//! `1..=k_a`, increasing from left to right within a word.

use std::fmt;

use num_traits::ToPrimitive;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::multi::projection::LetterBudget;
use crate::words::{Letter, Word};

/// Default limit on the number of markings enumerated by a search.
pub const DEFAULT_MARKING_CAP: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedWord {
    base: Word,
    marks: Vec<usize>,
}

impl MarkedWord {
    pub fn new(base: Word, marks: Vec<usize>) -> Result<Self> {
        if marks.len() != base.len() {
            return Err(Error::InvalidMarking(format!(
                "{} marks for a word of length {}",
                marks.len(),
                base.len()
            )));
        }
        if marks.contains(&0) {
            return Err(Error::InvalidMarking("marks start at 1".into()));
        }
        Ok(MarkedWord { base, marks })
    }

    /// The `i`-th occurrence of each letter gets mark `i`.
    pub fn canonical(base: &Word) -> Self {
        let mut seen = vec![0usize; base.alphabet().size()];
        let marks = base
            .letters()
            .iter()
            .map(|&l| {
                seen[l as usize] += 1;
                seen[l as usize]
            })
            .collect();
        MarkedWord {
            base: base.clone(),
            marks,
        }
    }

    pub fn base(&self) -> &Word {
        &self.base
    }

    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    /// `(letter, mark)` for each position.
    pub fn nodes(&self) -> impl Iterator<Item = (Letter, usize)> + '_ {
        self.base
            .letters()
            .iter()
            .copied()
            .zip(self.marks.iter().copied())
    }

    /// Marks within budget and strictly increasing per letter.
    pub fn is_k_valid(&self, budget: &LetterBudget) -> bool {
        if budget.alphabet() != self.base.alphabet() {
            return false;
        }
        let mut last = vec![0usize; budget.counts().len()];
        self.nodes().all(|(l, m)| {
            let ok = m <= budget.get(l) && m > last[l as usize];
            last[l as usize] = m;
            ok
        })
    }
}

impl fmt::Display for MarkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, m) in self.nodes() {
            write!(f, "({}){}", self.base.alphabet().symbol(l), m)?;
        }
        Ok(())
    }
}

/// The canonical marking of every word, or `None` when some word holds more
/// copies of a letter than the budget allows.
pub fn find_k_valid_marking(words: &[Word], budget: &LetterBudget) -> Option<Vec<MarkedWord>> {
    let marked: Vec<MarkedWord> = words.iter().map(MarkedWord::canonical).collect();
    marked
        .iter()
        .all(|m| m.is_k_valid(budget))
        .then_some(marked)
}

/// Number of K-valid markings of `words`.
pub fn count_k_valid_markings(words: &[Word], budget: &LetterBudget) -> num_bigint::BigUint {
    let mut total = num_bigint::BigUint::from(1u32);
    for w in words {
        for (l, c) in w.parikh().into_iter().enumerate() {
            total *= binomial(
                budget.counts().get(l).copied().unwrap_or(0) as u64,
                c as u64,
            );
        }
    }
    total
}

/// Every K-valid marking, or [`Error::MarkingSearchCap`] if there are more
/// than `cap`.
pub fn k_valid_markings(
    words: &[Word],
    budget: &LetterBudget,
    cap: u64,
) -> Result<Vec<Vec<MarkedWord>>> {
    for w in words {
        if w.alphabet() != budget.alphabet() {
            return Err(Error::AlphabetMismatch {
                left: budget.alphabet().to_string(),
                right: w.alphabet().to_string(),
            });
        }
    }
    let total = count_k_valid_markings(words, budget);
    if total.to_u64().is_none_or(|t| t > cap) {
        return Err(Error::MarkingSearchCap(cap));
    }
    // one slot per (word, letter): the positions to mark and their choices
    struct Slot {
        word: usize,
        positions: Vec<usize>,
        choices: Vec<Vec<usize>>,
    }
    let mut slots = Vec::new();
    for (j, w) in words.iter().enumerate() {
        for l in w.alphabet().letters() {
            let positions: Vec<usize> = (0..w.len()).filter(|&i| w.letters()[i] == l).collect();
            if positions.is_empty() {
                continue;
            }
            let choices = increasing_tuples(budget.get(l), positions.len());
            slots.push(Slot {
                word: j,
                positions,
                choices,
            });
        }
    }
    let mut out = Vec::new();
    if slots.iter().any(|s| s.choices.is_empty()) {
        return Ok(out);
    }
    let mut index = vec![0usize; slots.len()];
    loop {
        let mut marks: Vec<Vec<usize>> = words.iter().map(|w| vec![0; w.len()]).collect();
        for (slot, &i) in slots.iter().zip(&index) {
            for (&p, &m) in slot.positions.iter().zip(&slot.choices[i]) {
                marks[slot.word][p] = m;
            }
        }
        out.push(
            words
                .iter()
                .zip(marks)
                .map(|(w, marks)| MarkedWord {
                    base: w.clone(),
                    marks,
                })
                .collect(),
        );
        // odometer, last slot fastest
        let mut k = slots.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            index[k] += 1;
            if index[k] < slots[k].choices.len() {
                break;
            }
            index[k] = 0;
        }
    }
}

/// Strictly increasing `len`-tuples from `1..=max`, lexicographically.
fn increasing_tuples(max: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len > max {
        return out;
    }
    let mut t: Vec<usize> = (1..=len).collect();
    loop {
        out.push(t.clone());
        let Some(i) = (0..len).rev().find(|&i| t[i] < max - (len - 1 - i)) else {
            return out;
        };
        t[i] += 1;
        for j in i + 1..len {
            t[j] = t[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn ab(s: &str) -> Word {
        Word::parse(&Alphabet::binary(), s).unwrap()
    }

    fn budget(a: usize, b: usize) -> LetterBudget {
        LetterBudget::new(&Alphabet::binary(), vec![a, b]).unwrap()
    }

    #[test]
    fn example_marking_is_valid() {
        let k = budget(3, 2);
        let w1 = MarkedWord::new(ab("aab"), vec![1, 3, 1]).unwrap();
        let w2 = MarkedWord::new(ab("abb"), vec![2, 1, 2]).unwrap();
        assert!(w1.is_k_valid(&k) && w2.is_k_valid(&k));
        assert_eq!(w1.to_string(), "(a)1(a)3(b)1");
        assert!(!MarkedWord::new(ab("aab"), vec![3, 1, 1])
            .unwrap()
            .is_k_valid(&k));
        assert!(!MarkedWord::new(ab("aab"), vec![1, 4, 1])
            .unwrap()
            .is_k_valid(&k));
        assert!(MarkedWord::new(ab("aab"), vec![0, 1, 1]).is_err());
    }

    #[test]
    fn canonical_marking() {
        let found = find_k_valid_marking(&[ab("aab"), ab("abb")], &budget(3, 2)).unwrap();
        assert_eq!(found[0].marks(), &[1, 2, 1]);
        assert_eq!(found[1].marks(), &[1, 1, 2]);
        assert!(find_k_valid_marking(&[ab("aa")], &budget(1, 0)).is_none());
    }

    #[test]
    fn enumeration_matches_count() {
        let words = [ab("aab"), ab("abb")];
        let k = budget(3, 2);
        let all = k_valid_markings(&words, &k, 100).unwrap();
        // C(3,2)·C(2,1)·C(3,1)·C(2,2)
        assert_eq!(all.len(), 18);
        assert_eq!(count_k_valid_markings(&words, &k), 18u32.into());
        assert!(all.iter().flatten().all(|m| m.is_k_valid(&k)));
        assert_eq!(
            k_valid_markings(&words, &k, 17),
            Err(Error::MarkingSearchCap(17))
        );
        assert!(k_valid_markings(&[ab("aa")], &budget(1, 0), 10)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn tuples() {
        assert_eq!(
            increasing_tuples(3, 2),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(increasing_tuples(2, 0), vec![Vec::<usize>::new()]);
        assert!(increasing_tuples(1, 2).is_empty());
    }
}
