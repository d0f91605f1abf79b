//! Projections onto letter subsets, per-letter budgets and pairwise
//! projection maps.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// Subsequence of `w` keeping the letters in `keep`. The result stays over
/// the alphabet of `w`.
pub fn project(w: &Word, keep: &[Letter]) -> Word {
    let mut mask = vec![false; w.alphabet().size()];
    for &l in keep {
        if let Some(slot) = mask.get_mut(l as usize) {
            *slot = true;
        }
    }
    let letters = w
        .letters()
        .iter()
        .copied()
        .filter(|&l| mask[l as usize])
        .collect();
    Word::from_letters(w.alphabet(), letters)
}

/// [`project`] with the subset given as a string of symbols.
pub fn project_symbols(w: &Word, symbols: &str) -> Result<Word> {
    let keep = w.alphabet().parse_letters(symbols)?;
    Ok(project(w, &keep))
}

/// Target number of occurrences of each letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LetterBudget {
    alphabet: Arc<Alphabet>,
    counts: Vec<usize>,
}

impl LetterBudget {
    pub fn new(alphabet: &Arc<Alphabet>, counts: Vec<usize>) -> Result<Self> {
        if counts.len() != alphabet.size() {
            return Err(Error::Parse(format!(
                "budget has {} entries for {} letters",
                counts.len(),
                alphabet.size()
            )));
        }
        Ok(LetterBudget {
            alphabet: alphabet.clone(),
            counts,
        })
    }

    /// Parikh vector of `w`.
    pub fn of_word(w: &Word) -> Self {
        LetterBudget {
            alphabet: w.alphabet().clone(),
            counts: w.parikh(),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn get(&self, letter: Letter) -> usize {
        self.counts[letter as usize]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Unordered letter pair, stored with the smaller letter first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair(Letter, Letter);

impl Pair {
    pub fn new(x: Letter, y: Letter) -> Result<Self> {
        if x == y {
            return Err(Error::InvalidPair(format!("{x}{y}")));
        }
        Ok(Pair(x.min(y), x.max(y)))
    }

    pub fn low(self) -> Letter {
        self.0
    }

    pub fn high(self) -> Letter {
        self.1
    }

    pub fn contains(self, l: Letter) -> bool {
        self.0 == l || self.1 == l
    }

    pub fn name(self, alphabet: &Alphabet) -> String {
        format!("{}{}", alphabet.symbol(self.0), alphabet.symbol(self.1))
    }

    /// Parses two distinct symbols, in either order.
    pub fn parse(alphabet: &Alphabet, s: &str) -> Result<Self> {
        match alphabet.parse_letters(s)?.as_slice() {
            &[x, y] if x != y => Pair::new(x, y),
            _ => Err(Error::InvalidPair(s.to_string())),
        }
    }
}

/// One projection word per letter pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionMap {
    alphabet: Arc<Alphabet>,
    words: BTreeMap<Pair, Word>,
}

impl ProjectionMap {
    pub fn new(alphabet: &Arc<Alphabet>) -> Self {
        ProjectionMap {
            alphabet: alphabet.clone(),
            words: BTreeMap::new(),
        }
    }

    /// All `q(q−1)/2` projections of `w`, in one pass.
    pub fn of_word(w: &Word) -> Self {
        let alphabet = w.alphabet().clone();
        let q = alphabet.size() as Letter;
        let counts = w.parikh();
        let pairs: Vec<Pair> = (0..q)
            .flat_map(|x| (x + 1..q).map(move |y| Pair(x, y)))
            .collect();
        let mut slots: Vec<Vec<Letter>> = pairs
            .iter()
            .map(|p| Vec::with_capacity(counts[p.0 as usize] + counts[p.1 as usize]))
            .collect();
        let mut routes: Vec<Vec<usize>> = vec![Vec::new(); q as usize];
        for (i, p) in pairs.iter().enumerate() {
            routes[p.0 as usize].push(i);
            routes[p.1 as usize].push(i);
        }
        for &l in w.letters() {
            for &i in &routes[l as usize] {
                slots[i].push(l);
            }
        }
        let words = pairs
            .into_iter()
            .zip(slots)
            .map(|(p, letters)| (p, Word::from_letters(&alphabet, letters)))
            .collect();
        ProjectionMap { alphabet, words }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Adds the projection for `pair`; the word may only use the pair's letters.
    pub fn insert(&mut self, pair: Pair, w: Word) -> Result<()> {
        if w.alphabet() != &self.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: w.alphabet().to_string(),
            });
        }
        if let Some(&bad) = w.letters().iter().find(|&&l| !pair.contains(l)) {
            return Err(Error::ForeignLetter {
                pair: pair.name(&self.alphabet),
                symbol: self.alphabet.symbol(bad),
            });
        }
        if self.words.contains_key(&pair) {
            return Err(Error::DuplicatePair(pair.name(&self.alphabet)));
        }
        self.words.insert(pair, w);
        Ok(())
    }

    pub fn get(&self, pair: Pair) -> Option<&Word> {
        self.words.get(&pair)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Pair, &Word)> {
        self.words.iter().map(|(&p, w)| (p, w))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl fmt::Display for ProjectionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pair, w) in &self.words {
            writeln!(f, "{}\t{}", pair.name(&self.alphabet), w)?;
        }
        Ok(())
    }
}
