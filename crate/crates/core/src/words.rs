//! Ordered alphabets, words over them, and scattered-factor counting.
//!
//! A [`Word`] stores letter indices into its [`Alphabet`]; the index order is
//! the letter order used for every lexicographic comparison in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Index of a symbol inside its alphabet.
pub type Letter = u32;

/// Non-negative, unbounded count of scattered-factor occurrences.
pub type BigCount = BigUint;

/// Default cap on the number of candidate words the brute-force oracle visits.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

/// A finite, totally ordered set of single-character symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Arc<Self>> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::DuplicateSymbol(*c));
            }
        }
        Ok(Arc::new(Alphabet { symbols }))
    }

    /// Parses an ordered alphabet such as `"abn"`.
    pub fn parse(s: &str) -> Result<Arc<Self>> {
        Self::new(s.chars())
    }

    /// The alphabet `{a < b}`.
    pub fn binary() -> Arc<Self> {
        Self::parse("ab").expect("static alphabet")
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[letter as usize]
    }

    pub fn letter(&self, symbol: char) -> Option<Letter> {
        self.symbols
            .iter()
            .position(|&c| c == symbol)
            .map(|i| i as Letter)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.symbols.len() as Letter
    }

    /// Parses a symbol string into letters of this alphabet.
    pub fn parse_letters(&self, s: &str) -> Result<Vec<Letter>> {
        s.chars()
            .map(|c| {
                self.letter(c).ok_or_else(|| Error::UnknownSymbol {
                    symbol: c,
                    alphabet: self.to_string(),
                })
            })
            .collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A finite word over an explicit alphabet.
#[derive(Clone)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: &Arc<Alphabet>, letters: Vec<Letter>) -> Result<Self> {
        let q = alphabet.size() as Letter;
        if let Some(&bad) = letters.iter().find(|&&l| l >= q) {
            return Err(Error::Parse(format!(
                "letter index {bad} out of range for alphabet {alphabet}"
            )));
        }
        Ok(Self::from_letters(alphabet, letters))
    }

    /// Builds a word without validating the letters.
    pub(crate) fn from_letters(alphabet: &Arc<Alphabet>, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| (l as usize) < alphabet.size()));
        Word {
            alphabet: Arc::clone(alphabet),
            letters,
        }
    }

    pub fn parse(alphabet: &Arc<Alphabet>, s: &str) -> Result<Self> {
        Ok(Self::from_letters(alphabet, alphabet.parse_letters(s)?))
    }

    pub fn empty(alphabet: &Arc<Alphabet>) -> Self {
        Self::from_letters(alphabet, Vec::new())
    }

    /// `letter^k`.
    pub fn power(alphabet: &Arc<Alphabet>, letter: Letter, k: usize) -> Self {
        Self::from_letters(alphabet, vec![letter; k])
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `|w|_a`.
    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    pub fn parikh(&self) -> Vec<usize> {
        parikh(self)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::from_letters(&self.alphabet, letters)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Self::from_letters(&self.alphabet, self.letters[range].to_vec())
    }

    pub fn same_alphabet(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet
    }

    pub(crate) fn check_same_alphabet(&self, other: &Word) -> Result<()> {
        if self.same_alphabet(other) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.alphabet.to_string(),
                right: other.alphabet.to_string(),
            })
        }
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.same_alphabet(other)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order induced by the alphabet order; a proper prefix is smaller.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .cmp(&other.letters)
            .then_with(|| self.alphabet.cmp(&other.alphabet))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|&l| write!(f, "{}", self.alphabet.symbol(l)))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

/// Per-letter occurrence counts, indexed by letter.
pub fn parikh(w: &Word) -> Vec<usize> {
    let mut counts = vec![0; w.alphabet.size()];
    for &l in &w.letters {
        counts[l as usize] += 1;
    }
    counts
}

/// Number of embeddings of `u` as a scattered factor of `w`.
pub fn scattered_factor_count(w: &Word, u: &Word) -> Result<BigCount> {
    w.check_same_alphabet(u)?;
    Ok(count_letters(&w.letters, &u.letters))
}

/// Prefix dynamic program on raw letter slices. Runs in `u128` and restarts
/// in big integers if any cell overflows.
pub(crate) fn count_letters(w: &[Letter], u: &[Letter]) -> BigCount {
    if u.len() > w.len() {
        return BigCount::zero();
    }
    match count_small(w, u) {
        Some(v) => BigCount::from(v),
        None => count_big(w, u),
    }
}

fn count_small(w: &[Letter], u: &[Letter]) -> Option<u128> {
    let m = u.len();
    let mut table = vec![0u128; m + 1];
    table[0] = 1;
    for (i, &c) in w.iter().enumerate() {
        for j in (1..=m.min(i + 1)).rev() {
            if u[j - 1] == c {
                table[j] = table[j].checked_add(table[j - 1])?;
            }
        }
    }
    Some(table[m])
}

fn count_big(w: &[Letter], u: &[Letter]) -> BigCount {
    let m = u.len();
    let mut table = vec![BigCount::zero(); m + 1];
    table[0] = BigCount::one();
    for (i, &c) in w.iter().enumerate() {
        for j in (1..=m.min(i + 1)).rev() {
            if u[j - 1] == c {
                let prev = table[j - 1].clone();
                table[j] += prev;
            }
        }
    }
    std::mem::take(&mut table[m])
}

/// Iterates over all words of length `len` in lexicographic order.
pub fn words_of_length(alphabet: &Arc<Alphabet>, len: usize) -> WordsOfLength {
    WordsOfLength {
        alphabet: Arc::clone(alphabet),
        current: Some(vec![0; len]),
    }
}

/// Iterator returned by [`words_of_length`].
pub struct WordsOfLength {
    alphabet: Arc<Alphabet>,
    current: Option<Vec<Letter>>,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let letters = self.current.take()?;
        let q = self.alphabet.size() as Letter;
        let mut succ = letters.clone();
        let mut carried = true;
        for slot in succ.iter_mut().rev() {
            if *slot + 1 < q {
                *slot += 1;
                carried = false;
                break;
            }
            *slot = 0;
        }
        if !carried {
            self.current = Some(succ);
        }
        Some(Word::from_letters(&self.alphabet, letters))
    }
}

/// Searches `Σ^{|w|}` for a word `v ≠ w` with the same counts as `w` for every
/// query in `set`. Fails when `q^{|w|}` exceeds `cap`.
pub fn find_confusable(w: &Word, set: &[Word], cap: u64) -> Result<Option<Word>> {
    for u in set {
        w.check_same_alphabet(u)?;
    }
    let q = w.alphabet.size() as u64;
    let total = (0..w.len()).try_fold(1u64, |acc, _| acc.checked_mul(q));
    match total {
        Some(t) if t <= cap => {}
        _ => {
            return Err(Error::EnumerationCap {
                required: format!("{}^{}", q, w.len()),
                cap,
            })
        }
    }
    let targets: Vec<BigCount> = set
        .iter()
        .map(|u| count_letters(&w.letters, &u.letters))
        .collect();
    Ok(words_of_length(&w.alphabet, w.len()).find(|v| {
        v.letters != w.letters
            && set
                .iter()
                .zip(&targets)
                .all(|(u, t)| count_letters(&v.letters, &u.letters) == *t)
    }))
}

/// True iff no other word of length `|w|` shares all counts over `set`.
pub fn is_uniquely_determined_brute(w: &Word, set: &[Word]) -> Result<bool> {
    is_uniquely_determined_brute_with_cap(w, set, DEFAULT_ENUMERATION_CAP)
}

pub fn is_uniquely_determined_brute_with_cap(w: &Word, set: &[Word], cap: u64) -> Result<bool> {
    Ok(find_confusable(w, set, cap)?.is_none())
}
