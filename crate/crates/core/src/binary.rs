//! Reconstruction of two-letter words from the counts of `x^ℓ y`.
//!
//! With `k` occurrences of the block letter `x`, a word over `{x, y}` is
//! `y^{s_1} x y^{s_2} … x y^{s_{k+1}}` and
//!
//! ```text
//! C(w, x^ℓ y) = Σ_{i=ℓ+1}^{k+1} C(i−1, ℓ) · s_i .
//! ```
//!
//! Each known level is one linear equation in the gap lengths `s_i`. Once the
//! equation at some level has a single non-negative solution for its tail
//! `s_{ℓ+1..k+1}`, the lower equations give the remaining gaps one at a time.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::words::{Alphabet, BigCount, Letter, Word};

/// Upper bound on the solutions counted when reporting a non-unique level.
pub const SOLUTION_COUNT_CAP: u64 = 1 << 20;

/// Which letter of a binary alphabet plays the block letter `x`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Queries `a^ℓ b`.
    #[default]
    Ab,
    /// Queries `b^ℓ a`.
    Ba,
}

impl Orientation {
    /// Picks the rarer letter as block letter; ties go to `a`.
    pub fn preferred(count_a: usize, count_b: usize) -> Self {
        if count_a <= count_b {
            Orientation::Ab
        } else {
            Orientation::Ba
        }
    }

    pub fn letters(self) -> LetterPair {
        match self {
            Orientation::Ab => LetterPair { block: 0, other: 1 },
            Orientation::Ba => LetterPair { block: 1, other: 0 },
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Ab => "ab",
            Orientation::Ba => "ba",
        })
    }
}

/// The block letter `x` and the other letter `y` of a query `x^ℓ y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LetterPair {
    pub block: Letter,
    pub other: Letter,
}

impl LetterPair {
    /// The query word `block^level other`.
    pub fn query(self, alphabet: &Arc<Alphabet>, level: usize) -> Word {
        let mut letters = vec![self.block; level];
        letters.push(self.other);
        Word::from_letters(alphabet, letters)
    }
}

/// Gap lengths `s_1..s_{k+1}` of the `y`-blocks around the `k` block letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockDecomposition {
    gaps: Vec<usize>,
}

impl BlockDecomposition {
    /// `gaps` must hold `k + 1` entries.
    pub fn new(gaps: Vec<usize>) -> Result<Self> {
        if gaps.is_empty() {
            return Err(Error::Parse(
                "a decomposition needs at least one gap".into(),
            ));
        }
        Ok(BlockDecomposition { gaps })
    }

    /// Decomposes a word over the two letters of `pair`.
    pub fn from_word(w: &Word, pair: LetterPair) -> Result<Self> {
        let mut gaps = vec![0];
        for &l in w.letters() {
            if l == pair.block {
                gaps.push(0);
            } else if l == pair.other {
                *gaps.last_mut().expect("non-empty") += 1;
            } else {
                return Err(Error::ForeignLetter {
                    pair: format!(
                        "{}{}",
                        w.alphabet().symbol(pair.block),
                        w.alphabet().symbol(pair.other)
                    ),
                    symbol: w.alphabet().symbol(l),
                });
            }
        }
        Ok(BlockDecomposition { gaps })
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    /// `k`, the number of block letters.
    pub fn block_count(&self) -> usize {
        self.gaps.len() - 1
    }

    /// Occurrences of the other letter.
    pub fn other_count(&self) -> usize {
        self.gaps.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.block_count() + self.other_count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_word(&self, alphabet: &Arc<Alphabet>, pair: LetterPair) -> Word {
        let mut letters = Vec::with_capacity(self.len());
        for (i, &s) in self.gaps.iter().enumerate() {
            if i > 0 {
                letters.push(pair.block);
            }
            letters.extend(std::iter::repeat_n(pair.other, s));
        }
        Word::from_letters(alphabet, letters)
    }

    /// `C(w, x^level y)` evaluated from the gaps.
    pub fn coefficient(&self, level: usize) -> Result<BigCount> {
        let k = self.block_count();
        if level > k {
            return Err(Error::LevelOutOfRange { level, max: k });
        }
        Ok(self
            .gaps
            .iter()
            .enumerate()
            .skip(level)
            .map(|(i, &s)| binomial(i as u64, level as u64) * s)
            .sum())
    }
}

/// Evaluates `C(w, x^level y)` for a decomposition.
pub fn block_coefficient(dec: &BlockDecomposition, level: usize) -> Result<BigCount> {
    dec.coefficient(level)
}

/// `C(k, level)·(n − k)`, the largest attainable value at `level`.
pub fn max_block_value(n: usize, k: usize, level: usize) -> BigCount {
    binomial(k as u64, level as u64) * n.saturating_sub(k)
}

fn check_shape(n: usize, k: usize, level: usize) -> Result<()> {
    if k > n {
        return Err(Error::CountExceedsLength { count: k, n });
    }
    if level > k {
        return Err(Error::LevelOutOfRange { level, max: k });
    }
    Ok(())
}

/// Depth-first enumeration of tails `(r_{ℓ+1}, …, r_{k+1})` with
/// `Σ C(i−1, ℓ) r_i = value` and `Σ r_i ≤ n − k`, from the highest index down.
struct TailSearch {
    // coefficients[t] = C(ℓ + t, ℓ), strictly increasing for ℓ ≥ 1
    coefficients: Vec<BigUint>,
    tail: Vec<usize>,
}

impl TailSearch {
    fn new(k: usize, level: usize) -> Self {
        let coefficients = (level..=k)
            .map(|i| binomial(i as u64, level as u64))
            .collect::<Vec<_>>();
        let tail = vec![0; coefficients.len()];
        TailSearch { coefficients, tail }
    }

    fn run<F>(&mut self, value: &BigUint, budget: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let top = self.coefficients.len() - 1;
        self.descend(top, value.clone(), budget, visit)
    }

    fn descend<F>(
        &mut self,
        t: usize,
        value: BigUint,
        budget: usize,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let c = self.coefficients[t].clone();
        if t == 0 {
            // c = 1
            return match value.to_usize() {
                Some(r) if r <= budget => {
                    self.tail[0] = r;
                    let out = visit(&self.tail);
                    self.tail[0] = 0;
                    out
                }
                _ => ControlFlow::Continue(()),
            };
        }
        let most = (&value / &c).to_usize().map_or(budget, |q| q.min(budget));
        for r in (0..=most).rev() {
            let rest = &value - &c * r;
            let left = budget - r;
            // below index t every unit of budget is worth at most c_{t-1}
            if rest > &self.coefficients[t - 1] * left {
                break;
            }
            self.tail[t] = r;
            let out = self.descend(t - 1, rest, left, visit);
            self.tail[t] = 0;
            out?;
        }
        ControlFlow::Continue(())
    }
}

/// All tails solving the level-`level` equation within the budget of `n − k`
/// other letters, sorted lexicographically. Values above
/// [`max_block_value`] give an empty list.
pub fn solution_set(n: usize, k: usize, level: usize, value: &BigCount) -> Result<Vec<Vec<usize>>> {
    check_shape(n, k, level)?;
    let mut out = Vec::new();
    if *value > max_block_value(n, k, level) {
        return Ok(out);
    }
    let _ = TailSearch::new(k, level).run(value, n - k, &mut |tail| {
        out.push(tail.to_vec());
        ControlFlow::Continue(())
    });
    out.sort();
    Ok(out)
}

/// Number of tails, stopping once `limit` have been seen.
pub fn count_solutions(
    n: usize,
    k: usize,
    level: usize,
    value: &BigCount,
    limit: u64,
) -> Result<u64> {
    check_shape(n, k, level)?;
    if *value > max_block_value(n, k, level) || limit == 0 {
        return Ok(0);
    }
    let mut seen = 0u64;
    let _ = TailSearch::new(k, level).run(value, n - k, &mut |_| {
        seen += 1;
        if seen >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(seen)
}

fn unique_tail(n: usize, k: usize, level: usize, value: &BigCount) -> Option<Vec<usize>> {
    let mut found = Vec::new();
    let _ = TailSearch::new(k, level).run(value, n - k, &mut |tail| {
        found.push(tail.to_vec());
        if found.len() > 1 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if found.len() == 1 {
        found.pop()
    } else {
        None
    }
}

/// Result of the closed-form uniqueness tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Uniqueness {
    Unique,
    NotUnique,
    /// No closed form applies; enumerate with [`solution_set`].
    Unknown,
}

/// Closed-form sufficient conditions for a single tail solution.
///
/// `Unique` is reported for small values (`value ≤ level`), the maximum, and
/// the maximum minus `C(k−1, level−1)` (one `y` moved from the last gap to the
/// one before). At level 0 every coefficient is 1, so only `value = 0` is
/// unique there.
pub fn is_unique_fast(n: usize, k: usize, level: usize, value: &BigCount) -> Uniqueness {
    if check_shape(n, k, level).is_err() {
        return Uniqueness::Unknown;
    }
    let budget = n - k;
    let max = max_block_value(n, k, level);
    if *value > max {
        return Uniqueness::Unknown;
    }
    if k == 0 || budget == 0 || level == k {
        return Uniqueness::Unique;
    }
    if level == 0 {
        return if value.is_zero() {
            Uniqueness::Unique
        } else {
            Uniqueness::NotUnique
        };
    }
    if *value <= BigUint::from(level) {
        return if *value <= BigUint::from(budget) {
            Uniqueness::Unique
        } else {
            Uniqueness::Unknown
        };
    }
    let second = &max - binomial(k as u64 - 1, level as u64 - 1);
    if *value == max || *value == second {
        return Uniqueness::Unique;
    }
    Uniqueness::Unknown
}

/// Whether `k` and `C(w, xy)` alone determine every word of length `n`
/// having those values.
pub fn characterize_pair_uniqueness(n: usize, k: usize, k_xy: &BigCount) -> Result<bool> {
    if k > n {
        return Err(Error::CountExceedsLength { count: k, n });
    }
    let max = BigUint::from(k * (n - k));
    if *k_xy > max {
        return Err(Error::ValueOutOfRange {
            value: k_xy.to_string(),
            max: max.to_string(),
        });
    }
    if k == 0 || k == n || k == 1 || k + 1 == n {
        return Ok(true);
    }
    let v = k_xy;
    Ok(v.is_zero() || *v == BigUint::from(1u32) || v + 1u32 == max || *v == max)
}

/// Counts `k_{x^ℓ y}` gathered so far for a word of known length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    n: usize,
    block_count: usize,
    orientation: Orientation,
    known: BTreeMap<usize, BigCount>,
}

impl BlockSystem {
    /// `block_count` is the number of block letters (`k_a` in the `ab`
    /// orientation).
    pub fn new(n: usize, block_count: usize, orientation: Orientation) -> Result<Self> {
        if block_count > n {
            return Err(Error::CountExceedsLength {
                count: block_count,
                n,
            });
        }
        Ok(BlockSystem {
            n,
            block_count,
            orientation,
            known: BTreeMap::new(),
        })
    }

    /// Builds a system from a level-0 value, which fixes the block count.
    pub fn from_other_count(
        n: usize,
        other_count: &BigCount,
        orientation: Orientation,
    ) -> Result<Self> {
        let other =
            other_count
                .to_usize()
                .filter(|&c| c <= n)
                .ok_or_else(|| Error::ValueOutOfRange {
                    value: other_count.to_string(),
                    max: n.to_string(),
                })?;
        let mut sys = Self::new(n, n - other, orientation)?;
        sys.insert(0, other_count.clone())?;
        Ok(sys)
    }

    /// All levels `0..=max_level` of `w` (clamped to the block count).
    pub fn from_word(w: &Word, orientation: Orientation, max_level: usize) -> Result<Self> {
        if w.alphabet().size() != 2 {
            return Err(Error::NotBinary(w.alphabet().size()));
        }
        let dec = BlockDecomposition::from_word(w, orientation.letters())?;
        let mut sys = Self::new(w.len(), dec.block_count(), orientation)?;
        for level in 0..=max_level.min(dec.block_count()) {
            sys.insert(level, dec.coefficient(level)?)?;
        }
        Ok(sys)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn other_count(&self) -> usize {
        self.n - self.block_count
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn known(&self) -> &BTreeMap<usize, BigCount> {
        &self.known
    }

    pub fn insert(&mut self, level: usize, value: BigCount) -> Result<()> {
        if level > self.block_count {
            return Err(Error::LevelOutOfRange {
                level,
                max: self.block_count,
            });
        }
        self.known.insert(level, value);
        Ok(())
    }

    /// Returns a copy extended by one more level.
    pub fn with(&self, level: usize, value: BigCount) -> Result<Self> {
        let mut next = self.clone();
        next.insert(level, value)?;
        Ok(next)
    }

    /// Highest level of the contiguous prefix `0..=j` (level 0 is implied by
    /// the block count when absent).
    fn deepest_level(&self) -> Result<usize> {
        let mut expected = 1;
        for &level in self.known.keys().filter(|&&l| l > 0) {
            if level != expected {
                return Err(Error::NonContiguousLevels(expected));
            }
            expected += 1;
        }
        Ok(expected - 1)
    }
}

/// Outcome of solving a [`BlockSystem`] for its gap lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockOutcome {
    Unique {
        decomposition: BlockDecomposition,
        /// Lowest level whose equation has a single tail solution.
        level: usize,
    },
    NotYetUnique {
        level: usize,
        /// Tail solutions at `level`, saturating at [`SOLUTION_COUNT_CAP`].
        solutions: u64,
    },
    Inconsistent(String),
}

/// Outcome of [`reconstruct_binary`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BinaryOutcome {
    Word(Word),
    NotYetUnique { level: usize, solutions: u64 },
    Inconsistent(String),
}

/// Solves the block system by locating the lowest unique level and
/// substituting back through the lower levels.
pub fn reconstruct_blocks(sys: &BlockSystem) -> Result<BlockOutcome> {
    let n = sys.n;
    let k = sys.block_count;
    let budget = n - k;
    let deepest = sys.deepest_level()?;

    let mut values: Vec<BigCount> = Vec::with_capacity(deepest + 1);
    for level in 0..=deepest {
        let v = match sys.known.get(&level) {
            Some(v) => v.clone(),
            None => BigCount::from(budget),
        };
        let max = max_block_value(n, k, level);
        if v > max {
            return Ok(BlockOutcome::Inconsistent(format!(
                "level {level} value {v} exceeds the maximum {max}"
            )));
        }
        values.push(v);
    }
    if values[0] != BigCount::from(budget) {
        return Ok(BlockOutcome::Inconsistent(format!(
            "level 0 value {} disagrees with {} other letters",
            values[0], budget
        )));
    }

    let mut gaps = vec![0usize; k + 1];
    let unique_level = if k == 0 || budget == 0 {
        gaps[k] = budget;
        0
    } else {
        let mut found = None;
        for (level, v) in values.iter().enumerate().skip(1) {
            match count_solutions(n, k, level, v, 2)? {
                0 => {
                    return Ok(BlockOutcome::Inconsistent(format!(
                        "no gap lengths give value {v} at level {level}"
                    )))
                }
                1 => {
                    found = Some(level);
                    break;
                }
                _ => {}
            }
        }
        let Some(level) = found else {
            let solutions = if deepest == 0 {
                // every split of the budget over k + 1 gaps
                crate::combinatorics::binomial((budget + k) as u64, k as u64)
                    .to_u64()
                    .map_or(SOLUTION_COUNT_CAP, |c| c.min(SOLUTION_COUNT_CAP))
            } else {
                count_solutions(n, k, deepest, &values[deepest], SOLUTION_COUNT_CAP)?
            };
            return Ok(BlockOutcome::NotYetUnique {
                level: deepest,
                solutions,
            });
        };
        let tail = unique_tail(n, k, level, &values[level]).expect("counted exactly one solution");
        gaps[level..].copy_from_slice(&tail);
        // level ℓ equation: s_{ℓ+1} has coefficient 1
        for lower in (1..level).rev() {
            let known: BigInt = gaps
                .iter()
                .enumerate()
                .skip(lower + 1)
                .map(|(i, &s)| BigInt::from(binomial(i as u64, lower as u64) * s))
                .sum();
            let s = BigInt::from(values[lower].clone()) - known;
            match s.to_usize() {
                Some(s) => gaps[lower] = s,
                _ => {
                    return Ok(BlockOutcome::Inconsistent(format!(
                        "level {lower} forces a negative gap"
                    )))
                }
            }
        }
        let used: usize = gaps[1..].iter().sum();
        if used > budget {
            return Ok(BlockOutcome::Inconsistent(
                "gap lengths exceed the number of other letters".into(),
            ));
        }
        gaps[0] = budget - used;
        level
    };

    let decomposition = BlockDecomposition { gaps };
    for (&level, v) in &sys.known {
        if decomposition.coefficient(level)? != *v {
            return Ok(BlockOutcome::Inconsistent(format!(
                "level {level} value {v} contradicts the reconstructed gaps"
            )));
        }
    }
    Ok(BlockOutcome::Unique {
        decomposition,
        level: unique_level,
    })
}

/// Reconstructs the word over a two-letter `alphabet`.
pub fn reconstruct_binary(sys: &BlockSystem, alphabet: &Arc<Alphabet>) -> Result<BinaryOutcome> {
    if alphabet.size() != 2 {
        return Err(Error::NotBinary(alphabet.size()));
    }
    Ok(match reconstruct_blocks(sys)? {
        BlockOutcome::Unique { decomposition, .. } => {
            BinaryOutcome::Word(decomposition.to_word(alphabet, sys.orientation.letters()))
        }
        BlockOutcome::NotYetUnique { level, solutions } => {
            BinaryOutcome::NotYetUnique { level, solutions }
        }
        BlockOutcome::Inconsistent(why) => BinaryOutcome::Inconsistent(why),
    })
}

/// Smallest level whose count alone has a single tail solution, for a given
/// block letter.
pub fn minimal_unique_level_for(dec: &BlockDecomposition) -> usize {
    let n = dec.len();
    let k = dec.block_count();
    if k == 0 || k == n {
        return 0;
    }
    (1..=k)
        .find(|&level| {
            let v = dec.coefficient(level).expect("level in range");
            count_solutions(n, k, level, &v, 2).expect("shape checked") == 1
        })
        .unwrap_or(k)
}

/// [`minimal_unique_level_for`] in the orientation chosen by
/// [`Orientation::preferred`].
pub fn minimal_unique_level(w: &Word) -> Result<usize> {
    if w.alphabet().size() != 2 {
        return Err(Error::NotBinary(w.alphabet().size()));
    }
    let orientation = Orientation::preferred(w.count(0), w.count(1));
    let dec = BlockDecomposition::from_word(w, orientation.letters())?;
    Ok(minimal_unique_level_for(&dec))
}
