//! Reconstruction over any alphabet from counts `C(w, x^ℓ y)`: every pair
//! of letters is solved as a binary problem, then the pairwise projections
//! are merged.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::binary::{
    minimal_unique_level_for, reconstruct_blocks, BlockDecomposition, BlockOutcome, BlockSystem,
    LetterPair, Orientation,
};
use crate::error::{Error, Result};
use crate::multi::merge::reconstruct_from_pairwise_projections;
use crate::multi::projection::{project, Pair, ProjectionMap};
use crate::words::{Alphabet, BigCount, Letter, Word};

/// Known values `C(w, x^ℓ y)`, keyed by the ordered pair `(x, y)` and `ℓ`.
/// At level 0 the value is the number of `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMap {
    alphabet: Arc<Alphabet>,
    entries: BTreeMap<(Letter, Letter), BTreeMap<usize, BigCount>>,
}

impl CoefficientMap {
    pub fn new(alphabet: &Arc<Alphabet>) -> Self {
        CoefficientMap {
            alphabet: alphabet.clone(),
            entries: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn insert(
        &mut self,
        block: Letter,
        other: Letter,
        level: usize,
        value: BigCount,
    ) -> Result<()> {
        let q = self.alphabet.size() as Letter;
        if block == other || block >= q || other >= q {
            return Err(Error::InvalidPair(format!("{block}{other}")));
        }
        self.entries
            .entry((block, other))
            .or_default()
            .insert(level, value);
        Ok(())
    }

    pub fn get(&self, block: Letter, other: Letter, level: usize) -> Option<&BigCount> {
        self.entries.get(&(block, other))?.get(&level)
    }

    /// Entries in key order.
    pub fn iter(&self) -> impl Iterator<Item = ((Letter, Letter), usize, &BigCount)> {
        self.entries
            .iter()
            .flat_map(|(&pair, levels)| levels.iter().map(move |(&l, v)| (pair, l, v)))
    }

    pub(crate) fn pairs(
        &self,
    ) -> impl Iterator<Item = (&(Letter, Letter), &BTreeMap<usize, BigCount>)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pair_name(&self, block: Letter, other: Letter) -> String {
        format!(
            "{}{}",
            self.alphabet.symbol(block),
            self.alphabet.symbol(other)
        )
    }
}

impl fmt::Display for CoefficientMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((x, y), level, v) in self.iter() {
            writeln!(f, "{}\t{}\t{}", self.pair_name(x, y), level, v)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralReconstruction {
    pub word: Word,
    /// Letter counts read off (at most `q − 1`; the last follows from `n`)
    /// plus, per pair, the levels up to its first unique one.
    pub coefficients_used: usize,
    /// Letter order implied by the block letters of the pairs, when they
    /// agree with a total order.
    pub order: Option<Vec<Letter>>,
    /// `Σ |w|_{o_i} (q + 1 − i)` for that order.
    pub bound: Option<usize>,
}

fn small(v: &BigCount, n: usize) -> Result<usize> {
    v.to_usize()
        .filter(|&c| c <= n)
        .ok_or_else(|| Error::ValueOutOfRange {
            value: v.to_string(),
            max: n.to_string(),
        })
}

/// Rebuilds a word of length `n` from its coefficient map.
pub fn reconstruct_general(
    n: usize,
    coefficients: &CoefficientMap,
) -> Result<GeneralReconstruction> {
    let alphabet = coefficients.alphabet();
    let q = alphabet.size();
    if q == 1 {
        return Ok(GeneralReconstruction {
            word: Word::power(alphabet, 0, n),
            coefficients_used: 0,
            order: Some(vec![0]),
            bound: Some(n),
        });
    }

    let mut counts: Vec<Option<usize>> = vec![None; q];
    for (&(x, y), levels) in coefficients.pairs() {
        let Some(v) = levels.get(&0) else { continue };
        let c = small(v, n)?;
        match counts[y as usize] {
            Some(prev) if prev != c => {
                return Err(Error::InconsistentCounts {
                    symbol: alphabet.symbol(y),
                    first: prev,
                    second: c,
                    pair: coefficients.pair_name(x, y),
                })
            }
            _ => counts[y as usize] = Some(c),
        }
    }
    let singles = counts.iter().flatten().count().min(q - 1);
    let known: usize = counts.iter().flatten().sum();
    let unknown: Vec<usize> = (0..q).filter(|&l| counts[l].is_none()).collect();
    match unknown.as_slice() {
        [] if known == n => {}
        [only] if known <= n => counts[*only] = Some(n - known),
        [] | [_] => {
            return Err(Error::ValueOutOfRange {
                value: known.to_string(),
                max: n.to_string(),
            })
        }
        [first, ..] => return Err(Error::UnknownLetterCount(alphabet.symbol(*first as Letter))),
    }
    let counts: Vec<usize> = counts.into_iter().map(|c| c.expect("filled")).collect();

    let mut used = singles;
    let mut blocks: Vec<(Letter, Letter)> = Vec::new();
    let mut projections = ProjectionMap::new(alphabet);
    for x in 0..q as Letter {
        for y in x + 1..q as Letter {
            let has_levels = |a: Letter, b: Letter| {
                coefficients
                    .entries
                    .get(&(a, b))
                    .is_some_and(|levels| levels.keys().any(|&l| l > 0))
            };
            let (block, other) = match (has_levels(x, y), has_levels(y, x)) {
                (true, true) => return Err(Error::DuplicatePair(coefficients.pair_name(x, y))),
                (true, false) => (x, y),
                (false, true) => (y, x),
                (false, false) if counts[x as usize] == 0 || counts[y as usize] == 0 => (x, y),
                (false, false) => return Err(Error::MissingPair(coefficients.pair_name(x, y))),
            };
            let fail = |reason: String| Error::PairFailed {
                pair: coefficients.pair_name(block, other),
                reason,
            };
            let (kb, ko) = (counts[block as usize], counts[other as usize]);
            let mut sys = BlockSystem::new(kb + ko, kb, Orientation::Ab)?;
            sys.insert(0, BigCount::from(ko))
                .map_err(|e| fail(e.to_string()))?;
            if let Some(levels) = coefficients.entries.get(&(block, other)) {
                for (&level, v) in levels.iter().filter(|(&l, _)| l > 0) {
                    sys.insert(level, v.clone())
                        .map_err(|e| fail(e.to_string()))?;
                }
            }
            let pair = LetterPair { block, other };
            let w = match reconstruct_blocks(&sys).map_err(|e| fail(e.to_string()))? {
                BlockOutcome::Unique {
                    decomposition,
                    level,
                } => {
                    used += level;
                    decomposition.to_word(alphabet, pair)
                }
                BlockOutcome::NotYetUnique { level, solutions } => {
                    return Err(fail(format!(
                        "{solutions} candidate decompositions remain at level {level}"
                    )))
                }
                BlockOutcome::Inconsistent(why) => return Err(fail(why)),
            };
            if has_levels(block, other) {
                blocks.push((block, other));
            }
            projections.insert(Pair::new(x, y)?, w)?;
        }
    }

    let word =
        reconstruct_from_pairwise_projections(&projections)?.ok_or(Error::NoConsistentWord)?;
    let order = implied_order(q, &blocks);
    let bound = order.as_ref().map(|o| ordered_bound(&counts, o));
    if let Some(bound) = bound {
        if n + 1 >= q && used > bound {
            return Err(Error::BudgetExceeded { used, bound });
        }
    }
    Ok(GeneralReconstruction {
        word,
        coefficients_used: used,
        order,
        bound,
    })
}

/// Orders letters by how often they act as block letter; `None` if some
/// pair disagrees with that order.
fn implied_order(q: usize, blocks: &[(Letter, Letter)]) -> Option<Vec<Letter>> {
    let mut wins = vec![0usize; q];
    for &(x, _) in blocks {
        wins[x as usize] += 1;
    }
    let mut order: Vec<Letter> = (0..q as Letter).collect();
    order.sort_by_key(|&l| (std::cmp::Reverse(wins[l as usize]), l));
    let mut rank = vec![0; q];
    for (i, &l) in order.iter().enumerate() {
        rank[l as usize] = i;
    }
    blocks
        .iter()
        .all(|&(x, y)| rank[x as usize] < rank[y as usize])
        .then_some(order)
}

fn ordered_bound(counts: &[usize], order: &[Letter]) -> usize {
    let q = order.len();
    order
        .iter()
        .enumerate()
        .map(|(i, &l)| counts[l as usize] * (q - i))
        .sum()
}

/// Letters by increasing count, ties in alphabet order.
pub fn frequency_order(w: &Word) -> Vec<Letter> {
    let counts = w.parikh();
    let mut order: Vec<Letter> = w.alphabet().letters().collect();
    order.sort_by_key(|&l| (counts[l as usize], l));
    order
}

fn check_order(alphabet: &Alphabet, order: &[Letter]) -> Result<()> {
    let mut seen = vec![false; alphabet.size()];
    for &l in order {
        match seen.get_mut(l as usize) {
            Some(s) if !*s => *s = true,
            _ => {
                return Err(Error::InvalidOrder(format!(
                    "letter index {l} repeated or out of range"
                )))
            }
        }
    }
    if order.len() != alphabet.size() {
        return Err(Error::InvalidOrder(format!(
            "{} letters given for an alphabet of {}",
            order.len(),
            alphabet.size()
        )));
    }
    Ok(())
}

/// The coefficients a reconstruction along `order` consumes: the counts of
/// all letters but the first, then for each pair `o_i < o_j` the values
/// `C(w, o_i^ℓ o_j)` up to the first unique level. Defaults to
/// [`frequency_order`].
pub fn general_coefficients(w: &Word, order: Option<&[Letter]>) -> Result<CoefficientMap> {
    let alphabet = w.alphabet();
    let order = match order {
        Some(o) => {
            check_order(alphabet, o)?;
            o.to_vec()
        }
        None => frequency_order(w),
    };
    let counts = w.parikh();
    let mut map = CoefficientMap::new(alphabet);
    for &y in &order[1..] {
        map.insert(order[0], y, 0, BigCount::from(counts[y as usize]))?;
    }
    for (i, &x) in order.iter().enumerate() {
        for &y in &order[i + 1..] {
            let pair = LetterPair { block: x, other: y };
            let dec = BlockDecomposition::from_word(&project(w, &[x, y]), pair)?;
            for level in 1..=minimal_unique_level_for(&dec) {
                map.insert(x, y, level, dec.coefficient(level)?)?;
            }
        }
    }
    Ok(map)
}

/// `Σ |w|_{o_i} (q + 1 − i)` along `order`.
pub fn general_bound(w: &Word, order: &[Letter]) -> Result<usize> {
    check_order(w.alphabet(), order)?;
    Ok(ordered_bound(&w.parikh(), order))
}
