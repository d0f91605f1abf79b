//! Merging scattered factors into a common superword with prescribed letter
//! counts, and the special case of pairwise projections.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::multi::graph::{build_graph, topo_sort_unique, unmark, GraphBuilder, TopoOrder};
use crate::multi::marking::{count_k_valid_markings, k_valid_markings, DEFAULT_MARKING_CAP};
use crate::multi::projection::{LetterBudget, Pair, ProjectionMap};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MergeOutcome {
    /// A single K-valid marking has an acyclic graph, it uses every mark and
    /// its topological order is unique.
    Unique(Word),
    /// A superword exists; the uniqueness conditions do not all hold.
    NotCertified(Word),
    NoWord,
}

impl MergeOutcome {
    pub fn word(&self) -> Option<&Word> {
        match self {
            MergeOutcome::Unique(w) | MergeOutcome::NotCertified(w) => Some(w),
            MergeOutcome::NoWord => None,
        }
    }
}

/// [`merge_scattered_factors_with_cap`] with [`DEFAULT_MARKING_CAP`].
pub fn merge_scattered_factors(words: &[Word], budget: &LetterBudget) -> Result<MergeOutcome> {
    merge_scattered_factors_with_cap(words, budget, DEFAULT_MARKING_CAP)
}

/// Searches the K-valid markings for one with an acyclic graph and spells
/// its topological order. The graph already has a node for every letter the
/// budget asks for, so no padding is needed.
pub fn merge_scattered_factors_with_cap(
    words: &[Word],
    budget: &LetterBudget,
    cap: u64,
) -> Result<MergeOutcome> {
    if count_k_valid_markings(words, budget).to_u64() == Some(0) {
        return Ok(MergeOutcome::NoWord);
    }
    let mut found: Option<(Word, bool)> = None;
    for marking in k_valid_markings(words, budget, cap)? {
        let g = build_graph(&marking, budget)?;
        let order = topo_sort_unique(&g);
        let Some(nodes) = order.order() else {
            continue;
        };
        if found.is_some() {
            let (w, _) = found.take().expect("checked");
            return Ok(MergeOutcome::NotCertified(w));
        }
        let mut used = vec![false; g.node_count()];
        for m in &marking {
            for (l, mark) in m.nodes() {
                let id = g
                    .id(crate::multi::graph::Node { letter: l, mark })
                    .expect("valid marking");
                used[id] = true;
            }
        }
        let certified = matches!(order, TopoOrder::Unique(_)) && used.iter().all(|&u| u);
        found = Some((unmark(budget.alphabet(), nodes), certified));
    }
    Ok(match found {
        Some((w, true)) => MergeOutcome::Unique(w),
        Some((w, false)) => MergeOutcome::NotCertified(w),
        None => MergeOutcome::NoWord,
    })
}

/// Rebuilds `w` from its projections onto every pair of letters, or `None`
/// when no word has exactly these projections. Linear in the total length.
///
/// Each letter's count is taken as its largest count over the projections
/// that mention it.
pub fn reconstruct_from_pairwise_projections(projections: &ProjectionMap) -> Result<Option<Word>> {
    let alphabet = projections.alphabet();
    let q = alphabet.size();
    if q < 2 {
        return Err(Error::NeedsTwoLetters);
    }
    let mut counts = vec![0usize; q];
    let mut witness: Vec<Option<Pair>> = vec![None; q];
    let mut total_len = 0;
    for x in 0..q as u32 {
        for y in x + 1..q as u32 {
            let pair = Pair::new(x, y)?;
            let w = projections
                .get(pair)
                .ok_or_else(|| Error::MissingPair(pair.name(alphabet)))?;
            total_len += w.len();
            let parikh = w.parikh();
            for l in [x, y] {
                let c = parikh[l as usize];
                if c == 0 {
                    continue;
                }
                match witness[l as usize] {
                    Some(first) if counts[l as usize] != c => {
                        return Err(Error::InconsistentCounts {
                            symbol: alphabet.symbol(l),
                            first: counts[l as usize],
                            second: c,
                            pair: format!(
                                "{} (first seen in {})",
                                pair.name(alphabet),
                                first.name(alphabet)
                            ),
                        })
                    }
                    Some(_) => {}
                    None => {
                        counts[l as usize] = c;
                        witness[l as usize] = Some(pair);
                    }
                }
            }
        }
    }
    let budget = LetterBudget::new(alphabet, counts)?;
    let mut builder = GraphBuilder::new(&budget);
    builder.reserve(total_len);
    for (_, w) in projections.iter() {
        builder.add_canonical(w);
    }
    let g = builder.finish();
    let TopoOrder::Unique(order) = topo_sort_unique(&g) else {
        return Ok(None);
    };
    let w = unmark(alphabet, &order);
    Ok((ProjectionMap::of_word(&w) == *projections).then_some(w))
}
