//! Brute-force oracles written independently of the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rand::Rng;
use wordrecon_core::{Alphabet, Word};

pub fn word(alphabet: &Arc<Alphabet>, s: &str) -> Word {
    Word::parse(alphabet, s).unwrap()
}

pub fn ab(s: &str) -> Word {
    word(&Alphabet::binary(), s)
}

pub fn from_letters(alphabet: &Arc<Alphabet>, letters: &[u32]) -> Word {
    Word::new(alphabet, letters.to_vec()).unwrap()
}

/// Every letter vector of length `len` over `q` letters.
pub fn vectors(q: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q).map(move |l| {
                    let mut v = v.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn all_words(alphabet: &Arc<Alphabet>, len: usize) -> Vec<Word> {
    vectors(alphabet.size() as u32, len)
        .iter()
        .map(|v| from_letters(alphabet, v))
        .collect()
}

pub fn all_words_up_to(alphabet: &Arc<Alphabet>, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|n| all_words(alphabet, n)).collect()
}

pub fn random_word(rng: &mut impl Rng, alphabet: &Arc<Alphabet>, len: usize) -> Word {
    let q = alphabet.size() as u32;
    let letters: Vec<u32> = (0..len).map(|_| rng.gen_range(0..q)).collect();
    from_letters(alphabet, &letters)
}

/// Embeddings of `u` in `w`, found by trying every first position.
pub fn naive_count(w: &[u32], u: &[u32]) -> u64 {
    match u.split_first() {
        None => 1,
        Some((&first, rest)) => (0..w.len())
            .filter(|&i| w[i] == first)
            .map(|i| naive_count(&w[i + 1..], rest))
            .sum(),
    }
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn masks(len: usize, ones: u32) -> impl Iterator<Item = u32> {
    (0u32..1 << len).filter(move |m| m.count_ones() == ones)
}

/// Shuffle product by choosing which positions carry `u`.
pub fn naive_shuffle(u: &[u32], v: &[u32]) -> BTreeMap<Vec<u32>, u64> {
    let len = u.len() + v.len();
    let mut out = BTreeMap::new();
    for m in masks(len, u.len() as u32) {
        let (mut i, mut j) = (0, 0);
        let mut w = Vec::with_capacity(len);
        for p in 0..len {
            if m >> p & 1 == 1 {
                w.push(u[i]);
                i += 1;
            } else {
                w.push(v[j]);
                j += 1;
            }
        }
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

/// Infiltration product by choosing position sets `I` for `u` and `J` for
/// `v` that cover the result and agree where they overlap.
pub fn naive_infiltration(u: &[u32], v: &[u32]) -> BTreeMap<Vec<u32>, u64> {
    let mut out = BTreeMap::new();
    for len in u.len().max(v.len())..=u.len() + v.len() {
        let full = (1u32 << len) - 1;
        for mi in masks(len, u.len() as u32) {
            for mj in masks(len, v.len() as u32) {
                if mi | mj != full {
                    continue;
                }
                let (mut i, mut j) = (0, 0);
                let mut w = Vec::with_capacity(len);
                let mut ok = true;
                for p in 0..len {
                    let (inu, inv) = (mi >> p & 1 == 1, mj >> p & 1 == 1);
                    let letter = match (inu, inv) {
                        (true, true) if u[i] != v[j] => {
                            ok = false;
                            break;
                        }
                        (true, _) => u[i],
                        (false, _) => v[j],
                    };
                    if inu {
                        i += 1;
                    }
                    if inv {
                        j += 1;
                    }
                    w.push(letter);
                }
                if ok {
                    *out.entry(w).or_insert(0) += 1;
                }
            }
        }
    }
    out
}

/// Rotation test for Lyndon words.
pub fn naive_is_lyndon(w: &[u32]) -> bool {
    !w.is_empty()
        && (1..w.len()).all(|r| {
            let rotated: Vec<u32> = w[r..].iter().chain(&w[..r]).copied().collect();
            w < rotated.as_slice()
        })
}

/// Gap vectors `(s_0, …, s_k)` with `Σ s_i = n − k`, found by listing all
/// binary words with `k` block letters.
pub fn decompositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    vectors(2, n)
        .into_iter()
        .filter(|v| v.iter().filter(|&&l| l == 0).count() == k)
        .map(|v| gaps_of(&v))
        .collect()
}

/// Gaps of the letter `1` around the occurrences of `0`.
pub fn gaps_of(v: &[u32]) -> Vec<usize> {
    let mut gaps = vec![0];
    for &l in v {
        if l == 0 {
            gaps.push(0);
        } else {
            *gaps.last_mut().unwrap() += 1;
        }
    }
    gaps
}

/// Counts of `0^level 1` in the word with these gaps, computed by direct
/// embedding count.
pub fn block_value(gaps: &[usize], level: usize) -> u64 {
    let mut w = Vec::new();
    for (i, &g) in gaps.iter().enumerate() {
        if i > 0 {
            w.push(0);
        }
        w.extend(std::iter::repeat_n(1, g));
    }
    let mut u = vec![0; level];
    u.push(1);
    naive_count(&w, &u)
}

/// For each word, the number of words sharing its counts over `queries`.
pub fn class_sizes(words: &[Word], queries: &[Word]) -> Vec<usize> {
    let signatures: Vec<Vec<u64>> = words
        .iter()
        .map(|w| {
            queries
                .iter()
                .map(|u| naive_count(w.letters(), u.letters()))
                .collect()
        })
        .collect();
    let mut sizes: HashMap<&Vec<u64>, usize> = HashMap::new();
    for s in &signatures {
        *sizes.entry(s).or_insert(0) += 1;
    }
    signatures.iter().map(|s| sizes[s]).collect()
}

pub fn project(w: &[u32], keep: &[u32]) -> Vec<u32> {
    w.iter().copied().filter(|l| keep.contains(l)).collect()
}
