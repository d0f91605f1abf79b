//! Seeded input generators shared by the benchmarks.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wordrecon_core::{Alphabet, Letter, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The first `q` symbols of `a..z0..9`.
pub fn alphabet(q: usize) -> Arc<Alphabet> {
    Alphabet::new("abcdefghijklmnopqrstuvwxyz0123456789".chars().take(q)).unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, alphabet: &Arc<Alphabet>, len: usize) -> Word {
    let q = alphabet.size() as Letter;
    Word::new(alphabet, (0..len).map(|_| rng.gen_range(0..q)).collect()).unwrap()
}

/// `k` random subsets of a `q`-letter alphabet, each letter kept with probability `density`.
pub fn random_sets(rng: &mut ChaCha8Rng, q: usize, k: usize, density: f64) -> Vec<Vec<Letter>> {
    (0..k)
        .map(|_| (0..q as Letter).filter(|_| rng.gen_bool(density)).collect())
        .collect()
}
