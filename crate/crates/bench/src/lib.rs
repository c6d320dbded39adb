//! Fixed inputs for the decider benchmarks.

use bthompson_core::selftest::{random_bv_word, random_word};
use bthompson_core::{Family, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `count` seeded random words in `v`, `π`, `π̄`.
pub fn bv_words(count: usize, max_index: u32, max_len: usize) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    (0..count).map(|_| random_bv_word(&mut rng, max_index, max_len)).collect()
}

/// `count` seeded random words in the given families.
pub fn words(families: &[Family], count: usize, max_index: u32, max_len: usize) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    (0..count).map(|_| random_word(&mut rng, families, max_index, max_len)).collect()
}
