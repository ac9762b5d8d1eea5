//! Seeded randomness.
//!
//! Every random choice in the crate flows from a `u64` seed through
//! ChaCha8, a counter-based generator whose output is identical on every
//! platform.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `k` distinct ids drawn uniformly from `0..n`, sorted ascending.
pub fn sample_ids(rng: &mut Rng, n: usize, k: usize) -> Vec<usize> {
    let mut ids = index::sample(rng, n, k).into_vec();
    ids.sort_unstable();
    ids
}
