//! Seeded, splittable randomness.
//!
//! Every randomized operation takes an explicit `u64` seed. Independent
//! sub-streams (one per trial or per sample) come from ChaCha8's stream
//! selector, so splitting work across threads does not change results.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

/// Stream `index` of the generator seeded with `seed`.
pub fn stream(seed: u64, index: u64) -> Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
