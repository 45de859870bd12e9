//! Fixed benchmark inputs shared by the criterion benches.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use supertrop::corpus::{random_matrix, EntryMix};
use supertrop::TropMatrix;

pub const SEED: u64 = 42;

/// A random real `n x n` matrix with integer entries in `-1000..=1000`.
pub fn real_matrix(n: usize) -> TropMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n as u64);
    random_matrix(&mut rng, n, n, &EntryMix::real_only(-1000, 1000))
}

/// A random `n x n` matrix over the default real/ghost/`-inf` mix.
pub fn mixed_matrix(n: usize) -> TropMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED.rotate_left(7) ^ n as u64);
    random_matrix(&mut rng, n, n, &EntryMix::default())
}
