//! Shared workloads for the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wonderful_core::testing::random_valid_system;
use wonderful_core::SphericalSystem;

/// Deterministic batch of random valid systems on at most `max_rank`
/// simple roots.
pub fn random_systems(count: usize, max_rank: usize, seed: u64) -> Vec<SphericalSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_valid_system(&mut rng, max_rank))
        .collect()
}
