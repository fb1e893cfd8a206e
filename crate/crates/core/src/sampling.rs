//! Seeded random streams and Latin hypercube designs.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent deterministic stream for `(seed, purpose, index)`.
pub fn stream(seed: u64, purpose: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ purpose.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    rng.set_stream(index);
    rng
}

/// Derives a 64-bit seed for a sub-computation.
pub fn derive_seed(seed: u64, purpose: u64, index: u64) -> u64 {
    stream(seed, purpose, index).gen()
}

/// `n` points in `[0,1]^dim`, one per stratum along every axis.
pub fn latin_hypercube<R: Rng + ?Sized>(n: usize, dim: usize, rng: &mut R) -> Vec<Vec<f64>> {
    let mut points = alloc::vec![alloc::vec![0.0; dim]; n];
    let mut strata: Vec<usize> = (0..n).collect();
    for j in 0..dim {
        strata.shuffle(rng);
        for (i, p) in points.iter_mut().enumerate() {
            p[j] = (strata[i] as f64 + rng.gen::<f64>()) / n as f64;
        }
    }
    points
}
