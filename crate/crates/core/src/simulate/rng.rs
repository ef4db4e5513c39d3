use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::intervals::normal_quantile;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seedable per-path random stream.
///
/// Each `(seed, path_index)` pair maps to an independent ChaCha8 stream, so
/// batches are reproducible regardless of how paths are scheduled. Normal
/// variates are produced by inverting the normal CDF, which keeps draws a
/// pure function of the seed.
#[derive(Debug, Clone)]
pub struct PathRng {
    inner: ChaCha8Rng,
}

impl PathRng {
    pub fn new(seed: u64) -> Self {
        Self::for_path(seed, 0)
    }

    pub fn for_path(seed: u64, path_index: u64) -> Self {
        let mixed = splitmix64(seed ^ splitmix64(path_index.wrapping_add(0x5851_f42d_4c95_7f2d)));
        Self {
            inner: ChaCha8Rng::seed_from_u64(mixed),
        }
    }

    /// Uniform draw on the open interval (0, 1).
    pub fn uniform_open(&mut self) -> f64 {
        ((self.inner.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    pub fn standard_normal(&mut self) -> f64 {
        normal_quantile(self.uniform_open()).expect("open-interval uniform is a valid probability")
    }
}

impl RngCore for PathRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.inner.try_fill_bytes(dest)
    }
}
