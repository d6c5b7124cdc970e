//! Seeded random source for the Monte-Carlo amplification runs.
//!
//! Streams are ChaCha with 8 rounds, keyed by the 64-bit seed written
//! little-endian into the first 8 key bytes (remaining 24 bytes zero), with
//! the 64-bit stream id selecting the nonce and the block counter starting at
//! zero. Uniforms take the top 53 bits of each `u64` output. Any ChaCha8
//! implementation with the same key/nonce layout reproduces every draw.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Identifier recorded alongside every seeded result.
pub const ALGORITHM: &str = "chacha8-le64key-stream64/u53";

#[derive(Debug, Clone)]
pub struct TrialRng {
    inner: ChaCha8Rng,
}

impl TrialRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        let mut inner = ChaCha8Rng::from_seed(key);
        inner.set_stream(stream);
        Self { inner }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// A Bernoulli draw with success probability `p`.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.next_unit() < p
    }
}
