//! Seedable, counter-based random streams.
//!
//! A stream is identified by `(seed, substream)`. ChaCha's keystream is a pure
//! function of key, stream id and block counter, so draws do not depend on how
//! replicates are scheduled across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RandomStream {
    pub seed: u64,
    pub substream: u64,
}

impl RandomStream {
    pub fn new(seed: u64, substream: u64) -> Self {
        Self { seed, substream }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.substream);
        rng
    }
}

/// `n` i.i.d. standard Normal variates from the stream.
pub fn standard_normal_draws(stream: RandomStream, n: usize) -> Vec<f64> {
    let mut rng = stream.rng();
    (0..n).map(|_| StandardNormal.sample(&mut rng)).collect()
}
