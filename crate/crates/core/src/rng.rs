//! Seeded, splittable random streams.
//!
//! A [`RngSeed`] names one ChaCha8 keystream: `seed` picks the key and
//! `stream_id` the 64-bit stream (nonce). Two seeds with equal fields always
//! produce the same sequence. Child seeds derived with [`RngSeed::child`]
//! address disjoint streams, which is how parallel trials and per-step
//! Hamiltonian draws stay independent.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct RngSeed {
    pub seed: u64,
    pub stream_id: u64,
}

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl RngSeed {
    pub const fn new(seed: u64) -> Self {
        Self { seed, stream_id: 0 }
    }

    pub const fn with_stream(self, stream_id: u64) -> Self {
        Self {
            seed: self.seed,
            stream_id,
        }
    }

    /// Derive an independent seed for sub-task `tag`.
    ///
    /// The child's key mixes both parent fields, so children of different
    /// parents never share a keystream even when their tags agree.
    pub fn child(self, tag: u64) -> Self {
        let key = splitmix64(self.seed ^ splitmix64(self.stream_id.wrapping_add(GOLDEN_GAMMA)));
        Self {
            seed: key,
            stream_id: tag,
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream_id);
        rng
    }
}

/// One draw from `Normal(0, std_dev^2)`.
#[inline]
pub(crate) fn normal<T: Real, R: rand::Rng + ?Sized>(rng: &mut R, std_dev: f64) -> T {
    let z: f64 = StandardNormal.sample(rng);
    T::of(z * std_dev)
}
