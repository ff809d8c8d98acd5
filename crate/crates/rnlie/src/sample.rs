//! Deterministic sampling of exact rationals.
//!
//! All randomised checks in the crate draw from a [`Sampler`] seeded
//! explicitly, so reports and test runs are reproducible byte for byte.
//! Denominators are kept small for readable failure output.

use crate::rat::Rat;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seeded generator of small exact rationals.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A rational with numerator in `[-height, height]` and denominator in
    /// `[1, 10]`.
    pub fn rat(&mut self, height: i64) -> Rat {
        let p = self.rng.gen_range(-height..=height);
        let q = self.rng.gen_range(1..=10);
        Rat::new(p, q)
    }

    pub fn nonzero_rat(&mut self, height: i64) -> Rat {
        loop {
            let r = self.rat(height);
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn positive_rat(&mut self, height: i64) -> Rat {
        let p = self.rng.gen_range(1..=height);
        let q = self.rng.gen_range(1..=10);
        Rat::new(p, q)
    }

    pub fn negative_rat(&mut self, height: i64) -> Rat {
        -self.positive_rat(height)
    }

    /// Uniform choice of an index below `n`.
    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// A rational drawn from the open interval `(-1, 1)` excluding 0,
    /// i.e. `0 < |x| < 1`.
    pub fn open_unit_nonzero(&mut self) -> Rat {
        loop {
            let q = self.rng.gen_range(2..=10);
            let p = self.rng.gen_range(-(q - 1)..=(q - 1));
            if p != 0 {
                return Rat::new(p, q);
            }
        }
    }
}
