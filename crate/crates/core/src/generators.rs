//! Seeded random matrices, weights and permutations.
//!
//! Randomness comes from xoshiro256++ seeded through SplitMix64, both fixed
//! and platform independent, so every sample is a pure function of its seed.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::PcmError;
use crate::math;
use crate::matrix::{Pcm, Permutation, MIN_ORDER};

/// Log-range of sampled judgments: entries fall in `[1/9, 9]`.
pub const LOG_SCALE: f64 = 2.1972245773362196; // ln 9

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct RngSeed(pub u64);

impl RngSeed {
    /// Derives an independent child seed by mixing in `salt`.
    pub fn derive(self, salt: u64) -> RngSeed {
        RngSeed(splitmix64(self.0 ^ splitmix64(salt)))
    }
}

impl From<u64> for RngSeed {
    fn from(value: u64) -> Self {
        Self(value)
    }
}

/// SplitMix64 output function.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stateful sampler; the free functions below are one-shot wrappers.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: Xoshiro256PlusPlus,
}

impl Sampler {
    pub fn new(seed: RngSeed) -> Self {
        Self {
            rng: Xoshiro256PlusPlus::seed_from_u64(seed.0),
        }
    }

    /// Uniform on `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    /// Uniform integer in `0..bound`.
    pub fn below(&mut self, bound: usize) -> usize {
        self.rng.random_range(0..bound)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }

    /// `exp(u)` with `u` uniform on `[-ln 9, ln 9]`.
    pub fn judgment(&mut self) -> f64 {
        math::exp(self.uniform(-LOG_SCALE, LOG_SCALE))
    }

    pub fn weights(&mut self, n: usize) -> Result<Vec<f64>, PcmError> {
        if n < MIN_ORDER {
            return Err(PcmError::OrderTooSmall { order: n });
        }
        Ok((0..n).map(|_| self.judgment()).collect())
    }

    pub fn pcm(&mut self, n: usize) -> Result<Pcm, PcmError> {
        if n < MIN_ORDER {
            return Err(PcmError::OrderTooSmall { order: n });
        }
        let upper: Vec<f64> = (0..n * (n - 1) / 2).map(|_| self.judgment()).collect();
        Pcm::from_upper_triangle(n, &upper)
    }

    pub fn consistent(&mut self, n: usize) -> Result<Pcm, PcmError> {
        let w = self.weights(n)?;
        Pcm::consistent_from_weights(&w)
    }

    pub fn permutation(&mut self, n: usize) -> Permutation {
        let mut map: Vec<usize> = (0..n).collect();
        map.shuffle(&mut self.rng);
        Permutation::new(map).unwrap_or_else(|_| Permutation::identity(n))
    }

    /// Ordered off-diagonal pair `(p, q)`, `p != q`.
    pub fn off_diagonal(&mut self, n: usize) -> (usize, usize) {
        let p = self.below(n);
        let mut q = self.below(n - 1);
        if q >= p {
            q += 1;
        }
        (p, q)
    }
}

pub fn random_weights(n: usize, seed: RngSeed) -> Result<Vec<f64>, PcmError> {
    Sampler::new(seed).weights(n)
}

pub fn random_pcm(n: usize, seed: RngSeed) -> Result<Pcm, PcmError> {
    Sampler::new(seed).pcm(n)
}

pub fn random_consistent(n: usize, seed: RngSeed) -> Result<Pcm, PcmError> {
    Pcm::consistent_from_weights(&random_weights(n, seed)?)
}

pub fn random_permutation(n: usize, seed: RngSeed) -> Permutation {
    Sampler::new(seed).permutation(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::index_k;

    #[test]
    fn weights_are_deterministic_and_positive() {
        let a = random_weights(6, RngSeed(7)).unwrap();
        assert_eq!(a, random_weights(6, RngSeed(7)).unwrap());
        assert_ne!(a, random_weights(6, RngSeed(8)).unwrap());
        assert!(a.iter().all(|&w| w > 0.0 && (1.0 / 9.0..=9.0).contains(&w)));
        assert!(Pcm::consistent_from_weights(&a)
            .unwrap()
            .is_consistent(1e-9));
        assert_eq!(
            random_weights(2, RngSeed(1)).unwrap_err(),
            PcmError::OrderTooSmall { order: 2 }
        );
    }

    #[test]
    fn random_pcm_is_valid_and_deterministic() {
        let m = random_pcm(5, RngSeed(3)).unwrap();
        assert_eq!(m, random_pcm(5, RngSeed(3)).unwrap());
        assert!(Pcm::new(m.to_rows()).is_ok());
        assert!(random_pcm(2, RngSeed(3)).is_err());
    }

    #[test]
    fn random_3x3_matrices_are_inconsistent() {
        let mut s = Sampler::new(RngSeed(11));
        let positive = (0..1000)
            .filter(|_| index_k(&s.pcm(3).unwrap()) > 0.0)
            .count();
        assert_eq!(positive, 1000);
    }

    #[test]
    fn random_consistent_matches_weights() {
        for n in 3..=7 {
            let seed = RngSeed(n as u64);
            let m = random_consistent(n, seed).unwrap();
            assert!(m.is_consistent(1e-9));
            assert_eq!(
                m,
                Pcm::consistent_from_weights(&random_weights(n, seed).unwrap()).unwrap()
            );
        }
        assert!(random_consistent(1, RngSeed(0)).is_err());
    }

    #[test]
    fn permutations_are_uniform_bijections() {
        assert_eq!(random_permutation(1, RngSeed(0)), Permutation::identity(1));
        let all = Permutation::all(3);
        let mut counts = [0usize; 6];
        let mut s = Sampler::new(RngSeed(99));
        for _ in 0..6000 {
            let p = s.permutation(3);
            assert!(Permutation::new(p.as_slice().to_vec()).is_ok());
            counts[all.iter().position(|q| *q == p).unwrap()] += 1;
        }
        for c in counts {
            let freq = c as f64 / 6000.0;
            assert!((freq - 1.0 / 6.0).abs() <= 0.02, "{counts:?}");
        }
    }

    #[test]
    fn off_diagonal_pairs_cover_everything() {
        let mut s = Sampler::new(RngSeed(5));
        let mut seen = [[false; 4]; 4];
        for _ in 0..500 {
            let (p, q) = s.off_diagonal(4);
            assert_ne!(p, q);
            seen[p][q] = true;
        }
        let hits = seen.iter().flatten().filter(|b| **b).count();
        assert_eq!(hits, 12);
    }

    #[test]
    fn derived_seeds_differ() {
        let root = RngSeed(1);
        assert_ne!(root.derive(1), root.derive(2));
        assert_eq!(root.derive(1), root.derive(1));
    }
}
