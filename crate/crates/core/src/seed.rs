//! Seed derivation and the counter-based bit streams behind every wave.
//!
//! A stream is keyed by hashing `(master_seed, path)`. Word `j` of the stream
//! is the SplitMix64 finalizer applied to `key + (j + 1) * GAMMA`, so any word
//! can be computed without generating the ones before it, and a shorter
//! stream is always a prefix of a longer one.

use serde::{Deserialize, Serialize};

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output function.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[inline]
fn absorb(state: u64, word: u64) -> u64 {
    mix64(state.wrapping_add(GAMMA) ^ mix64(word.wrapping_add(GAMMA)))
}

/// Which of the two reference waves of a noise-bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    /// `L_r`, the logic-low reference.
    L,
    /// `H_r`, the logic-high reference.
    H,
}

impl Role {
    pub fn as_char(self) -> char {
        match self {
            Role::L => 'L',
            Role::H => 'H',
        }
    }
}

/// Derivation path below a master seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeedPath {
    /// Reference wave of noise-bit `bit` (1-based).
    Reference { bit: usize, role: Role },
    /// Per-trial master seed for Monte Carlo harnesses.
    Trial(u64),
    /// Source of the planted product string inside one trial.
    Planted,
}

impl SeedPath {
    fn words(self) -> [u64; 3] {
        match self {
            SeedPath::Reference { bit, role } => [1, bit as u64, role as u64],
            SeedPath::Trial(index) => [2, index, 0],
            SeedPath::Planted => [3, 0, 0],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeedSpec {
    pub master_seed: u64,
    pub path: SeedPath,
}

impl SeedSpec {
    pub fn new(master_seed: u64, path: SeedPath) -> Self {
        Self { master_seed, path }
    }

    pub fn reference(master_seed: u64, bit: usize, role: Role) -> Self {
        Self::new(master_seed, SeedPath::Reference { bit, role })
    }

    pub fn trial(master_seed: u64, index: u64) -> Self {
        Self::new(master_seed, SeedPath::Trial(index))
    }

    /// The 64-bit key of this path. Also used as the derived master seed of
    /// a trial.
    pub fn key(&self) -> u64 {
        self.path
            .words()
            .iter()
            .fold(mix64(self.master_seed), |state, &w| absorb(state, w))
    }

    pub fn stream(&self) -> BitStream {
        BitStream { key: self.key() }
    }
}

/// Random-access stream of uniformly distributed 64-bit words.
#[derive(Debug, Clone, Copy)]
pub struct BitStream {
    key: u64,
}

impl BitStream {
    #[inline]
    pub fn word(&self, index: u64) -> u64 {
        mix64(
            self.key
                .wrapping_add(index.wrapping_add(1).wrapping_mul(GAMMA)),
        )
    }

    /// Bit `index` of the stream, LSB-first within each word.
    #[inline]
    pub fn bit(&self, index: u64) -> bool {
        (self.word(index / 64) >> (index % 64)) & 1 == 1
    }

    /// The first `count` bits.
    pub fn bits(&self, count: usize) -> impl Iterator<Item = bool> + '_ {
        (0..count as u64 / 64 + 1)
            .flat_map(move |w| {
                let word = self.word(w);
                (0..64).map(move |b| (word >> b) & 1 == 1)
            })
            .take(count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_iterator_matches_random_access() {
        let s = SeedSpec::trial(7, 3).stream();
        let seq: Vec<bool> = s.bits(200).collect();
        for (i, &b) in seq.iter().enumerate() {
            assert_eq!(b, s.bit(i as u64));
        }
    }

    #[test]
    fn distinct_paths_give_distinct_keys() {
        let mut keys = std::collections::HashSet::new();
        for bit in 1..=64 {
            for role in [Role::L, Role::H] {
                assert!(keys.insert(SeedSpec::reference(42, bit, role).key()));
            }
        }
        for t in 0..1000 {
            assert!(keys.insert(SeedSpec::trial(42, t).key()));
        }
        assert!(keys.insert(SeedSpec::new(42, SeedPath::Planted).key()));
        assert!(keys.insert(SeedSpec::new(43, SeedPath::Planted).key()));
    }

    #[test]
    fn word_bits_are_balanced() {
        let s = SeedSpec::trial(1, 1).stream();
        let ones: u32 = (0..10_000).map(|i| s.word(i).count_ones()).sum();
        let total = 640_000.0;
        // 4 sigma of a fair binomial
        assert!((ones as f64 - total / 2.0).abs() < 4.0 * (total / 4.0f64).sqrt());
    }
}
