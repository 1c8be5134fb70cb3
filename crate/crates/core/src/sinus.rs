//! Sinusoidal bit representations and their degeneracy.
//!
//! Bit values are complex exponentials `exp(j 2 pi f t)` at integer multiples
//! of the base frequency `f0 = 1`. Multiplying exponentials adds frequencies,
//! so a product string carries the single frequency `sum_r f(r, X_r)`. Two
//! strings with the same sum are indistinguishable.
//!
//! | bit | value | linear | exponential |
//! |-----|-------|--------|-------------|
//! | r   | L     | 2r - 1 | 2^(2r - 2)  |
//! | r   | H     | 2r     | 2^(2r - 1)  |
//!
//! All degeneracy analysis is exact integer arithmetic.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{NblError, Result};
use crate::hyperspace::ProductString;
use crate::seed::Role;

/// Largest `N` for the exponential representation: keeps
/// `2 * (2^(2N) - 1) + 1` inside a `u64`.
pub const EXPONENTIAL_BITS_CAP: usize = 31;

/// Largest `N` for the linear representation.
pub const LINEAR_BITS_CAP: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SinusKind {
    Linear,
    Exponential,
}

impl fmt::Display for SinusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SinusKind::Linear => "linear",
            SinusKind::Exponential => "exponential",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SinusRepresentation {
    kind: SinusKind,
    bits: usize,
}

impl SinusRepresentation {
    pub fn new(kind: SinusKind, bits: usize) -> Result<Self> {
        let cap = match kind {
            SinusKind::Linear => LINEAR_BITS_CAP,
            SinusKind::Exponential => EXPONENTIAL_BITS_CAP,
        };
        if bits > cap {
            return Err(NblError::CapExceeded {
                what: "N",
                requested: bits,
                cap,
            });
        }
        Ok(Self { kind, bits })
    }

    pub fn linear(bits: usize) -> Result<Self> {
        Self::new(SinusKind::Linear, bits)
    }

    pub fn exponential(bits: usize) -> Result<Self> {
        Self::new(SinusKind::Exponential, bits)
    }

    pub fn kind(&self) -> SinusKind {
        self.kind
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Frequency of value `role` of bit `r` (1-based), in units of `f0`.
    pub fn value_frequency(&self, r: usize, role: Role) -> Result<u64> {
        if r == 0 || r > self.bits {
            return Err(NblError::BitOutOfRange {
                index: r,
                bits: self.bits,
            });
        }
        Ok(self.frequency_unchecked(r, role))
    }

    #[inline]
    fn frequency_unchecked(&self, r: usize, role: Role) -> u64 {
        let r = r as u64;
        match (self.kind, role) {
            (SinusKind::Linear, Role::L) => 2 * r - 1,
            (SinusKind::Linear, Role::H) => 2 * r,
            (SinusKind::Exponential, Role::L) => 1 << (2 * r - 2),
            (SinusKind::Exponential, Role::H) => 1 << (2 * r - 1),
        }
    }

    /// Frequency of the product string: the sum of its factors' frequencies.
    pub fn product_frequency(&self, ps: &ProductString) -> Result<u64> {
        if ps.bits() != self.bits {
            return Err(NblError::DimensionMismatch {
                expected: self.bits,
                actual: ps.bits(),
            });
        }
        Ok(ps
            .roles()
            .enumerate()
            .map(|(i, role)| self.frequency_unchecked(i + 1, role))
            .sum())
    }

    /// Highest frequency in the system: the sum of all `2N` assigned
    /// frequencies, `N(2N + 1)` (linear) or `2^(2N) - 1` (exponential).
    pub fn max_system_frequency(&self) -> u64 {
        let n = self.bits as u64;
        match self.kind {
            SinusKind::Linear => n * (2 * n + 1),
            SinusKind::Exponential => (1u64 << (2 * n)) - 1,
        }
    }

    /// Samples needed over one `1/f0` window to resolve every product
    /// frequency: `2 f_max + 1` (Nyquist rate plus the DC bin).
    pub fn readout_sample_count(&self) -> u64 {
        2 * self.max_system_frequency() + 1
    }

    /// Groups all `2^N` product strings by frequency and keeps the groups
    /// with more than one member. Refuses `N` above 16.
    pub fn find_degeneracies(&self) -> Result<DegeneracyReport> {
        let mut by_frequency: BTreeMap<u64, Vec<ProductString>> = BTreeMap::new();
        for ps in ProductString::enumerate(self.bits)? {
            by_frequency
                .entry(self.product_frequency(&ps)?)
                .or_default()
                .push(ps);
        }
        let groups = by_frequency
            .into_iter()
            .filter(|(_, members)| members.len() > 1)
            .map(|(frequency, members)| CollisionGroup { frequency, members })
            .collect();
        Ok(DegeneracyReport {
            kind: self.kind,
            bits: self.bits,
            groups,
        })
    }
}

pub fn value_frequency(rep: &SinusRepresentation, r: usize, role: Role) -> Result<u64> {
    rep.value_frequency(r, role)
}

pub fn product_frequency(rep: &SinusRepresentation, ps: &ProductString) -> Result<u64> {
    rep.product_frequency(ps)
}

pub fn find_degeneracies(rep: &SinusRepresentation) -> Result<DegeneracyReport> {
    rep.find_degeneracies()
}

pub fn max_system_frequency(rep: &SinusRepresentation) -> u64 {
    rep.max_system_frequency()
}

pub fn readout_sample_count(rep: &SinusRepresentation) -> u64 {
    rep.readout_sample_count()
}

/// `exp(j 2 pi F k / samples)` for `k = 0..samples`, with `F` the product
/// frequency: one `1/f0` window of the product waveform.
pub fn realize_sinus_product(
    rep: &SinusRepresentation,
    ps: &ProductString,
    samples: usize,
) -> Result<Vec<Complex64>> {
    Ok(realize_frequency(rep.product_frequency(ps)?, samples))
}

/// One window of `exp(j 2 pi frequency t)`, sampled at `samples` points.
pub fn realize_frequency(frequency: u64, samples: usize) -> Vec<Complex64> {
    let n = samples as u128;
    (0..n)
        .map(|k| {
            // Reduce the phase exactly before converting to float.
            let phase = (frequency as u128 * k) % n;
            Complex64::from_polar(1.0, TAU * phase as f64 / samples as f64)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollisionGroup {
    pub frequency: u64,
    pub members: Vec<ProductString>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegeneracyReport {
    pub kind: SinusKind,
    #[serde(rename = "N")]
    pub bits: usize,
    pub groups: Vec<CollisionGroup>,
}

impl DegeneracyReport {
    /// Number of strings that share their frequency with another string.
    pub fn collided_strings(&self) -> usize {
        self.groups.iter().map(|g| g.members.len()).sum()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}
