use crate::error::{NblError, Result};
use crate::seed::{Role, SeedSpec};
use crate::wave::{generate_rtw, ClockedWave};

/// The `2N` reference waves `{L_r, H_r}` of an `N`-noise-bit system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceSystem {
    clocks: usize,
    // waves[r - 1] = (L_r, H_r)
    waves: Vec<(ClockedWave, ClockedWave)>,
}

impl ReferenceSystem {
    /// Each wave is generated from its own `(r, role)` path below
    /// `master_seed`.
    pub fn new(master_seed: u64, bits: usize, clocks: usize) -> Self {
        let waves = (1..=bits)
            .map(|r| {
                (
                    generate_rtw(&SeedSpec::reference(master_seed, r, Role::L), clocks),
                    generate_rtw(&SeedSpec::reference(master_seed, r, Role::H), clocks),
                )
            })
            .collect();
        Self { clocks, waves }
    }

    /// Builds a system from explicit `(L_r, H_r)` pairs, all of one length.
    pub fn from_waves(clocks: usize, waves: Vec<(ClockedWave, ClockedWave)>) -> Result<Self> {
        for (l, h) in &waves {
            for w in [l, h] {
                if w.len() != clocks {
                    return Err(NblError::LengthMismatch {
                        left: clocks,
                        right: w.len(),
                    });
                }
            }
        }
        Ok(Self { clocks, waves })
    }

    pub fn bits(&self) -> usize {
        self.waves.len()
    }

    pub fn clocks(&self) -> usize {
        self.clocks
    }

    /// The reference wave of bit `r` (1-based) for `role`.
    pub fn wave(&self, r: usize, role: Role) -> Result<&ClockedWave> {
        let (l, h) = self
            .waves
            .get(r.wrapping_sub(1))
            .ok_or(NblError::BitOutOfRange {
                index: r,
                bits: self.bits(),
            })?;
        Ok(match role {
            Role::L => l,
            Role::H => h,
        })
    }

    /// `(L_r, H_r)` pairs in bit order.
    pub fn pairs(&self) -> impl Iterator<Item = (&ClockedWave, &ClockedWave)> {
        self.waves.iter().map(|(l, h)| (l, h))
    }

    pub(crate) fn check_bits(&self, bits: usize) -> Result<()> {
        if bits != self.bits() {
            return Err(NblError::DimensionMismatch {
                expected: self.bits(),
                actual: bits,
            });
        }
        Ok(())
    }
}

pub fn make_reference_system(master_seed: u64, bits: usize, clocks: usize) -> ReferenceSystem {
    ReferenceSystem::new(master_seed, bits, clocks)
}
