//! Reading the bit values of a single product string back from its waveform.
//!
//! Two decoders return the same [`ReadoutResult`]:
//!
//! * [`brute_force_readout`] tries all `2^N` strings against the waveform.
//! * [`gf2_fast_readout`] uses the fact that a product of bipolar waves is an
//!   XOR of sign bits. With `-1 -> 1`, `+1 -> 0` and `a_r(t) = l_r(t) ^ h_r(t)`,
//!   every clock gives one linear equation over GF(2):
//!
//!   ```text
//!   sum_r c_r a_r(t) = w(t) + sum_r l_r(t)
//!   ```
//!
//!   where `c_r = 1` iff bit `r` is `H`. Gaussian elimination then yields the
//!   survivors in `O(K N)` plus elimination instead of `O(2^N K N)`.
//!
//! The GF(2) decoder is a concrete fast measurement with an exponentially
//! vanishing failure rate. It is not the published fast-measurement algorithm
//! for hyperspace vectors; only that algorithm's clock bound is provided here,
//! as [`stacho_clock_bound`].

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{NblError, Result};
use crate::gf2::Gf2System;
use crate::hyperspace::{realize_product, ProductString, EXPANSION_CAP, MAX_PRODUCT_BITS};
use crate::reference::ReferenceSystem;
use crate::seed::{SeedPath, SeedSpec};
use crate::wave::{check_lengths, IntegerWave};

/// Largest rank deficit for which [`gf2_fast_readout`] lists survivors.
pub const MAX_ENUMERATED_DEFICIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReadoutStatus {
    Unique,
    Ambiguous,
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Survivors {
    Listed(BTreeSet<ProductString>),
    /// Too many to materialize; only the count `2^deficit` is kept.
    Elided {
        deficit: usize,
    },
}

impl Survivors {
    pub fn count(&self) -> u128 {
        match self {
            Survivors::Listed(set) => set.len() as u128,
            Survivors::Elided { deficit } => 1u128 << deficit,
        }
    }

    pub fn listed(&self) -> Option<&BTreeSet<ProductString>> {
        match self {
            Survivors::Listed(set) => Some(set),
            Survivors::Elided { .. } => None,
        }
    }

    /// Membership test; `None` when the set was elided.
    pub fn contains(&self, ps: &ProductString) -> Option<bool> {
        self.listed().map(|s| s.contains(ps))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadoutResult {
    pub status: ReadoutStatus,
    pub survivors: Survivors,
    pub clocks_used: usize,
}

impl ReadoutResult {
    fn from_survivors(survivors: Survivors, clocks_used: usize) -> Self {
        let status = match survivors.count() {
            0 => ReadoutStatus::Inconsistent,
            1 => ReadoutStatus::Unique,
            _ => ReadoutStatus::Ambiguous,
        };
        Self {
            status,
            survivors,
            clocks_used,
        }
    }

    pub fn is_unique(&self) -> bool {
        self.status == ReadoutStatus::Unique
    }

    /// The decoded string when the readout is unique.
    pub fn decoded(&self) -> Option<ProductString> {
        match (&self.status, &self.survivors) {
            (ReadoutStatus::Unique, Survivors::Listed(s)) => s.first().copied(),
            _ => None,
        }
    }

    /// Same status and same survivors. Sets that one side elided are
    /// compared by count.
    pub fn agrees_with(&self, other: &ReadoutResult) -> bool {
        if self.status != other.status || self.clocks_used != other.clocks_used {
            return false;
        }
        match (self.survivors.listed(), other.survivors.listed()) {
            (Some(a), Some(b)) => a == b,
            _ => self.survivors.count() == other.survivors.count(),
        }
    }
}

fn check_observation(observed: &IntegerWave, refsys: &ReferenceSystem) -> Result<()> {
    check_lengths(observed.len(), refsys.clocks())
}

/// Keeps every product string whose realization matches `observed` at every
/// clock. Refuses `N` above 16.
pub fn brute_force_readout(
    observed: &IntegerWave,
    refsys: &ReferenceSystem,
) -> Result<ReadoutResult> {
    check_observation(observed, refsys)?;
    let bits = refsys.bits();
    if bits > EXPANSION_CAP {
        return Err(NblError::CapExceeded {
            what: "N",
            requested: bits,
            cap: EXPANSION_CAP,
        });
    }
    let pairs: Vec<_> = refsys.pairs().collect();
    let survivors = ProductString::enumerate(bits)?
        .filter(|ps| {
            (0..refsys.clocks()).all(|t| {
                let sample = ps
                    .roles()
                    .zip(&pairs)
                    .map(|(role, (l, h))| match role {
                        crate::seed::Role::L => l.samples()[t],
                        crate::seed::Role::H => h.samples()[t],
                    })
                    .product::<i8>();
                sample as i64 == observed.samples()[t]
            })
        })
        .collect();
    Ok(ReadoutResult::from_survivors(
        Survivors::Listed(survivors),
        refsys.clocks(),
    ))
}

/// GF(2) linearization decoder. Survivors are listed when the rank deficit
/// is at most [`MAX_ENUMERATED_DEFICIT`], otherwise only counted.
pub fn gf2_fast_readout(observed: &IntegerWave, refsys: &ReferenceSystem) -> Result<ReadoutResult> {
    check_observation(observed, refsys)?;
    let bits = refsys.bits();
    if bits > MAX_PRODUCT_BITS {
        return Err(NblError::CapExceeded {
            what: "N",
            requested: bits,
            cap: MAX_PRODUCT_BITS,
        });
    }
    let clocks = refsys.clocks();
    let inconsistent = || ReadoutResult::from_survivors(Survivors::Listed(BTreeSet::new()), clocks);

    let mut system = Gf2System::new(bits);
    let mut row = vec![0u64; system.words_per_row()];
    for (t, &w) in observed.samples().iter().enumerate() {
        let w_bit = match w {
            -1 => true,
            1 => false,
            // No product of bipolar waves can take this value.
            _ => return Ok(inconsistent()),
        };
        row.iter_mut().for_each(|x| *x = 0);
        let mut rhs = w_bit;
        for (j, (l, h)) in refsys.pairs().enumerate() {
            let (lb, hb) = (l.sign_bit(t), h.sign_bit(t));
            if lb ^ hb {
                row[j / 64] |= 1 << (j % 64);
            }
            rhs ^= lb;
        }
        system.push_row_words(&row, rhs);
    }

    let solution = system.solve();
    let survivors = match solution.deficit() {
        None => Survivors::Listed(BTreeSet::new()),
        Some(d) if d > MAX_ENUMERATED_DEFICIT => Survivors::Elided { deficit: d },
        Some(_) => Survivors::Listed(
            solution
                .solutions()
                .iter()
                .map(|v| high_bits_to_string(bits, v.first().copied().unwrap_or(0)))
                .collect(),
        ),
    };
    Ok(ReadoutResult::from_survivors(survivors, clocks))
}

// Column j (bit r = j + 1) set means H_r.
fn high_bits_to_string(bits: usize, columns: u64) -> ProductString {
    let mut mask = 0u64;
    for j in 0..bits {
        if (columns >> j) & 1 == 1 {
            mask |= 1 << (bits - 1 - j);
        }
    }
    ProductString::new(bits, mask).expect("bits within u64 mask")
}

/// The planted string of trial `trial_seed`: a uniform `N`-bit selection.
pub fn planted_string(trial_seed: u64, bits: usize) -> Result<ProductString> {
    let word = SeedSpec::new(trial_seed, SeedPath::Planted)
        .stream()
        .word(0);
    let mask = if bits >= 64 {
        word
    } else {
        word & ((1u64 << bits) - 1)
    };
    ProductString::new(bits, mask)
}

/// One Monte Carlo trial: fresh reference system and planted string, both
/// derived from `(master_seed, trial)`. Returns the GF(2) readout.
pub fn run_trial(
    bits: usize,
    clocks: usize,
    master_seed: u64,
    trial: u64,
) -> Result<(ProductString, ReadoutResult)> {
    let trial_seed = SeedSpec::trial(master_seed, trial).key();
    let refsys = ReferenceSystem::new(trial_seed, bits, clocks);
    let planted = planted_string(trial_seed, bits)?;
    let observed = IntegerWave::from(realize_product(&planted, &refsys)?);
    Ok((planted, gf2_fast_readout(&observed, &refsys)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FailureCount {
    pub trials: u64,
    pub failures: u64,
}

impl FailureCount {
    pub fn rate(&self) -> f64 {
        self.failures as f64 / self.trials as f64
    }
}

/// Counts trials whose GF(2) readout is not unique. Trials run in parallel;
/// the count is identical to a sequential run.
pub fn count_failures(
    bits: usize,
    clocks: usize,
    trials: u64,
    master_seed: u64,
) -> Result<FailureCount> {
    if trials == 0 {
        return Err(NblError::Config("trials must be at least 1".into()));
    }
    let failures = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(bits, clocks, master_seed, t).map(|(_, r)| !r.is_unique() as u64))
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(FailureCount { trials, failures })
}

pub fn measure_failure_rate(
    bits: usize,
    clocks: usize,
    trials: u64,
    master_seed: u64,
) -> Result<f64> {
    count_failures(bits, clocks, trials, master_seed).map(|c| c.rate())
}

/// `N (log2 N)^(1 + epsilon)` clock periods.
pub fn stacho_clock_bound(bits: usize, epsilon: f64) -> Result<f64> {
    if bits < 2 {
        return Err(NblError::Domain(format!(
            "clock bound needs N >= 2, got N = {bits}"
        )));
    }
    if !(epsilon >= 0.0) || !epsilon.is_finite() {
        return Err(NblError::Domain(format!(
            "epsilon must be finite and non-negative, got {epsilon}"
        )));
    }
    let n = bits as f64;
    Ok(n * n.log2().powf(1.0 + epsilon))
}

/// `2N log4(N / P)` time steps.
pub fn timeshifted_readout_steps(bits: usize, failure_probability: f64) -> Result<f64> {
    if bits < 1 {
        return Err(NblError::Domain("time-shifted readout needs N >= 1".into()));
    }
    if !(failure_probability > 0.0) || !failure_probability.is_finite() {
        return Err(NblError::Domain(format!(
            "failure probability must be positive, got {failure_probability}"
        )));
    }
    let n = bits as f64;
    let ratio = n / failure_probability;
    if ratio <= 1.0 {
        return Err(NblError::Domain(format!(
            "N / P = {ratio} must exceed 1 for a positive step count"
        )));
    }
    Ok(2.0 * n * (ratio.log2() / 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::make_reference_system;

    fn planted(
        bits: usize,
        seed: u64,
        clocks: usize,
    ) -> (ProductString, ReferenceSystem, IntegerWave) {
        let sys = make_reference_system(seed, bits, clocks);
        let ps = planted_string(seed, bits).unwrap();
        let w = IntegerWave::from(realize_product(&ps, &sys).unwrap());
        (ps, sys, w)
    }

    #[test]
    fn zero_clocks_leave_everything() {
        let (_, sys, w) = planted(4, 1, 0);
        for r in [
            brute_force_readout(&w, &sys).unwrap(),
            gf2_fast_readout(&w, &sys).unwrap(),
        ] {
            assert_eq!(r.status, ReadoutStatus::Ambiguous);
            assert_eq!(r.survivors.count(), 16);
            assert_eq!(r.clocks_used, 0);
        }
    }

    #[test]
    fn zero_clocks_wide_system_is_elided() {
        let (_, sys, w) = planted(12, 1, 0);
        let r = gf2_fast_readout(&w, &sys).unwrap();
        assert_eq!(r.survivors, Survivors::Elided { deficit: 12 });
        assert_eq!(r.status, ReadoutStatus::Ambiguous);
        assert!(brute_force_readout(&w, &sys).unwrap().agrees_with(&r));
    }

    #[test]
    fn unique_readout_n4_k64() {
        let (ps, sys, w) = planted(4, 0xC0FFEE, 64);
        let brute = brute_force_readout(&w, &sys).unwrap();
        assert_eq!(brute.status, ReadoutStatus::Unique);
        assert_eq!(brute.decoded(), Some(ps));
        let fast = gf2_fast_readout(&w, &sys).unwrap();
        assert_eq!(fast, brute);
    }

    #[test]
    fn zero_sample_is_inconsistent() {
        let (_, sys, w) = planted(4, 3, 32);
        let mut samples = w.samples().to_vec();
        samples[17] = 0;
        let w = IntegerWave::new(samples);
        for r in [
            brute_force_readout(&w, &sys).unwrap(),
            gf2_fast_readout(&w, &sys).unwrap(),
        ] {
            assert_eq!(r.status, ReadoutStatus::Inconsistent);
            assert_eq!(r.survivors.count(), 0);
        }
    }

    #[test]
    fn flipped_sample_is_inconsistent_at_full_rank() {
        let (_, sys, w) = planted(3, 5, 64);
        let mut samples = w.samples().to_vec();
        samples[0] = -samples[0];
        let w = IntegerWave::new(samples);
        let fast = gf2_fast_readout(&w, &sys).unwrap();
        let brute = brute_force_readout(&w, &sys).unwrap();
        assert!(fast.agrees_with(&brute));
    }

    #[test]
    fn length_mismatch() {
        let sys = make_reference_system(1, 2, 8);
        let w = IntegerWave::zeros(7);
        assert!(matches!(
            gf2_fast_readout(&w, &sys),
            Err(NblError::LengthMismatch { .. })
        ));
        assert!(brute_force_readout(&w, &sys).is_err());
    }

    #[test]
    fn brute_force_cap() {
        let sys = make_reference_system(1, 17, 1);
        let w = IntegerWave::new(vec![1]);
        assert!(matches!(
            brute_force_readout(&w, &sys),
            Err(NblError::CapExceeded { cap: 16, .. })
        ));
        assert!(gf2_fast_readout(&w, &sys).is_ok());
    }

    #[test]
    fn oracle_equivalence_on_random_instances() {
        for i in 0..300u64 {
            let bits = (i % 9) as usize;
            let clocks = [0, bits, 2 * bits, 4 * bits, 1, 3][(i % 6) as usize];
            let (ps, sys, w) = planted(bits, i * 7919 + 1, clocks);
            let fast = gf2_fast_readout(&w, &sys).unwrap();
            let brute = brute_force_readout(&w, &sys).unwrap();
            assert!(
                fast.agrees_with(&brute),
                "instance {i}: {fast:?} vs {brute:?}"
            );
            assert_eq!(brute.survivors.contains(&ps), Some(true));
            assert_ne!(fast.survivors.contains(&ps), Some(false));
        }
    }

    #[test]
    fn failure_rate_without_clocks_is_one() {
        assert_eq!(measure_failure_rate(4, 0, 50, 1).unwrap(), 1.0);
        assert!(measure_failure_rate(4, 4, 0, 1).is_err());
    }

    #[test]
    fn zero_bits_always_unique() {
        assert_eq!(measure_failure_rate(0, 0, 20, 1).unwrap(), 0.0);
    }

    #[test]
    fn failure_rate_is_deterministic() {
        let a = count_failures(6, 8, 2000, 99).unwrap();
        let b = count_failures(6, 8, 2000, 99).unwrap();
        assert_eq!(a, b);
        let sequential: u64 = (0..2000)
            .map(|t| !run_trial(6, 8, 99, t).unwrap().1.is_unique() as u64)
            .sum();
        assert_eq!(a.failures, sequential);
    }

    #[test]
    fn clock_bound_values() {
        assert_eq!(stacho_clock_bound(2, 0.0).unwrap(), 2.0);
        assert_eq!(stacho_clock_bound(1024, 0.0).unwrap(), 10240.0);
        let with_eps = stacho_clock_bound(1024, 0.1).unwrap();
        // 1024 * 10^1.1, evaluated independently
        assert!((with_eps - 12891.396).abs() < 0.01, "{with_eps}");
        assert!(stacho_clock_bound(1, 0.0).is_err());
        assert!(stacho_clock_bound(8, -0.5).is_err());
    }

    #[test]
    fn timeshifted_values() {
        assert_eq!(timeshifted_readout_steps(4, 1.0).unwrap(), 8.0);
        assert_eq!(
            timeshifted_readout_steps(64, 2f64.powi(-10)).unwrap(),
            1024.0
        );
        assert_eq!(timeshifted_readout_steps(16, 4.0).unwrap(), 32.0);
        assert!(timeshifted_readout_steps(4, 4.0).is_err());
        assert!(timeshifted_readout_steps(4, 8.0).is_err());
        assert!(timeshifted_readout_steps(4, 0.0).is_err());
        assert!(timeshifted_readout_steps(0, 0.5).is_err());
    }
}
