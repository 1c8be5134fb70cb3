//! Clocked bipolar waves and their algebra.
//!
//! A [`ClockedWave`] holds one `±1` sample per clock period. Products of
//! clocked waves stay bipolar; sums leave the bipolar domain and become
//! [`IntegerWave`]s. All arithmetic is integer arithmetic, so equality checks
//! are exact. Only [`time_average_product`] produces a real number.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::error::{NblError, Result};
use crate::seed::SeedSpec;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClockedWave {
    samples: Vec<i8>,
}

impl ClockedWave {
    pub fn new(samples: Vec<i8>) -> Result<Self> {
        if let Some((index, &value)) = samples.iter().enumerate().find(|(_, &s)| s != 1 && s != -1)
        {
            return Err(NblError::NotBipolar {
                index,
                value: value as i64,
            });
        }
        Ok(Self { samples })
    }

    /// Maps `true` to `-1` and `false` to `+1`.
    pub fn from_sign_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        Self {
            samples: bits.into_iter().map(|b| if b { -1 } else { 1 }).collect(),
        }
    }

    /// The multiplicative identity of length `len`.
    pub fn ones(len: usize) -> Self {
        Self {
            samples: vec![1; len],
        }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[i8] {
        &self.samples
    }

    /// Sign bit of clock `t`: `true` for `-1`.
    #[inline]
    pub fn sign_bit(&self, t: usize) -> bool {
        self.samples[t] < 0
    }

    pub fn negate(&self) -> Self {
        Self {
            samples: self.samples.iter().map(|s| -s).collect(),
        }
    }

    pub fn is_all_ones(&self) -> bool {
        self.samples.iter().all(|&s| s == 1)
    }

    pub fn mean(&self) -> Result<f64> {
        if self.is_empty() {
            return Err(NblError::EmptyAverage);
        }
        let sum: i64 = self.samples.iter().map(|&s| s as i64).sum();
        Ok(sum as f64 / self.len() as f64)
    }

    pub(crate) fn mul_assign_unchecked(&mut self, other: &ClockedWave) {
        for (a, b) in self.samples.iter_mut().zip(&other.samples) {
            *a *= *b;
        }
    }

    /// Renders the golden-file form: one `+1`/`-1` per line, each
    /// newline-terminated.
    pub fn to_golden_string(&self) -> String {
        let mut out = String::with_capacity(self.len() * 3);
        for &s in &self.samples {
            let _ = writeln!(out, "{}", if s > 0 { "+1" } else { "-1" });
        }
        out
    }

    pub fn write_golden<W: Write>(&self, mut writer: W) -> Result<()> {
        writer.write_all(self.to_golden_string().as_bytes())?;
        Ok(())
    }

    pub fn read_golden<R: BufRead>(reader: R) -> Result<Self> {
        let mut samples = Vec::new();
        for (index, line) in reader.lines().enumerate() {
            let line = line?;
            samples.push(match line.as_str() {
                "+1" => 1,
                "-1" => -1,
                other => {
                    return Err(NblError::Parse(format!(
                        "golden wave line {}: expected \"+1\" or \"-1\", got {other:?}",
                        index + 1
                    )))
                }
            });
        }
        Ok(Self { samples })
    }
}

/// Integer-valued waveform, e.g. a realized superposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerWave {
    samples: Vec<i64>,
}

impl IntegerWave {
    pub fn new(samples: Vec<i64>) -> Self {
        Self { samples }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            samples: vec![0; len],
        }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[i64] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [i64] {
        &mut self.samples
    }

    /// Samplewise sum. Errors on length mismatch.
    pub fn add(&self, other: &IntegerWave) -> Result<IntegerWave> {
        check_lengths(self.len(), other.len())?;
        Ok(IntegerWave::new(
            self.samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub(crate) fn add_assign_clocked(&mut self, wave: &ClockedWave) {
        for (a, &b) in self.samples.iter_mut().zip(wave.samples()) {
            *a += b as i64;
        }
    }
}

impl From<&ClockedWave> for IntegerWave {
    fn from(wave: &ClockedWave) -> Self {
        IntegerWave::new(wave.samples.iter().map(|&s| s as i64).collect())
    }
}

impl From<ClockedWave> for IntegerWave {
    fn from(wave: ClockedWave) -> Self {
        IntegerWave::from(&wave)
    }
}

pub(crate) fn check_lengths(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(NblError::LengthMismatch { left, right });
    }
    Ok(())
}

/// A random telegraph wave: `clocks` independent fair draws from `{-1, +1}`,
/// the first of which is itself a fresh draw. Bit-reproducible for equal
/// inputs, and prefix-stable in `clocks`.
pub fn generate_rtw(seed: &SeedSpec, clocks: usize) -> ClockedWave {
    ClockedWave::from_sign_bits(seed.stream().bits(clocks))
}

/// Samplewise product of two equal-length waves.
pub fn multiply(a: &ClockedWave, b: &ClockedWave) -> Result<ClockedWave> {
    check_lengths(a.len(), b.len())?;
    let mut out = a.clone();
    out.mul_assign_unchecked(b);
    Ok(out)
}

/// `(1/K) * sum_t a(t) b(t)`: the finite-time estimate of `<a b>`.
pub fn time_average_product(a: &ClockedWave, b: &ClockedWave) -> Result<f64> {
    check_lengths(a.len(), b.len())?;
    if a.is_empty() {
        return Err(NblError::EmptyAverage);
    }
    let sum: i64 = a
        .samples
        .iter()
        .zip(&b.samples)
        .map(|(&x, &y)| (x * y) as i64)
        .sum();
    Ok(sum as f64 / a.len() as f64)
}
