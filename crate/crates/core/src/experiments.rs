//! Named, seed-deterministic experiments and their CSV/JSON reports.
//!
//! Each experiment turns an [`ExperimentConfig`] into an
//! [`ExperimentReport`]. Records come out sorted by `(N, K)` and depend only
//! on the config, so reruns are byte-identical apart from `wall_time_ms`.
//! Out-of-cap configs are refused with an error naming the cap.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{NblError, Result};
use crate::hyperspace::{
    expand_universe, realize_superposition_counted, synthesize_universe_counted, OpCounter,
    MAX_PRODUCT_BITS,
};
use crate::readout::{count_failures, stacho_clock_bound, timeshifted_readout_steps};
use crate::reference::ReferenceSystem;
use crate::seed::{Role, SeedSpec};
use crate::sinus::{SinusKind, SinusRepresentation};
use crate::wave::{generate_rtw, time_average_product};

/// Master seed used when neither `--seed` nor `NBL_LAB_SEED` is given
/// (ASCII "nbl-lab!").
pub const DEFAULT_MASTER_SEED: u64 = 0x6E62_6C2D_6C61_6221;

pub const SEED_ENV_VAR: &str = "NBL_LAB_SEED";

/// Bumped whenever a CSV header or JSON key changes.
pub const SCHEMA_VERSION: u32 = 1;

pub const UNIVERSE_CHECK_CAP: usize = 12;
pub const SINUS_COMPARISON_CAP: usize = 16;
pub const ORTHOGONALITY_CLOCKS_CAP: usize = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Experiment {
    Orthogonality,
    Universe,
    Readout,
    Sinus,
    Bounds,
}

impl Experiment {
    pub const ALL: [Experiment; 5] = [
        Experiment::Orthogonality,
        Experiment::Universe,
        Experiment::Readout,
        Experiment::Sinus,
        Experiment::Bounds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Experiment::Orthogonality => "orthogonality",
            Experiment::Universe => "universe",
            Experiment::Readout => "readout",
            Experiment::Sinus => "sinus",
            Experiment::Bounds => "bounds",
        }
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Experiment {
    type Err = NblError;

    fn from_str(s: &str) -> Result<Self> {
        Experiment::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| NblError::Config(format!("unknown experiment {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = NblError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(NblError::Config(format!(
                "unknown format {other:?} (expected csv or json)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub bits: Vec<usize>,
    pub clocks: Vec<usize>,
    /// When set, the readout grid uses `K = clocks_per_bit * N` instead of
    /// `clocks`.
    pub clocks_per_bit: Option<usize>,
    pub trials: u64,
    pub master_seed: u64,
    pub epsilon: Vec<f64>,
    pub p_target: Vec<f64>,
    /// Orthogonality control run: correlate each wave with itself.
    pub identical_pairs: bool,
    pub format: OutputFormat,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn defaults(experiment: Experiment) -> Self {
        let base = Self {
            experiment,
            bits: Vec::new(),
            clocks: Vec::new(),
            clocks_per_bit: None,
            trials: 1,
            master_seed: DEFAULT_MASTER_SEED,
            epsilon: Vec::new(),
            p_target: Vec::new(),
            identical_pairs: false,
            format: OutputFormat::Csv,
            out: None,
        };
        match experiment {
            Experiment::Orthogonality => Self {
                clocks: vec![100, 10_000],
                trials: 100,
                ..base
            },
            Experiment::Universe => Self {
                bits: vec![0, 2, 4, 8],
                clocks: vec![128],
                trials: 5,
                ..base
            },
            Experiment::Readout => Self {
                bits: vec![6, 8, 10],
                clocks_per_bit: Some(2),
                trials: 10_000,
                ..base
            },
            Experiment::Sinus => Self {
                bits: (1..=8).collect(),
                ..base
            },
            Experiment::Bounds => Self {
                bits: vec![2, 16, 64, 256, 1024],
                epsilon: vec![0.0, 0.1],
                p_target: vec![0.5, 2f64.powi(-10)],
                ..base
            },
        }
    }

    /// Sorted, deduplicated copy, checked against the experiment's caps.
    pub fn validated(&self) -> Result<Self> {
        let mut cfg = self.clone();
        cfg.bits.sort_unstable();
        cfg.bits.dedup();
        cfg.clocks.sort_unstable();
        cfg.clocks.dedup();

        let need = |ok: bool, msg: &str| {
            if ok {
                Ok(())
            } else {
                Err(NblError::Config(msg.to_string()))
            }
        };
        let cap = |values: &[usize], cap: usize, what: &'static str| match values.last() {
            Some(&max) if max > cap => Err(NblError::CapExceeded {
                what,
                requested: max,
                cap,
            }),
            _ => Ok(()),
        };

        need(cfg.trials >= 1, "trials must be at least 1")?;
        match cfg.experiment {
            Experiment::Orthogonality => {
                need(!cfg.clocks.is_empty(), "clock range is empty")?;
                need(
                    cfg.clocks[0] >= 1,
                    "orthogonality needs K >= 1 clock periods",
                )?;
                cap(&cfg.clocks, ORTHOGONALITY_CLOCKS_CAP, "K")?;
            }
            Experiment::Universe => {
                need(!cfg.bits.is_empty(), "bit range is empty")?;
                need(!cfg.clocks.is_empty(), "clock range is empty")?;
                need(
                    cfg.clocks[0] >= 1,
                    "universe check needs K >= 1 clock periods",
                )?;
                cap(&cfg.bits, UNIVERSE_CHECK_CAP, "N")?;
            }
            Experiment::Readout => {
                need(!cfg.bits.is_empty(), "bit range is empty")?;
                need(
                    cfg.clocks_per_bit.is_some() || !cfg.clocks.is_empty(),
                    "clock range is empty",
                )?;
                cap(&cfg.bits, MAX_PRODUCT_BITS, "N")?;
            }
            Experiment::Sinus => {
                need(!cfg.bits.is_empty(), "bit range is empty")?;
                cap(&cfg.bits, SINUS_COMPARISON_CAP, "N")?;
            }
            Experiment::Bounds => {
                need(!cfg.bits.is_empty(), "bit range is empty")?;
                need(
                    !cfg.epsilon.is_empty() || !cfg.p_target.is_empty(),
                    "bounds table needs at least one epsilon or P value",
                )?;
            }
        }
        Ok(cfg)
    }

    fn readout_grid(&self) -> Vec<(usize, usize)> {
        let mut grid: Vec<(usize, usize)> = match self.clocks_per_bit {
            Some(m) => self.bits.iter().map(|&n| (n, m * n)).collect(),
            None => self
                .bits
                .iter()
                .flat_map(|&n| self.clocks.iter().map(move |&k| (n, k)))
                .collect(),
        };
        grid.sort_unstable();
        grid.dedup();
        grid
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrthogonalityRecord {
    #[serde(rename = "K")]
    pub clocks: usize,
    pub pairs: u64,
    pub median_abs: f64,
    pub max_abs: f64,
    /// `4 / sqrt(K)`
    pub bound: f64,
    pub within_bound: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UniverseRecord {
    #[serde(rename = "N")]
    pub bits: usize,
    #[serde(rename = "K")]
    pub clocks: usize,
    pub seeds: u64,
    pub equal: bool,
    pub product_additions_per_clock: u64,
    pub product_multiplications_per_clock: u64,
    pub oracle_additions_per_clock: u64,
    pub oracle_multiplications_per_clock: u64,
    /// Oracle operations over product-form operations, per clock (a zero
    /// product-form count is taken as 1).
    pub op_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReadoutRecord {
    #[serde(rename = "N")]
    pub bits: usize,
    #[serde(rename = "K")]
    pub clocks: usize,
    pub trials: u64,
    pub failures: u64,
    pub rate: f64,
    pub master_seed: u64,
    /// `min(1, 2^-(K - N))`
    pub reference_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SinusRecord {
    pub kind: SinusKind,
    #[serde(rename = "N")]
    pub bits: usize,
    pub f_max: u64,
    pub samples: u64,
    pub degeneracy_groups: usize,
    pub collided_strings: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsRecord {
    /// `stacho` (clock periods, parameter = epsilon) or `timeshifted`
    /// (time steps, parameter = P).
    pub bound: &'static str,
    #[serde(rename = "N")]
    pub bits: usize,
    pub parameter: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Records {
    Orthogonality(Vec<OrthogonalityRecord>),
    Universe(Vec<UniverseRecord>),
    Readout(Vec<ReadoutRecord>),
    Sinus(Vec<SinusRecord>),
    Bounds(Vec<BoundsRecord>),
}

impl Records {
    pub fn len(&self) -> usize {
        match self {
            Records::Orthogonality(r) => r.len(),
            Records::Universe(r) => r.len(),
            Records::Readout(r) => r.len(),
            Records::Sinus(r) => r.len(),
            Records::Bounds(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        fn rows<W: Write, T: Serialize>(writer: W, rows: &[T]) -> Result<()> {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(writer);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
            Ok(())
        }
        match self {
            Records::Orthogonality(r) => rows(writer, r),
            Records::Universe(r) => rows(writer, r),
            Records::Readout(r) => rows(writer, r),
            Records::Sinus(r) => rows(writer, r),
            Records::Bounds(r) => rows(writer, r),
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub schema_version: u32,
    pub config: ExperimentConfig,
    pub records: Records,
    pub summary: BTreeMap<String, Value>,
    pub wall_time_ms: f64,
}

impl ExperimentReport {
    /// The deterministic part of the report: records and summary.
    pub fn records_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&json!({
            "records": self.records,
            "summary": self.summary,
        }))?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Csv => self.records.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn write<W: Write>(&self, format: OutputFormat, mut writer: W) -> Result<()> {
        writer.write_all(self.render(format)?.as_bytes())?;
        Ok(())
    }
}

/// Validates `config` and runs the experiment it names.
pub fn run(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let cfg = config.validated()?;
    let start = Instant::now();
    let (records, summary) = match cfg.experiment {
        Experiment::Orthogonality => orthogonality(&cfg)?,
        Experiment::Universe => universe_check(&cfg)?,
        Experiment::Readout => readout_scaling(&cfg)?,
        Experiment::Sinus => sinus_comparison(&cfg)?,
        Experiment::Bounds => bounds_table(&cfg)?,
    };
    Ok(ExperimentReport {
        tool: "nbl-lab",
        version: env!("CARGO_PKG_VERSION"),
        schema_version: SCHEMA_VERSION,
        config: cfg,
        records,
        summary,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn expecting(config: &ExperimentConfig, experiment: Experiment) -> ExperimentConfig {
    ExperimentConfig {
        experiment,
        ..config.clone()
    }
}

pub fn run_orthogonality(config: &ExperimentConfig) -> Result<ExperimentReport> {
    run(&expecting(config, Experiment::Orthogonality))
}

pub fn run_universe_check(config: &ExperimentConfig) -> Result<ExperimentReport> {
    run(&expecting(config, Experiment::Universe))
}

pub fn run_readout_scaling(config: &ExperimentConfig) -> Result<ExperimentReport> {
    run(&expecting(config, Experiment::Readout))
}

pub fn run_sinus_comparison(config: &ExperimentConfig) -> Result<ExperimentReport> {
    run(&expecting(config, Experiment::Sinus))
}

pub fn run_bounds_table(config: &ExperimentConfig) -> Result<ExperimentReport> {
    run(&expecting(config, Experiment::Bounds))
}

type Outcome = (Records, BTreeMap<String, Value>);

pub fn median(values: &mut [f64]) -> f64 {
    assert!(!values.is_empty(), "median of nothing");
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    }
}

/// `|<L_1 H_1>|` over `pairs` independent pairs at `clocks` periods. Pair `i`
/// is the `(L_1, H_1)` of the reference system seeded by trial `i`.
pub fn pair_correlations(
    master_seed: u64,
    clocks: usize,
    pairs: u64,
    identical: bool,
) -> Result<Vec<f64>> {
    (0..pairs)
        .into_par_iter()
        .map(|i| {
            let trial = SeedSpec::trial(master_seed, i).key();
            let a = generate_rtw(&SeedSpec::reference(trial, 1, Role::L), clocks);
            let value = if identical {
                time_average_product(&a, &a)?
            } else {
                let b = generate_rtw(&SeedSpec::reference(trial, 1, Role::H), clocks);
                time_average_product(&a, &b)?
            };
            Ok(value.abs())
        })
        .collect()
}

fn orthogonality(cfg: &ExperimentConfig) -> Result<Outcome> {
    let mut records = Vec::new();
    for &k in &cfg.clocks {
        let mut values = pair_correlations(cfg.master_seed, k, cfg.trials, cfg.identical_pairs)?;
        let bound = 4.0 / (k as f64).sqrt();
        let within_bound = values.iter().filter(|&&v| v <= bound).count() as u64;
        let max_abs = values.iter().copied().fold(0.0, f64::max);
        records.push(OrthogonalityRecord {
            clocks: k,
            pairs: cfg.trials,
            median_abs: median(&mut values),
            max_abs,
            bound,
            within_bound,
        });
    }
    let decreasing = records
        .windows(2)
        .all(|w| w[1].median_abs <= w[0].median_abs);
    let summary = BTreeMap::from([
        ("median_decreasing".to_string(), json!(decreasing)),
        (
            "all_within_bound".to_string(),
            json!(records.iter().all(|r| r.within_bound == r.pairs)),
        ),
    ]);
    Ok((Records::Orthogonality(records), summary))
}

fn universe_check(cfg: &ExperimentConfig) -> Result<Outcome> {
    let mut records = Vec::new();
    for &n in &cfg.bits {
        let expanded = expand_universe(n)?;
        for &k in &cfg.clocks {
            let mut equal = true;
            let mut product_ops = OpCounter::default();
            let mut oracle_ops = OpCounter::default();
            for i in 0..cfg.trials {
                let refsys = ReferenceSystem::new(SeedSpec::trial(cfg.master_seed, i).key(), n, k);
                let mut p = OpCounter::default();
                let mut o = OpCounter::default();
                let product = synthesize_universe_counted(&refsys, &mut p)?;
                let oracle = realize_superposition_counted(&expanded, &refsys, &mut o)?;
                equal &= product == oracle;
                // Counts do not depend on the seed.
                product_ops = p;
                oracle_ops = o;
            }
            let per = |c: u64| c / k as u64;
            let product_per_clock = per(product_ops.total());
            let oracle_per_clock = per(oracle_ops.total());
            records.push(UniverseRecord {
                bits: n,
                clocks: k,
                seeds: cfg.trials,
                equal,
                product_additions_per_clock: per(product_ops.additions),
                product_multiplications_per_clock: per(product_ops.multiplications),
                oracle_additions_per_clock: per(oracle_ops.additions),
                oracle_multiplications_per_clock: per(oracle_ops.multiplications),
                op_ratio: oracle_per_clock as f64 / product_per_clock.max(1) as f64,
            });
        }
    }
    let summary = BTreeMap::from([(
        "all_equal".to_string(),
        json!(records.iter().all(|r| r.equal)),
    )]);
    Ok((Records::Universe(records), summary))
}

fn readout_scaling(cfg: &ExperimentConfig) -> Result<Outcome> {
    let mut records = Vec::new();
    for (n, k) in cfg.readout_grid() {
        let count = count_failures(n, k, cfg.trials, cfg.master_seed)?;
        records.push(ReadoutRecord {
            bits: n,
            clocks: k,
            trials: count.trials,
            failures: count.failures,
            rate: count.rate(),
            master_seed: cfg.master_seed,
            reference_rate: 2f64.powi(n as i32 - k as i32).min(1.0),
        });
    }
    let mut summary = BTreeMap::new();
    if cfg.clocks_per_bit.is_some() {
        let factors: Vec<Value> = records
            .windows(2)
            .map(|w| {
                json!({
                    "from_N": w[0].bits,
                    "to_N": w[1].bits,
                    "decay_factor": if w[1].failures == 0 { Value::Null } else { json!(w[0].rate / w[1].rate) },
                })
            })
            .collect();
        summary.insert("decay_factors".to_string(), Value::Array(factors));
    }
    Ok((Records::Readout(records), summary))
}

fn sinus_comparison(cfg: &ExperimentConfig) -> Result<Outcome> {
    let mut records = Vec::new();
    for &n in &cfg.bits {
        for kind in [SinusKind::Linear, SinusKind::Exponential] {
            let rep = SinusRepresentation::new(kind, n)?;
            let report = rep.find_degeneracies()?;
            records.push(SinusRecord {
                kind,
                bits: n,
                f_max: rep.max_system_frequency(),
                samples: rep.readout_sample_count(),
                degeneracy_groups: report.groups.len(),
                collided_strings: report.collided_strings(),
            });
        }
    }
    let widest = *cfg.bits.last().expect("validated nonempty");
    let linear = SinusRepresentation::linear(widest)?;
    let exponential = SinusRepresentation::exponential(widest)?;
    let mut table = Vec::new();
    for r in 1..=widest {
        for role in [Role::L, Role::H] {
            table.push(json!({
                "bit": r,
                "value": role,
                "linear": linear.value_frequency(r, role)?,
                "exponential": exponential.value_frequency(r, role)?,
            }));
        }
    }
    let summary = BTreeMap::from([("frequency_table".to_string(), Value::Array(table))]);
    Ok((Records::Sinus(records), summary))
}

fn bounds_table(cfg: &ExperimentConfig) -> Result<Outcome> {
    let mut records = Vec::new();
    for &n in &cfg.bits {
        for &eps in &cfg.epsilon {
            records.push(BoundsRecord {
                bound: "stacho",
                bits: n,
                parameter: eps,
                value: stacho_clock_bound(n, eps)?,
            });
        }
        for &p in &cfg.p_target {
            records.push(BoundsRecord {
                bound: "timeshifted",
                bits: n,
                parameter: p,
                value: timeshifted_readout_steps(n, p)?,
            });
        }
    }
    Ok((Records::Bounds(records), BTreeMap::new()))
}

/// Parses `"4"`, `"2,4,8"` into a list.
pub fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse().map_err(|_| {
                NblError::Config(format!("expected a non-negative integer, got {t:?}"))
            })
        })
        .collect()
}

/// Parses an inclusive range `"lo:hi"` or `"lo:hi:step"`.
pub fn parse_usize_range(s: &str) -> Result<Vec<usize>> {
    let parts = parse_usize_list(&s.replace(':', ","))
        .map_err(|_| NblError::Config(format!("expected lo:hi[:step], got {s:?}")))?;
    let (lo, hi, step) = match parts[..] {
        [lo, hi] => (lo, hi, 1),
        [lo, hi, step] => (lo, hi, step),
        _ => {
            return Err(NblError::Config(format!(
                "expected lo:hi[:step], got {s:?}"
            )))
        }
    };
    if step == 0 || lo > hi {
        return Err(NblError::Config(format!("range {s:?} is empty")));
    }
    Ok((lo..=hi).step_by(step).collect())
}

/// Parses a comma list of reals; each item may be written `b^e`, e.g.
/// `2^-10`.
pub fn parse_f64_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let err = || NblError::Config(format!("expected a number or b^e, got {t:?}"));
            match t.split_once('^') {
                Some((b, e)) => {
                    let b: f64 = b.trim().parse().map_err(|_| err())?;
                    let e: f64 = e.trim().parse().map_err(|_| err())?;
                    Ok(b.powf(e))
                }
                None => t.parse().map_err(|_| err()),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_and_range_parsing() {
        assert_eq!(parse_usize_list("2, 4,8").unwrap(), [2, 4, 8]);
        assert!(parse_usize_list("2,x").is_err());
        assert_eq!(parse_usize_range("2:6").unwrap(), [2, 3, 4, 5, 6]);
        assert_eq!(parse_usize_range("4:12:4").unwrap(), [4, 8, 12]);
        assert!(parse_usize_range("6:2").is_err());
        assert!(parse_usize_range("1:2:0").is_err());
        assert!(parse_usize_range("1").is_err());
        assert_eq!(parse_f64_list("0.5,2^-10").unwrap(), [0.5, 2f64.powi(-10)]);
        assert!(parse_f64_list("2^^1").is_err());
    }

    #[test]
    fn median_even_and_odd() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn validation_sorts_and_dedups() {
        let mut cfg = ExperimentConfig::defaults(Experiment::Sinus);
        cfg.bits = vec![4, 2, 4, 1];
        assert_eq!(cfg.validated().unwrap().bits, [1, 2, 4]);
    }

    #[test]
    fn caps_are_named() {
        let mut cfg = ExperimentConfig::defaults(Experiment::Universe);
        cfg.bits = vec![13];
        let err = run(&cfg).unwrap_err();
        assert!(err.to_string().contains("cap of 12"), "{err}");

        let mut cfg = ExperimentConfig::defaults(Experiment::Sinus);
        cfg.bits = vec![17];
        assert!(run(&cfg).unwrap_err().to_string().contains("cap of 16"));

        let mut cfg = ExperimentConfig::defaults(Experiment::Orthogonality);
        cfg.clocks = vec![0];
        assert!(run(&cfg).is_err());
    }

    #[test]
    fn empty_ranges_are_refused() {
        for e in Experiment::ALL {
            let mut cfg = ExperimentConfig::defaults(e);
            cfg.bits.clear();
            cfg.clocks.clear();
            cfg.clocks_per_bit = None;
            if e == Experiment::Bounds {
                cfg.epsilon.clear();
                cfg.p_target.clear();
            }
            assert!(matches!(run(&cfg), Err(NblError::Config(_))), "{e}");
        }
    }

    #[test]
    fn bounds_domain_errors_propagate() {
        let mut cfg = ExperimentConfig::defaults(Experiment::Bounds);
        cfg.bits = vec![1];
        assert!(matches!(run(&cfg), Err(NblError::Domain(_))));
    }

    #[test]
    fn experiment_names_round_trip() {
        for e in Experiment::ALL {
            assert_eq!(e.name().parse::<Experiment>().unwrap(), e);
        }
        assert!("nope".parse::<Experiment>().is_err());
    }

    #[test]
    fn readout_grid_uses_clocks_per_bit() {
        let mut cfg = ExperimentConfig::defaults(Experiment::Readout);
        cfg.bits = vec![8, 6];
        let cfg = cfg.validated().unwrap();
        assert_eq!(cfg.readout_grid(), [(6, 12), (8, 16)]);
        let mut cfg = cfg;
        cfg.clocks_per_bit = None;
        cfg.clocks = vec![0, 8];
        assert_eq!(cfg.readout_grid(), [(6, 0), (6, 8), (8, 0), (8, 8)]);
    }
}
