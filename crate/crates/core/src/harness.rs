//! Length sweeps that shuffle an evenly spaced array, sort it with every
//! selected algorithm, and record the cost of each sort.

use std::num::NonZeroUsize;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::algorithm::{run_algorithm, AlgorithmId, RadixBase, SortParams};
use crate::baselines::DEFAULT_BIN_CAP;
use crate::divisor::DivisorStrategy;
use crate::element::ElementSeq;
use crate::error::SortError;
use crate::metering::CostLedger;
use crate::rng::{fisher_yates_shuffle, trial_rng};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),
    #[error("{algorithm} produced incorrect output at n={n}, trial {trial}")]
    CorrectnessFault {
        algorithm: AlgorithmId,
        n: usize,
        trial: u32,
    },
    #[error("{algorithm} failed at n={n}: {source}")]
    Sort {
        algorithm: AlgorithmId,
        n: usize,
        source: SortError,
    },
    #[error("cannot start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub min_length: usize,
    pub max_length: usize,
    pub length_inc: usize,
    pub min_value: i64,
    pub max_value: i64,
    pub trial_count: u32,
    pub seed: u64,
    pub algorithms: Vec<AlgorithmId>,
    pub divisor_strategy: DivisorStrategy,
    pub radix_base: RadixBase,
    pub bin_cap: u64,
    /// When false every record carries `wall_ns = 0`, making raw output
    /// reproducible byte for byte.
    pub record_wall_time: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            min_length: 10_000,
            max_length: 1_000_000,
            length_inc: 10_000,
            min_value: 0,
            max_value: 50_000,
            trial_count: 10,
            seed: 0,
            algorithms: AlgorithmId::ALL.to_vec(),
            divisor_strategy: DivisorStrategy::PowerOfTwo,
            radix_base: RadixBase::EqualsLength,
            bin_cap: DEFAULT_BIN_CAP,
            record_wall_time: true,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let fail = |msg: &str| Err(HarnessError::InvalidConfig(msg.to_string()));
        if self.min_length < 1 {
            return fail("min_length must be at least 1");
        }
        if self.min_length > self.max_length {
            return fail("min_length must not exceed max_length");
        }
        if self.length_inc < 1 {
            return fail("length_inc must be at least 1");
        }
        if self.min_value > self.max_value {
            return fail("min_value must not exceed max_value");
        }
        if self.trial_count < 1 {
            return fail("trial_count must be at least 1");
        }
        if self.algorithms.is_empty() {
            return fail("at least one algorithm is required");
        }
        if self.bin_cap < 1 {
            return fail("bin_cap must be at least 1");
        }
        if let RadixBase::Fixed(b) = self.radix_base {
            if b < 2 {
                return fail("radix base must be at least 2");
            }
        }
        ElementSeq::new(vec![self.min_value, self.max_value])
            .map_err(|e| HarnessError::InvalidConfig(e.to_string()))?;
        Ok(())
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> {
        (self.min_length..=self.max_length).step_by(self.length_inc)
    }

    pub fn sort_params(&self) -> SortParams {
        SortParams {
            strategy: self.divisor_strategy,
            radix_base: self.radix_base,
            bin_cap: self.bin_cap,
        }
    }

    /// Range plus one of every generated array.
    pub fn m(&self) -> u64 {
        self.max_value.abs_diff(self.min_value) + 1
    }
}

/// Cost of one algorithm on one shuffled array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResultRecord {
    pub n: usize,
    pub m: u64,
    pub trial: u32,
    pub algorithm: AlgorithmId,
    pub cost: CostLedger,
    pub wall_ns: u64,
}

/// An algorithm that declined to run, e.g. counting sort over too many bins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkipRecord {
    pub n: usize,
    pub trial: u32,
    pub algorithm: AlgorithmId,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrialOutcome {
    pub records: Vec<ResultRecord>,
    pub skips: Vec<SkipRecord>,
}

impl TrialOutcome {
    fn extend(&mut self, other: TrialOutcome) {
        self.records.extend(other.records);
        self.skips.extend(other.skips);
    }

    /// Orders records and skips by `(n, trial, algorithm)`.
    fn canonicalize(&mut self) {
        self.records.sort_by_key(|r| (r.n, r.trial, r.algorithm));
        self.skips.sort_by_key(|s| (s.n, s.trial, s.algorithm));
    }
}

/// `n` evenly spaced ascending values from `min_value` to `max_value`.
pub fn generate_array(
    n: usize,
    min_value: i64,
    max_value: i64,
) -> Result<ElementSeq, HarnessError> {
    if n < 1 {
        return Err(HarnessError::InvalidConfig(
            "array length must be at least 1".into(),
        ));
    }
    if min_value > max_value {
        return Err(HarnessError::InvalidConfig(
            "min_value must not exceed max_value".into(),
        ));
    }
    let span = max_value as i128 - min_value as i128;
    let items = if n == 1 {
        vec![min_value]
    } else {
        let last = (n - 1) as i128;
        (0..n)
            .map(|i| (min_value as i128 + i as i128 * span / last) as i64)
            .collect()
    };
    ElementSeq::new(items).map_err(|e| HarnessError::InvalidConfig(e.to_string()))
}

/// Sorts one copy of `input` per algorithm and checks every output against
/// a reference sort before emitting records.
pub fn run_trial(
    input: &[i64],
    trial: u32,
    algorithms: &[AlgorithmId],
    params: &SortParams,
    record_wall_time: bool,
) -> Result<TrialOutcome, HarnessError> {
    let n = input.len();
    let m = ElementSeq::new(input.to_vec())
        .map_err(|source| HarnessError::Sort {
            algorithm: algorithms[0],
            n,
            source,
        })?
        .m();
    let mut expected = input.to_vec();
    expected.sort_unstable();

    let mut outcome = TrialOutcome::default();
    for &algorithm in algorithms {
        let mut ledger = CostLedger::new();
        let start = Instant::now();
        let result = run_algorithm(algorithm, input, params, &mut ledger);
        let elapsed = start.elapsed();
        match result {
            Ok(sorted) => {
                if sorted != expected {
                    return Err(HarnessError::CorrectnessFault {
                        algorithm,
                        n,
                        trial,
                    });
                }
                let wall_ns = if record_wall_time {
                    elapsed.as_nanos() as u64
                } else {
                    0
                };
                outcome.records.push(ResultRecord {
                    n,
                    m,
                    trial,
                    algorithm,
                    cost: ledger,
                    wall_ns,
                });
            }
            Err(err @ SortError::RangeExceedsCapacity { .. }) => {
                outcome.skips.push(SkipRecord {
                    n,
                    trial,
                    algorithm,
                    reason: err.to_string(),
                });
            }
            Err(source) => {
                return Err(HarnessError::Sort {
                    algorithm,
                    n,
                    source,
                })
            }
        }
    }
    Ok(outcome)
}

/// Shuffled inputs for every trial at length `n`. Trial `t` reshuffles the
/// order left by trial `t - 1` using the stream `trial_rng(seed, n, t)`.
pub fn trial_inputs(config: &ExperimentConfig, n: usize) -> Result<Vec<Vec<i64>>, HarnessError> {
    let mut array = generate_array(n, config.min_value, config.max_value)?.into_vec();
    let mut inputs = Vec::with_capacity(config.trial_count as usize);
    for trial in 0..config.trial_count {
        let mut rng = trial_rng(config.seed, n, trial);
        fisher_yates_shuffle(&mut array, &mut rng);
        inputs.push(array.clone());
    }
    Ok(inputs)
}

/// Runs the whole sweep on the calling thread.
pub fn run_sweep(config: &ExperimentConfig) -> Result<TrialOutcome, HarnessError> {
    run_sweep_with_jobs(config, NonZeroUsize::MIN)
}

/// Runs the sweep with trials spread over `jobs` worker threads. Output is
/// identical for every `jobs` value.
pub fn run_sweep_with_jobs(
    config: &ExperimentConfig,
    jobs: NonZeroUsize,
) -> Result<TrialOutcome, HarnessError> {
    config.validate()?;
    let params = config.sort_params();

    let sweep = || -> Result<TrialOutcome, HarnessError> {
        let mut all = TrialOutcome::default();
        for n in config.lengths() {
            let inputs = trial_inputs(config, n)?;
            let per_trial: Vec<TrialOutcome> = if jobs.get() == 1 {
                inputs
                    .iter()
                    .enumerate()
                    .map(|(t, a)| {
                        run_trial(
                            a,
                            t as u32,
                            &config.algorithms,
                            &params,
                            config.record_wall_time,
                        )
                    })
                    .collect::<Result<_, _>>()?
            } else {
                inputs
                    .par_iter()
                    .enumerate()
                    .map(|(t, a)| {
                        run_trial(
                            a,
                            t as u32,
                            &config.algorithms,
                            &params,
                            config.record_wall_time,
                        )
                    })
                    .collect::<Result<_, _>>()?
            };
            per_trial.into_iter().for_each(|o| all.extend(o));
        }
        all.canonicalize();
        Ok(all)
    };

    if jobs.get() == 1 {
        return sweep();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.get())
        .build()
        .map_err(|e| HarnessError::ThreadPool(e.to_string()))?;
    pool.install(sweep)
}
