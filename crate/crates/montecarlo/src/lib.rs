//! Direct simulation of the number of local maxima below a level.

pub mod poly;
pub mod scan;

use std::thread;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rice_core::{CountQuery, PolynomialModel, Result, RiceError};

pub use poly::Scaled;
pub use scan::{count_maxima_below, maxima_values, ScanConfig};

/// Seed of one trial: the run seed selects the key, the trial index the
/// stream, so any trial can be regenerated on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TrialSeed {
    pub seed: u64,
    pub trial: u64,
}

impl TrialSeed {
    pub fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.trial);
        rng
    }
}

/// `A_0..A_n` with `A_j = D_0 + ... + D_j`, `D_k ~ N(0, sigma_k^2)`.
pub fn sample_coefficients(model: &PolynomialModel, seed: TrialSeed) -> Vec<f64> {
    let mut rng = seed.rng();
    let mut acc = 0.0;
    (0..=model.degree())
        .map(|k| {
            let z: f64 = StandardNormal.sample(&mut rng);
            acc += model.sigma_at(k) * z;
            acc
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MCConfig {
    pub trials: u64,
    pub seed: u64,
    pub workers: usize,
    pub scan: ScanConfig,
}

impl MCConfig {
    pub fn new(trials: u64, seed: u64) -> Self {
        MCConfig {
            trials,
            seed,
            workers: 1,
            scan: ScanConfig::default(),
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_points_per_unit(mut self, ppu: usize) -> Self {
        self.scan.points_per_unit = ppu;
        self
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(RiceError::InvalidQuery(m.into()));
        if self.trials == 0 {
            return bad("trials must be at least 1");
        }
        if self.workers == 0 {
            return bad("workers must be at least 1");
        }
        if self.scan.points_per_unit < 16 {
            return bad("scan resolution must be at least 16 points per unit");
        }
        if !(self.scan.abscissa_tol > 0.0) {
            return bad("abscissa tolerance must be positive");
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MCEstimate {
    pub mean: f64,
    /// Sample standard deviation over `sqrt(trials)`.
    pub stderr: f64,
    pub trials: u64,
    pub seed: u64,
}

/// Integer tallies, so the totals do not depend on how trials are split.
#[derive(Clone, Copy, Debug, Default)]
struct Tally {
    sum: u64,
    sum_sq: u128,
}

impl Tally {
    fn add(&mut self, count: usize) {
        self.sum += count as u64;
        self.sum_sq += (count as u128) * (count as u128);
    }

    fn merge(&mut self, other: Tally) {
        self.sum += other.sum;
        self.sum_sq += other.sum_sq;
    }

    fn estimate(self, trials: u64, seed: u64) -> MCEstimate {
        let n = trials as f64;
        let mean = self.sum as f64 / n;
        let stderr = if trials > 1 {
            // Exact integer numerator of the sample variance.
            let centred = self.sum_sq * trials as u128 - (self.sum as u128) * (self.sum as u128);
            (centred as f64 / (n * (n - 1.0))).sqrt() / n.sqrt()
        } else {
            0.0
        };
        MCEstimate {
            mean,
            stderr,
            trials,
            seed,
        }
    }
}

/// Monte Carlo estimate of the expected number of maxima in `(lo, hi)`
/// below each level, sharing the sampled polynomials between levels.
pub fn estimate_em_levels(
    model: &PolynomialModel,
    lo: f64,
    hi: f64,
    levels: &[f64],
    config: &MCConfig,
) -> Result<Vec<MCEstimate>> {
    config.validate()?;
    CountQuery::new(lo, hi, 0.0)?;
    if levels.iter().any(|u| u.is_nan()) {
        return Err(RiceError::InvalidQuery("level is NaN".into()));
    }
    let run = |from: u64, to: u64| -> Vec<Tally> {
        let mut tallies = vec![Tally::default(); levels.len()];
        for trial in from..to {
            let coeffs = sample_coefficients(
                model,
                TrialSeed {
                    seed: config.seed,
                    trial,
                },
            );
            let values = maxima_values(&coeffs, lo, hi, &config.scan);
            for (tally, &u) in tallies.iter_mut().zip(levels) {
                let c = if u == f64::NEG_INFINITY {
                    0
                } else {
                    values.iter().filter(|v| v.at_most(u)).count()
                };
                tally.add(c);
            }
        }
        tallies
    };
    let workers = (config.workers as u64).min(config.trials);
    let chunk = config.trials.div_ceil(workers);
    let parts: Vec<Vec<Tally>> = if workers == 1 {
        vec![run(0, config.trials)]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let from = w * chunk;
                    let to = ((w + 1) * chunk).min(config.trials);
                    scope.spawn(move || run(from, to))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };
    let mut total = vec![Tally::default(); levels.len()];
    for part in parts {
        for (t, p) in total.iter_mut().zip(part) {
            t.merge(p);
        }
    }
    Ok(total
        .into_iter()
        .map(|t| t.estimate(config.trials, config.seed))
        .collect())
}

pub fn estimate_em(
    model: &PolynomialModel,
    query: &CountQuery,
    config: &MCConfig,
) -> Result<MCEstimate> {
    let r = estimate_em_levels(model, query.lo(), query.hi(), &[query.u()], config)?;
    Ok(r[0])
}
