//! Distribution studies over mass-generated calculator values: real-value
//! histograms against the log-Cauchy law, a Monte Carlo check of the
//! expected search depth under an exponential toy model, and complex-plane
//! point clouds.

use crate::calc::CalculatorSpec;
use crate::criteria::el_cdf;
use crate::fp::{Precision, Wide};
use crate::rpn::CountOverflow;
use crate::search::{evaluate_range, plan_blocks, UNDEFINED_KEY};
use alloc::vec::Vec;
use core::ops::ControlFlow;
use hashbrown::HashSet;
use rand_core::{RngCore, SeedableRng};

/// One collected real value and the code length that first produced it.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RealSample {
    pub value: f64,
    pub k: u32,
}

/// Unique values collected in enumeration order.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SampleSet {
    pub calc: crate::calc::CalcId,
    pub values: Vec<RealSample>,
    /// Deepest code length touched while collecting.
    pub max_k_reached: u32,
    /// Valid codes consumed.
    pub k2_consumed: u64,
}

/// Generation ended before the requested count was collected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatsError {
    /// All lengths up to the limit were enumerated; `collected` values found.
    BudgetExhausted { collected: usize },
    /// The enumeration space exceeds the 64-bit index range.
    Overflow,
    /// No positive samples to compare against the distribution.
    NoPositiveSamples,
}

impl core::fmt::Display for StatsError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            StatsError::BudgetExhausted { collected } => {
                write!(f, "enumeration exhausted after {collected} values")
            }
            StatsError::Overflow => write!(f, "enumeration space exceeds the 64-bit range"),
            StatsError::NoPositiveSamples => write!(f, "no positive samples"),
        }
    }
}

impl core::error::Error for StatsError {}

/// Relative imaginary-part budget below which a value counts as real.
fn real_tolerance(prec: Precision) -> f64 {
    4.0 * prec.ulp_at_one()
}

fn wide_of(bits: (u64, u64)) -> Wide {
    Wide::from_bits_pair(bits)
}

/// Walks unique values in enumeration order, calling `f` with each new
/// value's code length and key until it breaks or lengths run out.
fn for_each_unique(
    spec: &CalculatorSpec,
    prec: Precision,
    max_k: u32,
    mut f: impl FnMut(u32, [u64; 4]) -> ControlFlow<()>,
) -> Result<(u32, u64, bool), CountOverflow> {
    const CHUNK: u64 = 65536;
    let blocks = plan_blocks(spec, max_k)?;
    let mut seen: HashSet<[u64; 4]> = HashSet::new();
    let mut k2 = 0u64;
    let mut deepest = 0u32;
    for block in &blocks {
        if block.valid == 0 {
            continue;
        }
        deepest = block.k;
        let mut at = block.start;
        let end = block.start + block.total;
        while at < end {
            let len = CHUNK.min(end - at);
            for e in evaluate_range(spec, prec, at, len) {
                k2 += 1;
                if e.key == UNDEFINED_KEY || !seen.insert(e.key) {
                    continue;
                }
                if let ControlFlow::Break(()) = f(block.k, e.key) {
                    return Ok((deepest, k2, true));
                }
            }
            at += len;
        }
    }
    Ok((deepest, k2, false))
}

/// Collects the first `count` unique real values in enumeration order,
/// discarding complex ones. Real means the imaginary part is below the
/// working precision's relative tolerance.
pub fn generate_reals(
    spec: &CalculatorSpec,
    prec: Precision,
    count: usize,
    max_k: u32,
) -> Result<SampleSet, StatsError> {
    let tol = real_tolerance(prec);
    let mut values = Vec::with_capacity(count);
    let (max_k_reached, k2_consumed, done) = for_each_unique(spec, prec, max_k, |k, key| {
        let re = wide_of((key[0], key[1]));
        let im = wide_of((key[2], key[3]));
        if im.abs().to_f64() <= tol * re.abs().to_f64().max(1.0) {
            values.push(RealSample {
                value: re.to_f64(),
                k,
            });
            if values.len() == count {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })
    .map_err(|_| StatsError::Overflow)?;
    if !done {
        return Err(StatsError::BudgetExhausted {
            collected: values.len(),
        });
    }
    Ok(SampleSet {
        calc: spec.id,
        values,
        max_k_reached,
        k2_consumed,
    })
}

/// Unique non-real values as (Re, Im) points, optionally clipped to
/// `[re_min, re_max, im_min, im_max]` and optionally reduced to fractional
/// parts `x - floor(x)`.
pub fn dump_complex_plane(
    spec: &CalculatorSpec,
    prec: Precision,
    max_k: u32,
    bounds: Option<[f64; 4]>,
    fractional: bool,
) -> Result<Vec<(f64, f64)>, StatsError> {
    let tol = real_tolerance(prec);
    let mut points = Vec::new();
    for_each_unique(spec, prec, max_k, |_, key| {
        let re = wide_of((key[0], key[1])).to_f64();
        let im = wide_of((key[2], key[3])).to_f64();
        if im.abs() <= tol * re.abs().max(1.0) {
            return ControlFlow::Continue(());
        }
        let (mut x, mut y) = (re, im);
        if fractional {
            x = frac(x);
            y = frac(y);
        }
        if let Some([re_min, re_max, im_min, im_max]) = bounds {
            if x < re_min || x > re_max || y < im_min || y > im_max {
                return ControlFlow::Continue(());
            }
        }
        points.push((x, y));
        ControlFlow::Continue(())
    })
    .map_err(|_| StatsError::Overflow)?;
    Ok(points)
}

/// Fractional part in [0, 1). Values an epsilon below an integer would
/// round up to exactly 1.0, so they wrap to the equivalent 0.0.
fn frac(x: f64) -> f64 {
    let f = x - libm::floor(x);
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

/// One histogram bin with empirical and model densities.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HistBin {
    pub lo: f64,
    pub hi: f64,
    pub count: u64,
    /// Fraction of positive samples per unit of x.
    pub empirical_density: f64,
    /// Log-Cauchy probability of the bin per unit of x.
    pub cauchy_density: f64,
}

/// Histogram of positive reals against the log-Cauchy law, plus the
/// Kolmogorov-Smirnov distance of the sample to its CDF.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Histogram {
    pub bins: Vec<HistBin>,
    pub n_positive: u64,
    pub n_nonpositive: u64,
    /// Positive samples falling outside the binned range (still in the KS).
    pub out_of_range: u64,
    pub ks_distance: f64,
}

/// Range covered by the log-spaced bins.
pub const HIST_RANGE: (f64, f64) = (1e-6, 1e6);
/// Default bin count.
pub const HIST_BINS: usize = 200;

/// Bins the positive samples over [`HIST_RANGE`] and computes the KS
/// distance to the log-Cauchy CDF.
pub fn histogram_vs_cauchy(samples: &[f64], bins: usize) -> Result<Histogram, StatsError> {
    let mut positive: Vec<f64> = samples
        .iter()
        .copied()
        .filter(|x| *x > 0.0 && x.is_finite())
        .collect();
    if positive.is_empty() {
        return Err(StatsError::NoPositiveSamples);
    }
    let n_nonpositive = (samples.len() - positive.len()) as u64;
    let n = positive.len() as f64;

    let (lo, hi) = HIST_RANGE;
    let log_lo = libm::log(lo);
    let step = (libm::log(hi) - log_lo) / bins as f64;
    let mut counts = alloc::vec![0u64; bins];
    let mut out_of_range = 0u64;
    for &x in &positive {
        let t = (libm::log(x) - log_lo) / step;
        if t < 0.0 || t >= bins as f64 {
            out_of_range += 1;
        } else {
            counts[t as usize] += 1;
        }
    }
    let mut hist = Vec::with_capacity(bins);
    for (i, &count) in counts.iter().enumerate() {
        let b_lo = libm::exp(log_lo + i as f64 * step);
        let b_hi = libm::exp(log_lo + (i + 1) as f64 * step);
        let width = b_hi - b_lo;
        hist.push(HistBin {
            lo: b_lo,
            hi: b_hi,
            count,
            empirical_density: count as f64 / (n * width),
            cauchy_density: (el_cdf(b_hi) - el_cdf(b_lo)) / width,
        });
    }

    positive.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let mut ks = 0.0f64;
    for (i, &x) in positive.iter().enumerate() {
        let f = el_cdf(x);
        let above = (i + 1) as f64 / n - f;
        let below = f - i as f64 / n;
        ks = ks.max(above.max(below));
    }

    Ok(Histogram {
        bins: hist,
        n_positive: positive.len() as u64,
        n_nonpositive,
        out_of_range,
        ks_distance: ks,
    })
}

/// Inverse CDF of the log-Cauchy law, for synthetic sampling.
pub fn el_inverse_cdf(q: f64) -> f64 {
    libm::exp(libm::tan(core::f64::consts::PI * (q - 0.5)))
}

/// Exponential-draw experiment configuration.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MCConfig {
    /// Scale of the exponential distribution.
    pub lambda: f64,
    /// Target value.
    pub z: f64,
    /// Half-width of the acceptance window.
    pub sigma: f64,
    pub trials: u64,
    pub seed: u64,
}

/// Observed and predicted draw counts until a window hit.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct McReport {
    pub observed_mean: f64,
    /// `e^(z/lambda) / (2 sinh(sigma/lambda))`.
    pub predicted: f64,
    /// Standard error of the observed mean.
    pub std_error: f64,
    pub trials: u64,
}

fn unit_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 / 9007199254740992.0
}

/// Draws `xi = -lambda ln(1-u)` until it lands in `[z-sigma, z+sigma]`,
/// averaging the number of draws over the configured trials.
pub fn mc_exponential_tries(config: &MCConfig) -> McReport {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(config.seed);
    let lo = config.z - config.sigma;
    let hi = config.z + config.sigma;
    let mut sum = 0.0f64;
    let mut sum_sq = 0.0f64;
    for _ in 0..config.trials {
        let mut tries = 0u64;
        loop {
            tries += 1;
            let u = unit_f64(&mut rng);
            let xi = -config.lambda * libm::log1p(-u);
            if xi >= lo && xi <= hi {
                break;
            }
        }
        sum += tries as f64;
        sum_sq += tries as f64 * tries as f64;
    }
    let n = config.trials as f64;
    let mean = sum / n;
    let variance = (sum_sq / n - mean * mean).max(0.0);
    let predicted =
        libm::exp(config.z / config.lambda) / (2.0 * libm::sinh(config.sigma / config.lambda));
    McReport {
        observed_mean: mean,
        predicted,
        std_error: libm::sqrt(variance / n),
        trials: config.trials,
    }
}
