//! Decision criteria over a sequence of progressively better approximations.
//!
//! Three families of indicators judge whether the best approximation found so
//! far is a genuine identification or a random near-miss:
//!
//! * e-folding: the error of the N-th best approximation statistically tracks
//!   `z * e^-N`; a drop several orders below that line is the signature of a
//!   real match.
//! * likelihood: values produced by the calculators empirically follow a
//!   log-Cauchy density, so the probability that a random formula lands
//!   within the target's error window after `k3` distinct values is
//!   quantifiable, and the resulting log-likelihood curve over the
//!   improvement sequence peaks at the most probable identification.
//! * compression: correct decimal digits bought per code digit; a ratio
//!   above 1 means the code carries more information than it costs.

use crate::fp::Precision;
use crate::search::{SearchState, StopReason};
use alloc::vec::Vec;
use core::f64::consts::PI;

/// sqrt(2 pi), the normalization of the gaussian density.
pub const SQRT_2PI: f64 = 2.5066282746310002;

/// Density of real calculator values: log-Cauchy, `1/(pi x (1 + ln^2 x))`.
pub fn el_pdf(x: f64) -> f64 {
    if !(x > 0.0) || !x.is_finite() {
        return 0.0;
    }
    let l = libm::log(x);
    1.0 / (PI * x * (1.0 + l * l))
}

/// Cumulative form of [`el_pdf`]: `1/2 + atan(ln x)/pi`.
pub fn el_cdf(x: f64) -> f64 {
    if !(x > 0.0) {
        return 0.0;
    }
    0.5 + libm::atan(libm::log(x)) / PI
}

/// Shape of the target's error distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ErrorKind {
    Gaussian,
    Uniform,
}

/// Error distribution `Q(x, z, sigma)` of the target value.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ErrorModel {
    pub kind: ErrorKind,
    pub sigma: f64,
}

impl ErrorModel {
    pub fn gaussian(sigma: f64) -> ErrorModel {
        ErrorModel {
            kind: ErrorKind::Gaussian,
            sigma,
        }
    }

    pub fn uniform(sigma: f64) -> ErrorModel {
        ErrorModel {
            kind: ErrorKind::Uniform,
            sigma,
        }
    }

    /// Effective window width in sigmas: the peak density is `1/(kappa sigma)`.
    pub fn kappa(&self) -> f64 {
        match self.kind {
            ErrorKind::Gaussian => SQRT_2PI,
            ErrorKind::Uniform => 2.0,
        }
    }

    /// `Q(z, z, sigma)`, the density at the target itself.
    pub fn peak(&self) -> f64 {
        1.0 / (self.kappa() * self.sigma)
    }

    /// `ln Q(x, z, sigma)`; negative infinity outside a uniform window.
    pub fn ln_density(&self, x: f64, z: f64) -> f64 {
        let d = x - z;
        match self.kind {
            ErrorKind::Gaussian => {
                -libm::log(SQRT_2PI * self.sigma) - d * d / (2.0 * self.sigma * self.sigma)
            }
            ErrorKind::Uniform => {
                if d.abs() <= self.sigma {
                    -libm::log(2.0 * self.sigma)
                } else {
                    f64::NEG_INFINITY
                }
            }
        }
    }
}

/// How the distinct-value penalty enters the log-likelihood.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum LoglMode {
    /// `k3 ln(1 - P/Q) + ln Q(x)`, the untruncated form.
    Exact,
    /// First-order expansion `-k3 P/Q + ln Q(x)`.
    Linearized,
}

/// The error window is so wide that a random value is certain to fall in it.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WindowTooWide {
    pub p_over_q: f64,
}

impl core::fmt::Display for WindowTooWide {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "error window captures a random value with certainty (P/Q = {})",
            self.p_over_q
        )
    }
}

impl core::error::Error for WindowTooWide {}

/// Log-likelihood that `x` is the true identification of `z` after `k3`
/// distinct values, under the value density [`el_pdf`] and error model `q`.
pub fn log_likelihood(
    q: &ErrorModel,
    mode: LoglMode,
    k3: u64,
    x: f64,
    z: f64,
) -> Result<f64, WindowTooWide> {
    let p_over_q = q.kappa() * q.sigma * el_pdf(z);
    if p_over_q >= 1.0 {
        return Err(WindowTooWide { p_over_q });
    }
    let penalty = match mode {
        LoglMode::Exact => k3 as f64 * libm::log1p(-p_over_q),
        LoglMode::Linearized => -(k3 as f64) * p_over_q,
    };
    Ok(penalty + q.ln_density(x, z))
}

/// One improvement's log-likelihood, evaluated with the counters at its
/// discovery.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LikelihoodPoint {
    pub n: u32,
    pub k3: u64,
    pub x: f64,
    pub logl: f64,
}

/// Log-likelihood along the improvement sequence.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LikelihoodCurve {
    pub points: Vec<LikelihoodPoint>,
    /// Index of the highest finite point, earliest on exact ties.
    pub argmax: Option<usize>,
    /// Lead of the peak over the best point with a genuinely different value;
    /// `None` when every other point shares the peak's value cluster.
    pub margin: Option<f64>,
}

/// Re-encodings of one formula differ only by accumulated rounding, so
/// values within this many relative machine epsilons of the peak count as
/// the same formula when computing the margin.
pub const CLUSTER_EPS_MULTIPLE: f64 = 1e3;

/// Evaluates [`log_likelihood`] at every improvement of a search.
pub fn likelihood_curve(
    state: &SearchState,
    q: &ErrorModel,
    mode: LoglMode,
) -> Result<LikelihoodCurve, WindowTooWide> {
    let z = state.target.z().to_f64();
    let mut points = Vec::with_capacity(state.approximants.len());
    for a in &state.approximants {
        let x = a.value().re.to_f64();
        points.push(LikelihoodPoint {
            n: a.n,
            k3: a.counters.k3,
            x,
            logl: log_likelihood(q, mode, a.counters.k3, x, z)?,
        });
    }
    let mut argmax: Option<usize> = None;
    for (i, p) in points.iter().enumerate() {
        if !p.logl.is_finite() {
            continue;
        }
        match argmax {
            Some(m) if points[m].logl >= p.logl => {}
            _ => argmax = Some(i),
        }
    }
    let margin = argmax.and_then(|m| {
        let xm = state.approximants[m].value().re;
        let tol =
            CLUSTER_EPS_MULTIPLE * state.precision.machine_eps() * points[m].x.abs().max(1.0);
        points
            .iter()
            .enumerate()
            .filter(|(i, p)| {
                let d = state.approximants[*i].value().re.sub(xm).abs().to_f64();
                *i != m && d > tol && p.logl.is_finite()
            })
            .map(|(_, p)| p.logl)
            .fold(None, |best: Option<f64>, l| {
                Some(best.map_or(l, |b| b.max(l)))
            })
            .map(|runner_up| points[m].logl - runner_up)
    });
    Ok(LikelihoodCurve {
        points,
        argmax,
        margin,
    })
}

/// e-folding indicators for one improvement.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EFolding {
    pub n: u32,
    /// `(z / eps_N) e^-N`: how far the error sits below the statistical line.
    pub e1: f64,
    /// `(eps_{N-1} / eps_N) / e`: the drop relative to the previous best.
    pub e2: Option<f64>,
    /// The recorded error was at or below the working precision's floor and
    /// was clamped to it.
    pub eps_clamped: bool,
}

/// Computes [`EFolding`] for each improvement of a search.
pub fn efolding_indicators(state: &SearchState) -> Vec<EFolding> {
    let z = state.target.z().to_f64().abs();
    let floor = state.precision.machine_eps() * z.max(1.0);
    let ln_z = libm::log(z.max(f64::MIN_POSITIVE));
    let mut out = Vec::with_capacity(state.approximants.len());
    let mut prev_ln_eps = None;
    for a in &state.approximants {
        let clamped = a.eps <= floor;
        let ln_eps = libm::log(a.eps.max(floor));
        let t = (ln_z - ln_eps - a.n as f64).min(709.0);
        let e1 = libm::exp(t);
        let e2 = prev_ln_eps.map(|p: f64| libm::exp(((p - ln_eps) - 1.0).min(709.0)));
        out.push(EFolding {
            n: a.n,
            e1,
            e2,
            eps_clamped: clamped,
        });
        prev_ln_eps = Some(ln_eps);
    }
    out
}

/// Correct digits bought per code digit: `-log10(max(eps, sigma)) / (K log10 n)`.
/// An exact match (both zero) is scored at the working precision's epsilon.
pub fn compression_ratio(
    eps: f64,
    sigma: f64,
    k: u32,
    n_buttons: usize,
    prec: Precision,
) -> f64 {
    let mut err = eps.max(sigma);
    if !(err > 0.0) {
        err = prec.machine_eps();
    }
    -libm::log10(err) / (k as f64 * libm::log10(n_buttons as f64))
}

/// e1 at or above this marks a candidate.
pub const E1_CANDIDATE: f64 = 1e3;
/// e2 at or above this marks a candidate.
pub const E2_CANDIDATE: f64 = 1e3;
/// Compression ratio at or above this marks a candidate.
pub const R_CANDIDATE: f64 = 1.2;
/// Likelihood-peak lead (with a positive peak) that marks a candidate.
pub const LOGL_MARGIN_CANDIDATE: f64 = 10.0;

/// Which indicator fired, with its value.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CandidateReason {
    /// The search stopped because the error reached the resolution floor.
    MachineEpsilon,
    AbsoluteEfolding(f64),
    RelativeEfolding(f64),
    Compression(f64),
    /// Peak log-likelihood lead; `None` when no rival value exists at all.
    LikelihoodPeak(Option<f64>),
}

/// Why the search is judged unsuccessful.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum FailureReason {
    /// Budget or length limit reached with no indicator firing.
    Exhausted,
    /// More distinct values tested than `1/sigma`; further search is pointless.
    SigmaBudgetExceeded,
    /// The error window is wider than the value distribution itself.
    WindowTooWide,
}

/// Overall judgement of a search.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Verdict {
    Candidate(Vec<CandidateReason>),
    Failure(FailureReason),
    /// The search is still open: no indicator fired but budget remains.
    Inconclusive,
}

impl Verdict {
    pub fn is_candidate(&self) -> bool {
        matches!(self, Verdict::Candidate(_))
    }
}

/// All indicators plus the verdict for one search.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CriteriaReport {
    pub efolding: Vec<EFolding>,
    /// Compression ratio of each improvement.
    pub ratios: Vec<f64>,
    pub curve: Option<LikelihoodCurve>,
    pub likelihood_error: Option<WindowTooWide>,
    pub verdict: Verdict,
}

/// Runs every criterion over a search and combines them into a verdict.
pub fn assess(state: &SearchState, q: &ErrorModel, mode: LoglMode) -> CriteriaReport {
    let efolding = efolding_indicators(state);
    let n_buttons = state.calc.button_count();
    let ratios: Vec<f64> = state
        .approximants
        .iter()
        .map(|a| compression_ratio(a.eps, q.sigma, a.k, n_buttons, state.precision))
        .collect();
    let (curve, likelihood_error) = match likelihood_curve(state, q, mode) {
        Ok(c) => (Some(c), None),
        Err(e) => (None, Some(e)),
    };

    let mut reasons = Vec::new();
    if state.stop == Some(StopReason::Resolution) {
        reasons.push(CandidateReason::MachineEpsilon);
    }
    let e1_max = efolding.iter().map(|e| e.e1).fold(0.0f64, f64::max);
    if e1_max >= E1_CANDIDATE {
        reasons.push(CandidateReason::AbsoluteEfolding(e1_max));
    }
    let e2_max = efolding
        .iter()
        .filter_map(|e| e.e2)
        .fold(0.0f64, f64::max);
    if e2_max >= E2_CANDIDATE {
        reasons.push(CandidateReason::RelativeEfolding(e2_max));
    }
    let r_max = ratios.iter().copied().fold(0.0f64, f64::max);
    if r_max >= R_CANDIDATE {
        reasons.push(CandidateReason::Compression(r_max));
    }
    if let Some(c) = &curve {
        if let Some(m) = c.argmax {
            let peak_leads = match c.margin {
                Some(margin) => margin >= LOGL_MARGIN_CANDIDATE,
                None => true,
            };
            if peak_leads && c.points[m].logl > 0.0 {
                reasons.push(CandidateReason::LikelihoodPeak(c.margin));
            }
        }
    }

    let verdict = if !reasons.is_empty() {
        Verdict::Candidate(reasons)
    } else if likelihood_error.is_some() {
        Verdict::Failure(FailureReason::WindowTooWide)
    } else if q.sigma > 0.0 && state.counters.k3 as f64 > 1.0 / q.sigma {
        Verdict::Failure(FailureReason::SigmaBudgetExceeded)
    } else if state.stop.is_some() {
        Verdict::Failure(FailureReason::Exhausted)
    } else {
        Verdict::Inconclusive
    };

    CriteriaReport {
        efolding,
        ratios,
        curve,
        likelihood_error,
        verdict,
    }
}
