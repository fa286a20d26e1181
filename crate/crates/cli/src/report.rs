//! Report assembly and rendering. Every emitter is a view over the same
//! joined rows, so the JSON, CSV, and table outputs cannot drift apart.

use constrec_core::criteria::{CandidateReason, CriteriaReport, FailureReason, Verdict};
use constrec_core::fp::shared_leading_digits;
use constrec_core::search::{SearchState, Snapshot, StopReason};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt::Write as _;

pub const SCHEMA: &str = "constrec-report/1";

/// Report provenance. The timestamp is the only non-deterministic field and
/// honors the `CONSTREC_TIMESTAMP` override (seconds since the epoch).
#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub timestamp_unix: Option<u64>,
}

pub fn meta() -> Meta {
    let timestamp_unix = match std::env::var("CONSTREC_TIMESTAMP") {
        Ok(s) => s.parse::<u64>().ok(),
        Err(_) => std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs()),
    };
    Meta {
        schema: SCHEMA,
        tool_version: env!("CARGO_PKG_VERSION"),
        timestamp_unix,
    }
}

/// The run configuration echoed into every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunEcho {
    pub command: String,
    pub calculator: u32,
    pub x_value: Option<f64>,
    pub precision: String,
    pub z: Option<String>,
    pub sigma: Option<f64>,
    pub max_k: Option<u32>,
    pub max_codes: Option<u64>,
    pub max_valid: Option<u64>,
    pub workers: usize,
    pub chunk: u64,
    pub error_model: Option<String>,
    pub logl_mode: Option<String>,
    pub resumed: bool,
}

/// One improvement joined with every per-improvement indicator.
#[derive(Clone, Debug, Serialize)]
pub struct ApproximantRow {
    pub n: u32,
    pub k: u32,
    pub code: String,
    pub value: String,
    pub eps: f64,
    pub k1: u64,
    pub k2: u64,
    pub k3: u64,
    /// Error over the statistically expected error at this depth.
    pub e1: f64,
    /// Previous error over e times this error.
    pub e2: Option<f64>,
    pub logl: Option<f64>,
    /// Continuous compression ratio.
    pub r: f64,
    /// Correct leading digits per code digit.
    pub r_digits: f64,
    pub shared_digits: u32,
    pub ties: Vec<String>,
    pub tie_overflow: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecognizeReport {
    pub meta: Meta,
    pub config: RunEcho,
    pub counters_k1: u64,
    pub counters_k2: u64,
    pub counters_k3: u64,
    pub k3_is_estimate: bool,
    pub stop: Option<StopReason>,
    pub verdict: &'static str,
    pub reasons: Vec<String>,
    pub approximants: Vec<ApproximantRow>,
    pub snapshots: Vec<Snapshot>,
    pub criteria: CriteriaReport,
}

pub fn verdict_label(v: &Verdict) -> &'static str {
    match v {
        Verdict::Candidate(_) => "candidate",
        Verdict::Failure(_) => "failure",
        Verdict::Inconclusive => "inconclusive",
    }
}

pub fn verdict_exit(v: &Verdict) -> i32 {
    match v {
        Verdict::Candidate(_) => 0,
        Verdict::Failure(_) => 1,
        Verdict::Inconclusive => 2,
    }
}

pub fn reason_lines(v: &Verdict) -> Vec<String> {
    match v {
        Verdict::Candidate(reasons) => reasons
            .iter()
            .map(|r| match r {
                CandidateReason::MachineEpsilon => {
                    String::from("error reached the working precision's floor")
                }
                CandidateReason::AbsoluteEfolding(e1) => {
                    format!("error is {e1:.3e} times below the expected envelope")
                }
                CandidateReason::RelativeEfolding(e2) => {
                    format!("one improvement cut the error {e2:.3e} times more than expected")
                }
                CandidateReason::Compression(r) => {
                    format!("compression ratio reached {r:.2}")
                }
                CandidateReason::LikelihoodPeak(margin) => match margin {
                    Some(m) => format!("likelihood peak leads every rival by {m:.1}"),
                    None => String::from("likelihood peak has no rival"),
                },
            })
            .collect(),
        Verdict::Failure(f) => vec![match f {
            FailureReason::Exhausted => String::from("budget exhausted with no indicator firing"),
            FailureReason::SigmaBudgetExceeded => {
                String::from("more distinct values tried than the window can justify")
            }
            FailureReason::WindowTooWide => {
                String::from("the target window is too wide for this value density")
            }
        }],
        Verdict::Inconclusive => vec![String::from("no indicator fired; budget remains")],
    }
}

/// Joins the search state and criteria into renderable rows.
pub fn build_recognize(
    config: RunEcho,
    state: &SearchState,
    criteria: CriteriaReport,
) -> RecognizeReport {
    let z = state.target.z();
    let prec = state.precision;
    let logl_by_n: HashMap<u32, f64> = criteria
        .curve
        .iter()
        .flat_map(|c| c.points.iter())
        .map(|p| (p.n, p.logl))
        .collect();
    let approximants = state
        .approximants
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let shared = shared_leading_digits(a.value().re, z, prec);
            let emptyset = Default::default();
            let ties = state.ties.get(i).unwrap_or(&emptyset);
            ApproximantRow {
                n: a.n,
                k: a.k,
                code: a.code.clone(),
                value: a.value_text.clone(),
                eps: a.eps,
                k1: a.counters.k1,
                k2: a.counters.k2,
                k3: a.counters.k3,
                e1: criteria.efolding.get(i).map(|e| e.e1).unwrap_or(f64::NAN),
                e2: criteria.efolding.get(i).and_then(|e| e.e2),
                logl: logl_by_n.get(&a.n).copied(),
                r: criteria.ratios.get(i).copied().unwrap_or(f64::NAN),
                r_digits: shared as f64 / a.k as f64,
                shared_digits: shared,
                ties: ties.codes.clone(),
                tie_overflow: ties.overflow,
            }
        })
        .collect();
    RecognizeReport {
        meta: meta(),
        config,
        counters_k1: state.counters.k1,
        counters_k2: state.counters.k2,
        counters_k3: state.counters.k3,
        k3_is_estimate: state.estimate_mode,
        stop: state.stop,
        verdict: verdict_label(&criteria.verdict),
        reasons: reason_lines(&criteria.verdict),
        approximants,
        snapshots: state.snapshots.clone(),
        criteria,
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}

fn opt(x: Option<f64>, width: usize, prec: usize) -> String {
    match x {
        Some(v) => format!("{v:>width$.prec$e}"),
        None => format!("{:>width$}", "-"),
    }
}

fn opt_plain(x: Option<f64>, width: usize, prec: usize) -> String {
    match x {
        Some(v) => format!("{v:>width$.prec$}"),
        None => format!("{:>width$}", "-"),
    }
}

pub fn recognize_table(report: &RecognizeReport) -> String {
    let mut out = String::new();
    let code_w = report
        .approximants
        .iter()
        .map(|a| a.code.len())
        .max()
        .unwrap_or(4)
        .max(4);
    let value_w = report
        .approximants
        .iter()
        .map(|a| a.value.len())
        .max()
        .unwrap_or(5)
        .max(5);
    let _ = writeln!(
        out,
        "{:>3} {:>2} {:<code_w$} {:<value_w$} {:>10} {:>9} {:>9} {:>9} {:>6}",
        "N", "K", "CODE", "VALUE", "EPS", "E1", "E2", "LOGL", "R"
    );
    for a in &report.approximants {
        let _ = writeln!(
            out,
            "{:>3} {:>2} {:<code_w$} {:<value_w$} {:>10.3e} {:>9.2e} {} {} {:>6.2}",
            a.n,
            a.k,
            a.code,
            a.value,
            a.eps,
            a.e1,
            opt(a.e2, 9, 2),
            opt_plain(a.logl, 9, 2),
            a.r,
        );
        if !a.ties.is_empty() || a.tie_overflow > 0 {
            let _ = writeln!(
                out,
                "        = same value: {}{}",
                a.ties.join(" "),
                if a.tie_overflow > 0 {
                    format!(" (+{} more)", a.tie_overflow)
                } else {
                    String::new()
                }
            );
        }
    }
    let _ = writeln!(
        out,
        "codes {}  valid {}  distinct {}{}  stop {}",
        report.counters_k1,
        report.counters_k2,
        report.counters_k3,
        if report.k3_is_estimate { " (floor)" } else { "" },
        match report.stop {
            Some(StopReason::MaxK) => "length limit",
            Some(StopReason::CodeBudget) => "code budget",
            Some(StopReason::ValidBudget) => "valid-code budget",
            Some(StopReason::Resolution) => "resolution floor",
            None => "none",
        },
    );
    let _ = writeln!(out, "verdict: {}", report.verdict);
    for r in &report.reasons {
        let _ = writeln!(out, "  - {r}");
    }
    out
}

pub fn recognize_csv(report: &RecognizeReport) -> String {
    let mut out = String::from(
        "n,k,code,value,eps,e1,e2,logl,r,r_digits,k1,k2,k3,ties,tie_overflow\n",
    );
    for a in &report.approximants {
        let _ = writeln!(
            out,
            "{},{},{},{},{:e},{:e},{},{},{},{},{},{},{},{},{}",
            a.n,
            a.k,
            a.code,
            a.value,
            a.eps,
            a.e1,
            a.e2.map(|v| format!("{v:e}")).unwrap_or_default(),
            a.logl.map(|v| v.to_string()).unwrap_or_default(),
            a.r,
            a.r_digits,
            a.k1,
            a.k2,
            a.k3,
            a.ties.join(" "),
            a.tie_overflow,
        );
    }
    out
}

/// One compression-table row; ties repeat the value of their improvement.
#[derive(Clone, Debug, Serialize)]
pub struct CompressionRow {
    pub value: String,
    pub code: String,
    pub k: u32,
    pub eps: f64,
    pub shared_digits: u32,
    /// Correct digits per code digit, the table's headline number.
    pub r: f64,
    pub is_tie: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompressionReport {
    pub meta: Meta,
    pub config: RunEcho,
    pub z: String,
    pub rows: Vec<CompressionRow>,
    pub stop: Option<StopReason>,
}

pub fn build_compression(config: RunEcho, state: &SearchState) -> CompressionReport {
    let z = state.target.z();
    let prec = state.precision;
    let mut rows = Vec::new();
    for (i, a) in state.approximants.iter().enumerate() {
        let shared = shared_leading_digits(a.value().re, z, prec);
        let r = shared as f64 / a.k as f64;
        rows.push(CompressionRow {
            value: a.value_text.clone(),
            code: a.code.clone(),
            k: a.k,
            eps: a.eps,
            shared_digits: shared,
            r,
            is_tie: false,
        });
        if let Some(ties) = state.ties.get(i) {
            for code in &ties.codes {
                rows.push(CompressionRow {
                    value: a.value_text.clone(),
                    code: code.clone(),
                    k: a.k,
                    eps: a.eps,
                    shared_digits: shared,
                    r,
                    is_tie: true,
                });
            }
        }
    }
    CompressionReport {
        meta: meta(),
        config,
        z: state.target.z_text.clone(),
        rows,
        stop: state.stop,
    }
}

pub fn compression_table(report: &CompressionReport) -> String {
    let mut out = String::new();
    let value_w = report
        .rows
        .iter()
        .map(|r| r.value.len())
        .max()
        .unwrap_or(5)
        .max(5);
    let code_w = report
        .rows
        .iter()
        .map(|r| r.code.len())
        .max()
        .unwrap_or(4)
        .max(4);
    let _ = writeln!(out, "{:<value_w$} {:<code_w$} {:>5}", "VALUE", "CODE", "R");
    for r in &report.rows {
        let _ = writeln!(out, "{:<value_w$} {:<code_w$} {:>5.2}", r.value, r.code, r.r);
    }
    let _ = writeln!(out, "target {}", report.z);
    out
}

pub fn compression_csv(report: &CompressionReport) -> String {
    let mut out = String::from("value,code,k,eps,shared_digits,r,is_tie\n");
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{:e},{},{},{}",
            r.value, r.code, r.k, r.eps, r.shared_digits, r.r, r.is_tie
        );
    }
    out
}
