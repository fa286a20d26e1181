//! Command implementations. Each returns the process exit code: 0 success
//! (or candidate verdict), 1 failure verdict, 2 inconclusive verdict or a
//! budget that ran out mid-table.

use crate::cli::{
    CloudArgs, Command, EnumerateArgs, FitArgs, FormatArg, HistArgs, McArgs, RationalsCommand,
    RecognizeArgs, SeqArgs, StatsCommand, Table1Args, VerifyArgs,
};
use crate::report::{self, Meta, RunEcho};
use crate::{checkpoint, emit, parallel, usage};
use anyhow::Result;
use constrec_core::calc::{default_samples, make_calculator, verify_identities, CalcId};
use constrec_core::criteria::assess;
use constrec_core::fp::{format_decimal, Precision, WideComplex};
use constrec_core::rational::{int_bijection, selfinv_closure, ExtendedRational};
use constrec_core::rpn::{block_start, evaluate, index_to_code, k1_total, validate, EvalOutcome};
use constrec_core::search::{Limits, SearchDriver, SearchTarget, StopReason};
use constrec_core::stats::{
    dump_complex_plane, generate_reals, histogram_vs_cauchy, mc_exponential_tries, HistBin,
    MCConfig, StatsError,
};
use serde::Serialize;
use std::fmt::Write as _;

pub fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Recognize(a) => recognize(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Table1(a) => table1(a),
        Command::Stats(StatsCommand::Hist(a)) => stats_hist(a),
        Command::Stats(StatsCommand::Mc(a)) => stats_mc(a),
        Command::Stats(StatsCommand::Cloud(a)) => stats_cloud(a),
        Command::Stats(StatsCommand::Fit(a)) => stats_fit(a),
        Command::Verify(a) => verify(a),
        Command::Rationals(RationalsCommand::Nxt(a)) => rationals_nxt(a),
        Command::Rationals(RationalsCommand::Selfinv(a)) => rationals_selfinv(a),
        Command::Rationals(RationalsCommand::Bijection(a)) => rationals_bijection(a),
    }
}

fn calc_id(ix: u32) -> Result<CalcId> {
    CalcId::from_index(ix).ok_or_else(|| usage(format!("--calc must be 1, 2, 3, or 4 (got {ix})")))
}

pub fn recognize(args: RecognizeArgs) -> Result<i32> {
    let prec: Precision = args.search.precision.into();
    let (mut driver, resumed) = if args.resume {
        let path = args.checkpoint.as_ref().expect("--resume requires --checkpoint");
        let (state, keys) = checkpoint::load(path)?;
        if let Some(c) = args.calc {
            if calc_id(c)? != state.calc {
                return Err(usage(format!(
                    "checkpoint is a calculator {} run, not {}",
                    state.calc.index(),
                    c
                )));
            }
        }
        if let Some(z) = &args.z {
            if *z != state.target.z_text {
                return Err(usage(format!(
                    "checkpoint targets {}, not {}",
                    state.target.z_text, z
                )));
            }
        }
        if let Some(s) = args.sigma {
            if s != state.target.sigma {
                return Err(usage(format!(
                    "checkpoint uses sigma {:e}, not {s:e}",
                    state.target.sigma
                )));
            }
        }
        if args.x_value.is_some() && args.x_value != state.x_value {
            return Err(usage("checkpoint uses a different x value"));
        }
        if prec != state.precision {
            return Err(usage(format!(
                "checkpoint was run at {} precision",
                state.precision.label()
            )));
        }
        let spec = make_calculator(state.calc, state.x_value);
        let mut state = state;
        if args.max_codes.is_some() {
            state.limits.max_codes = args.max_codes;
        }
        if args.max_valid.is_some() {
            state.limits.max_valid = args.max_valid;
        }
        if let Some(k) = args.max_k {
            state.limits.max_k = k;
        }
        // A budget stop is stale once the (possibly raised) limit has
        // headroom again; the driver re-raises it if the budget still binds.
        match state.stop {
            Some(StopReason::CodeBudget)
                if state.limits.max_codes.is_none_or(|m| state.cursor < m) =>
            {
                state.stop = None;
            }
            Some(StopReason::ValidBudget)
                if state.limits.max_valid.is_none_or(|m| state.counters.k2 < m) =>
            {
                state.stop = None;
            }
            Some(StopReason::MaxK)
                if k1_total(spec.n as u32, state.limits.max_k)
                    .is_ok_and(|total| state.cursor < total) =>
            {
                state.stop = None;
            }
            _ => {}
        }
        (SearchDriver::resume(&spec, state, keys)?, true)
    } else {
        let id = calc_id(args.calc.ok_or_else(|| usage("--calc is required"))?)?;
        let z = args.z.as_deref().ok_or_else(|| usage("--z is required"))?;
        let spec = make_calculator(id, args.x_value);
        let target = SearchTarget::new(z, args.sigma, prec)?;
        let mut limits = Limits::for_max_k(args.max_k.unwrap_or_else(|| Limits::default_max_k(id)));
        limits.max_codes = args.max_codes;
        limits.max_valid = args.max_valid;
        (SearchDriver::new(&spec, prec, target, limits)?, false)
    };

    parallel::run(
        &mut driver,
        prec,
        args.search.workers.max(1),
        args.search.chunk.max(1),
    );

    if let Some(path) = &args.checkpoint {
        checkpoint::save(path, driver.state(), &driver.export_keys())?;
    }

    let state = driver.into_state();
    let q = args.error_model.build(state.target.sigma);
    let criteria = assess(&state, &q, args.logl_mode.into());
    let config = RunEcho {
        command: String::from("recognize"),
        calculator: state.calc.index(),
        x_value: state.x_value,
        precision: String::from(prec.label()),
        z: Some(state.target.z_text.clone()),
        sigma: Some(state.target.sigma),
        max_k: Some(state.limits.max_k),
        max_codes: state.limits.max_codes,
        max_valid: state.limits.max_valid,
        workers: args.search.workers,
        chunk: args.search.chunk,
        error_model: Some(String::from(args.error_model.label())),
        logl_mode: Some(String::from(args.logl_mode.label())),
        resumed,
    };
    let rep = report::build_recognize(config, &state, criteria);
    let text = match args.format {
        FormatArg::Table => report::recognize_table(&rep),
        FormatArg::Json => report::to_json(&rep),
        FormatArg::Csv => report::recognize_csv(&rep),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(report::verdict_exit(&rep.criteria.verdict))
}

pub fn table1(args: Table1Args) -> Result<i32> {
    let prec: Precision = args.search.precision.into();
    let spec = make_calculator(CalcId::Calc3, None);
    let target = SearchTarget::new(&args.z, args.sigma, prec)?;
    let mut limits = Limits::for_max_k(args.max_k);
    limits.max_codes = args.max_codes;
    limits.max_valid = args.max_valid;
    let mut driver = SearchDriver::new(&spec, prec, target, limits)?;
    parallel::run(
        &mut driver,
        prec,
        args.search.workers.max(1),
        args.search.chunk.max(1),
    );
    let state = driver.into_state();
    let config = RunEcho {
        command: String::from("table1"),
        calculator: CalcId::Calc3.index(),
        x_value: None,
        precision: String::from(prec.label()),
        z: Some(state.target.z_text.clone()),
        sigma: Some(state.target.sigma),
        max_k: Some(state.limits.max_k),
        max_codes: state.limits.max_codes,
        max_valid: state.limits.max_valid,
        workers: args.search.workers,
        chunk: args.search.chunk,
        error_model: None,
        logl_mode: None,
        resumed: false,
    };
    let rep = report::build_compression(config, &state);
    let text = match args.format {
        FormatArg::Table => report::compression_table(&rep),
        FormatArg::Json => report::to_json(&rep),
        FormatArg::Csv => report::compression_csv(&rep),
    };
    emit(args.out.as_deref(), &text)?;
    let budget_stop = matches!(
        state.stop,
        Some(StopReason::CodeBudget | StopReason::ValidBudget)
    );
    if budget_stop && state.cursor < block_start(spec.n as u32, args.max_k)? {
        eprintln!(
            "budget ran out before the length-{} block; table is incomplete",
            args.max_k
        );
        return Ok(2);
    }
    Ok(0)
}

#[derive(Serialize)]
struct EnumRow {
    index: u64,
    code: String,
    k: u32,
    valid: bool,
    value: Option<String>,
}

#[derive(Serialize)]
struct EnumReport {
    meta: Meta,
    calculator: u32,
    x_value: Option<f64>,
    precision: String,
    rows: Vec<EnumRow>,
}

fn value_string(v: &WideComplex, digits: u32) -> String {
    let re = format_decimal(v.re, digits);
    if v.im.to_f64() == 0.0 {
        return re;
    }
    let im = format_decimal(v.im, digits);
    match im.strip_prefix('-') {
        Some(mag) => format!("{re}-{mag}i"),
        None => format!("{re}+{im}i"),
    }
}

/// Largest index count we can enumerate without the u64 index space
/// overflowing: the total through the deepest length that still fits.
fn index_capacity(n: u32) -> u64 {
    let mut k = 64u32;
    loop {
        if let Ok(total) = k1_total(n, k) {
            return total;
        }
        k -= 1;
    }
}

pub fn enumerate(args: EnumerateArgs) -> Result<i32> {
    let id = calc_id(args.calc)?;
    let spec = make_calculator(id, args.x_value);
    let prec: Precision = args.precision.into();
    let digits = prec.decimal_digits();
    let n = spec.n as u32;
    let cap = index_capacity(n);
    if args.start >= cap {
        return Err(usage(format!(
            "--start {} is beyond the enumerable range ({} codes)",
            args.start, cap
        )));
    }
    let mut rows = Vec::new();
    let mut g = args.start;
    while (rows.len() as u64) < args.count && g < cap {
        let code = index_to_code(g, n);
        let valid = validate(&code, &spec);
        if valid || !args.valid_only {
            let value = match evaluate(&code, &spec, prec) {
                EvalOutcome::Value(v) => Some(value_string(&v, digits)),
                EvalOutcome::Undefined => Some(String::from("undefined")),
                EvalOutcome::Invalid => None,
            };
            rows.push(EnumRow {
                index: g,
                code: code.to_string(),
                k: code.k() as u32,
                valid,
                value,
            });
        }
        g += 1;
    }
    let text = match args.format {
        FormatArg::Json => report::to_json(&EnumReport {
            meta: report::meta(),
            calculator: id.index(),
            x_value: spec.x_value,
            precision: String::from(prec.label()),
            rows,
        }),
        FormatArg::Csv => {
            let mut out = String::from("index,code,k,valid,value\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.index,
                    r.code,
                    r.k,
                    r.valid,
                    r.value.as_deref().unwrap_or_default()
                );
            }
            out
        }
        FormatArg::Table => {
            let code_w = rows.iter().map(|r| r.code.len()).max().unwrap_or(4).max(4);
            let mut out = String::new();
            let _ = writeln!(out, "{:>8} {:<code_w$} {:>2} {:<5} VALUE", "INDEX", "CODE", "K", "VALID");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{:>8} {:<code_w$} {:>2} {:<5} {}",
                    r.index,
                    r.code,
                    r.k,
                    if r.valid { "yes" } else { "no" },
                    r.value.as_deref().unwrap_or("-")
                );
            }
            out
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct HistReport {
    meta: Meta,
    calculator: u32,
    x_value: Option<f64>,
    precision: String,
    max_k: u32,
    requested: usize,
    collected: usize,
    max_k_reached: u32,
    k2_consumed: u64,
    n_positive: u64,
    n_nonpositive: u64,
    out_of_range: u64,
    ks_distance: f64,
    bins: Vec<HistBin>,
}

pub fn stats_hist(args: HistArgs) -> Result<i32> {
    let id = calc_id(args.calc)?;
    let spec = make_calculator(id, args.x_value);
    let prec: Precision = args.precision.into();
    let max_k = args.max_k.unwrap_or_else(|| Limits::default_max_k(id));
    let set = match generate_reals(&spec, prec, args.count, max_k) {
        Ok(s) => s,
        Err(StatsError::BudgetExhausted { collected }) => {
            eprintln!(
                "only {collected} unique reals exist up to length {max_k}; asked for {}",
                args.count
            );
            return Ok(2);
        }
        Err(e) => return Err(e.into()),
    };
    let values: Vec<f64> = set.values.iter().map(|s| s.value).collect();
    let hist = histogram_vs_cauchy(&values, args.bins.max(1))?;
    let rep = HistReport {
        meta: report::meta(),
        calculator: id.index(),
        x_value: spec.x_value,
        precision: String::from(prec.label()),
        max_k,
        requested: args.count,
        collected: set.values.len(),
        max_k_reached: set.max_k_reached,
        k2_consumed: set.k2_consumed,
        n_positive: hist.n_positive,
        n_nonpositive: hist.n_nonpositive,
        out_of_range: hist.out_of_range,
        ks_distance: hist.ks_distance,
        bins: hist.bins,
    };
    let text = match args.format {
        FormatArg::Json => report::to_json(&rep),
        FormatArg::Csv => {
            let mut out = String::from("lo,hi,count,empirical_density,cauchy_density\n");
            for b in &rep.bins {
                let _ = writeln!(
                    out,
                    "{:e},{:e},{},{:e},{:e}",
                    b.lo, b.hi, b.count, b.empirical_density, b.cauchy_density
                );
            }
            out
        }
        FormatArg::Table => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:>12} {:>12} {:>7} {:>12} {:>12}",
                "LO", "HI", "COUNT", "EMPIRICAL", "LOG-CAUCHY"
            );
            for b in rep.bins.iter().filter(|b| b.count > 0) {
                let _ = writeln!(
                    out,
                    "{:>12.4e} {:>12.4e} {:>7} {:>12.4e} {:>12.4e}",
                    b.lo, b.hi, b.count, b.empirical_density, b.cauchy_density
                );
            }
            let _ = writeln!(
                out,
                "samples {} (positive {}, nonpositive {}, out of binned range {})",
                rep.collected, rep.n_positive, rep.n_nonpositive, rep.out_of_range
            );
            let _ = writeln!(out, "KS distance to the log-Cauchy law: {:.4}", rep.ks_distance);
            out
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct McOut {
    meta: Meta,
    lambda: f64,
    z: f64,
    sigma: f64,
    seed: u64,
    trials: u64,
    observed_mean: f64,
    predicted: f64,
    std_error: f64,
    deviation_se: f64,
}

pub fn stats_mc(args: McArgs) -> Result<i32> {
    if !(args.sigma > 0.0) || !(args.lambda > 0.0) {
        return Err(usage("--sigma and --lambda must be positive"));
    }
    let config = MCConfig {
        lambda: args.lambda,
        z: args.z,
        sigma: args.sigma,
        trials: args.trials.max(1),
        seed: args.seed,
    };
    let mc = mc_exponential_tries(&config);
    let deviation_se = if mc.std_error > 0.0 {
        (mc.observed_mean - mc.predicted).abs() / mc.std_error
    } else {
        f64::INFINITY
    };
    let rep = McOut {
        meta: report::meta(),
        lambda: args.lambda,
        z: args.z,
        sigma: args.sigma,
        seed: args.seed,
        trials: mc.trials,
        observed_mean: mc.observed_mean,
        predicted: mc.predicted,
        std_error: mc.std_error,
        deviation_se,
    };
    let text = match args.format {
        FormatArg::Json => report::to_json(&rep),
        FormatArg::Csv => format!(
            "lambda,z,sigma,trials,observed_mean,predicted,std_error,deviation_se\n{},{},{:e},{},{},{},{},{}\n",
            rep.lambda,
            rep.z,
            rep.sigma,
            rep.trials,
            rep.observed_mean,
            rep.predicted,
            rep.std_error,
            rep.deviation_se
        ),
        FormatArg::Table => format!(
            "draws until a window hit, averaged over {} trials\n\
             observed  {:.4}\n\
             predicted {:.4}\n\
             std error {:.4}  ({:.2} standard errors apart)\n",
            rep.trials, rep.observed_mean, rep.predicted, rep.std_error, rep.deviation_se
        ),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct CloudReport {
    meta: Meta,
    calculator: u32,
    x_value: Option<f64>,
    precision: String,
    max_k: u32,
    fractional: bool,
    bounds: Option<[f64; 4]>,
    points: Vec<(f64, f64)>,
}

pub fn stats_cloud(args: CloudArgs) -> Result<i32> {
    let id = calc_id(args.calc)?;
    let spec = make_calculator(id, args.x_value);
    let prec: Precision = args.precision.into();
    let max_k = args.max_k.unwrap_or_else(|| Limits::default_max_k(id));
    let bounds = match &args.bounds {
        Some(v) => {
            let b: [f64; 4] = v
                .as_slice()
                .try_into()
                .map_err(|_| usage("--bounds takes re_min,re_max,im_min,im_max"))?;
            if b[0] > b[1] || b[2] > b[3] {
                return Err(usage("--bounds has an empty range"));
            }
            Some(b)
        }
        None => None,
    };
    let points = match dump_complex_plane(&spec, prec, max_k, bounds, args.frac) {
        Ok(p) => p,
        Err(e) => return Err(e.into()),
    };
    let text = match args.format {
        FormatArg::Json => report::to_json(&CloudReport {
            meta: report::meta(),
            calculator: id.index(),
            x_value: spec.x_value,
            precision: String::from(prec.label()),
            max_k,
            fractional: args.frac,
            bounds,
            points,
        }),
        FormatArg::Csv => {
            let mut out = String::from("re,im\n");
            for (re, im) in &points {
                let _ = writeln!(out, "{re},{im}");
            }
            out
        }
        FormatArg::Table => {
            let mut out = format!("{} non-real values up to length {}\n", points.len(), max_k);
            for (re, im) in &points {
                let _ = writeln!(out, "{re:>24} {im:>24}");
            }
            out
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct FitReport {
    meta: Meta,
    calculator: u32,
    x_value: Option<f64>,
    precision: String,
    max_k: u32,
    budget: u64,
    k1: u64,
    k2: u64,
    k3: u64,
    k3_is_estimate: bool,
    /// Least-squares exponent of distinct values against valid codes.
    exponent: Option<f64>,
    distinct_over_valid: f64,
    points: Vec<(u64, u64)>,
}

pub fn stats_fit(args: FitArgs) -> Result<i32> {
    let id = calc_id(args.calc)?;
    let spec = make_calculator(id, args.x_value);
    let prec: Precision = args.search.precision.into();
    let max_k = args.max_k.unwrap_or_else(|| Limits::default_max_k(id));
    // The target is irrelevant here; only the k3-vs-k2 trace is kept.
    let target = SearchTarget::new("123.456789", None, prec)?;
    let mut limits = Limits::for_max_k(max_k);
    limits.max_valid = Some(args.budget.max(1));
    let mut driver = SearchDriver::new(&spec, prec, target, limits)?;
    parallel::run(
        &mut driver,
        prec,
        args.search.workers.max(1),
        args.search.chunk.max(1),
    );
    let state = driver.into_state();
    let mut points: Vec<(u64, u64)> = Vec::new();
    for s in &state.snapshots {
        if s.k2 < 100 {
            continue;
        }
        if points.last().map(|p| p.0) == Some(s.k2) {
            points.pop();
        }
        points.push((s.k2, s.k3));
    }
    let last = (state.counters.k2, state.counters.k3);
    if last.0 >= 100 && points.last() != Some(&last) {
        points.push(last);
    }
    let exponent = constrec_core::search::fit_power_law(&points);
    let rep = FitReport {
        meta: report::meta(),
        calculator: id.index(),
        x_value: spec.x_value,
        precision: String::from(prec.label()),
        max_k,
        budget: args.budget,
        k1: state.counters.k1,
        k2: state.counters.k2,
        k3: state.counters.k3,
        k3_is_estimate: state.estimate_mode,
        exponent,
        distinct_over_valid: state.counters.k3 as f64 / state.counters.k2.max(1) as f64,
        points,
    };
    let text = match args.format {
        FormatArg::Json => report::to_json(&rep),
        FormatArg::Csv => {
            let mut out = String::from("k2,k3\n");
            for (k2, k3) in &rep.points {
                let _ = writeln!(out, "{k2},{k3}");
            }
            out
        }
        FormatArg::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "{:>12} {:>12}", "VALID", "DISTINCT");
            for (k2, k3) in &rep.points {
                let _ = writeln!(out, "{k2:>12} {k3:>12}");
            }
            let _ = writeln!(
                out,
                "codes {}  valid {}  distinct {}{}",
                rep.k1,
                rep.k2,
                rep.k3,
                if rep.k3_is_estimate { " (floor)" } else { "" }
            );
            match rep.exponent {
                Some(p) => {
                    let _ = writeln!(out, "power-law exponent: {p:.5}");
                }
                None => {
                    let _ = writeln!(out, "power-law exponent: not enough points");
                }
            }
            let _ = writeln!(out, "distinct/valid ratio: {:.4}", rep.distinct_over_valid);
            out
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct VerifyReport {
    meta: Meta,
    seed: u64,
    tol: f64,
    reports: Vec<constrec_core::calc::IdentityReport>,
    all_within: bool,
}

pub fn verify(args: VerifyArgs) -> Result<i32> {
    let ids: Vec<CalcId> = match args.calc {
        Some(c) => vec![calc_id(c)?],
        None => vec![CalcId::Calc1, CalcId::Calc2, CalcId::Calc3, CalcId::Calc4],
    };
    let samples = default_samples(args.seed);
    let reports: Vec<_> = ids
        .iter()
        .map(|&id| verify_identities(&make_calculator(id, args.x_value), &samples, args.tol))
        .collect();
    let all_within = reports.iter().all(|r| r.all_within);
    let rep = VerifyReport {
        meta: report::meta(),
        seed: args.seed,
        tol: args.tol,
        reports,
        all_within,
    };
    let text = match args.format {
        FormatArg::Json => report::to_json(&rep),
        FormatArg::Csv => {
            let mut out = String::from("calculator,identity,max_deviation,used,skipped,ok\n");
            for r in &rep.reports {
                for i in &r.results {
                    let _ = writeln!(
                        out,
                        "{},{},{:e},{},{},{}",
                        r.calculator.index(),
                        i.name,
                        i.max_deviation,
                        i.samples_used,
                        i.samples_skipped,
                        i.within_tol
                    );
                }
            }
            out
        }
        FormatArg::Table => {
            let mut out = String::new();
            for r in &rep.reports {
                let _ = writeln!(
                    out,
                    "calculator {}  ({} identities, tolerance {:.1e})",
                    r.calculator.index(),
                    r.results.len(),
                    r.tol
                );
                let name_w = r.results.iter().map(|i| i.name.len()).max().unwrap_or(8);
                for i in &r.results {
                    let _ = writeln!(
                        out,
                        "  {:<name_w$} {:>10.2e}  used {:>2}  skipped {:>2}  {}",
                        i.name,
                        i.max_deviation,
                        i.samples_used,
                        i.samples_skipped,
                        if i.within_tol { "ok" } else { "FAIL" }
                    );
                }
            }
            let _ = writeln!(
                out,
                "all identities within tolerance: {}",
                if rep.all_within { "yes" } else { "no" }
            );
            out
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(if all_within { 0 } else { 1 })
}

#[derive(Serialize)]
struct SeqRow {
    index: u64,
    value: String,
}

#[derive(Serialize)]
struct SeqReport {
    meta: Meta,
    sequence: &'static str,
    rows: Vec<SeqRow>,
}

/// Splits a rational's text form into CSV numerator and denominator columns,
/// encoding infinity as 1/0.
fn rational_csv_parts(s: &str) -> (String, String) {
    if s == "inf" {
        (String::from("1"), String::from("0"))
    } else if let Some((n, d)) = s.split_once('/') {
        (String::from(n), String::from(d))
    } else {
        (String::from(s), String::from("1"))
    }
}

fn emit_sequence(name: &'static str, rows: Vec<SeqRow>, args: &SeqArgs) -> Result<i32> {
    let text = match args.format {
        FormatArg::Json => report::to_json(&SeqReport {
            meta: report::meta(),
            sequence: name,
            rows,
        }),
        FormatArg::Csv => {
            let mut out = String::from("index,numerator,denominator\n");
            for r in &rows {
                let (n, d) = rational_csv_parts(&r.value);
                let _ = writeln!(out, "{},{},{}", r.index, n, d);
            }
            out
        }
        FormatArg::Table => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(out, "{:>6} {}", r.index, r.value);
            }
            out
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}

pub fn rationals_nxt(args: SeqArgs) -> Result<i32> {
    let mut r = ExtendedRational::zero();
    let mut rows = Vec::with_capacity(args.count);
    for i in 0..args.count {
        rows.push(SeqRow {
            index: i as u64,
            value: r.to_string(),
        });
        r = r.nxt();
    }
    emit_sequence("nxt", rows, &args)
}

pub fn rationals_selfinv(args: SeqArgs) -> Result<i32> {
    let rows = selfinv_closure(args.count)
        .iter()
        .enumerate()
        .map(|(i, r)| SeqRow {
            index: i as u64,
            value: r.to_string(),
        })
        .collect();
    emit_sequence("selfinv", rows, &args)
}

pub fn rationals_bijection(args: SeqArgs) -> Result<i32> {
    let rows = (0..args.count)
        .map(|i| SeqRow {
            index: i as u64,
            value: int_bijection(i as u64).to_string(),
        })
        .collect();
    emit_sequence("bijection", rows, &args)
}
