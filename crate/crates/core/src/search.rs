//! Ordered search for codes approximating a target value.
//!
//! The enumeration space is split into contiguous index ranges (chunks) that
//! never span a code-length block. Evaluating a chunk is a pure function
//! producing one entry per syntactically valid code, so chunks can be
//! computed on any number of workers; all bookkeeping (counters, uniqueness,
//! improvements, ties, snapshots) happens in a single consumer that replays
//! chunks strictly in enumeration order. The final state is therefore
//! bit-identical no matter how many workers ran or how the chunks were cut.
//!
//! Counters follow the convention: `k1` counts enumerated codes (the cursor),
//! `k2` syntactically valid ones, `k3` distinct finite values seen. A code
//! whose value lands closer to the target than any earlier one is recorded
//! as an improvement; later same-length codes hitting the bit-identical
//! value of some earlier improvement are recorded as its ties.

use crate::calc::{CalcId, CalculatorSpec};
use crate::fp::{format_decimal, parse_decimal, sigma_from_decimal_str, Precision, Wide, WideComplex};
use crate::rpn::{
    block_start, count_valid, evaluate, index_to_code, validate, CountOverflow, EvalOutcome,
};
use alloc::string::String;
use alloc::vec::Vec;
use hashbrown::{HashMap, HashSet};

/// Marker for a syntactically valid code whose value left the arithmetic's
/// domain.
pub const UNDEFINED_KEY: [u64; 4] = [u64::MAX; 4];

/// One valid code inside a chunk: its offset from the chunk start and the
/// canonical bits of its value ([`UNDEFINED_KEY`] when undefined).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    pub rel: u32,
    pub key: [u64; 4],
}

/// Enumeration counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Counters {
    /// Codes enumerated (equals the cursor position).
    pub k1: u64,
    /// Syntactically valid codes.
    pub k2: u64,
    /// Distinct finite values.
    pub k3: u64,
}

/// What the search is trying to match.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchTarget {
    /// The target as the user wrote it.
    pub z_text: String,
    /// Parsed value, canonical double-double bits.
    pub z_bits: (u64, u64),
    /// Measurement uncertainty of the target.
    pub sigma: f64,
    /// Relative imaginary-part budget below which a value counts as real.
    pub imag_tolerance: f64,
}

impl SearchTarget {
    /// Parses the target text; `sigma` defaults to half an ulp of the last
    /// written decimal digit.
    pub fn new(
        z_text: &str,
        sigma: Option<f64>,
        prec: Precision,
    ) -> Result<SearchTarget, crate::fp::ParseError> {
        let z = parse_decimal(z_text)?;
        let sigma = match sigma {
            Some(s) => s,
            None => sigma_from_decimal_str(z_text)?,
        };
        Ok(SearchTarget {
            z_text: String::from(z_text),
            z_bits: z.to_bits_pair(),
            sigma,
            imag_tolerance: 4.0 * prec.ulp_at_one(),
        })
    }

    pub fn z(&self) -> Wide {
        Wide::from_bits_pair(self.z_bits)
    }
}

/// Where to stop.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Limits {
    /// Longest code length to enumerate.
    pub max_k: u32,
    /// Stop after this many enumerated codes.
    pub max_codes: Option<u64>,
    /// Stop after this many valid codes.
    pub max_valid: Option<u64>,
    /// Distinct values to remember before switching to estimation.
    pub unique_cap: u64,
}

impl Limits {
    pub fn for_max_k(max_k: u32) -> Limits {
        Limits {
            max_k,
            max_codes: None,
            max_valid: None,
            unique_cap: 1 << 28,
        }
    }

    /// Default length limit per calculator, deep enough for a desk-scale run.
    pub fn default_max_k(id: CalcId) -> u32 {
        match id {
            CalcId::Calc1 => 19,
            CalcId::Calc2 => 15,
            CalcId::Calc3 => 9,
            CalcId::Calc4 => 5,
        }
    }
}

/// Why a search ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum StopReason {
    /// All lengths up to the limit enumerated.
    MaxK,
    /// Enumerated-code budget reached.
    CodeBudget,
    /// Valid-code budget reached.
    ValidBudget,
    /// Best approximation reached the working precision's floor.
    Resolution,
}

/// One improvement: the first code to come closer to the target than any
/// before it.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Approximant {
    /// 1-based improvement ordinal.
    pub n: u32,
    pub code: String,
    pub k: u32,
    /// Canonical value bits.
    pub value_bits: [u64; 4],
    /// Real part, printed to the working precision.
    pub value_text: String,
    /// |value - z| at discovery.
    pub eps: f64,
    /// Counters immediately after processing this code.
    pub counters: Counters,
}

impl Approximant {
    pub fn value(&self) -> WideComplex {
        WideComplex::new(
            Wide::from_bits_pair((self.value_bits[0], self.value_bits[1])),
            Wide::from_bits_pair((self.value_bits[2], self.value_bits[3])),
        )
    }
}

/// Maximum tie codes remembered per improvement.
pub const TIE_CAP: usize = 16;

/// Same-length codes that reproduce an improvement's exact value bits.
#[derive(Clone, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TieSet {
    pub codes: Vec<String>,
    /// Ties beyond [`TIE_CAP`], counted but not stored.
    pub overflow: u64,
}

/// A (k2, k3) reading, taken at block ends and at decade crossings of k2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Snapshot {
    pub k2: u64,
    pub k3: u64,
    /// True for a block-end reading, false for a decade crossing.
    pub block_end: bool,
}

/// Complete, serializable search progress. The set of seen value keys is
/// carried separately (it can be large); everything else lives here.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchState {
    pub calc: CalcId,
    pub x_value: Option<f64>,
    pub spec_digest: u64,
    pub precision: Precision,
    pub target: SearchTarget,
    pub limits: Limits,
    /// Next enumeration index to process.
    pub cursor: u64,
    pub counters: Counters,
    pub best_eps: f64,
    pub approximants: Vec<Approximant>,
    /// Parallel to `approximants`.
    pub ties: Vec<TieSet>,
    pub snapshots: Vec<Snapshot>,
    pub unique_len: u64,
    /// Set when the unique-value cap was hit; k3 stops being exact.
    pub estimate_mode: bool,
    pub stop: Option<StopReason>,
}

/// Seen-value set with an insertion cap.
pub struct UniqueTracker {
    set: HashSet<[u64; 4]>,
    cap: u64,
}

impl UniqueTracker {
    pub fn new(cap: u64) -> UniqueTracker {
        UniqueTracker {
            set: HashSet::new(),
            cap,
        }
    }

    /// Inserts a key; returns whether it was new. At the cap, nothing is
    /// inserted and `None` signals that exact counting has ended.
    pub fn track(&mut self, key: [u64; 4]) -> Option<bool> {
        if self.set.len() as u64 >= self.cap {
            return None;
        }
        Some(self.set.insert(key))
    }

    pub fn len(&self) -> u64 {
        self.set.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// All keys in sorted order, for stable serialization.
    pub fn keys_sorted(&self) -> Vec<[u64; 4]> {
        let mut keys: Vec<[u64; 4]> = self.set.iter().copied().collect();
        keys.sort_unstable();
        keys
    }

    pub fn from_keys(cap: u64, keys: impl IntoIterator<Item = [u64; 4]>) -> UniqueIngest {
        let mut set = HashSet::new();
        for k in keys {
            set.insert(k);
        }
        UniqueIngest(UniqueTracker { set, cap })
    }
}

/// Newtype so a rebuilt tracker is explicit at the call site.
pub struct UniqueIngest(pub UniqueTracker);

/// Tracks a value against the set, returning the updated distinct count.
pub fn unique_track(tracker: &mut UniqueTracker, value: WideComplex) -> u64 {
    let _ = tracker.track(value.key());
    tracker.len()
}

/// One length block of the enumeration.
#[derive(Clone, Copy, Debug)]
pub struct BlockPlan {
    pub k: u32,
    pub start: u64,
    /// Raw codes in the block (n^k).
    pub total: u64,
    pub valid: u64,
}

/// Blocks for lengths 1..=max_k. Errors when the index space outgrows u64.
pub fn plan_blocks(spec: &CalculatorSpec, max_k: u32) -> Result<Vec<BlockPlan>, CountOverflow> {
    let n = spec.n as u64;
    let mut blocks = Vec::with_capacity(max_k as usize);
    let mut pow: u64 = 1;
    for k in 1..=max_k {
        pow = pow.checked_mul(n).ok_or(CountOverflow)?;
        let start = block_start(spec.n as u32, k)?;
        start.checked_add(pow).ok_or(CountOverflow)?;
        blocks.push(BlockPlan {
            k,
            start,
            total: pow,
            valid: count_valid(spec, k)?,
        });
    }
    Ok(blocks)
}

/// Evaluates the codes at indices `start..start+len`, which must lie within
/// one length block. Pure: safe to run on any worker.
pub fn evaluate_range(
    spec: &CalculatorSpec,
    prec: Precision,
    start: u64,
    len: u64,
) -> Vec<Entry> {
    let n = spec.n as u32;
    let mut code = index_to_code(start, n);
    let k = code.k();
    let mut entries = Vec::new();
    for rel in 0..len {
        if validate(&code, spec) {
            let key = match evaluate(&code, spec, prec) {
                EvalOutcome::Value(v) => v.key(),
                EvalOutcome::Undefined => UNDEFINED_KEY,
                EvalOutcome::Invalid => unreachable!("validated code"),
            };
            entries.push(Entry {
                rel: rel as u32,
                key,
            });
        }
        // Odometer step: first-pressed digit is least significant.
        let mut i = 0;
        while i < k {
            code.digits[i] += 1;
            if (code.digits[i] as u32) < n {
                break;
            }
            code.digits[i] = 0;
            i += 1;
        }
        debug_assert!(i < k || rel + 1 == len, "range crossed its block");
    }
    entries
}

/// Serial bookkeeping side of a search.
pub struct SearchDriver {
    spec: CalculatorSpec,
    state: SearchState,
    unique: UniqueTracker,
    /// Improvement value bits -> improvement index, for tie attribution.
    tie_index: HashMap<[u64; 4], usize>,
    blocks: Vec<BlockPlan>,
    block_at: usize,
    next_decade: u64,
    resolution_floor: f64,
}

impl SearchDriver {
    pub fn new(
        spec: &CalculatorSpec,
        prec: Precision,
        target: SearchTarget,
        limits: Limits,
    ) -> Result<SearchDriver, CountOverflow> {
        let blocks = plan_blocks(spec, limits.max_k)?;
        let z_abs = target.z().abs().to_f64();
        let state = SearchState {
            calc: spec.id,
            x_value: spec.x_value,
            spec_digest: spec.digest(),
            precision: prec,
            target,
            limits,
            cursor: 0,
            counters: Counters::default(),
            best_eps: f64::INFINITY,
            approximants: Vec::new(),
            ties: Vec::new(),
            snapshots: Vec::new(),
            unique_len: 0,
            estimate_mode: false,
            stop: None,
        };
        let resolution_floor = prec.machine_eps() * z_abs.max(1.0);
        Ok(SearchDriver {
            spec: spec.clone(),
            state,
            unique: UniqueTracker::new(limits.unique_cap),
            tie_index: HashMap::new(),
            blocks,
            block_at: 0,
            next_decade: 100,
            resolution_floor,
        })
    }

    /// Rebuilds a driver from saved state plus the seen-value keys.
    pub fn resume(
        spec: &CalculatorSpec,
        state: SearchState,
        keys: Vec<[u64; 4]>,
    ) -> Result<SearchDriver, ResumeError> {
        if spec.digest() != state.spec_digest {
            return Err(ResumeError::SpecMismatch);
        }
        if keys.len() as u64 != state.unique_len {
            return Err(ResumeError::KeyCountMismatch {
                expected: state.unique_len,
                got: keys.len() as u64,
            });
        }
        let blocks = plan_blocks(spec, state.limits.max_k).map_err(|_| ResumeError::Overflow)?;
        let mut block_at = 0;
        while block_at < blocks.len()
            && state.cursor >= blocks[block_at].start + blocks[block_at].total
        {
            block_at += 1;
        }
        let mut tie_index = HashMap::new();
        for (i, a) in state.approximants.iter().enumerate() {
            tie_index.insert(a.value_bits, i);
        }
        let mut next_decade = 100u64;
        while next_decade <= state.counters.k2 {
            next_decade *= 10;
        }
        let resolution_floor =
            state.precision.machine_eps() * state.target.z().abs().to_f64().max(1.0);
        let UniqueIngest(unique) = UniqueTracker::from_keys(state.limits.unique_cap, keys);
        Ok(SearchDriver {
            spec: spec.clone(),
            state,
            unique,
            tie_index,
            blocks,
            block_at,
            next_decade,
            resolution_floor,
        })
    }

    pub fn spec(&self) -> &CalculatorSpec {
        &self.spec
    }

    pub fn state(&self) -> &SearchState {
        &self.state
    }

    pub fn into_state(self) -> SearchState {
        self.state
    }

    pub fn export_keys(&self) -> Vec<[u64; 4]> {
        self.unique.keys_sorted()
    }

    pub fn finished(&self) -> bool {
        self.state.stop.is_some()
    }

    /// Next chunk of at most `max_len` codes, skipping blocks with no valid
    /// codes; `None` once the search is over. Must be consumed (in order)
    /// before asking for the next one.
    pub fn next_chunk(&mut self, max_len: u64) -> Option<(u64, u64)> {
        if self.state.stop.is_some() {
            return None;
        }
        loop {
            let block = match self.blocks.get(self.block_at) {
                Some(b) => *b,
                None => {
                    self.state.stop = Some(StopReason::MaxK);
                    return None;
                }
            };
            if self.state.cursor < block.start {
                self.state.cursor = block.start;
                self.state.counters.k1 = block.start;
            }
            if block.valid == 0 {
                // Nothing in this block can contribute; account for it
                // wholesale and move on.
                self.state.cursor = block.start + block.total;
                self.state.counters.k1 = self.state.cursor;
                self.block_at += 1;
                continue;
            }
            let block_end = block.start + block.total;
            if self.state.cursor >= block_end {
                self.block_at += 1;
                continue;
            }
            let mut len = (block_end - self.state.cursor).min(max_len.max(1));
            if let Some(max_codes) = self.state.limits.max_codes {
                if self.state.cursor >= max_codes {
                    self.state.stop = Some(StopReason::CodeBudget);
                    return None;
                }
                len = len.min(max_codes - self.state.cursor);
            }
            return Some((self.state.cursor, len));
        }
    }

    /// The descriptors the next calls to [`Self::next_chunk`] will hand out,
    /// computed without advancing anything. A runner can evaluate these on
    /// several workers while [`Self::consume`] replays results in order; a
    /// stop raised mid-wave just discards the leftover speculative chunks.
    pub fn plan_chunks(&self, max_len: u64, count: usize) -> Vec<(u64, u64)> {
        let mut out = Vec::with_capacity(count.min(1024));
        if self.state.stop.is_some() {
            return out;
        }
        let mut cursor = self.state.cursor;
        let mut block_at = self.block_at;
        while out.len() < count {
            let block = match self.blocks.get(block_at) {
                Some(b) => *b,
                None => break,
            };
            if cursor < block.start {
                cursor = block.start;
            }
            if block.valid == 0 || cursor >= block.start + block.total {
                cursor = (block.start + block.total).max(cursor);
                block_at += 1;
                continue;
            }
            let block_end = block.start + block.total;
            let mut len = (block_end - cursor).min(max_len.max(1));
            if let Some(max_codes) = self.state.limits.max_codes {
                if cursor >= max_codes {
                    break;
                }
                len = len.min(max_codes - cursor);
            }
            out.push((cursor, len));
            cursor += len;
        }
        out
    }

    /// Replays one evaluated chunk. Chunks must arrive exactly in the order
    /// [`Self::next_chunk`] produced them.
    pub fn consume(&mut self, start: u64, len: u64, entries: &[Entry]) {
        assert_eq!(start, self.state.cursor, "chunk replayed out of order");
        let z = self.state.target.z();
        for e in entries {
            if self.state.stop.is_some() {
                return;
            }
            let g = start + e.rel as u64;
            self.state.counters.k1 = g + 1;
            self.state.counters.k2 += 1;
            if e.key != UNDEFINED_KEY {
                if !self.state.estimate_mode {
                    match self.unique.track(e.key) {
                        Some(true) => self.state.counters.k3 += 1,
                        Some(false) => {}
                        None => self.state.estimate_mode = true,
                    }
                    self.state.unique_len = self.unique.len();
                }
                self.consider_candidate(g, e.key, z);
            }
            if self.state.counters.k2 == self.next_decade {
                self.state.snapshots.push(Snapshot {
                    k2: self.state.counters.k2,
                    k3: self.state.counters.k3,
                    block_end: false,
                });
                self.next_decade *= 10;
            }
            if let Some(max_valid) = self.state.limits.max_valid {
                if self.state.stop.is_none() && self.state.counters.k2 >= max_valid {
                    self.state.cursor = g + 1;
                    self.state.stop = Some(StopReason::ValidBudget);
                    return;
                }
            }
        }
        if self.state.stop.is_some() {
            return;
        }
        self.state.cursor = start + len;
        self.state.counters.k1 = self.state.cursor;
        let block = self.blocks[self.block_at];
        if self.state.cursor == block.start + block.total {
            self.state.snapshots.push(Snapshot {
                k2: self.state.counters.k2,
                k3: self.state.counters.k3,
                block_end: true,
            });
            self.block_at += 1;
        }
        if let Some(max_codes) = self.state.limits.max_codes {
            if self.state.cursor >= max_codes && self.state.stop.is_none() {
                self.state.stop = Some(StopReason::CodeBudget);
            }
        }
    }

    fn consider_candidate(&mut self, g: u64, key: [u64; 4], z: Wide) {
        let v = WideComplex::new(
            Wide::from_bits_pair((key[0], key[1])),
            Wide::from_bits_pair((key[2], key[3])),
        );
        let re_mag = v.re.abs().to_f64();
        if v.im.abs().to_f64() > self.state.target.imag_tolerance * re_mag.max(1.0) {
            return;
        }
        let eps = v.re.sub(z).abs().to_f64();
        if eps < self.state.best_eps {
            let code = index_to_code(g, self.spec.n as u32);
            let n_ord = self.state.approximants.len() as u32 + 1;
            let digits = self.state.precision.decimal_digits() + 2;
            self.state.approximants.push(Approximant {
                n: n_ord,
                code: alloc::format!("{code}"),
                k: code.k() as u32,
                value_bits: key,
                value_text: format_decimal(v.re, digits),
                eps,
                counters: self.state.counters,
            });
            self.state.ties.push(TieSet::default());
            self.tie_index.insert(key, self.state.approximants.len() - 1);
            self.state.best_eps = eps;
            if eps <= self.resolution_floor {
                self.state.cursor = g + 1;
                self.state.stop = Some(StopReason::Resolution);
            }
        } else if let Some(&ix) = self.tie_index.get(&key) {
            let code = index_to_code(g, self.spec.n as u32);
            if code.k() as u32 == self.state.approximants[ix].k {
                let tie = &mut self.state.ties[ix];
                if tie.codes.len() < TIE_CAP {
                    tie.codes.push(alloc::format!("{code}"));
                } else {
                    tie.overflow += 1;
                }
            }
        }
    }
}

/// Problems reattaching saved progress.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResumeError {
    /// The saved state belongs to a different calculator or `x` value.
    SpecMismatch,
    KeyCountMismatch { expected: u64, got: u64 },
    Overflow,
}

impl core::fmt::Display for ResumeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ResumeError::SpecMismatch => write!(f, "saved state is for a different calculator"),
            ResumeError::KeyCountMismatch { expected, got } => write!(
                f,
                "saved state lists {expected} distinct values but {got} keys were provided"
            ),
            ResumeError::Overflow => write!(f, "enumeration space exceeds the 64-bit range"),
        }
    }
}

impl core::error::Error for ResumeError {}

/// Default chunk length for the single-threaded runner.
pub const DEFAULT_CHUNK: u64 = 65536;

/// Runs a search to completion on the current thread.
pub fn run_search(
    spec: &CalculatorSpec,
    prec: Precision,
    target: SearchTarget,
    limits: Limits,
) -> Result<SearchState, CountOverflow> {
    let mut driver = SearchDriver::new(spec, prec, target, limits)?;
    while let Some((start, len)) = driver.next_chunk(DEFAULT_CHUNK) {
        let entries = evaluate_range(spec, prec, start, len);
        driver.consume(start, len, &entries);
    }
    Ok(driver.into_state())
}

/// Least-squares slope of ln k3 against ln k2 through the origin:
/// `p = sum(ln k2 * ln k3) / sum((ln k2)^2)`.
pub fn fit_power_law(points: &[(u64, u64)]) -> Option<f64> {
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for &(k2, k3) in points {
        if k2 < 2 || k3 < 1 {
            continue;
        }
        let x = libm::log(k2 as f64);
        let y = libm::log(k3 as f64);
        num += x * y;
        den += x * x;
    }
    if den > 0.0 {
        Some(num / den)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calc::make_calculator;

    fn target(z: &str) -> SearchTarget {
        SearchTarget::new(z, None, Precision::Extended).unwrap()
    }

    #[test]
    fn sigma_defaults_from_text() {
        let t = target("1.82263");
        assert_eq!(t.sigma, 5e-6);
        let t = SearchTarget::new("201.06192983", None, Precision::Extended).unwrap();
        assert_eq!(t.sigma, 5e-9);
        let t = SearchTarget::new("1.82263", Some(1e-3), Precision::Extended).unwrap();
        assert_eq!(t.sigma, 1e-3);
    }

    #[test]
    fn three_button_small_run_counts() {
        let spec = make_calculator(CalcId::Calc1, None);
        // A target nothing matches closely, just to drive the counters.
        let state = run_search(
            &spec,
            Precision::Extended,
            target("123.456"),
            Limits::for_max_k(5),
        )
        .unwrap();
        // Lengths 1,3,5 hold 1+2+8 valid codes; one is undefined, and the
        // finite values are e, 1, e^e, 0, 1/e, e^(e^e), e^(e^2).
        assert_eq!(state.counters.k2, 11);
        assert_eq!(state.counters.k3, 7);
        assert_eq!(state.counters.k1, 363); // 3 + 9 + 27 + 81 + 243
        assert_eq!(state.stop, Some(StopReason::MaxK));
        // Improvements walk down toward the hopeless target: e, then e^e,
        // then e^(e^e) overshoots less... e^e = 15.15 is the closest.
        let best = state.approximants.last().unwrap();
        assert_eq!(best.code, "002");
    }

    #[test]
    fn improvements_strictly_decrease() {
        let spec = make_calculator(CalcId::Calc3, None);
        let state = run_search(
            &spec,
            Precision::Extended,
            target("1.82263"),
            Limits::for_max_k(4),
        )
        .unwrap();
        let mut prev = f64::INFINITY;
        for a in &state.approximants {
            assert!(a.eps < prev, "eps must strictly decrease");
            prev = a.eps;
        }
        assert!(state.counters.k2 > 0);
        assert_eq!(
            state.counters.k2 as usize,
            6 + 6 + 114 + 330,
            "valid counts through length 4"
        );
    }

    #[test]
    fn chunk_size_invariance() {
        let spec = make_calculator(CalcId::Calc3, None);
        let mut states = Vec::new();
        for chunk in [7u64, 1000, 65536] {
            let mut driver = SearchDriver::new(
                &spec,
                Precision::Extended,
                target("1.82263"),
                Limits::for_max_k(4),
            )
            .unwrap();
            while let Some((start, len)) = driver.next_chunk(chunk) {
                let entries = evaluate_range(&spec, Precision::Extended, start, len);
                driver.consume(start, len, &entries);
            }
            states.push(driver.into_state());
        }
        assert_eq!(states[0], states[1]);
        assert_eq!(states[1], states[2]);
    }

    #[test]
    fn planned_chunks_agree_with_issued_chunks() {
        // Calc1 leaves every even length empty, exercising the block skips;
        // the code budget cuts the final chunk short.
        let spec = make_calculator(CalcId::Calc1, None);
        let mut limits = Limits::for_max_k(7);
        limits.max_codes = Some(500);
        let mut driver = SearchDriver::new(
            &spec,
            Precision::Extended,
            target("123.456"),
            limits,
        )
        .unwrap();
        let all_planned = driver.plan_chunks(37, usize::MAX);
        let mut issued = Vec::new();
        loop {
            let ahead = driver.plan_chunks(37, 3);
            match driver.next_chunk(37) {
                Some((start, len)) => {
                    assert_eq!(ahead.first(), Some(&(start, len)));
                    issued.push((start, len));
                    let entries = evaluate_range(&spec, Precision::Extended, start, len);
                    driver.consume(start, len, &entries);
                }
                None => {
                    assert!(ahead.is_empty());
                    break;
                }
            }
        }
        assert_eq!(all_planned, issued);
        assert!(driver.plan_chunks(37, 5).is_empty());
    }

    #[test]
    fn resume_matches_uninterrupted() {
        let spec = make_calculator(CalcId::Calc3, None);
        let limits = Limits::for_max_k(3);
        let mut full = SearchDriver::new(
            &spec,
            Precision::Extended,
            target("1.82263"),
            limits,
        )
        .unwrap();
        while let Some((start, len)) = full.next_chunk(97) {
            let entries = evaluate_range(&spec, Precision::Extended, start, len);
            full.consume(start, len, &entries);
        }
        let full_state = full.into_state();

        let mut first = SearchDriver::new(
            &spec,
            Precision::Extended,
            target("1.82263"),
            limits,
        )
        .unwrap();
        for _ in 0..3 {
            if let Some((start, len)) = first.next_chunk(97) {
                let entries = evaluate_range(&spec, Precision::Extended, start, len);
                first.consume(start, len, &entries);
            }
        }
        let keys = first.export_keys();
        let saved = first.into_state();
        let mut resumed = SearchDriver::resume(&spec, saved, keys).unwrap();
        while let Some((start, len)) = resumed.next_chunk(97) {
            let entries = evaluate_range(&spec, Precision::Extended, start, len);
            resumed.consume(start, len, &entries);
        }
        assert_eq!(resumed.state(), &full_state);
    }

    #[test]
    fn resume_rejects_wrong_spec() {
        let spec = make_calculator(CalcId::Calc3, None);
        let driver = SearchDriver::new(
            &spec,
            Precision::Extended,
            target("1.82263"),
            Limits::for_max_k(2),
        )
        .unwrap();
        let keys = driver.export_keys();
        let state = driver.into_state();
        let other = make_calculator(CalcId::Calc4, None);
        assert_eq!(
            SearchDriver::resume(&other, state, keys).err(),
            Some(ResumeError::SpecMismatch)
        );
    }

    #[test]
    fn valid_budget_stops_exactly() {
        let spec = make_calculator(CalcId::Calc3, None);
        let mut limits = Limits::for_max_k(5);
        limits.max_valid = Some(100);
        let state = run_search(&spec, Precision::Extended, target("1.82263"), limits).unwrap();
        assert_eq!(state.counters.k2, 100);
        assert_eq!(state.stop, Some(StopReason::ValidBudget));
    }

    #[test]
    fn exact_match_stops_at_resolution() {
        let spec = make_calculator(CalcId::Calc3, None);
        let state = run_search(
            &spec,
            Precision::Extended,
            target("2"),
            Limits::for_max_k(3),
        )
        .unwrap();
        assert_eq!(state.stop, Some(StopReason::Resolution));
        let best = state.approximants.last().unwrap();
        assert_eq!(best.code, "7");
        assert_eq!(best.eps, 0.0);
    }

    #[test]
    fn full_precision_target_stops_at_resolution() {
        let spec = make_calculator(CalcId::Calc3, None);
        let state = run_search(
            &spec,
            Precision::Extended,
            target("3.14159265358979323846"),
            Limits::for_max_k(3),
        )
        .unwrap();
        let best = state.approximants.last().unwrap();
        assert_eq!(best.code, "0");
        assert_eq!(state.stop, Some(StopReason::Resolution));
    }

    #[test]
    fn ties_collect_same_length_equal_values() {
        // Around 2+e the ten-button board passes through 2pi, pi+e and pi+2,
        // each of which recurs in commuted or product form at length 3.
        let spec = make_calculator(CalcId::Calc3, None);
        let state = run_search(
            &spec,
            Precision::Extended,
            target("4.71828"),
            Limits::for_max_k(3),
        )
        .unwrap();
        let codes: Vec<&str> = state.approximants.iter().map(|a| a.code.as_str()).collect();
        assert_eq!(codes, ["0", "004", "104", "704", "714"]);
        let ties_of = |code: &str| -> &[String] {
            let ix = state
                .approximants
                .iter()
                .position(|a| a.code == code)
                .unwrap();
            &state.ties[ix].codes
        };
        assert_eq!(ties_of("004"), ["705", "075"], "2pi as pi+pi, 2*pi, pi*2");
        assert_eq!(ties_of("104"), ["014"]);
        assert_eq!(ties_of("704"), ["074"]);
        assert_eq!(ties_of("714"), ["174"]);
        assert_eq!(state.stop, Some(StopReason::MaxK));
        let best = state.approximants.last().unwrap();
        assert!((best.eps - 1.8284590452e-6).abs() < 1e-12);
    }

    #[test]
    fn power_law_fit_recovers_exact_slope() {
        let pts: Vec<(u64, u64)> = (2..40u32)
            .map(|i| {
                let k2 = 1u64 << i;
                let k3 = libm::pow(k2 as f64, 0.85) as u64;
                (k2, k3)
            })
            .collect();
        let p = fit_power_law(&pts).unwrap();
        assert!((p - 0.85).abs() < 0.01, "got {p}");
    }

    #[test]
    fn unique_tracking_counts_distinct() {
        let mut t = UniqueTracker::new(10);
        let a = WideComplex::from_f64s(1.5, 0.0);
        let b = WideComplex::from_f64s(2.5, 0.0);
        assert_eq!(unique_track(&mut t, a), 1);
        assert_eq!(unique_track(&mut t, b), 2);
        assert_eq!(unique_track(&mut t, a), 2);
    }
}
