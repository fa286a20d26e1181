//! Code strings, their enumeration order, validity, and evaluation.
//!
//! A code is a sequence of button digits pressed left to right. Codes are
//! enumerated in blocks of increasing length K; within a block the leftmost
//! digit (the first button pressed) is the least significant and cycles
//! fastest. The global index of a code is therefore
//! `sum_{j=1}^{K-1} n^j + sum_j digits[j] * n^j`.
//!
//! A code is valid when no button underflows the stack and exactly one value
//! remains at the end. Evaluation applies each button in full double-double
//! width, rounds the result to the declared working significand, and reports
//! `Undefined` as soon as any component stops being finite.

use crate::calc::{apply_binary, apply_const, apply_unary, Arity, CalculatorSpec, Semantic};
use crate::fp::{Precision, WideComplex};
use alloc::vec::Vec;
use arrayvec::ArrayVec;
use core::fmt;

/// Evaluation scratch stack depth; codes needing more are refused outright.
pub const STACK_LIMIT: usize = 64;

/// A button sequence in press order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RpnCode {
    pub digits: Vec<u8>,
}

impl RpnCode {
    pub fn new(digits: Vec<u8>) -> RpnCode {
        RpnCode { digits }
    }

    /// Code length K.
    pub fn k(&self) -> usize {
        self.digits.len()
    }

    /// Parses a code string like "809" or "1h2hz"; digits must be below `n`.
    pub fn parse(s: &str, n: u32) -> Result<RpnCode, CodeParseError> {
        if s.is_empty() {
            return Err(CodeParseError::Empty);
        }
        let mut digits = Vec::with_capacity(s.len());
        for c in s.chars() {
            let d = char_digit(c).ok_or(CodeParseError::BadChar(c))?;
            if d as u32 >= n {
                return Err(CodeParseError::OutOfRange(c, n));
            }
            digits.push(d);
        }
        Ok(RpnCode { digits })
    }
}

impl fmt::Display for RpnCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            f.write_fmt(format_args!("{}", digit_char(d)))?;
        }
        Ok(())
    }
}

/// Digit value to code character: 0-9 then a-z.
pub fn digit_char(d: u8) -> char {
    if d < 10 {
        (b'0' + d) as char
    } else {
        (b'a' + d - 10) as char
    }
}

/// Code character to digit value.
pub fn char_digit(c: char) -> Option<u8> {
    match c {
        '0'..='9' => Some(c as u8 - b'0'),
        'a'..='z' => Some(c as u8 - b'a' + 10),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeParseError {
    Empty,
    BadChar(char),
    OutOfRange(char, u32),
}

impl fmt::Display for CodeParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeParseError::Empty => write!(f, "empty code"),
            CodeParseError::BadChar(c) => write!(f, "character {c:?} is not a code digit"),
            CodeParseError::OutOfRange(c, n) => {
                write!(f, "digit {c:?} is outside the {n}-button row")
            }
        }
    }
}

impl core::error::Error for CodeParseError {}

/// Arithmetic overflow while computing enumeration totals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOverflow;

impl fmt::Display for CountOverflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "code count exceeds the 64-bit range")
    }
}

impl core::error::Error for CountOverflow {}

/// Global index of the first length-`k` code: the number of shorter codes.
pub fn block_start(n: u32, k: u32) -> Result<u64, CountOverflow> {
    let mut total: u64 = 0;
    let mut pow: u64 = 1;
    for _ in 1..k {
        pow = pow.checked_mul(n as u64).ok_or(CountOverflow)?;
        total = total.checked_add(pow).ok_or(CountOverflow)?;
    }
    Ok(total)
}

/// Total number of codes of length 1 through `max_k`.
pub fn k1_total(n: u32, max_k: u32) -> Result<u64, CountOverflow> {
    block_start(n, max_k + 1)
}

/// The code at a global enumeration index.
pub fn index_to_code(global_index: u64, n: u32) -> RpnCode {
    let n64 = n as u64;
    let mut k = 1u32;
    let mut rem = global_index;
    let mut block = n64;
    while rem >= block {
        rem -= block;
        k += 1;
        block = block.saturating_mul(n64);
    }
    let mut digits = Vec::with_capacity(k as usize);
    for _ in 0..k {
        digits.push((rem % n64) as u8);
        rem /= n64;
    }
    RpnCode { digits }
}

/// Global enumeration index of a code.
pub fn code_to_index(code: &RpnCode, n: u32) -> Result<u64, CountOverflow> {
    let n64 = n as u64;
    let mut acc: u64 = block_start(n, code.k() as u32)?;
    let mut pow: u64 = 1;
    for &d in &code.digits {
        debug_assert!((d as u32) < n);
        acc = acc
            .checked_add(pow.checked_mul(d as u64).ok_or(CountOverflow)?)
            .ok_or(CountOverflow)?;
        pow = pow.checked_mul(n64).unwrap_or(u64::MAX);
    }
    Ok(acc)
}

/// True when no button underflows the stack and exactly one value remains.
pub fn validate(code: &RpnCode, spec: &CalculatorSpec) -> bool {
    let mut depth: i32 = 0;
    for &d in &code.digits {
        match spec.button(d).arity {
            Arity::Constant => depth += 1,
            Arity::Unary => {
                if depth < 1 {
                    return false;
                }
            }
            Arity::Binary => {
                if depth < 2 {
                    return false;
                }
                depth -= 1;
            }
        }
    }
    depth == 1
}

/// What pressing out a code produced.
#[derive(Clone, Copy, Debug)]
pub enum EvalOutcome {
    /// A finite complex value.
    Value(WideComplex),
    /// The code is not a well-formed program.
    Invalid,
    /// Some step left the arithmetic's domain (division by zero, log of
    /// zero, overflow); the code still counts as syntactically valid.
    Undefined,
}

impl EvalOutcome {
    pub fn value(self) -> Option<WideComplex> {
        match self {
            EvalOutcome::Value(v) => Some(v),
            _ => None,
        }
    }
}

/// Runs a code on its calculator, rounding after every button press.
pub fn evaluate(code: &RpnCode, spec: &CalculatorSpec, prec: Precision) -> EvalOutcome {
    if !validate(code, spec) {
        return EvalOutcome::Invalid;
    }
    assert!(
        code.k() <= STACK_LIMIT,
        "code length {} exceeds the {STACK_LIMIT}-deep evaluation stack",
        code.k()
    );
    let x_value = spec.x_value.unwrap_or(2.0);
    let mut stack: ArrayVec<WideComplex, STACK_LIMIT> = ArrayVec::new();
    for &d in &code.digits {
        let result = match spec.button(d).semantic {
            Semantic::Const(k) => apply_const(k, x_value),
            Semantic::Un(op) => {
                let a = stack.pop().expect("validated code underflowed");
                apply_unary(op, a)
            }
            Semantic::Bin(op) => {
                let top = stack.pop().expect("validated code underflowed");
                let second = stack.pop().expect("validated code underflowed");
                apply_binary(op, second, top)
            }
        }
        .round_to(prec);
        if !result.is_finite() {
            return EvalOutcome::Undefined;
        }
        stack.push(result);
    }
    debug_assert_eq!(stack.len(), 1);
    EvalOutcome::Value(stack[0])
}

/// Number of valid codes of exactly length `k`, by dynamic programming over
/// the stack depth.
pub fn count_valid(spec: &CalculatorSpec, k: u32) -> Result<u64, CountOverflow> {
    let mut n_const: u128 = 0;
    let mut n_un: u128 = 0;
    let mut n_bin: u128 = 0;
    for b in &spec.buttons {
        match b.arity {
            Arity::Constant => n_const += 1,
            Arity::Unary => n_un += 1,
            Arity::Binary => n_bin += 1,
        }
    }
    let k = k as usize;
    // counts[d] = number of length-j prefixes leaving stack depth d.
    let mut counts: Vec<u128> = alloc::vec![0; k + 2];
    counts[0] = 1;
    for _ in 0..k {
        let mut next: Vec<u128> = alloc::vec![0; k + 2];
        for (d, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if d + 1 < next.len() {
                next[d + 1] += c * n_const;
            }
            if d >= 1 {
                next[d] += c * n_un;
            }
            if d >= 2 {
                next[d - 1] += c * n_bin;
            }
        }
        counts = next;
    }
    u64::try_from(counts[1]).map_err(|_| CountOverflow)
}

/// Valid-code counts for every length 1..=max_k.
pub fn count_valid_through(spec: &CalculatorSpec, max_k: u32) -> Result<Vec<u64>, CountOverflow> {
    (1..=max_k).map(|k| count_valid(spec, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calc::{make_calculator, CalcId};

    fn code(s: &str, n: u32) -> RpnCode {
        RpnCode::parse(s, n).unwrap()
    }

    #[test]
    fn digit_chars_round_trip() {
        for d in 0..36u8 {
            assert_eq!(char_digit(digit_char(d)), Some(d));
        }
        assert_eq!(digit_char(0), '0');
        assert_eq!(digit_char(9), '9');
        assert_eq!(digit_char(10), 'a');
        assert_eq!(digit_char(35), 'z');
        assert_eq!(char_digit('!'), None);
    }

    #[test]
    fn block_layout_base_10() {
        assert_eq!(block_start(10, 1).unwrap(), 0);
        assert_eq!(block_start(10, 2).unwrap(), 10);
        assert_eq!(block_start(10, 3).unwrap(), 110);
        assert_eq!(block_start(10, 9).unwrap(), 111_111_110);
        assert_eq!(k1_total(10, 9).unwrap(), 1_111_111_110);
        assert!(k1_total(36, 13).is_err());
    }

    #[test]
    fn index_code_round_trip_spot() {
        // Within a block the first-pressed digit cycles fastest.
        assert_eq!(index_to_code(3, 3).digits, alloc::vec![0, 0]);
        assert_eq!(index_to_code(4, 3).digits, alloc::vec![1, 0]);
        assert_eq!(index_to_code(6, 3).digits, alloc::vec![0, 1]);
        assert_eq!(index_to_code(21, 3).digits, alloc::vec![0, 0, 1]);
        let c = code("00101", 3);
        assert_eq!(code_to_index(&c, 3).unwrap(), 210);
        assert_eq!(index_to_code(210, 3), c);
        let c = code("888854979", 10);
        let i = code_to_index(&c, 10).unwrap();
        assert_eq!(index_to_code(i, 10), c);
    }

    #[test]
    fn validity_by_depth() {
        let spec = make_calculator(CalcId::Calc1, None);
        assert!(validate(&code("0", 3), &spec));
        assert!(!validate(&code("1", 3), &spec));
        assert!(!validate(&code("00", 3), &spec));
        assert!(validate(&code("001", 3), &spec));
        assert!(validate(&code("002", 3), &spec));
        assert!(!validate(&code("012", 3), &spec));
        let c3 = make_calculator(CalcId::Calc3, None);
        assert!(validate(&code("809", 10), &c3));
    }

    #[test]
    fn count_valid_matches_catalan_pattern() {
        // One constant and one binary button: counts over odd lengths follow
        // Catalan(m-1) * 2^(m-1) once a second binary is present; with the
        // single binary of a two-class row the count is Catalan(m-1).
        let spec = make_calculator(CalcId::Calc1, None);
        let want: [(u32, u64); 6] = [(1, 1), (3, 2), (5, 8), (7, 40), (9, 224), (11, 1344)];
        for (k, w) in want {
            assert_eq!(count_valid(&spec, k).unwrap(), w, "length {k}");
        }
        for k in [2, 4, 6, 8] {
            assert_eq!(count_valid(&spec, k).unwrap(), 0);
        }
        let c3 = make_calculator(CalcId::Calc3, None);
        let got = count_valid_through(&c3, 9).unwrap();
        assert_eq!(
            got,
            alloc::vec![6, 6, 114, 330, 4542, 20526, 234906, 1363074, 13992054]
        );
        let c4 = make_calculator(CalcId::Calc4, None);
        assert_eq!(
            count_valid_through(&c4, 5).unwrap(),
            alloc::vec![13, 234, 5057, 121446, 3117218]
        );
    }

    #[test]
    fn evaluate_follows_stack_conventions() {
        use crate::fp::Precision;
        let spec = make_calculator(CalcId::Calc3, None);
        // 1/2, pi, pow(base on top) -> sqrt(pi)
        let v = evaluate(&code("809", 10), &spec, Precision::Extended)
            .value()
            .unwrap();
        assert!((v.re.to_f64() - 1.7724538509055159).abs() < 1e-15);
        assert!(v.im.is_zero());
        // i alone is a value, complex.
        let v = evaluate(&code("2", 10), &spec, Precision::Extended)
            .value()
            .unwrap();
        assert!(v.re.is_zero() && v.im.to_f64() == 1.0);
        // Division by log of one: undefined.
        let c1 = make_calculator(CalcId::Calc1, None);
        assert!(matches!(
            evaluate(&code("00011", 3), &c1, Precision::Extended),
            EvalOutcome::Undefined
        ));
        // Invalid syntax stays invalid.
        assert!(matches!(
            evaluate(&code("12", 3), &c1, Precision::Extended),
            EvalOutcome::Invalid
        ));
    }

    #[test]
    fn calc4_square_roots() {
        use crate::fp::Precision;
        let spec = make_calculator(CalcId::Calc4, None);
        let v = evaluate(&code("1h2hz", 36), &spec, Precision::Extended)
            .value()
            .unwrap();
        assert!((v.re.to_f64() - 1.8226346549662422).abs() < 2e-16);
    }

    #[test]
    fn round_trip_large_range() {
        // Spot-check the inverse pair across block boundaries.
        for n in [3u32, 4, 10, 36] {
            for i in (0..5000u64).chain(999_990..1_000_050) {
                let c = index_to_code(i, n);
                assert_eq!(code_to_index(&c, n).unwrap(), i);
            }
        }
    }
}
