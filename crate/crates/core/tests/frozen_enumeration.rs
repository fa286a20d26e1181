//! Hand-checked enumeration rows for the three-button calculator: the first
//! 39 indices with their validity, plus a set of length-5 programs whose
//! values are known in closed form.

use constrec_core::calc::{make_calculator, CalcId};
use constrec_core::fp::Precision;
use constrec_core::rpn::{code_to_index, evaluate, index_to_code, validate, EvalOutcome, RpnCode};

fn ulp(x: f64) -> f64 {
    let a = x.abs();
    if a == 0.0 {
        return f64::MIN_POSITIVE;
    }
    let next = f64::from_bits(a.to_bits() + 1);
    next - a
}

#[test]
fn first_39_indices_validity_and_values() {
    let spec = make_calculator(CalcId::Calc1, None);
    let e = core::f64::consts::E;
    // (index, code string, Some(value) when valid).
    let rows: [(u64, &str, Option<f64>); 39] = [
        (0, "0", Some(e)),
        (1, "1", None),
        (2, "2", None),
        (3, "00", None),
        (4, "10", None),
        (5, "20", None),
        (6, "01", None),
        (7, "11", None),
        (8, "21", None),
        (9, "02", None),
        (10, "12", None),
        (11, "22", None),
        (12, "000", None),
        (13, "100", None),
        (14, "200", None),
        (15, "010", None),
        (16, "110", None),
        (17, "210", None),
        (18, "020", None),
        (19, "120", None),
        (20, "220", None),
        (21, "001", Some(1.0)),
        (22, "101", None),
        (23, "201", None),
        (24, "011", None),
        (25, "111", None),
        (26, "211", None),
        (27, "021", None),
        (28, "121", None),
        (29, "221", None),
        (30, "002", Some(15.154262241479264)),
        (31, "102", None),
        (32, "202", None),
        (33, "012", None),
        (34, "112", None),
        (35, "212", None),
        (36, "022", None),
        (37, "122", None),
        (38, "222", None),
    ];
    for (index, text, expect) in rows {
        let code = index_to_code(index, 3);
        assert_eq!(code.to_string(), text, "index {index}");
        assert_eq!(code_to_index(&code, 3).unwrap(), index);
        let valid = validate(&code, &spec);
        assert_eq!(valid, expect.is_some(), "index {index} code {text}");
        if let Some(want) = expect {
            let got = evaluate(&code, &spec, Precision::Extended)
                .value()
                .expect("valid code must evaluate");
            assert!(got.im.is_zero(), "index {index} should be real");
            let diff = (got.re.to_f64() - want).abs();
            assert!(
                diff <= 4.0 * ulp(want),
                "index {index}: got {} want {want}",
                got.re.to_f64()
            );
        }
    }
}

#[test]
fn length_five_known_rows() {
    let spec = make_calculator(CalcId::Calc1, None);
    let e = core::f64::consts::E;
    // Undefined rows carry NAN as their marker; reference values are the
    // closest doubles to the true constants, not recomputed float chains.
    let rows: [(u64, &str, f64); 8] = [
        (210, "00101", 0.0),
        (219, "00201", e),
        (228, "00011", f64::NAN),
        (255, "00021", 0.36787944117144233),
        (291, "00102", e),
        (300, "00202", 3814279.1047602206),
        (309, "00012", 1.0),
        (336, "00022", 1618.1779919126535),
    ];
    for (index, text, want) in rows {
        let code = index_to_code(index, 3);
        assert_eq!(code.to_string(), text, "index {index}");
        assert!(validate(&code, &spec), "index {index}");
        let outcome = evaluate(&code, &spec, Precision::Extended);
        if want.is_nan() {
            assert!(
                matches!(outcome, EvalOutcome::Undefined),
                "index {index} should be undefined"
            );
        } else {
            let got = outcome.value().expect("should evaluate").re.to_f64();
            assert!(
                (got - want).abs() <= 4.0 * ulp(want),
                "index {index}: got {got} want {want}"
            );
        }
    }
}

#[test]
fn parse_rejects_out_of_row_digits() {
    assert!(RpnCode::parse("803", 3).is_err());
    assert!(RpnCode::parse("z", 36).is_ok());
    assert!(RpnCode::parse("z", 35).is_err());
}
