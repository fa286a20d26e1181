//! Calculator languages: button inventories, their semantics, and algebraic
//! identities showing which operations each button set can express.
//!
//! Four fixed calculators are provided, indexed 1 through 4:
//!
//! * calculator 1: three buttons `e`, two-argument `log`, two-argument `pow`;
//! * calculator 2: four buttons `x` (a configurable constant), `exp`, `ln`,
//!   and subtraction;
//! * calculator 3: ten buttons with `pi`, `e`, `i`, unary `log`, `+`, `*`,
//!   the constants `-1`, `2`, `1/2`, and two-argument `pow`;
//! * calculator 4: thirty-six buttons covering digits, named constants, the
//!   usual scientific-calculator function set, and five binary operations.
//!
//! The two-argument `pow` and `log` of calculators 1 and 3 take their *base*
//! from the top of the stack; calculator 4's binaries use the common
//! convention (second operand left of the operator, top operand right).

use crate::fp::{Wide, WideComplex};
use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// How many stack operands a button consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Arity {
    Constant,
    Unary,
    Binary,
}

/// Nullary buttons: values pushed onto the stack.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ConstKind {
    /// Small integer constant (-1, 0, 1, ..., 9).
    Int(i8),
    Half,
    E,
    Pi,
    I,
    Phi,
    /// The configurable constant of calculator 2.
    X,
}

/// One-argument buttons.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum UnOp {
    Ln,
    Exp,
    Inv,
    Neg,
    Sqrt,
    Sqr,
    Sin,
    Asin,
    Cos,
    Acos,
    Tan,
    Atan,
    Sinh,
    Asinh,
    Cosh,
    Acosh,
    Tanh,
    Atanh,
}

/// Two-argument buttons. `second` is the operand under the top of the stack,
/// `top` the most recently pushed one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BinOp {
    /// second + top
    Add,
    /// second - top
    Sub,
    /// second * top
    Mul,
    /// second / top
    Div,
    /// top ^ second (the base is popped first)
    PowBaseOnTop,
    /// second ^ top
    PowExpOnTop,
    /// log base top of second
    LogBaseOnTop,
}

/// What a button does when pressed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Semantic {
    Const(ConstKind),
    Un(UnOp),
    Bin(BinOp),
}

impl Semantic {
    pub fn arity(self) -> Arity {
        match self {
            Semantic::Const(_) => Arity::Constant,
            Semantic::Un(_) => Arity::Unary,
            Semantic::Bin(_) => Arity::Binary,
        }
    }
}

/// One key of a calculator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Button {
    /// Position in the key row, also the digit value in code strings.
    pub digit: u8,
    pub arity: Arity,
    pub semantic: Semantic,
    pub label: &'static str,
}

/// Which of the four fixed calculators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CalcId {
    Calc1,
    Calc2,
    Calc3,
    Calc4,
}

impl CalcId {
    pub fn from_index(ix: u32) -> Option<CalcId> {
        match ix {
            1 => Some(CalcId::Calc1),
            2 => Some(CalcId::Calc2),
            3 => Some(CalcId::Calc3),
            4 => Some(CalcId::Calc4),
            _ => None,
        }
    }

    pub fn index(self) -> u32 {
        match self {
            CalcId::Calc1 => 1,
            CalcId::Calc2 => 2,
            CalcId::Calc3 => 3,
            CalcId::Calc4 => 4,
        }
    }

    /// Number of buttons on this calculator's board.
    pub fn button_count(self) -> usize {
        match self {
            CalcId::Calc1 => 3,
            CalcId::Calc2 => 4,
            CalcId::Calc3 => 10,
            CalcId::Calc4 => 36,
        }
    }
}

impl fmt::Display for CalcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "calculator {}", self.index())
    }
}

/// A complete calculator: its key row and the value of the `x` key if any.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CalculatorSpec {
    pub id: CalcId,
    /// Number of buttons; also the radix of code strings.
    pub n: usize,
    pub buttons: Vec<Button>,
    /// Value pushed by the `x` button; `None` outside calculator 2.
    pub x_value: Option<f64>,
}

impl CalculatorSpec {
    #[inline]
    pub fn button(&self, digit: u8) -> &Button {
        &self.buttons[digit as usize]
    }

    /// Stable fingerprint of the button set and `x` value, used to check
    /// that a saved search state belongs to the same language.
    pub fn digest(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |v: u64| {
            h ^= v;
            h = h.wrapping_mul(0x100000001b3);
        };
        eat(self.id.index() as u64);
        eat(self.n as u64);
        for b in &self.buttons {
            eat(b.digit as u64);
            eat(semantic_tag(b.semantic));
        }
        eat(self.x_value.unwrap_or(f64::NAN).to_bits());
        h
    }
}

fn semantic_tag(s: Semantic) -> u64 {
    match s {
        Semantic::Const(ConstKind::Int(k)) => 0x100 + (k as i64 as u64 & 0xff),
        Semantic::Const(ConstKind::Half) => 0x201,
        Semantic::Const(ConstKind::E) => 0x202,
        Semantic::Const(ConstKind::Pi) => 0x203,
        Semantic::Const(ConstKind::I) => 0x204,
        Semantic::Const(ConstKind::Phi) => 0x205,
        Semantic::Const(ConstKind::X) => 0x206,
        Semantic::Un(op) => 0x300 + op as u64,
        Semantic::Bin(op) => 0x400 + op as u64,
    }
}

fn button(digit: u8, semantic: Semantic, label: &'static str) -> Button {
    Button {
        digit,
        arity: semantic.arity(),
        semantic,
        label,
    }
}

/// Builds one of the four calculators. `x_value` sets the `x` key of
/// calculator 2 (default 2.0) and is ignored elsewhere.
pub fn make_calculator(id: CalcId, x_value: Option<f64>) -> CalculatorSpec {
    use BinOp::*;
    use ConstKind::*;
    use Semantic::*;
    use UnOp::*;
    let buttons: Vec<Button> = match id {
        CalcId::Calc1 => alloc::vec![
            button(0, Const(E), "e"),
            button(1, Bin(LogBaseOnTop), "log"),
            button(2, Bin(PowBaseOnTop), "pow"),
        ],
        CalcId::Calc2 => alloc::vec![
            button(0, Const(X), "x"),
            button(1, Un(Exp), "exp"),
            button(2, Un(Ln), "ln"),
            button(3, Bin(Sub), "-"),
        ],
        CalcId::Calc3 => alloc::vec![
            button(0, Const(Pi), "pi"),
            button(1, Const(E), "e"),
            button(2, Const(I), "i"),
            button(3, Un(Ln), "log"),
            button(4, Bin(Add), "+"),
            button(5, Bin(Mul), "*"),
            button(6, Const(Int(-1)), "-1"),
            button(7, Const(Int(2)), "2"),
            button(8, Const(Half), "1/2"),
            button(9, Bin(PowBaseOnTop), "pow"),
        ],
        CalcId::Calc4 => alloc::vec![
            button(0, Const(Int(1)), "1"),
            button(1, Const(Int(2)), "2"),
            button(2, Const(Int(3)), "3"),
            button(3, Const(Int(4)), "4"),
            button(4, Const(Int(5)), "5"),
            button(5, Const(Int(6)), "6"),
            button(6, Const(Int(7)), "7"),
            button(7, Const(Int(8)), "8"),
            button(8, Const(Int(9)), "9"),
            button(9, Const(E), "e"),
            button(10, Const(Pi), "pi"),
            button(11, Const(I), "i"),
            button(12, Const(Phi), "phi"),
            button(13, Un(Ln), "ln"),
            button(14, Un(Exp), "exp"),
            button(15, Un(Inv), "inv"),
            button(16, Un(Neg), "minus"),
            button(17, Un(Sqrt), "sqrt"),
            button(18, Un(Sqr), "sqr"),
            button(19, Un(Sin), "sin"),
            button(20, Un(Asin), "arcsin"),
            button(21, Un(Cos), "cos"),
            button(22, Un(Acos), "arccos"),
            button(23, Un(Tan), "tan"),
            button(24, Un(Atan), "arctan"),
            button(25, Un(Sinh), "sinh"),
            button(26, Un(Asinh), "arsinh"),
            button(27, Un(Cosh), "cosh"),
            button(28, Un(Acosh), "arcosh"),
            button(29, Un(Tanh), "tanh"),
            button(30, Un(Atanh), "artanh"),
            button(31, Bin(Add), "+"),
            button(32, Bin(Sub), "-"),
            button(33, Bin(Mul), "*"),
            button(34, Bin(Div), "/"),
            button(35, Bin(PowExpOnTop), "y^x"),
        ],
    };
    let x_value = match id {
        CalcId::Calc2 => Some(x_value.unwrap_or(2.0)),
        _ => None,
    };
    CalculatorSpec {
        id,
        n: buttons.len(),
        buttons,
        x_value,
    }
}

/// Value pushed by a nullary button.
pub fn apply_const(k: ConstKind, x_value: f64) -> WideComplex {
    match k {
        ConstKind::Int(v) => WideComplex::from_real(Wide::from_f64(v as f64)),
        ConstKind::Half => WideComplex::from_real(Wide::from_f64(0.5)),
        ConstKind::E => WideComplex::from_real(Wide::e()),
        ConstKind::Pi => WideComplex::from_real(Wide::pi()),
        ConstKind::I => WideComplex::i(),
        ConstKind::Phi => WideComplex::from_real(Wide::phi()),
        ConstKind::X => WideComplex::from_real(Wide::from_f64(x_value)),
    }
}

/// Result of a one-argument button, in full working width (unrounded).
pub fn apply_unary(op: UnOp, a: WideComplex) -> WideComplex {
    match op {
        UnOp::Ln => a.ln(),
        UnOp::Exp => a.exp(),
        UnOp::Inv => a.recip(),
        UnOp::Neg => a.neg(),
        UnOp::Sqrt => a.sqrt(),
        UnOp::Sqr => a.sqr(),
        UnOp::Sin => a.sin(),
        UnOp::Asin => a.asin(),
        UnOp::Cos => a.cos(),
        UnOp::Acos => a.acos(),
        UnOp::Tan => a.tan(),
        UnOp::Atan => a.atan(),
        UnOp::Sinh => a.sinh(),
        UnOp::Asinh => a.asinh(),
        UnOp::Cosh => a.cosh(),
        UnOp::Acosh => a.acosh(),
        UnOp::Tanh => a.tanh(),
        UnOp::Atanh => a.atanh(),
    }
}

/// Result of a two-argument button, in full working width (unrounded).
pub fn apply_binary(op: BinOp, second: WideComplex, top: WideComplex) -> WideComplex {
    match op {
        BinOp::Add => second.add(top),
        BinOp::Sub => second.sub(top),
        BinOp::Mul => second.mul(top),
        BinOp::Div => second.div(top),
        BinOp::PowBaseOnTop => top.pow(second),
        BinOp::PowExpOnTop => second.pow(top),
        BinOp::LogBaseOnTop => second.ln().div(top.ln()),
    }
}

/// Expression over the button semantics plus two free variables, used to
/// state identities that a button set can realize.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    X,
    Y,
    C(ConstKind),
    U(UnOp, Box<Expr>),
    /// `B(op, second, top)`: the second operand first, the top operand last,
    /// exactly as the stack would hold them.
    B(BinOp, Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Evaluates in full double-double width (no per-step rounding).
    pub fn eval(&self, x: WideComplex, y: WideComplex, x_value: f64) -> WideComplex {
        match self {
            Expr::X => x,
            Expr::Y => y,
            Expr::C(k) => apply_const(*k, x_value),
            Expr::U(op, a) => apply_unary(*op, a.eval(x, y, x_value)),
            Expr::B(op, a, b) => {
                apply_binary(*op, a.eval(x, y, x_value), b.eval(x, y, x_value))
            }
        }
    }

    /// True when every node is either a free variable or one of the allowed
    /// semantics; identities assert this so nothing outside the calculator's
    /// own buttons sneaks into a left-hand side.
    pub fn uses_only(&self, allowed: &[Semantic]) -> bool {
        match self {
            Expr::X | Expr::Y => true,
            Expr::C(k) => allowed.contains(&Semantic::Const(*k)),
            Expr::U(op, a) => allowed.contains(&Semantic::Un(*op)) && a.uses_only(allowed),
            Expr::B(op, a, b) => {
                allowed.contains(&Semantic::Bin(*op))
                    && a.uses_only(allowed)
                    && b.uses_only(allowed)
            }
        }
    }
}

fn u(op: UnOp, a: Expr) -> Expr {
    Expr::U(op, Box::new(a))
}

fn b(op: BinOp, second: Expr, top: Expr) -> Expr {
    Expr::B(op, Box::new(second), Box::new(top))
}

/// An identity `lhs = rhs` where the left side uses only a calculator's own
/// buttons. `admissible` filters samples where a logarithm of a power would
/// land outside the principal branch, so the algebraic identity itself fails
/// rather than the arithmetic.
pub struct IdentityCase {
    pub name: &'static str,
    pub lhs: Expr,
    pub rhs: Expr,
    pub uses_y: bool,
    /// Constant identities take no samples at all.
    pub constant: bool,
    pub admissible: fn(WideComplex, WideComplex) -> bool,
}

fn always(_x: WideComplex, _y: WideComplex) -> bool {
    true
}

/// Principal-branch margin: `w` must satisfy |Im w| <= pi - 1e-6 for
/// log(exp(w)) to unwind back to w.
fn unwinds(w: WideComplex) -> bool {
    w.im.abs().to_f64() <= 3.14159165358979
}

fn lnz(z: WideComplex) -> WideComplex {
    z.ln()
}

fn calc1_identities() -> Vec<IdentityCase> {
    use BinOp::*;
    let x = Expr::X;
    let y = Expr::Y;
    let e = Expr::C(ConstKind::E);
    // x^y with the base on top: B(PowBaseOnTop, exponent, base).
    let pow = |expo: Expr, base: Expr| b(PowBaseOnTop, expo, base);
    let log = |arg: Expr, base: Expr| b(LogBaseOnTop, arg, base);

    let x_x = pow(x.clone(), x.clone()); // x^x
    let x_y = pow(y.clone(), x.clone()); // x^y

    // Fixed sub-expressions over e alone.
    let ee = pow(e.clone(), e.clone()); // e^e
    let u_inv_e = log(e.clone(), ee.clone()); // log_{e^e} e = 1/e
    let v_minus1 = log(e.clone(), u_inv_e.clone()); // log_{1/e} e = -1
    let e_sq = log(pow(e.clone(), ee.clone()), e.clone()); // log_e((e^e)^e) = e^2
    let half = log(e.clone(), e_sq.clone()); // log_{e^2} e = 1/2
    let i_expr = pow(half.clone(), v_minus1.clone()); // (-1)^(1/2) = i
    let e_i = pow(i_expr.clone(), e.clone()); // e^i

    alloc::vec![
        IdentityCase {
            name: "product",
            lhs: log(pow(x.clone(), x_y.clone()), x.clone()),
            rhs: b(Mul, x.clone(), y.clone()),
            uses_y: true,
            constant: false,
            admissible: |x, y| {
                let l = lnz(x);
                unwinds(y.mul(l)) && unwinds(x.mul(y).mul(l))
            },
        },
        IdentityCase {
            name: "quotient",
            lhs: log(x_x.clone(), x_y.clone()),
            rhs: b(Div, x.clone(), y.clone()),
            uses_y: true,
            constant: false,
            admissible: |x, y| {
                let l = lnz(x);
                unwinds(x.mul(l)) && unwinds(y.mul(l))
            },
        },
        IdentityCase {
            name: "sum",
            lhs: log(
                log(
                    pow(x_x.clone(), pow(x_y.clone(), x_x.clone())),
                    x_x.clone(),
                ),
                x.clone(),
            ),
            rhs: b(Add, x.clone(), y.clone()),
            uses_y: true,
            constant: false,
            admissible: |x, y| {
                let l = lnz(x);
                let xy = x.pow(y);
                let xx = x.pow(x);
                unwinds(x.mul(l))
                    && unwinds(xy.mul(x).mul(l))
                    && unwinds(xx.mul(xy).mul(x).mul(l))
                    && unwinds(x.add(y).mul(l))
            },
        },
        IdentityCase {
            name: "reciprocal",
            lhs: log(x.clone(), x_x.clone()),
            rhs: b(Div, Expr::C(ConstKind::Int(1)), x.clone()),
            uses_y: false,
            constant: false,
            admissible: |x, _| unwinds(x.mul(lnz(x))),
        },
        IdentityCase {
            name: "negation",
            lhs: log(log(x.clone(), pow(x_x.clone(), x.clone())), x.clone()),
            rhs: u(UnOp::Neg, x.clone()),
            uses_y: false,
            constant: false,
            admissible: |x, _| {
                let l = lnz(x);
                unwinds(x.pow(x).mul(l)) && unwinds(x.neg().mul(l))
            },
        },
        IdentityCase {
            name: "square root",
            lhs: pow(
                log(x.clone(), log(pow(x.clone(), x_x.clone()), x.clone())),
                x.clone(),
            ),
            rhs: u(UnOp::Sqrt, x.clone()),
            uses_y: false,
            constant: false,
            admissible: |x, _| {
                let l = lnz(x);
                unwinds(x.mul(l)) && unwinds(x.mul(x).mul(l)) && unwinds(l.add(l))
            },
        },
        IdentityCase {
            name: "imaginary unit",
            lhs: i_expr.clone(),
            rhs: Expr::C(ConstKind::I),
            uses_y: false,
            constant: true,
            admissible: always,
        },
        IdentityCase {
            name: "pi",
            lhs: log(v_minus1.clone(), e_i.clone()),
            rhs: Expr::C(ConstKind::Pi),
            uses_y: false,
            constant: true,
            admissible: always,
        },
    ]
}

fn calc2_identities() -> Vec<IdentityCase> {
    use BinOp::Sub;
    use UnOp::{Exp, Ln};
    let x = Expr::X;
    let y = Expr::Y;
    let zero = b(Sub, x.clone(), x.clone());
    let one = u(Exp, zero.clone());
    let e = u(Exp, one.clone());
    let neg = |a: Expr| b(Sub, zero.clone(), a);
    let add = |a: Expr, c: Expr| b(Sub, a, b(Sub, zero.clone(), c));
    // exp splits over sums exactly, so exp(ln a + ln b) = a*b on every
    // branch; no admissibility filtering is needed for these.
    let product = |a: Expr, c: Expr| u(Exp, add(u(Ln, a), u(Ln, c)));
    let quotient = |a: Expr, c: Expr| u(Exp, b(Sub, u(Ln, a), u(Ln, c)));
    let two = add(one.clone(), one.clone());
    let half = u(Exp, neg(u(Ln, two.clone())));
    let minus_one = neg(one.clone());
    let i_expr = u(Exp, product(half.clone(), u(Ln, minus_one.clone())));
    let ix = product(i_expr.clone(), x.clone());
    let two_i = add(i_expr.clone(), i_expr.clone());

    alloc::vec![
        IdentityCase {
            name: "zero",
            lhs: zero.clone(),
            rhs: Expr::C(ConstKind::Int(0)),
            uses_y: false,
            constant: true,
            admissible: always,
        },
        IdentityCase {
            name: "one",
            lhs: one.clone(),
            rhs: Expr::C(ConstKind::Int(1)),
            uses_y: false,
            constant: true,
            admissible: always,
        },
        IdentityCase {
            name: "e",
            lhs: e.clone(),
            rhs: Expr::C(ConstKind::E),
            uses_y: false,
            constant: true,
            admissible: always,
        },
        IdentityCase {
            name: "sum",
            lhs: add(x.clone(), y.clone()),
            rhs: b(BinOp::Add, x.clone(), y.clone()),
            uses_y: true,
            constant: false,
            admissible: always,
        },
        IdentityCase {
            name: "negation",
            lhs: neg(x.clone()),
            rhs: u(UnOp::Neg, x.clone()),
            uses_y: false,
            constant: false,
            admissible: always,
        },
        IdentityCase {
            name: "reciprocal",
            lhs: u(Exp, neg(u(Ln, x.clone()))),
            rhs: u(UnOp::Inv, x.clone()),
            uses_y: false,
            constant: false,
            admissible: always,
        },
        IdentityCase {
            name: "successor",
            lhs: add(x.clone(), one.clone()),
            rhs: b(BinOp::Add, x.clone(), Expr::C(ConstKind::Int(1))),
            uses_y: false,
            constant: false,
            admissible: always,
        },
        IdentityCase {
            name: "product",
            lhs: product(x.clone(), y.clone()),
            rhs: b(BinOp::Mul, x.clone(), y.clone()),
            uses_y: true,
            constant: false,
            admissible: always,
        },
        IdentityCase {
            name: "quotient",
            lhs: quotient(x.clone(), y.clone()),
            rhs: b(BinOp::Div, x.clone(), y.clone()),
            uses_y: true,
            constant: false,
            admissible: always,
        },
        IdentityCase {
            name: "power",
            lhs: u(Exp, product(y.clone(), u(Ln, x.clone()))),
            rhs: b(BinOp::PowExpOnTop, x.clone(), y.clone()),
            uses_y: true,
            constant: false,
            admissible: always,
        },
        IdentityCase {
            name: "logarithm",
            lhs: quotient(u(Ln, y.clone()), u(Ln, x.clone())),
            rhs: b(BinOp::LogBaseOnTop, y.clone(), x.clone()),
            uses_y: true,
            constant: false,
            admissible: always,
        },
        IdentityCase {
            name: "square root",
            lhs: u(Exp, product(half.clone(), u(Ln, x.clone()))),
            rhs: u(UnOp::Sqrt, x.clone()),
            uses_y: false,
            constant: false,
            admissible: always,
        },
        IdentityCase {
            name: "imaginary unit",
            lhs: i_expr.clone(),
            rhs: Expr::C(ConstKind::I),
            uses_y: false,
            constant: true,
            admissible: always,
        },
        IdentityCase {
            name: "pi",
            lhs: u(
                Exp,
                add(
                    u(Ln, neg(i_expr.clone())),
                    u(Ln, u(Ln, minus_one.clone())),
                ),
            ),
            rhs: Expr::C(ConstKind::Pi),
            uses_y: false,
            constant: true,
            admissible: always,
        },
        IdentityCase {
            name: "sine",
            lhs: quotient(
                b(Sub, u(Exp, ix.clone()), u(Exp, neg(ix.clone()))),
                two_i.clone(),
            ),
            rhs: u(UnOp::Sin, x.clone()),
            uses_y: false,
            constant: false,
            admissible: always,
        },
    ]
}

fn calc3_identities() -> Vec<IdentityCase> {
    use BinOp::{Add, Mul, PowBaseOnTop};
    let e = Expr::C(ConstKind::E);
    let pi = Expr::C(ConstKind::Pi);
    let i = Expr::C(ConstKind::I);
    let half = Expr::C(ConstKind::Half);
    // e^(i pi) + 1/2 + 1/2 = 0, using only this calculator's buttons.
    let e_ipi = b(PowBaseOnTop, b(Mul, i, pi), e);
    alloc::vec![IdentityCase {
        name: "euler",
        lhs: b(Add, b(Add, e_ipi, half.clone()), half.clone()),
        rhs: Expr::C(ConstKind::Int(0)),
        uses_y: false,
        constant: true,
        admissible: always,
    }]
}

fn calc4_identities() -> Vec<IdentityCase> {
    use BinOp::{Add, Mul};
    let e_ipi = u(
        UnOp::Exp,
        b(Mul, Expr::C(ConstKind::Pi), Expr::C(ConstKind::I)),
    );
    alloc::vec![IdentityCase {
        name: "euler",
        lhs: b(Add, e_ipi, Expr::C(ConstKind::Int(1))),
        rhs: Expr::C(ConstKind::Int(0)),
        uses_y: false,
        constant: true,
        admissible: always,
    }]
}

/// The identity set registered for a calculator.
pub fn identities(id: CalcId) -> Vec<IdentityCase> {
    match id {
        CalcId::Calc1 => calc1_identities(),
        CalcId::Calc2 => calc2_identities(),
        CalcId::Calc3 => calc3_identities(),
        CalcId::Calc4 => calc4_identities(),
    }
}

/// Semantics an identity's left side may use, per calculator. Free variables
/// are always allowed.
fn allowed_semantics(id: CalcId) -> Vec<Semantic> {
    let spec = make_calculator(id, None);
    spec.buttons.iter().map(|b| b.semantic).collect()
}

/// Outcome for one identity over the sample set.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IdentityResult {
    pub name: String,
    pub max_deviation: f64,
    pub samples_used: usize,
    pub samples_skipped: usize,
    pub within_tol: bool,
}

/// Per-identity deviations for one calculator.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IdentityReport {
    pub calculator: CalcId,
    pub tol: f64,
    pub results: Vec<IdentityResult>,
    pub all_within: bool,
}

/// Checks every registered identity of `spec` against the samples, skipping
/// samples an identity's branch-cut filter rejects. Panics if an identity's
/// left side uses anything beyond the calculator's own buttons.
pub fn verify_identities(
    spec: &CalculatorSpec,
    samples: &[(WideComplex, WideComplex)],
    tol: f64,
) -> IdentityReport {
    let allowed = allowed_semantics(spec.id);
    let x_value = spec.x_value.unwrap_or(2.0);
    let mut results = Vec::new();
    for case in identities(spec.id) {
        assert!(
            case.lhs.uses_only(&allowed),
            "identity {} uses a semantic outside {}",
            case.name,
            spec.id
        );
        let mut max_dev = 0.0f64;
        let mut used = 0usize;
        let mut skipped = 0usize;
        if case.constant {
            let zero = WideComplex::ZERO;
            let l = case.lhs.eval(zero, zero, x_value);
            let r = case.rhs.eval(zero, zero, x_value);
            max_dev = l.sub(r).abs().to_f64();
            used = 1;
        } else {
            for &(x, y) in samples {
                if !(case.admissible)(x, y) {
                    skipped += 1;
                    continue;
                }
                let l = case.lhs.eval(x, y, x_value);
                let r = case.rhs.eval(x, y, x_value);
                let d = l.sub(r).abs().to_f64();
                if !d.is_finite() {
                    skipped += 1;
                    continue;
                }
                if d > max_dev {
                    max_dev = d;
                }
                used += 1;
            }
        }
        results.push(IdentityResult {
            name: String::from(case.name),
            max_deviation: max_dev,
            samples_used: used,
            samples_skipped: skipped,
            within_tol: max_dev <= tol && used > 0,
        });
    }
    let all_within = results.iter().all(|r| r.within_tol);
    IdentityReport {
        calculator: spec.id,
        tol,
        results,
        all_within,
    }
}

/// Deterministic sample pairs: 14 complex points in the annulus
/// 0.5 <= |z| <= 2 steering clear of the negative real axis, then 6 reals in
/// [0.5, 0.9] or [1.1, 2]; every coordinate keeps |z - 1| >= 0.1 so
/// logarithms of samples stay well away from zero.
pub fn default_samples(seed: u64) -> Vec<(WideComplex, WideComplex)> {
    use rand_core::{RngCore, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut unit = |lo: f64, hi: f64| {
        let u = (rng.next_u64() >> 11) as f64 * 1.1102230246251565e-16;
        lo + (hi - lo) * u
    };
    let mut draw_complex = || loop {
        let r = unit(0.5, 2.0);
        let th = unit(-3.0, 3.0);
        let re = r * libm::cos(th);
        let im = r * libm::sin(th);
        if (re - 1.0) * (re - 1.0) + im * im < 0.01 {
            continue;
        }
        if im.abs() < 0.05 && re < 0.0 {
            continue;
        }
        return WideComplex::from_f64s(re, im);
    };
    let mut pairs = Vec::with_capacity(20);
    for _ in 0..14 {
        let x = draw_complex();
        let y = draw_complex();
        pairs.push((x, y));
    }
    let mut draw_real = || {
        let v = loop {
            let v = unit(0.5, 2.0);
            if !(0.9..1.1).contains(&v) {
                break v;
            }
        };
        WideComplex::from_f64s(v, 0.0)
    };
    for _ in 0..6 {
        let x = draw_real();
        let y = draw_real();
        pairs.push((x, y));
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Precision;

    #[test]
    fn button_inventories() {
        let c1 = make_calculator(CalcId::Calc1, None);
        assert_eq!(c1.n, 3);
        assert_eq!(c1.button(0).label, "e");
        assert_eq!(c1.button(2).semantic, Semantic::Bin(BinOp::PowBaseOnTop));
        let c2 = make_calculator(CalcId::Calc2, None);
        assert_eq!(c2.n, 4);
        assert_eq!(c2.x_value, Some(2.0));
        let c2b = make_calculator(CalcId::Calc2, Some(3.5));
        assert_eq!(c2b.x_value, Some(3.5));
        let c3 = make_calculator(CalcId::Calc3, None);
        assert_eq!(c3.n, 10);
        assert_eq!(c3.x_value, None);
        assert_eq!(c3.button(8).semantic, Semantic::Const(ConstKind::Half));
        assert_eq!(c3.button(6).semantic, Semantic::Const(ConstKind::Int(-1)));
        let c4 = make_calculator(CalcId::Calc4, None);
        assert_eq!(c4.n, 36);
        let consts = c4
            .buttons
            .iter()
            .filter(|b| b.arity == Arity::Constant)
            .count();
        let uns = c4.buttons.iter().filter(|b| b.arity == Arity::Unary).count();
        let bins = c4
            .buttons
            .iter()
            .filter(|b| b.arity == Arity::Binary)
            .count();
        assert_eq!((consts, uns, bins), (13, 18, 5));
        assert_eq!(c4.button(17).label, "sqrt");
        assert_eq!(c4.button(35).semantic, Semantic::Bin(BinOp::PowExpOnTop));
    }

    #[test]
    fn digests_distinguish() {
        let a = make_calculator(CalcId::Calc2, None).digest();
        let b = make_calculator(CalcId::Calc2, Some(3.0)).digest();
        let c = make_calculator(CalcId::Calc3, None).digest();
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, make_calculator(CalcId::Calc2, Some(2.0)).digest());
    }

    #[test]
    fn binary_conventions() {
        // pow with base on top: stack [1/2, pi], press pow -> pi^(1/2).
        let half = WideComplex::from_f64s(0.5, 0.0);
        let pi = WideComplex::from_real(Wide::pi());
        let r = apply_binary(BinOp::PowBaseOnTop, half, pi);
        assert!((r.re.to_f64() - 1.7724538509055159).abs() < 1e-15);
        // log with base on top: stack [e, e^e], press log -> 1/e.
        let e = WideComplex::from_real(Wide::e());
        let ee = e.pow(e);
        let r = apply_binary(BinOp::LogBaseOnTop, e, ee);
        assert!((r.re.to_f64() - 1.0 / core::f64::consts::E).abs() < 1e-16);
        // second^top: stack [sqrt2, sqrt3], press pow.
        let s2 = WideComplex::from_real(Wide::from_f64(2.0).sqrt());
        let s3 = WideComplex::from_real(Wide::from_f64(3.0).sqrt());
        let r = apply_binary(BinOp::PowExpOnTop, s2, s3);
        assert!((r.re.to_f64() - 1.8226346549662422).abs() < 1e-15);
        // sub and div orientation.
        let a = WideComplex::from_f64s(5.0, 0.0);
        let c = WideComplex::from_f64s(2.0, 0.0);
        assert_eq!(apply_binary(BinOp::Sub, a, c).re.to_f64(), 3.0);
        assert_eq!(apply_binary(BinOp::Div, a, c).re.to_f64(), 2.5);
    }

    #[test]
    fn identities_hold_on_default_samples() {
        let samples = default_samples(42);
        assert_eq!(samples.len(), 20);
        for id in [CalcId::Calc1, CalcId::Calc2, CalcId::Calc3, CalcId::Calc4] {
            let spec = make_calculator(id, None);
            let report = verify_identities(&spec, &samples, 1e-12);
            for r in &report.results {
                assert!(
                    r.within_tol,
                    "{id} identity {} deviates {} over {} samples ({} skipped)",
                    r.name, r.max_deviation, r.samples_used, r.samples_skipped
                );
            }
            assert!(report.all_within);
        }
    }

    #[test]
    fn euler_sum_is_tiny() {
        // e^(i pi) + 1 stays within a few ulps of zero at working precision.
        let e_ipi = WideComplex::from_real(Wide::e())
            .pow(WideComplex::new(Wide::ZERO, Wide::pi()));
        let s = e_ipi.add(WideComplex::ONE);
        let tol = 4.0 * Precision::Extended.ulp_at_one();
        assert!(s.abs().to_f64() <= tol, "residual {}", s.abs().to_f64());
    }

    #[test]
    fn constant_identities_are_sharper_than_samples_need() {
        for id in [CalcId::Calc1, CalcId::Calc2] {
            let spec = make_calculator(id, None);
            let report = verify_identities(&spec, &[], 1e-12);
            for r in report.results.iter().filter(|r| r.samples_skipped == 0 && r.samples_used == 1) {
                assert!(
                    r.max_deviation < 1e-25,
                    "{id} {} deviation {}",
                    r.name,
                    r.max_deviation
                );
            }
        }
    }
}
