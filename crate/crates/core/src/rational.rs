//! Repetition-free enumeration of integers and rationals by self-inverse
//! function composition.
//!
//! Three self-inverse maps (`1-x`, `1/x`, `-x`) applied breadth-first from 0
//! reach every rational exactly once, and the two-map composition
//! `nxt(r) = 1/(1 + 2 floor(r) - r)` walks all positive rationals in a
//! single chain. The same idea lifted to `exp`/`log` gives the self-inverse
//! map `x -> e^(-1/ln x)` on calculator values.

use crate::fp::{Wide, WideComplex};
use alloc::vec::Vec;
use hashbrown::HashSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A rational extended with a single unsigned infinity, so `1/0` is total.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite(BigRational),
    Infinity,
}

use ExtendedRational::{Finite, Infinity};

impl ExtendedRational {
    pub fn zero() -> ExtendedRational {
        Finite(BigRational::zero())
    }

    pub fn from_integer(n: i64) -> ExtendedRational {
        Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`; a zero denominator gives infinity.
    pub fn new(num: i64, den: i64) -> ExtendedRational {
        if den == 0 {
            Infinity
        } else {
            Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Infinity)
    }

    /// `1/x`, with `1/0 = inf` and `1/inf = 0`.
    pub fn inv(&self) -> ExtendedRational {
        match self {
            Finite(r) if r.is_zero() => Infinity,
            Finite(r) => Finite(r.recip()),
            Infinity => ExtendedRational::zero(),
        }
    }

    /// `-x`; infinity is unsigned and stays put.
    pub fn minus(&self) -> ExtendedRational {
        match self {
            Finite(r) => Finite(-r),
            Infinity => Infinity,
        }
    }

    /// `1 - x`, self-inverse around 1/2.
    pub fn pre(&self) -> ExtendedRational {
        match self {
            Finite(r) => Finite(BigRational::one() - r),
            Infinity => Infinity,
        }
    }

    /// `1 + 2 floor(x) - x`, a reflection inside each unit interval.
    pub fn ladder(&self) -> ExtendedRational {
        match self {
            Finite(r) => {
                let two = BigRational::from_integer(BigInt::from(2));
                Finite(BigRational::one() + two * r.floor() - r)
            }
            Infinity => Infinity,
        }
    }

    /// `1/(1 + 2 floor(r) - r)`: the next positive rational in the chain
    /// that starts `0, 1, 1/2, 2, 1/3, 3/2, ...` and never repeats.
    pub fn nxt(&self) -> ExtendedRational {
        self.ladder().inv()
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Finite(r) => {
                let n = bigint_to_f64(r.numer());
                let d = bigint_to_f64(r.denom());
                n / d
            }
            Infinity => f64::INFINITY,
        }
    }
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    let (sign, digits) = n.to_u64_digits();
    let mut v = 0.0f64;
    for d in digits.iter().rev() {
        v = v * 1.8446744073709552e19 + *d as f64;
    }
    if sign == num_bigint::Sign::Minus {
        -v
    } else {
        v
    }
}

impl core::fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Finite(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Infinity => write!(f, "inf"),
        }
    }
}

/// Maps non-negative `i` one-to-one onto all integers:
/// `0, 1, -1, 2, -2, ...` via `j = (-1)^i (-2i + (-1)^i - 1) / 4`.
pub fn int_bijection(i: u64) -> i128 {
    if i % 2 == 0 {
        -((i / 2) as i128)
    } else {
        (i / 2) as i128 + 1
    }
}

/// The three self-inverse generators, in closure order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SelfInvOp {
    /// `1 - x`
    Pre,
    /// `1/x`
    Inv,
    /// `-x`
    Minus,
}

impl SelfInvOp {
    pub const ALL: [SelfInvOp; 3] = [SelfInvOp::Pre, SelfInvOp::Inv, SelfInvOp::Minus];

    pub fn apply(self, x: &ExtendedRational) -> ExtendedRational {
        match self {
            SelfInvOp::Pre => x.pre(),
            SelfInvOp::Inv => x.inv(),
            SelfInvOp::Minus => x.minus(),
        }
    }
}

/// Applies a composition chain of self-inverse maps, first element first.
pub fn selfinv_compose(start: &ExtendedRational, ops: &[SelfInvOp]) -> ExtendedRational {
    let mut x = start.clone();
    for op in ops {
        x = op.apply(&x);
    }
    x
}

/// First `count` values of the breadth-first closure of `{1-x, 1/x, -x}`
/// over 0. Each level applies the generators in [`SelfInvOp::ALL`] order to
/// the previous level's new values; every rational (and infinity) appears
/// exactly once, beginning `0, 1, inf, -1, 2, 1/2, -2, 3, ...`.
pub fn selfinv_closure(count: usize) -> Vec<ExtendedRational> {
    let mut seen: HashSet<ExtendedRational> = HashSet::new();
    let mut out: Vec<ExtendedRational> = Vec::new();
    let mut frontier: Vec<ExtendedRational> = Vec::new();
    let zero = ExtendedRational::zero();
    seen.insert(zero.clone());
    out.push(zero.clone());
    frontier.push(zero);
    while out.len() < count && !frontier.is_empty() {
        let mut next = Vec::new();
        'level: for op in SelfInvOp::ALL {
            for x in &frontier {
                let y = op.apply(x);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    next.push(y);
                    if out.len() == count {
                        break 'level;
                    }
                }
            }
        }
        frontier = next;
    }
    out.truncate(count);
    out
}

/// The self-inverse map `x -> e^(-1/ln x)` on calculator values.
pub fn selfinv_exp(z: WideComplex) -> WideComplex {
    let l = z.ln();
    WideComplex::new(Wide::ONE, Wide::ZERO).div(l).neg().exp()
}

/// Deviation `|f(f(z)) - z|` of the double application from the identity.
pub fn verify_selfinv_exp(z: WideComplex) -> f64 {
    let back = selfinv_exp(selfinv_exp(z));
    back.sub(z).abs().to_f64()
}
