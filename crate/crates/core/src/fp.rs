//! Double-double arithmetic with per-operation rounding to a declared
//! working significand.
//!
//! Values are unevaluated sums `hi + lo` of two `f64`s giving roughly 106
//! significand bits. Calculator operations compute in full double-double
//! width and then round once to the working precision, either 64 bits
//! (mimicking x87 extended arithmetic) or 53 bits. All scalar kernels build
//! on exact `two_sum`/`two_prod` primitives with Dekker splitting, so results
//! are bit-identical across platforms regardless of FMA availability; `libm`
//! supplies starting guesses for the Newton-corrected transcendentals.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

mod tables {
    include!("fp_tables.rs");
}

/// Working significand width used when rounding each operation's result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Precision {
    /// 53-bit significand (IEEE binary64).
    Double,
    /// 64-bit significand (x87 extended double).
    Extended,
}

impl Precision {
    /// Significand width in bits.
    pub fn sig_bits(self) -> u32 {
        match self {
            Precision::Double => 53,
            Precision::Extended => 64,
        }
    }

    /// Spacing between adjacent representable values at magnitude 1.
    pub fn ulp_at_one(self) -> f64 {
        match self {
            Precision::Double => exp2i(-52),
            Precision::Extended => exp2i(-63),
        }
    }

    /// Machine epsilon used to clamp exactly-zero errors in reports.
    pub fn machine_eps(self) -> f64 {
        self.ulp_at_one() / 2.0
    }

    /// Decimal digits the significand can faithfully carry.
    pub fn decimal_digits(self) -> u32 {
        match self {
            Precision::Double => 15,
            Precision::Extended => 19,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Precision::Double => "double53",
            Precision::Extended => "extended64",
        }
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

const SPLIT_FACTOR: f64 = 134217729.0; // 2^27 + 1
const SPLIT_THRESHOLD: f64 = 6.696928794914171e299; // 2^996

#[inline]
fn split(a: f64) -> (f64, f64) {
    if a.abs() > SPLIT_THRESHOLD {
        let a = a * 3.7252902984619140625e-9; // 2^-28
        let t = SPLIT_FACTOR * a;
        let hi = t - (t - a);
        let lo = a - hi;
        (hi * 268435456.0, lo * 268435456.0) // 2^28
    } else {
        let t = SPLIT_FACTOR * a;
        let hi = t - (t - a);
        let lo = a - hi;
        (hi, lo)
    }
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, err)
}

/// Unevaluated sum of two doubles, `hi + lo`, with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug)]
pub struct Wide {
    hi: f64,
    lo: f64,
}

impl Wide {
    pub const ZERO: Wide = Wide { hi: 0.0, lo: 0.0 };
    pub const ONE: Wide = Wide { hi: 1.0, lo: 0.0 };
    pub const NAN: Wide = Wide {
        hi: f64::NAN,
        lo: 0.0,
    };

    #[inline]
    pub fn from_f64(x: f64) -> Wide {
        Wide { hi: x, lo: 0.0 }
    }

    /// Reassembles a value from its canonical bit pair.
    #[inline]
    pub fn from_bits_pair(bits: (u64, u64)) -> Wide {
        Wide {
            hi: f64::from_bits(bits.0),
            lo: f64::from_bits(bits.1),
        }
    }

    #[inline]
    pub fn to_bits_pair(self) -> (u64, u64) {
        (self.hi.to_bits(), self.lo.to_bits())
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn pi() -> Wide {
        Wide::from_bits_pair(tables::PI_DD)
    }

    pub fn e() -> Wide {
        Wide::from_bits_pair(tables::E_DD)
    }

    pub fn ln2() -> Wide {
        Wide::from_bits_pair(tables::LN2_DD)
    }

    pub fn phi() -> Wide {
        Wide::from_bits_pair(tables::PHI_DD)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn is_nan(self) -> bool {
        self.hi.is_nan() || self.lo.is_nan()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }

    #[inline]
    pub fn is_sign_negative(self) -> bool {
        if self.hi != 0.0 {
            self.hi < 0.0
        } else {
            self.hi.is_sign_negative()
        }
    }

    #[inline]
    pub fn neg(self) -> Wide {
        Wide {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn abs(self) -> Wide {
        if self.hi < 0.0 || (self.hi == 0.0 && self.hi.is_sign_negative()) {
            self.neg()
        } else {
            self
        }
    }

    #[inline]
    pub fn add(self, b: Wide) -> Wide {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Wide { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Wide {
        let (s1, s2) = two_sum(self.hi, b);
        let s2 = s2 + self.lo;
        let (hi, lo) = quick_two_sum(s1, s2);
        Wide { hi, lo }
    }

    #[inline]
    pub fn sub(self, b: Wide) -> Wide {
        self.add(b.neg())
    }

    #[inline]
    pub fn sub_f64(self, b: f64) -> Wide {
        self.add_f64(-b)
    }

    #[inline]
    pub fn mul(self, b: Wide) -> Wide {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + self.hi * b.lo + self.lo * b.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Wide { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Wide {
        let (p1, p2) = two_prod(self.hi, b);
        let p2 = p2 + self.lo * b;
        let (hi, lo) = quick_two_sum(p1, p2);
        Wide { hi, lo }
    }

    /// Multiplies by a power of two exactly (barring overflow/underflow).
    #[inline]
    pub fn mul_pow2(self, p: f64) -> Wide {
        Wide {
            hi: self.hi * p,
            lo: self.lo * p,
        }
    }

    pub fn div(self, b: Wide) -> Wide {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() {
            return Wide { hi: q1, lo: 0.0 };
        }
        let r = self.sub(b.mul_f64(q1));
        let q2 = r.hi / b.hi;
        let r = r.sub(b.mul_f64(q2));
        let q3 = r.hi / b.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Wide { hi: s, lo: e }.add_f64(q3)
    }

    pub fn recip(self) -> Wide {
        Wide::ONE.div(self)
    }

    pub fn sqr(self) -> Wide {
        let (p1, p2) = two_prod(self.hi, self.hi);
        let p2 = p2 + 2.0 * self.hi * self.lo;
        let (hi, lo) = quick_two_sum(p1, p2);
        Wide { hi, lo }
    }

    /// Square root; negative input yields NaN (complex callers branch first).
    pub fn sqrt(self) -> Wide {
        if self.is_zero() {
            return Wide::ZERO;
        }
        if self.hi < 0.0 || self.hi.is_nan() {
            return Wide::NAN;
        }
        if self.hi == f64::INFINITY {
            return self;
        }
        let y0 = libm::sqrt(self.hi);
        let (s1, s2) = two_prod(y0, y0);
        let r = self.sub(Wide { hi: s1, lo: s2 });
        let corr = r.hi / (2.0 * y0);
        Wide::from_f64(y0).add_f64(corr)
    }

    pub fn floor(self) -> Wide {
        let f = libm::floor(self.hi);
        if f == self.hi {
            let g = libm::floor(self.lo);
            let (hi, lo) = quick_two_sum(f, g);
            Wide { hi, lo }
        } else {
            Wide { hi: f, lo: 0.0 }
        }
    }

    /// Comparison on the exact represented value.
    pub fn cmp_wide(self, b: Wide) -> Ordering {
        match self.hi.partial_cmp(&b.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&b.lo).unwrap_or(Ordering::Equal),
            Some(o) => o,
            None => Ordering::Equal,
        }
    }

    #[inline]
    pub fn eq_bits(self, b: Wide) -> bool {
        self.to_bits_pair() == b.to_bits_pair()
    }

    /// Rounds the represented value to the working significand, collapsing
    /// negative zero so downstream branch cuts see +0.
    pub fn round_to(self, prec: Precision) -> Wide {
        match prec {
            Precision::Double => {
                let s = self.hi + self.lo;
                if s == 0.0 {
                    Wide::ZERO
                } else {
                    Wide { hi: s, lo: 0.0 }
                }
            }
            Precision::Extended => self.round_extended(),
        }
    }

    fn round_extended(self) -> Wide {
        if self.hi == 0.0 {
            return if self.lo == 0.0 {
                Wide::ZERO
            } else {
                Wide {
                    hi: self.lo,
                    lo: 0.0,
                }
                .round_extended()
            };
        }
        if !self.hi.is_finite() {
            return Wide {
                hi: self.hi,
                lo: 0.0,
            };
        }
        let mut exp = ilogb(self.hi);
        // Values this small have already lost the second limb's meaning.
        if exp < -900 {
            let s = self.hi + self.lo;
            return if s == 0.0 { Wide::ZERO } else { Wide { hi: s, lo: 0.0 } };
        }
        // Scale so |hi| lands in [2^63, 2^64), where the 64-bit grid is the
        // integers: hs is then a multiple of 2048 and the fractional part
        // sits entirely in ls with |ls| <= 1024, so rint's ties-to-even on
        // ls alone matches ties-to-even on the full sum.
        const B63: f64 = 9.223372036854775808e18; // 2^63
        let mut scale = exp2i(63 - exp);
        let mut inv_scale = exp2i(exp - 63);
        let mut hs = self.hi * scale;
        let mut ls = self.lo * scale;
        if hs.abs() == B63 && (ls < 0.0) != (hs < 0.0) && ls != 0.0 {
            // The true value is just under the binade boundary, where the
            // grid is twice as fine; rescale one step down.
            exp -= 1;
            scale = exp2i(63 - exp);
            inv_scale = exp2i(exp - 63);
            hs = self.hi * scale;
            ls = self.lo * scale;
        }
        let rlo = rint(ls);
        let (s, e) = quick_two_sum(hs, rlo);
        Wide {
            hi: s * inv_scale,
            lo: e * inv_scale,
        }
    }

    /// Natural exponential.
    pub fn exp(self) -> Wide {
        if self.hi.is_nan() {
            return Wide::NAN;
        }
        if self.hi > 709.8 {
            return Wide::from_f64(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return Wide::ZERO;
        }
        let k = rint(self.hi * 1.4426950408889634); // 1/ln2
        let l = tables::LN2_T3;
        let l1 = f64::from_bits(l.0);
        let l2 = f64::from_bits(l.1);
        let l3 = f64::from_bits(l.2);
        let (p1, e1) = two_prod(k, l1);
        let (p2, e2) = two_prod(k, l2);
        let mut r = self.sub(Wide { hi: p1, lo: e1 });
        r = r.sub(Wide { hi: p2, lo: e2 });
        r = r.sub_f64(k * l3);
        // exp(r) = exp(r/512)^512 keeps the Taylor argument below 7e-4.
        let rs = r.mul_pow2(1.0 / 512.0);
        let mut sum = Wide::from_bits_pair(tables::INV_FACT[8]); // 1/10!
        for i in (0..8).rev() {
            sum = sum.mul(rs).add(Wide::from_bits_pair(tables::INV_FACT[i]));
        }
        let mut f = sum.mul(rs.sqr()).add(rs).add_f64(1.0);
        for _ in 0..9 {
            f = f.sqr();
        }
        let ki = k as i32;
        scale_exp2(f, ki)
    }

    /// Natural logarithm of a positive value; zero gives -inf, negative NaN.
    pub fn ln(self) -> Wide {
        if self.is_zero() {
            return Wide::from_f64(f64::NEG_INFINITY);
        }
        if self.hi < 0.0 || self.hi.is_nan() {
            return Wide::NAN;
        }
        if self.hi == f64::INFINITY {
            return self;
        }
        // Take out the binary exponent so the Newton step's exp stays close
        // to 1 and never drives a limb subnormal: ln x = ln m + e ln 2.
        let e = ilogb(self.hi);
        let m = scale_exp2(self, -e);
        let y0 = Wide::from_f64(libm::log(m.hi));
        // One Newton step on exp(y) = m: y1 = y0 + m*exp(-y0) - 1.
        let ln_m = y0.add(m.mul(y0.neg().exp()).sub_f64(1.0));
        if e == 0 {
            return ln_m;
        }
        let ef = e as f64;
        let l = tables::LN2_T3;
        let (p1, e1) = two_prod(ef, f64::from_bits(l.0));
        let (p2, e2) = two_prod(ef, f64::from_bits(l.1));
        let eln2 = Wide { hi: p1, lo: e1 }
            .add(Wide { hi: p2, lo: e2 })
            .add_f64(ef * f64::from_bits(l.2));
        ln_m.add(eln2)
    }

    /// Simultaneous sine and cosine.
    pub fn sin_cos(self) -> (Wide, Wide) {
        if !self.hi.is_finite() {
            return (Wide::NAN, Wide::NAN);
        }
        // Beyond ~2^48 the reduction has no meaningful bits left; fall back
        // to the f64 result deterministically.
        if self.hi.abs() > 2.81474976710656e14 {
            return (
                Wide::from_f64(libm::sin(self.hi)),
                Wide::from_f64(libm::cos(self.hi)),
            );
        }
        let two_over_pi = Wide::from_bits_pair(tables::TWO_OVER_PI_DD);
        let n = rint(self.mul(two_over_pi).hi);
        let p = tables::PI_HALF_T3;
        let p1 = f64::from_bits(p.0);
        let p2 = f64::from_bits(p.1);
        let p3 = f64::from_bits(p.2);
        let (a1, b1) = two_prod(n, p1);
        let (a2, b2) = two_prod(n, p2);
        let mut r = self.sub(Wide { hi: a1, lo: b1 });
        r = r.sub(Wide { hi: a2, lo: b2 });
        r = r.sub_f64(n * p3);
        let (s, c) = sin_cos_reduced(r);
        match (n as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, s.neg()),
            2 => (s.neg(), c.neg()),
            _ => (c.neg(), s),
        }
    }

    pub fn sin(self) -> Wide {
        self.sin_cos().0
    }

    pub fn cos(self) -> Wide {
        self.sin_cos().1
    }

    pub fn tan(self) -> Wide {
        let (s, c) = self.sin_cos();
        s.div(c)
    }

    /// Two-argument arctangent of `self = y` over `x`, in (-pi, pi].
    pub fn atan2(self, x: Wide) -> Wide {
        let y = self;
        if y.hi.is_nan() || x.hi.is_nan() {
            return Wide::NAN;
        }
        if y.is_zero() {
            return if x.hi > 0.0 || (x.is_zero()) {
                Wide::ZERO
            } else {
                Wide::pi()
            };
        }
        if x.is_zero() {
            let h = Wide::from_bits_pair(tables::PI_HALF_DD);
            return if y.hi > 0.0 { h } else { h.neg() };
        }
        let t0 = Wide::from_f64(libm::atan2(y.hi, x.hi));
        // Newton on f(t) = sin(t)*x - cos(t)*y, whose root has tan t = y/x
        // in the correct quadrant; f'(t) = cos(t)*x + sin(t)*y ~ hypot > 0.
        let (s, c) = t0.sin_cos();
        let f = s.mul(x).sub(c.mul(y));
        let fp = c.mul(x).add(s.mul(y));
        t0.sub(f.div(fp))
    }

    pub fn atan(self) -> Wide {
        self.atan2(Wide::ONE)
    }

    /// Overflow-safe sqrt(a^2 + b^2).
    pub fn hypot(self, b: Wide) -> Wide {
        let a = self.abs();
        let b = b.abs();
        let (big, small) = if a.hi >= b.hi { (a, b) } else { (b, a) };
        if big.is_zero() {
            return Wide::ZERO;
        }
        if !big.hi.is_finite() {
            return Wide::from_f64(f64::INFINITY);
        }
        let e = ilogb(big.hi);
        let scale = exp2i(-e);
        let inv = exp2i(e);
        let bs = big.mul_pow2(scale);
        let ss = small.mul_pow2(scale);
        bs.sqr().add(ss.sqr()).sqrt().mul_pow2(inv)
    }

    /// Value of 10^k to double-double accuracy; out-of-range gives inf or 0.
    pub fn pow10(k: i32) -> Wide {
        if k == 0 {
            return Wide::ONE;
        }
        if k > 350 {
            return Wide::from_f64(f64::INFINITY);
        }
        if k < -350 {
            return Wide::ZERO;
        }
        let table = if k > 0 {
            &tables::POW10_POS
        } else {
            &tables::POW10_NEG
        };
        let mut n = k.unsigned_abs();
        let mut acc = Wide::ONE;
        let mut j = 0;
        while n != 0 {
            if n & 1 == 1 {
                acc = acc.mul(Wide::from_bits_pair(table[j]));
            }
            n >>= 1;
            j += 1;
        }
        acc
    }
}

impl fmt::Display for Wide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_decimal(*self, 21))
    }
}

/// Round to nearest integer, ties to even, for |x| < 2^51.
#[inline]
fn rint(x: f64) -> f64 {
    if x.abs() >= 2.251799813685248e15 {
        // 2^51: already an integer.
        return x;
    }
    const MAGIC: f64 = 6755399441055744.0; // 1.5 * 2^52
    (x + MAGIC) - MAGIC
}

/// Floor of log2 |x| for finite nonzero x (normal range).
#[inline]
fn ilogb(x: f64) -> i32 {
    let bits = x.to_bits();
    let e = ((bits >> 52) & 0x7ff) as i32;
    if e == 0 {
        // Subnormal: normalize via multiplication.
        return ilogb(x * 9.007199254740992e15) - 53; // 2^53
    }
    e - 1023
}

/// Exact power of two as f64 for |e| <= 1022.
#[inline]
fn exp2i(e: i32) -> f64 {
    f64::from_bits(((e + 1023) as u64) << 52)
}

fn scale_exp2(x: Wide, k: i32) -> Wide {
    if k == 0 {
        return x;
    }
    if k > 1020 || k < -1020 {
        // Apply in two steps to dodge intermediate overflow/underflow.
        let h = k / 2;
        return scale_exp2(scale_exp2(x, h), k - h);
    }
    x.mul_pow2(exp2i(k))
}

/// Sine and cosine on |r| <= pi/4 + eps via Taylor series.
fn sin_cos_reduced(r: Wide) -> (Wide, Wide) {
    let t = r.sqr();
    // sin(r) = r * (1 - t/3! + t^2/5! - ... +- t^13/27!)
    let mut s = Wide::from_bits_pair(tables::INV_FACT[25]); // 1/27!
    for j in (1..=12).rev() {
        let idx = 2 * j - 1; // 1/(2j+1)!
        let coeff = Wide::from_bits_pair(tables::INV_FACT[idx]);
        s = coeff.sub(s.mul(t));
    }
    let sin = r.mul(Wide::ONE.sub(s.mul(t)));
    // cos(r) = 1 - t/2! + t^2/4! - ... +- t^13/26!
    let mut c = Wide::from_bits_pair(tables::INV_FACT[24]); // 1/26!
    for j in (1..=12).rev() {
        let idx = 2 * j - 2; // 1/(2j)!
        let coeff = Wide::from_bits_pair(tables::INV_FACT[idx]);
        c = coeff.sub(c.mul(t));
    }
    let cos = Wide::ONE.sub(c.mul(t));
    (sin, cos)
}

/// Complex value as a pair of [`Wide`] components.
#[derive(Clone, Copy, Debug)]
pub struct WideComplex {
    pub re: Wide,
    pub im: Wide,
}

impl WideComplex {
    pub const ZERO: WideComplex = WideComplex {
        re: Wide::ZERO,
        im: Wide::ZERO,
    };
    pub const ONE: WideComplex = WideComplex {
        re: Wide::ONE,
        im: Wide::ZERO,
    };

    #[inline]
    pub fn new(re: Wide, im: Wide) -> WideComplex {
        WideComplex { re, im }
    }

    #[inline]
    pub fn from_real(re: Wide) -> WideComplex {
        WideComplex {
            re,
            im: Wide::ZERO,
        }
    }

    #[inline]
    pub fn from_f64s(re: f64, im: f64) -> WideComplex {
        WideComplex {
            re: Wide::from_f64(re),
            im: Wide::from_f64(im),
        }
    }

    pub fn i() -> WideComplex {
        WideComplex {
            re: Wide::ZERO,
            im: Wide::ONE,
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    #[inline]
    pub fn is_real(self) -> bool {
        self.im.is_zero()
    }

    /// Canonical 4-word bit pattern; distinct finite values map to distinct
    /// keys once operands have been rounded to the working precision.
    #[inline]
    pub fn key(self) -> [u64; 4] {
        let (a, b) = self.re.to_bits_pair();
        let (c, d) = self.im.to_bits_pair();
        [a, b, c, d]
    }

    #[inline]
    pub fn round_to(self, prec: Precision) -> WideComplex {
        WideComplex {
            re: self.re.round_to(prec),
            im: self.im.round_to(prec),
        }
    }

    #[inline]
    pub fn neg(self) -> WideComplex {
        WideComplex {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    #[inline]
    pub fn add(self, b: WideComplex) -> WideComplex {
        WideComplex {
            re: self.re.add(b.re),
            im: self.im.add(b.im),
        }
    }

    #[inline]
    pub fn sub(self, b: WideComplex) -> WideComplex {
        WideComplex {
            re: self.re.sub(b.re),
            im: self.im.sub(b.im),
        }
    }

    pub fn mul(self, b: WideComplex) -> WideComplex {
        if self.is_real() && b.is_real() {
            return WideComplex::from_real(self.re.mul(b.re));
        }
        WideComplex {
            re: self.re.mul(b.re).sub(self.im.mul(b.im)),
            im: self.re.mul(b.im).add(self.im.mul(b.re)),
        }
    }

    /// Division via Smith's algorithm to avoid premature overflow.
    pub fn div(self, b: WideComplex) -> WideComplex {
        if self.is_real() && b.is_real() {
            return WideComplex::from_real(self.re.div(b.re));
        }
        if b.re.abs().hi >= b.im.abs().hi {
            let r = b.im.div(b.re);
            let den = b.re.add(b.im.mul(r));
            WideComplex {
                re: self.re.add(self.im.mul(r)).div(den),
                im: self.im.sub(self.re.mul(r)).div(den),
            }
        } else {
            let r = b.re.div(b.im);
            let den = b.re.mul(r).add(b.im);
            WideComplex {
                re: self.re.mul(r).add(self.im).div(den),
                im: self.im.mul(r).sub(self.re).div(den),
            }
        }
    }

    pub fn abs(self) -> Wide {
        if self.is_real() {
            return self.re.abs();
        }
        self.re.hypot(self.im)
    }

    pub fn exp(self) -> WideComplex {
        let ea = self.re.exp();
        if self.is_real() {
            return WideComplex::from_real(ea);
        }
        let (s, c) = self.im.sin_cos();
        WideComplex {
            re: ea.mul(c),
            im: ea.mul(s),
        }
    }

    /// Principal logarithm, Im in (-pi, pi].
    pub fn ln(self) -> WideComplex {
        if self.is_real() {
            if self.re.is_zero() {
                return WideComplex::from_real(Wide::from_f64(f64::NEG_INFINITY));
            }
            if self.re.hi > 0.0 {
                return WideComplex::from_real(self.re.ln());
            }
            return WideComplex {
                re: self.re.neg().ln(),
                im: Wide::pi(),
            };
        }
        WideComplex {
            re: self.abs().ln(),
            im: self.im.atan2(self.re),
        }
    }

    /// Principal power x^y = exp(y ln x), with 0^0 = 1 by convention.
    pub fn pow(self, y: WideComplex) -> WideComplex {
        if y.re.is_zero() && y.im.is_zero() {
            return WideComplex::ONE;
        }
        if self.re.is_zero() && self.im.is_zero() {
            if y.is_real() && y.re.hi > 0.0 {
                return WideComplex::ZERO;
            }
            return WideComplex {
                re: Wide::NAN,
                im: Wide::NAN,
            };
        }
        if self.is_real() && y.is_real() && self.re.hi > 0.0 {
            return WideComplex::from_real(y.re.mul(self.re.ln()).exp());
        }
        y.mul(self.ln()).exp()
    }

    /// Principal square root (Re >= 0).
    pub fn sqrt(self) -> WideComplex {
        if self.is_real() {
            if self.re.hi >= 0.0 {
                return WideComplex::from_real(self.re.sqrt());
            }
            return WideComplex {
                re: Wide::ZERO,
                im: self.re.neg().sqrt(),
            };
        }
        let m = self.abs();
        let u = m.add(self.re.abs()).mul_pow2(0.5).sqrt();
        if self.re.hi >= 0.0 {
            let v = self.im.div(u.mul_pow2(2.0));
            WideComplex { re: u, im: v }
        } else {
            let v = self.im.abs().div(u.mul_pow2(2.0));
            let im = if self.im.is_sign_negative() || self.im.hi < 0.0 {
                u.neg()
            } else {
                u
            };
            WideComplex { re: v, im }
        }
    }

    pub fn recip(self) -> WideComplex {
        WideComplex::ONE.div(self)
    }

    pub fn sqr(self) -> WideComplex {
        self.mul(self)
    }

    pub fn sin(self) -> WideComplex {
        if self.is_real() {
            return WideComplex::from_real(self.re.sin());
        }
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = sinh_cosh(self.im);
        WideComplex {
            re: s.mul(ch),
            im: c.mul(sh),
        }
    }

    pub fn cos(self) -> WideComplex {
        if self.is_real() {
            return WideComplex::from_real(self.re.cos());
        }
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = sinh_cosh(self.im);
        WideComplex {
            re: c.mul(ch),
            im: s.neg().mul(sh),
        }
    }

    pub fn tan(self) -> WideComplex {
        self.sin().div(self.cos())
    }

    pub fn sinh(self) -> WideComplex {
        if self.is_real() {
            return WideComplex::from_real(sinh_cosh(self.re).0);
        }
        let (sh, ch) = sinh_cosh(self.re);
        let (s, c) = self.im.sin_cos();
        WideComplex {
            re: sh.mul(c),
            im: ch.mul(s),
        }
    }

    pub fn cosh(self) -> WideComplex {
        if self.is_real() {
            return WideComplex::from_real(sinh_cosh(self.re).1);
        }
        let (sh, ch) = sinh_cosh(self.re);
        let (s, c) = self.im.sin_cos();
        WideComplex {
            re: ch.mul(c),
            im: sh.mul(s),
        }
    }

    pub fn tanh(self) -> WideComplex {
        self.sinh().div(self.cosh())
    }

    /// Principal arcsine (C99 branch cuts).
    pub fn asin(self) -> WideComplex {
        if self.is_real() && self.re.abs().hi <= 1.0 {
            let c = Wide::ONE.sub(self.re.sqr()).sqrt();
            return WideComplex::from_real(self.re.atan2(c));
        }
        // -i ln(iz + sqrt(1 - z^2))
        let iz = WideComplex::i().mul(self);
        let w = WideComplex::ONE.sub(self.sqr()).sqrt();
        let l = iz.add(w).ln();
        WideComplex {
            re: l.im,
            im: l.re.neg(),
        }
    }

    /// Principal arccosine (C99 branch cuts).
    pub fn acos(self) -> WideComplex {
        if self.is_real() && self.re.abs().hi <= 1.0 {
            let s = Wide::ONE.sub(self.re.sqr()).sqrt();
            return WideComplex::from_real(s.atan2(self.re));
        }
        // -i ln(z + i sqrt(1 - z^2))
        let w = WideComplex::ONE.sub(self.sqr()).sqrt();
        let iw = WideComplex {
            re: w.im.neg(),
            im: w.re,
        };
        let l = self.add(iw).ln();
        WideComplex {
            re: l.im,
            im: l.re.neg(),
        }
    }

    /// Principal arctangent (C99 branch cuts).
    pub fn atan(self) -> WideComplex {
        if self.is_real() {
            return WideComplex::from_real(self.re.atan());
        }
        // -(i/2) [ln(1 + iz) - ln(1 - iz)]
        let iz = WideComplex::i().mul(self);
        let a = WideComplex::ONE.add(iz).ln();
        let b = WideComplex::ONE.sub(iz).ln();
        let d = a.sub(b);
        WideComplex {
            re: d.im.mul_pow2(0.5),
            im: d.re.mul_pow2(-0.5),
        }
    }

    pub fn asinh(self) -> WideComplex {
        if self.is_real() {
            let w = self.re.sqr().add_f64(1.0).sqrt().add(self.re.abs()).ln();
            let w = if self.re.hi < 0.0 { w.neg() } else { w };
            return WideComplex::from_real(w);
        }
        self.add(self.sqr().add(WideComplex::ONE).sqrt()).ln()
    }

    pub fn acosh(self) -> WideComplex {
        if self.is_real() && self.re.hi >= 1.0 {
            let w = self.re.sqr().sub_f64(1.0).sqrt().add(self.re).ln();
            return WideComplex::from_real(w);
        }
        // ln(z + sqrt(z+1) sqrt(z-1))
        let a = self.add(WideComplex::ONE).sqrt();
        let b = self.sub(WideComplex::ONE).sqrt();
        self.add(a.mul(b)).ln()
    }

    pub fn atanh(self) -> WideComplex {
        if self.is_real() && self.re.abs().hi < 1.0 {
            let w = Wide::ONE
                .add(self.re)
                .div(Wide::ONE.sub(self.re))
                .ln()
                .mul_pow2(0.5);
            return WideComplex::from_real(w);
        }
        let a = WideComplex::ONE.add(self).ln();
        let b = WideComplex::ONE.sub(self).ln();
        a.sub(b).mul(WideComplex::from_f64s(0.5, 0.0))
    }
}

impl fmt::Display for WideComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{} {} {}i", self.re, if self.im.is_sign_negative() { "-" } else { "+" }, self.im.abs())
        }
    }
}

fn sinh_cosh(x: Wide) -> (Wide, Wide) {
    let e = x.exp();
    let ei = e.recip();
    (
        e.sub(ei).mul_pow2(0.5),
        e.add(ei).mul_pow2(0.5),
    )
}

/// Problems turning a decimal string into a value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    BadChar(char),
    NoDigits,
    ExponentOverflow,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty number"),
            ParseError::BadChar(c) => write!(f, "unexpected character {c:?} in number"),
            ParseError::NoDigits => write!(f, "number has no digits"),
            ParseError::ExponentOverflow => write!(f, "exponent out of range"),
        }
    }
}

impl core::error::Error for ParseError {}

struct DecimalParts {
    negative: bool,
    digits: Vec<u8>,
    exponent: i32,
}

fn parse_parts(s: &str) -> Result<DecimalParts, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut chars = s.chars().peekable();
    let mut negative = false;
    if let Some(&c) = chars.peek() {
        if c == '+' || c == '-' {
            negative = c == '-';
            chars.next();
        }
    }
    let mut digits: Vec<u8> = Vec::new();
    let mut frac_len: i32 = 0;
    let mut seen_digit = false;
    let mut seen_dot = false;
    let mut exp: i64 = 0;
    while let Some(&c) = chars.peek() {
        match c {
            '0'..='9' => {
                digits.push(c as u8 - b'0');
                if seen_dot {
                    frac_len += 1;
                }
                seen_digit = true;
                chars.next();
            }
            '.' if !seen_dot => {
                seen_dot = true;
                chars.next();
            }
            'e' | 'E' => {
                chars.next();
                let mut esign = 1i64;
                if let Some(&c2) = chars.peek() {
                    if c2 == '+' || c2 == '-' {
                        esign = if c2 == '-' { -1 } else { 1 };
                        chars.next();
                    }
                }
                let mut any = false;
                for c2 in chars.by_ref() {
                    match c2 {
                        '0'..='9' => {
                            any = true;
                            exp = exp.saturating_mul(10).saturating_add((c2 as u8 - b'0') as i64);
                        }
                        _ => return Err(ParseError::BadChar(c2)),
                    }
                }
                if !any {
                    return Err(ParseError::NoDigits);
                }
                exp *= esign;
                break;
            }
            _ => return Err(ParseError::BadChar(c)),
        }
    }
    if !seen_digit {
        return Err(ParseError::NoDigits);
    }
    let exponent = exp - frac_len as i64;
    if exponent.abs() > 100_000 {
        return Err(ParseError::ExponentOverflow);
    }
    Ok(DecimalParts {
        negative,
        digits,
        exponent: exponent as i32,
    })
}

/// Parses a decimal string into a double-double value.
pub fn parse_decimal(s: &str) -> Result<Wide, ParseError> {
    let parts = parse_parts(s)?;
    let mut mant: u128 = 0;
    let mut used = 0usize;
    let mut dropped = 0i32;
    for &d in &parts.digits {
        if used < 32 {
            mant = mant * 10 + d as u128;
            if mant != 0 {
                used += 1;
            }
        } else {
            dropped += 1;
        }
    }
    let exp10 = parts.exponent + dropped;
    let mut v = wide_from_u128(mant);
    v = v.mul(Wide::pow10(exp10));
    if parts.negative {
        v = v.neg();
    }
    Ok(v)
}

/// Half-ulp of the last printed digit, the implied uncertainty of a decimal
/// string like "1.82263" (-> 5e-6).
pub fn sigma_from_decimal_str(s: &str) -> Result<f64, ParseError> {
    let parts = parse_parts(s)?;
    Ok(0.5 * Wide::pow10(parts.exponent).to_f64())
}

fn wide_from_u128(m: u128) -> Wide {
    if m == 0 {
        return Wide::ZERO;
    }
    let hi = m as f64;
    let rem1 = m as i128 - hi as i128;
    let mid = rem1 as f64;
    let rem2 = rem1 - mid as i128;
    Wide::from_f64(hi).add_f64(mid).add_f64(rem2 as f64)
}

/// Formats to `sig_digits` significant digits (2..=31), plain notation when
/// the exponent is moderate, otherwise scientific.
pub fn format_decimal(w: Wide, sig_digits: u32) -> String {
    use alloc::format;
    let sig = sig_digits.clamp(2, 31);
    if w.is_nan() {
        return String::from("nan");
    }
    if !w.hi.is_finite() {
        return String::from(if w.hi > 0.0 { "inf" } else { "-inf" });
    }
    if w.is_zero() {
        return String::from("0");
    }
    let neg = w.hi < 0.0;
    let a = w.abs();
    let mut e10 = libm::floor(libm::log10(a.hi)) as i32;
    let mut digits;
    loop {
        let scaled = a.mul(Wide::pow10(sig as i32 - 1 - e10));
        digits = wide_to_u128_round(scaled);
        let low = 10u128.pow(sig - 1);
        let high = 10u128.pow(sig);
        if digits >= high {
            e10 += 1;
            continue;
        }
        if digits < low {
            e10 -= 1;
            continue;
        }
        break;
    }
    let ds = format!("{digits}");
    let bytes = ds.as_bytes();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if e10 >= 0 && e10 < sig as i32 {
        let int_len = (e10 + 1) as usize;
        out.push_str(&ds[..int_len]);
        let frac = ds[int_len..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    } else if e10 < 0 && e10 >= -4 {
        out.push_str("0.");
        for _ in 0..(-e10 - 1) {
            out.push('0');
        }
        out.push_str(core::str::from_utf8(bytes).unwrap().trim_end_matches('0'));
    } else {
        out.push(bytes[0] as char);
        let frac = ds[1..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
        out.push('e');
        out.push_str(&format!("{e10}"));
    }
    out
}

fn wide_to_u128_round(w: Wide) -> u128 {
    let f = w.floor();
    let frac = w.sub(f);
    let mut n = f.hi as i128 + f.lo as i128;
    if frac.cmp_wide(Wide::from_f64(0.5)) != Ordering::Less {
        n += 1;
    }
    if n < 0 {
        0
    } else {
        n as u128
    }
}

/// Counts how many leading significant decimal digits two values share,
/// comparing digit strings after aligning magnitudes; used by the digits/K
/// compression column. Capped by what the working precision supports.
pub fn shared_leading_digits(a: Wide, b: Wide, prec: Precision) -> u32 {
    if a.is_nan() || b.is_nan() || a.is_zero() || b.is_zero() {
        return 0;
    }
    if (a.hi < 0.0) != (b.hi < 0.0) {
        return 0;
    }
    let cap = prec.decimal_digits();
    let da = format_digit_string(a.abs(), cap + 2);
    let db = format_digit_string(b.abs(), cap + 2);
    if da.1 != db.1 {
        return 0;
    }
    let mut n = 0;
    for (x, y) in da.0.bytes().zip(db.0.bytes()) {
        if x == y {
            n += 1;
        } else {
            break;
        }
    }
    n.min(cap)
}

/// Digit string (no decimal point) and exponent of the leading digit.
fn format_digit_string(a: Wide, sig: u32) -> (String, i32) {
    use alloc::format;
    let mut e10 = libm::floor(libm::log10(a.hi)) as i32;
    loop {
        let scaled = a.mul(Wide::pow10(sig as i32 - 1 - e10));
        let digits = wide_to_u128_round(scaled);
        let low = 10u128.pow(sig - 1);
        let high = 10u128.pow(sig);
        if digits >= high {
            e10 += 1;
            continue;
        }
        if digits < low {
            e10 -= 1;
            continue;
        }
        return (format!("{digits}"), e10);
    }
}
