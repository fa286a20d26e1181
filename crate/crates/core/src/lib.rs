//! Core engine for recognizing decimal constants as short closed-form
//! expressions.
//!
//! The crate enumerates every RPN program of a small fixed "calculator"
//! language in order of increasing code length, evaluates each program in
//! extended-precision complex arithmetic, tracks the subsequence of
//! progressively better approximations to a target value, and scores the
//! result with statistical criteria that separate an exact formula hit from
//! the background drift of ever-closer accidental matches.
//!
//! Everything here is `no_std` (with `alloc`); IO, parallel drivers, and file
//! formats live in the companion `constrec` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod calc;
pub mod criteria;
pub mod fp;
pub mod rational;
pub mod rpn;
pub mod search;
pub mod stats;

#[cfg(test)]
#[allow(dead_code)]
pub(crate) mod test_oracle;
