//! Exact arithmetic over arbitrary-precision rationals. Polynomials are
//! sparse; matrices are small and dense.
//!
//! Nothing in this crate touches floating point; every scalar is a
//! [`Rational`] kept in lowest terms by `num-rational`.

pub(crate) mod forms;
pub mod linalg;
mod parse;
mod poly;

pub use forms::{divide_out_with_multiplicity, BiForm, BinaryForm};
pub use poly::{Monomial, MultiPoly};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator; `0` is stored as `0/1`.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q`. The result is always reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `p/q`, with `/q` omitted when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Converts an integral rational to `i64`, or `None` if it is not an integer
/// or does not fit.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    i64::try_from(r.numer().clone()).ok()
}

pub(crate) fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
