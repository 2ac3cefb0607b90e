//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; always kept in lowest terms with a
/// positive denominator by `num-rational`.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn rat(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"7"`, `"-3"` or `"p/q"`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::ParseError(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Scalar::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
    }
}

/// Canonical text form: `"3"`, `"-1/2"`.
pub fn fmt_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn is_integer(x: &Scalar) -> bool {
    x.is_integer()
}

/// Converts an integral scalar to `i64`.
pub fn to_i64(x: &Scalar) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

pub fn sign(x: &Scalar) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
