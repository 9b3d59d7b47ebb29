//! Arbitrary-precision rational numbers.
//!
//! `Rational` is `num_rational::BigRational`: numerator and denominator are
//! big integers, the value is always stored in lowest terms with a positive
//! denominator, and arithmetic is exact. The helpers here add the `"p/q"`
//! string form used in JSON outputs and an exact square-root test.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ExactError;

pub type Rational = num_rational::BigRational;

/// Parse `"p"`, `"-p"` or `"p/q"` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::BadRationalLiteral(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Render as `"p/q"`, or just `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact square root: `Some(r)` with `r >= 0` and `r^2 == q`, if one exists
/// in the rationals.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let num = exact_int_sqrt(q.numer())?;
    let den = exact_int_sqrt(q.denom())?;
    Some(Rational::new(num, den))
}

fn exact_int_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}
