//! The real quadratic field Q(sqrt(D)) for a fixed squarefree D > 1.
//!
//! An element is `a + b*sqrt(D)` with exact rational `a`, `b`. The sign of
//! an element is decided purely with integer arithmetic (comparing `a^2`
//! against `D*b^2`), so ordering and signature computations carry no
//! numerical error.
//!
//! The solution tables of the classification live in Q(sqrt(3)); one family
//! sample lands in Q(sqrt(2)), which is why the radicand is a const
//! parameter instead of being hardwired.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, rational_sqrt, Rational};
use super::ExactError;

/// Exact sign of a real quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    fn of_rational(q: &Rational) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self.to_i32()) * (rhs.to_i32()) {
            0 => Sign::Zero,
            1 => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

/// `a + b*sqrt(D)` with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quad<const D: u64> {
    a: Rational,
    b: Rational,
}

/// The field every catalog value lives in.
pub type QSqrt3 = Quad<3>;
/// Needed for one off-grid family sample whose entries involve sqrt(2).
pub type QSqrt2 = Quad<2>;

impl<const D: u64> Quad<D> {
    pub fn new(a: Rational, b: Rational) -> Self {
        Quad { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Quad { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// `sqrt(D)` itself.
    pub fn radical() -> Self {
        Quad { a: Rational::zero(), b: Rational::one() }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    /// `Some(a)` when the element is rational.
    pub fn to_rational(&self) -> Option<&Rational> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Galois conjugate `a - b*sqrt(D)`.
    pub fn conjugate(&self) -> Self {
        Quad { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a^2 - D*b^2` (the product with the conjugate).
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(D.into()) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // 1/(a + b sqrt D) = (a - b sqrt D) / (a^2 - D b^2)
        let n = self.norm();
        debug_assert!(!n.is_zero(), "nonzero element with zero norm");
        let c = self.conjugate();
        Ok(Quad { a: c.a / &n, b: c.b / &n })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self.clone() * rhs.inv()?)
    }

    /// Exact sign of the real number `a + b*sqrt(D)`.
    pub fn signum(&self) -> Sign {
        let sa = Sign::of_rational(&self.a);
        let sb = Sign::of_rational(&self.b);
        match (sa, sb) {
            (s, Sign::Zero) => s,
            (Sign::Zero, s) => s,
            (Sign::Positive, Sign::Positive) => Sign::Positive,
            (Sign::Negative, Sign::Negative) => Sign::Negative,
            // Opposite signs: the larger of a^2 and D*b^2 decides. Equality
            // is impossible for b != 0 because D is not a rational square.
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let db2 = Rational::from_integer(D.into()) * &self.b * &self.b;
                match a2.cmp(&db2) {
                    Ordering::Greater => sa,
                    Ordering::Less => match sa {
                        Sign::Positive => Sign::Negative,
                        _ => Sign::Positive,
                    },
                    Ordering::Equal => unreachable!("D must be squarefree, not a square"),
                }
            }
        }
    }

    /// Exact square root inside the field, if one exists. Returns the
    /// non-negative root.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.signum() == Sign::Negative {
            return None;
        }
        let d = Rational::from_integer(D.into());
        if self.b.is_zero() {
            // sqrt(p): either rational, or r*sqrt(D) with p = r^2 * D.
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(Self::from_rational(r));
            }
            if let Some(r) = rational_sqrt(&(&self.a / &d)) {
                return Some(Quad { a: Rational::zero(), b: r });
            }
            return None;
        }
        // (u + v sqrt D)^2 = u^2 + D v^2 + 2uv sqrt D. Matching parts forces
        // s := sqrt(a^2 - D b^2) rational and u^2 = (a +/- s)/2 rational.
        let s = rational_sqrt(&self.norm())?;
        let two = Rational::from_integer(2.into());
        for sign in [1i64, -1] {
            let cand = (&self.a + Rational::from_integer(sign.into()) * &s) / &two;
            if let Some(u) = rational_sqrt(&cand) {
                if u.is_zero() {
                    continue;
                }
                let v = &self.b / (&two * &u);
                let root = Quad { a: u, b: v };
                if &root * &root == *self {
                    return match root.signum() {
                        Sign::Negative => Some(-root),
                        _ => Some(root),
                    };
                }
            }
        }
        None
    }

    fn scale(&self, q: &Rational) -> Self {
        Quad { a: &self.a * q, b: &self.b * q }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        self.scale(q)
    }

    pub fn mul_int(&self, n: i64) -> Self {
        self.scale(&Rational::from_integer(n.into()))
    }
}

impl<const D: u64> Zero for Quad<D> {
    fn zero() -> Self {
        Quad { a: Rational::zero(), b: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<const D: u64> One for Quad<D> {
    fn one() -> Self {
        Quad { a: Rational::one(), b: Rational::zero() }
    }
}

impl<const D: u64> Add for Quad<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Quad { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl<const D: u64> Sub for Quad<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Quad { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl<const D: u64> Mul for Quad<D> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<const D: u64> Mul for &Quad<D> {
    type Output = Quad<D>;
    fn mul(self, rhs: Self) -> Quad<D> {
        let d = Rational::from_integer(D.into());
        Quad {
            a: &self.a * &rhs.a + &d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl<const D: u64> Neg for Quad<D> {
    type Output = Self;
    fn neg(self) -> Self {
        Quad { a: -self.a, b: -self.b }
    }
}

/// Panics on a zero divisor; use `checked_div` where the input is untrusted.
impl<const D: u64> Div for Quad<D> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero in Quad")
    }
}

impl<const D: u64> Mul<&Rational> for &Quad<D> {
    type Output = Quad<D>;
    fn mul(self, rhs: &Rational) -> Quad<D> {
        self.scale(rhs)
    }
}

impl<const D: u64> PartialOrd for Quad<D> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<const D: u64> Ord for Quad<D> {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.clone() - other.clone();
        match diff.signum() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl<const D: u64> fmt::Display for Quad<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let rad = if self.b.abs().is_one() {
            format!("sqrt({D})")
        } else {
            format!("{}*sqrt({D})", format_rational(&self.b.abs()))
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{rad}")
            } else {
                write!(f, "{rad}")
            }
        } else if self.b.is_negative() {
            write!(f, "{} - {rad}", format_rational(&self.a))
        } else {
            write!(f, "{} + {rad}", format_rational(&self.a))
        }
    }
}

impl<const D: u64> Serialize for Quad<D> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Quad", 2)?;
        s.serialize_field("a", &format_rational(&self.a))?;
        s.serialize_field("b", &format_rational(&self.b))?;
        s.end()
    }
}

impl<'de, const D: u64> Deserialize<'de> for Quad<D> {
    fn deserialize<De: Deserializer<'de>>(deserializer: De) -> Result<Self, De::Error> {
        #[derive(Deserialize)]
        struct Raw {
            a: String,
            b: String,
        }
        let raw = Raw::deserialize(deserializer)?;
        let a = parse_rational(&raw.a).map_err(serde::de::Error::custom)?;
        let b = parse_rational(&raw.b).map_err(serde::de::Error::custom)?;
        Ok(Quad::new(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn qs(a: &str, b: &str) -> QSqrt3 {
        QSqrt3::new(q(a), q(b))
    }

    #[test]
    fn difference_of_squares() {
        // (1 + sqrt3)(-1 + sqrt3) = 2
        let x = qs("1", "1");
        let y = qs("-1", "1");
        assert_eq!(&x * &y, QSqrt3::from_int(2));
    }

    #[test]
    fn inverse_of_one_plus_sqrt3() {
        let x = qs("1", "1");
        let inv = x.inv().unwrap();
        assert_eq!(inv, qs("-1/2", "1/2"));
        assert_eq!(x * inv, QSqrt3::one());
    }

    #[test]
    fn two_over_sqrt3_squares_to_four_thirds() {
        // 2/sqrt(3) = (2/3) sqrt(3)
        let x = qs("0", "2/3");
        assert_eq!(&x * &x, QSqrt3::new(q("4/3"), q("0")));
    }

    #[test]
    fn sign_cases() {
        assert_eq!(qs("0", "0").signum(), Sign::Zero);
        assert_eq!(qs("1", "0").signum(), Sign::Positive);
        // -2 + sqrt(3) < 0 because 4 > 3
        assert_eq!(qs("-2", "1").signum(), Sign::Negative);
        // -3/2 + sqrt(3) > 0 because 9/4 < 3
        assert_eq!(qs("-3/2", "1").signum(), Sign::Positive);
        assert_eq!(qs("2", "-1").signum(), Sign::Positive);
        assert_eq!(qs("1", "-1").signum(), Sign::Negative);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            qs("1", "0").checked_div(&QSqrt3::zero()),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn sqrt_inside_field() {
        // sqrt(100/27) = (10/9) sqrt(3)
        let r = QSqrt3::from_rational(q("100/27")).sqrt().unwrap();
        assert_eq!(r, qs("0", "10/9"));
        // sqrt(4/9) rational
        let r = QSqrt3::from_rational(q("4/9")).sqrt().unwrap();
        assert_eq!(r, qs("2/3", "0"));
        // sqrt(7 + 4 sqrt3) = 2 + sqrt3
        let r = qs("7", "4").sqrt().unwrap();
        assert_eq!(r, qs("2", "1"));
        // sqrt(2) does not exist in Q(sqrt 3)
        assert!(QSqrt3::from_int(2).sqrt().is_none());
        // but it does in Q(sqrt 2)
        assert_eq!(QSqrt2::from_int(2).sqrt().unwrap(), QSqrt2::radical());
        // negative numbers have no real root
        assert!(QSqrt3::from_int(-1).sqrt().is_none());
    }

    #[test]
    fn json_shape() {
        let x = qs("-10/9", "1/3");
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"{"a":"-10/9","b":"1/3"}"#);
        let back: QSqrt3 = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn display_forms() {
        assert_eq!(qs("1/2", "0").to_string(), "1/2");
        assert_eq!(qs("0", "-2/3").to_string(), "-2/3*sqrt(3)");
        assert_eq!(qs("1", "1").to_string(), "1 + sqrt(3)");
        assert_eq!(qs("1", "-2").to_string(), "1 - 2*sqrt(3)");
    }
}
