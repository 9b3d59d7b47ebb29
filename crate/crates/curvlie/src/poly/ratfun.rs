use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};

use crate::exact::Rational;

use super::gcd::{gcd, try_exact_div};
use super::polynomial::{Polynomial, ToScalar};
use super::table::VariableTable;
use super::PolyError;

/// A quotient of polynomials in canonical form: numerator and denominator
/// are coprime with coprime integer coefficients, and the denominator's
/// leading coefficient is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Normalize `num/den`. Errors when `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                den: Polynomial::one_poly(num.table().clone()),
                num,
            });
        }
        let d = gcd(&num, &den);
        let (num, den) = if d.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            (num, den)
        } else {
            (
                try_exact_div(&num, &d).expect("gcd divides numerator"),
                try_exact_div(&den, &d).expect("gcd divides denominator"),
            )
        };
        // scale so both parts are primitive over the integers and the
        // denominator leads positive
        let (rn, pn) = num.normalize_primitive();
        let (rd, pd) = den.normalize_primitive();
        let ratio = rn / rd; // p/q in lowest terms
        let num = pn.mul_scalar(&Rational::from_integer(ratio.numer().clone()));
        let den = pd.mul_scalar(&Rational::from_integer(ratio.denom().clone()));
        let (num, den) = if den.leading_term(super::MonomialOrder::Lex).unwrap().1.is_negative() {
            (-&num, -&den)
        } else {
            (num, den)
        };
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            den: Polynomial::one_poly(p.table().clone()),
            num: p,
        }
    }

    pub fn zero(table: Arc<VariableTable>) -> Self {
        Self::from_poly(Polynomial::zero(table))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some()
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.num.table()
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.den == other.den {
            return Self::new(self.num.try_add(&other.num)?, self.den.clone());
        }
        // divisibility fast paths keep shared-determinant denominators small
        if let Some(q) = try_exact_div(&self.den, &other.den) {
            let num = self.num.try_add(&other.num.try_mul(&q)?)?;
            return Self::new(num, self.den.clone());
        }
        if let Some(q) = try_exact_div(&other.den, &self.den) {
            let num = self.num.try_mul(&q)?.try_add(&other.num)?;
            return Self::new(num, other.den.clone());
        }
        let num = self
            .num
            .try_mul(&other.den)?
            .try_add(&other.num.try_mul(&self.den)?)?;
        let den = self.den.try_mul(&other.den)?;
        Self::new(num, den)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        Self::new(
            self.num.try_mul(&other.num)?,
            self.den.try_mul(&other.den)?,
        )
    }

    pub fn div(&self, other: &Self) -> Result<Self, PolyError> {
        if other.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Self::new(
            self.num.try_mul(&other.den)?,
            self.den.try_mul(&other.num)?,
        )
    }

    pub fn mul_scalar(&self, c: &Rational) -> Self {
        Self::new(self.num.mul_scalar(c), self.den.clone()).expect("denominator unchanged")
    }

    /// Exact evaluation; the denominator must not vanish at the point.
    pub fn eval<S>(&self, values: &[Option<S>]) -> Result<S, PolyError>
    where
        S: super::polynomial::Coeff + std::ops::Div<Output = S>,
        Rational: ToScalar<S>,
    {
        let n = self.num.eval(values)?;
        let d = self.den.eval(values)?;
        if d.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(n / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() && self.den.as_constant().unwrap().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn tbl() -> Arc<VariableTable> {
        VariableTable::new(&["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &tbl()).unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn cancellation() {
        // (x^2 - 1)/(x - 1) -> x + 1
        let f = rf("x^2 - 1", "x - 1");
        assert_eq!(f.numerator(), &p("x + 1"));
        assert_eq!(f.denominator(), &p("1"));
    }

    #[test]
    fn poly_over_one_unchanged() {
        let f = rf("x*y - 2", "1");
        assert_eq!(f.numerator(), &p("x*y - 2"));
        assert_eq!(f.denominator(), &p("1"));
    }

    #[test]
    fn constants_normalize() {
        // (2x)/4 -> x/2 with positive denominator
        let f = rf("2*x", "4");
        assert_eq!(f.numerator(), &p("x"));
        assert_eq!(f.denominator(), &p("2"));
        // sign moves out of the denominator
        let g = rf("x", "-y");
        assert_eq!(g.numerator(), &p("-x"));
        assert_eq!(g.denominator(), &p("y"));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(p("x"), p("0")),
            Err(PolyError::ZeroDenominator)
        );
    }

    #[test]
    fn field_arithmetic() {
        let a = rf("1", "x");
        let b = rf("1", "y");
        let s = a.add(&b).unwrap();
        assert_eq!(s, rf("x + y", "x*y"));
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod, rf("1", "x*y"));
        let q = s.div(&prod).unwrap();
        assert_eq!(q, rf("x + y", "1"));
        assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn add_with_shared_denominator_power() {
        let d = p("x + y");
        let f = RationalFunction::new(p("x"), d.pow(2)).unwrap();
        let g = RationalFunction::new(p("y"), d.clone()).unwrap();
        let s = f.add(&g).unwrap();
        // x/(x+y)^2 + y/(x+y) = (x + y(x+y))/(x+y)^2
        let expect = RationalFunction::new(
            &p("x") + &(&p("y") * &d),
            d.pow(2),
        )
        .unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn evaluation() {
        use crate::exact::QSqrt3;
        use num_traits::Zero;
        let f = rf("x^2 - 3", "y");
        let vals = vec![Some(QSqrt3::radical()), Some(QSqrt3::from_int(5))];
        assert!(f.eval(&vals).unwrap().is_zero());
        let g = rf("1", "x^2 - 3");
        assert_eq!(g.eval(&vals), Err(PolyError::ZeroDenominator));
    }
}
