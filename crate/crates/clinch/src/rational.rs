//! Arbitrary-precision rational arithmetic for prices, values, budgets, and
//! payments.
//!
//! Every monetary quantity in this crate is a [`Rational`]. Clinching
//! breakpoints are quotients of budgets by small integers, and the engine
//! depends on exact equality tests (for example "is the remaining budget an
//! integer multiple of the current price"), so floating point is never used
//! anywhere in the pipeline.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalError {
    #[error("denominator must be positive, got {0}")]
    NonPositiveDenominator(String),
    #[error("floor division requires a nonnegative numerator, got {0}")]
    NegativeNumerator(String),
    #[error("cannot parse {0:?} as an exact rational")]
    Parse(String),
}

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `numer/denom` in lowest terms. The denominator must be nonzero;
    /// its sign is normalized away.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "rational with zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Exact integer floor of `numer / denom`.
    ///
    /// Requires `denom > 0` and `numer >= 0`; both violations are reported as
    /// errors rather than being silently floored.
    pub fn floor_div(numer: &Rational, denom: &Rational) -> Result<BigInt, RationalError> {
        if !denom.is_positive() {
            return Err(RationalError::NonPositiveDenominator(denom.to_string()));
        }
        if numer.is_negative() {
            return Err(RationalError::NegativeNumerator(numer.to_string()));
        }
        Ok((&numer.0 / &denom.0).floor().to_integer())
    }

    /// Renders the canonical form: `"3"`, `"-3"`, or `"5/2"` (lowest terms,
    /// positive denominator). `parse` of this string round-trips exactly.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Parses `"3"`, `"-3"`, `"5/2"`, or an exact decimal such as `"2.5"`.
    /// No floating-point intermediate is involved.
    pub fn parse(s: &str) -> Result<Self, RationalError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(RationalError::Parse(s.to_string()));
        }
        if let Some((numer, denom)) = s.split_once('/') {
            let n = BigInt::from_str(numer.trim()).map_err(|_| RationalError::Parse(s.into()))?;
            let d = BigInt::from_str(denom.trim()).map_err(|_| RationalError::Parse(s.into()))?;
            if d.is_zero() {
                return Err(RationalError::Parse(s.into()));
            }
            return Ok(Rational(BigRational::new(n, d)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(RationalError::Parse(s.into()));
            }
            let negative = int_part.starts_with('-');
            let int_val = if int_part == "-" || int_part.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(int_part).map_err(|_| RationalError::Parse(s.into()))?
            };
            let frac_val =
                BigInt::from_str(frac_part).map_err(|_| RationalError::Parse(s.into()))?;
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let magnitude = int_val.abs() * &scale + frac_val;
            let signed = if negative { -magnitude } else { magnitude };
            return Ok(Rational(BigRational::new(signed, scale)));
        }
        let n = BigInt::from_str(s).map_err(|_| RationalError::Parse(s.into()))?;
        Ok(Rational(BigRational::from_integer(n)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from_int(n as i64)
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rational::parse(s)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }

        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0
            .partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn floor_div_examples() {
        assert_eq!(
            Rational::floor_div(&rat(5, 1), &rat(2, 1)).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            Rational::floor_div(&rat(4, 1), &rat(2, 1)).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            Rational::floor_div(&rat(0, 1), &rat(7, 1)).unwrap(),
            BigInt::from(0)
        );
        // Non-integer operands floor exactly too.
        assert_eq!(
            Rational::floor_div(&rat(5, 1), &rat(5, 2)).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            Rational::floor_div(&rat(7, 2), &rat(3, 2)).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn floor_div_rejects_bad_arguments() {
        assert!(matches!(
            Rational::floor_div(&rat(1, 1), &Rational::zero()),
            Err(RationalError::NonPositiveDenominator(_))
        ));
        assert!(matches!(
            Rational::floor_div(&rat(1, 1), &rat(-2, 1)),
            Err(RationalError::NonPositiveDenominator(_))
        ));
        assert!(matches!(
            Rational::floor_div(&rat(-1, 1), &rat(2, 1)),
            Err(RationalError::NegativeNumerator(_))
        ));
    }

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Rational::parse("3").unwrap(), rat(3, 1));
        assert_eq!(Rational::parse("-3").unwrap(), rat(-3, 1));
        assert_eq!(Rational::parse("5/2").unwrap(), rat(5, 2));
        assert_eq!(Rational::parse("10/4").unwrap(), rat(5, 2));
        assert_eq!(Rational::parse("2.5").unwrap(), rat(5, 2));
        assert_eq!(Rational::parse("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(Rational::parse("0.10").unwrap(), rat(1, 10));
        assert!(Rational::parse("").is_err());
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::parse("1.").is_err());
        assert!(Rational::parse("abc").is_err());
        assert!(Rational::parse("1.5e3").is_err());
    }

    proptest! {
        #[test]
        fn add_sub_round_trip(an in -1000i64..1000, ad in 1i64..50, bn in -1000i64..1000, bd in 1i64..50) {
            let a = rat(an, ad);
            let b = rat(bn, bd);
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn mul_div_round_trip(an in -1000i64..1000, ad in 1i64..50, bn in 1i64..1000, bd in 1i64..50) {
            let a = rat(an, ad);
            let b = rat(bn, bd);
            prop_assert_eq!(&(&a * &b) / &b, a);
        }

        #[test]
        fn render_parse_round_trip(n in -100_000i64..100_000, d in 1i64..10_000) {
            let a = rat(n, d);
            prop_assert_eq!(Rational::parse(&a.render()).unwrap(), a);
        }

        #[test]
        fn floor_div_matches_integer_division(n in 0i64..100_000, d in 1i64..10_000) {
            let q = Rational::floor_div(&rat(n, 1), &rat(d, 1)).unwrap();
            prop_assert_eq!(q, BigInt::from(n / d));
        }
    }
}
