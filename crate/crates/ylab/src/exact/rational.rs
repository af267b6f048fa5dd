//! Arbitrary-precision exact rational numbers.
//!
//! [`Rational`] is a thin wrapper over `num_rational::BigRational` that pins
//! down the external contract: values are always stored reduced with a
//! positive denominator, they print and parse as `"p/q"` (or `"p"` when the
//! denominator is one), and conversion to `f64` goes through a single scaled
//! big-integer division instead of converting numerator and denominator
//! separately (which would overflow for the large values this crate routinely
//! produces).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exact rational number, stored reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `num/den`, reducing and normalising the sign.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, Error> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse.
    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Integer power with the empty-product convention `x^0 = 1` (including
    /// `0^0 = 1`, which the zeta-type sums rely on).
    ///
    /// Panics on `0^e` with `e < 0`; negative exponents of zero never arise
    /// from the public operations (pole checks happen first).
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        let mag = u32::try_from(exp.unsigned_abs()).expect("exponent out of range");
        let num = self.0.numer().pow(mag);
        let den = self.0.denom().pow(mag);
        if exp > 0 {
            Rational(BigRational::new_raw(num, den))
        } else {
            assert!(!self.is_zero(), "negative power of zero");
            Rational(BigRational::new(den, num))
        }
    }

    /// Rounds to the nearest `f64` via one scaled big-integer division, so
    /// that values whose numerator or denominator individually overflow
    /// `f64` still convert correctly. Accurate to within one ulp.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let negative = self.is_negative();
        let a: &BigUint = self.0.numer().magnitude();
        let b: &BigUint = self.0.denom().magnitude();
        // Shift so the integer quotient keeps 64 significant bits.
        let shift = 64i64 + b.bits() as i64 - a.bits() as i64;
        let q = if shift >= 0 {
            (a << shift as u64) / b
        } else {
            a / (b << (-shift) as u64)
        };
        let q = q.to_f64().unwrap_or(f64::INFINITY);
        // Apply 2^-shift in two steps so intermediate scaling cannot
        // overflow before the final magnitude is reached.
        let half = (-shift / 2) as i32;
        let rest = (-shift - half as i64) as i32;
        let magnitude = q * 2f64.powi(half) * 2f64.powi(rest);
        if negative {
            -magnitude
        } else {
            magnitude
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"p"` and `"p/q"` with an optional leading sign; the Unicode
    /// minus sign U+2212 is accepted as a synonym for `-`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let cleaned = s.trim().replace('\u{2212}', "-");
        let err = || Error::ParseRational(s.to_string());
        let (num_str, den_str) = match cleaned.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (cleaned.as_str(), None),
        };
        let num = BigInt::from_str(num_str).map_err(|_| err())?;
        match den_str {
            None => Ok(Rational::from_integer(num)),
            Some(d) => {
                let den = BigInt::from_str(d).map_err(|_| err())?;
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Rational::new(num, den)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<&BigInt> for Rational {
    fn from(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
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
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

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

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}
