//! Reduced rational functions in one variable over the rationals.
//!
//! The stored form is canonical: numerator and denominator are coprime and
//! the denominator is monic, so structural equality (`==`) is mathematical
//! equality. This is what lets the derivative identities be checked at the
//! symbolic level rather than pointwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::exact::{Polynomial, Rational};

/// Quotient of two polynomials, kept reduced with a monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds `num/den` and normalises to canonical form. Fails only when
    /// `den` is the zero polynomial.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lc_inv = den
            .leading()
            .expect("nonzero denominator")
            .recip()
            .expect("nonzero leading coefficient");
        Ok(RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction::from_polynomial(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        RationalFunction::constant(Rational::zero())
    }

    pub fn one() -> Self {
        RationalFunction::constant(Rational::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact value at `x`; a vanishing denominator is reported as a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational, Error> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return Err(Error::Pole { at: x.clone() });
        }
        Ok(self.num.eval(x) / den)
    }

    /// Quotient-rule derivative, re-normalised to canonical form.
    pub fn derivative(&self) -> RationalFunction {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RationalFunction::new(num, den).expect("denominator square is nonzero")
    }

    pub fn scale(&self, c: &Rational) -> RationalFunction {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Renders the denominator as `(l-1)^m` when it is exactly a power of
    /// `l - 1` (detected by repeated exact division); falls back to [`Display`]
    /// otherwise.
    pub fn display_factored(&self) -> String {
        let Some(deg) = self.den.degree().filter(|&d| d > 0) else {
            return self.to_string();
        };
        let linear = Polynomial::from_ints(&[-1, 1]);
        let mut q = self.den.clone();
        for _ in 0..deg {
            match q.exact_div(&linear) {
                Some(next) => q = next,
                None => return self.to_string(),
            }
        }
        if q != Polynomial::one() {
            return self.to_string();
        }
        if deg == 1 {
            format!("{} / (l-1)", self.num)
        } else {
            format!("{} / (l-1)^{deg}", self.num)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
