//! Univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order and the highest entry is
//! always nonzero (the zero polynomial is the empty list). The gcd is computed
//! exactly by clearing denominators and running a primitive pseudo-remainder
//! sequence over the integers, so `RationalFunction` reduction never leaves
//! exact arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exact::Rational;

/// Dense univariate polynomial over [`Rational`], ascending coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros to restore the canonical form.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c * l^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    /// Convenience constructor from ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `l^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from(i as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so the leading coefficient is one; the zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), Error> {
        let d = divisor.degree().ok_or(Error::ZeroDenominator)?;
        let lc_inv = divisor.leading().unwrap().recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let r_deg = rem.len() - 1;
            let factor = rem.last().unwrap() * &lc_inv;
            let shift = r_deg - d;
            for i in 0..=d {
                let t = &divisor.coeffs[i] * &factor;
                rem[shift + i] -= &t;
            }
            quot[shift] = factor;
            // The leading term cancels exactly, so the degree always drops.
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor over the rationals.
    ///
    /// Both operands are cleared to primitive integer polynomials and reduced
    /// by a primitive pseudo-remainder sequence; the result is scaled monic.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = int_primitive(clear_denominators(self));
        let mut b = int_primitive(clear_denominators(other));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_pseudo_rem(a, &b);
            a = b;
            b = int_primitive(r);
        }
        Polynomial::new(a.into_iter().map(Rational::from).collect()).monic()
    }
}

/// Multiplies through by the lcm of the coefficient denominators.
fn clear_denominators(p: &Polynomial) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    p.coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}

/// Divides out the integer content and normalises the leading sign.
fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(BigInt::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut v {
        *c = &*c / &content;
    }
    v
}

/// Pseudo-remainder of `a` by `b`: the remainder of `lc(b)^s * a` divided by
/// `b`, computed without leaving the integers. `b` must be nonzero.
fn int_pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let d = b.len() - 1;
    let lc_b = b.last().unwrap();
    while a.len() > d {
        let shift = a.len() - 1 - d;
        let lc_a = a.last().unwrap().clone();
        for c in &mut a {
            *c *= lc_b;
        }
        for i in 0..=d {
            let t = &lc_a * &b[i];
            a[shift + i] -= t;
        }
        while a.last().is_some_and(BigInt::is_zero) {
            a.pop();
        }
    }
    a
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    /// Descending-degree form in the variable `l`, e.g.
    /// `l^3 - 3*l^2 + 3*l - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if deg == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if deg == 1 {
                    write!(f, "l")?;
                } else {
                    write!(f, "l^{deg}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
