//! Truncated formal power series in `t` over the rationals — the independent
//! oracle that expands every generating function in the crate and
//! cross-validates closed forms and recurrences.
//!
//! A [`TruncatedSeries`] of order `N` stores exactly the coefficients of
//! `t^0 .. t^(N-1)`; arithmetic never reads or fabricates coefficients at or
//! beyond the truncation order. All coefficient extraction here is formal, so
//! radius-of-convergence questions never arise.
//!
//! The `expand_*` functions return the number families scaled by `n!` (the
//! families are defined through exponential generating functions):
//!
//! - [`expand_y_gf`]: `(2/(lambda(1+lambda t)-1))^k`
//! - [`expand_y_poly_gf`]: the same times `(1+lambda t)^x`
//! - [`expand_stirling1_gf`]: `[log(1+t)]^k / k!`
//! - [`expand_apostol_gf`]: `(t/(lambda e^t-1))^k` and `(2/(lambda e^t+1))^k`

use crate::error::Error;
use crate::exact::{factorial, Rational};

/// Formal power series truncated to a fixed number of coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series with the given ascending coefficients; the order is the length.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        TruncatedSeries { coeffs }
    }

    /// The zero series of the given order.
    pub fn zeros(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order],
        }
    }

    /// The constant series `c` of the given order.
    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = TruncatedSeries::zeros(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(Rational::one(), order)
    }

    /// Number of retained coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    fn check_orders(&self, other: &Self) -> Result<(), Error> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_orders(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_orders(other)?;
        let n = self.order();
        let mut coeffs = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Quotient series `q` with `q * divisor = self` up to truncation.
    /// The divisor must have a nonzero constant term.
    pub fn div(&self, divisor: &Self) -> Result<Self, Error> {
        self.check_orders(divisor)?;
        if !divisor.coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::NonInvertibleSeries);
        }
        let lead_inv = divisor.coeffs[0].recip()?;
        let n = self.order();
        let mut coeffs = vec![Rational::zero(); n];
        for i in 0..n {
            let mut acc = self.coeffs[i].clone();
            for j in 0..i {
                acc -= &(&coeffs[j] * &divisor.coeffs[i - j]);
            }
            coeffs[i] = acc * &lead_inv;
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// `self^k` by binary exponentiation of the Cauchy product; `k = 0`
    /// yields the series 1.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = TruncatedSeries::one(self.order());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("orders match");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("orders match");
            }
        }
        acc
    }

    /// Series exponential; requires a zero constant term.
    ///
    /// Uses the recurrence `n b_n = sum_{j=1}^{n} j a_j b_{n-j}` obtained
    /// from `b' = a' b`.
    pub fn exp(&self) -> Result<Self, Error> {
        if self.coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut coeffs = vec![Rational::zero(); n];
        if n == 0 {
            return Ok(TruncatedSeries { coeffs });
        }
        coeffs[0] = Rational::one();
        for i in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=i {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc += &(&(&self.coeffs[j] * Rational::from(j as i64)) * &coeffs[i - j]);
            }
            coeffs[i] = acc / Rational::from(i as i64);
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// Series of `log(1 + lambda t)`: coefficients `(-1)^(i+1) lambda^i / i`.
pub fn log1p(lambda: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero(); order];
    let mut power = lambda.clone();
    for (i, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let term = &power / Rational::from(i as i64);
        *slot = if i % 2 == 1 { term } else { -term };
        power = power * lambda;
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Binomial series of `(1 + lambda t)^x`: coefficients `(x)_i lambda^i / i!`.
pub fn binom_x(x: &Rational, lambda: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero(); order];
    let mut acc = Rational::one(); // (x)_i lambda^i / i!, built incrementally
    for (i, slot) in coeffs.iter_mut().enumerate() {
        if i > 0 {
            let step = (x - Rational::from(i as i64 - 1)) * lambda / Rational::from(i as i64);
            acc = acc * step;
        }
        *slot = acc.clone();
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Series of `e^t` (coefficients `1/i!`).
fn exp_t(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero(); order];
    let mut inv_fact = Rational::one();
    for (i, slot) in coeffs.iter_mut().enumerate() {
        if i > 0 {
            inv_fact = inv_fact / Rational::from(i as i64);
        }
        *slot = inv_fact.clone();
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Expands `(2/(lambda(1+lambda t)-1))^k` and returns the first `order`
/// values `Y_n^(k)(lambda) = n! * coeff[n]`.
///
/// This is the oracle route for the Y numbers, independent of their closed
/// form.
pub fn expand_y_gf(k: u32, lambda: &Rational, order: usize) -> Result<Vec<Rational>, Error> {
    let base = y_base_series(lambda, order)?;
    Ok(unscale_egf(&base.pow(k)))
}

/// Expands `(2/(lambda(1+lambda t)-1))^k (1+lambda t)^x` and returns
/// `Y_n^(k)(x; lambda) = n! * coeff[n]`.
pub fn expand_y_poly_gf(
    k: u32,
    x: &Rational,
    lambda: &Rational,
    order: usize,
) -> Result<Vec<Rational>, Error> {
    let base = y_base_series(lambda, order)?;
    let product = base.pow(k).mul(&binom_x(x, lambda, order))?;
    Ok(unscale_egf(&product))
}

/// `2 / (lambda(1+lambda t) - 1)` as a series; `lambda = 1` is the pole.
fn y_base_series(lambda: &Rational, order: usize) -> Result<TruncatedSeries, Error> {
    if lambda.is_one() {
        return Err(Error::Pole { at: lambda.clone() });
    }
    // Denominator lambda(1+lambda t) - 1 = (lambda - 1) + lambda^2 t.
    let mut den = TruncatedSeries::zeros(order);
    if order > 0 {
        den.coeffs[0] = lambda - Rational::one();
    }
    if order > 1 {
        den.coeffs[1] = lambda * lambda;
    }
    TruncatedSeries::constant(Rational::from(2), order).div(&den)
}

/// Expands `[log(1+t)]^k / k!`; entry `n` is the signed Stirling number of
/// the first kind `S_1(n, k) = n! * coeff[n]` (zero for `n < k`).
pub fn expand_stirling1_gf(k: u32, order: usize) -> Vec<Rational> {
    let inv_k_fact = Rational::one() / Rational::from(factorial(k));
    let series = log1p(&Rational::one(), order).pow(k).scale(&inv_k_fact);
    unscale_egf(&series)
}

/// Which Apostol-type family [`expand_apostol_gf`] expands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ApostolKind {
    Bernoulli,
    Euler,
}

/// Expands the order-`k` Apostol-type generating function and returns
/// `n! * coeff[n]`.
///
/// Bernoulli: `(t/(lambda e^t - 1))^k`, pole at `lambda = 1` (that case is
/// covered by the classical branch in `families`). Euler:
/// `(2/(lambda e^t + 1))^k`, pole at `lambda = -1`.
pub fn expand_apostol_gf(
    kind: ApostolKind,
    k: u32,
    lambda: &Rational,
    order: usize,
) -> Result<Vec<Rational>, Error> {
    let exp = exp_t(order);
    match kind {
        ApostolKind::Bernoulli => {
            if lambda.is_one() {
                return Err(Error::Pole { at: lambda.clone() });
            }
            // (t/(lambda e^t - 1))^k = t^k (lambda e^t - 1)^(-k): invert,
            // raise to the k-th power, then shift the coefficient index by k.
            let den = exp
                .scale(lambda)
                .add(&TruncatedSeries::constant(Rational::from(-1), order))?;
            let inv = TruncatedSeries::one(order).div(&den)?;
            let powed = inv.pow(k);
            let k = k as usize;
            let coeffs = (0..order)
                .map(|n| {
                    if n < k {
                        Rational::zero()
                    } else {
                        powed.coeffs[n - k].clone()
                    }
                })
                .collect();
            Ok(unscale_egf(&TruncatedSeries::from_coeffs(coeffs)))
        }
        ApostolKind::Euler => {
            let minus_one = Rational::from(-1);
            if lambda == &minus_one {
                return Err(Error::Pole { at: minus_one });
            }
            let den = exp
                .scale(lambda)
                .add(&TruncatedSeries::one(order))?;
            let base = TruncatedSeries::constant(Rational::from(2), order).div(&den)?;
            Ok(unscale_egf(&base.pow(k)))
        }
    }
}

/// Recovers `a_n = n! * coeff[n]` from an exponential generating function.
fn unscale_egf(series: &TruncatedSeries) -> Vec<Rational> {
    let mut fact = Rational::one();
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if n > 0 {
                fact = &fact * Rational::from(n as i64);
            }
            c * &fact
        })
        .collect()
}
