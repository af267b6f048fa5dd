//! Combinatorial primitives: factorials, binomial and multinomial
//! coefficients, falling and rising factorials.
//!
//! `binomial` follows the generalised convention `C(n, j) = (n)_j / j!` for
//! arbitrary integer `n`, so `C(n, 0) = 1` for every `n` (in particular
//! `C(-1, 0) = 1`, which keeps the order-zero edge of the Y family
//! well-defined) and `C(n, j) = 0` whenever `j < 0` or `0 <= n < j`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exact::Rational;

/// `n!` as an exact big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// Generalised binomial coefficient over all integer pairs.
pub fn binomial(n: i64, j: i64) -> BigInt {
    if j < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        // C(n, j) = (-1)^j C(j - n - 1, j) for negative upper index.
        let flipped = binomial(j - n - 1, j);
        return if j % 2 == 0 { flipped } else { -flipped };
    }
    if j > n {
        return BigInt::zero();
    }
    let j = j.min(n - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * (n - i) / (i + 1); // division is exact at every step
    }
    acc
}

/// `n! / (parts[0]! ... parts[last]! (n - sum)!)`.
pub fn multinomial(n: u32, parts: &[u32]) -> Result<BigInt, Error> {
    let parts_sum: u64 = parts.iter().map(|&p| u64::from(p)).sum();
    if parts_sum > u64::from(n) {
        return Err(Error::PartsExceedTotal { n, parts_sum });
    }
    // Product of nested binomials: choose parts[0] of n, parts[1] of the
    // remainder, and so on.
    let mut remaining = i64::from(n);
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binomial(remaining, i64::from(p));
        remaining -= i64::from(p);
    }
    Ok(acc)
}

/// Falling factorial `(x)_n = x (x-1) ... (x-n+1)`, with `(x)_0 = 1`.
pub fn falling_factorial(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc = acc * &term;
        term = term - Rational::one();
    }
    acc
}

/// Rising factorial `(x)^(n) = x (x+1) ... (x+n-1)`, with `(x)^(0) = 1`.
pub fn rising_factorial(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc = acc * &term;
        term = term + Rational::one();
    }
    acc
}
