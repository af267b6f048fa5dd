//! Exact arithmetic kernel: arbitrary-precision rationals, univariate
//! polynomials and rational functions over the rationals, and the
//! combinatorial primitives (factorials, binomials, multinomials,
//! falling/rising factorials) everything else is built from.
//!
//! All values are immutable after construction and every operation is pure.

mod comb;
mod poly;
mod ratfun;
mod rational;

pub use comb::{binomial, factorial, falling_factorial, multinomial, rising_factorial};
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use rational::Rational;
