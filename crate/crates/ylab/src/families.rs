//! Exact computation of the special-number families: the numbers
//! `Y_n^(k)(lambda)` and polynomials `Y_n^(k)(x; lambda)`, signed Stirling
//! numbers of the first kind, Apostol-type Bernoulli and Euler numbers,
//! Catalan numbers, Bernstein basis values, and the derived numbers
//! `V_n(lambda) = Y_n^(n+1)(lambda)/(n+1)!`.
//!
//! Each family is computable by at least two independent routes (closed form,
//! recurrence, generating-function expansion in [`crate::series`], symbolic
//! rational function), and the identity suite cross-checks them all.
//!
//! `lambda = 1` is a hard pole for every Y-family operation: `(lambda - 1)`
//! divides each denominator. It is reported as [`Error::Pole`], never a panic.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Error;
use crate::exact::{binomial, factorial, falling_factorial, Polynomial, Rational, RationalFunction};

fn pole_check(lambda: &Rational) -> Result<(), Error> {
    if lambda.is_one() {
        Err(Error::Pole {
            at: lambda.clone(),
        })
    } else {
        Ok(())
    }
}

/// `Y_n^(k)(lambda)` by the explicit closed form
/// `(-1)^n C(k+n-1, n) 2^k n! lambda^(2n) / (lambda-1)^(k+n)`.
pub fn y_number(n: u32, k: u32, lambda: &Rational) -> Result<Rational, Error> {
    pole_check(lambda)?;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let c = binomial(i64::from(k) + i64::from(n) - 1, i64::from(n));
    let coeff = Rational::from(c * BigInt::from(sign) * (BigInt::from(1) << k) * factorial(n));
    let lambda_pow = lambda.pow(2 * i64::from(n));
    let den_pow = (lambda - Rational::one()).pow(i64::from(k) + i64::from(n));
    Ok(coeff * lambda_pow / den_pow)
}

/// `Y_n^(k)(lambda)` by the first-order recurrence
/// `Y_n = lambda^2/(1-lambda) (n+k-1) Y_{n-1}` from the seed
/// `Y_0 = 2^k/(lambda-1)^k` — an independent route that must agree with
/// [`y_number`].
///
/// The recurrence step needs `k >= 1`; at `k = 0` this falls back to the
/// closed form.
pub fn y_number_recurrence(n: u32, k: u32, lambda: &Rational) -> Result<Rational, Error> {
    pole_check(lambda)?;
    if k == 0 {
        return y_number(n, 0, lambda);
    }
    let lm1 = lambda - Rational::one();
    let mut value = Rational::from(BigInt::from(1) << k) / lm1.pow(i64::from(k));
    let step = lambda * lambda / -lm1; // lambda^2 / (1 - lambda)
    for i in 1..=i64::from(n) {
        value = &step * Rational::from(i + i64::from(k) - 1) * value;
    }
    Ok(value)
}

/// `Y_n^(k)` as a reduced rational function of `lambda`.
pub fn y_number_ratfun(n: u32, k: u32) -> RationalFunction {
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let c = binomial(i64::from(k) + i64::from(n) - 1, i64::from(n));
    let coeff = Rational::from(c * BigInt::from(sign) * (BigInt::from(1) << k) * factorial(n));
    let num = Polynomial::monomial(coeff, 2 * n as usize);
    let den = Polynomial::from_ints(&[-1, 1]).pow(k + n);
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// `Y_n^(k)(x; lambda)` by the finite sum
/// `sum_j C(n,j) lambda^(n-j) (x)_{n-j} Y_j^(k)(lambda)`; must agree exactly
/// with the series oracle [`crate::series::expand_y_poly_gf`].
pub fn y_polynomial(n: u32, k: u32, x: &Rational, lambda: &Rational) -> Result<Rational, Error> {
    pole_check(lambda)?;
    let mut acc = Rational::zero();
    for j in 0..=n {
        let c = Rational::from(binomial(i64::from(n), i64::from(j)));
        let lam_pow = lambda.pow(i64::from(n - j));
        let falling = falling_factorial(x, n - j);
        if falling.is_zero() {
            continue;
        }
        acc += &(c * lam_pow * falling * y_number(j, k, lambda)?);
    }
    Ok(acc)
}

/// Signed Stirling number of the first kind via the triangle recurrence
/// `S_1(n+1, m) = S_1(n, m-1) - n S_1(n, m)`. Out-of-range indices give 0.
pub fn stirling1(n: u32, m: u32) -> BigInt {
    use num_traits::{One, Zero};
    if m > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one();
    }
    // Row-by-row, keeping only the previous row.
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = vec![BigInt::zero(); (i + 1) as usize];
        for (j, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            next[j + 1] += v;
            next[j] -= v * (i64::from(i) - 1);
        }
        row = next;
    }
    row[m as usize].clone()
}

/// `B_n^(k)(lambda)`, the k-th order Apostol-Bernoulli numbers.
///
/// Route: `k = 1` by the defining-equation recurrence (with the classical
/// Bernoulli branch at `lambda = 1`, where the Apostol seed degenerates);
/// `k > 1` by binomial convolution of lower orders.
pub fn apostol_bernoulli(n: u32, k: u32, lambda: &Rational) -> Rational {
    apostol_bernoulli_table(n, k, lambda).pop().unwrap().pop().unwrap()
}

/// All rows `B_i^(j)(lambda)` for `i <= n`, `j <= k`; row-major in the order.
fn apostol_bernoulli_table(n: u32, k: u32, lambda: &Rational) -> Vec<Vec<Rational>> {
    let n = n as usize;
    // Order 0: the constant series 1.
    let mut order0 = vec![Rational::zero(); n + 1];
    order0[0] = Rational::one();
    let mut table = vec![order0];
    if k == 0 {
        return table;
    }
    table.push(bernoulli_first_order(n, lambda));
    for _ in 2..=k {
        let prev = table.last().unwrap();
        let first = &table[1];
        let mut next = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut acc = Rational::zero();
            for j in 0..=m {
                let b = &prev[j];
                if b.is_zero() {
                    continue;
                }
                let c = Rational::from(binomial(m as i64, j as i64));
                acc += &(c * b * &first[m - j]);
            }
            next.push(acc);
        }
        table.push(next);
    }
    table
}

/// First-order row `B_0(lambda) .. B_n(lambda)`.
///
/// For `lambda != 1` the defining equation gives `B_0 = 0` and
/// `B_m = (delta_{m,1} - lambda sum_{j<m} C(m,j) B_j) / (lambda - 1)`;
/// at `lambda = 1` the classical Bernoulli recurrence applies with `B_0 = 1`.
fn bernoulli_first_order(n: usize, lambda: &Rational) -> Vec<Rational> {
    let mut row = Vec::with_capacity(n + 1);
    if lambda.is_one() {
        row.push(Rational::one());
        for m in 1..=n {
            // sum_{j=0}^{m-1} C(m+1, j) B_j = 0 for m >= 1.
            let mut acc = Rational::zero();
            for (j, b) in row.iter().enumerate() {
                acc += &(Rational::from(binomial(m as i64 + 1, j as i64)) * b);
            }
            row.push(-acc / Rational::from(m as i64 + 1));
        }
    } else {
        let inv = (lambda - Rational::one()).recip().expect("lambda != 1");
        row.push(Rational::zero());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for (j, b) in row.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc += &(Rational::from(binomial(m as i64, j as i64)) * b);
            }
            let kronecker = if m == 1 { Rational::one() } else { Rational::zero() };
            row.push((kronecker - lambda * acc) * &inv);
        }
    }
    row
}

/// `E_n^(k)(lambda)`, the k-th order Apostol-Euler numbers; `lambda = -1`
/// is the pole.
pub fn apostol_euler(n: u32, k: u32, lambda: &Rational) -> Result<Rational, Error> {
    Ok(apostol_euler_table(n, k, lambda)?.pop().unwrap().pop().unwrap())
}

fn apostol_euler_table(n: u32, k: u32, lambda: &Rational) -> Result<Vec<Vec<Rational>>, Error> {
    let minus_one = Rational::from(-1);
    if lambda == &minus_one {
        return Err(Error::Pole { at: minus_one });
    }
    let n = n as usize;
    let mut order0 = vec![Rational::zero(); n + 1];
    order0[0] = Rational::one();
    let mut table = vec![order0];
    if k == 0 {
        return Ok(table);
    }
    // First order: lambda sum_j C(m,j) E_j + E_m = 2 [m=0].
    let inv = (lambda + Rational::one()).recip().expect("lambda != -1");
    let mut row = Vec::with_capacity(n + 1);
    row.push(Rational::from(2) * &inv);
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, e) in row.iter().enumerate() {
            acc += &(Rational::from(binomial(m as i64, j as i64)) * e);
        }
        row.push(-lambda * acc * &inv);
    }
    table.push(row);
    for _ in 2..=k {
        let prev = table.last().unwrap();
        let first = &table[1];
        let mut next = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut acc = Rational::zero();
            for j in 0..=m {
                let e = &prev[j];
                if e.is_zero() {
                    continue;
                }
                acc += &(Rational::from(binomial(m as i64, j as i64)) * e * &first[m - j]);
            }
            next.push(acc);
        }
        table.push(next);
    }
    Ok(table)
}

/// Catalan number `C_n = C(2n, n)/(n+1)`.
pub fn catalan(n: u32) -> BigInt {
    binomial(2 * i64::from(n), i64::from(n)) / (i64::from(n) + 1)
}

/// Bernstein basis value `B_j^k(lambda) = C(k,j) lambda^j (1-lambda)^(k-j)`.
///
/// `lambda` outside `[0, 1]` is permitted: the identities using these values
/// hold formally. `j > k` gives 0 by the binomial convention.
pub fn bernstein(j: u32, k: u32, lambda: &Rational) -> Rational {
    if j > k {
        return Rational::zero();
    }
    let c = Rational::from(binomial(i64::from(k), i64::from(j)));
    c * lambda.pow(i64::from(j)) * (Rational::one() - lambda).pow(i64::from(k - j))
}

/// `V_n(lambda) = Y_n^(n+1)(lambda) / (n+1)!` (definition route).
pub fn v_number(n: u32, lambda: &Rational) -> Result<Rational, Error> {
    Ok(y_number(n, n + 1, lambda)? / Rational::from(factorial(n + 1)))
}

/// `V_n(lambda)` through the Catalan relation
/// `(-1)^n C_n 2^(n+1) lambda^(2n) / (lambda-1)^(2n+1)` — the independent
/// route that must agree with [`v_number`].
pub fn v_number_catalan(n: u32, lambda: &Rational) -> Result<Rational, Error> {
    pole_check(lambda)?;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let coeff = Rational::from(catalan(n) * BigInt::from(sign) * (BigInt::from(1) << (n + 1)));
    Ok(coeff * lambda.pow(2 * i64::from(n)) / (lambda - Rational::one()).pow(2 * i64::from(n) + 1))
}

/// One computed Y value together with the parameters that produced it.
#[derive(Clone, Debug, Serialize)]
pub struct YValue {
    pub n: u32,
    pub k: u32,
    pub lambda: Rational,
    pub value: Rational,
}

impl YValue {
    pub fn compute(n: u32, k: u32, lambda: &Rational) -> Result<Self, Error> {
        Ok(YValue {
            n,
            k,
            lambda: lambda.clone(),
            value: y_number(n, k, lambda)?,
        })
    }
}

/// Which family a [`FamilyTable`] holds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    Stirling1,
    ApostolBernoulli,
    ApostolEuler,
}

/// Memoised rectangular table of exact family values, built in one pass and
/// immutable afterwards (requests beyond the bounds rebuild rather than
/// mutate). `values[n][k]` is the entry at index `n` and order/argument `k`.
#[derive(Clone, Debug)]
pub struct FamilyTable {
    kind: FamilyKind,
    parameter: Option<Rational>,
    max_n: u32,
    max_k: u32,
    values: Vec<Vec<Rational>>,
}

impl FamilyTable {
    /// `S_1(n, m)` for `n <= max_n`, `m <= max_k`; entries are integers.
    pub fn stirling1(max_n: u32, max_k: u32) -> Self {
        let values = (0..=max_n)
            .map(|n| {
                (0..=max_k)
                    .map(|m| Rational::from(stirling1(n, m)))
                    .collect()
            })
            .collect();
        FamilyTable {
            kind: FamilyKind::Stirling1,
            parameter: None,
            max_n,
            max_k,
            values,
        }
    }

    /// `B_n^(k)(lambda)` for `n <= max_n`, `k <= max_k`.
    pub fn apostol_bernoulli(lambda: &Rational, max_n: u32, max_k: u32) -> Self {
        let by_order = apostol_bernoulli_table(max_n, max_k, lambda);
        FamilyTable {
            kind: FamilyKind::ApostolBernoulli,
            parameter: Some(lambda.clone()),
            max_n,
            max_k,
            values: transpose(by_order, max_n, max_k),
        }
    }

    /// `E_n^(k)(lambda)` for `n <= max_n`, `k <= max_k`; `lambda = -1` is
    /// rejected as a pole.
    pub fn apostol_euler(lambda: &Rational, max_n: u32, max_k: u32) -> Result<Self, Error> {
        let by_order = apostol_euler_table(max_n, max_k, lambda)?;
        Ok(FamilyTable {
            kind: FamilyKind::ApostolEuler,
            parameter: Some(lambda.clone()),
            max_n,
            max_k,
            values: transpose(by_order, max_n, max_k),
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn parameter(&self) -> Option<&Rational> {
        self.parameter.as_ref()
    }

    pub fn max_n(&self) -> u32 {
        self.max_n
    }

    pub fn max_k(&self) -> u32 {
        self.max_k
    }

    /// Table entry; panics when out of the built bounds.
    pub fn get(&self, n: u32, k: u32) -> &Rational {
        &self.values[n as usize][k as usize]
    }
}

/// Order-major rows into (n, k)-indexed rows.
fn transpose(by_order: Vec<Vec<Rational>>, max_n: u32, max_k: u32) -> Vec<Vec<Rational>> {
    (0..=max_n as usize)
        .map(|n| {
            (0..=max_k as usize)
                .map(|k| by_order[k][n].clone())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{expand_apostol_gf, expand_y_gf, ApostolKind};

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    fn grid_lambdas() -> Vec<Rational> {
        vec![r(-2, 1), r(-1, 1), r(-1, 2), r(1, 3), r(2, 1), r(5, 2), r(3, 1)]
    }

    #[test]
    fn y_number_paper_values() {
        // Y_2^(2)(lambda) = 24 lambda^4/(lambda-1)^4 evaluated at 2.
        assert_eq!(y_number(2, 2, &r(2, 1)).unwrap(), r(384, 1));
        // Y_3^(3)(2) = -480 * 64.
        assert_eq!(y_number(3, 3, &r(2, 1)).unwrap(), r(-30720, 1));
        assert_eq!(y_number(0, 1, &r(3, 1)).unwrap(), r(1, 1));
        assert_eq!(y_number(1, 0, &r(2, 1)).unwrap(), Rational::zero());
        assert_eq!(y_number(0, 0, &r(2, 1)).unwrap(), Rational::one());
        assert_eq!(
            y_number(1, 1, &r(1, 1)),
            Err(Error::Pole { at: r(1, 1) })
        );
        // lambda = 0: Y_0^(k)(0) = (-2)^k and Y_n^(k)(0) = 0 for n >= 1.
        assert_eq!(y_number(0, 3, &Rational::zero()).unwrap(), r(-8, 1));
        assert_eq!(y_number(2, 3, &Rational::zero()).unwrap(), Rational::zero());
    }

    #[test]
    fn y_recurrence_examples_and_route_agreement() {
        assert_eq!(y_number_recurrence(1, 2, &r(3, 1)).unwrap(), r(-9, 1));
        assert_eq!(y_number_recurrence(0, 3, &r(3, 1)).unwrap(), r(1, 1));
        for lambda in grid_lambdas() {
            for k in 0..=6u32 {
                for n in 0..=20u32 {
                    assert_eq!(
                        y_number(n, k, &lambda).unwrap(),
                        y_number_recurrence(n, k, &lambda).unwrap(),
                        "route mismatch at n={n}, k={k}, lambda={lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn y_routes_match_series_and_ratfun() {
        // Closed form == series oracle == rational-function evaluation,
        // exhaustively over the grid.
        for lambda in grid_lambdas() {
            for k in 0..=6u32 {
                let series = expand_y_gf(k, &lambda, 21).unwrap();
                for n in 0..=20u32 {
                    let closed = y_number(n, k, &lambda).unwrap();
                    assert_eq!(closed, series[n as usize], "series route n={n} k={k}");
                    assert_eq!(
                        closed,
                        y_number_ratfun(n, k).eval(&lambda).unwrap(),
                        "ratfun route n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn y_ratfun_paper_expressions() {
        let expected_12 = RationalFunction::new(
            Polynomial::monomial(r(-8, 1), 2),
            Polynomial::from_ints(&[-1, 1]).pow(3),
        )
        .unwrap();
        assert_eq!(y_number_ratfun(1, 2), expected_12);
        assert_eq!(y_number_ratfun(0, 0), RationalFunction::one());
        let expected_23 = RationalFunction::new(
            Polynomial::monomial(r(96, 1), 4),
            Polynomial::from_ints(&[-1, 1]).pow(5),
        )
        .unwrap();
        assert_eq!(y_number_ratfun(2, 3), expected_23);
    }

    #[test]
    fn y_number_k1_reduction() {
        // Y_n(lambda) = (-1)^n 2 n!/(lambda-1) (lambda^2/(lambda-1))^n.
        for lambda in grid_lambdas() {
            let lm1 = &lambda - Rational::one();
            for n in 0..=20u32 {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let expected = Rational::from(2 * sign * factorial(n))
                    / &lm1
                    * (&lambda * &lambda / &lm1).pow(i64::from(n));
                assert_eq!(y_number(n, 1, &lambda).unwrap(), expected, "n={n}");
            }
        }
    }

    #[test]
    fn y_polynomial_examples() {
        // x = 0 recovers the numbers.
        assert_eq!(
            y_polynomial(3, 2, &Rational::zero(), &r(5, 2)).unwrap(),
            y_number(3, 2, &r(5, 2)).unwrap()
        );
        // n = 0: the sum collapses to Y_0^(2)(2) = 4.
        assert_eq!(y_polynomial(0, 2, &r(7, 1), &r(2, 1)).unwrap(), r(4, 1));
        // Hand value: Y_1(1; 3) = C(1,0)*3*(1)_1*Y_0 + Y_1 = 3 - 9/2.
        assert_eq!(y_polynomial(1, 1, &r(1, 1), &r(3, 1)).unwrap(), r(-3, 2));
    }

    #[test]
    fn stirling1_triangle_values() {
        assert_eq!(stirling1(4, 2), BigInt::from(11));
        assert_eq!(stirling1(7, 7), BigInt::from(1));
        assert_eq!(stirling1(5, 1), BigInt::from(24));
        assert_eq!(stirling1(3, 5), BigInt::from(0));
        assert_eq!(stirling1(0, 0), BigInt::from(1));
    }

    #[test]
    fn stirling1_generates_falling_factorials() {
        // sum_k S_1(n,k) x^k = (x)_n for x in -3..=5, n <= 15.
        for x in -3i64..=5 {
            let xr = Rational::from(x);
            for n in 0..=15u32 {
                let mut sum = Rational::zero();
                for k in 0..=n {
                    sum += &(Rational::from(stirling1(n, k)) * xr.pow(i64::from(k)));
                }
                assert_eq!(sum, falling_factorial(&xr, n), "x={x}, n={n}");
            }
        }
    }

    #[test]
    fn apostol_bernoulli_examples() {
        assert_eq!(apostol_bernoulli(0, 1, &r(2, 1)), Rational::zero());
        assert_eq!(apostol_bernoulli(1, 1, &r(2, 1)), Rational::one());
        // Classical branch at lambda = 1: B_2 = 1/6, B_1 = -1/2.
        assert_eq!(apostol_bernoulli(2, 1, &r(1, 1)), r(1, 6));
        assert_eq!(apostol_bernoulli(1, 1, &r(1, 1)), r(-1, 2));
        assert_eq!(apostol_bernoulli(0, 0, &r(5, 1)), Rational::one());
    }

    #[test]
    fn apostol_euler_examples() {
        assert_eq!(apostol_euler(0, 1, &r(1, 1)).unwrap(), Rational::one());
        assert_eq!(apostol_euler(0, 1, &r(3, 1)).unwrap(), r(1, 2));
        assert_eq!(apostol_euler(1, 1, &r(1, 1)).unwrap(), r(-1, 2));
        assert_eq!(
            apostol_euler(2, 1, &r(-1, 1)),
            Err(Error::Pole { at: r(-1, 1) })
        );
    }

    #[test]
    fn apostol_families_match_series_oracle() {
        for lambda in grid_lambdas() {
            for k in 0..=4u32 {
                if !lambda.is_one() {
                    let series =
                        expand_apostol_gf(ApostolKind::Bernoulli, k, &lambda, 17).unwrap();
                    for n in 0..=16u32 {
                        assert_eq!(
                            apostol_bernoulli(n, k, &lambda),
                            series[n as usize],
                            "bernoulli n={n} k={k} lambda={lambda}"
                        );
                    }
                }
                if lambda != r(-1, 1) {
                    let series = expand_apostol_gf(ApostolKind::Euler, k, &lambda, 17).unwrap();
                    for n in 0..=16u32 {
                        assert_eq!(
                            apostol_euler(n, k, &lambda).unwrap(),
                            series[n as usize],
                            "euler n={n} k={k} lambda={lambda}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn catalan_both_routes_to_200() {
        assert_eq!(catalan(0), BigInt::from(1));
        assert_eq!(catalan(3), BigInt::from(5));
        assert_eq!(catalan(10), BigInt::from(16796));
        // Ratio recurrence C_n/C_{n-1} = (4n-2)/(n+1) from C_0 = 1.
        let mut by_recurrence = BigInt::from(1);
        for n in 1..=200u32 {
            by_recurrence = by_recurrence * (4 * i64::from(n) - 2) / (i64::from(n) + 1);
            assert_eq!(catalan(n), by_recurrence, "n={n}");
        }
    }

    #[test]
    fn bernstein_examples() {
        // B_0^1(lambda) = 1 - lambda.
        let lambda = r(2, 5);
        assert_eq!(bernstein(0, 1, &lambda), Rational::one() - &lambda);
        assert_eq!(bernstein(1, 2, &r(1, 2)), r(1, 2));
        assert_eq!(bernstein(5, 2, &lambda), Rational::zero());
        // Partition of unity for k <= 10.
        for k in 0..=10u32 {
            let sum: Rational = (0..=k).map(|j| bernstein(j, k, &lambda)).sum();
            assert_eq!(sum, Rational::one(), "k={k}");
        }
    }

    #[test]
    fn v_number_paper_values() {
        let minus_one = r(-1, 1);
        assert_eq!(v_number(1, &minus_one).unwrap(), r(1, 2));
        assert_eq!(v_number(5, &minus_one).unwrap(), r(21, 16));
        assert_eq!(v_number(10, &minus_one).unwrap(), r(-4199, 256));
        assert_eq!(v_number(0, &r(1, 1)), Err(Error::Pole { at: r(1, 1) }));
    }

    #[test]
    fn v_number_routes_agree_to_40() {
        for lambda in grid_lambdas() {
            for n in 0..=40u32 {
                assert_eq!(
                    v_number(n, &lambda).unwrap(),
                    v_number_catalan(n, &lambda).unwrap(),
                    "n={n} lambda={lambda}"
                );
            }
        }
    }

    #[test]
    fn family_tables() {
        let s1 = FamilyTable::stirling1(10, 10);
        assert_eq!(s1.get(4, 2), &r(11, 1));
        // Stirling entries are integers.
        for n in 0..=10 {
            for k in 0..=10 {
                assert!(s1.get(n, k).is_integer());
            }
        }
        let ab = FamilyTable::apostol_bernoulli(&r(2, 1), 8, 3);
        assert_eq!(ab.get(1, 1), &Rational::one());
        assert_eq!(ab.get(0, 0), &Rational::one());
        assert_eq!(ab.kind(), FamilyKind::ApostolBernoulli);
        assert_eq!(ab.parameter(), Some(&r(2, 1)));
        let ae = FamilyTable::apostol_euler(&r(3, 1), 8, 3).unwrap();
        assert_eq!(ae.get(0, 1), &r(1, 2));
        assert!(FamilyTable::apostol_euler(&r(-1, 1), 4, 2).is_err());
    }
}
