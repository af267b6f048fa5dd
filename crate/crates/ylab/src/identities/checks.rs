//! The identity catalog: every theorem and corollary as one executable exact
//! check.
//!
//! Conventions used throughout:
//!
//! - grid points are enumerated lexicographically (lambda, orders, n, x) and
//!   the enumeration order defines "first" for counterexample reporting;
//! - a check whose natural domain starts above the grid's lower bound clamps
//!   the range (e.g. recurrences need `n >= 1`, convolution orders need
//!   `k_i >= 1`);
//! - `lambda = 1` never reaches a check (grid invariant), `lambda = -1` is
//!   handled by the runner for the one check that excludes it.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::{
    binomial, factorial, falling_factorial, rising_factorial, Polynomial, Rational,
    RationalFunction,
};
use crate::families::{
    bernstein, catalan, v_number, v_number_catalan, y_number, y_number_ratfun, y_polynomial,
};
use crate::series;

use super::{scan, CheckContext, CheckDef, Counterexample, SignVariant};

pub(super) static CATALOG: &[CheckDef] = &[
    CheckDef {
        id: "explicit-vs-series",
        description: "closed form of Y_n^(k) equals its generating-function expansion",
        excludes_minus_one: false,
        run: explicit_vs_series,
    },
    CheckDef {
        id: "recurrence-basic",
        description: "first-order recurrence for Y_n^(k) from the seed 2^k/(lambda-1)^k",
        excludes_minus_one: false,
        run: recurrence_basic,
    },
    CheckDef {
        id: "recurrence-new7",
        description: "alternating k-term recurrence for Y_n^(k) sums to zero",
        excludes_minus_one: false,
        run: recurrence_new7,
    },
    CheckDef {
        id: "poly-from-numbers",
        description: "Y_n^(k)(x;lambda) from the numbers equals the product-series expansion",
        excludes_minus_one: false,
        run: poly_from_numbers,
    },
    CheckDef {
        id: "alt-convolution",
        description: "alternating self-convolution of Y_n in closed form",
        excludes_minus_one: false,
        run: alt_convolution,
    },
    CheckDef {
        id: "plain-convolution",
        description: "plain self-convolution of Y_n in closed form",
        excludes_minus_one: false,
        run: plain_convolution,
    },
    CheckDef {
        id: "inverse-binomial-sury",
        description: "sum of inverse binomials equals (n+1)/2^n times the 2^j/(j+1) sum",
        excludes_minus_one: false,
        run: inverse_binomial_sury,
    },
    CheckDef {
        id: "inverse-binomial-alt",
        description: "alternating sum of inverse binomials in closed form",
        excludes_minus_one: false,
        run: inverse_binomial_alt,
    },
    CheckDef {
        id: "bernstein-relation",
        description: "Bernstein-basis form of the alternating recurrence",
        excludes_minus_one: false,
        run: bernstein_relation,
    },
    CheckDef {
        id: "s1-apostol-bernoulli",
        description: "Y_v from Stirling-1 and Apostol-Bernoulli numbers at order k = 1, \
                      where the stated B_{m+1}/(m+1) form holds (sign-variant aware)",
        excludes_minus_one: false,
        run: s1_apostol_bernoulli,
    },
    CheckDef {
        id: "s1-apostol-bernoulli-general",
        description: "higher-order Stirling-1/Apostol-Bernoulli bridge via the corrected \
                      interpolation m!/(m+k)! B_{m+k}^(k)",
        excludes_minus_one: false,
        run: s1_apostol_bernoulli_general,
    },
    CheckDef {
        id: "s1-apostol-euler",
        description: "Y_m^(k)(-lambda) from Stirling-1 and Apostol-Euler numbers",
        excludes_minus_one: true,
        run: s1_apostol_euler,
    },
    CheckDef {
        id: "derivative-t-shift",
        description: "index shift Y_{n+v}^(k) via the v-th t-derivative of the generating function",
        excludes_minus_one: false,
        run: derivative_t_shift,
    },
    CheckDef {
        id: "derivative-lambda",
        description: "lambda-derivative of Y_n^(k) as rational functions (symbolic equality)",
        excludes_minus_one: false,
        run: derivative_lambda,
    },
    CheckDef {
        id: "multi-convolution",
        description: "Y of a summed order equals the multinomial convolution (m = 2, 3)",
        excludes_minus_one: false,
        run: multi_convolution,
    },
    CheckDef {
        id: "vandermonde-multi",
        description: "multi-order Vandermonde convolution of binomials (m = 2, 3)",
        excludes_minus_one: false,
        run: vandermonde_multi,
    },
    CheckDef {
        id: "vandermonde-m2",
        description: "two-order Vandermonde convolution, literal form",
        excludes_minus_one: false,
        run: vandermonde_m2,
    },
    CheckDef {
        id: "vandermonde-m3",
        description: "three-order Vandermonde convolution, literal form",
        excludes_minus_one: false,
        run: vandermonde_m3,
    },
    CheckDef {
        id: "c3n-half",
        description: "C(3n,n) as 3/2 of a shifted binomial convolution",
        excludes_minus_one: false,
        run: c3n_half,
    },
    CheckDef {
        id: "c3n-shift",
        description: "C(3n,n) as a shifted binomial convolution",
        excludes_minus_one: false,
        run: c3n_shift,
    },
    CheckDef {
        id: "catalan-from-c3n",
        description: "Catalan numbers from C(3n,n) minus the partial convolution",
        excludes_minus_one: false,
        run: catalan_from_c3n,
    },
    CheckDef {
        id: "simsek-catalan",
        description: "Catalan numbers as an alternating inverse-weighted binomial sum",
        excludes_minus_one: false,
        run: simsek_catalan,
    },
    CheckDef {
        id: "final-combinatorial",
        description: "C(3n,n) from the alternating sum plus the partial convolution",
        excludes_minus_one: false,
        run: final_combinatorial,
    },
    CheckDef {
        id: "v-definition-vs-catalan",
        description: "V_n by definition equals the Catalan closed form",
        excludes_minus_one: false,
        run: v_definition_vs_catalan,
    },
    CheckDef {
        id: "v-ratio",
        description: "ratio recurrence V_{n+1}/V_n = -((8n+4)/(n+2)) (lambda/(lambda-1))^2",
        excludes_minus_one: false,
        run: v_ratio,
    },
    CheckDef {
        id: "chu-vandermonde",
        description: "Chu-Vandermonde identity for nonnegative integer arguments",
        excludes_minus_one: false,
        run: chu_vandermonde,
    },
];

// ---------------------------------------------------------------------------
// shared helpers

type Outcome = (u64, Option<Counterexample>);

/// Closed-form table `rows[k][n] = Y_n^(k)(lambda)`.
fn y_table(lambda: &Rational, k_max: u32, n_max: u32) -> Vec<Vec<Rational>> {
    (0..=k_max)
        .map(|k| {
            (0..=n_max)
                .map(|n| y_number(n, k, lambda).expect("grid excludes the pole"))
                .collect()
        })
        .collect()
}

/// Pascal table for the binomial-heavy integer checks.
struct Binomials {
    rows: Vec<Vec<BigInt>>,
}

impl Binomials {
    fn new(max_n: u32) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n as usize + 1);
        for n in 0..=max_n as usize {
            let mut row = vec![BigInt::from(1); n + 1];
            for j in 1..n {
                row[j] = &rows[n - 1][j - 1] + &rows[n - 1][j];
            }
            rows.push(row);
        }
        Binomials { rows }
    }

    /// Table lookup with the generalised conventions; indices outside the
    /// table (negative upper index) fall back to the generic routine.
    fn get(&self, n: i64, j: i64) -> BigInt {
        if j < 0 {
            return BigInt::zero();
        }
        if n >= 0 && (n as usize) < self.rows.len() {
            if j > n {
                BigInt::zero()
            } else {
                self.rows[n as usize][j as usize].clone()
            }
        } else {
            binomial(n, j)
        }
    }
}

fn rat(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n)
}

/// `(-1)^n` as a rational.
fn sign(n: u32) -> Rational {
    if n % 2 == 0 {
        Rational::one()
    } else {
        Rational::from(-1)
    }
}

fn n_span(ctx: &CheckContext<'_>, lo: u32) -> std::ops::RangeInclusive<u32> {
    lo.max(ctx.grid.n_min)..=ctx.grid.n_max
}

fn k_span(ctx: &CheckContext<'_>, lo: u32) -> std::ops::RangeInclusive<u32> {
    lo.max(ctx.grid.k_min)..=ctx.grid.k_max
}

// ---------------------------------------------------------------------------
// 1. explicit-vs-series

fn explicit_vs_series(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let order = g.n_max as usize + 1;
    let expansions: Vec<Vec<Vec<Rational>>> = g
        .lambdas
        .iter()
        .map(|l| {
            k_span(ctx, 0)
                .map(|k| series::expand_y_gf(k, l, order).expect("grid excludes the pole"))
                .collect()
        })
        .collect();
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for (ki, _) in k_span(ctx, 0).enumerate() {
            for n in n_span(ctx, 0) {
                points.push((li, ki, n));
            }
        }
    }
    let k_lo = *k_span(ctx, 0).start();
    scan(ctx.mode, &points, |&(li, ki, n)| {
        let lambda = &g.lambdas[li];
        let k = k_lo + ki as u32;
        let lhs = y_number(n, k, lambda).expect("grid excludes the pole");
        let rhs = &expansions[li][ki][n as usize];
        (&lhs != rhs).then(|| {
            Counterexample::new(format!("n={n}, k={k}, lambda={lambda}"), &lhs, rhs)
        })
    })
}

// ---------------------------------------------------------------------------
// 2. recurrence-basic

fn recurrence_basic(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for k in k_span(ctx, 0) {
            for n in n_span(ctx, 0) {
                points.push((li, k, n));
            }
        }
    }
    scan(ctx.mode, &points, |&(li, k, n)| {
        let lambda = &g.lambdas[li];
        let lhs = y_number(n, k, lambda).expect("grid excludes the pole");
        let rhs = crate::families::y_number_recurrence(n, k, lambda).expect("pole excluded");
        (lhs != rhs).then(|| {
            Counterexample::new(format!("n={n}, k={k}, lambda={lambda}"), &lhs, &rhs)
        })
    })
}

// ---------------------------------------------------------------------------
// 3. recurrence-new7

fn recurrence_new7(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for k in k_span(ctx, 0) {
            for n in n_span(ctx, 1) {
                points.push((li, k, n));
            }
        }
    }
    if points.is_empty() {
        return (0, None);
    }
    let tables: Vec<Vec<Vec<Rational>>> = g
        .lambdas
        .iter()
        .map(|l| y_table(l, g.k_max, g.n_max))
        .collect();
    scan(ctx.mode, &points, |&(li, k, n)| {
        let lambda = &g.lambdas[li];
        let one_minus = Rational::one() - lambda;
        let mut lhs = Rational::zero();
        for j in 0..=k.min(n) {
            // (n)_j vanishes for j > n, so those terms are skipped.
            let fall = falling_factorial(&rat(n), j);
            let c = rat(binomial(i64::from(k), i64::from(j)));
            let term = sign(k - j)
                * fall
                * c
                * lambda.pow(2 * i64::from(j))
                * one_minus.pow(i64::from(k - j))
                * &tables[li][k as usize][(n - j) as usize];
            lhs += &term;
        }
        (!lhs.is_zero()).then(|| {
            Counterexample::new(format!("n={n}, k={k}, lambda={lambda}"), &lhs, "0")
        })
    })
}

// ---------------------------------------------------------------------------
// 4. poly-from-numbers

fn poly_from_numbers(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let order = g.n_max as usize + 1;
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for xi in 0..g.xs.len() {
            for (ki, _) in k_span(ctx, 0).enumerate() {
                for n in n_span(ctx, 0) {
                    points.push((li, xi, ki, n));
                }
            }
        }
    }
    if points.is_empty() {
        return (0, None);
    }
    let k_lo = *k_span(ctx, 0).start();
    let expansions: Vec<Vec<Vec<Vec<Rational>>>> = g
        .lambdas
        .iter()
        .map(|l| {
            g.xs.iter()
                .map(|x| {
                    k_span(ctx, 0)
                        .map(|k| {
                            series::expand_y_poly_gf(k, x, l, order)
                                .expect("grid excludes the pole")
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    scan(ctx.mode, &points, |&(li, xi, ki, n)| {
        let lambda = &g.lambdas[li];
        let x = &g.xs[xi];
        let k = k_lo + ki as u32;
        let lhs = y_polynomial(n, k, x, lambda).expect("grid excludes the pole");
        let rhs = &expansions[li][xi][ki][n as usize];
        (&lhs != rhs).then(|| {
            Counterexample::new(format!("n={n}, k={k}, x={x}, lambda={lambda}"), &lhs, rhs)
        })
    })
}

// ---------------------------------------------------------------------------
// 5./6. self-convolutions of the first-order numbers

fn alt_convolution(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for n in n_span(ctx, 0) {
            points.push((li, n));
        }
    }
    if points.is_empty() {
        return (0, None);
    }
    let rows: Vec<Vec<Rational>> = g
        .lambdas
        .iter()
        .map(|l| y_table(l, 1, g.n_max).pop().unwrap())
        .collect();
    scan(ctx.mode, &points, |&(li, n)| {
        let lambda = &g.lambdas[li];
        let row = &rows[li];
        let mut lhs = Rational::zero();
        for j in 0..=n {
            lhs += &(sign(j) * &row[j as usize] * &row[(n - j) as usize]);
        }
        // 4 lambda^(2n) (1 + (-1)^n) (n+1)! / ((n+2)(lambda-1)^(n+2))
        let rhs = rat(4 * factorial(n + 1))
            * lambda.pow(2 * i64::from(n))
            * (Rational::one() + sign(n))
            / (rat(i64::from(n) + 2) * (lambda - Rational::one()).pow(i64::from(n) + 2));
        (lhs != rhs).then(|| Counterexample::new(format!("n={n}, lambda={lambda}"), &lhs, &rhs))
    })
}

fn plain_convolution(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for n in n_span(ctx, 0) {
            points.push((li, n));
        }
    }
    if points.is_empty() {
        return (0, None);
    }
    let rows: Vec<Vec<Rational>> = g
        .lambdas
        .iter()
        .map(|l| y_table(l, 1, g.n_max).pop().unwrap())
        .collect();
    scan(ctx.mode, &points, |&(li, n)| {
        let lambda = &g.lambdas[li];
        let row = &rows[li];
        let mut lhs = Rational::zero();
        for j in 0..=n {
            lhs += &(&row[j as usize] * &row[(n - j) as usize]);
        }
        let geom: Rational = (0..=n)
            .map(|j| Rational::from(2).pow(i64::from(j)) / rat(i64::from(j) + 1))
            .sum();
        let lm1 = lambda - Rational::one();
        let rhs = sign(n) * rat(factorial(n + 1))
            / (Rational::from(2).pow(i64::from(n) - 2) * (&lm1 * &lm1))
            * (lambda * lambda / &lm1).pow(i64::from(n))
            * geom;
        (lhs != rhs).then(|| Counterexample::new(format!("n={n}, lambda={lambda}"), &lhs, &rhs))
    })
}

// ---------------------------------------------------------------------------
// 7./8. standalone inverse-binomial identities

fn inverse_binomial_sury(ctx: &CheckContext<'_>) -> Outcome {
    let points: Vec<u32> = n_span(ctx, 0).collect();
    scan(ctx.mode, &points, |&n| {
        let lhs: Rational = (0..=n)
            .map(|j| {
                rat(binomial(i64::from(n), i64::from(j)))
                    .recip()
                    .expect("binomial in range is nonzero")
            })
            .sum();
        let geom: Rational = (0..=n)
            .map(|j| Rational::from(2).pow(i64::from(j)) / rat(i64::from(j) + 1))
            .sum();
        let rhs = rat(i64::from(n) + 1) / Rational::from(2).pow(i64::from(n)) * geom;
        (lhs != rhs).then(|| Counterexample::new(format!("n={n}"), &lhs, &rhs))
    })
}

fn inverse_binomial_alt(ctx: &CheckContext<'_>) -> Outcome {
    let points: Vec<u32> = n_span(ctx, 0).collect();
    scan(ctx.mode, &points, |&n| {
        let lhs: Rational = (0..=n)
            .map(|j| {
                sign(j)
                    * rat(binomial(i64::from(n), i64::from(j)))
                        .recip()
                        .expect("binomial in range is nonzero")
            })
            .sum();
        let rhs =
            (Rational::one() + sign(n)) * rat(i64::from(n) + 1) / rat(i64::from(n) + 2);
        (lhs != rhs).then(|| Counterexample::new(format!("n={n}"), &lhs, &rhs))
    })
}

// ---------------------------------------------------------------------------
// 9. bernstein-relation

fn bernstein_relation(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for k in k_span(ctx, 0) {
            for n in n_span(ctx, 1) {
                points.push((li, k, n));
            }
        }
    }
    if points.is_empty() {
        return (0, None);
    }
    let tables: Vec<Vec<Vec<Rational>>> = g
        .lambdas
        .iter()
        .map(|l| y_table(l, g.k_max, g.n_max))
        .collect();
    scan(ctx.mode, &points, |&(li, k, n)| {
        let lambda = &g.lambdas[li];
        let mut lhs = Rational::zero();
        for j in 0..=k.min(n) {
            let term = sign(k - j)
                * falling_factorial(&rat(n), j)
                * lambda.pow(i64::from(j))
                * bernstein(j, k, lambda)
                * &tables[li][k as usize][(n - j) as usize];
            lhs += &term;
        }
        (!lhs.is_zero()).then(|| {
            Counterexample::new(format!("n={n}, k={k}, lambda={lambda}"), &lhs, "0")
        })
    })
}

// ---------------------------------------------------------------------------
// 10./11. Stirling-1 bridges to the Apostol families

/// The bridge in its stated `B_{m+1}^(k)/(m+1)` form. That form relies on an
/// interpolation that is an identity only at first order — `B_n^(k)(lambda)`
/// vanishes for every `n < k` when `lambda != 1`, so for `k >= 2` the right
/// side degenerates (e.g. it is 0 at `v = 0`) and no sign convention can
/// rescue it. The check therefore runs on `k = 1`, where the sign question
/// between the two printed conventions is meaningful; the all-orders form
/// lives in `s1-apostol-bernoulli-general`.
fn s1_apostol_bernoulli(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    if k_span(ctx, 1).contains(&1) {
        for li in 0..g.lambdas.len() {
            for v in n_span(ctx, 0) {
                points.push((li, 1u32, v));
            }
        }
    }
    if points.is_empty() {
        return (0, None);
    }
    // B_{m+1} needs indices up to n_max + 1.
    let b_tables: Vec<crate::families::FamilyTable> = g
        .lambdas
        .iter()
        .map(|l| crate::families::FamilyTable::apostol_bernoulli(l, g.n_max + 1, 1))
        .collect();
    let s1 = crate::families::FamilyTable::stirling1(g.n_max, g.n_max);
    let variant = ctx.options.sign_variant;
    scan(ctx.mode, &points, |&(li, k, v)| {
        let lambda = &g.lambdas[li];
        let lhs = y_number(v, k, lambda).expect("grid excludes the pole");
        let mut total = Rational::zero();
        for m in 0..=v {
            let s = s1.get(v, m);
            if s.is_zero() {
                continue;
            }
            total += &(s * b_tables[li].get(m + 1, k) / rat(i64::from(m) + 1));
        }
        let variant_sign = match variant {
            SignVariant::Theorem => sign(k + 1),
            SignVariant::Proof => sign(k),
        };
        let rhs = variant_sign
            * Rational::from(2).pow(i64::from(k))
            * lambda.pow(i64::from(v))
            * total;
        (lhs != rhs).then(|| {
            Counterexample::new(
                format!("v={v}, k={k}, lambda={lambda}, sign={}", variant.describe()),
                &lhs,
                &rhs,
            )
        })
    })
}

/// All-orders form of the bridge:
/// `Y_v^(k) = 2^k lambda^v sum_m S_1(v,m) (m!/(m+k)!) B_{m+k}^(k)(lambda)`,
/// obtained by combining the log-substitution expansion with the correct
/// closed form of `sum_n C(n+k-1,n) lambda^n n^m` (see
/// `approx::zeta_interpolation_target`).
fn s1_apostol_bernoulli_general(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for k in k_span(ctx, 1) {
            for v in n_span(ctx, 0) {
                points.push((li, k, v));
            }
        }
    }
    if points.is_empty() {
        return (0, None);
    }
    // B_{m+k}^(k) needs indices up to n_max + k_max.
    let b_tables: Vec<crate::families::FamilyTable> = g
        .lambdas
        .iter()
        .map(|l| crate::families::FamilyTable::apostol_bernoulli(l, g.n_max + g.k_max, g.k_max))
        .collect();
    let s1 = crate::families::FamilyTable::stirling1(g.n_max, g.n_max);
    scan(ctx.mode, &points, |&(li, k, v)| {
        let lambda = &g.lambdas[li];
        let lhs = y_number(v, k, lambda).expect("grid excludes the pole");
        let mut total = Rational::zero();
        for m in 0..=v {
            let s = s1.get(v, m);
            if s.is_zero() {
                continue;
            }
            let scale = rat(factorial(m)) / rat(factorial(m + k));
            total += &(s * scale * b_tables[li].get(m + k, k));
        }
        let rhs = Rational::from(2).pow(i64::from(k)) * lambda.pow(i64::from(v)) * total;
        (lhs != rhs).then(|| {
            Counterexample::new(format!("v={v}, k={k}, lambda={lambda}"), &lhs, &rhs)
        })
    })
}

fn s1_apostol_euler(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for k in k_span(ctx, 0) {
            for m in n_span(ctx, 0) {
                points.push((li, k, m));
            }
        }
    }
    if points.is_empty() {
        return (0, None);
    }
    let e_tables: Vec<crate::families::FamilyTable> = g
        .lambdas
        .iter()
        .map(|l| {
            crate::families::FamilyTable::apostol_euler(l, g.n_max, g.k_max)
                .expect("runner removed lambda = -1")
        })
        .collect();
    let s1 = crate::families::FamilyTable::stirling1(g.n_max, g.n_max);
    scan(ctx.mode, &points, |&(li, k, m)| {
        let lambda = &g.lambdas[li];
        let neg_lambda = -lambda;
        let lhs = y_number(m, k, &neg_lambda).expect("lambda != -1 on this check");
        let mut total = Rational::zero();
        for n in 0..=m {
            let s = s1.get(m, n);
            if s.is_zero() {
                continue;
            }
            total += &(e_tables[li].get(n, k) * s);
        }
        let rhs = sign(m + k) * lambda.pow(i64::from(m)) * total;
        (lhs != rhs).then(|| {
            Counterexample::new(format!("m={m}, k={k}, lambda={lambda}"), &lhs, &rhs)
        })
    })
}

// ---------------------------------------------------------------------------
// 12./13. derivative identities

fn derivative_t_shift(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for k in k_span(ctx, 0) {
            for v in k_span(ctx, 0) {
                for n in n_span(ctx, 0) {
                    points.push((li, k, v, n));
                }
            }
        }
    }
    if points.is_empty() {
        return (0, None);
    }
    let tables: Vec<Vec<Vec<Rational>>> = g
        .lambdas
        .iter()
        .map(|l| y_table(l, 2 * g.k_max, g.n_max + g.k_max))
        .collect();
    scan(ctx.mode, &points, |&(li, k, v, n)| {
        let lambda = &g.lambdas[li];
        let table = &tables[li];
        let lhs = &table[k as usize][(n + v) as usize];
        let rhs = sign(v)
            * rising_factorial(&rat(k), v)
            * lambda.pow(2 * i64::from(v))
            / Rational::from(2).pow(i64::from(v))
            * &table[(k + v) as usize][n as usize];
        (lhs != &rhs).then(|| {
            Counterexample::new(format!("n={n}, v={v}, k={k}, lambda={lambda}"), lhs, &rhs)
        })
    })
}

fn derivative_lambda(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for k in k_span(ctx, 0) {
        for n in n_span(ctx, 0) {
            points.push((k, n));
        }
    }
    scan(ctx.mode, &points, |&(k, n)| {
        // Symbolic level: d/dlambda Y_n^(k) as a canonical rational function.
        let lhs = y_number_ratfun(n, k).derivative();
        let mut inner = RationalFunction::from_polynomial(Polynomial::zero());
        if n >= 1 {
            let two_n_lambda = Polynomial::monomial(rat(2 * i64::from(n)), 1);
            inner = &inner
                + &(&RationalFunction::from_polynomial(two_n_lambda)
                    * &y_number_ratfun(n - 1, k + 1));
        }
        inner = &inner + &y_number_ratfun(n, k + 1);
        let rhs = inner.scale(&Rational::new(-i64::from(k), 2).unwrap());
        if lhs != rhs {
            return Some(Counterexample::new(format!("n={n}, k={k}"), &lhs, &rhs));
        }
        // Secondary pointwise assertion at every grid lambda.
        for lambda in &g.lambdas {
            let l = lhs.eval(lambda).expect("grid excludes the pole");
            let r = rhs.eval(lambda).expect("grid excludes the pole");
            if l != r {
                return Some(Counterexample::new(
                    format!("n={n}, k={k}, lambda={lambda}"),
                    &l,
                    &r,
                ));
            }
        }
        None
    })
}

// ---------------------------------------------------------------------------
// 14. multi-convolution (general-m machinery, run for m = 2 and 3)

fn multi_convolution(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let k_lo = *k_span(ctx, 1).start();
    let k_hi = *k_span(ctx, 1).end();
    if k_lo > k_hi {
        return (0, None);
    }
    let mut points: Vec<(usize, Vec<u32>, u32)> = Vec::new();
    for m in 2..=3usize {
        for li in 0..g.lambdas.len() {
            let mut ks = vec![k_lo; m];
            loop {
                for n in n_span(ctx, 0) {
                    points.push((li, ks.clone(), n));
                }
                if !advance_orders(&mut ks, k_lo, k_hi) {
                    break;
                }
            }
        }
    }
    if points.is_empty() {
        return (0, None);
    }
    let tables: Vec<Vec<Vec<Rational>>> = g
        .lambdas
        .iter()
        .map(|l| y_table(l, 3 * k_hi, g.n_max))
        .collect();
    let binoms = Binomials::new(g.n_max);
    scan(ctx.mode, &points, |(li, ks, n)| {
        let lambda = &g.lambdas[*li];
        let table = &tables[*li];
        let k_sum: u32 = ks.iter().sum();
        let lhs = &table[k_sum as usize][*n as usize];
        let mut rhs = Rational::zero();
        convolution_sum(
            &binoms,
            table,
            ks,
            0,
            *n,
            BigInt::from(1),
            &Rational::one(),
            &mut rhs,
        );
        (lhs != &rhs).then(|| {
            Counterexample::new(
                format!("n={n}, orders={ks:?}, lambda={lambda}"),
                lhs,
                &rhs,
            )
        })
    })
}

/// Adds `multinomial(n; v) * prod_i Y_{v_i}^(k_i)` over all compositions of
/// the remaining index, carrying the coefficient and partial product down the
/// recursion.
#[allow(clippy::too_many_arguments)]
fn convolution_sum(
    binoms: &Binomials,
    table: &[Vec<Rational>],
    ks: &[u32],
    idx: usize,
    n_left: u32,
    coeff: BigInt,
    partial: &Rational,
    acc: &mut Rational,
) {
    if idx == ks.len() - 1 {
        let term =
            rat(coeff) * partial * &table[ks[idx] as usize][n_left as usize];
        *acc += &term;
        return;
    }
    for v in 0..=n_left {
        let c = &coeff * binoms.get(i64::from(n_left), i64::from(v));
        let p = partial * &table[ks[idx] as usize][v as usize];
        convolution_sum(binoms, table, ks, idx + 1, n_left - v, c, &p, acc);
    }
}

/// Odometer increment over order tuples in `[lo, hi]^m`; false when wrapped.
fn advance_orders(ks: &mut [u32], lo: u32, hi: u32) -> bool {
    for slot in ks.iter_mut().rev() {
        if *slot < hi {
            *slot += 1;
            return true;
        }
        *slot = lo;
    }
    false
}

// ---------------------------------------------------------------------------
// 15. vandermonde-multi (general-m machinery)

fn vandermonde_multi(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let k_lo = *k_span(ctx, 1).start();
    let k_hi = *k_span(ctx, 1).end();
    if k_lo > k_hi {
        return (0, None);
    }
    let mut points: Vec<(Vec<u32>, u32)> = Vec::new();
    for m in 2..=3usize {
        let mut ks = vec![k_lo; m];
        loop {
            for n in n_span(ctx, 0) {
                points.push((ks.clone(), n));
            }
            if !advance_orders(&mut ks, k_lo, k_hi) {
                break;
            }
        }
    }
    let binoms = Binomials::new(3 * k_hi + g.n_max);
    scan(ctx.mode, &points, |(ks, n)| {
        let k_sum: u32 = ks.iter().sum();
        let lhs = binoms.get(i64::from(k_sum) + i64::from(*n) - 1, i64::from(*n));
        let mut rhs = BigInt::zero();
        vandermonde_sum(&binoms, ks, 0, *n, BigInt::from(1), &mut rhs);
        (lhs != rhs).then(|| {
            Counterexample::new(format!("n={n}, orders={ks:?}"), &lhs, &rhs)
        })
    })
}

fn vandermonde_sum(
    binoms: &Binomials,
    ks: &[u32],
    idx: usize,
    n_left: u32,
    partial: BigInt,
    acc: &mut BigInt,
) {
    if idx == ks.len() - 1 {
        *acc += partial
            * binoms.get(
                i64::from(ks[idx]) + i64::from(n_left) - 1,
                i64::from(n_left),
            );
        return;
    }
    for v in 0..=n_left {
        let factor = binoms.get(i64::from(ks[idx]) + i64::from(v) - 1, i64::from(v));
        vandermonde_sum(binoms, ks, idx + 1, n_left - v, &partial * factor, acc);
    }
}

// ---------------------------------------------------------------------------
// 16./17. literal two- and three-order Vandermonde corollaries

fn vandermonde_m2(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for k1 in k_span(ctx, 1) {
        for k2 in k_span(ctx, 1) {
            for n in n_span(ctx, 0) {
                points.push((k1, k2, n));
            }
        }
    }
    let binoms = Binomials::new(2 * g.k_max + g.n_max);
    scan(ctx.mode, &points, |&(k1, k2, n)| {
        let (k1, k2, n) = (i64::from(k1), i64::from(k2), i64::from(n));
        let lhs = binoms.get(k1 + k2 + n - 1, n);
        let mut rhs = BigInt::zero();
        for v in 0..=n {
            rhs += binoms.get(k1 + v - 1, v) * binoms.get(k2 + n - v - 1, n - v);
        }
        (lhs != rhs)
            .then(|| Counterexample::new(format!("n={n}, k1={k1}, k2={k2}"), &lhs, &rhs))
    })
}

fn vandermonde_m3(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for k1 in k_span(ctx, 1) {
        for k2 in k_span(ctx, 1) {
            for k3 in k_span(ctx, 1) {
                for n in n_span(ctx, 0) {
                    points.push((k1, k2, k3, n));
                }
            }
        }
    }
    let binoms = Binomials::new(3 * g.k_max + g.n_max);
    scan(ctx.mode, &points, |&(k1, k2, k3, n)| {
        let (k1, k2, k3, n) = (i64::from(k1), i64::from(k2), i64::from(k3), i64::from(n));
        let lhs = binoms.get(k1 + k2 + k3 + n - 1, n);
        let mut rhs = BigInt::zero();
        for v2 in 0..=n {
            for v1 in 0..=(n - v2) {
                rhs += binoms.get(k1 + v1 - 1, v1)
                    * binoms.get(k2 + n - v1 - v2 - 1, n - v1 - v2)
                    * binoms.get(k3 + v2 - 1, v2);
            }
        }
        (lhs != rhs).then(|| {
            Counterexample::new(format!("n={n}, k1={k1}, k2={k2}, k3={k3}"), &lhs, &rhs)
        })
    })
}

// ---------------------------------------------------------------------------
// 18.-22. lambda-free binomial/Catalan identities

fn c3n_half(ctx: &CheckContext<'_>) -> Outcome {
    // The 3/2 reduction uses C(3n-1, n) = (2/3) C(3n, n), which needs n >= 1.
    let points: Vec<u32> = n_span(ctx, 1).collect();
    let binoms = Binomials::new(3 * ctx.grid.n_max);
    scan(ctx.mode, &points, |&n| {
        let n = i64::from(n);
        let lhs = rat(binoms.get(3 * n, n));
        let mut total = BigInt::zero();
        for j in 0..=n {
            total += binoms.get(n + j - 1, j) * binoms.get(2 * n - j - 1, n - j);
        }
        let rhs = Rational::new(3, 2).unwrap() * rat(total);
        (lhs != rhs).then(|| Counterexample::new(format!("n={n}"), &lhs, &rhs))
    })
}

fn c3n_shift(ctx: &CheckContext<'_>) -> Outcome {
    let points: Vec<u32> = n_span(ctx, 0).collect();
    let binoms = Binomials::new(3 * ctx.grid.n_max);
    scan(ctx.mode, &points, |&n| {
        let n = i64::from(n);
        let lhs = binoms.get(3 * n, n);
        let mut rhs = BigInt::zero();
        for j in 0..=n {
            rhs += binoms.get(n + j, j) * binoms.get(2 * n - j - 1, n - j);
        }
        (lhs != rhs).then(|| Counterexample::new(format!("n={n}"), &lhs, &rhs))
    })
}

fn catalan_from_c3n(ctx: &CheckContext<'_>) -> Outcome {
    let points: Vec<u32> = n_span(ctx, 0).collect();
    let binoms = Binomials::new(3 * ctx.grid.n_max);
    scan(ctx.mode, &points, |&n| {
        let lhs = rat(catalan(n));
        let n = i64::from(n);
        let mut partial = BigInt::zero();
        for j in 0..n {
            partial += binoms.get(n + j, j) * binoms.get(2 * n - j - 1, n - j);
        }
        let rhs = (rat(binoms.get(3 * n, n)) - rat(partial)) / rat(n + 1);
        (lhs != rhs).then(|| Counterexample::new(format!("n={n}"), &lhs, &rhs))
    })
}

fn simsek_catalan(ctx: &CheckContext<'_>) -> Outcome {
    let points: Vec<u32> = n_span(ctx, 0).collect();
    let binoms = Binomials::new(2 * ctx.grid.n_max);
    scan(ctx.mode, &points, |&n| {
        let lhs = rat(catalan(n));
        let n_i = i64::from(n);
        let mut total = Rational::zero();
        for j in n_i..=2 * n_i {
            let term = rat(binoms.get(2 * n_i, j)) / rat(j + 1);
            total += &(sign(n + j as u32) * term);
        }
        let rhs = rat(2 * n_i + 1) / rat(n_i + 1) * total;
        (lhs != rhs).then(|| Counterexample::new(format!("n={n}"), &lhs, &rhs))
    })
}

fn final_combinatorial(ctx: &CheckContext<'_>) -> Outcome {
    let points: Vec<u32> = n_span(ctx, 0).collect();
    let binoms = Binomials::new(3 * ctx.grid.n_max);
    scan(ctx.mode, &points, |&n| {
        let n_i = i64::from(n);
        let lhs = rat(binoms.get(3 * n_i, n_i));
        let mut alternating = Rational::zero();
        for j in n_i..=2 * n_i {
            let term = rat(binoms.get(2 * n_i, j)) * rat(2 * n_i + 1) / rat(j + 1);
            alternating += &(sign(n + j as u32) * term);
        }
        let mut partial = BigInt::zero();
        for j in 0..n_i {
            partial += binoms.get(n_i + j, j) * binoms.get(2 * n_i - j - 1, n_i - j);
        }
        let rhs = alternating + rat(partial);
        (lhs != rhs).then(|| Counterexample::new(format!("n={n}"), &lhs, &rhs))
    })
}

// ---------------------------------------------------------------------------
// 23./24. the V numbers

fn v_definition_vs_catalan(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for n in n_span(ctx, 0) {
            points.push((li, n));
        }
    }
    scan(ctx.mode, &points, |&(li, n)| {
        let lambda = &g.lambdas[li];
        let lhs = v_number(n, lambda).expect("grid excludes the pole");
        let rhs = v_number_catalan(n, lambda).expect("grid excludes the pole");
        (lhs != rhs).then(|| Counterexample::new(format!("n={n}, lambda={lambda}"), &lhs, &rhs))
    })
}

fn v_ratio(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for li in 0..g.lambdas.len() {
        for n in n_span(ctx, 0) {
            points.push((li, n));
        }
    }
    scan(ctx.mode, &points, |&(li, n)| {
        let lambda = &g.lambdas[li];
        // Cross-multiplied form, total even where V_n vanishes (lambda = 0):
        // V_{n+1} (n+2) (lambda-1)^2 = -(8n+4) lambda^2 V_n.
        let lm1 = lambda - Rational::one();
        let lhs = v_number(n + 1, lambda).expect("grid excludes the pole")
            * rat(i64::from(n) + 2)
            * (&lm1 * &lm1);
        let rhs = rat(-(8 * i64::from(n) + 4))
            * (lambda * lambda)
            * v_number(n, lambda).expect("grid excludes the pole");
        (lhs != rhs).then(|| Counterexample::new(format!("n={n}, lambda={lambda}"), &lhs, &rhs))
    })
}

// ---------------------------------------------------------------------------
// 25. chu-vandermonde

fn chu_vandermonde(ctx: &CheckContext<'_>) -> Outcome {
    let g = ctx.grid;
    let mut points = Vec::new();
    for x in n_span(ctx, 0) {
        for a in n_span(ctx, 0) {
            // k past x + a only exercises the all-zero tail once.
            for k in 0..=(x + a + 1) {
                points.push((x, a, k));
            }
        }
    }
    let binoms = Binomials::new(2 * g.n_max + 1);
    scan(ctx.mode, &points, |&(x, a, k)| {
        let (x, a, k) = (i64::from(x), i64::from(a), i64::from(k));
        let lhs = binoms.get(x + a, k);
        let mut rhs = BigInt::zero();
        for j in 0..=k {
            rhs += binoms.get(x, j) * binoms.get(a, k - j);
        }
        (lhs != rhs).then(|| Counterexample::new(format!("x={x}, a={a}, k={k}"), &lhs, &rhs))
    })
}
