//! Floating-point asymptotics: the factorial and Catalan approximations, the
//! derived approximation for `V_n(lambda)`, and truncated zeta-type sums —
//! each paired with the exact value it approximates so relative errors can be
//! reported.
//!
//! Sign handling is exact everywhere; only magnitudes are approximated.
//! Magnitudes that would overflow a direct `f64` evaluation are accumulated
//! in log space and exponentiated only when representable.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::Error;
use crate::exact::{binomial, Rational};
use crate::families;

/// One row of an approximation table: the exact value (always computed by
/// the exact families, never by approximation), the float approximation, and
/// the relative error `|approx - exact|/|exact|`.
#[derive(Clone, Debug, Serialize)]
pub struct ApproxRecord {
    pub n: u32,
    pub lambda: Rational,
    pub exact: Rational,
    pub approx: f64,
    pub rel_error: f64,
}

/// Stirling's approximation `n! ~ (n/e)^n sqrt(2 pi n)`.
///
/// Defined for `n >= 1` (`0!` is handled exactly elsewhere). Evaluated
/// directly up to `n = 170` (the largest representable factorial) and in log
/// space beyond, returning infinity when the result exceeds `f64`.
pub fn stirling_factorial_approx(n: u32) -> Result<f64, Error> {
    if n == 0 {
        return Err(Error::Domain(
            "Stirling's approximation requires n >= 1".into(),
        ));
    }
    let nf = f64::from(n);
    if n <= 170 {
        Ok((nf / std::f64::consts::E).powi(n as i32) * (2.0 * PI * nf).sqrt())
    } else {
        let log = nf * (nf.ln() - 1.0) + 0.5 * (2.0 * PI * nf).ln();
        Ok(log.exp())
    }
}

/// Catalan approximation `C_n ~ 2^(2n) / (n sqrt(n pi))` for `n >= 1`.
pub fn catalan_approx(n: u32) -> Result<f64, Error> {
    if n == 0 {
        return Err(Error::Domain(
            "the Catalan approximation requires n >= 1".into(),
        ));
    }
    let nf = f64::from(n);
    if n <= 255 {
        Ok(2f64.powi(2 * n as i32) / (nf * (nf * PI).sqrt()))
    } else {
        let log = 2.0 * nf * 2f64.ln() - nf.ln() - 0.5 * (nf * PI).ln();
        Ok(log.exp())
    }
}

/// Approximation for the V numbers:
/// `V_n(lambda) ~ 2^(3n+1) (-lambda^2)^n / ((lambda-1)^(2n+1) n^(3/2) sqrt(pi))`.
///
/// The sign is computed exactly as `(-1)^n sign(lambda - 1)`; the magnitude
/// switches to log space when a direct evaluation would leave the `f64`
/// exponent range.
pub fn v_approx(n: u32, lambda: &Rational) -> Result<f64, Error> {
    if n == 0 {
        return Err(Error::Domain("the V approximation requires n >= 1".into()));
    }
    if lambda.is_one() {
        return Err(Error::Pole {
            at: lambda.clone(),
        });
    }
    let lm1 = lambda - Rational::one();
    let negative = (n % 2 == 1) != lm1.is_negative();
    if lambda.is_zero() {
        return Ok(0.0);
    }
    let nf = f64::from(n);
    let lambda_f = lambda.to_f64().abs();
    let lm1_f = lm1.to_f64().abs();
    // Direct evaluation only while every factor stays inside the f64
    // exponent range; otherwise accumulate in log space.
    let pow2_log = f64::from(3 * n + 1);
    let num_log = 2.0 * nf * lambda_f.log2();
    let den_log = (2.0 * nf + 1.0) * lm1_f.log2();
    let magnitude = if pow2_log < 900.0 && num_log.abs() < 900.0 && den_log.abs() < 900.0 {
        2f64.powi(3 * n as i32 + 1) * lambda_f.powi(2 * n as i32)
            / (lm1_f.powi(2 * n as i32 + 1) * nf.powf(1.5) * PI.sqrt())
    } else {
        (pow2_log + num_log - den_log - 1.5 * nf.log2() - 0.5 * PI.log2()).exp2()
    };
    Ok(if negative { -magnitude } else { magnitude })
}

/// Pairs [`v_approx`] with the exact [`families::v_number`] for each `n`.
///
/// Table generation is data-parallel under the `parallel` feature; the output
/// order always matches the input order.
pub fn v_approx_table(n_list: &[u32], lambda: &Rational) -> Result<Vec<ApproxRecord>, Error> {
    let build = |&n: &u32| -> Result<ApproxRecord, Error> {
        let exact = families::v_number(n, lambda)?;
        let approx = v_approx(n, lambda)?;
        Ok(approx_record(n, lambda, exact, approx))
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        n_list.par_iter().map(build).collect()
    }
    #[cfg(not(feature = "parallel"))]
    n_list.iter().map(build).collect()
}

/// Sequential fallback of [`v_approx_table`], available regardless of the
/// `parallel` feature.
pub fn v_approx_table_seq(n_list: &[u32], lambda: &Rational) -> Result<Vec<ApproxRecord>, Error> {
    n_list
        .iter()
        .map(|&n| {
            let exact = families::v_number(n, lambda)?;
            let approx = v_approx(n, lambda)?;
            Ok(approx_record(n, lambda, exact, approx))
        })
        .collect()
}

fn approx_record(n: u32, lambda: &Rational, exact: Rational, approx: f64) -> ApproxRecord {
    let exact_f = exact.to_f64();
    let rel_error = if exact_f == 0.0 {
        if approx == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        (approx - exact_f).abs() / exact_f.abs()
    };
    ApproxRecord {
        n,
        lambda: lambda.clone(),
        exact,
        approx,
        rel_error,
    }
}

/// Limiting ratio `V_{n+1}/V_n -> -8 (lambda/(lambda-1))^2` as a float.
pub fn v_ratio_asymptotic(lambda: &Rational) -> Result<f64, Error> {
    if lambda.is_one() {
        return Err(Error::Pole {
            at: lambda.clone(),
        });
    }
    let r = (lambda / (lambda - Rational::one())).to_f64();
    Ok(-8.0 * r * r)
}

/// Exact finite-n companion of [`v_ratio_asymptotic`]:
/// `V_{n+1}/V_n = -((8n+4)/(n+2)) (lambda/(lambda-1))^2`.
pub fn v_ratio_exact(n: u32, lambda: &Rational) -> Result<Rational, Error> {
    if lambda.is_one() {
        return Err(Error::Pole {
            at: lambda.clone(),
        });
    }
    let ratio = lambda / (lambda - Rational::one());
    Ok(Rational::new(-(8 * i64::from(n) + 4), i64::from(n) + 2).unwrap() * &ratio * &ratio)
}

/// Truncated zeta-type sum `sum_{n=0}^{N} C(n+k-1, n) lambda^n n^m` in double
/// precision (`0^0 = 1`). Requires `|lambda| < 1` (the series diverges
/// otherwise) and `k >= 1`.
///
/// The limit is [`zeta_interpolation_target`]; callers compare the partial
/// sums against that exact value.
pub fn zeta_partial_sum(lambda: &Rational, m: u32, k: u32, cutoff: u32) -> Result<f64, Error> {
    Ok(zeta_partial_sum_exact(lambda, m, k, cutoff)?.to_f64())
}

/// Exact limit of the zeta-type sum:
/// `(-1)^k (m!/(m+k)!) B_{m+k}^(k)(lambda)`.
///
/// Derivation: `sum_m zeta(lambda,-m,k) t^m/m! = (1 - lambda e^t)^(-k)
/// = (-1)^k sum_{n>=k} B_n^(k)(lambda) t^(n-k)/n!`, and matching `t^m`
/// coefficients gives the expression above. At `k = 1` this reduces to the
/// classical `-B_{m+1}(lambda)/(m+1)`.
pub fn zeta_interpolation_target(lambda: &Rational, m: u32, k: u32) -> Result<Rational, Error> {
    if lambda.abs() >= Rational::one() {
        return Err(Error::Domain(format!(
            "zeta-type sum requires |lambda| < 1, got lambda = {lambda}"
        )));
    }
    if k == 0 {
        return Err(Error::Domain("zeta-type sum requires k >= 1".into()));
    }
    let sign = if k % 2 == 0 {
        Rational::one()
    } else {
        Rational::from(-1)
    };
    let scale = Rational::from(crate::exact::factorial(m))
        / Rational::from(crate::exact::factorial(m + k));
    Ok(sign * scale * families::apostol_bernoulli(m + k, k, lambda))
}

/// Exact-rational accumulation of the same truncated sum. Doubles cannot
/// resolve the tail once it falls below one ulp of the total, so convergence
/// monotonicity is measured on this exact form.
pub fn zeta_partial_sum_exact(
    lambda: &Rational,
    m: u32,
    k: u32,
    cutoff: u32,
) -> Result<Rational, Error> {
    if lambda.abs() >= Rational::one() {
        return Err(Error::Domain(format!(
            "zeta-type sum requires |lambda| < 1, got lambda = {lambda}"
        )));
    }
    if k == 0 {
        return Err(Error::Domain("zeta-type sum requires k >= 1".into()));
    }
    if cutoff == 0 {
        return Err(Error::Domain("cutoff must be at least 1".into()));
    }
    let mut total = Rational::zero();
    let mut lambda_pow = Rational::one();
    for n in 0..=cutoff {
        if n > 0 {
            lambda_pow = lambda_pow * lambda;
        }
        let c = binomial(i64::from(n) + i64::from(k) - 1, i64::from(n));
        let n_pow = Rational::from(i64::from(n)).pow(i64::from(m)); // 0^0 = 1
        total += &(Rational::from(c) * &lambda_pow * n_pow);
    }
    Ok(total)
}
