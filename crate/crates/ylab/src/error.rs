//! Crate-wide error type.
//!
//! Every fallible operation returns [`Error`]; [`Error::kind`] gives the
//! stable machine-readable category that the CLI prepends as `error:<kind>:`.

use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Evaluation at a pole of the requested object (for the Y family this is
    /// always `lambda = 1`, for Apostol-Euler `lambda = -1`).
    #[error("evaluation at a pole ({at})")]
    Pole { at: Rational },
    /// Binary series operation on operands of different truncation orders.
    #[error("series truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    /// Division by a series whose constant term vanishes.
    #[error("non-invertible series: constant term is zero")]
    NonInvertibleSeries,
    /// `exp` of a series with a nonzero constant term is not a formal power
    /// series over the rationals.
    #[error("series exponential requires a zero constant term")]
    NonzeroConstantTerm,
    /// Multinomial parts exceeding the total.
    #[error("multinomial parts sum to {parts_sum}, which exceeds n = {n}")]
    PartsExceedTotal { n: u32, parts_sum: u64 },
    /// Input outside an operation's stated domain (divergent series cutoffs,
    /// zero arguments to asymptotic formulas, ...).
    #[error("domain violation: {0}")]
    Domain(String),
    /// `run_check` with an identifier not present in the catalog.
    #[error("unknown identity check {0:?}")]
    UnknownCheck(String),
    /// Parameter grid violating its invariants (empty range, pole in the
    /// lambda list).
    #[error("invalid parameter grid: {0}")]
    InvalidGrid(String),
    /// Malformed rational literal.
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    /// Zero denominator handed to a rational or rational-function constructor.
    #[error("zero denominator")]
    ZeroDenominator,
}

impl Error {
    /// Stable error category used in the CLI's `error:<kind>:` diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "pole",
            Error::OrderMismatch { .. }
            | Error::NonInvertibleSeries
            | Error::NonzeroConstantTerm => "series",
            Error::PartsExceedTotal { .. } | Error::Domain(_) => "domain",
            Error::UnknownCheck(_) | Error::InvalidGrid(_) => "usage",
            Error::ParseRational(_) | Error::ZeroDenominator => "parse",
        }
    }
}
