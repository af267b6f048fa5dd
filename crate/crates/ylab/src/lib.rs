//! Exact computation and verification of the two-parameter number family
//! `Y_n^(k)(lambda)`, its polynomial extension, and the companion special-number
//! families it connects to (Stirling numbers of the first kind, Apostol-type
//! Bernoulli/Euler numbers, Catalan numbers, Bernstein basis values).
//!
//! The crate is organised around three independent computation routes that
//! cross-validate each other:
//!
//! - [`families`]: closed forms and recurrences, all in exact rational
//!   arithmetic ([`exact`]);
//! - [`series`]: truncated formal power series, which expand every defining
//!   generating function coefficient-by-coefficient and act as the oracle for
//!   the closed forms;
//! - [`identities`]: a registry of executable identity checks over parameter
//!   grids, with deterministic counterexample reporting.
//!
//! [`approx`] adds the floating-point side: factorial and Catalan asymptotics
//! and the derived approximation for `V_n(lambda) = Y_n^(n+1)(lambda)/(n+1)!`,
//! with exact companions for error reporting.
//!
//! The identity suite and table generation are data-parallel via rayon when
//! the `parallel` feature (default) is enabled; `*_seq` entry points provide
//! the sequential fallback and are always available.

pub mod approx;
pub mod error;
pub mod exact;
pub mod families;
pub mod identities;
pub mod series;

pub use error::Error;
pub use exact::{Polynomial, Rational, RationalFunction};
