//! Executable identity checks over parameter grids.
//!
//! Every theorem and corollary the crate implements is registered in
//! [`catalog`] as one named check. A check evaluates both sides of its
//! identity in exact rational arithmetic at every grid point, stops at the
//! first failure, and reports the lowest-index counterexample with both sides
//! as exact `p/q` strings. Comparisons are exact — there is no tolerance
//! anywhere in this module.
//!
//! Grid points are evaluated in parallel under the `parallel` feature (the
//! counterexample is still chosen by lowest grid index, not completion
//! order); [`run_check_seq`] and [`run_suite_seq`] force the sequential
//! fallback regardless of the feature.

mod checks;

use std::time::Instant;

use serde::Serialize;

use crate::error::Error;
use crate::exact::Rational;

/// Rectangular parameter grid an identity check runs over.
///
/// `k_range` also supplies the per-order ranges `k1, k2, k3` of the
/// multi-order convolution checks, and the shift count of the derivative
/// shift check.
#[derive(Clone, Debug)]
pub struct ParameterGrid {
    n_min: u32,
    n_max: u32,
    k_min: u32,
    k_max: u32,
    lambdas: Vec<Rational>,
    xs: Vec<Rational>,
}

impl ParameterGrid {
    /// Validates the grid invariants: nonempty ranges and `1` absent from the
    /// lambda list (it is a pole of the whole Y family).
    pub fn new(
        n_range: (u32, u32),
        k_range: (u32, u32),
        lambdas: Vec<Rational>,
        xs: Vec<Rational>,
    ) -> Result<Self, Error> {
        if n_range.0 > n_range.1 {
            return Err(Error::InvalidGrid(format!(
                "empty n range {}..={}",
                n_range.0, n_range.1
            )));
        }
        if k_range.0 > k_range.1 {
            return Err(Error::InvalidGrid(format!(
                "empty k range {}..={}",
                k_range.0, k_range.1
            )));
        }
        if lambdas.iter().any(Rational::is_one) {
            return Err(Error::InvalidGrid(
                "lambda = 1 is a pole of the Y family and cannot be a grid point".into(),
            ));
        }
        Ok(ParameterGrid {
            n_min: n_range.0,
            n_max: n_range.1,
            k_min: k_range.0,
            k_max: k_range.1,
            lambdas,
            xs,
        })
    }

    /// Like [`ParameterGrid::new`] but drops `lambda = 1` from the list with
    /// a notice instead of rejecting it. Boundary-facing code (the CLI) uses
    /// this so a pole in user input shrinks the grid rather than aborting.
    pub fn with_sanitized_lambdas(
        n_range: (u32, u32),
        k_range: (u32, u32),
        lambdas: Vec<Rational>,
        xs: Vec<Rational>,
    ) -> Result<(Self, Vec<String>), Error> {
        let mut notices = Vec::new();
        let kept: Vec<Rational> = lambdas
            .into_iter()
            .filter(|l| {
                if l.is_one() {
                    notices
                        .push("lambda = 1 dropped from the grid (pole of the Y family)".into());
                    false
                } else {
                    true
                }
            })
            .collect();
        Ok((Self::new(n_range, k_range, kept, xs)?, notices))
    }

    /// The default verification grid:
    /// `n <= 20`, `k <= 5`, `lambda in {-2, -1, -1/2, 1/3, 2, 5/2, 3}`,
    /// `x in {0, 1, -1, 1/2}`.
    pub fn default_grid() -> Self {
        let lambdas = ["-2", "-1", "-1/2", "1/3", "2", "5/2", "3"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let xs = ["0", "1", "-1", "1/2"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        ParameterGrid::new((0, 20), (0, 5), lambdas, xs).unwrap()
    }

    pub fn n_range(&self) -> (u32, u32) {
        (self.n_min, self.n_max)
    }

    pub fn k_range(&self) -> (u32, u32) {
        (self.k_min, self.k_max)
    }

    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }

    pub fn xs(&self) -> &[Rational] {
        &self.xs
    }

    /// Grid with `lambda = -1` removed (domain of the Apostol-Euler check).
    fn without_minus_one(&self) -> ParameterGrid {
        let minus_one = Rational::from(-1);
        let mut shrunk = self.clone();
        shrunk.lambdas.retain(|l| l != &minus_one);
        shrunk
    }

    fn contains_minus_one(&self) -> bool {
        self.lambdas.contains(&Rational::from(-1))
    }
}

/// First failing grid point of a check, with both sides as exact strings.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    /// Parameter assignment, e.g. `"n=3, k=2, lambda=5/2"`.
    pub assignment: String,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub(crate) fn new(
        assignment: impl Into<String>,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> Self {
        Counterexample {
            assignment: assignment.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Outcome of running one identity check over a grid.
///
/// `passed` is true exactly when `first_counterexample` is absent. When a
/// counterexample exists, `points_tested` counts the grid points up to and
/// including it (in grid order), which keeps the count deterministic under
/// parallel evaluation.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub check_id: String,
    pub points_tested: u64,
    pub passed: bool,
    pub first_counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
    pub elapsed_ms: f64,
}

/// Sign convention used by the `s1-apostol-bernoulli` check, which exists in
/// two variants in the source material: `(-1)^(k+1)` in the theorem statement
/// and `(-1)^k` in the intermediate equation of its proof. The runner can
/// test either and report which one holds.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SignVariant {
    /// `(-1)^(k+1)`, the theorem statement.
    #[default]
    Theorem,
    /// `(-1)^k`, the proof's intermediate equation.
    Proof,
}

impl SignVariant {
    pub fn describe(self) -> &'static str {
        match self {
            SignVariant::Theorem => "(-1)^(k+1)",
            SignVariant::Proof => "(-1)^k",
        }
    }
}

/// Per-run options; only the sign-variant check reads them today.
#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    pub sign_variant: SignVariant,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum ExecMode {
    /// Parallel when the `parallel` feature is enabled, sequential otherwise.
    Auto,
    /// Always sequential.
    Sequential,
}

pub(crate) struct CheckContext<'a> {
    pub(crate) grid: &'a ParameterGrid,
    pub(crate) options: &'a CheckOptions,
    pub(crate) mode: ExecMode,
}

type CheckFn = fn(&CheckContext<'_>) -> (u64, Option<Counterexample>);

/// One catalog entry: a named, executable identity.
pub struct CheckDef {
    pub id: &'static str,
    pub description: &'static str,
    /// `lambda = -1` is a pole of this check's domain (Apostol-Euler side).
    pub excludes_minus_one: bool,
    run: CheckFn,
}

/// The full check catalog, in fixed execution order.
pub fn catalog() -> &'static [CheckDef] {
    checks::CATALOG
}

/// Looks up a catalog entry by id.
pub fn find_check(check_id: &str) -> Option<&'static CheckDef> {
    catalog().iter().find(|c| c.id == check_id)
}

/// Runs one catalog check over the grid (parallel when available).
///
/// A grid containing `lambda = -1` is rejected up front for checks whose
/// domain excludes it; use [`run_suite`] for the shrink-with-notice
/// behaviour.
pub fn run_check(check_id: &str, grid: &ParameterGrid) -> Result<IdentityReport, Error> {
    run_check_with(check_id, grid, &CheckOptions::default(), ExecMode::Auto)
}

/// Sequential-fallback variant of [`run_check`].
pub fn run_check_seq(check_id: &str, grid: &ParameterGrid) -> Result<IdentityReport, Error> {
    run_check_with(check_id, grid, &CheckOptions::default(), ExecMode::Sequential)
}

/// [`run_check`] with explicit options (sign variant).
pub fn run_check_with_options(
    check_id: &str,
    grid: &ParameterGrid,
    options: &CheckOptions,
) -> Result<IdentityReport, Error> {
    run_check_with(check_id, grid, options, ExecMode::Auto)
}

/// Sequential-fallback variant of [`run_check_with_options`].
pub fn run_check_seq_with_options(
    check_id: &str,
    grid: &ParameterGrid,
    options: &CheckOptions,
) -> Result<IdentityReport, Error> {
    run_check_with(check_id, grid, options, ExecMode::Sequential)
}

pub(crate) fn run_check_with(
    check_id: &str,
    grid: &ParameterGrid,
    options: &CheckOptions,
    mode: ExecMode,
) -> Result<IdentityReport, Error> {
    let def = find_check(check_id).ok_or_else(|| Error::UnknownCheck(check_id.to_string()))?;
    if def.excludes_minus_one && grid.contains_minus_one() {
        return Err(Error::Domain(format!(
            "grid contains lambda = -1, a pole of check {check_id:?}; remove it or use the suite runner"
        )));
    }
    Ok(run_one(def, grid, options, mode, Vec::new()))
}

/// Runs every catalog check in order. Per-check domain violations shrink that
/// check's grid with a notice instead of aborting the suite.
pub fn run_suite(grid: &ParameterGrid) -> Vec<IdentityReport> {
    run_suite_with(grid, &CheckOptions::default(), ExecMode::Auto)
}

/// Sequential-fallback variant of [`run_suite`]: checks and their grid points
/// are all evaluated on the calling thread.
pub fn run_suite_seq(grid: &ParameterGrid) -> Vec<IdentityReport> {
    run_suite_with(grid, &CheckOptions::default(), ExecMode::Sequential)
}

/// [`run_suite`] with explicit options (sign variant).
pub fn run_suite_with_options(grid: &ParameterGrid, options: &CheckOptions) -> Vec<IdentityReport> {
    run_suite_with(grid, options, ExecMode::Auto)
}

/// Sequential-fallback variant of [`run_suite_with_options`].
pub fn run_suite_seq_with_options(
    grid: &ParameterGrid,
    options: &CheckOptions,
) -> Vec<IdentityReport> {
    run_suite_with(grid, options, ExecMode::Sequential)
}

pub(crate) fn run_suite_with(
    grid: &ParameterGrid,
    options: &CheckOptions,
    mode: ExecMode,
) -> Vec<IdentityReport> {
    let run = |def: &CheckDef| {
        let mut notes = Vec::new();
        let shrunk;
        let effective = if def.excludes_minus_one && grid.contains_minus_one() {
            notes.push(
                "lambda = -1 dropped for this check (Apostol-Euler pole)".to_string(),
            );
            shrunk = grid.without_minus_one();
            &shrunk
        } else {
            grid
        };
        run_one(def, effective, options, mode, notes)
    };
    match mode {
        ExecMode::Sequential => catalog().iter().map(run).collect(),
        ExecMode::Auto => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                catalog().par_iter().map(run).collect()
            }
            #[cfg(not(feature = "parallel"))]
            catalog().iter().map(run).collect()
        }
    }
}

fn run_one(
    def: &CheckDef,
    grid: &ParameterGrid,
    options: &CheckOptions,
    mode: ExecMode,
    mut notes: Vec<String>,
) -> IdentityReport {
    let started = Instant::now();
    let (points_tested, first_counterexample) = if grid.lambdas.is_empty() {
        // An empty lambda list makes the whole suite vacuous, including the
        // lambda-free integer identities.
        notes.push("vacuous: empty lambda list".to_string());
        (0, None)
    } else {
        let ctx = CheckContext {
            grid,
            options,
            mode,
        };
        (def.run)(&ctx)
    };
    IdentityReport {
        check_id: def.id.to_string(),
        points_tested,
        passed: first_counterexample.is_none(),
        first_counterexample,
        notes,
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
    }
}

/// Outcome of running the `s1-apostol-bernoulli` check under both sign
/// conventions.
#[derive(Clone, Debug, Serialize)]
pub struct SignResolution {
    pub theorem: IdentityReport,
    pub proof: IdentityReport,
    /// The convention that holds on the whole grid, when exactly one does.
    pub holds: Option<&'static str>,
}

/// Runs the sign-discrepancy check under both conventions and reports which
/// one holds on the grid.
pub fn resolve_sign_variant(grid: &ParameterGrid) -> Result<SignResolution, Error> {
    let theorem = run_check_with_options(
        "s1-apostol-bernoulli",
        grid,
        &CheckOptions {
            sign_variant: SignVariant::Theorem,
        },
    )?;
    let proof = run_check_with_options(
        "s1-apostol-bernoulli",
        grid,
        &CheckOptions {
            sign_variant: SignVariant::Proof,
        },
    )?;
    let holds = match (theorem.passed, proof.passed) {
        (true, false) => Some(SignVariant::Theorem.describe()),
        (false, true) => Some(SignVariant::Proof.describe()),
        _ => None,
    };
    Ok(SignResolution {
        theorem,
        proof,
        holds,
    })
}

/// Evaluates `eval` over `points`, returning the count of points examined and
/// the lowest-index counterexample, if any.
///
/// In parallel mode the search still commits to the sequentially-first
/// failure; on failure the reported count is the failing index + 1, matching
/// the sequential fail-fast count.
pub(crate) fn scan<P, F>(mode: ExecMode, points: &[P], eval: F) -> (u64, Option<Counterexample>)
where
    P: Sync,
    F: Fn(&P) -> Option<Counterexample> + Sync,
{
    match mode {
        ExecMode::Sequential => scan_seq(points, eval),
        ExecMode::Auto => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                match points
                    .par_iter()
                    .enumerate()
                    .find_map_first(|(i, p)| eval(p).map(|c| (i, c)))
                {
                    Some((i, c)) => (i as u64 + 1, Some(c)),
                    None => (points.len() as u64, None),
                }
            }
            #[cfg(not(feature = "parallel"))]
            scan_seq(points, eval)
        }
    }
}

fn scan_seq<P, F>(points: &[P], eval: F) -> (u64, Option<Counterexample>)
where
    F: Fn(&P) -> Option<Counterexample>,
{
    for (i, p) in points.iter().enumerate() {
        if let Some(c) = eval(p) {
            return (i as u64 + 1, Some(c));
        }
    }
    (points.len() as u64, None)
}
