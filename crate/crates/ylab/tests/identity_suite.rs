//! Full identity-suite runs over the default verification grid, plus the
//! runner's domain-handling and determinism contracts.

use ylab::error::Error;
use ylab::exact::Rational;
use ylab::identities::{
    catalog, resolve_sign_variant, run_check, run_check_seq, run_suite, run_suite_seq,
    ParameterGrid, SignVariant,
};

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

/// A reduced grid for the tests that only exercise runner mechanics.
fn small_grid() -> ParameterGrid {
    ParameterGrid::new(
        (0, 6),
        (0, 2),
        vec![r(-1, 1), r(2, 1), r(1, 3)],
        vec![Rational::zero(), Rational::one()],
    )
    .unwrap()
}

#[test]
fn every_catalog_check_passes_on_the_default_grid() {
    let reports = run_suite(&ParameterGrid::default_grid());
    assert_eq!(reports.len(), catalog().len());
    for report in &reports {
        assert!(
            report.passed,
            "{} failed: {:?}",
            report.check_id, report.first_counterexample
        );
        assert!(report.first_counterexample.is_none());
    }
    // Catalog order is preserved in the output.
    for (report, def) in reports.iter().zip(catalog()) {
        assert_eq!(report.check_id, def.id);
    }
}

#[test]
fn lambda_free_checks_hold_to_n_40() {
    let grid = ParameterGrid::new((0, 40), (1, 3), vec![r(-1, 2)], vec![]).unwrap();
    for id in [
        "inverse-binomial-sury",
        "inverse-binomial-alt",
        "c3n-half",
        "c3n-shift",
        "catalan-from-c3n",
        "simsek-catalan",
        "final-combinatorial",
        "chu-vandermonde",
    ] {
        let report = run_check(id, &grid).unwrap();
        assert!(report.passed, "{id}: {:?}", report.first_counterexample);
        assert!(report.points_tested > 0);
    }
}

#[test]
fn alternating_convolution_vanishes_for_odd_n() {
    // The (1+(-1)^n) factor collapses the right side to zero for odd n; the
    // left side must cancel pairwise. Checked to n = 21, above the default
    // grid bound.
    use ylab::families::y_number;
    for lambda in [r(-2, 1), r(1, 3), r(5, 2)] {
        for n in (1..=21u32).step_by(2) {
            let mut acc = Rational::zero();
            for j in 0..=n {
                let sgn = if j % 2 == 0 {
                    Rational::one()
                } else {
                    r(-1, 1)
                };
                acc += &(sgn
                    * y_number(j, 1, &lambda).unwrap()
                    * y_number(n - j, 1, &lambda).unwrap());
            }
            assert!(acc.is_zero(), "n={n}, lambda={lambda}");
        }
    }
}

#[test]
fn unknown_check_is_rejected() {
    let err = run_check("no-such-check", &small_grid()).unwrap_err();
    assert_eq!(err, Error::UnknownCheck("no-such-check".into()));
}

#[test]
fn euler_check_rejects_minus_one_strictly_but_suite_shrinks() {
    let grid = small_grid(); // contains lambda = -1
    let err = run_check("s1-apostol-euler", &grid).unwrap_err();
    assert_eq!(err.kind(), "domain");
    // The suite runner drops the pole with a notice instead.
    let reports = run_suite(&grid);
    let euler = reports
        .iter()
        .find(|r| r.check_id == "s1-apostol-euler")
        .unwrap();
    assert!(euler.passed);
    assert!(euler.notes.iter().any(|n| n.contains("lambda = -1")));
    // Other checks still see the full lambda list.
    let conv = reports
        .iter()
        .find(|r| r.check_id == "alt-convolution")
        .unwrap();
    assert_eq!(conv.points_tested, 3 * 7);
}

#[test]
fn grid_invariants() {
    assert!(ParameterGrid::new((0, 3), (0, 2), vec![r(1, 1)], vec![]).is_err());
    assert!(ParameterGrid::new((3, 0), (0, 2), vec![], vec![]).is_err());
    let (grid, notices) =
        ParameterGrid::with_sanitized_lambdas((0, 3), (0, 2), vec![r(1, 1), r(2, 1)], vec![])
            .unwrap();
    assert_eq!(grid.lambdas(), &[r(2, 1)]);
    assert_eq!(notices.len(), 1);
}

#[test]
fn empty_lambda_list_is_vacuous() {
    let grid = ParameterGrid::new((0, 5), (0, 2), vec![], vec![Rational::zero()]).unwrap();
    for report in run_suite(&grid) {
        assert!(report.passed);
        assert_eq!(report.points_tested, 0);
        assert!(report.first_counterexample.is_none());
    }
}

#[test]
fn sequential_and_parallel_runs_agree() {
    let grid = small_grid();
    let par = run_suite(&grid);
    let seq = run_suite_seq(&grid);
    assert_eq!(par.len(), seq.len());
    for (a, b) in par.iter().zip(&seq) {
        assert_eq!(a.check_id, b.check_id);
        assert_eq!(a.points_tested, b.points_tested);
        assert_eq!(a.passed, b.passed);
        assert_eq!(a.notes, b.notes);
    }
    let single_par = run_check("recurrence-new7", &grid).unwrap();
    let single_seq = run_check_seq("recurrence-new7", &grid).unwrap();
    assert_eq!(single_par.points_tested, single_seq.points_tested);
}

#[test]
fn suite_runs_are_deterministic() {
    let grid = small_grid();
    let a = run_suite(&grid);
    let b = run_suite(&grid);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.check_id, y.check_id);
        assert_eq!(x.points_tested, y.points_tested);
        assert_eq!(x.passed, y.passed);
        assert_eq!(
            format!("{:?}", x.first_counterexample),
            format!("{:?}", y.first_counterexample)
        );
    }
}

#[test]
fn sign_variant_resolution_names_the_theorem_sign() {
    let resolution = resolve_sign_variant(&ParameterGrid::default_grid()).unwrap();
    assert!(resolution.theorem.passed);
    assert!(!resolution.proof.passed);
    assert_eq!(resolution.holds, Some("(-1)^(k+1)"));
    assert_eq!(SignVariant::Theorem.describe(), "(-1)^(k+1)");
    // The losing variant's counterexample is the lowest grid point.
    let cex = resolution.proof.first_counterexample.unwrap();
    assert!(cex.assignment.contains("v=0"));
    assert!(cex.assignment.contains("sign=(-1)^k"));
}

#[test]
fn vandermonde_m2_spot_value() {
    // k1 = k2 = 1, n = 2: C(3,2) = 3 = three unit terms.
    let grid = ParameterGrid::new((2, 2), (1, 1), vec![r(2, 1)], vec![]).unwrap();
    let report = run_check("vandermonde-m2", &grid).unwrap();
    assert!(report.passed);
    assert_eq!(report.points_tested, 1);
}

#[test]
fn bernstein_relation_spot_value() {
    // n = 1, k = 1, lambda = 1/2: -(1-lambda) Y_1 + lambda^2 Y_0 = 0.
    let grid = ParameterGrid::new((1, 1), (1, 1), vec![r(1, 2)], vec![]).unwrap();
    let report = run_check("bernstein-relation", &grid).unwrap();
    assert!(report.passed);
    assert_eq!(report.points_tested, 1);
}
