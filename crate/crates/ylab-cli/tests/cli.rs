//! End-to-end CLI behaviour: output shapes, exit codes, error prefixes,
//! environment overrides, determinism.

use std::process::{Command, Output};

fn ylab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ylab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ylab_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ylab"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn compute_values_json_and_raw() {
    let out = ylab(&["compute", "v", "--n", "10", "--lambda", "-1", "--raw"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-4199/256\n");

    let out = ylab(&["compute", "y", "--n", "2", "--k", "2", "--lambda", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], "384");

    let out = ylab(&["compute", "s1", "--n", "4", "--m", "2", "--raw"]);
    assert_eq!(stdout(&out), "11\n");
    let out = ylab(&["compute", "catalan", "--n", "10", "--raw"]);
    assert_eq!(stdout(&out), "16796\n");
    let out = ylab(&["compute", "ab", "--n", "1", "--k", "1", "--lambda", "2", "--raw"]);
    assert_eq!(stdout(&out), "1\n");
    let out = ylab(&["compute", "ae", "--n", "1", "--k", "1", "--lambda", "1", "--raw"]);
    assert_eq!(stdout(&out), "-1/2\n");
    let out = ylab(&[
        "compute", "ypoly", "--n", "1", "--k", "1", "--x", "1", "--lambda", "3", "--raw",
    ]);
    assert_eq!(stdout(&out), "-3/2\n");
}

#[test]
fn pole_inputs_exit_2_with_machine_prefix() {
    let out = ylab(&["compute", "y", "--n", "0", "--k", "1", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:pole:"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());

    let out = ylab(&["compute", "ae", "--n", "1", "--k", "1", "--lambda", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:pole:"));

    // Apostol-Bernoulli takes the classical branch at lambda = 1 instead.
    let out = ylab(&["compute", "ab", "--n", "2", "--k", "1", "--lambda", "1", "--raw"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1/6\n");
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let out = ylab(&["compute", "y", "--n", "0", "--k", "1", "--lambda", "x/y"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:parse:"));

    let out = ylab(&["compute", "y", "--n", "0", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:usage:"));

    let out = ylab(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:usage:"));

    let out = ylab(&["verify", "--suite", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:usage:"), "{}", stderr(&out));

    let out = ylab(&["table", "y", "--n-max", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:domain:"));
}

#[test]
fn series_output_and_env_override() {
    let out = ylab(&["series", "y", "--k", "2", "--lambda", "3", "--order", "2"]);
    assert_eq!(stdout(&out), "[\"1\",\"-9\"]\n");

    // Default order is 16.
    let out = ylab(&["series", "s1", "--k", "1"]);
    let values: Vec<String> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(values.len(), 16);

    // Environment variable overrides the default, explicit flag wins.
    let out = ylab_env(&["series", "s1", "--k", "1"], "YLAB_DEFAULT_ORDER", "5");
    let values: Vec<String> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(values.len(), 5);
    let out = ylab_env(
        &["series", "s1", "--k", "1", "--order", "3"],
        "YLAB_DEFAULT_ORDER",
        "7",
    );
    let values: Vec<String> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(values, ["0", "1", "-1"]);
}

#[test]
fn json_rationals_reparse_to_the_same_value() {
    use std::str::FromStr;
    let out = ylab(&["series", "y", "--k", "3", "--lambda", "-1/2", "--order", "12"]);
    let strings: Vec<String> = serde_json::from_str(&stdout(&out)).unwrap();
    for (n, s) in strings.iter().enumerate() {
        let parsed = ylab::exact::Rational::from_str(s).unwrap();
        assert_eq!(parsed.to_string(), *s, "entry {n} round-trips");
    }
}

#[test]
fn symbolic_table_matches_listed_expressions() {
    let out = ylab(&["table", "y", "--n-max", "3", "--k", "2", "--symbolic"]);
    let expected = "\
n,k,value
0,2,4 / (l-1)^2
1,2,-8*l^2 / (l-1)^3
2,2,24*l^4 / (l-1)^4
3,2,-96*l^6 / (l-1)^5
";
    assert_eq!(stdout(&out), expected);

    let out = ylab(&["table", "y", "--n-max", "3", "--k", "3", "--lambda", "2"]);
    let expected = "\
n,k,value
0,3,8
1,3,-24
2,3,96
3,3,-480
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn verify_single_check_and_exit_codes() {
    let out = ylab(&[
        "verify", "--suite", "catalan-from-c3n", "--n-max", "10", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout(&out);
    let mut lines = body.lines();
    assert_eq!(
        lines.next().unwrap(),
        "check_id,points_tested,passed,first_counterexample,notes,elapsed_ms"
    );
    assert!(lines.next().unwrap().starts_with("catalan-from-c3n,11,true"));

    // The proof-sign variant fails, and the exit code says so.
    let out = ylab(&[
        "verify",
        "--suite",
        "s1-apostol-bernoulli",
        "--n-max",
        "4",
        "--k-max",
        "2",
        "--variant",
        "proof",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports[0]["passed"], false);
}

#[test]
fn verify_euler_check_shrinks_default_lambdas() {
    let out = ylab(&[
        "verify", "--suite", "s1-apostol-euler", "--n-max", "6", "--k-max", "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stderr(&out).contains("lambda = -1 dropped"));
}

#[test]
fn verify_drops_lambda_one_with_notice() {
    let out = ylab(&[
        "verify", "--suite", "v-ratio", "--n-max", "4", "--lambdas", "1,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("lambda = 1 dropped"));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports[0]["points_tested"], 5);
}

#[test]
fn verify_variant_both_names_the_holding_sign() {
    let out = ylab(&[
        "verify",
        "--suite",
        "s1-apostol-bernoulli",
        "--n-max",
        "6",
        "--k-max",
        "3",
        "--variant",
        "both",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["holds"], "(-1)^(k+1)");
    assert_eq!(v["theorem"]["passed"], true);
    assert_eq!(v["proof"]["passed"], false);
}

#[test]
fn approx_table_formats() {
    let out = ylab(&["approx", "table", "--n-list", "1,5,10", "--lambda", "-1"]);
    let body = stdout(&out);
    let mut lines = body.lines();
    assert_eq!(lines.next().unwrap(), "n,lambda,exact,approx,rel_error");
    let first = lines.next().unwrap();
    assert!(first.starts_with("1,-1,1/2,1.1283791670955126,"));

    let out = ylab(&[
        "approx", "table", "--n-list", "5", "--lambda", "-1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["exact"], "21/16");

    // `table approx-v` is the same table under the table namespace.
    let a = ylab(&["table", "approx-v", "--n-list", "1,5", "--lambda", "-1"]);
    let b = ylab(&["approx", "table", "--n-list", "1,5", "--lambda", "-1"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn repeated_invocations_are_byte_identical() {
    for args in [
        vec!["compute", "v", "--n", "40", "--lambda", "-1/2"],
        vec!["series", "ypoly", "--k", "2", "--x", "1/2", "--lambda", "-2", "--order", "9"],
        vec!["table", "y", "--n-max", "6", "--k", "4", "--symbolic", "--format", "json"],
        vec!["approx", "table", "--n-list", "1,5,10,125", "--lambda", "-1"],
    ] {
        let a = ylab(&args);
        let b = ylab(&args);
        assert_eq!(stdout(&a), stdout(&b), "args: {args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn sequential_flag_matches_parallel_output() {
    let base = [
        "verify", "--suite", "recurrence-new7", "--n-max", "8", "--k-max", "3", "--format", "csv",
    ];
    let par = ylab(&base);
    let mut seq_args = base.to_vec();
    seq_args.push("--sequential");
    let seq = ylab(&seq_args);
    // Identical apart from the timing column.
    let strip = |s: &str| {
        s.lines()
            .map(|line| line.rsplit_once(',').map(|(head, _)| head.to_string()).unwrap_or_else(|| line.to_string()))
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&stdout(&par)), strip(&stdout(&seq)));
}
