use std::process::{Command, Output};

use binsum::exact::{JsonValue, LaurentPoly, Rational, XPoly};
use serde_json::Value;

fn binsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sum_prints_exact_value() {
    let o = binsum(&["sum", "--n", "4", "--m", "5", "--k", "0", "--z", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5\n");
}

#[test]
fn zero_z_is_a_usage_error() {
    let o = binsum(&["sum", "--n", "1", "--m", "5", "--k", "0", "--z", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("--z") && err.contains("Usage"), "{err}");
}

#[test]
fn verify_thm3_reports_json() {
    let o = binsum(&["verify", "--suite", "thm3"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["passed"], Value::Bool(true));
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["suite"], "thm3");
    assert_eq!(reports[0]["failures"].as_array().unwrap().len(), 0);
    assert!(reports[0]["cases"].as_u64().unwrap() > 0);
    assert!(doc["identity"].is_string());
}

#[test]
fn verify_all_passes() {
    let o = binsum(&["verify", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["suite"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        [
            "lemma1",
            "corollary4",
            "lemma2",
            "thm1",
            "thm2",
            "thm3",
            "paths"
        ]
    );
}

#[test]
fn grid_overrides_apply() {
    let o = binsum(&["verify", "--suite", "paths", "--n-max", "5", "--m-max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["reports"][0]["cases"], 12);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "table", "--a", "2", "--b", "-3", "--n", "6", "--format", "json",
        ][..],
        &[
            "sum", "--n", "9", "--m", "3", "--k", "-2", "--z", "symbolic",
        ],
        &["poly", "--family", "lucas-closed", "--index", "7"],
        &["verify", "--suite", "lemma2"],
    ] {
        assert_eq!(binsum(args).stdout, binsum(args).stdout, "{args:?}");
    }
}

#[test]
fn json_values_round_trip() {
    let o = binsum(&[
        "sum", "--n", "9", "--m", "3", "--k", "-2", "--z", "symbolic",
    ]);
    let text = stdout(&o);
    let value: Value = serde_json::from_str(&text).unwrap();
    let p = LaurentPoly::from_json(&value).unwrap();
    assert_eq!(format!("{}\n", p.to_json()), text);

    let o = binsum(&[
        "poly", "--family", "q", "--index", "5", "--a", "3/2", "--b", "-1", "--format", "json",
    ]);
    let text = stdout(&o);
    let p = XPoly::<Rational>::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(format!("{}\n", p.to_json()), text);
    assert_eq!(p.degree(), Some(5));

    let o = binsum(&[
        "sum", "--n", "5", "--m", "2", "--k", "1", "--z", "2/3", "--format", "json",
    ]);
    let text = stdout(&o);
    let r = Rational::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(format!("{}\n", r.to_json()), text);
}

#[test]
fn table_json_rows() {
    let o = binsum(&[
        "table", "--a", "-1", "--b", "0", "--n", "2", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "[[[0,\"1\"]],[[-1,\"-1\"],[0,\"0\"],[1,\"-1\"]],[[-2,\"1\"],[-1,\"0\"],[0,\"2\"],[1,\"0\"],[2,\"1\"]]]\n"
    );
}

#[test]
fn table_rational_params_csv() {
    let o = binsum(&["table", "--a", "1/2", "--b", "1/3", "--n", "1"]);
    assert_eq!(stdout(&o), "n,-1,0,1\n0,0,1,0\n1,1/2,1/3,1/2\n");
}

#[test]
fn closed_form_pretty() {
    let o = binsum(&[
        "poly",
        "--family",
        "fib-closed",
        "--index",
        "5",
        "--format",
        "pretty",
    ]);
    assert_eq!(stdout(&o), "x^4 + 3*s*x^2 + s^2\n");
}

#[test]
fn missing_flag_is_usage_error() {
    let o = binsum(&["sum", "--n", "3", "--m", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = binsum(&["nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}
