use std::path::Path;
use std::process::{Command, Output};

use hyperinv_cli::document::{ExpansionDocument, TensorDocument};
use proptest::prelude::*;

fn hyperinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperinv"))
        .args(args)
        .env_remove("HYPERINV_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_tensor(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

fn eval_json(args: &[&str]) -> serde_json::Value {
    let o = hyperinv(args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn expansion(rank: &str, order: &str) -> ExpansionDocument {
    let o = hyperinv(&[
        "expand", "--rank", rank, "--order", order, "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn sorted_coefficients(doc: &ExpansionDocument) -> Vec<i64> {
    let mut c: Vec<i64> = doc.terms.iter().map(|t| t.coefficient).collect();
    c.sort();
    c
}

#[test]
fn count_line_sum_two() {
    let out = stdout(&hyperinv(&["count", "--n", "4", "--r", "2"]));
    assert!(out.contains("squares: 282"));
    assert!(out.contains("classes: 5"));
    assert!(!out.contains("note:"));
}

#[test]
fn count_trivial_order() {
    let o = hyperinv(&["count", "--n", "1", "--r", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["squares"], 1);
    assert_eq!(v["classes"], 1);
}

#[test]
fn count_line_sum_four_flags_printed_values() {
    let out = stdout(&hyperinv(&["count", "--n", "4", "--r", "4"]));
    assert!(out.contains("squares: 10147"));
    assert!(out.contains("formula: 10147"));
    assert!(out.contains("classes: 43"));
    assert!(out.contains("7558"));
}

#[test]
fn count_over_cap_exits_3() {
    let o = hyperinv(&["--cap", "100", "count", "--n", "4", "--r", "4"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn expand_known_tables() {
    let r4 = expansion("4", "2");
    assert_eq!(r4.prefactor_denominator, 2);
    assert_eq!(sorted_coefficients(&r4), vec![-4, 1, 3]);
    let r2 = expansion("2", "3");
    assert_eq!(r2.prefactor_denominator, 6);
    assert_eq!(sorted_coefficients(&r2), vec![-3, 1, 2]);
    let r6 = expansion("6", "2");
    assert_eq!(sorted_coefficients(&r6), vec![-10, -6, 1, 15]);
    for doc in [r4, r2, r6] {
        assert_eq!(doc.terms.iter().map(|t| t.coefficient).sum::<i64>(), 0);
        assert!(doc.terms.iter().all(|t| t.class_size >= 1));
    }
}

#[test]
fn expand_latex() {
    let out = stdout(&hyperinv(&[
        "expand", "--rank", "4", "--order", "2", "--format", "latex",
    ]));
    assert!(out.starts_with("C_2({\\bf A})&=&{1\\over2}"));
    assert!(out.contains("-4\\,\\left(\\matrix{1&3\\cr3&1\\cr}\\right)"));
}

#[test]
fn expand_cap_from_env_exits_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_hyperinv"))
        .args(["expand", "--rank", "4", "--order", "4"])
        .env("HYPERINV_CAP", "1000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("13824"));
}

#[test]
fn expand_unsupported_rank_is_input_error() {
    assert_eq!(
        hyperinv(&["expand", "--rank", "5", "--order", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn eval_scalars() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_tensor(
        dir.path(),
        "m.json",
        r#"{"rank":2,"dim":2,"layout":"row-major","variance":"covariant","data":[1,2,3,4]}"#,
    );
    let v = eval_json(&[
        "eval",
        "--tensor",
        &m,
        "--det",
        "--charpoly",
        "--inverse",
        "--ch-check",
    ]);
    assert_eq!(v["determinant"].as_f64(), Some(-2.0));
    assert_eq!(v["char_poly"][1].as_f64(), Some(5.0));
    assert_eq!(v["inverse"]["data"][0].as_f64(), Some(-2.0));
    assert_eq!(v["ch_pass"], true);

    let r4 = write_tensor(
        dir.path(),
        "r4.json",
        r#"{"rank":4,"dim":2,"layout":"row-major","variance":"covariant",
            "data":[2,0,0,0,0,0,0,0,0,0,0,0,0,0,0,3]}"#,
    );
    let v = eval_json(&[
        "eval",
        "--tensor",
        &r4,
        "--det",
        "--order-s",
        "2",
        "--oracle",
    ]);
    assert_eq!(v["determinant"].as_f64(), Some(6.0));
    assert_eq!(v["discriminant"], v["oracle"]);

    let r3 = write_tensor(
        dir.path(),
        "r3.json",
        r#"{"rank":3,"dim":2,"layout":"row-major","variance":"covariant",
            "data":[1,0,0,0,0,0,0,1],"symmetric":true}"#,
    );
    let v = eval_json(&["eval", "--tensor", &r3, "--hyperdet222", "--inverse"]);
    assert_eq!(v["hyperdeterminant"].as_f64(), Some(1.0));
    assert_eq!(v["inverse"]["data"][7].as_f64(), Some(1.0));
}

#[test]
fn eval_singular_inverse_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_tensor(
        dir.path(),
        "s.json",
        r#"{"rank":2,"dim":2,"layout":"row-major","variance":"covariant","data":[1,2,2,4]}"#,
    );
    assert_eq!(
        hyperinv(&["eval", "--tensor", &m, "--inverse"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn eval_malformed_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (r#"{"rank":2,"dim":2,"layout":"row-major","variance":"covariant","data":[1,2,3]}"#, "data"),
        (
            "{\"rank\":2,\"dim\":2,\n\"layout\":\"row-major\",\"variance\":\"covariant\",\"data\":[1,2,3,4],\"x\":1}",
            "line 2",
        ),
        (r#"{"rank":2,"dim":2,"layout":"column-major","variance":"covariant","data":[1,2,3,4]}"#, "layout"),
        (
            r#"{"rank":2,"dim":2,"layout":"row-major","variance":"covariant","data":[1,2,3,4],"symmetric":true}"#,
            "symmetric",
        ),
        (r#"{"rank":2,"dim":2,"layout":"row-major","variance":"mixed","data":[1,2,3,4]}"#, "variance"),
    ];
    for (k, (body, needle)) in cases.iter().enumerate() {
        let path = write_tensor(dir.path(), &format!("bad{k}.json"), body);
        let o = hyperinv(&["eval", "--tensor", &path]);
        assert_eq!(o.status.code(), Some(2), "case {k}");
        assert!(stderr(&o).contains(needle), "case {k}: {}", stderr(&o));
    }
    assert_eq!(
        hyperinv(&["eval", "--tensor", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_is_reproducible() {
    let a = hyperinv(&["verify", "--seed", "42", "--suite", "fast"]);
    let b = hyperinv(&["verify", "--seed", "42", "--suite", "fast"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.contains("0 fail"));
    for id in 1..=12 {
        assert!(
            out.contains(&format!("] {id:>2} ")),
            "criterion {id} missing"
        );
    }
}

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        -1e6f64..1e6,
        any::<f64>().prop_filter("finite", |x| x.is_finite()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn tensor_document_round_trip(rank in 1usize..4, dim in 1usize..4, seed in prop::collection::vec(finite(), 27)) {
        let len = dim.pow(rank as u32);
        let doc = TensorDocument {
            rank,
            dim,
            layout: "row-major".into(),
            variance: "covariant".into(),
            data: seed[..len].to_vec(),
            symmetric: None,
        };
        let text = doc.emit().unwrap();
        let back = TensorDocument::parse(&text).unwrap();
        prop_assert_eq!(back.to_tensor().unwrap(), doc.to_tensor().unwrap());
        prop_assert_eq!(back, doc);
    }
}
