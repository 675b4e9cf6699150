use std::path::PathBuf;

use amalgam_cli::{run, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK, EXIT_RESOURCE};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("amalgam-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("amalgam").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn order_prints_summary() {
    let (code, out, _) = invoke(&["order", &fixture("ex2.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "order: 2*t - 2\ndegree: 1\ncoefficients (c0 .. cd): -2 2\ncontent: 2\n"
    );
}

#[test]
fn order_json_is_canonical() {
    let (code, out, _) = invoke(&["--json", "order", &fixture("ex2.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out.trim_end(),
        r#"{"coefficients":[-2,2],"content":2,"degree":1,"order":[[0,-2],[1,2]],"order_text":"2*t - 2"}"#
    );
}

#[test]
fn seed_adds_scramble_check() {
    let (code, out, _) = invoke(&["--seed", "9", "--json", "order", &fixture("trefoil_presentation.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains(r#""scramble_invariant":true"#), "{out}");
}

#[test]
fn verify_fails_on_non_monic_knot() {
    // 5_2 has |c0| = |cd| = 2, so the monic check is false
    let (code, out, _) = invoke(&["verify", &fixture("knot_5_2.json")]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(out.contains("monic: false"), "{out}");
}

#[test]
fn verify_passes_when_checks_are_null_or_true() {
    // order 0: every check but order_match is n/a
    let (code, out, _) = invoke(&["verify", &fixture("empty-relators.json")]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("c0_index: n/a"));
    assert!(out.contains("degree_bound: n/a"));
}

#[test]
fn knot_reports_alexander_polynomial() {
    let (code, out, _) = invoke(&["knot", &fixture("figure_eight.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("alexander: t^2 - 3*t + 1\n"), "{out}");
    assert!(out.contains("monic: true"));

    let (code, out, _) = invoke(&["--json", "knot", "--decompose", &fixture("knot_5_2.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains(r#""monic":false"#));
    assert!(out.contains(r#""index_f":2"#));
}

#[test]
fn knot_rejects_presentations() {
    let (code, _, err) = invoke(&["knot", &fixture("ex1.json")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("seifert"), "{err}");
}

#[test]
fn knot_warns_on_degenerate_pairing() {
    let path = scratch("degenerate.json", r#"{"seifert": [[1, 0], [0, 1]]}"#);
    let (code, _, err) = invoke(&["knot", &path]);
    assert_eq!(code, EXIT_OK);
    assert!(err.starts_with("warning: "), "{err}");
}

#[test]
fn syntax_errors_report_line_and_column() {
    let path = scratch("broken.json", "{\"presentation\":\n  {\"relators\": 1,,}}");
    let (code, out, err) = invoke(&["order", &path]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.is_empty());
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn field_errors_report_path() {
    let path = scratch(
        "badpoly.json",
        r#"{"presentation": {"relators": 1, "generators": 1, "matrix": [[[[1, 2], [0, 3]]]]}}"#,
    );
    let (code, _, err) = invoke(&["order", &path]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("presentation.matrix[0][0]"), "{err}");

    let path = scratch("shape.json", r#"{"presentation": {"relators": 2, "generators": 1, "matrix": [[[]]]}}"#);
    let (code, _, err) = invoke(&["order", &path]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("presentation.matrix"), "{err}");

    let path = scratch("odd.json", r#"{"seifert": [[1, 2, 3]]}"#);
    let (code, _, _) = invoke(&["knot", &path]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn missing_file_is_an_input_error() {
    let (code, _, err) = invoke(&["order", "/nonexistent/amalgam.json"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.starts_with("error: "), "{err}");
}

#[test]
fn resource_limits_exit_three() {
    let (code, _, err) = invoke(&["--max-minors", "0", "order", &fixture("trefoil_presentation.json")]);
    assert_eq!(code, EXIT_RESOURCE, "{err}");

    // [[t^2 - 2], [2]] needs two reduction steps
    let path = scratch(
        "two-steps.json",
        r#"{"presentation": {"relators": 2, "generators": 1, "matrix": [[[[0, -2], [2, 1]]], [[[0, 2]]]]}}"#,
    );
    let (code, out, _) = invoke(&["decompose", &path]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("reduction steps: 2"), "{out}");
    let (code, _, err) = invoke(&["--max-steps", "1", "decompose", &path]);
    assert_eq!(code, EXIT_RESOURCE, "{err}");
}

#[test]
fn usage_errors_and_help() {
    let (code, _, err) = invoke(&["frobnicate"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(!err.is_empty());
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("decompose"));
}
