use std::io::Write;

use hyperdet_schur::suites::{diagonal_222, w_tensor_222, SuiteReport};
use hyperdet_schur::Tensor;
use hyperdet_schur_cli::{run, EXIT_PASS, EXIT_USAGE};

fn cli(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hyperdet-schur").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn tensor_file(t: &Tensor) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(t.to_json().as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn critical_set_of_hook_is_the_row() {
    assert_eq!(
        cli(&["critical-set", "4,1"]),
        (EXIT_PASS, "(5)\n".into(), String::new())
    );
}

#[test]
fn critical_set_of_row_is_empty() {
    assert_eq!(cli(&["critical-set", "5"]).1, "(empty)\n");
}

#[test]
fn critical_set_listing() {
    assert_eq!(cli(&["critical-set", "2,2,1"]).1, "(3,1,1)\n");
    assert_eq!(cli(&["critical-set", "2,2,1,1"]).1, "(3,1,1,1)\n(2,2,2)\n");
    let (code, out, _) = cli(&["critical-set", "(3,1)", "--output", "json"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(
        serde_json::from_str::<Vec<Vec<usize>>>(&out).unwrap(),
        vec![vec![4]]
    );
}

#[test]
fn malformed_partitions_are_usage_errors() {
    for bad in ["", "x", "1,3", "0", "2,,1", "-1", "99"] {
        let (code, _, err) = cli(&["critical-set", bad]);
        assert_eq!(code, EXIT_USAGE, "{bad:?}");
        assert!(err.starts_with("error:"), "{bad:?}: {err}");
    }
}

#[test]
fn verify_main_passes() {
    let (code, out, _) = cli(&[
        "verify", "main", "--p", "4", "--n", "3", "--trials", "20", "--seed", "7",
    ]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("lambda=(2,2)"));
    assert!(out.ends_with("overall: pass\n"));
}

#[test]
fn verify_lemma1_passes() {
    let (code, out, _) = cli(&["verify", "lemma1", "--max-mu", "10"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("mu=7 det=-7 expected=-7"));
}

#[test]
fn verify_guard_violation_names_the_guard() {
    let (code, _, err) = cli(&["verify", "t2", "--p", "6", "--n", "3"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("p <= 5"), "{err}");
    assert_eq!(cli(&["verify", "main", "--n", "4"]).0, EXIT_USAGE);
    assert_eq!(cli(&["verify", "main", "--trials", "0"]).0, EXIT_USAGE);
}

#[test]
fn verify_all_suites_pass() {
    for suite in ["t2", "main", "lemma1", "pfaffian", "hyperdet222"] {
        let (code, _, err) = cli(&[
            "verify", suite, "--p", "3", "--n", "2", "--trials", "3", "--seed", "4",
        ]);
        assert_eq!(code, EXIT_PASS, "{suite}: {err}");
    }
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(cli(&[]).0, EXIT_USAGE);
    assert_eq!(cli(&["verify", "nope"]).0, EXIT_USAGE);
    assert_eq!(cli(&["verify", "main", "--p", "three"]).0, EXIT_USAGE);
    assert_eq!(cli(&["report", "--output", "xml"]).0, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).0, EXIT_PASS);
}

#[test]
fn hyperdet_of_diagonal_and_w() {
    let diag = tensor_file(&diagonal_222());
    assert_eq!(
        cli(&["hyperdet", "--input", path(&diag)]),
        (EXIT_PASS, "1\n".into(), String::new())
    );
    let w = tensor_file(&w_tensor_222());
    assert_eq!(cli(&["hyperdet", "--input", path(&w)]).1, "0\n");
}

#[test]
fn hyperdet_matrix_modes() {
    // Skew 4x4 with a..f = 1/2, 2, 3, 5, 7, 11: af - be + cd = 11/2 - 14 + 15.
    let (a, b, c, d, e, f) = ("1/2", "2", "3", "5", "7", "11");
    let neg = |s: &str| format!("-{s}");
    let entries = [
        "0".into(),
        a.into(),
        b.into(),
        c.into(),
        neg(a),
        "0".into(),
        d.into(),
        e.into(),
        neg(b),
        neg(d),
        "0".into(),
        f.into(),
        neg(c),
        neg(e),
        neg(f),
        "0".into(),
    ];
    let doc = serde_json::json!({"order": 2, "dim": 4, "entries": entries}).to_string();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(doc.as_bytes()).unwrap();
    assert_eq!(
        cli(&["hyperdet", "--input", path(&file), "--pfaffian"]).1,
        "13/2\n"
    );
    assert_eq!(
        cli(&["hyperdet", "--input", path(&file), "--det"]).1,
        "169/4\n"
    );
}

#[test]
fn hyperdet_rejects_bad_input() {
    assert_eq!(
        cli(&["hyperdet", "--input", "/definitely/missing.json"]).0,
        EXIT_USAGE
    );
    for doc in [
        "not json",
        r#"{"order": 3, "dim": 2, "entries": ["1"]}"#,
        r#"{"order": 3, "dim": 2, "entries": ["1","0","0","0","0","0","0","1/0"]}"#,
        r#"{"order": 2, "dim": 3, "entries": ["1","0","0","0","1","0","0","0","1"]}"#,
    ] {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(doc.as_bytes()).unwrap();
        assert_eq!(
            cli(&["hyperdet", "--input", path(&f)]).0,
            EXIT_USAGE,
            "{doc}"
        );
    }
    // A symmetric matrix has no Pfaffian; odd size neither.
    let sym = Tensor::from_ints(2, 2, &[1, 2, 2, 1]).unwrap();
    let f = tensor_file(&sym);
    assert_eq!(
        cli(&["hyperdet", "--input", path(&f), "--pfaffian"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        cli(&["hyperdet", "--input", path(&f), "--det", "--pfaffian"]).0,
        EXIT_USAGE
    );
}

fn report(args: &[&str]) -> SuiteReport {
    let mut argv = vec!["report", "--output", "json"];
    argv.extend_from_slice(args);
    let (code, out, err) = cli(&argv);
    assert_eq!(code, EXIT_PASS, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn report_p3_includes_the_column_shape() {
    let r = report(&["--p", "3", "--n", "3", "--seed", "1"]);
    let col = r
        .main
        .iter()
        .find(|c| c.lambda.to_string() == "(1,1,1)")
        .unwrap();
    assert!(col.verdict.passed());
    assert!(r.pfaffian.is_none());
}

#[test]
fn report_p2_notes_exceptional_shapes_and_runs_pfaffian() {
    let r = report(&["--p", "2", "--n", "2"]);
    assert!(r
        .notes
        .iter()
        .any(|n| n.contains("only exceptional shapes exist at p = 2")));
    assert!(r.main.is_empty());
    assert!(r.pfaffian.unwrap().iter().all(|c| c.verdict.passed()));
}

#[test]
fn report_is_deterministic_and_round_trips() {
    let args = [
        "report", "--output", "json", "--p", "3", "--n", "2", "--trials", "3", "--seed", "9",
    ];
    let (_, first, _) = cli(&args);
    let (_, second, _) = cli(&args);
    let a: SuiteReport = serde_json::from_str(&first).unwrap();
    let b: SuiteReport = serde_json::from_str(&second).unwrap();
    let strip = |r: &SuiteReport| serde_json::to_string_pretty(&r.deterministic_part()).unwrap();
    assert_eq!(strip(&a), strip(&b));
    assert!(a.hyperdet222.is_some());

    let mut value: serde_json::Value = serde_json::from_str(&first).unwrap();
    let reparsed = serde_json::to_value(&a).unwrap();
    assert_eq!(value, reparsed);
    value.as_object_mut().unwrap().remove("timings_ms");
    assert!(!value.to_string().contains("timings"));
}

#[test]
fn report_text_mode() {
    let (code, out, _) = cli(&["report", "--p", "2", "--n", "2", "--trials", "2"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.starts_with("report p=2 n=2"));
    assert!(out.contains("note: only exceptional shapes"));
}
