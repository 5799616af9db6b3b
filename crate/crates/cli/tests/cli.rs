use std::path::Path;
use std::process::{Command, Output};

fn confspace(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_confspace"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

/// Cells of a homology table row, trimmed.
fn row(line: &str) -> Vec<String> {
    line.split('|').map(|c| c.trim().to_string()).collect()
}

const CIRCLE: &str =
    r#"{"name": "c", "vertices": ["a", "b", "c"], "facets": [[0, 1], [1, 2], [0, 2]]}"#;

#[test]
fn validate_reports_and_exits() {
    let dir = tempfile::tempdir().unwrap();
    let ok = write(dir.path(), "c.json", CIRCLE);
    let o = confspace(&["validate", "--input", &ok], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[3, 3]"));

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"name": "b", "vertices": ["a"], "facets": [[0, 4]]}"#,
    );
    let o = confspace(&["validate", "--input", &bad], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("unknown vertex 4"));

    let garbage = write(dir.path(), "g.json", "not json");
    assert_eq!(
        confspace(&["validate", "--input", &garbage], dir.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        confspace(&["validate", "--input", "missing.json"], dir.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        confspace(&["validate", "--input", "builtin:rp2"], dir.path())
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn model_then_homology() {
    let dir = tempfile::tempdir().unwrap();
    let o = confspace(
        &[
            "delta-model",
            "--input",
            "builtin:interval",
            "--n",
            "3",
            "--d",
            "2",
            "--out",
            "w.json",
        ],
        dir.path(),
    );
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let o = confspace(
        &["homology", "--input", "w.json", "--up-to", "2"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let table = stdout(&o);
    assert!(table.starts_with("dim | betti | torsion"));
    let rows: Vec<Vec<String>> = table.lines().skip(1).map(row).collect();
    assert_eq!(
        rows,
        vec![vec!["0", "1", ""], vec!["1", "1", ""], vec!["2", "0", ""]]
    );

    let o = confspace(&["pi1", "--input", "w.json"], dir.path());
    assert!(stdout(&o).contains("abelianization: Z\n"));
}

#[test]
fn bounded_models_refuse_high_degrees() {
    let dir = tempfile::tempdir().unwrap();
    let o = confspace(
        &[
            "delta-model",
            "--input",
            "builtin:circle",
            "--n",
            "2",
            "--d",
            "1",
            "--max-dim",
            "1",
            "--out",
            "w.json",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("through dimension 1"));
    let o = confspace(
        &["homology", "--input", "w.json", "--up-to", "1"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("skeleton"));
}

#[test]
fn unordered_model() {
    let dir = tempfile::tempdir().unwrap();
    let o = confspace(
        &[
            "braid-model",
            "--input",
            "builtin:wedge2",
            "--n",
            "2",
            "--d",
            "1",
            "--out",
            "b.json",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let o = confspace(
        &["homology", "--input", "b.json", "--up-to", "1", "--reduced"],
        dir.path(),
    );
    assert_eq!(row(stdout(&o).lines().nth(2).unwrap())[..2], ["1", "4"]);
}

#[test]
fn local_dimension_output() {
    let dir = tempfile::tempdir().unwrap();
    let o = confspace(&["localdim", "--input", "builtin:book3"], dir.path());
    let out = stdout(&o);
    assert!(out.contains("r: 0\n"));
    assert!(out.contains("witness: {0,1}"));
    assert!(out.contains("chamber criterion: 0"));
    let o = confspace(&["localdim", "--input", "builtin:no-such"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_parameters_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = confspace(
        &[
            "delta-model",
            "--input",
            "builtin:circle",
            "--n",
            "2",
            "--d",
            "0",
            "--out",
            "w.json",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(2));
    let o = confspace(&["verify", "--suite", "bogus"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_writes_a_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let o = confspace(
        &[
            "--sequential",
            "verify",
            "--suite",
            "core",
            "--json",
            "r.json",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("core: 14 passed"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(report["suite"], "core");
    assert_eq!(report["cases"][0]["name"], "boundary-squared");
}

#[test]
fn stretch_suite_skips_under_a_small_budget() {
    let dir = tempfile::tempdir().unwrap();
    let o = confspace(
        &["verify", "--suite", "stretch", "--budget", "1"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped"));
    assert!(dir.path().join("stretch-report.json").exists());
}
