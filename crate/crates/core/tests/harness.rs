use confspace::corpus;
use confspace::harness::{
    braid_h1_check, kunneth_betti, run_case, run_suite, Builder, RunOptions, Status, SuiteFile,
    VerificationCase,
};
use confspace::invariants::full_homology;
use confspace::product::product_complex;
use confspace::Error;

#[test]
fn builtin_suites_parse() {
    for name in ["core", "paper", "stretch"] {
        let s = SuiteFile::builtin(name).unwrap();
        assert_eq!(s.suite, name);
        assert!(!s.cases.is_empty());
        assert!(s.cases.iter().all(|c| !c.provenance.is_empty()));
    }
    assert!(SuiteFile::builtin("nope").is_err());
    assert!(SuiteFile::from_toml("suite = 1").is_err());
}

#[test]
fn every_property_is_listed_in_core() {
    let core = SuiteFile::builtin("core").unwrap();
    for p in confspace::harness::properties::NAMES {
        assert!(
            core.cases.iter().any(|c| c.property.as_deref() == Some(*p)),
            "{p}"
        );
    }
}

const SMALL: &str = r#"
suite = "small"

[[case]]
name = "right"
builder = "complex"
complex = "circle"
provenance = "three edges"
expect = { betti = [1, 1] }

[[case]]
name = "wrong"
builder = "complex"
complex = "circle"
provenance = "deliberately wrong"
expect = { betti = [1, 2] }

[[case]]
name = "broken"
builder = "complex"
complex = "no-such-complex"
provenance = "unknown name"

[[case]]
name = "slow"
builder = "braid-model"
complex = "tetrahedron"
n = 2
d = 1
max_dim = 3
budget = 0.05
provenance = "cut off by its budget"
expect = { betti = [1, 0, 0] }
"#;

#[test]
fn report_statuses_in_declaration_order() {
    let suite = SuiteFile::from_toml(SMALL).unwrap();
    let report = run_suite(
        &suite,
        RunOptions {
            jobs: 2,
            budget: None,
        },
    );
    let statuses: Vec<Status> = report.cases.iter().map(|c| c.status).collect();
    assert_eq!(
        statuses,
        vec![Status::Pass, Status::Fail, Status::Error, Status::Skipped]
    );
    assert!(!report.passed());
    let table = report.table();
    assert!(table.contains("expected per: deliberately wrong"));
    assert!(table.contains("betti: got [1,1], expected [1,2]"));
    assert!(table.contains("small: 1 passed, 1 failed, 1 errors, 1 skipped"));
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["cases"][0]["status"], "pass");
}

#[test]
fn skipped_cases_do_not_fail_a_suite() {
    let mut suite = SuiteFile::from_toml(SMALL).unwrap();
    suite
        .cases
        .retain(|c| c.name == "right" || c.name == "slow");
    let report = run_suite(&suite, RunOptions::default());
    assert!(report.passed());
    assert_eq!(report.count(Status::Skipped), 1);
}

#[test]
fn global_budget_caps_cases() {
    let mut suite = SuiteFile::from_toml(SMALL).unwrap();
    suite.cases.retain(|c| c.name == "slow");
    suite.cases[0].budget = None;
    let report = run_suite(
        &suite,
        RunOptions {
            jobs: 1,
            budget: Some(0.05),
        },
    );
    assert_eq!(report.cases[0].status, Status::Skipped);
}

#[test]
fn observed_values_are_recorded() {
    let case = VerificationCase {
        name: "i3".into(),
        builder: Builder::Product,
        complex: Some("interval".into()),
        file: None,
        property: None,
        n: 3,
        d: 0,
        max_dim: None,
        budget: None,
        provenance: "cube".into(),
        expect: Default::default(),
    };
    let (bad, _) = run_case(&case).unwrap();
    assert!(bad.is_empty());
    let mut with_f = case.clone();
    with_f.expect.f_vector = Some(vec![8, 19, 18, 6]);
    let (bad, seen) = run_case(&with_f).unwrap();
    assert!(bad.is_empty());
    assert_eq!(seen["f_vector"], serde_json::json!([8, 19, 18, 6]));
}

#[test]
fn kunneth_matches_products() {
    for x in [
        corpus::circle(),
        corpus::wedge_of_circles(2),
        corpus::tetrahedron_boundary(),
    ] {
        let b = full_homology(&x, false).unwrap().betti_numbers();
        let n = if x.dimension() > 1 { 2 } else { 3 };
        let p = product_complex(&x, n).unwrap();
        let expected = full_homology(p.complex(), false).unwrap().betti_numbers();
        assert_eq!(kunneth_betti(&b, n), expected, "{}", x.name());
    }
}

#[test]
fn braid_h1_examples() {
    for (x, n, d) in [
        (corpus::circle(), 3, 2),
        (corpus::wedge_of_circles(2), 3, 2),
        (corpus::circle(), 2, 2),
    ] {
        let out = braid_h1_check(&x, n, d, 2).unwrap();
        assert!(out.pass, "{} {:?}", x.name(), out.details);
        assert_eq!(out.degrees, vec![1]);
    }
    assert!(matches!(
        braid_h1_check(&corpus::circle(), 3, 1, 2),
        Err(Error::Hypothesis(_))
    ));
    assert!(matches!(
        braid_h1_check(&corpus::point(), 2, 2, 2),
        Err(Error::Hypothesis(_))
    ));
}

#[test]
fn braid_h1_on_a_simply_connected_base() {
    let out = braid_h1_check(&corpus::tetrahedron_boundary(), 2, 2, 3).unwrap();
    assert_eq!(out.degrees, vec![1, 2]);
    assert!(out.pass, "{:?}", out.details);
}
