//! End-to-end tests of the `geu` binary: exit codes, report determinism,
//! and document round-trips through real process invocations.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn geu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geu")).args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn eval_prints_the_exact_rational() {
    let out = geu(&["eval", fixture("f1.json").to_str().unwrap(), "--act", "aL"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("value: 3/10"));

    let out = geu(&[
        "eval",
        fixture("f1.json").to_str().unwrap(),
        "--act",
        "aL",
        "--restrict",
        "s2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["value"], "0");
}

#[test]
fn check_failure_exits_one_with_witness() {
    let out = geu(&[
        "check",
        fixture("cyclic_pref.json").to_str().unwrap(),
        "--postulates",
        "1b",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["records"][0]["name"], "P1b");
    assert_eq!(report["records"][0]["holds"], false);
    assert!(report["records"][0]["witness"].is_array());
}

#[test]
fn verify_full_set_on_f1_exits_zero() {
    let out = geu(&["verify", fixture("f1.json").to_str().unwrap(), "--set", "1a,1b,2,3,4,5,6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("<=>").count(), 7);
    assert!(text.contains("conjunction: pass"));
}

#[test]
fn validation_errors_exit_two() {
    let broken = r#"{
        "states": ["s1"],
        "consequences": ["c1"],
        "acts": {"a": {"s1": "c1"}},
        "utility": {"c1": "1"},
        "plausibility": {"type": "probability", "weights": {"s1": "9/10"}},
        "domain": {"type": "standard"}
    }"#;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, broken).unwrap();
    let out = geu(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("9/10"), "{stderr}");
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = geu(&[
        "acts",
        fixture("f1.json").to_str().unwrap(),
        "--enumerate",
        "--budget-acts",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for format in ["text", "json"] {
        let run = || {
            geu(&[
                "check",
                fixture("cyclic_pref.json").to_str().unwrap(),
                "--postulates",
                "1a,1b,2,3,4,5,6",
                "--format",
                format,
            ])
        };
        assert_eq!(run().stdout, run().stdout);
    }
}

#[test]
fn synthesized_documents_round_trip_through_the_binary() {
    for construction in ["thm1", "corollary", "fixed"] {
        let out = geu(&[
            "synthesize",
            fixture("cyclic_pref.json").to_str().unwrap(),
            "--construction",
            construction,
            "--format",
            "json",
        ]);
        assert_eq!(out.status.code(), Some(0), "{construction}");
        let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(report["records"][0]["name"], "round-trip");
        assert_eq!(report["records"][0]["holds"], true);

        // The emitted problem's induced preference is the input preference.
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("synth.json");
        std::fs::write(&path, serde_json::to_vec(&report["problem"]).unwrap()).unwrap();
        let prefs = geu(&["prefs", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(prefs.status.code(), Some(0), "{construction}");
        let prefs: serde_json::Value = serde_json::from_str(&stdout(&prefs)).unwrap();
        let pairs: BTreeSetPairs = prefs["preference"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| (p[0].as_str().unwrap().to_string(), p[1].as_str().unwrap().to_string()))
            .collect();
        let expected: BTreeSetPairs = [("aK", "aL"), ("aL", "aM"), ("aM", "aK")]
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(pairs, expected, "{construction}");
    }
}

type BTreeSetPairs = std::collections::BTreeSet<(String, String)>;

#[test]
fn table_domains_evaluate_boolean_expectations() {
    let out = geu(&[
        "eval",
        fixture("table_bool.json").to_str().unwrap(),
        "--act",
        "a_c1_c2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("value: 1"));
    let out = geu(&["validate", fixture("table_bool.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn belief_fixture_validates_but_fails_additive_axioms() {
    let out = geu(&["validate", fixture("belief.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    // Additivity is a precondition for axiom 2, not a measure law.
    let out = geu(&[
        "check",
        fixture("belief.json").to_str().unwrap(),
        "--axioms",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("Π_add"), "{stderr}");
}

#[test]
fn pair_fixtures_follow_their_orders() {
    let out = geu(&["prefs", fixture("f2_pair_min.json").to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // Min order is total: every distinct pair appears in at least one
    // direction; 4 acts give at least 6 related pairs.
    assert!(report["preference"].as_array().unwrap().len() >= 6);

    let out = geu(&[
        "check",
        fixture("f2_pair.json").to_str().unwrap(),
        "--axioms",
        "1a",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["records"][0]["name"], "A1a");
    assert_eq!(report["records"][0]["holds"], false);
}
