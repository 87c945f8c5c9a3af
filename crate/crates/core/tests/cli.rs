use std::path::PathBuf;
use std::process::{Command, Output};

use regsep::automata::parse_nfa;
use serde_json::Value;

fn fx(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn regsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regsep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = regsep(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "regsep-report/1");
    v
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn nested_report_carries_the_certificate() {
    let v = report(&["pt-separate", &fx("nested_a1.json"), &fx("nested_a2.json"), "--pump", "3"]);
    let r = &v["result"];
    assert_eq!(r["separable"], false);
    assert_eq!(r["witness"]["u"], serde_json::json!([[], ["c"], []]));
    assert_eq!(r["witness"]["B"], serde_json::json!([["a", "b"], ["a"]]));
    assert_eq!(r["pumped"]["kpeq"], true);
    assert_eq!(r["pumped"]["w1_accepted"], true);
    assert_eq!(r["pumped"]["w2_accepted"], true);
}

#[test]
fn separable_pair_and_full_witness_flag() {
    let v = report(&["pt-separate", &fx("a_star.json"), &fx("bb_star.json"), "--witness"]);
    assert_eq!(v["result"]["separable"], true);
    assert!(v["result"]["witness"].is_null());
    let v = report(&["pt-separate", &fx("nested_a1.json"), &fx("nested_a2.json"), "--witness"]);
    assert!(v["result"]["witness"]["path1"]["segments"].is_array());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let bad = bad.to_str().unwrap();
    assert_eq!(regsep(&["monoid", bad]).status.code(), Some(2));
    assert_eq!(regsep(&["monoid", "/nonexistent/a.json"]).status.code(), Some(2));
    assert_eq!(regsep(&["monoid", "(ab", "--regex"]).status.code(), Some(2));
    let schema = dir.path().join("schema.json");
    std::fs::write(&schema, r#"{"states":["p"],"alphabet":["a"],"initial":["q"],"final":[],"transitions":[]}"#).unwrap();
    assert_eq!(regsep(&["monoid", schema.to_str().unwrap()]).status.code(), Some(2));
    let budget = regsep(&[
        "pt-min-kappa",
        &fx("nested_a1.json"),
        &fx("nested_a2.json"),
        "--budget",
        "10",
    ]);
    assert_eq!(budget.status.code(), Some(3));
    // A negative verdict is still an answer.
    assert_eq!(
        regsep(&["pt-separate", &fx("nested_a1.json"), &fx("nested_a2.json")]).status.code(),
        Some(0)
    );
}

#[test]
fn reports_are_deterministic() {
    let args = ["pt-separate", &fx("nested_a1.json"), &fx("nested_a2.json"), "--witness", "--pump", "2"];
    assert_eq!(without_timing(report(&args)), without_timing(report(&args)));
    let args = ["ul-separate", &fx("nested_a1.json"), &fx("nested_a2.json"), "--max-kappa", "1"];
    assert_eq!(without_timing(report(&args)), without_timing(report(&args)));
}

#[test]
fn min_kappa_emits_a_parseable_separator() {
    let dir = tempfile::tempdir().unwrap();
    let sep = dir.path().join("sep.json");
    let out = dir.path().join("report.json");
    let o = regsep(&[
        "pt-min-kappa",
        &fx("a_star.json"),
        &fx("bb_star.json"),
        "--max",
        "3",
        "--separator",
        sep.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["result"]["kappa"], 1);
    let a = parse_nfa(&std::fs::read_to_string(&sep).unwrap()).unwrap();
    assert!(a.accepts(&regsep::word("aaa")));
    assert!(!a.accepts(&regsep::word("bb")));

    let v = report(&["pt-min-kappa", &fx("nested_a1.json"), &fx("nested_a2.json"), "--max", "3"]);
    assert!(v["result"]["kappa"].is_null());
    assert_eq!(v["result"]["pt_separable"], false);
}

#[test]
fn separator_command_round_trips() {
    let v = report(&["pt-separator", &fx("a_star.json"), &fx("bb_star.json"), "--kappa", "1"]);
    assert_eq!(v["result"]["separates"], true);
    let a = parse_nfa(&v["result"]["automaton"].to_string()).unwrap();
    assert!(a.accepts(&regsep::word("")));
    let v = report(&["pt-separator", &fx("nested_a1.json"), &fx("nested_a2.json"), "--kappa", "2"]);
    assert_eq!(v["result"]["separates"], false);
}

#[test]
fn dot_directory_gets_overlays() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("dot");
    report(&[
        "pt-separate",
        &fx("nested_a1.json"),
        &fx("nested_a2.json"),
        "--dot",
        d.to_str().unwrap(),
    ]);
    let names: Vec<PathBuf> = ["a1.dot", "a2.dot", "a1_witness.dot", "a2_witness.dot"]
        .iter()
        .map(|n| d.join(n))
        .collect();
    for n in &names {
        let text = std::fs::read_to_string(n).unwrap();
        assert!(text.starts_with("digraph"), "{}", n.display());
    }
    assert!(std::fs::read_to_string(&names[2]).unwrap().contains("penwidth"));
}

#[test]
fn bounds_monoid_and_ul() {
    let one = fx("one_letter.json");
    let v = report(&["bounds", &one, &one]);
    assert_eq!(v["result"]["pt"]["kappa_bound"], "128");
    assert_eq!(v["result"]["ul"]["kappa_bound"], "12");
    let v = report(&["monoid", &fx("ab_star.json")]);
    assert_eq!(v["result"]["size"], 6);
    let v = report(&["monoid", "(ab)*", "--regex"]);
    assert_eq!(v["result"]["size"], 6);
    let v = report(&["ul-separate", &fx("a_star.json"), &fx("bb_star.json"), "--max-kappa", "1"]);
    assert_eq!(v["result"]["verdict"], "separable_at");
    assert_eq!(v["result"]["kappa"], 0);
}

#[test]
fn selfcheck_is_clean() {
    let v = report(&["selfcheck", "--seed", "7", "--count", "40"]);
    assert_eq!(v["result"]["ok"], true);
    assert_eq!(v["result"]["pairs"], 40);
}
