use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn multiarr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multiarr")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_multiarr"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn lines(o: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&o.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn chi_of_builtins() {
    let o = multiarr(&["chi", "boolean3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["factored"], "(t-1)^3");
    assert_eq!(v["coefficients"], serde_json::json!(["-1", "3", "-3", "1"]));
    assert_eq!(json(&multiarr(&["chi", "shi-A2-cone"]))["factored"], "(t-1)(t-3)^2");
}

#[test]
fn chi_reads_stdin_and_rejects_garbage() {
    let o = with_stdin(&["chi", "-"], r#"{"dim":1,"hyperplanes":[{"coeffs":["1"]},{"coeffs":["1"],"constant":"-1"}]}"#);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["factored"], "(t-2)");
    let bad = with_stdin(&["chi", "-"], "{ not json");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("malformed"));
    assert_eq!(multiarr(&["chi", "no-such-thing"]).status.code(), Some(2));
}

#[test]
fn free_verdicts_and_exit_codes() {
    let o = multiarr(&["free", "a3-free-899", "--no-basis"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "free");
    assert_eq!(v["exponents"], serde_json::json!([8, 9, 9]));

    let o = multiarr(&["free", "generic4"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["witness"]["kind"], "hilbert_mismatch");

    let o = multiarr(&["free", "boolean3", "--cutoff", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["verdict"], "undetermined");
}

#[test]
fn free_overrides_and_input_errors() {
    let o = multiarr(&["free", "A2", "--mult", "2,2,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["exponents"], serde_json::json!([3, 3]));
    assert_eq!(multiarr(&["free", "A2", "--mult", "1,1"]).status.code(), Some(2));
    let affine = with_stdin(&["free", "-"], r#"{"dim":1,"hyperplanes":[{"coeffs":["1"],"constant":"2"}]}"#);
    assert_eq!(affine.status.code(), Some(2));
}

#[test]
fn extend_outputs_arrangements() {
    let o = multiarr(&["extend", "A2", "--mult", "2,2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["hyperplanes"].as_array().unwrap().len(), 7);

    let o = multiarr(&["extend", "A2", "--mult", "2,2,2", "--decone"]);
    let v = json(&o);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["hyperplanes"].as_array().unwrap().len(), 6);
}

#[test]
fn extend_warns_on_parity_and_fails_without_positive_system() {
    let o = multiarr(&["extend", "parity-violation"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["hyperplanes"].as_array().unwrap().len(), 6);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parity condition fails"));

    let o = multiarr(&["extend", "no-positive-system"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("hyperplanes ["));
    let o = multiarr(&["extend", "no-positive-system", "--find-positive-system"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn extend_accepts_scalings() {
    // x, y and -(x + y): the identity scaling fails, -1 on the last form works.
    let doc = r#"{"dim":2,"hyperplanes":[{"coeffs":["1","0"]},{"coeffs":["0","1"]},{"coeffs":["-1","-1"]}]}"#;
    assert_eq!(with_stdin(&["extend", "-"], doc).status.code(), Some(4));
    let scaled = doc.replace("]}]}", "]}],\"scalings\":[\"1\",\"1\",\"-1\"]}");
    assert_eq!(with_stdin(&["extend", "-"], &scaled).status.code(), Some(0));
    assert_eq!(with_stdin(&["extend", "-", "--find-positive-system"], doc).status.code(), Some(0));
}

#[test]
fn interp_on_a2() {
    let o = multiarr(&["interp", "--type", "A", "--rank", "2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = lines(&o);
    assert_eq!(rows.len(), 9);
    let summary = &rows[8]["summary"];
    assert_eq!(summary["records"], 8);
    assert_eq!(summary["qualifying"], 7);
    assert_eq!(summary["equivalence_holds"], 8);
    assert_eq!(summary["functional_equation_holds"], 8);
    for r in &rows[..8] {
        assert_eq!(r["equivalence"], true);
        if r["qualifies"] == true {
            assert_eq!(r["plus_side"]["verdict"], "free");
            assert_eq!(r["predicted_chi"], true);
        }
    }
}

#[test]
fn interp_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_multiarr"))
            .args(["interp", "--type", "A", "--rank", "2"])
            .env("MULTIARR_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn interp_guards() {
    let o = multiarr(&["interp", "--type", "D", "--rank", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--sample"));
    assert_eq!(multiarr(&["interp", "--type", "E", "--rank", "6"]).status.code(), Some(2));
    assert_eq!(multiarr(&["interp", "--type", "A", "--rank", "2", "--k", "0"]).status.code(), Some(2));
}

#[test]
fn interp_sampling_is_seeded() {
    let args = ["interp", "--type", "A", "--rank", "3", "--sample", "3", "--seed", "5"];
    let a = multiarr(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, multiarr(&args).stdout);
    let rows = lines(&a);
    assert_eq!(rows.last().unwrap()["summary"]["sampled"], true);
    assert_eq!(rows.len(), 4);
}

#[test]
fn scan_extendable_on_a2() {
    let o = multiarr(&["scan-extendable", "--type", "A", "--rank", "2", "--max-mult", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = lines(&o);
    let summary = &rows.last().unwrap()["summary"];
    assert_eq!(summary["multiplicities"], 27);
    // every multiplicity on three lines in the plane is free
    assert_eq!(summary["free"], 27);
}

#[test]
fn builtins_listed() {
    let o = multiarr(&["builtins"]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("shi-A2-cone"));
    assert!(text.contains("a3-free-899"));
}
