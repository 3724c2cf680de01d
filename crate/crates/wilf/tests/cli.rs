//! End-to-end checks of the command-line surface: flag parsing, output
//! shapes, the exit-code contract (0 clean, 1 violation, 2 usage, 3
//! internal), and JSON round-trips.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wilf"))
        .args(args)
        .output()
        .expect("failed to run wilf")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn invariants_mcnugget() {
    let out = run(&["invariants", "6,9,20"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in [
        "f = 43",
        "g = 22",
        "e = 3",
        "m = 6",
        "density = 22/44",
        "atoms = 6,9,20",
    ] {
        assert!(text.contains(line), "missing {line:?} in:\n{text}");
    }
}

#[test]
fn invariants_2_3() {
    let out = run(&["invariants", "2,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("f = 1") && text.contains("g = 1") && text.contains("density = 1/2"));
    assert!(text.contains("gaps = 1"));
}

#[test]
fn invariants_gcd_error_exits_2() {
    let out = run(&["invariants", "4,6"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("gcd must be 1"), "stderr: {err}");
}

#[test]
fn invariants_contains_one_exits_2() {
    let out = run(&["invariants", "1,3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("must not contain 1"), "stderr: {err}");
}

#[test]
fn invariants_json_round_trips() {
    let out = run(&["invariants", "6,9,20", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["f"], 43);
    assert_eq!(v["g"], 22);
    assert_eq!(v["density"]["num"], 22);
    assert_eq!(v["density"]["den"], 44);
    assert_eq!(v["gaps"].as_array().unwrap().len(), 22);
}

#[test]
fn root_prints_floor() {
    let out = run(&["root", "--tol", "1e-6", "--emax", "64", "--grid", "100"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("floor(N) = 104978"), "{text}");
    assert!(text.contains("PASS"));
}

#[test]
fn root_rejects_zero_tolerance() {
    let out = run(&["root", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn root_json() {
    let out = run(&["root", "--emax", "16", "--grid", "50", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n_floor"], 104_978);
    assert_eq!(v["monotone_ok"], true);
    assert_eq!(v["exact_nonneg_ok"], true);
}

#[test]
fn bound_prop1a() {
    let out = run(&["bound", "--e", "4", "--kind", "prop1a"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("= 1/6"));
}

#[test]
fn bound_prop2b_log10() {
    let out = run(&["bound", "--e", "8", "--kind", "prop2b"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("log10 = -6.225"), "{text}");
}

#[test]
fn bound_zhai_exact() {
    let out = run(&[
        "bound", "--e", "3", "--kind", "zhai", "--f", "43", "--m", "6",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("= 83/264"));
}

#[test]
fn bound_zhai_requires_f_and_m() {
    let out = run(&["bound", "--e", "3", "--kind", "zhai"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_prop1a_domain_error_exits_2() {
    let out = run(&["bound", "--e", "8", "--kind", "prop1a"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_lemma2_negates_prop2b() {
    let a = run(&["bound", "--e", "12", "--kind", "prop2b", "--json"]);
    let b = run(&["bound", "--e", "12", "--kind", "lemma2", "--json"]);
    let va: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let vb: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    let sum = va["log10"].as_f64().unwrap() + vb["log10"].as_f64().unwrap();
    assert!(sum.abs() <= 1e-12, "sum = {sum}");
}

#[test]
fn enumerate_counts() {
    let out = run(&["enumerate", "--max-genus", "3", "--emit", "counts"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.lines().collect::<Vec<_>>(),
        vec!["genus=1 count=1", "genus=2 count=2", "genus=3 count=4"]
    );
}

#[test]
fn enumerate_stream_genus_1() {
    let out = run(&["enumerate", "--max-genus", "1", "--emit", "stream"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2,3");
}

#[test]
fn enumerate_filtered_counts_are_subsets() {
    let all = run(&[
        "enumerate",
        "--max-genus",
        "3",
        "--emit",
        "counts",
        "--json",
    ]);
    let e3 = run(&[
        "enumerate",
        "--max-genus",
        "3",
        "--e",
        "3",
        "--emit",
        "counts",
        "--json",
    ]);
    let va: serde_json::Value = serde_json::from_str(&stdout(&all)).unwrap();
    let vb: serde_json::Value = serde_json::from_str(&stdout(&e3)).unwrap();
    let totals = va["counts"].as_array().unwrap();
    let filtered = vb["counts"].as_array().unwrap();
    assert_eq!(totals.len(), filtered.len());
    for (t, f) in totals.iter().zip(filtered) {
        assert!(f.as_u64().unwrap() <= t.as_u64().unwrap());
    }
}

#[test]
fn enumerate_rejects_zero_genus() {
    let out = run(&["enumerate", "--max-genus", "0", "--emit", "counts"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_clean_run_exits_0() {
    let out = run(&["verify", "--max-genus", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("semigroups=49 violations=0"), "{text}");
}

#[test]
fn verify_rejects_zero_genus() {
    let out = run(&["verify", "--max-genus", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_writes_csv_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = run(&[
        "verify",
        "--max-genus",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text
        .starts_with("genus,e,count,min_density_num,min_density_den,argmin_generators,violations"));
    assert!(text.contains("1,2,1,1,2,2;3,0"));
}

#[test]
fn verify_unwritable_destination_exits_2() {
    let out = run(&[
        "verify",
        "--max-genus",
        "2",
        "--out",
        "/nonexistent-dir/r.csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_summary() {
    let out = run(&["verify", "--max-genus", "4", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["semigroups"], 14);
    assert_eq!(v["violations"], 0);
}

#[test]
fn threads_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_wilf"))
        .args(["verify", "--max-genus", "8"])
        .env("WILF_THREADS", "2")
        .output()
        .expect("failed to run wilf");
    assert!(out.status.success());
    // Determinism contract: same summary as an explicit single thread.
    let one = run(&["verify", "--max-genus", "8", "--threads", "1"]);
    assert_eq!(stdout(&out), stdout(&one));
}
