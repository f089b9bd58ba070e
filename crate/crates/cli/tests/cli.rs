use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nicebase"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_l5_is_nice() {
    let o = run(&["check", &fixture("l5.lie")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: nice"));
}

#[test]
fn check_n6_reports_shared_output() {
    let o = run(&["check", &fixture("n6.lie")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation shared-output"));
}

#[test]
fn aa_cyclic4_has_three_classes() {
    let o = run(&["aa", &fixture("cyclic4.mat")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("nu = 3"));
}

#[test]
fn aa_jordan_block_is_negative() {
    let o = run(&["aa", &fixture("d.mat")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not semisimple"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(run(&["check"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["check", "/nonexistent/file.lie"]).status.code(), Some(2));
    assert_eq!(run(&["aa", &fixture("l5.lie")]).status.code(), Some(2));
}

#[test]
fn nu_product_of_n6_and_l5() {
    let o = run(&["nu-product", &fixture("n6.lie"), &fixture("l5.lie")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: nu = 0"));
    let o = run(&["nu-product", &fixture("h3.lie"), &fixture("h3.lie")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("inapplicable"));
}

#[test]
fn pre_einstein_verification() {
    let good = run(&[
        "pre-einstein",
        &fixture("n6.lie"),
        "--verify",
        "9/32,9/16,27/32,27/32,9/8,45/32",
    ]);
    assert_eq!(good.status.code(), Some(0));
    let bad = run(&["pre-einstein", &fixture("h3.lie"), "--verify", "1/2,1/2,1"]);
    assert_eq!(bad.status.code(), Some(1));
    let l5 = run(&["pre-einstein", &fixture("l5.lie")]);
    assert!(stdout(&l5).contains("N = diag(1/6, 3/4, 11/12, 13/12, 5/4)"));
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["aa", &fixture("diag4.mat"), "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["data"]["nu"], "4");
    assert_eq!(v["passed"], true);
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn emitted_graph_algebra_checks_nice() {
    let out = std::env::temp_dir().join(format!("nicebase-cli-{}.lie", std::process::id()));
    let out_s = out.to_string_lossy().into_owned();
    let o = run(&["graph", &fixture("p3_c3.graph"), "--nice", "--emit-algebra", &out_s]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim = 10"));
    let c = run(&["check", &out_s]);
    assert_eq!(c.status.code(), Some(0));
    std::fs::remove_file(out).unwrap();
}

#[test]
fn graph_negative_verdicts() {
    let o = run(&["graph", &fixture("k3_c3.graph")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("3-cycle"));
    let o = run(&["graph", &fixture("p3_c4.graph"), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["data"]["dim"], 20);
}

#[test]
fn catalog3_table_and_classification() {
    let o = run(&["catalog3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("nu = ")).count(), 9);
    let so3 = run(&["catalog3", "--classify", &fixture("so3.lie")]);
    assert!(stdout(&so3).contains("verdict: so_3(R)"));
    let a1 = run(&["catalog3", "--classify", &fixture("aa_a1.lie")]);
    assert!(stdout(&a1).contains("nu = 1"));
}

#[test]
fn reproduce_single_criterion() {
    let o = run(&["reproduce", "--criterion", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[PASS] 2"));
    assert_eq!(run(&["reproduce", "--criterion", "42"]).status.code(), Some(2));
}

#[test]
fn timing_stays_off_stdout() {
    let o = run(&["check", &fixture("h3.lie")]);
    assert!(!stdout(&o).contains("elapsed"));
    assert!(String::from_utf8(o.stderr).unwrap().contains("elapsed"));
}
