//! Acceptance checks, one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use ghcode::codes::{build_code, DEFAULT_DISTANCE_BUDGET};
use ghcode::curve::curve_new;
use ghcode::lattice::DivisorSpec;
use ghcode::verify::{
    check_counting, check_dimension, check_distance, check_duality, check_gv_gap,
    check_support_counts, check_witness,
};

const SEED: u64 = 7;

fn report(criterion: &str, ok: bool) {
    println!("criterion {criterion}: {}", if ok { "PASS" } else { "FAIL" });
}

fn run_cmd(args: &[&str]) -> (Vec<u8>, bool) {
    let out = Command::new(env!("CARGO_BIN_EXE_ghcode"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.stdout, out.status.success())
}

#[test]
fn criterion_01_census() {
    let start = Instant::now();
    let mut ok = true;
    for (q, c, want, per_alpha) in [("2", "5", 496usize, 16usize), ("3", "3", 234, 9)] {
        let (stdout, success) = run_cmd(&["points", "--q", q, "--c", c]);
        let text = String::from_utf8(stdout).expect("utf8");
        let mut by_alpha: BTreeMap<&str, usize> = BTreeMap::new();
        for line in text.lines() {
            let alpha = line.split(' ').next().expect("alpha column");
            *by_alpha.entry(alpha).or_default() += 1;
        }
        ok &= success
            && text.lines().count() == want
            && by_alpha.values().all(|&cnt| cnt == per_alpha);
    }
    ok &= start.elapsed().as_secs_f64() < 5.0;
    report("01 census", ok);
    assert!(ok, "point census or per-alpha counts off");
}

#[test]
fn criterion_02_flagship() {
    let start = Instant::now();
    let cp = curve_new(2, 5).expect("curve");
    let code = build_code(&cp, DivisorSpec::new(324, 0, 0, 0)).expect("build");
    let ok = code.n() == 496
        && code.generator().rank() == 250
        && code.goppa_lower_bound() == 172
        && start.elapsed().as_secs_f64() < 60.0;
    report("02 flagship", ok);
    assert!(ok, "flagship parameters off");
}

#[test]
fn criterion_03_counting() {
    let mut ok = true;
    for (q, c) in [(2, 5), (3, 3)] {
        let cp = curve_new(q, c).expect("curve");
        let section = check_counting(&cp, SEED);
        ok &= section.passed;
        if !section.passed {
            eprintln!("({q},{c}) {}", section.detail);
        }
    }
    report("03 counting", ok);
    assert!(ok, "counting sections failed");
}

#[test]
fn criterion_04_dimension() {
    let mut ok = true;
    for (q, c) in [(2, 5), (3, 3)] {
        let cp = curve_new(q, c).expect("curve");
        let section = check_dimension(&cp, SEED);
        ok &= section.passed;
        if !section.passed {
            eprintln!("({q},{c}) {}", section.detail);
        }
    }
    report("04 dimension", ok);
    assert!(ok, "dimension sections failed");
}

#[test]
fn criterion_05_duality() {
    let mut ok = true;
    for (q, c) in [(2, 5), (3, 3)] {
        let cp = curve_new(q, c).expect("curve");
        let section = check_duality(&cp, SEED);
        ok &= section.passed;
        if !section.passed {
            eprintln!("({q},{c}) {}", section.detail);
        }
    }
    report("05 duality", ok);
    assert!(ok, "duality sections failed");
}

#[test]
fn criterion_06_support_counts() {
    let mut ok = true;
    for (q, c) in [(2, 5), (3, 3)] {
        let cp = curve_new(q, c).expect("curve");
        let section = check_support_counts(&cp, SEED);
        ok &= section.passed;
        if !section.passed {
            eprintln!("({q},{c}) {}", section.detail);
        }
    }
    report("06 support counts", ok);
    assert!(ok, "support count sections failed");
}

#[test]
fn criterion_07_witness() {
    let cp = curve_new(3, 3).expect("curve");
    let section = check_witness(&cp, SEED);
    report("07 witness", section.passed);
    assert!(section.passed, "{}", section.detail);
}

#[test]
fn criterion_08_min_distance() {
    let cp = curve_new(3, 3).expect("curve");
    let section = check_distance(&cp);
    let mut ok = section.passed;
    let code = build_code(&cp, DivisorSpec::new(0, 0, 0, 0)).expect("build");
    ok &= ghcode::codes::min_distance_bruteforce(&code, DEFAULT_DISTANCE_BUDGET)
        .expect("sweep fits the budget")
        == 234;
    report("08 min distance", ok);
    assert!(ok, "{}", section.detail);
}

#[test]
fn criterion_09_gv_gap() {
    let cp = curve_new(2, 5).expect("curve");
    let section = check_gv_gap(&cp);
    report("09 gv gap", section.passed);
    assert!(section.passed, "{}", section.detail);
}

#[test]
fn criterion_10_determinism() {
    let tmp = env!("CARGO_TARGET_TMPDIR");
    let out_a = format!("{tmp}/gen_a.txt");
    let out_b = format!("{tmp}/gen_b.txt");
    let commands: Vec<Vec<String>> = vec![
        vec!["params", "--q", "2", "--c", "5"],
        vec!["params", "--q", "3", "--c", "3"],
        vec!["points", "--q", "2", "--c", "5"],
        vec!["points", "--q", "3", "--c", "3"],
        vec!["omega", "--q", "3", "--c", "3", "--v", "100", "--r", "1", "--s", "-3", "--t", "5"],
        vec!["omega", "--q", "2", "--c", "5", "--v", "200", "--r", "0", "--s", "0", "--t", "0",
            "--prime"],
        vec!["code", "--q", "2", "--c", "5", "--v", "324", "--r", "0", "--s", "0", "--t", "0"],
        vec!["code", "--q", "3", "--c", "3", "--v", "10", "--r", "0", "--s", "2", "--t", "1",
            "--check-dual", "--min-dist"],
        vec!["dual", "--q", "2", "--c", "5", "--v", "324", "--r", "0", "--s", "0", "--t", "0"],
        vec!["table", "--q", "3", "--c", "3", "--sweep", "0:306:17"],
        vec!["gv-compare", "--q", "2", "--c", "5", "--sweep", "150:450:25"],
        vec!["verify", "--q", "2", "--c", "5", "--seed", "7"],
        vec!["verify", "--q", "3", "--c", "3", "--seed", "7"],
    ]
    .into_iter()
    .map(|argv| argv.into_iter().map(String::from).collect())
    .collect();
    let mut ok = true;
    for argv in &commands {
        let args: Vec<&str> = argv.iter().map(String::as_str).collect();
        let (first, ok_a) = run_cmd(&args);
        let (second, ok_b) = run_cmd(&args);
        if first != second || !ok_a || !ok_b {
            eprintln!("output differs or command failed: {argv:?}");
            ok = false;
        }
    }
    let file_args = ["code", "--q", "3", "--c", "3", "--v", "60", "--r", "0", "--s", "0",
        "--t", "0", "--out"];
    let mut with_a: Vec<&str> = file_args.to_vec();
    with_a.push(&out_a);
    let mut with_b: Vec<&str> = file_args.to_vec();
    with_b.push(&out_b);
    let (sum_a, ok_a) = run_cmd(&with_a);
    let (sum_b, ok_b) = run_cmd(&with_b);
    let bytes_a = std::fs::read(&out_a).expect("first matrix file");
    let bytes_b = std::fs::read(&out_b).expect("second matrix file");
    ok &= ok_a && ok_b && sum_a == sum_b && bytes_a == bytes_b && !bytes_a.is_empty();
    report("10 determinism", ok);
    assert!(ok, "a command produced differing bytes across runs");
}
