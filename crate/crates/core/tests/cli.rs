//! End-to-end runs of the `cubelearn` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use cubelearn::mondec::parse_formula;
use cubelearn::{CubeUnion, Point};
use serde_json::Value;

const IMPLIES5: &str =
    "(declare-const x Int)\n(declare-const y Int)\n(assert (=> (>= x 0) (and (>= (+ x y) 5) (>= y 0))))\n";

fn cubelearn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubelearn")).args(args).env_remove("CUBELEARN_SOLVER_CMD").output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn z3_available() -> bool {
    Command::new("z3").arg("-version").output().map(|o| o.status.success()).unwrap_or(false)
}

/// The decomposition agrees with the input formula on [-20, 20]².
fn check_implies5(union: &CubeUnion) {
    let f = parse_formula(IMPLIES5).unwrap().formula;
    for x in -20..=20 {
        for y in -20..=20 {
            let v = Point::from([x, y]);
            assert_eq!(union.contains(&v).unwrap(), f.eval(&v), "{v}");
        }
    }
}

#[test]
fn learn_two_cubes() {
    let dir = tempfile::tempdir().unwrap();
    let target = r#"{"dim": 2, "cubes": [{"lo": [0,0], "hi": [3,3]}, {"lo": [10,2], "hi": [14,9]}]}"#;
    let path = write(dir.path(), "two_cubes.json", target);
    let out = cubelearn(&["learn", "--target", &path, "--algorithm", "overshoot-addremove-opt", "--search", "binary"]);
    let v = stdout_json(&out);
    let learned: CubeUnion = serde_json::from_value(v["hypothesis"].clone()).unwrap();
    let expected: CubeUnion = serde_json::from_str(target).unwrap();
    assert!(learned.set_eq(&expected).unwrap());
    assert!(v["stats"]["equivalence"].as_u64().unwrap() <= 16);
}

#[test]
fn learn_with_each_counterexample_policy() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "t.json", r#"{"dim": 1, "cubes": [{"lo": [3], "hi": ["+inf"]}]}"#);
    let script = write(dir.path(), "cex.json", "[[3]]");
    for (alg, cex) in [("maxcube", "lex-min"), ("infinity-meq", "min-corner"), ("maxcube", &format!("script:{script}"))]
    {
        let v = stdout_json(&cubelearn(&["learn", "--target", &path, "--algorithm", alg, "--counterexample", cex]));
        assert_eq!(v["hypothesis"]["cubes"][0]["hi"][0], "+inf", "{alg} {cex}");
    }
    // The default policy for infinity-meq is min-corner.
    stdout_json(&cubelearn(&["learn", "--target", &path, "--algorithm", "infinity-meq"]));
}

#[test]
fn learn_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"dim": 1, "cubes": [{"lo": [5], "hi": [3]}]}"#);
    assert_eq!(cubelearn(&["learn", "--target", &bad]).status.code(), Some(2));
    let half = write(dir.path(), "half.json", r#"{"dim": 1, "cubes": [{"lo": [3], "hi": ["+inf"]}]}"#);
    let out = cubelearn(&["learn", "--target", &half, "--algorithm", "overshoot-sym"]);
    assert_eq!(out.status.code(), Some(4));
    let out = cubelearn(&["learn", "--target", &half, "--algorithm", "maxcube", "--finite-only"]);
    assert_eq!(out.status.code(), Some(4));
    let many =
        write(dir.path(), "many.json", r#"{"dim": 1, "cubes": [{"lo": [0], "hi": [0]}, {"lo": [2], "hi": [2]}]}"#);
    let out = cubelearn(&["learn", "--target", &many, "--max-iterations", "1"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(cubelearn(&["learn", "--target", &many, "--algorithm", "nope"]).status.code(), Some(2));
}

#[test]
fn mondec_brute_writes_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "implies5.smt2", IMPLIES5);
    let outbase = dir.path().join("decomp");
    let out = cubelearn(&[
        "mondec",
        "--formula",
        &f,
        "--teacher",
        "brute:-20:20",
        "--algorithm",
        "maxcube",
        "--search",
        "optimized",
        "--max-iterations",
        "100",
        "--output",
        outbase.to_str().unwrap(),
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["variables"], serde_json::json!(["x", "y"]));
    let union: CubeUnion = serde_json::from_str(&fs::read_to_string(dir.path().join("decomp.json")).unwrap()).unwrap();
    check_implies5(&union);
    let smt = fs::read_to_string(dir.path().join("decomp.smt2")).unwrap();
    let reparsed = parse_formula(&smt).unwrap();
    assert!(reparsed.formula.is_monadic());
    for x in -20..=20 {
        for y in -20..=20 {
            let p = Point::from([x, y]);
            assert_eq!(reparsed.formula.eval(&p), union.contains(&p).unwrap());
        }
    }
}

#[test]
fn mondec_with_z3() {
    if !z3_available() {
        eprintln!("z3 not found, skipping");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "implies5.smt2", IMPLIES5);
    for alg in ["maxcube", "infinity-meq"] {
        let out = cubelearn(&[
            "mondec",
            "--formula",
            &f,
            "--teacher",
            "smt:\"z3 -in\"",
            "--algorithm",
            alg,
            "--search",
            "optimized",
        ]);
        let v = stdout_json(&out);
        check_implies5(&serde_json::from_value(v["decomposition"].clone()).unwrap());
    }
    // The same through the environment variable.
    let out = Command::new(env!("CARGO_BIN_EXE_cubelearn"))
        .args(["mondec", "--formula", &f, "--teacher", "smt"])
        .env("CUBELEARN_SOLVER_CMD", "z3 -in")
        .output()
        .unwrap();
    check_implies5(&serde_json::from_value(stdout_json(&out)["decomposition"].clone()).unwrap());
}

#[test]
fn mondec_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.smt2", "(declare-const x Int)(assert (>= x y))");
    assert_eq!(cubelearn(&["mondec", "--formula", &bad, "--teacher", "brute:0:1"]).status.code(), Some(2));
    let f = write(dir.path(), "f.smt2", IMPLIES5);
    assert_eq!(cubelearn(&["mondec", "--formula", &f]).status.code(), Some(2));
    let out = cubelearn(&["mondec", "--formula", &f, "--teacher", "smt:/nonexistent/solver"]);
    assert_eq!(out.status.code(), Some(3));
    // x = y is not monadic over an unbounded domain; the box makes it finite
    // but far too large for the budget.
    let diag = write(dir.path(), "diag.smt2", "(declare-const x Int)(declare-const y Int)(assert (= x y))");
    let out = cubelearn(&["mondec", "--formula", &diag, "--teacher", "brute:-50:50", "--max-iterations", "5"]);
    assert_eq!(out.status.code(), Some(4));
    let out = cubelearn(&["mondec", "--formula", &diag, "--teacher", "brute:-5000:5000", "--timeout-ms", "0"]);
    assert_eq!(out.status.code(), Some(5));
}

fn csv_rows(path: &Path) -> Vec<Vec<String>> {
    fs::read_to_string(path).unwrap().lines().map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

#[test]
fn bench_diagonal_points() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let out =
        cubelearn(&["bench", "--suite", "diagonal-points", "--param", "50:200:50", "--csv", csv.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = csv_rows(&csv);
    assert_eq!(rows[0].join(","), cubelearn::bench::CSV_HEADER);
    let body = &rows[1..];
    assert_eq!(body.len(), 4 * 2 * 3);
    let mut variants: Vec<(String, String)> = body.iter().map(|r| (r[2].clone(), r[3].clone())).collect();
    variants.sort();
    variants.dedup();
    assert_eq!(variants.len(), 6);
    for (alg, search) in variants {
        let cells: Vec<&Vec<String>> = body.iter().filter(|r| r[2] == alg && r[3] == search).collect();
        assert_eq!(cells.len(), 4);
        let eq: Vec<u64> = cells.iter().map(|r| r[4].parse().unwrap()).collect();
        assert!(eq.windows(2).all(|w| w[0] <= w[1]), "{alg} {search}: {eq:?}");
        for r in cells {
            let k: u64 = r[1].parse().unwrap();
            assert_eq!(r[8].parse::<u64>().unwrap(), k + 1);
        }
    }
}

#[test]
fn bench_is_byte_stable_and_appends() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let csv = dir.path().join(name);
        let args = ["bench", "--suite", "a", "--param", "3:5", "--csv", csv.to_str().unwrap(), "--deterministic"];
        assert!(cubelearn(&args).status.success());
        csv
    };
    let a = fs::read(run("a.csv")).unwrap();
    let b = fs::read(run("b.csv")).unwrap();
    assert_eq!(a, b);
    let again = fs::read_to_string(run("a.csv")).unwrap();
    assert_eq!(again.matches("benchmark,param").count(), 1);
    assert_eq!(again.lines().count(), 1 + 2 * 3 * 6);
}

#[test]
fn bench_implies_overshooting_fails_with_unbounded_code() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("f.csv");
    let out = cubelearn(&[
        "bench",
        "--suite",
        "implies",
        "--param",
        "5",
        "--csv",
        csv.to_str().unwrap(),
        "--algorithms",
        "overshoot-addremove-opt,maxcube,infinity-meq",
        "--searches",
        "binary",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let rows = csv_rows(&csv);
    assert_eq!(rows[1][2..].join(","), "overshoot-addremove-opt,binary,,,,,,-2");
    assert_eq!(rows[2][8], "7");
    assert_eq!(rows[3][8], "7");
}

#[test]
fn bench_timeout_marks_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let out = cubelearn(&[
        "bench",
        "--suite",
        "big-cubes",
        "--param",
        "4",
        "--csv",
        csv.to_str().unwrap(),
        "--timeout-ms",
        "0",
        "--algorithms",
        "maxcube",
        "--searches",
        "unary",
    ]);
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(csv_rows(&csv)[1].join(","), "big-cubes,4,maxcube,unary,,,,,,-1");
}

#[test]
fn usage_errors() {
    assert_eq!(cubelearn(&[]).status.code(), Some(2));
    assert_eq!(cubelearn(&["bench", "--suite", "zzz", "--param", "1", "--csv", "x"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("x.csv");
    let out = cubelearn(&["bench", "--suite", "e", "--param", "9:1", "--csv", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
