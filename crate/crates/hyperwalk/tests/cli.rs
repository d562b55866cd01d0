use std::path::PathBuf;
use std::process::{Command, Output};

fn hyperwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperwalk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/v1")
}

/// Compares against a stored file; `UPDATE_GOLDEN=1` rewrites it instead.
fn golden(name: &str, args: &[&str]) {
    let o = hyperwalk(args);
    assert!(o.status.success(), "{}", stderr(&o));
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, &o.stdout).unwrap();
    }
    let want = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(o.stdout == want, "{name} differs from {}:\n{}", path.display(), stdout(&o));
}

#[test]
fn golden_spectrum_bn3() {
    golden("spectrum_bn3_aggregate.json", &["spectrum", "--walk", "bn", "--n", "3", "--aggregate"]);
}

#[test]
fn golden_spectrum_sn4() {
    golden("spectrum_sn4_quarter.csv", &["spectrum", "--walk", "sn", "--n", "4", "--a", "0.25", "--format", "csv"]);
}

#[test]
fn golden_spectrum_dn3() {
    golden("spectrum_dn3.json", &["spectrum", "--walk", "dn", "--n", "3"]);
}

#[test]
fn golden_tv_curve_bn3() {
    golden("tv_curve_bn3_exact.csv", &["tv-curve", "--walk", "bn", "--n", "3", "--k-max", "12", "--exact-rational"]);
}

#[test]
fn golden_bounds_curve_bn4() {
    golden(
        "bounds_curve_bn4.csv",
        &["bounds-curve", "--walk", "bn", "--n", "4", "--k-max", "16", "--with-tv", "--exact-rational"],
    );
}

#[test]
fn golden_simulate_bn8() {
    golden("simulate_bn8.csv", &["simulate", "--walk", "bn", "--n", "8", "--k", "0,4,16", "--trials", "3000", "--seed", "11"]);
}

#[test]
fn aggregate_totals_group_order() {
    let o = hyperwalk(&["spectrum", "--walk", "bn", "--n", "3", "--aggregate"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total_multiplicity"], "48");
    let sum: u64 = v["records"].as_array().unwrap().iter().map(|r| r["multiplicity"].as_str().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(sum, 48);
}

#[test]
fn sn_spectrum_has_standard_representation_lines() {
    let o = hyperwalk(&["spectrum", "--walk", "sn", "--n", "4", "--a", "1/4", "--format", "csv"]);
    let out = stdout(&o);
    // (n+a-2)/(n-1) = 3/4 and (an-1)/(n-1) = 0 on (3,1), each copy of dimension 3.
    assert!(out.contains("3,4,0.75,6,\"(3,1)\","), "{out}");
    assert!(out.contains("0,1,0,3,\"(3,1)\","), "{out}");
}

#[test]
fn tv_curve_starts_right_and_never_rises() {
    let o = hyperwalk(&["tv-curve", "--walk", "dn", "--n", "4", "--k-max", "30"]);
    let rows: Vec<Vec<String>> = stdout(&o).lines().skip(1).map(|l| l.split(',').map(str::to_owned).collect()).collect();
    assert_eq!(rows.len(), 31);
    let tv: Vec<f64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    assert_eq!(tv[0], 1.0 - 1.0 / 192.0);
    assert!(tv.windows(2).all(|w| w[1] <= w[0]));
    assert!(stderr(&o).contains("tv-curve: dn n=4"));
}

#[test]
fn bounds_curve_closed_form_starts_at_threshold() {
    let o = hyperwalk(&["bounds-curve", "--walk", "bn", "--n", "5", "--k-max", "12"]);
    let rows: Vec<Vec<String>> = stdout(&o).lines().skip(1).map(|l| l.split(',').map(str::to_owned).collect()).collect();
    let first = rows.iter().find(|r| !r[4].is_empty()).unwrap();
    assert_eq!(first[0], "9"); // ceil(5 ln 5) = 9
    assert_eq!(rows[0][1], "0.6"); // 1 - 2/n
}

#[test]
fn bounds_curve_with_c_grid() {
    let o = hyperwalk(&["bounds-curve", "--walk", "dn", "--n", "10", "--c", "-1,0,2", "--param", "half"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("c,k,lower,tv_exact,ds_upper,closed_upper,n,walk_kind\n"));
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn mixing_time_reports_all_crossings() {
    let o = hyperwalk(&["mixing-time", "--walk", "bn", "--n", "4"]);
    assert_eq!(stdout(&o), "walk_kind,n,threshold,tv_k,lower_k,ds_k\nbn,4,0.25,7,1,8\n");
    let o = hyperwalk(&["mixing-time", "--walk", "bn", "--n", "3", "--threshold", "0", "--k-max", "5"]);
    assert!(stdout(&o).contains("not reached"));
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("hyperwalk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tv.csv");
    let o = hyperwalk(&["tv-curve", "--walk", "bn", "--n", "3", "--k-max", "1", "--exact-rational", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "k,tv,mode,n,walk_kind\n0,47/48,exact,3,bn\n1,7/8,exact,3,bn\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn simulation_is_deterministic_across_thread_counts() {
    let args = ["simulate", "--walk", "dn", "--n", "9", "--k", "5,20", "--trials", "2000", "--seed", "3"];
    let one = hyperwalk(&[&args[..], &["--threads", "1"]].concat());
    let four = hyperwalk(&[&args[..], &["--threads", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn usage_errors_exit_2_and_name_the_flag() {
    for (args, flag) in [
        (vec!["spectrum", "--walk", "bn-alpha", "--n", "3", "--alpha", "2"], "--alpha"),
        (vec!["spectrum", "--walk", "sn", "--n", "3", "--a", "0"], "--a"),
        (vec!["spectrum", "--walk", "sn", "--n", "3", "--a", "x"], "--a"),
        (vec!["spectrum", "--walk", "bn", "--n", "1"], "--n"),
        (vec!["spectrum", "--walk", "bn", "--n", "3", "--a", "0.5"], "--a"),
        (vec!["verify", "--suite", "nope"], "--suite"),
        (vec!["mixing-time", "--walk", "bn", "--n", "3", "--threshold", "2"], "--threshold"),
        (vec!["spectrum", "--walk", "xx", "--n", "3"], "--walk"),
    ] {
        let o = hyperwalk(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(flag), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn caps_exit_3() {
    let o = hyperwalk(&["tv-curve", "--walk", "bn", "--n", "7", "--k-max", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let o = hyperwalk(&["tv-curve", "--walk", "bn", "--n", "3", "--k-max", "2", "--max-n", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_suites_pass() {
    for (suite, n) in [("oracle", "4"), ("projection", "4"), ("lemmas", "6"), ("moments", "4"), ("counting", "6")] {
        let o = hyperwalk(&["verify", "--suite", suite, "--n-max", n]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("PASS"), "{}", stdout(&o));
    }
}
