use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use zetadim::curve_file::{parse_curve, parse_plateau};
use zetadim::spectrum_file::format_spectrum;
use zetadim::zerofile::import_zero_file;
use zetadim_core::spectra::sphere_dirac;

fn zetadim(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetadim"))
        .current_dir(dir)
        .env_remove("ZETADIM_CACHE")
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_writes_hundred_zeros() {
    let dir = tempfile::tempdir().unwrap();
    let o = zetadim(
        dir.path(),
        &["zeros", "compute", "--count", "100", "--out", "z.txt"],
    );
    assert_eq!(code(&o), 0);
    let table = import_zero_file(&dir.path().join("z.txt")).unwrap();
    assert_eq!(table.len(), 100);
    assert!((table.heights()[0] - 14.134725).abs() < 1e-6);
    assert!(dir.path().join(".zetadim-cache/n100.zeros").is_file());
}

#[test]
fn compute_by_height_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let o = zetadim(dir.path(), &["zeros", "compute", "--tmax", "100"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 29);
}

#[test]
fn import_rejects_non_monotone_with_line() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "21.0\n14.1\n").unwrap();
    let o = zetadim(dir.path(), &["zeros", "import", "--file", "bad.txt"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn import_stores_valid_table() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("z.txt"), "# offset 1000\n0.5\n1.5\n").unwrap();
    let o = zetadim(dir.path(), &["zeros", "import", "--file", "z.txt"]);
    assert_eq!(code(&o), 0);
    let stored = fs::read_to_string(dir.path().join(".zetadim-cache/imported-2.zeros")).unwrap();
    assert_eq!(stored, "1000.5\n1001.5\n");
    let missing = zetadim(dir.path(), &["zeros", "import", "--file", "nope.txt"]);
    assert_eq!(code(&missing), 1);
}

#[test]
fn check_reports_small_deviation() {
    let dir = tempfile::tempdir().unwrap();
    let o = zetadim(dir.path(), &["zeros", "check", "--count", "50"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let dev: f64 = out
        .split_whitespace()
        .find_map(|w| w.strip_prefix("max_abs_deviation="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(dev < 1e-6, "{out}");
}

#[test]
fn cache_flag_beats_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = |extra: &[&str], env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_zetadim"));
        cmd.current_dir(dir.path()).env_remove("ZETADIM_CACHE");
        if let Some(e) = env {
            cmd.env("ZETADIM_CACHE", e);
        }
        cmd.args(extra)
            .args(["zeros", "compute", "--count", "5"])
            .output()
            .unwrap()
    };
    assert_eq!(code(&run(&[], Some("from-env"))), 0);
    assert!(dir.path().join("from-env/n5.zeros").is_file());
    assert_eq!(
        code(&run(&["--cache-dir", "from-flag"], Some("from-env"))),
        0
    );
    assert!(dir.path().join("from-flag/n5.zeros").is_file());
    assert_eq!(code(&run(&[], None)), 0);
    assert!(dir.path().join(".zetadim-cache/n5.zeros").is_file());
}

#[test]
fn dim_and_plateau_on_circle() {
    let dir = tempfile::tempdir().unwrap();
    let o = zetadim(
        dir.path(),
        &["dim", "--spectrum", "circle:10000", "--out", "c.csv"],
    );
    assert_eq!(code(&o), 0);
    let (curve, meta) =
        parse_curve(&fs::read_to_string(dir.path().join("c.csv")).unwrap()).unwrap();
    assert_eq!(curve.len(), 200);
    assert_eq!(curve.total_multiplicity, 20000);
    assert!(meta.get("grid").is_some());
    let p = zetadim(dir.path(), &["plateau", "--curve", "c.csv"]);
    assert_eq!(code(&p), 0);
    let report = parse_plateau(&stdout(&p)).unwrap();
    assert!((report.mean_dim - 1.0).abs() < 0.02, "{report:?}");
}

#[test]
fn plateau_exit_three_when_window_too_narrow() {
    let dir = tempfile::tempdir().unwrap();
    // 16 points spanning 0.1 e-fold
    let hi = 10.0 * 0.1f64.exp();
    let grid = format!("10:{hi}:16");
    let o = zetadim(
        dir.path(),
        &[
            "dim",
            "--spectrum",
            "circle:100",
            "--grid",
            &grid,
            "--out",
            "n.csv",
        ],
    );
    assert_eq!(code(&o), 0);
    let p = zetadim(dir.path(), &["plateau", "--curve", "n.csv"]);
    assert_eq!(code(&p), 3);
    assert!(!parse_plateau(&stdout(&p)).unwrap().found);
}

#[test]
fn dim_rejects_bad_descriptors() {
    let dir = tempfile::tempdir().unwrap();
    for spec in [
        "gue:10",
        "torus:4:10",
        "circle:3",
        "riemann:0",
        "missing.csv",
    ] {
        let o = zetadim(dir.path(), &["dim", "--spectrum", spec]);
        assert_ne!(code(&o), 0, "{spec}");
    }
    assert_eq!(
        code(&zetadim(dir.path(), &["dim", "--spectrum", "torus:4:10"])),
        2
    );
    assert_eq!(
        code(&zetadim(
            dir.path(),
            &["dim", "--spectrum", "circle:20", "--grid", "1:2"]
        )),
        2
    );
}

#[test]
fn dim_reads_spectrum_files() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("s.csv"),
        format_spectrum(&sphere_dirac(40).unwrap()),
    )
    .unwrap();
    let from_file = zetadim(dir.path(), &["dim", "--spectrum", "s.csv"]);
    let direct = zetadim(dir.path(), &["dim", "--spectrum", "sphere:40"]);
    let (a, _) = parse_curve(&stdout(&from_file)).unwrap();
    let (b, _) = parse_curve(&stdout(&direct)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn compare_identity_and_overlap() {
    let dir = tempfile::tempdir().unwrap();
    zetadim(
        dir.path(),
        &["dim", "--spectrum", "sphere:100", "--out", "a.csv"],
    );
    let o = zetadim(dir.path(), &["compare", "--a", "a.csv", "--b", "a.csv"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("max_abs_diff=0\n"));
    zetadim(
        dir.path(),
        &[
            "dim",
            "--spectrum",
            "sphere:100",
            "--grid",
            "1:2:16",
            "--out",
            "b.csv",
        ],
    );
    let short = zetadim(dir.path(), &["compare", "--a", "a.csv", "--b", "b.csv"]);
    assert_eq!(code(&short), 2);
}

#[test]
fn svg_matches_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = zetadim(
        dir.path(),
        &[
            "dim",
            "--spectrum",
            "sphere:30",
            "--grid",
            "0.5:300:40",
            "--out",
            "s.csv",
            "--svg",
            "s.svg",
        ],
    );
    assert_eq!(code(&o), 0);
    let got = fs::read_to_string(dir.path().join("s.svg")).unwrap();
    let golden = include_str!("golden/sphere30.svg");
    assert_eq!(got, golden);
}
