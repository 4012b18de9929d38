//! End-to-end tests of the `qaovar` binary: exit codes, output schemas,
//! and byte-level reproducibility of emitted tables.

use std::path::Path;
use std::process::{Command, Output};

fn qaovar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qaovar"))
        .args(args)
        .env("QAOVAR_QUIET", "1")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn solve_prints_published_ground_state() {
    let out = qaovar(&["solve", "--family", "howf", "--n", "0", "--lambda", "0.25"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("alpha = 0.835913"), "stdout:\n{text}");
    assert!(text.contains("E = 0.624016"), "stdout:\n{text}");
}

#[test]
fn solve_accepts_fraction_lambda() {
    let a = stdout(&qaovar(&[
        "solve", "--family", "howf", "--n", "0", "--lambda", "1/4",
    ]));
    let b = stdout(&qaovar(&[
        "solve", "--family", "howf", "--n", "0", "--lambda", "0.25",
    ]));
    let pick = |t: &str| {
        t.lines()
            .filter(|l| l.starts_with("alpha") || l.starts_with("E ="))
            .map(String::from)
            .collect::<Vec<_>>()
    };
    assert_eq!(pick(&a), pick(&b));
}

#[test]
fn solve_ppewf_odd_sector() {
    let out = qaovar(&[
        "solve",
        "--family",
        "ppewf",
        "--n",
        "1",
        "--lambda",
        "1",
        "--even-odd-only",
        "--restarts",
        "6",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("a = 0\n"), "stdout:\n{text}");
    assert!(text.contains("c = 0\n"), "stdout:\n{text}");
    let e: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("E = "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((e - 2.7380).abs() < 5e-3, "E = {e}");
}

#[test]
fn oracle_prints_exact_ground_energy() {
    let out = qaovar(&["oracle", "--lambda", "1", "--levels", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let e: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("E_0 = "))
        .expect("ground energy line")
        .parse()
        .unwrap();
    assert!((e - 0.8038).abs() < 5e-4, "E_0 = {e}");
}

#[test]
fn table_all_writes_eight_tables_and_a_run_record() {
    let dir = tempfile::tempdir().unwrap();
    let out = qaovar(&[
        "table",
        "all",
        "--output-dir",
        dir.path().to_str().unwrap(),
        "--restarts",
        "4",
    ]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    for id in 1..=8 {
        let path = dir.path().join(format!("table{id}.csv"));
        assert!(path.exists(), "missing {}", path.display());
    }
    let record = dir.path().join("run_record.json");
    assert!(record.exists());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&record).unwrap()).unwrap();
    assert_eq!(parsed["failed_rows"], 0);
    assert_eq!(parsed["tables"].as_array().unwrap().len(), 8);
    assert!(parsed["wall_clock_seconds"].as_f64().unwrap() > 0.0);

    // Pinned headers.
    let t3 = std::fs::read_to_string(dir.path().join("table3.csv")).unwrap();
    assert!(t3.starts_with(
        "lambda,E_exact,E_wkb_cited,E_qlm_cited,E_expansion_cited,E_showf,E_ppewf,\
         err_wkb,err_qlm,err_expansion,err_showf,err_ppewf\n"
    ));
    let t5 = std::fs::read_to_string(dir.path().join("table5.csv")).unwrap();
    assert!(t5.starts_with("lambda,alpha,alpha_prime,a,b,c,d,E_v1,E_v2,E_exact,collapsed\n"));
    // The n = 2 rows collapse and say so.
    assert!(t5.contains(",true\n"));
}

#[test]
fn identical_invocations_produce_identical_csv() {
    // Same config and seeds must give byte-identical tables, whatever the
    // worker count.
    let run = |dir: &Path, jobs: &str| {
        let out = qaovar(&[
            "table",
            "3",
            "--output-dir",
            dir.to_str().unwrap(),
            "--lambda-grid",
            "0,1/2,2",
            "--restarts",
            "3",
            "--seed",
            "71",
            "--jobs",
            jobs,
        ]);
        assert!(out.status.success());
        std::fs::read(dir.join("table3.csv")).unwrap()
    };
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    assert_eq!(run(d1.path(), "1"), run(d2.path(), "4"));
}

#[test]
fn wavefunction_exports_samples() {
    let dir = tempfile::tempdir().unwrap();
    let out = qaovar(&[
        "wavefunction",
        "--family",
        "howf",
        "--n",
        "1",
        "--lambda",
        "1",
        "--samples",
        "200",
        "--output-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let path = stdout(&out).trim().to_string();
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("x,psi\n"));
    assert_eq!(text.lines().count(), 201);
}

#[test]
fn selfcheck_passes() {
    let out = qaovar(&["selfcheck"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("selfcheck:"), "stdout:\n{text}");
    assert!(!text.contains("FAIL"), "stdout:\n{text}");
    assert!(text.contains("printed-expression diff"), "stdout:\n{text}");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(qaovar(&["table", "9"]).status.code(), Some(1));
    assert_eq!(
        qaovar(&["--no-such-flag", "selfcheck"]).status.code(),
        Some(1)
    );
    assert_eq!(
        qaovar(&["solve", "--family", "howf", "--n", "0", "--lambda", "-2"])
            .status
            .code(),
        Some(1)
    );
    // Levels beyond the oracle's range.
    assert_eq!(
        qaovar(&["oracle", "--lambda", "1", "--levels", "13"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn solver_failures_exit_two() {
    // The optimal scale for an extreme coupling leaves the fixed bracket.
    let out = qaovar(&["solve", "--family", "howf", "--n", "0", "--lambda", "1e12"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn io_failures_exit_three() {
    let out = qaovar(&["table", "1", "--output-dir", "/dev/null/not-a-directory"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn config_file_drives_a_run() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("qaovar.conf");
    let outdir = dir.path().join("out");
    std::fs::write(
        &conf,
        format!(
            "lambda_grid = 0, 1\nrestarts = 2\nseed = 9\noutput_dir = {}\n",
            outdir.display()
        ),
    )
    .unwrap();
    let out = qaovar(&["table", "2", "--config", conf.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(outdir.join("table2.csv")).unwrap();
    assert_eq!(text.lines().count(), 3, "header plus two λ rows:\n{text}");

    let bad = dir.path().join("bad.conf");
    std::fs::write(&bad, "oracle_tol = fast\n").unwrap();
    assert_eq!(
        qaovar(&["table", "2", "--config", bad.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}
