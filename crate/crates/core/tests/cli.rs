use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn qstrata(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qstrata"))
        .args(args)
        .env_remove("ORBIT_ATLAS_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_reports() {
    let dir = TempDir::new().unwrap();
    let third = 1.0 / 3.0;
    let random = write(
        &dir,
        "random.json",
        &format!(r#"{{"dim": 3, "re": [[{third}, 0, 0], [0, {third}, 0], [0, 0, {third}]]}}"#),
    );
    let report = json(&qstrata(&["classify", "--input", &random]));
    assert_eq!(report["state_class"], "CompletelyRandom");
    assert_eq!(report["orbit_dimension"], 0);
    assert_eq!(report["coherence_radius"].as_f64().unwrap(), 0.0);
    assert!((report["entropy"].as_f64().unwrap() - 3f64.ln()).abs() < 1e-11);

    let pseudo = write(
        &dir,
        "pseudo.json",
        r#"{"dim": 3, "re": [[0.6, 0, 0], [0, 0.2, 0], [0, 0, 0.2]]}"#,
    );
    let report = json(&qstrata(&["classify", "--input", &pseudo]));
    assert_eq!(report["state_class"], "PseudoPure");
    assert!(report["manifold"].as_str().unwrap().contains("CP^2"));
    assert_eq!(report["orbit_dimension"], 4);
    assert_eq!(report["multiplicities"], serde_json::json!([1, 2]));
    assert!((report["purity"].as_f64().unwrap() - 0.44).abs() < 1e-12);
    // |s|² = Tr ρ² - 1/n
    let radius = report["coherence_radius"].as_f64().unwrap();
    assert!((radius * radius - (0.44 - 1.0 / 3.0)).abs() < 1e-11);
}

#[test]
fn classify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let not_psd = write(
        &dir,
        "bad.json",
        r#"{"dim": 2, "re": [[1.2, 0], [0, -0.2]]}"#,
    );
    let out = qstrata(&["classify", "--input", &not_psd]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("positivity violated"));

    let not_hermitian = write(
        &dir,
        "nh.json",
        r#"{"dim": 2, "re": [[0.5, 0.1], [0, 0.5]]}"#,
    );
    let out = qstrata(&["classify", "--input", &not_hermitian]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hermiticity violated"));

    for text in [
        "",
        "{",
        "[1]",
        r#"{"dim": 2, "re": [[1]]}"#,
        r#"{"dim": "two", "re": []}"#,
    ] {
        let path = write(&dir, "garbage.json", text);
        let out = qstrata(&["classify", "--input", &path]);
        assert_eq!(out.status.code(), Some(2), "{text}");
    }
    assert_eq!(
        qstrata(&["classify", "--input", "/no/such/file"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qstrata(&["classify"]).status.code(), Some(2));
}

#[test]
fn tolerance_from_environment() {
    let dir = TempDir::new().unwrap();
    let slightly_negative = write(
        &dir,
        "m.json",
        r#"{"dim": 2, "re": [[1.001, 0], [0, -0.001]]}"#,
    );
    assert_eq!(
        qstrata(&["classify", "--input", &slightly_negative])
            .status
            .code(),
        Some(3)
    );
    let out = Command::new(env!("CARGO_BIN_EXE_qstrata"))
        .args(["classify", "--input", &slightly_negative])
        .env("ORBIT_ATLAS_TOL", "0.01")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    // The flag wins over the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_qstrata"))
        .args(["classify", "--input", &slightly_negative, "--tol", "1e-9"])
        .env("ORBIT_ATLAS_TOL", "0.01")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bloch_round_trip_through_two_invocations() {
    let dir = TempDir::new().unwrap();
    let input = r#"{"dim": 2, "re": [[0.7, 0.1], [0.1, 0.3]], "im": [[0, -0.2], [0.2, 0]]}"#;
    let matrix = write(&dir, "m.json", input);
    let vector = dir.path().join("v.json");
    let back = dir.path().join("back.json");
    let out = qstrata(&[
        "bloch",
        "--input",
        &matrix,
        "--to",
        "vector",
        "--output",
        vector.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = qstrata(&[
        "bloch",
        "--input",
        vector.to_str().unwrap(),
        "--to",
        "matrix",
        "-o",
        back.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let original: Value = serde_json::from_str(input).unwrap();
    let result: Value = serde_json::from_str(&fs::read_to_string(&back).unwrap()).unwrap();
    for part in ["re", "im"] {
        for i in 0..2 {
            for j in 0..2 {
                let a = original[part][i][j].as_f64().unwrap();
                let b = result[part][i][j].as_f64().unwrap();
                assert!((a - b).abs() <= 1e-9, "{part}[{i}][{j}]: {a} vs {b}");
            }
        }
    }
}

#[test]
fn bloch_check_flags_boundary_vector() {
    let dir = TempDir::new().unwrap();
    // A point on the pure-state sphere along the last diagonal generator.
    let r = (2.0f64 / 3.0).sqrt();
    let path = write(
        &dir,
        "v.json",
        &format!(
            r#"{{"dim": 3, "convention": "coherence", "components": [0, 0, 0, 0, 0, 0, 0, {r}]}}"#
        ),
    );
    let report = json(&qstrata(&[
        "bloch", "--input", &path, "--to", "matrix", "--check",
    ]));
    assert_eq!(report["physical"], false);
    assert!(report["min_eigenvalue"].as_f64().unwrap() < -0.3);
}

#[test]
fn bloch_zero_vector_is_maximally_mixed() {
    let dir = TempDir::new().unwrap();
    let zeros = vec!["0"; 15].join(", ");
    let path = write(
        &dir,
        "v.json",
        &format!(r#"{{"dim": 4, "convention": "bloch", "components": [{zeros}]}}"#),
    );
    let m = json(&qstrata(&["bloch", "--input", &path, "--to", "matrix"]));
    for i in 0..4 {
        for j in 0..4 {
            let expected = if i == j { 0.25 } else { 0.0 };
            assert_eq!(m["re"][i][j].as_f64().unwrap(), expected);
            assert_eq!(m["im"][i][j].as_f64().unwrap(), 0.0);
        }
    }
    let bad = write(
        &dir,
        "short.json",
        r#"{"dim": 4, "convention": "bloch", "components": [0, 0]}"#,
    );
    assert_eq!(
        qstrata(&["bloch", "--input", &bad, "--to", "matrix"])
            .status
            .code(),
        Some(2)
    );
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn tables() {
    let out = stdout(&qstrata(&["tables", "3"]));
    assert!(out.starts_with("partition,manifold,dimension\n"));
    let dims: Vec<String> = csv_rows(&out).into_iter().map(|r| r[2].clone()).collect();
    assert_eq!(dims, ["0", "4", "6"]);

    let out = stdout(&qstrata(&["tables", "4"]));
    let dims: Vec<String> = csv_rows(&out).into_iter().map(|r| r[2].clone()).collect();
    assert_eq!(dims, ["0", "6", "8", "10", "12"]);

    let out = stdout(&qstrata(&["tables", "sp"]));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 16);
    assert_eq!(rows.iter().filter(|r| r[0].len() == 4).count(), 5);
    assert_eq!(rows.iter().filter(|r| r[0].len() == 6).count(), 11);

    for bad in ["1", "9", "spx", "-3"] {
        assert_eq!(qstrata(&["tables", bad]).status.code(), Some(2), "{bad}");
    }
}

#[test]
fn qutrit_datasets() {
    let out = stdout(&qstrata(&[
        "qutrit",
        "fraction",
        "--n",
        "3",
        "--c2",
        "1.0",
        "--samples",
        "10000",
        "--seed",
        "7",
    ]));
    assert!(out.starts_with("n,c2,samples,fraction,seed\n"));
    let row = &csv_rows(&out)[0];
    assert!(row[3].parse::<f64>().unwrap() <= 0.001);
    assert_eq!(row[4], "7");

    let out = stdout(&qstrata(&["qutrit", "region"]));
    assert!(out.starts_with("a,c2,class,curve1,curve2,curve3\n"));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 14 * 601);
    assert!(!rows
        .iter()
        .any(|r| r[2] == "NonPositive" && r[1].parse::<f64>().unwrap() <= 0.5));

    let out = stdout(&qstrata(&["qutrit", "fig3", "--c2", "0.3333333"]));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 1);
    assert!((rows[0][2].parse::<f64>().unwrap() - 3f64.ln()).abs() < 1e-11);

    let out = stdout(&qstrata(&[
        "qutrit",
        "fig2",
        "--c2",
        "0.6,0.8",
        "--a-steps",
        "10",
    ]));
    assert!(out.starts_with("c2,a,a_plus_b\n"));
    assert_eq!(csv_rows(&out).len(), 22);

    for args in [
        &["qutrit", "fig2", "--c2", "2"][..],
        &["qutrit", "fraction", "--samples", "0"],
        &["qutrit", "fraction", "--n", "40"],
        &["qutrit", "region", "--c2", "abc"],
        &["qutrit", "region", "--unknown"],
        &["qutrit", "spiral"],
    ] {
        assert_eq!(qstrata(args).status.code(), Some(2), "{args:?}");
    }
}

fn run_to_file(args: &[&str], path: &Path) -> Vec<u8> {
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--output", path.to_str().unwrap()]);
    assert!(qstrata(&full).status.success());
    fs::read(path).unwrap()
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let commands: [&[&str]; 4] = [
        &[
            "qutrit",
            "fraction",
            "--n",
            "3",
            "--c2",
            "0.6,0.7",
            "--samples",
            "3000",
            "--seed",
            "11",
        ],
        &["qutrit", "fig2", "--a-steps", "50"],
        &["qutrit", "fig3", "--a-steps", "50"],
        &["tables", "sp"],
    ];
    for (k, args) in commands.iter().enumerate() {
        let first = run_to_file(args, &dir.path().join(format!("a{k}")));
        let second = run_to_file(args, &dir.path().join(format!("b{k}")));
        assert!(!first.is_empty());
        assert_eq!(first, second, "{args:?}");
    }
}
