use std::path::PathBuf;
use std::process::Command;

use polar_milnor::cli::dto::{to_json, PencilJson};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polar-milnor"))
}

fn atlas(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../atlases")
        .join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn mu_of_the_d5_germ() {
    let (code, out, _) = run(&[
        "mu",
        "--vars",
        "x,z",
        "--poly",
        "x*z^2 - x^4 + x^2*z^2",
        "--point",
        "0,0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "mu = 5\n");
}

#[test]
fn classify_at_a_point() {
    let (code, out, _) = run(&[
        "classify",
        "--vars",
        "x,z",
        "--poly",
        "(x-1)^2 - z^3",
        "--point",
        "1,0",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["class"], "A_2");
    assert_eq!(v["point"][0], "1/1");
}

#[test]
fn germ_table() {
    let (code, out, _) = run(&["germ", "--vars", "x,z", "--p", "x^2 + x*z^2", "--q", "z^3"]);
    assert_eq!(code, 0, "{out}");
    let row = out
        .lines()
        .find(|l| l.trim_start().starts_with("0 "))
        .expect("a row for the special value 0");
    let cells: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(&cells[..5], &["0", "3", "2", "1", "1"]);
    assert!(row.ends_with("A_3 <- A_2"));
}

#[test]
fn pencil_text_and_json() {
    let path = atlas("quartic.atlas");
    let (code, out, _) = run(&["pencil", "--atlas", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("b_2(X,F) = mu + lambda = 3\n"));
    assert!(out.contains("atypical values: {-1, 0, 1}"));

    let (code, out, _) = run(&[
        "pencil",
        "--atlas",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let parsed: PencilJson = serde_json::from_str(&out).unwrap();
    assert_eq!(to_json(&parsed), out);
    assert_eq!(parsed.atypical_values, vec!["-1/1", "0/1", "1/1"]);
    assert_eq!(
        (parsed.totals.mu, parsed.totals.lambda, parsed.totals.b2),
        (2, 1, 3)
    );
    let keys: Vec<String> =
        serde_json::from_str::<serde_json::Map<String, serde_json::Value>>(&out)
            .unwrap()
            .keys()
            .cloned()
            .collect();
    let mut want = vec![
        "atypical_values",
        "charts",
        "per_value",
        "totals",
        "warnings",
    ];
    want.sort();
    assert_eq!(keys, want);
}

#[test]
fn jump_family_text_report() {
    let path = atlas("jump_1112.atlas");
    let (code, out, _) = run(&[
        "pencil",
        "--atlas",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["totals"]["mu"], 0);
    assert_eq!(v["totals"]["lambda"], 2);
    assert_eq!(v["totals"]["b2"], 2);
    let (_, text, _) = run(&["pencil", "--atlas", path.to_str().unwrap()]);
    assert!(text.contains("b_2(X,F) = mu + lambda = 2\n"));
}

#[test]
fn same_seed_same_bytes_at_any_parallelism() {
    let path = atlas("quartic.atlas");
    let p = path.to_str().unwrap();
    let base = run(&["pencil", "--atlas", p, "--format", "json", "--seed", "99"]).1;
    for threads in ["1", "2", "4"] {
        let again = run(&[
            "pencil",
            "--atlas",
            p,
            "--format",
            "json",
            "--seed",
            "99",
            "--parallelism",
            threads,
        ])
        .1;
        assert_eq!(again, base);
    }
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("report.json");
    let path = atlas("quartic.atlas");
    let (code, out, _) = run(&[
        "pencil",
        "--atlas",
        path.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(file).unwrap(), out);
}

#[test]
fn candidates_flag_adds_rows() {
    let path = atlas("quartic.atlas");
    let (code, out, _) = run(&[
        "pencil",
        "--atlas",
        path.to_str().unwrap(),
        "--candidates=-3/2,5",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: PencilJson = serde_json::from_str(&out).unwrap();
    for a in ["-3/2", "5/1"] {
        let row = v.per_value.iter().find(|r| r.a == a).unwrap();
        assert_eq!((row.mu_a, row.lambda_a), (0, 0));
    }
}

#[test]
fn exit_codes() {
    // double line: not isolated
    assert_eq!(run(&["mu", "--vars", "x,z", "--poly", "x^2"]).0, 2);
    assert_eq!(
        run(&["germ", "--vars", "x,z", "--p", "x^2", "--q", "z"]).0,
        2
    );
    assert_eq!(run(&["mu", "--vars", "x,z", "--poly", "2x"]).0, 1);
    assert_eq!(run(&["mu", "--vars", "x,z", "--poly", "y"]).0, 1);
    assert_eq!(run(&["pencil", "--atlas", "/nonexistent/file"]).0, 1);
    assert_eq!(run(&["pencil"]).0, 1);
    let (code, _, err) = run(&["mu", "--vars", "x,z", "--poly", "x^2", "--jet-cap", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("jet-cap"));
}

#[test]
fn irrational_critical_points_are_refused() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a.atlas");
    std::fs::write(
        &file,
        "[chart c]\nvars = x, z\np = x^3 - 6*x + z^2\nq = 1\n",
    )
    .unwrap();
    let (code, _, err) = run(&["pencil", "--atlas", file.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("incomplete"), "{err}");
}
