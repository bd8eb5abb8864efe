use std::path::{Path, PathBuf};
use std::process::Command;

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn documents() -> Vec<PathBuf> {
    let mut docs: Vec<PathBuf> = std::fs::read_dir(corpus())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    docs.sort();
    docs
}

fn run_in_process(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = ehrmat::cli::run(std::iter::once("ehrmat").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn corpus_reproduces_goldens_byte_identically() {
    let docs = documents();
    assert!(docs.len() >= 26, "corpus has {} documents", docs.len());
    for doc in docs {
        let stem = doc.file_stem().unwrap().to_str().unwrap().to_owned();
        for cmd in ["ehrhart", "hstar"] {
            let golden = corpus().join("golden").join(format!("{stem}.{cmd}.json"));
            let want = std::fs::read_to_string(&golden).unwrap();
            let (code, got) = run_in_process(&[cmd, doc.to_str().unwrap()]);
            assert_eq!(code, 0, "{cmd} {stem}");
            assert_eq!(got, want, "{cmd} {stem}");
        }
    }
}

#[test]
fn verify_against_golden_passes_and_detects_corruption() {
    let doc = corpus().join("K4.json");
    let golden = corpus().join("golden").join("K4.ehrhart.json");
    let (code, out) = run_in_process(&[
        "verify",
        doc.to_str().unwrap(),
        "--kmax",
        "3",
        "--expect",
        golden.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");

    let bad = std::env::temp_dir().join(format!("ehrmat-corrupt-{}.json", std::process::id()));
    let text = std::fs::read_to_string(&golden).unwrap().replace("\"21/4\"", "\"21/5\"");
    std::fs::write(&bad, text).unwrap();
    let (code, out) = run_in_process(&["verify", doc.to_str().unwrap(), "--kmax", "1", "--expect", bad.to_str().unwrap()]);
    std::fs::remove_file(&bad).unwrap();
    assert_eq!(code, 1);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["matches"], false);
    assert_eq!(report["expected"]["firstDifference"]["index"], 2);
    assert_eq!(report["expected"]["firstDifference"]["left"], "21/4");
    assert_eq!(report["expected"]["firstDifference"]["right"], "21/5");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ehrmat");
    let k4 = corpus().join("K4.json");

    let ok = Command::new(bin).arg("hstar").arg(&k4).env_remove("EHRMAT_BUDGET").output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(report["hstar"], serde_json::json!([1, 10, 20, 10, 1, 0]));

    let budget = Command::new(bin).arg("ehrhart").arg(&k4).env("EHRMAT_BUDGET", "1").output().unwrap();
    assert_eq!(budget.status.code(), Some(3));

    let bad_budget = Command::new(bin).arg("ehrhart").arg(&k4).env("EHRMAT_BUDGET", "lots").output().unwrap();
    assert_eq!(bad_budget.status.code(), Some(2));

    let invalid = std::env::temp_dir().join(format!("ehrmat-invalid-{}.json", std::process::id()));
    std::fs::write(&invalid, r#"{"name":"x","family":"bases","kind":{"bases":{"n":3,"bases":[[1,2],[3]]}}}"#).unwrap();
    let bad = Command::new(bin).arg("ehrhart").arg(&invalid).output().unwrap();
    std::fs::remove_file(&invalid).unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));

    let scan = Command::new(bin).args(["scan-uniform", "--nmax", "4"]).output().unwrap();
    assert_eq!(scan.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&scan.stdout).lines().count(), 6);
}
