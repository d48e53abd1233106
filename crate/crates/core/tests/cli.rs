mod common;

use std::io::Write;

use common::jobs::*;
use syzygy_ncr::cli::parse_job;
use syzygy_ncr::document;

#[test]
fn job_suite_is_deterministic_across_runs_and_threads() {
    assert!(job_files().len() >= 10);
    let bad = nondeterministic_jobs();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn job_files_round_trip() {
    for job in job_files() {
        let text = std::fs::read_to_string(&job).unwrap();
        let spec = parse_job(&text).unwrap();
        assert_eq!(parse_job(&spec.to_document()).unwrap(), spec, "{}", job.display());
    }
}

#[test]
fn report_records_job_and_verdicts() {
    let run = run_cli(&job_dir().join("build_r3.job"), 2);
    assert_eq!(run.status, 0);
    let report = document::parse(&run.canonical).unwrap();
    assert_eq!(report.get("result").unwrap().get("bound").unwrap().as_scalar(), Some("15"));
    assert_eq!(report.get("job").unwrap().get("command").unwrap().as_scalar(), Some("build"));
    let verdicts = report.get("verdicts").unwrap().as_list().unwrap();
    assert_eq!(verdicts.len(), 3);
    assert!(verdicts.iter().all(|v| v.get("verdict").unwrap().as_scalar() == Some("verified")));
}

fn write_job(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn exit_status_reflects_verdicts() {
    let failed = write_job("ring: {char: 101, vars: [x, y]}\ncommand: verify-claim1\nM: R\nX: k\nc: 2\n");
    let run = run_cli(failed.path(), 1);
    assert_eq!(run.status, 1);
    assert!(run.canonical.contains("hypothesis-failed"));

    let invalid = write_job("ring: {char: 101, vars: [x, x]}\ncommand: grade\nmodule: k\n");
    let run = run_cli(invalid.path(), 1);
    assert_eq!(run.status, 2);
    assert!(run.stderr.contains("duplicate variable"), "{}", run.stderr);

    let pure = write_job("ring: {char: 101, vars: [x, y]}\ncommand: grade\nmodule: R\n");
    let run = run_cli(pure.path(), 1);
    assert_eq!(run.status, 0);
    assert!(run.canonical.contains("grade: 0"));
}

#[test]
fn summary_and_stdout() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_syzygy-ncr"))
        .args(["--summary", "--max-degree", "3", "--job"])
        .arg(job_dir().join("grade_k.job"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let doc = document::parse(&stdout).unwrap();
    let hilbert = doc.get("report").unwrap().get("modules").unwrap().get("k").unwrap().get("hilbert").unwrap();
    assert_eq!(hilbert.get("values").unwrap().as_list().unwrap().len(), 4);
    assert!(doc.get("timing").unwrap().get("total_us").is_some());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("grade: 2") && stderr.contains("status: ok"), "{stderr}");
}
