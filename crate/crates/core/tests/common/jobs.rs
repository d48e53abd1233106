//! Running the job suite through the command-line binary.

use std::path::PathBuf;
use std::process::Command;

use syzygy_ncr::document;

pub fn job_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("jobs")
}

/// Every `.job` file in the suite, sorted by name.
pub fn job_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(job_dir())
        .expect("jobs directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "job"))
        .collect();
    files.sort();
    files
}

pub struct CliRun {
    pub status: i32,
    /// The `report` section of the output, re-rendered canonically.
    pub canonical: String,
    pub stderr: String,
}

pub fn run_cli(job: &std::path::Path, threads: usize) -> CliRun {
    let out = tempfile::NamedTempFile::new().unwrap();
    let output = Command::new(env!("CARGO_BIN_EXE_syzygy-ncr"))
        .arg("--job")
        .arg(job)
        .arg("--out")
        .arg(out.path())
        .arg("--threads")
        .arg(threads.to_string())
        .output()
        .expect("run syzygy-ncr");
    let text = std::fs::read_to_string(out.path()).unwrap_or_default();
    let canonical = document::parse(&text)
        .ok()
        .and_then(|v| v.get("report").map(|r| r.to_document()))
        .unwrap_or_default();
    CliRun {
        status: output.status.code().unwrap_or(-1),
        canonical,
        stderr: String::from_utf8_lossy(&output.stderr).into_owned(),
    }
}

/// Jobs whose canonical sections differ between two runs or two thread
/// counts, or that fail to exit cleanly.
pub fn nondeterministic_jobs() -> Vec<String> {
    let mut bad = Vec::new();
    for job in job_files() {
        let a = run_cli(&job, 1);
        let b = run_cli(&job, 1);
        let c = run_cli(&job, 4);
        let name = job.file_name().unwrap().to_string_lossy().into_owned();
        if a.status != 0 || a.canonical.is_empty() || a.canonical != b.canonical || a.canonical != c.canonical {
            bad.push(format!("{name} (status {}, {})", a.status, a.stderr.trim()));
        }
    }
    bad
}
