use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use syzygy_ncr::cli::{parse_job, run_job, RunOptions};

/// Run a batch job: compute syzygies, Hom, Ext and stable Hom, or verify the
/// syzygy construction of noncommutative resolutions.
#[derive(Parser, Debug)]
#[command(name = "syzygy-ncr", version)]
struct Args {
    /// Job document to run.
    #[arg(long)]
    job: PathBuf,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also print a plain-text summary to standard error.
    #[arg(long)]
    summary: bool,
    /// Last degree of the Hilbert functions shown in the report.
    #[arg(long, default_value_t = 6)]
    max_degree: i32,
    /// Depth for add-M resolutions when the job does not set one.
    #[arg(long, default_value_t = 4)]
    depth: usize,
    /// Worker threads (default: one per core).
    #[arg(long)]
    threads: Option<usize>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(n) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let text = match std::fs::read_to_string(&args.job) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.job.display());
            return ExitCode::from(2);
        }
    };
    let opts = RunOptions {
        max_degree: args.max_degree,
        depth: args.depth,
    };
    let report = match parse_job(&text).and_then(|job| run_job(&job, &opts)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let doc = report.to_document();
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &doc) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{doc}"),
    }
    if args.summary {
        eprint!("{}", report.summary());
    }
    if report.succeeded() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
