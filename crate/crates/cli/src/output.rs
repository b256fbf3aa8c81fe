//! CSV rendering and atomic file output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use dimsp::{RunTrace, SummaryRow};

use crate::CliError;

pub const TRACE_HEADER: &str = "generation,num_islands,best_score,avg_score,diversity";
pub const SUMMARY_HEADER: &str = "model,problem,avg_score,best_score,diversity";

pub fn trace_csv(trace: &RunTrace) -> String {
    let mut out = String::with_capacity(48 * (trace.records.len() + 1));
    out.push_str(TRACE_HEADER);
    out.push('\n');
    for r in &trace.records {
        let _ = writeln!(out, "{},{},{},{},{}", r.generation, r.num_islands, r.best_score, r.avg_score, r.diversity);
    }
    out
}

pub fn summary_csv(rows: &[SummaryRow]) -> String {
    let mut out = String::from(SUMMARY_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{}", r.model, r.problem, r.avg_score, r.best_score, r.diversity);
    }
    out
}

/// Write through a temporary file in the target directory, then rename.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Output(format!("{}: {e}", path.display()));
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}
