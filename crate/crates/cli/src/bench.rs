//! Corpus benchmark: one child process per system, two summary tables.

use crate::run::{write_atomic, RunReport};
use crate::spec::load_system;
use serde::Serialize;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

/// Extra time a child gets to write its aborted report before it is killed.
const GRACE: Duration = Duration::from_secs(10);

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub file: String,
    pub report: RunReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub timeout_s: u64,
    pub rows: Vec<BenchRow>,
}

/// System files of a corpus directory, sorted by name.
pub fn corpus_files(dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "sys"))
        .collect();
    files.sort();
    Ok(files)
}

fn run_child(exe: &Path, file: &Path, out: &Path, timeout: u64) -> anyhow::Result<RunReport> {
    let mut child = Command::new(exe)
        .arg("decompose")
        .arg("--input")
        .arg(file)
        .args(["--mode", "real", "--timeout", &timeout.to_string()])
        .arg("--output")
        .arg(out)
        .stdout(Stdio::null())
        .stderr(Stdio::piped())
        .spawn()?;
    let deadline = Instant::now() + Duration::from_secs(timeout) + GRACE;
    let status = loop {
        if let Some(status) = child.try_wait()? {
            break Some(status);
        }
        if Instant::now() > deadline {
            child.kill()?;
            child.wait()?;
            break None;
        }
        std::thread::sleep(Duration::from_millis(20));
    };
    let report_path = out.join("report.json");
    if let Ok(text) = std::fs::read_to_string(&report_path) {
        return Ok(serde_json::from_str(&text)?);
    }
    let spec = load_system(file)?;
    let mut stderr = String::new();
    if let Some(mut e) = child.stderr.take() {
        std::io::Read::read_to_string(&mut e, &mut stderr)?;
    }
    Ok(RunReport {
        system: spec.name.clone(),
        dim: spec.dim(),
        polys: spec.polys.len(),
        aborted: status.is_none(),
        error: status.map(|s| format!("exit {s}: {}", stderr.trim())),
        ..RunReport::default()
    })
}

/// Runs `exe decompose` on every system of the corpus.
pub fn run_bench(exe: &Path, corpus: &Path, timeout: u64) -> anyhow::Result<BenchReport> {
    let scratch = tempfile::tempdir()?;
    let mut rows = Vec::new();
    for file in corpus_files(corpus)? {
        let stem = file.file_stem().and_then(|s| s.to_str()).unwrap_or("system").to_string();
        let report = run_child(exe, &file, &scratch.path().join(&stem), timeout)?;
        eprintln!("{stem}: {}", summary(&report));
        rows.push(BenchRow { file: stem, report });
    }
    Ok(BenchReport { timeout_s: timeout, rows })
}

fn summary(r: &RunReport) -> String {
    let count = |c: Option<usize>| c.map_or("-".to_string(), |c| c.to_string());
    let status = if r.aborted {
        "timeout"
    } else if r.error.is_some() {
        "error"
    } else {
        "ok"
    };
    format!("{status}, N_C = {}, N_R = {}", count(r.n_complex), count(r.n_real))
}

fn secs(s: Option<f64>) -> String {
    s.map_or("-".into(), |s| format!("{s:.3}"))
}

fn count(c: Option<usize>) -> String {
    c.map_or("-".into(), |c| c.to_string())
}

impl BenchReport {
    /// Rows whose counts differ from a strict expectation.
    pub fn strict_failures(&self) -> Vec<&BenchRow> {
        self.rows.iter().filter(|r| r.report.strict && !r.report.mismatches().is_empty()).collect()
    }

    /// The two tables and the list of mismatches.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "CAD of R^n: timing (s) and number of cells (timeout {} s)", self.timeout_s);
        let _ = writeln!(s, "{:<28} {:>10} {:>10} {:>10} {:>10} {:>8} {:>8}", "System", "Partition", "M.C.", "M.S.A.", "Total", "N_R", "expect");
        for row in &self.rows {
            let r = &row.report;
            let _ = writeln!(
                s,
                "{:<28} {:>10} {:>10} {:>10} {:>10} {:>8} {:>8}",
                row.file,
                secs(r.partition_s),
                secs(r.make_cylindrical_s),
                secs(r.make_semi_algebraic_s),
                secs(r.total_s),
                count(r.n_real),
                count(r.expected_real)
            );
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "Cylindrical decomposition of C^n: timing (s) and number of cells");
        let _ = writeln!(s, "{:<28} {:>10} {:>8} {:>8}", "System", "Total", "N_C", "expect");
        for row in &self.rows {
            let r = &row.report;
            let cd = match (r.partition_s, r.make_cylindrical_s) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            };
            let _ = writeln!(s, "{:<28} {:>10} {:>8} {:>8}", row.file, secs(cd), count(r.n_complex), count(r.expected_complex));
        }
        let _ = writeln!(s);
        let mut notes = Vec::new();
        for row in &self.rows {
            let r = &row.report;
            for (what, got, want) in r.mismatches() {
                let kind = if r.strict { "MISMATCH (strict)" } else { "mismatch" };
                notes.push(format!("{kind}: {} {what} = {got}, expected {want}", row.file));
            }
            if r.aborted {
                notes.push(format!("timeout: {}", row.file));
            }
            if let Some(e) = &r.error {
                notes.push(format!("error: {}: {e}", row.file));
            }
        }
        if notes.is_empty() {
            notes.push("all recorded counts match".into());
        }
        for n in notes {
            let _ = writeln!(s, "{n}");
        }
        s
    }

    /// Writes JSON when the path ends in `.json`, the text tables otherwise.
    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        let bytes = if path.extension().is_some_and(|x| x == "json") {
            serde_json::to_vec_pretty(self)?
        } else {
            self.to_text().into_bytes()
        };
        write_atomic(path, &bytes)?;
        Ok(())
    }
}
