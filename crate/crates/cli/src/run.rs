//! One decomposition run with per-phase timing, a timeout and atomic artifacts.

use crate::spec::SystemSpec;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::path::Path;
use std::sync::mpsc;
use std::time::{Duration, Instant};
use tricad::cylindrical::{cylindrical_decompose, initial_partition, make_cylindrical, CylindricalTree};
use tricad::real::{make_semi_algebraic, Cad};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Complex,
    Real,
}

/// Counts and phase timings of one run. Timings are informational only.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub system: String,
    pub mode: Option<Mode>,
    pub dim: usize,
    pub polys: usize,
    pub partition_s: Option<f64>,
    pub make_cylindrical_s: Option<f64>,
    pub make_semi_algebraic_s: Option<f64>,
    pub total_s: Option<f64>,
    pub n_complex: Option<usize>,
    pub n_real: Option<usize>,
    pub expected_complex: Option<usize>,
    pub expected_real: Option<usize>,
    pub strict: bool,
    pub aborted: bool,
    pub error: Option<String>,
}

impl RunReport {
    fn new(spec: &SystemSpec, mode: Mode) -> RunReport {
        let e = spec.expected.clone().unwrap_or_default();
        RunReport {
            system: spec.name.clone(),
            mode: Some(mode),
            dim: spec.dim(),
            polys: spec.polys.len(),
            expected_complex: e.n_complex,
            expected_real: e.n_real,
            strict: e.strict,
            ..RunReport::default()
        }
    }

    /// Counts that differ from a recorded expectation, as `(what, got, expected)`.
    pub fn mismatches(&self) -> Vec<(&'static str, usize, usize)> {
        let mut out = Vec::new();
        for (what, got, want) in [("N_C", self.n_complex, self.expected_complex), ("N_R", self.n_real, self.expected_real)] {
            if let (Some(g), Some(w)) = (got, want) {
                if g != w {
                    out.push((what, g, w));
                }
            }
        }
        out
    }
}

/// A finished or aborted run.
pub struct Outcome {
    pub report: RunReport,
    pub tree: Option<CylindricalTree>,
    pub cad: Option<Cad>,
}

enum Progress {
    Partition(Duration),
    Cylindrical(Duration, CylindricalTree),
    SemiAlgebraic(Duration, Cad),
    Failed(tricad::Error),
}

fn phases(spec: &SystemSpec, mode: Mode, tx: mpsc::Sender<Progress>) {
    let n = spec.dim();
    let send = |p| {
        let _ = tx.send(p);
    };
    let t = Instant::now();
    let tree = if n == 1 {
        send(Progress::Partition(Duration::ZERO));
        cylindrical_decompose(&spec.polys, 1)
    } else {
        match initial_partition(&spec.polys, n) {
            Ok(rs) => {
                send(Progress::Partition(t.elapsed()));
                make_cylindrical(&rs, n)
            }
            Err(e) => Err(e),
        }
    };
    let tree = match tree {
        Ok(tree) => tree,
        Err(e) => return send(Progress::Failed(e)),
    };
    let mc = t.elapsed();
    send(Progress::Cylindrical(mc, tree.clone()));
    if mode == Mode::Real {
        let t = Instant::now();
        match make_semi_algebraic(tree) {
            Ok(cad) => send(Progress::SemiAlgebraic(t.elapsed(), cad)),
            Err(e) => send(Progress::Failed(e)),
        }
    }
}

/// Runs the decomposition on a worker thread. On timeout the report is
/// flagged aborted and keeps the phases that did finish; the worker is
/// abandoned, so callers that time out should exit soon after.
pub fn run_decompose(spec: &SystemSpec, mode: Mode, timeout: Option<Duration>) -> Outcome {
    let (tx, rx) = mpsc::channel();
    let worker_spec = spec.clone();
    std::thread::spawn(move || phases(&worker_spec, mode, tx));
    let start = Instant::now();
    let mut out = Outcome { report: RunReport::new(spec, mode), tree: None, cad: None };
    let mut partition = Duration::ZERO;
    loop {
        let msg = match timeout {
            Some(t) => match rx.recv_timeout(t.saturating_sub(start.elapsed())) {
                Ok(m) => m,
                Err(mpsc::RecvTimeoutError::Timeout) => {
                    out.report.aborted = true;
                    return out;
                }
                Err(mpsc::RecvTimeoutError::Disconnected) => break,
            },
            None => match rx.recv() {
                Ok(m) => m,
                Err(_) => break,
            },
        };
        let r = &mut out.report;
        match msg {
            Progress::Partition(d) => {
                partition = d;
                r.partition_s = Some(d.as_secs_f64());
            }
            Progress::Cylindrical(d, tree) => {
                r.make_cylindrical_s = Some((d - partition).as_secs_f64());
                r.n_complex = Some(tree.leaves().len());
                out.tree = Some(tree);
                if mode == Mode::Complex {
                    r.total_s = Some(d.as_secs_f64());
                }
            }
            Progress::SemiAlgebraic(d, cad) => {
                r.make_semi_algebraic_s = Some(d.as_secs_f64());
                r.n_real = Some(cad.len());
                r.total_s = Some(r.partition_s.unwrap_or(0.0) + r.make_cylindrical_s.unwrap_or(0.0) + d.as_secs_f64());
                out.cad = Some(cad);
            }
            Progress::Failed(e) => r.error = Some(e.to_string()),
        }
    }
    out
}

/// Writes `bytes` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    std::io::Write::write_all(&mut tmp, bytes)?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn pretty(v: &Value) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s.into_bytes()
}

/// Cell file: the system and every cell of `ℝⁿ` with its sample and signs.
pub fn cells_json(spec: &SystemSpec, cad: &mut Cad) -> tricad::Result<Value> {
    let names = spec.names().to_vec();
    let cells = (0..cad.len()).map(|i| cad.cell_json(i, &spec.polys, &names)).collect::<tricad::Result<Vec<_>>>()?;
    let polys: Vec<String> = spec.polys.iter().map(|p| p.to_text(&names)).collect();
    Ok(json!({ "system": spec.name, "vars": names, "polynomials": polys, "cells": cells }))
}

/// Writes `tree.json`, `cells.json` (real mode) and `report.json` into `dir`.
/// An aborted run writes only its report.
pub fn write_artifacts(dir: &Path, spec: &SystemSpec, out: &mut Outcome) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir)?;
    if !out.report.aborted {
        if let Some(tree) = &out.tree {
            write_atomic(&dir.join("tree.json"), &pretty(&tree.to_json(spec.names())))?;
        }
        if let Some(cad) = &mut out.cad {
            write_atomic(&dir.join("cells.json"), &pretty(&cells_json(spec, cad)?))?;
        }
    }
    write_atomic(&dir.join("report.json"), &pretty(&serde_json::to_value(&out.report)?))?;
    Ok(())
}
