//! CSV artifacts written next to the run log.

use std::io::Write;

use anyhow::Result;

use cbo_core::hull::Profile;
use cbo_core::optimize::RunLog;

pub const TRACE_HEADER: [&str; 13] = [
    "iter", "a_mm", "b_mm", "c_mm", "d_mm", "n", "theta_deg", "drag_n", "feasible", "margin_mm",
    "best_drag_n", "l2_step", "source",
];

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// One row per evaluation. Wall times are left out so that equal runs
/// produce identical files.
pub fn write_trace<W: Write>(w: W, log: &RunLog) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(TRACE_HEADER)?;
    for (i, r) in log.records.iter().enumerate() {
        let p = &r.params;
        out.write_record([
            (i + 1).to_string(),
            p.a.to_string(),
            p.b.to_string(),
            p.c.to_string(),
            p.d.to_string(),
            p.n.to_string(),
            p.theta_deg.to_string(),
            r.drag.to_string(),
            r.feasible.to_string(),
            r.margin.to_string(),
            opt(log.best_trace[i]),
            opt(log.step_trace[i]),
            r.source.as_str().to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_profile<W: Write>(w: W, profile: &Profile) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["x_mm", "r_mm"])?;
    for (x, r) in &profile.stations {
        out.write_record([format!("{x:.6}"), format!("{r:.6}")])?;
    }
    out.flush()?;
    Ok(())
}

/// Row of a benchmark `summary.csv`.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SummaryRow {
    pub suite: String,
    pub method: String,
    pub seed: u64,
    pub best_value: Option<f64>,
    pub iters_to_2pct: Option<usize>,
}

pub fn write_summary<W: Write>(w: W, rows: &[SummaryRow]) -> Result<()> {
    let mut out = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    out.write_record(["suite", "method", "seed", "best_value", "iters_to_2pct"])?;
    for row in rows {
        out.serialize(row)?;
    }
    out.flush()?;
    Ok(())
}
