//! The sequential constrained optimization run over hull designs.
//!
//! A run is fully described by its [`RunConfig`] and the records gathered so
//! far: the initial design, every surrogate fit and every acquisition draw
//! come from streams keyed on `(seed, evaluation index)`. That is what lets
//! [`resume`] pick up a persisted log and finish it exactly as an
//! uninterrupted run would have.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::acquisition::AcquisitionConfig;
use crate::benchmark::best_so_far;
use crate::bo::{propose, BoSettings, Observation};
use crate::error::{Error, Result};
use crate::evaluator::{evaluate, Clock, DragBackend, EvalRecord, FlowConditions};
use crate::gp::FitConfig;
use crate::hull::{BaselineGeometry, HullParams, DEFAULT_CONTAINMENT_SAMPLES};
use crate::sampling::{derive_seed, latin_hypercube, stream};

pub const SCHEMA_VERSION: u32 = 1;

const STREAM_INIT: u64 = 0x1A;
const STREAM_STEP: u64 = 0x17;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum HullParam {
    A,
    B,
    C,
    D,
    N,
    Theta,
}

impl HullParam {
    pub const ALL: [HullParam; 6] = [HullParam::A, HullParam::B, HullParam::C, HullParam::D, HullParam::N, HullParam::Theta];

    pub fn name(self) -> &'static str {
        match self {
            HullParam::A => "a",
            HullParam::B => "b",
            HullParam::C => "c",
            HullParam::D => "d",
            HullParam::N => "n",
            HullParam::Theta => "theta",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        HullParam::ALL.into_iter().find(|p| p.name() == s)
    }

    pub fn get(self, p: &HullParams) -> f64 {
        match self {
            HullParam::A => p.a,
            HullParam::B => p.b,
            HullParam::C => p.c,
            HullParam::D => p.d,
            HullParam::N => p.n,
            HullParam::Theta => p.theta_deg,
        }
    }

    pub fn set(self, p: &mut HullParams, v: f64) {
        match self {
            HullParam::A => p.a = v,
            HullParam::B => p.b = v,
            HullParam::C => p.c = v,
            HullParam::D => p.d = v,
            HullParam::N => p.n = v,
            HullParam::Theta => p.theta_deg = v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ParamBound {
    pub param: HullParam,
    pub min: f64,
    pub max: f64,
}

impl ParamBound {
    /// The nose exponent acts multiplicatively, so it is searched on a log
    /// scale whenever its range allows.
    pub fn is_log_scaled(&self) -> bool {
        self.param == HullParam::N && self.min > 0.0
    }

    pub fn from_unit(&self, u: f64) -> f64 {
        let x = if u >= 1.0 {
            self.max
        } else if self.is_log_scaled() {
            self.min * libm::pow(self.max / self.min, u)
        } else {
            self.min + u * (self.max - self.min)
        };
        x.clamp(self.min, self.max)
    }

    pub fn to_unit(&self, x: f64) -> f64 {
        if self.is_log_scaled() {
            libm::log(x / self.min) / libm::log(self.max / self.min)
        } else {
            (x - self.min) / (self.max - self.min)
        }
    }
}

/// The two reference experiments: shapes only, or shapes and section lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum ExperimentPreset {
    Exp1,
    Exp2,
}

impl ExperimentPreset {
    /// Search box: `a ∈ [a_B, a_B+2500]`, `c ∈ [c_B, c_B+2500]` (mm),
    /// `n ∈ [0.1, 5]`, `θ ∈ [0°, 50°]`.
    pub fn bounds(self, bg: &BaselineGeometry) -> Vec<ParamBound> {
        let mut v = Vec::new();
        if self == ExperimentPreset::Exp2 {
            v.push(ParamBound { param: HullParam::A, min: bg.a, max: bg.a + 2500.0 });
            v.push(ParamBound { param: HullParam::C, min: bg.c, max: bg.c + 2500.0 });
        }
        v.push(ParamBound { param: HullParam::N, min: 0.1, max: 5.0 });
        v.push(ParamBound { param: HullParam::Theta, min: 0.0, max: 50.0 });
        v
    }

    /// Frozen values: sections and diameter from the baseline.
    pub fn fixed(self, bg: &BaselineGeometry) -> HullParams {
        HullParams { a: bg.a, b: bg.b, c: bg.c, d: bg.d, n: 1.0, theta_deg: 25.0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RunConfig {
    /// Free parameters and their search ranges, physical units.
    pub bounds: Vec<ParamBound>,
    /// Values used for every parameter not listed in `bounds`.
    pub fixed: HullParams,
    /// Total evaluations, initial design included.
    pub budget: usize,
    pub init_samples: usize,
    pub seed: u64,
    pub acquisition: AcquisitionConfig,
    pub fit: FitConfig,
    pub flow: FlowConditions,
    pub baseline: BaselineGeometry,
    pub containment_samples: usize,
}

impl RunConfig {
    pub fn preset(preset: ExperimentPreset, baseline: BaselineGeometry) -> Self {
        RunConfig {
            bounds: preset.bounds(&baseline),
            fixed: preset.fixed(&baseline),
            budget: 50,
            init_samples: 8,
            seed: 0,
            acquisition: AcquisitionConfig::default(),
            fit: FitConfig::default(),
            flow: FlowConditions::default(),
            baseline,
            containment_samples: DEFAULT_CONTAINMENT_SAMPLES,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.bounds.is_empty() {
            return Err(Error::invalid("bounds: at least one free parameter is required"));
        }
        for (i, b) in self.bounds.iter().enumerate() {
            if !(b.min.is_finite() && b.max.is_finite() && b.min < b.max) {
                return Err(Error::invalid(format!("bounds.{}: need min < max, got [{}, {}]", b.param.name(), b.min, b.max)));
            }
            if self.bounds[..i].iter().any(|o| o.param == b.param) {
                return Err(Error::invalid(format!("bounds.{}: listed twice", b.param.name())));
            }
        }
        if self.init_samples < 2 || self.budget <= self.init_samples {
            return Err(Error::invalid(format!(
                "budget: need budget > init_samples >= 2, got budget {} and init_samples {}",
                self.budget, self.init_samples
            )));
        }
        if self.containment_samples < 64 {
            return Err(Error::invalid("containment_samples: must be >= 64"));
        }
        self.acquisition.validate().map_err(|e| prefix("acquisition", e))?;
        self.fit.validate().map_err(|e| prefix("fit", e))?;
        self.flow.validate().map_err(|e| prefix("flow", e))?;
        self.baseline.validate().map_err(|e| prefix("baseline", e))?;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    /// Maps a point of the unit hypercube to a design, clamped to the bounds.
    /// Axes are linear except for log-scaled ones (see [`ParamBound::is_log_scaled`]).
    pub fn denormalize(&self, u: &[f64]) -> HullParams {
        let mut p = self.fixed;
        for (b, &v) in self.bounds.iter().zip(u) {
            b.param.set(&mut p, b.from_unit(v));
        }
        p
    }

    pub fn normalize(&self, p: &HullParams) -> Vec<f64> {
        self.bounds.iter().map(|b| b.to_unit(b.param.get(p))).collect()
    }

    pub fn contains(&self, p: &HullParams) -> bool {
        self.bounds.iter().all(|b| {
            let v = b.param.get(p);
            v >= b.min && v <= b.max
        })
    }

    fn settings(&self) -> BoSettings {
        BoSettings { fit: self.fit.clone(), acquisition: self.acquisition.clone() }
    }
}

fn prefix(section: &str, e: Error) -> Error {
    match e {
        Error::InvalidArgument(m) => Error::InvalidArgument(format!("{section}: {m}")),
        other => other,
    }
}

/// Everything a run has produced, in evaluation order.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RunLog {
    pub schema_version: u32,
    pub config: RunConfig,
    pub seed: u64,
    /// Index of the next evaluation; positions every random stream.
    pub next_iteration: usize,
    pub records: Vec<EvalRecord>,
    /// Best feasible drag after each evaluation, `None` before the first.
    pub best_trace: Vec<Option<f64>>,
    /// Normalized distance from the previous design, `None` for the first.
    pub step_trace: Vec<Option<f64>>,
    pub started_at: f64,
    pub updated_at: f64,
    pub completed: bool,
    pub no_feasible_found: bool,
}

impl RunLog {
    pub fn new(config: RunConfig, clock: &dyn Clock) -> Self {
        let now = clock.now();
        RunLog {
            schema_version: SCHEMA_VERSION,
            seed: config.seed,
            config,
            next_iteration: 0,
            records: Vec::new(),
            best_trace: Vec::new(),
            step_trace: Vec::new(),
            started_at: now,
            updated_at: now,
            completed: false,
            no_feasible_found: false,
        }
    }

    /// First record holding the lowest feasible drag.
    pub fn best(&self) -> Option<(usize, &EvalRecord)> {
        self.records
            .iter()
            .enumerate()
            .filter(|(_, r)| r.feasible)
            .fold(None, |best: Option<(usize, &EvalRecord)>, (i, r)| match best {
                Some((_, b)) if b.drag <= r.drag => best,
                _ => Some((i, r)),
            })
    }

    fn push(&mut self, record: EvalRecord, clock: &dyn Clock) {
        let step = self.records.last().map(|prev| {
            let a = self.config.normalize(&prev.params);
            let b = self.config.normalize(&record.params);
            libm::sqrt(a.iter().zip(&b).map(|(x, y)| (x - y) * (x - y)).sum())
        });
        let prev_best = self.best_trace.last().copied().flatten();
        let best = match (prev_best, record.feasible) {
            (Some(b), true) => Some(b.min(record.drag)),
            (None, true) => Some(record.drag),
            (b, false) => b,
        };
        self.records.push(record);
        self.best_trace.push(best);
        self.step_trace.push(step);
        self.next_iteration = self.records.len();
        self.updated_at = clock.now();
    }

    /// Structural checks on a loaded log. The message names the first
    /// offending field.
    pub fn validate(&self) -> Result<()> {
        let bad = |field: String, why: &str| Err(Error::InvalidArgument(format!("{field}: {why}")));
        if self.schema_version != SCHEMA_VERSION {
            return bad("schema_version".into(), "unsupported version");
        }
        self.config.validate().map_err(|e| prefix("config", e))?;
        if self.seed != self.config.seed {
            return bad("seed".into(), "does not match config.seed");
        }
        if self.records.len() > self.config.budget {
            return bad("records".into(), "more records than the budget");
        }
        for (i, r) in self.records.iter().enumerate() {
            if !self.config.contains(&r.params) {
                return bad(format!("records[{i}].params"), "outside the configured bounds");
            }
            if !r.drag.is_finite() {
                return bad(format!("records[{i}].drag"), "not finite");
            }
            if !r.margin.is_finite() {
                return bad(format!("records[{i}].margin"), "not finite");
            }
            if r.feasible && r.margin > 0.0 {
                return bad(format!("records[{i}].feasible"), "feasible record with positive margin");
            }
            if r.source == crate::evaluator::EvalSource::Heuristic && r.feasible {
                return bad(format!("records[{i}].source"), "heuristic record marked feasible");
            }
        }
        if self.best_trace.len() != self.records.len() {
            return bad("best_trace".into(), "length differs from records");
        }
        let expect = best_so_far(self.records.iter().map(|r| r.feasible.then_some(r.drag)));
        if expect != self.best_trace {
            return bad("best_trace".into(), "inconsistent with records");
        }
        if self.step_trace.len() != self.records.len() {
            return bad("step_trace".into(), "length differs from records");
        }
        if self.next_iteration != self.records.len() {
            return bad("next_iteration".into(), "does not match the record count");
        }
        if self.completed && self.records.len() != self.config.budget {
            return bad("completed".into(), "set before the budget was spent");
        }
        Ok(())
    }

    fn observations(&self) -> Vec<Observation> {
        self.records
            .iter()
            .map(|r| Observation { x: self.config.normalize(&r.params), objective: r.drag, constraint: r.margin })
            .collect()
    }
}

/// A run stopped by an evaluation that failed twice. `log` holds every
/// record completed before the failure.
#[derive(Debug, Clone)]
pub struct RunAborted {
    pub log: Box<RunLog>,
    pub error: Error,
}

impl core::fmt::Display for RunAborted {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "run aborted after {} evaluations: {}", self.log.records.len(), self.error)
    }
}

/// Runs a fresh optimization to its budget. `observer` sees the log after
/// every evaluation.
pub fn run_optimization(
    cfg: RunConfig,
    backend: &mut dyn DragBackend,
    clock: &dyn Clock,
    observer: &mut dyn FnMut(&RunLog),
) -> core::result::Result<RunLog, RunAborted> {
    let log = RunLog::new(cfg, clock);
    if let Err(error) = log.config.validate() {
        return Err(RunAborted { log: Box::new(log), error });
    }
    continue_run(log, backend, clock, observer)
}

/// Continues a persisted run to its budget. A completed log comes back
/// unchanged.
pub fn resume(
    log: RunLog,
    backend: &mut dyn DragBackend,
    clock: &dyn Clock,
    observer: &mut dyn FnMut(&RunLog),
) -> core::result::Result<RunLog, RunAborted> {
    if let Err(error) = log.validate() {
        return Err(RunAborted { log: Box::new(log), error });
    }
    if log.completed {
        return Ok(log);
    }
    continue_run(log, backend, clock, observer)
}

fn continue_run(
    mut log: RunLog,
    backend: &mut dyn DragBackend,
    clock: &dyn Clock,
    observer: &mut dyn FnMut(&RunLog),
) -> core::result::Result<RunLog, RunAborted> {
    let cfg = log.config.clone();
    let design = latin_hypercube(cfg.init_samples, cfg.dim(), &mut stream(cfg.seed, STREAM_INIT, 0));
    let settings = cfg.settings();
    while log.records.len() < cfg.budget {
        let k = log.records.len();
        let u = if k < cfg.init_samples {
            design[k].clone()
        } else {
            match propose(&log.observations(), &settings, derive_seed(cfg.seed, STREAM_STEP, k as u64)) {
                Ok(c) => c.point,
                Err(error) => return Err(RunAborted { log: Box::new(log), error }),
            }
        };
        let params = cfg.denormalize(&u);
        let mut attempt = || {
            evaluate(&params, &cfg.baseline, &cfg.flow, &log.records, backend, clock, cfg.containment_samples)
        };
        let record = match attempt().or_else(|_| attempt()) {
            Ok(r) => r,
            Err(error) => return Err(RunAborted { log: Box::new(log), error }),
        };
        log.push(record, clock);
        observer(&log);
    }
    log.completed = true;
    log.no_feasible_found = log.best().is_none();
    log.updated_at = clock.now();
    Ok(log)
}
