//! Validation problems for the optimizer and a random-search baseline.

use alloc::vec::Vec;

use rand::Rng;

use crate::bo::{incumbent, propose, BoSettings, Observation};
use crate::error::{Error, Result};
use crate::sampling::{derive_seed, latin_hypercube, stream};

/// Two-dimensional test problem on `[0, 6]²`:
/// `f = cos(2x)cos(y) + sin(x)`, constraint `g = cos(x)cos(y) − sin(x)sin(y) − ½`.
pub fn synthetic2d(p: &[f64]) -> (f64, f64) {
    let (x, y) = (p[0], p[1]);
    let f = libm::cos(2.0 * x) * libm::cos(y) + libm::sin(x);
    let g = libm::cos(x) * libm::cos(y) - libm::sin(x) * libm::sin(y) - 0.5;
    (f, g)
}

pub const SYNTHETIC2D_BOUNDS: ([f64; 2], [f64; 2]) = ([0.0, 0.0], [6.0, 6.0]);

/// Outcome of a black-box run in evaluation order.
#[derive(Debug, Clone, PartialEq)]
pub struct BlackBoxRun {
    pub points: Vec<Vec<f64>>,
    pub observations: Vec<Observation>,
    /// Best feasible objective after each evaluation.
    pub best_trace: Vec<Option<f64>>,
}

impl BlackBoxRun {
    pub fn best(&self) -> Option<f64> {
        self.best_trace.last().copied().flatten()
    }
}

/// Running minimum over feasible values; `None` until the first feasible one.
pub fn best_so_far(values: impl IntoIterator<Item = Option<f64>>) -> Vec<Option<f64>> {
    let mut best: Option<f64> = None;
    values
        .into_iter()
        .map(|v| {
            if let Some(v) = v {
                best = Some(best.map_or(v, |b: f64| b.min(v)));
            }
            best
        })
        .collect()
}

/// First 1-based evaluation count at which the trace is within `frac` of
/// its final value.
pub fn iterations_to_within(trace: &[Option<f64>], frac: f64) -> Option<usize> {
    let last = trace.last().copied().flatten()?;
    let target = last + frac * libm::fabs(last);
    trace.iter().position(|v| v.is_some_and(|v| v <= target)).map(|i| i + 1)
}

fn scale(u: &[f64], lower: &[f64], upper: &[f64]) -> Vec<f64> {
    u.iter().zip(lower.iter().zip(upper)).map(|(u, (lo, hi))| lo + u * (hi - lo)).collect()
}

fn check_box(lower: &[f64], upper: &[f64]) -> Result<()> {
    if lower.len() != upper.len() || lower.is_empty() || lower.iter().zip(upper).any(|(l, u)| !(l < u)) {
        return Err(Error::invalid("bounds must be non-empty with lower < upper"));
    }
    Ok(())
}

/// Constrained BO on a box: Latin hypercube start, then `EI_C` steps.
pub fn minimize_constrained<F>(
    mut problem: F,
    lower: &[f64],
    upper: &[f64],
    budget: usize,
    init_samples: usize,
    seed: u64,
    settings: &BoSettings,
) -> Result<BlackBoxRun>
where
    F: FnMut(&[f64]) -> (f64, f64),
{
    check_box(lower, upper)?;
    if init_samples < 2 || budget <= init_samples {
        return Err(Error::invalid("need budget > init_samples >= 2"));
    }
    let d = lower.len();
    let design = latin_hypercube(init_samples, d, &mut stream(seed, 0x1A, 0));
    let mut points = Vec::with_capacity(budget);
    let mut observations: Vec<Observation> = Vec::with_capacity(budget);
    for k in 0..budget {
        let u = if k < init_samples {
            design[k].clone()
        } else {
            propose(&observations, settings, derive_seed(seed, 0x17, k as u64))?.point
        };
        let x = scale(&u, lower, upper);
        let (f, g) = problem(&x);
        observations.push(Observation { x: u, objective: f, constraint: g });
        points.push(x);
    }
    let best_trace = best_so_far(observations.iter().map(|o| o.feasible().then_some(o.objective)));
    debug_assert_eq!(best_trace.last().copied().flatten(), incumbent(&observations).map(|(_, v)| v));
    Ok(BlackBoxRun { points, observations, best_trace })
}

/// Uniform random search with the same budget.
pub fn random_search<F>(mut problem: F, lower: &[f64], upper: &[f64], budget: usize, seed: u64) -> Result<BlackBoxRun>
where
    F: FnMut(&[f64]) -> (f64, f64),
{
    check_box(lower, upper)?;
    let mut rng = stream(seed, 0x5EA, 0);
    let mut points = Vec::with_capacity(budget);
    let mut observations = Vec::with_capacity(budget);
    for _ in 0..budget {
        let u: Vec<f64> = (0..lower.len()).map(|_| rng.gen::<f64>()).collect();
        let x = scale(&u, lower, upper);
        let (f, g) = problem(&x);
        observations.push(Observation { x: u, objective: f, constraint: g });
        points.push(x);
    }
    let best_trace = best_so_far(observations.iter().map(|o| o.feasible().then_some(o.objective)));
    Ok(BlackBoxRun { points, observations, best_trace })
}
