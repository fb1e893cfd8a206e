//! One step of constrained Bayesian optimization on the unit hypercube:
//! fit the objective and constraint surrogates, then maximize `EI_C`.

use alloc::vec::Vec;

use crate::acquisition::{maximize_acquisition, AcquisitionConfig, CandidateResult};
use crate::error::{Error, Result};
use crate::gp::{FitConfig, GpModel};
use crate::linalg::Matrix;
use crate::sampling::derive_seed;

/// An evaluated point. Feasible means `constraint ≤ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    pub x: Vec<f64>,
    pub objective: f64,
    pub constraint: f64,
}

impl Observation {
    pub fn feasible(&self) -> bool {
        self.constraint <= 0.0
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoSettings {
    pub fit: FitConfig,
    pub acquisition: AcquisitionConfig,
}

/// Index and value of the lowest feasible objective; the first one wins ties.
pub fn incumbent(observations: &[Observation]) -> Option<(usize, f64)> {
    observations
        .iter()
        .enumerate()
        .filter(|(_, o)| o.feasible())
        .fold(None, |best, (i, o)| match best {
            Some((_, v)) if v <= o.objective => best,
            _ => Some((i, o.objective)),
        })
}

/// Next point to evaluate. All randomness is drawn from `seed`.
pub fn propose(observations: &[Observation], settings: &BoSettings, seed: u64) -> Result<CandidateResult> {
    if observations.is_empty() {
        return Err(Error::invalid("cannot propose from an empty data set"));
    }
    let rows: Vec<&[f64]> = observations.iter().map(|o| o.x.as_slice()).collect();
    let inputs = Matrix::from_rows(&rows).ok_or_else(|| Error::invalid("observations differ in dimension"))?;
    let objective: Vec<f64> = observations.iter().map(|o| o.objective).collect();
    let constraint: Vec<f64> = observations.iter().map(|o| o.constraint).collect();

    let f_cfg = FitConfig { seed: derive_seed(seed, 0xF, 0), ..settings.fit.clone() };
    let g_cfg = FitConfig { seed: derive_seed(seed, 0x6, 0), ..settings.fit.clone() };
    let f_model = GpModel::fit(inputs.clone(), &objective, &f_cfg)?;
    let g_model = GpModel::fit(inputs, &constraint, &g_cfg)?;
    let acq = AcquisitionConfig { seed: derive_seed(seed, 0xA, 0), ..settings.acquisition.clone() };
    let best = incumbent(observations);
    let anchor = best.map(|(i, _)| observations[i].x.as_slice());
    maximize_acquisition(&f_model, &g_model, best.map(|(_, v)| v), anchor, &acq)
}
