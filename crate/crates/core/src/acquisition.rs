//! Expected improvement, probability of feasibility, their product, and the
//! two-stage (Monte Carlo, then bounded quasi-Newton) maximizer.
//!
//! Minimization convention throughout: improvement is `best − f`, and a
//! design is feasible when the constraint is `≤ 0`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::{ensure_finite, Error, Result};
use crate::gp::{GpModel, PosteriorPrediction};
use crate::optim::{fd_gradient, minimize_box, LbfgsOptions};
use crate::sampling;
use crate::special::{norm_cdf, norm_pdf};

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AcquisitionConfig {
    pub mc_samples: usize,
    pub refine_starts: usize,
    pub fd_step: f64,
    pub max_refine_iters: usize,
    /// Share of the samples drawn around the incumbent instead of uniformly.
    pub local_fraction: f64,
    /// Standard deviation of those draws, unit-cube units. Draws are clipped
    /// to the box, so many land on its faces.
    pub local_scale: f64,
    pub seed: u64,
}

impl Default for AcquisitionConfig {
    fn default() -> Self {
        AcquisitionConfig {
            mc_samples: 2048,
            refine_starts: 10,
            fd_step: 1e-5,
            max_refine_iters: 100,
            local_fraction: 0.25,
            local_scale: 0.1,
            seed: 0,
        }
    }
}

impl AcquisitionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.refine_starts < 1 || self.mc_samples < self.refine_starts {
            return Err(Error::invalid(format!(
                "need mc_samples >= refine_starts >= 1, got {} and {}",
                self.mc_samples, self.refine_starts
            )));
        }
        if !(self.fd_step > 0.0 && self.fd_step < 1e-2) {
            return Err(Error::invalid(format!("fd_step must lie in (0, 1e-2), got {}", self.fd_step)));
        }
        if self.max_refine_iters == 0 {
            return Err(Error::invalid("max_refine_iters must be >= 1"));
        }
        if !(0.0..=1.0).contains(&self.local_fraction) {
            return Err(Error::invalid(format!("local_fraction must lie in [0, 1], got {}", self.local_fraction)));
        }
        if !(self.local_scale > 0.0 && self.local_scale.is_finite()) {
            return Err(Error::invalid(format!("local_scale must be positive, got {}", self.local_scale)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcquisitionValue {
    pub ei: f64,
    pub pf: f64,
    pub ei_c: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CandidateResult {
    /// Location in the unit hypercube.
    pub point: Vec<f64>,
    pub ei_c: f64,
    pub ei: f64,
    pub pf: f64,
}

/// Closed-form expected improvement below `best` for a Gaussian `N(mean, std²)`.
pub fn expected_improvement(mean: f64, std: f64, best: f64) -> Result<f64> {
    ensure_finite("mean", mean)?;
    ensure_finite("best", best)?;
    ensure_finite("std", std)?;
    if std < 0.0 {
        return Err(Error::invalid(format!("std must be >= 0, got {std}")));
    }
    let gap = best - mean;
    if std == 0.0 {
        return Ok(gap.max(0.0));
    }
    let z = gap / std;
    Ok((gap * norm_cdf(z) + std * norm_pdf(z)).max(0.0))
}

/// `Pr(g ≤ 0)` for `g ~ N(mean_g, std_g²)`.
pub fn probability_feasible(mean_g: f64, std_g: f64) -> Result<f64> {
    ensure_finite("mean_g", mean_g)?;
    ensure_finite("std_g", std_g)?;
    if std_g < 0.0 {
        return Err(Error::invalid(format!("std_g must be >= 0, got {std_g}")));
    }
    if std_g == 0.0 {
        return Ok(if mean_g <= 0.0 { 1.0 } else { 0.0 });
    }
    Ok(norm_cdf(-mean_g / std_g))
}

/// `EI_C = PF · EI`. With no feasible incumbent (`best_feasible = None`) the
/// improvement factor is taken as 1 so only feasibility is sought.
pub fn constrained_ei(
    f_pred: &PosteriorPrediction,
    g_pred: &PosteriorPrediction,
    best_feasible: Option<f64>,
) -> Result<AcquisitionValue> {
    let pf = probability_feasible(g_pred.mean, g_pred.std())?;
    let ei = match best_feasible {
        Some(best) => expected_improvement(f_pred.mean, f_pred.std(), best)?,
        None => 1.0,
    };
    Ok(AcquisitionValue { ei, pf, ei_c: ei * pf })
}

fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u1 = 1.0 - rng.gen::<f64>();
    let u2 = rng.gen::<f64>();
    libm::sqrt(-2.0 * libm::log(u1)) * libm::cos(2.0 * core::f64::consts::PI * u2)
}

fn acquisition_at(f_model: &GpModel, g_model: &GpModel, best: Option<f64>, x: &[f64]) -> Result<AcquisitionValue> {
    constrained_ei(&f_model.posterior(x)?, &g_model.posterior(x)?, best)
}

/// Maximizes `EI_C` over the unit hypercube.
///
/// Stage one scores `mc_samples` random points, uniform except for a
/// `local_fraction` share scattered around `anchor` (normally the incumbent); stage two polishes the
/// `refine_starts` best of them with box-constrained L-BFGS on
/// finite-difference gradients. If every sample scores zero, the sample with
/// the highest probability of feasibility is returned instead.
pub fn maximize_acquisition(
    f_model: &GpModel,
    g_model: &GpModel,
    best_feasible: Option<f64>,
    anchor: Option<&[f64]>,
    cfg: &AcquisitionConfig,
) -> Result<CandidateResult> {
    cfg.validate()?;
    let d = f_model.dim();
    if g_model.dim() != d {
        return Err(Error::invalid("objective and constraint models differ in dimension"));
    }
    if anchor.is_some_and(|a| a.len() != d) {
        return Err(Error::invalid("anchor dimension does not match the models"));
    }
    if let Some(b) = best_feasible {
        ensure_finite("best_feasible", b)?;
    }

    let mut rng = sampling::stream(cfg.seed, 0xACC, 0);
    let mut samples: Vec<(Vec<f64>, AcquisitionValue)> = Vec::with_capacity(cfg.mc_samples);
    let local = anchor.map_or(0, |_| (cfg.local_fraction * cfg.mc_samples as f64) as usize);
    for i in 0..cfg.mc_samples {
        let x: Vec<f64> = match anchor {
            Some(a) if i >= cfg.mc_samples - local => {
                a.iter().map(|&c| (c + cfg.local_scale * std_normal(&mut rng)).clamp(0.0, 1.0)).collect()
            }
            _ => (0..d).map(|_| rng.gen::<f64>()).collect(),
        };
        let v = acquisition_at(f_model, g_model, best_feasible, &x)?;
        samples.push((x, v));
    }

    // stable sort keeps the lowest sample index first among ties
    let mut order: Vec<usize> = (0..samples.len()).collect();
    order.sort_by(|&i, &j| samples[j].1.ei_c.total_cmp(&samples[i].1.ei_c));

    if samples[order[0]].1.ei_c <= 0.0 {
        let idx = (0..samples.len()).fold(0, |b, i| if samples[i].1.pf > samples[b].1.pf { i } else { b });
        let (point, v) = samples.swap_remove(idx);
        return Ok(CandidateResult { point, ei_c: 0.0, ei: v.ei, pf: v.pf });
    }

    let lower = vec![0.0; d];
    let upper = vec![1.0; d];
    let opts = LbfgsOptions { max_iters: cfg.max_refine_iters, memory: 8, grad_tol: 0.0, f_tol: 1e-14 };
    let (mut best_x, mut best_v) = (samples[order[0]].0.clone(), samples[order[0]].1);
    for &start in order.iter().take(cfg.refine_starts) {
        let neg = |x: &[f64]| -> f64 {
            acquisition_at(f_model, g_model, best_feasible, x).map_or(f64::INFINITY, |v| -v.ei_c)
        };
        let objective = |x: &[f64], grad: &mut [f64]| -> f64 {
            let mut probe = |p: &[f64]| neg(p);
            fd_gradient(&mut probe, x, cfg.fd_step, &lower, &upper, grad);
            neg(x)
        };
        let m = minimize_box(objective, &samples[start].0, &lower, &upper, &opts);
        let v = acquisition_at(f_model, g_model, best_feasible, &m.x)?;
        if v.ei_c > best_v.ei_c {
            best_x = m.x;
            best_v = v;
        }
    }
    Ok(CandidateResult { point: best_x, ei_c: best_v.ei * best_v.pf, ei: best_v.ei, pf: best_v.pf })
}
