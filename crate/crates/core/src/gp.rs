//! Gaussian process regression with a Matérn 5/2 ARD kernel.
//!
//! Inputs are expected in the unit hypercube. [`GpModel::fit`] z-scores the
//! targets and picks hyperparameters by maximizing the log marginal
//! likelihood; [`GpModel::condition`] conditions on raw targets with given
//! hyperparameters. Predictions are always reported in the caller's units.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::optim::{minimize_box, LbfgsOptions};

const SQRT5: f64 = 2.236_067_977_499_79;

/// Kernel matrices get `rel·signal_variance` added to the diagonal, starting
/// at the first level and escalating on Cholesky failure.
// Relative diagonal jitter tried in turn. The bare matrix is accepted only
// when its smallest pivot is well above rounding level.
const JITTER_LEVELS: [f64; 8] = [0.0, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4];

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KernelHyperparams {
    pub signal_variance: f64,
    pub lengthscales: Vec<f64>,
    pub noise_variance: f64,
}

impl KernelHyperparams {
    pub fn new(signal_variance: f64, lengthscales: Vec<f64>, noise_variance: f64) -> Result<Self> {
        let hp = KernelHyperparams { signal_variance, lengthscales, noise_variance };
        hp.validate()?;
        Ok(hp)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.signal_variance > 0.0 && self.signal_variance.is_finite()) {
            return Err(Error::invalid(format!("signal_variance must be > 0, got {}", self.signal_variance)));
        }
        if self.lengthscales.is_empty() {
            return Err(Error::invalid("at least one lengthscale is required"));
        }
        if let Some(l) = self.lengthscales.iter().find(|l| !(**l > 0.0 && l.is_finite())) {
            return Err(Error::invalid(format!("lengthscales must be > 0, got {l}")));
        }
        if !(self.noise_variance >= 0.0 && self.noise_variance.is_finite()) {
            return Err(Error::invalid(format!("noise_variance must be >= 0, got {}", self.noise_variance)));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.lengthscales.len()
    }
}

/// Matérn 5/2 correlation at scaled distance `r`.
#[inline]
pub fn matern52(r: f64) -> f64 {
    let s = SQRT5 * r;
    (1.0 + s + s * s / 3.0) * libm::exp(-s)
}

#[inline]
fn scaled_distance(x: &[f64], x2: &[f64], lengthscales: &[f64]) -> f64 {
    let mut acc = 0.0;
    for ((a, b), l) in x.iter().zip(x2).zip(lengthscales) {
        let t = (a - b) / l;
        acc += t * t;
    }
    libm::sqrt(acc)
}

/// Covariance `k(x, x2)` of the Matérn 5/2 ARD kernel.
pub fn kernel_eval(x: &[f64], x2: &[f64], hp: &KernelHyperparams) -> Result<f64> {
    if x.len() != hp.dim() || x2.len() != hp.dim() {
        return Err(Error::invalid(format!(
            "points of dimension {} and {} do not match {} lengthscales",
            x.len(),
            x2.len(),
            hp.dim()
        )));
    }
    Ok(hp.signal_variance * matern52(scaled_distance(x, x2, &hp.lengthscales)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PosteriorPrediction {
    pub mean: f64,
    pub variance: f64,
}

impl PosteriorPrediction {
    pub fn std(&self) -> f64 {
        libm::sqrt(self.variance)
    }
}

/// Hyperparameter search settings. Bounds are in standardized output units
/// and normalized input units. Equal noise bounds pin the noise variance.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FitConfig {
    pub restarts: usize,
    pub lengthscale_bounds: (f64, f64),
    pub signal_variance_bounds: (f64, f64),
    pub noise_variance_bounds: (f64, f64),
    pub seed: u64,
    pub optimizer: LbfgsOptions,
}

impl Default for FitConfig {
    fn default() -> Self {
        FitConfig {
            restarts: 8,
            lengthscale_bounds: (1e-2, 1e2),
            signal_variance_bounds: (1e-3, 1e3),
            noise_variance_bounds: (1e-8, 1e-1),
            seed: 0,
            optimizer: LbfgsOptions { max_iters: 60, memory: 8, grad_tol: 1e-6, f_tol: 1e-10 },
        }
    }
}

impl FitConfig {
    /// Interpolating fit: noise variance pinned at zero.
    pub fn noiseless() -> Self {
        FitConfig { noise_variance_bounds: (0.0, 0.0), ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |(lo, hi): (f64, f64), allow_zero: bool| {
            lo.is_finite() && hi.is_finite() && lo <= hi && (lo > 0.0 || (allow_zero && lo == 0.0 && hi == 0.0))
        };
        if self.restarts == 0 {
            return Err(Error::invalid("restarts must be >= 1"));
        }
        if !ok(self.lengthscale_bounds, false) || !ok(self.signal_variance_bounds, false) {
            return Err(Error::invalid("kernel bounds must be positive and ordered"));
        }
        if !ok(self.noise_variance_bounds, true) {
            return Err(Error::invalid("noise bounds must be positive and ordered, or both zero"));
        }
        Ok(())
    }
}

/// A Gaussian process conditioned on data. Immutable once built.
#[derive(Debug, Clone)]
pub struct GpModel {
    inputs: Matrix,
    targets: Vec<f64>,
    hyperparams: KernelHyperparams,
    chol_factor: Matrix,
    alpha: Vec<f64>,
    prior_mean: f64,
    jitter: f64,
    output_offset: f64,
    output_scale: f64,
}

fn validate_data(inputs: &Matrix, y: &[f64]) -> Result<()> {
    if inputs.rows() == 0 {
        return Err(Error::invalid("at least one training point is required"));
    }
    if inputs.cols() == 0 {
        return Err(Error::invalid("training inputs need at least one dimension"));
    }
    if inputs.rows() != y.len() {
        return Err(Error::invalid(format!("{} inputs but {} targets", inputs.rows(), y.len())));
    }
    if inputs.as_slice().iter().chain(y).any(|v| !v.is_finite()) {
        return Err(Error::invalid("training data must be finite"));
    }
    Ok(())
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

impl GpModel {
    /// Conditions on raw `targets` with fixed hyperparameters. The prior mean
    /// is the target mean and no output scaling is applied.
    pub fn condition(inputs: Matrix, targets: Vec<f64>, hp: KernelHyperparams) -> Result<Self> {
        validate_data(&inputs, &targets)?;
        hp.validate()?;
        if hp.dim() != inputs.cols() {
            return Err(Error::invalid("lengthscale count does not match input dimension"));
        }
        let prior_mean = mean(&targets);
        Self::assemble(inputs, targets, hp, prior_mean, 0.0, 1.0)
    }

    /// Standardizes `y`, then selects hyperparameters by multi-restart
    /// bounded quasi-Newton ascent of the log marginal likelihood.
    pub fn fit(inputs: Matrix, y: &[f64], cfg: &FitConfig) -> Result<Self> {
        validate_data(&inputs, y)?;
        cfg.validate()?;
        let d = inputs.cols();
        let offset = mean(y);
        let var = y.iter().map(|v| (v - offset) * (v - offset)).sum::<f64>() / y.len() as f64;
        let sd = libm::sqrt(var);
        let scale = if sd > 1e-12 * offset.abs().max(1.0) { sd } else { 1.0 };
        let targets: Vec<f64> = y.iter().map(|v| (v - offset) / scale).collect();
        let prior_mean = mean(&targets);

        let fixed_noise = cfg.noise_variance_bounds.0 == cfg.noise_variance_bounds.1;
        let ln = |(lo, hi): (f64, f64)| (libm::log(lo), libm::log(hi));
        let (sl, sh) = ln(cfg.signal_variance_bounds);
        let (ll, lh) = ln(cfg.lengthscale_bounds);
        let mut lower = vec![sl];
        let mut upper = vec![sh];
        lower.extend(core::iter::repeat_n(ll, d));
        upper.extend(core::iter::repeat_n(lh, d));
        if !fixed_noise {
            let (nl, nh) = ln(cfg.noise_variance_bounds);
            lower.push(nl);
            upper.push(nh);
        }
        let unpack = |theta: &[f64]| KernelHyperparams {
            signal_variance: libm::exp(theta[0]),
            lengthscales: theta[1..=d].iter().map(|t| libm::exp(*t)).collect(),
            noise_variance: if fixed_noise { cfg.noise_variance_bounds.0 } else { libm::exp(theta[d + 1]) },
        };

        let objective = |theta: &[f64], grad: &mut [f64]| -> f64 {
            let hp = unpack(theta);
            match Self::assemble(inputs.clone(), targets.clone(), hp, prior_mean, offset, scale) {
                Ok(m) => {
                    let g = m.log_marginal_likelihood_gradient();
                    for (o, v) in grad.iter_mut().zip(&g) {
                        *o = -v;
                    }
                    -m.log_marginal_likelihood()
                }
                Err(_) => f64::INFINITY,
            }
        };

        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut best: Option<(f64, Vec<f64>)> = None;
        for restart in 0..cfg.restarts {
            let start: Vec<f64> = if restart == 0 {
                // unit signal, mid-range lengthscales, small noise
                let mut s = vec![0.0f64.clamp(sl, sh)];
                s.extend(core::iter::repeat_n(libm::log(0.3).clamp(ll, lh), d));
                if !fixed_noise {
                    s.push(libm::log(1e-6).clamp(lower[d + 1], upper[d + 1]));
                }
                s
            } else {
                lower.iter().zip(&upper).map(|(lo, hi)| lo + (hi - lo) * rng.gen::<f64>()).collect()
            };
            let m = minimize_box(&objective, &start, &lower, &upper, &cfg.optimizer);
            if m.value.is_finite() && best.as_ref().is_none_or(|(v, _)| m.value < *v) {
                best = Some((m.value, m.x));
            }
        }
        let (_, theta) = best.ok_or_else(|| {
            Error::NumericalFailure("no hyperparameter restart produced a factorizable kernel".into())
        })?;
        Self::assemble(inputs, targets, unpack(&theta), prior_mean, offset, scale)
    }

    fn assemble(
        inputs: Matrix,
        targets: Vec<f64>,
        hyperparams: KernelHyperparams,
        prior_mean: f64,
        output_offset: f64,
        output_scale: f64,
    ) -> Result<Self> {
        let n = inputs.rows();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let v = hyperparams.signal_variance
                    * matern52(scaled_distance(inputs.row(i), inputs.row(j), &hyperparams.lengthscales));
                k.set(i, j, v);
                k.set(j, i, v);
            }
        }
        for rel in JITTER_LEVELS {
            let jitter = rel * hyperparams.signal_variance;
            let mut kj = k.clone();
            for i in 0..n {
                kj.set(i, i, kj.get(i, i) + hyperparams.noise_variance + jitter);
            }
            let floor = if rel == 0.0 { 64.0 * f64::EPSILON * n as f64 * hyperparams.signal_variance } else { 0.0 };
            let factor = linalg::cholesky(&kj)
                .filter(|l| (0..n).all(|i| l.get(i, i) * l.get(i, i) > floor));
            if let Some(chol_factor) = factor {
                let centered: Vec<f64> = targets.iter().map(|t| t - prior_mean).collect();
                let alpha = linalg::cholesky_solve(&chol_factor, &centered);
                return Ok(GpModel {
                    inputs,
                    targets,
                    hyperparams,
                    chol_factor,
                    alpha,
                    prior_mean,
                    jitter,
                    output_offset,
                    output_scale,
                });
            }
        }
        Err(Error::NumericalFailure(format!(
            "kernel matrix not positive definite even with jitter {:e}",
            JITTER_LEVELS[JITTER_LEVELS.len() - 1] * hyperparams.signal_variance
        )))
    }

    /// Posterior mean and latent-function variance at `x`, in output units.
    pub fn posterior(&self, x: &[f64]) -> Result<PosteriorPrediction> {
        if x.len() != self.dim() {
            return Err(Error::invalid(format!("query has dimension {}, model has {}", x.len(), self.dim())));
        }
        let hp = &self.hyperparams;
        let mut kstar: Vec<f64> = (0..self.len())
            .map(|i| hp.signal_variance * matern52(scaled_distance(x, self.inputs.row(i), &hp.lengthscales)))
            .collect();
        let mean = self.prior_mean + linalg::dot(&kstar, &self.alpha);
        linalg::solve_lower_in_place(&self.chol_factor, &mut kstar);
        let variance = (hp.signal_variance - linalg::dot(&kstar, &kstar))
            .clamp(0.0, hp.signal_variance + hp.noise_variance);
        Ok(PosteriorPrediction {
            mean: self.output_offset + self.output_scale * mean,
            variance: self.output_scale * self.output_scale * variance,
        })
    }

    /// `−½ yᵀα − Σ log Lᵢᵢ − (N/2) log 2π` on the centered, standardized targets.
    pub fn log_marginal_likelihood(&self) -> f64 {
        let n = self.len();
        let fit: f64 = self.targets.iter().zip(&self.alpha).map(|(t, a)| (t - self.prior_mean) * a).sum();
        let logdet: f64 = (0..n).map(|i| libm::log(self.chol_factor.get(i, i))).sum();
        -0.5 * fit - logdet - 0.5 * n as f64 * libm::log(2.0 * PI)
    }

    /// Gradient of [`Self::log_marginal_likelihood`] with respect to
    /// `(log σ², log ℓ₁ … log ℓ_d, log σₙ²)`, holding the relative jitter fixed.
    pub fn log_marginal_likelihood_gradient(&self) -> Vec<f64> {
        let n = self.len();
        let d = self.dim();
        let hp = &self.hyperparams;
        let kinv = linalg::cholesky_inverse(&self.chol_factor);
        let mut grad = vec![0.0; d + 2];
        for i in 0..n {
            for j in 0..=i {
                let w = self.alpha[i] * self.alpha[j] - kinv.get(i, j);
                let mult = if i == j { 0.5 } else { 1.0 };
                let xi = self.inputs.row(i);
                let xj = self.inputs.row(j);
                let r = scaled_distance(xi, xj, &hp.lengthscales);
                let e = libm::exp(-SQRT5 * r);
                let mut dk_signal = hp.signal_variance * (1.0 + SQRT5 * r + 5.0 * r * r / 3.0) * e;
                if i == j {
                    dk_signal += self.jitter;
                    grad[d + 1] += mult * w * hp.noise_variance;
                }
                grad[0] += mult * w * dk_signal;
                // ∂k/∂log ℓ_k = σ²·(5/3)(1+√5 r)e^(−√5 r)·(Δ_k/ℓ_k)²
                let common = hp.signal_variance * (5.0 / 3.0) * (1.0 + SQRT5 * r) * e;
                for (k, l) in hp.lengthscales.iter().enumerate() {
                    let t = (xi[k] - xj[k]) / l;
                    grad[1 + k] += mult * w * common * t * t;
                }
            }
        }
        grad
    }

    pub fn len(&self) -> usize {
        self.inputs.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim(&self) -> usize {
        self.inputs.cols()
    }

    pub fn inputs(&self) -> &Matrix {
        &self.inputs
    }

    /// Training targets in standardized units.
    pub fn targets(&self) -> &[f64] {
        &self.targets
    }

    pub fn hyperparams(&self) -> &KernelHyperparams {
        &self.hyperparams
    }

    pub fn chol_factor(&self) -> &Matrix {
        &self.chol_factor
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn prior_mean(&self) -> f64 {
        self.prior_mean
    }

    /// Absolute diagonal jitter that made the kernel matrix factorizable.
    pub fn jitter(&self) -> f64 {
        self.jitter
    }

    /// `(offset, scale)` mapping standardized values back to output units.
    pub fn output_transform(&self) -> (f64, f64) {
        (self.output_offset, self.output_scale)
    }
}
