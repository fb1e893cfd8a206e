//! Reference implementations used only by tests. Each one is written the
//! slow, obvious way and shares no code with the library paths it checks.
#![allow(dead_code)]

pub mod pf_table;

use cbo_core::gp::{kernel_eval, KernelHyperparams};
use cbo_core::hull::{BaselineGeometry, HullParams};
use rand::Rng;

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
pub fn dense_solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| a[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    x
}

/// `log det A` from the pivots of Gaussian elimination.
pub fn dense_logdet(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut acc = 0.0;
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        a.swap(col, pivot);
        acc += a[col][col].abs().ln();
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
        }
    }
    acc
}

/// Posterior mean and variance by explicit solves against
/// `K + (noise + jitter) I`, with prior mean `prior_mean`.
pub fn dense_posterior(
    inputs: &[Vec<f64>],
    targets: &[f64],
    hp: &KernelHyperparams,
    prior_mean: f64,
    jitter: f64,
    x: &[f64],
) -> (f64, f64) {
    let n = inputs.len();
    let k = |i: usize, j: usize| {
        kernel_eval(&inputs[i], &inputs[j], hp).unwrap() + if i == j { hp.noise_variance + jitter } else { 0.0 }
    };
    let gram: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| k(i, j)).collect()).collect();
    let kstar: Vec<f64> = inputs.iter().map(|xi| kernel_eval(x, xi, hp).unwrap()).collect();
    let centered: Vec<f64> = targets.iter().map(|t| t - prior_mean).collect();
    let alpha = dense_solve(gram.clone(), centered);
    let v = dense_solve(gram, kstar.clone());
    let mean = prior_mean + kstar.iter().zip(&alpha).map(|(a, b)| a * b).sum::<f64>();
    let var = kernel_eval(x, x, hp).unwrap() - kstar.iter().zip(&v).map(|(a, b)| a * b).sum::<f64>();
    (mean, var)
}

/// Standard normal draw by Box-Muller.
pub fn normal<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Sample mean of `max(best − Y, 0)` for `Y ~ N(mean, std²)`.
pub fn monte_carlo_ei<R: Rng>(mean: f64, std: f64, best: f64, samples: usize, rng: &mut R) -> f64 {
    let total: f64 = (0..samples).map(|_| (best - (mean + std * normal(rng))).max(0.0)).sum();
    total / samples as f64
}

/// Worst interference by scanning `stations + 1` uniform axial positions of
/// the overlap. Uses the public radius functions only.
pub fn brute_force_margin(p: &HullParams, bg: &BaselineGeometry, stations: usize) -> f64 {
    let offset = p.a - bg.a;
    let end = offset + bg.length();
    if offset < 0.0 || end > p.length() {
        return 0.5 * bg.d;
    }
    (0..=stations)
        .map(|i| {
            let xb = (bg.length() * i as f64 / stations as f64).min(bg.length());
            let xh = (offset + xb).min(p.length());
            bg.radius(xb).unwrap() - p.radius(xh).unwrap()
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Minimum of `f` subject to `g ≤ 0` on an `n × n` grid over `[lo, hi]²`,
/// endpoints included.
pub fn grid_constrained_min<F: Fn(&[f64]) -> (f64, f64)>(problem: F, lo: [f64; 2], hi: [f64; 2], n: usize) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..n {
        for j in 0..n {
            let x = lo[0] + (hi[0] - lo[0]) * i as f64 / (n - 1) as f64;
            let y = lo[1] + (hi[1] - lo[1]) * j as f64 / (n - 1) as f64;
            let (f, g) = problem(&[x, y]);
            if g <= 0.0 {
                best = best.min(f);
            }
        }
    }
    best
}

/// Largest value of `acq` on an `n × n` grid over the unit square.
pub fn grid_max<F: Fn(&[f64]) -> f64>(acq: F, n: usize) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for i in 0..n {
        for j in 0..n {
            let x = [i as f64 / (n - 1) as f64, j as f64 / (n - 1) as f64];
            best = best.max(acq(&x));
        }
    }
    best
}

/// Myring nose radius written from the textbook formula.
pub fn myring_nose(x: f64, a: f64, d: f64, n: f64) -> f64 {
    0.5 * d * (1.0 - ((x - a) / a).powi(2)).powf(1.0 / n)
}

/// Cubic tail radius at distance `z` into the tail, in Hermite form: value
/// D/2 and slope 0 at the joint, value 0 and slope −tanθ at the tip.
pub fn myring_tail(z: f64, c: f64, d: f64, theta_deg: f64) -> f64 {
    let s = z / c;
    let h00 = (1.0 - s).powi(2) * (1.0 + 2.0 * s);
    let h11 = s * s * (s - 1.0);
    0.5 * d * h00 - c * theta_deg.to_radians().tan() * h11
}

/// A random hull in the widest optimization box around `bg`.
pub fn random_hull<R: Rng>(rng: &mut R, bg: &BaselineGeometry) -> HullParams {
    HullParams {
        a: bg.a + 2500.0 * rng.gen::<f64>(),
        b: bg.b,
        c: bg.c + 2500.0 * rng.gen::<f64>(),
        d: bg.d,
        n: 0.1 + 4.9 * rng.gen::<f64>(),
        theta_deg: 50.0 * rng.gen::<f64>(),
    }
}

/// A random pair of conditioned 2-d models for acquisition tests, with the
/// incumbent taken from the feasible training data.
pub fn random_acquisition_instance<R: Rng>(
    rng: &mut R,
) -> (cbo_core::gp::GpModel, cbo_core::gp::GpModel, Option<f64>) {
    use cbo_core::gp::GpModel;
    use cbo_core::linalg::Matrix;
    let n = rng.gen_range(5..=15);
    let x: Vec<Vec<f64>> = (0..n).map(|_| vec![rng.gen::<f64>(), rng.gen::<f64>()]).collect();
    let (p, q) = (rng.gen_range(1.0..6.0), rng.gen_range(1.0..6.0));
    let f: Vec<f64> = x.iter().map(|v| (p * v[0]).sin() + (q * v[1]).cos() + 0.1 * normal(rng)).collect();
    let shift = rng.gen_range(-0.8..0.8);
    let g: Vec<f64> = x.iter().map(|v| (q * v[0] - p * v[1]).sin() + shift).collect();
    let hp = |rng: &mut R| {
        KernelHyperparams::new(rng.gen_range(0.5..2.0), vec![rng.gen_range(0.1..0.5), rng.gen_range(0.1..0.5)], 1e-6)
            .unwrap()
    };
    let best = f.iter().zip(&g).filter(|(_, g)| **g <= 0.0).map(|(f, _)| *f).fold(None, |b: Option<f64>, v| {
        Some(b.map_or(v, |b| b.min(v)))
    });
    let inputs = Matrix::from_rows(&x).unwrap();
    let fm = GpModel::condition(inputs.clone(), f, hp(rng)).unwrap();
    let gm = GpModel::condition(inputs, g, hp(rng)).unwrap();
    (fm, gm, best)
}
