//! Box-constrained limited-memory BFGS.
//!
//! A projected variant: bound-active coordinates are frozen for the step,
//! the L-BFGS direction is built on the free ones, and the backtracking
//! line search clamps each trial point back into the box.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::dot;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LbfgsOptions {
    pub max_iters: usize,
    pub memory: usize,
    /// Stop once the projected gradient's max-norm falls below this.
    pub grad_tol: f64,
    /// Stop once successive values agree to this relative tolerance.
    pub f_tol: f64,
}

impl Default for LbfgsOptions {
    fn default() -> Self {
        LbfgsOptions { max_iters: 100, memory: 8, grad_tol: 1e-10, f_tol: 1e-13 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

fn clamp_into(x: &mut [f64], lower: &[f64], upper: &[f64]) {
    for ((v, &lo), &hi) in x.iter_mut().zip(lower).zip(upper) {
        *v = v.clamp(lo, hi);
    }
}

fn projected_gradient(x: &[f64], g: &[f64], lower: &[f64], upper: &[f64]) -> Vec<f64> {
    x.iter()
        .zip(g)
        .zip(lower.iter().zip(upper))
        .map(|((&xi, &gi), (&lo, &hi))| {
            if (xi <= lo && gi > 0.0) || (xi >= hi && gi < 0.0) {
                0.0
            } else {
                gi
            }
        })
        .collect()
}

/// Minimizes `f` over the box `[lower, upper]` from `x0`.
///
/// `f(x, grad)` returns the value and writes the gradient. Non-finite values
/// are treated as rejected trial points by the line search.
pub fn minimize_box<F>(mut f: F, x0: &[f64], lower: &[f64], upper: &[f64], opts: &LbfgsOptions) -> Minimum
where
    F: FnMut(&[f64], &mut [f64]) -> f64,
{
    let n = x0.len();
    let mut x = x0.to_vec();
    clamp_into(&mut x, lower, upper);
    let mut g = vec![0.0; n];
    let mut fx = f(&x, &mut g);
    if !fx.is_finite() {
        return Minimum { x, value: fx, iterations: 0, converged: false };
    }
    let mut history: VecDeque<(Vec<f64>, Vec<f64>, f64)> = VecDeque::with_capacity(opts.memory);
    let mut g_new = vec![0.0; n];

    for iter in 0..opts.max_iters {
        let pg = projected_gradient(&x, &g, lower, upper);
        let pg_max = pg.iter().fold(0.0f64, |m, v| m.max(libm::fabs(*v)));
        if pg_max <= opts.grad_tol {
            return Minimum { x, value: fx, iterations: iter, converged: true };
        }
        let free: Vec<bool> = pg.iter().map(|v| *v != 0.0).collect();

        // two-loop recursion restricted to the free coordinates
        let mut d: Vec<f64> = pg.clone();
        let mut alphas = Vec::with_capacity(history.len());
        for (s, y, rho) in history.iter().rev() {
            let a = rho * masked_dot(s, &d, &free);
            for i in 0..n {
                if free[i] {
                    d[i] -= a * y[i];
                }
            }
            alphas.push(a);
        }
        if let Some((s, y, _)) = history.back() {
            let yy = masked_dot(y, y, &free);
            let sy = masked_dot(s, y, &free);
            if yy > 0.0 && sy > 0.0 {
                let gamma = sy / yy;
                d.iter_mut().for_each(|v| *v *= gamma);
            }
        }
        for ((s, y, rho), a) in history.iter().zip(alphas.iter().rev()) {
            let b = rho * masked_dot(y, &d, &free);
            for i in 0..n {
                if free[i] {
                    d[i] += (a - b) * s[i];
                }
            }
        }
        for i in 0..n {
            d[i] = if free[i] { -d[i] } else { 0.0 };
        }
        if dot(&d, &pg) >= 0.0 {
            history.clear();
            d = pg.iter().map(|v| -v).collect();
        }

        let mut step = if history.is_empty() {
            let dn = libm::sqrt(dot(&d, &d));
            if dn > 1.0 { 1.0 / dn } else { 1.0 }
        } else {
            1.0
        };
        let mut accepted = None;
        for _ in 0..60 {
            let mut trial: Vec<f64> = x.iter().zip(&d).map(|(xi, di)| xi + step * di).collect();
            clamp_into(&mut trial, lower, upper);
            let moved: Vec<f64> = trial.iter().zip(&x).map(|(t, xi)| t - xi).collect();
            let decrease = dot(&g, &moved);
            if decrease >= 0.0 && moved.iter().all(|m| *m == 0.0) {
                break;
            }
            let ft = f(&trial, &mut g_new);
            if ft.is_finite() && ft <= fx + 1e-4 * decrease.min(0.0) {
                accepted = Some((trial, ft, moved));
                break;
            }
            step *= 0.5;
        }
        let Some((trial, ft, s)) = accepted else {
            if history.is_empty() {
                return Minimum { x, value: fx, iterations: iter, converged: false };
            }
            history.clear();
            continue;
        };
        let y: Vec<f64> = g_new.iter().zip(&g).map(|(a, b)| a - b).collect();
        let sy = dot(&s, &y);
        if sy > 1e-12 * libm::sqrt(dot(&s, &s) * dot(&y, &y)) {
            if history.len() == opts.memory {
                history.pop_front();
            }
            history.push_back((s, y, 1.0 / sy));
        }
        let small_change = libm::fabs(fx - ft) <= opts.f_tol * fx.abs().max(ft.abs()).max(1e-300);
        x = trial;
        fx = ft;
        g.copy_from_slice(&g_new);
        if small_change {
            return Minimum { x, value: fx, iterations: iter + 1, converged: true };
        }
    }
    Minimum { x, value: fx, iterations: opts.max_iters, converged: false }
}

fn masked_dot(a: &[f64], b: &[f64], mask: &[bool]) -> f64 {
    a.iter().zip(b).zip(mask).filter(|(_, m)| **m).map(|((x, y), _)| x * y).sum()
}

/// Gradient by central differences, falling back to one-sided differences
/// at the box faces so no probe leaves `[lower, upper]`.
pub fn fd_gradient<F: FnMut(&[f64]) -> f64>(
    f: &mut F,
    x: &[f64],
    step: f64,
    lower: &[f64],
    upper: &[f64],
    grad: &mut [f64],
) {
    let mut probe = x.to_vec();
    for i in 0..x.len() {
        let hi = (x[i] + step).min(upper[i]);
        let lo = (x[i] - step).max(lower[i]);
        probe[i] = hi;
        let fp = f(&probe);
        probe[i] = lo;
        let fm = f(&probe);
        probe[i] = x[i];
        grad[i] = if hi > lo { (fp - fm) / (hi - lo) } else { 0.0 };
    }
}
