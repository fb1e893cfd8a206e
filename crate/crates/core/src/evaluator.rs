//! Design evaluation: the analytic drag proxy, the backend seam for external
//! solvers, and the infeasible-design heuristic that avoids paying for a
//! solve on designs that cannot hold the payload.

use alloc::format;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hull::{containment_margin, BaselineGeometry, HullParams};
use crate::quadrature::integrate;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FlowConditions {
    /// Free-stream speed, m/s.
    pub speed: f64,
    /// kg/m³
    pub fluid_density: f64,
    /// m²/s
    pub kinematic_viscosity: f64,
}

impl Default for FlowConditions {
    /// 2 m/s in fresh water at 20 °C.
    fn default() -> Self {
        FlowConditions { speed: 2.0, fluid_density: 998.2, kinematic_viscosity: 1.004e-6 }
    }
}

impl FlowConditions {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("speed", self.speed),
            ("fluid_density", self.fluid_density),
            ("kinematic_viscosity", self.kinematic_viscosity),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::invalid(format!("flow {name} must be positive, got {v}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum EvalSource {
    Proxy,
    External,
    Heuristic,
}

impl EvalSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            EvalSource::Proxy => "proxy",
            EvalSource::External => "external",
            EvalSource::Heuristic => "heuristic",
        }
    }
}

/// One evaluated design.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EvalRecord {
    pub params: HullParams,
    /// Newtons.
    pub drag: f64,
    pub feasible: bool,
    /// Containment margin, mm.
    pub margin: f64,
    pub source: EvalSource,
    /// Seconds spent producing `drag`.
    pub wall_time: f64,
}

impl EvalRecord {
    /// Whether this record came from an actual solve of an infeasible design.
    pub fn is_true_infeasible(&self) -> bool {
        !self.feasible && self.source != EvalSource::Heuristic
    }
}

/// Something that turns a hull into a drag force.
pub trait DragBackend {
    fn source(&self) -> EvalSource;
    fn drag(&mut self, params: &HullParams, flow: &FlowConditions) -> Result<f64>;
}

/// Monotonic seconds, supplied by the host.
pub trait Clock {
    fn now(&self) -> f64;
}

/// A clock that never advances.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now(&self) -> f64 {
        0.0
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ProxyBackend;

impl DragBackend for ProxyBackend {
    fn source(&self) -> EvalSource {
        EvalSource::Proxy
    }

    fn drag(&mut self, params: &HullParams, flow: &FlowConditions) -> Result<f64> {
        proxy_drag(params, flow)
    }
}

/// Wetted surface area of the hull, mm².
pub fn wetted_surface(p: &HullParams) -> Result<f64> {
    p.validate()?;
    let (a, d, n) = (p.a, p.d, p.n);
    // Nose in φ with x − a = −a·cos φ, so the bracket becomes sin²φ and the
    // tip slope singularity turns into an integrable power of sin φ.
    let nose = integrate(
        |phi| {
            let (s, c) = (libm::sin(phi), libm::cos(phi));
            let r = 0.5 * d * libm::pow(s, 2.0 / n);
            let dr = 0.5 * d * (2.0 / n) * libm::pow(s, 2.0 / n - 1.0) * c;
            r * libm::hypot(a * s, dr)
        },
        0.0,
        0.5 * PI,
        0.0,
        1e-12,
        2000,
    );
    let tail = integrate(
        |z| p.tail_radius_z(z) * libm::hypot(1.0, p.tail_slope_z(z)),
        0.0,
        p.c,
        0.0,
        1e-12,
        500,
    );
    let s = 2.0 * PI * (nose.value + tail.value) + PI * d * p.b;
    if !s.is_finite() {
        return Err(Error::NumericalFailure("wetted surface quadrature diverged".into()));
    }
    Ok(s)
}

/// Friction-line drag estimate, Newtons.
///
/// `½ρU²·S·C_f·(1+k)` with the ITTC line `C_f = 0.075/(log₁₀Re − 2)²` on hull
/// length and the form factor `k = 1.5(D/l)^1.5 + 7(D/l)³`.
pub fn proxy_drag(p: &HullParams, flow: &FlowConditions) -> Result<f64> {
    p.validate()?;
    flow.validate()?;
    let length_m = p.length() * 1e-3;
    let slenderness = p.d / p.length();
    let reynolds = flow.speed * length_m / flow.kinematic_viscosity;
    let log_re = libm::log10(reynolds);
    if log_re <= 2.0 {
        return Err(Error::invalid(format!("Reynolds number {reynolds:e} below the friction line's range")));
    }
    let cf = 0.075 / ((log_re - 2.0) * (log_re - 2.0));
    let k = 1.5 * libm::pow(slenderness, 1.5) + 7.0 * slenderness * slenderness * slenderness;
    let area_m2 = wetted_surface(p)? * 1e-6;
    Ok(0.5 * flow.fluid_density * flow.speed * flow.speed * area_m2 * cf * (1.0 + k))
}

/// Evaluates one design against the payload envelope.
///
/// Feasible designs go to the backend. The first design found infeasible is
/// also solved by the backend so the history holds a real drag value; every
/// later infeasible design is assigned the largest drag seen so far without
/// calling the backend.
pub fn evaluate(
    params: &HullParams,
    baseline: &BaselineGeometry,
    flow: &FlowConditions,
    history: &[EvalRecord],
    backend: &mut dyn DragBackend,
    clock: &dyn Clock,
    containment_samples: usize,
) -> Result<EvalRecord> {
    let margin = containment_margin(params, baseline, containment_samples);
    let feasible = margin <= 0.0;
    let started = clock.now();
    let (drag, source) = if !feasible && history.iter().any(EvalRecord::is_true_infeasible) {
        let worst = history.iter().map(|r| r.drag).fold(f64::NEG_INFINITY, f64::max);
        (worst, EvalSource::Heuristic)
    } else {
        let drag = backend.drag(params, flow).map_err(|e| match e {
            Error::Evaluation(msg) => Error::Evaluation(msg),
            other => Error::Evaluation(format!("{other}")),
        })?;
        if !drag.is_finite() {
            return Err(Error::Evaluation(format!("backend returned non-finite drag {drag}")));
        }
        (drag, backend.source())
    };
    Ok(EvalRecord { params: *params, drag, feasible, margin, source, wall_time: clock.now() - started })
}
