//! Myring hull geometry, the packed-payload baseline envelope, the
//! containment constraint, and surface-of-revolution tessellation.
//!
//! All lengths are millimetres measured along the axis from the nose tip;
//! the tail angle is in degrees.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};

/// Default number of uniform axial stations for [`containment_margin`].
pub const DEFAULT_CONTAINMENT_SAMPLES: usize = 4096;

const TIP_STATIONS: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HullParams {
    /// Nose length.
    pub a: f64,
    /// Cylindrical body length.
    pub b: f64,
    /// Tail length.
    pub c: f64,
    /// Body diameter.
    pub d: f64,
    /// Nose shaping exponent.
    pub n: f64,
    /// Tail half-angle at the tip, degrees.
    pub theta_deg: f64,
}

impl HullParams {
    pub fn length(&self) -> f64 {
        self.a + self.b + self.c
    }

    /// Rejects shapes that are not closed, non-negative profiles.
    ///
    /// With `t = z/c` the tail is `D/2·(1−t)²(1+2t) + c·tanθ·t²(1−t)`, which
    /// stays non-negative on `[0, c]` exactly when `tanθ ≥ 0`.
    pub fn validate(&self) -> Result<()> {
        let named = [("a", self.a), ("b", self.b), ("c", self.c), ("d", self.d), ("n", self.n)];
        for (name, v) in named {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidGeometry(format!("{name} must be positive and finite, got {v}")));
            }
        }
        if !(self.theta_deg >= 0.0 && self.theta_deg < 90.0) {
            return Err(Error::InvalidGeometry(format!(
                "tail angle {}° gives a negative tail radius",
                self.theta_deg
            )));
        }
        Ok(())
    }

    fn tan_theta(&self) -> f64 {
        libm::tan(self.theta_deg.to_radians())
    }

    pub(crate) fn nose_radius_unchecked(&self, x: f64) -> f64 {
        let u = (x - self.a) / self.a;
        let bracket = (1.0 - u * u).max(0.0);
        0.5 * self.d * libm::pow(bracket, 1.0 / self.n)
    }

    /// Tail radius as a function of `z = x − a − b`.
    pub(crate) fn tail_radius_z(&self, z: f64) -> f64 {
        let (d, c, t) = (self.d, self.c, self.tan_theta());
        0.5 * d - (1.5 * d / (c * c) - t / c) * z * z + (d / (c * c * c) - t / (c * c)) * z * z * z
    }

    pub(crate) fn tail_slope_z(&self, z: f64) -> f64 {
        let (d, c, t) = (self.d, self.c, self.tan_theta());
        -2.0 * (1.5 * d / (c * c) - t / c) * z + 3.0 * (d / (c * c * c) - t / (c * c)) * z * z
    }

    /// Nose radius `½D[1 − ((x−a)/a)²]^(1/n)` on `[0, a]`.
    pub fn nose_radius(&self, x: f64) -> Result<f64> {
        check_domain(x, 0.0, self.a)?;
        Ok(self.nose_radius_unchecked(x))
    }

    /// Cubic tail radius on `[a+b, a+b+c]`. Not clamped: negative values
    /// signal an invalid shape.
    pub fn tail_radius(&self, x: f64) -> Result<f64> {
        check_domain(x, self.a + self.b, self.length())?;
        Ok(self.tail_radius_z(x - self.a - self.b))
    }

    /// Piecewise nose, cylinder, tail radius on `[0, l]`.
    pub fn radius(&self, x: f64) -> Result<f64> {
        check_domain(x, 0.0, self.length())?;
        Ok(self.radius_unchecked(x))
    }

    pub(crate) fn radius_unchecked(&self, x: f64) -> f64 {
        if x <= self.a {
            self.nose_radius_unchecked(x)
        } else if x <= self.a + self.b {
            0.5 * self.d
        } else {
            self.tail_radius_z(x - self.a - self.b)
        }
    }
}

fn check_domain(x: f64, lo: f64, hi: f64) -> Result<()> {
    if x >= lo && x <= hi {
        Ok(())
    } else {
        Err(Error::Domain { x, lo, hi })
    }
}

/// Cone–cylinder–cone envelope of the packed components.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BaselineGeometry {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Default for BaselineGeometry {
    /// The reference packed layout: 555 / 2664 / 512 mm sections, 1026 mm diameter.
    fn default() -> Self {
        BaselineGeometry { a: 555.0, b: 2664.0, c: 512.0, d: 1026.0 }
    }
}

impl BaselineGeometry {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let bg = BaselineGeometry { a, b, c, d };
        bg.validate()?;
        Ok(bg)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("a_B", self.a), ("b_B", self.b), ("c_B", self.c), ("D_B", self.d)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::invalid(format!("baseline {name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    pub fn length(&self) -> f64 {
        self.a + self.b + self.c
    }

    /// Every dimension multiplied by `factor` (unit conversion).
    pub fn scaled(&self, factor: f64) -> Self {
        BaselineGeometry { a: self.a * factor, b: self.b * factor, c: self.c * factor, d: self.d * factor }
    }

    pub fn radius(&self, x: f64) -> Result<f64> {
        check_domain(x, 0.0, self.length())?;
        Ok(self.radius_unchecked(x))
    }

    fn radius_unchecked(&self, x: f64) -> f64 {
        let half = 0.5 * self.d;
        if x <= self.a {
            half * x / self.a
        } else if x <= self.a + self.b {
            half
        } else {
            (half * (self.length() - x) / self.c).max(0.0)
        }
    }
}

/// Worst radial interference of the baseline envelope with the hull.
///
/// The envelope is co-axial with the hull and placed so both cylinders start
/// together: envelope position 0 sits at hull position `a − a_B`. Returns
/// `max(baseline_r − hull_r)` over `samples` uniform stations, the joints,
/// and stations clustered toward both envelope tips; `≤ 0` means the payload
/// fits. Shapes that are invalid or do not span the envelope's axial extent
/// get the sentinel `+D_B/2`.
pub fn containment_margin(p: &HullParams, bg: &BaselineGeometry, samples: usize) -> f64 {
    let sentinel = 0.5 * bg.d;
    if p.validate().is_err() || bg.validate().is_err() {
        return sentinel;
    }
    let offset = p.a - bg.a;
    let end = offset + bg.length();
    let l = p.length();
    let slack = 1e-12 * l;
    if offset < -slack || end > l + slack {
        return sentinel;
    }
    let offset = offset.max(0.0);
    let end = end.min(l);
    let gap = |xh: f64| {
        let xb = (xh - offset).clamp(0.0, bg.length());
        bg.radius_unchecked(xb) - p.radius_unchecked(xh)
    };
    let samples = samples.max(64);
    let mut worst = f64::NEG_INFINITY;
    for i in 0..=samples {
        let xh = offset + (end - offset) * (i as f64 / samples as f64);
        worst = worst.max(gap(xh));
    }
    let joints = [offset + bg.a, offset + bg.a + bg.b, p.a, p.a + p.b];
    for xh in joints {
        if xh >= offset && xh <= end {
            worst = worst.max(gap(xh));
        }
    }
    // Geometric stations down to 1e-6 of each cone length: a blunt-exponent
    // nose sharing its tip with the envelope can intrude below the uniform
    // spacing.
    for j in 0..TIP_STATIONS {
        let frac = libm::pow(10.0, -6.0 * j as f64 / (TIP_STATIONS - 1) as f64);
        worst = worst.max(gap(offset + bg.a * frac));
        worst = worst.max(gap(end - bg.c * frac));
    }
    worst
}

/// Axial stations of a closed hull profile.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    /// `(x_mm, r_mm)` pairs, strictly increasing in `x`.
    pub stations: Vec<(f64, f64)>,
}

/// Cosine-clustered axial positions: denser toward both tips.
fn clustered_stations(length: f64, segments: usize) -> impl Iterator<Item = f64> {
    (0..=segments).map(move |i| {
        if i == segments {
            length
        } else {
            0.5 * length * (1.0 - libm::cos(PI * i as f64 / segments as f64))
        }
    })
}

/// Samples the hull at `segments + 1` stations from tip to tail.
pub fn profile(p: &HullParams, segments: usize) -> Result<Profile> {
    p.validate()?;
    if segments < 2 {
        return Err(Error::invalid("a profile needs at least two segments"));
    }
    let l = p.length();
    let stations = clustered_stations(l, segments)
        .enumerate()
        .map(|(i, x)| {
            let r = if i == 0 || i == segments { 0.0 } else { p.radius_unchecked(x).max(0.0) };
            (x, r)
        })
        .collect();
    Ok(Profile { stations })
}

/// Indexed triangle mesh, counter-clockwise when seen from outside.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    pub triangles: Vec<[usize; 3]>,
}

impl Mesh {
    pub fn facet(&self, t: usize) -> [[f64; 3]; 3] {
        let [i, j, k] = self.triangles[t];
        [self.vertices[i], self.vertices[j], self.vertices[k]]
    }

    /// Unit normal from the right-hand rule; zero for degenerate facets.
    pub fn facet_normal(&self, t: usize) -> [f64; 3] {
        let [a, b, c] = self.facet(t);
        let n = cross(sub(b, a), sub(c, a));
        let len = libm::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        if len > 0.0 {
            [n[0] / len, n[1] / len, n[2] / len]
        } else {
            [0.0; 3]
        }
    }

    /// Signed enclosed volume by the divergence theorem.
    pub fn volume(&self) -> f64 {
        (0..self.triangles.len())
            .map(|t| {
                let [a, b, c] = self.facet(t);
                let bc = cross(b, c);
                a[0] * bc[0] + a[1] * bc[1] + a[2] * bc[2]
            })
            .sum::<f64>()
            / 6.0
    }

    /// Every undirected edge is shared by exactly two triangles, traversed
    /// once in each direction.
    pub fn is_watertight(&self) -> bool {
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(self.triangles.len() * 3);
        for t in &self.triangles {
            for k in 0..3 {
                edges.push((t[k], t[(k + 1) % 3]));
            }
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        edges.iter().all(|&(u, v)| edges.binary_search(&(v, u)).is_ok())
    }
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Revolves the profile about the x axis into a closed triangle mesh.
///
/// `axial_steps` segments along the axis and `angular_steps` around it give
/// `2·angular_steps·(axial_steps − 1)` triangles, with a fan at each tip.
pub fn tessellate(p: &HullParams, axial_steps: usize, angular_steps: usize) -> Result<Mesh> {
    p.validate()?;
    if axial_steps < 16 || angular_steps < 8 {
        return Err(Error::invalid(format!(
            "need axial_steps >= 16 and angular_steps >= 8, got {axial_steps} and {angular_steps}"
        )));
    }
    let prof = profile(p, axial_steps)?;
    let m = angular_steps;
    let rings = axial_steps - 1;
    let mut vertices = Vec::with_capacity(rings * m + 2);
    vertices.push([0.0, 0.0, 0.0]);
    for &(x, r) in &prof.stations[1..axial_steps] {
        for j in 0..m {
            let phi = 2.0 * PI * j as f64 / m as f64;
            vertices.push([x, r * libm::cos(phi), r * libm::sin(phi)]);
        }
    }
    let tail = vertices.len();
    vertices.push([p.length(), 0.0, 0.0]);

    let ring = |i: usize, j: usize| 1 + i * m + (j % m);
    let mut triangles = Vec::with_capacity(2 * m * rings);
    for j in 0..m {
        triangles.push([0, ring(0, j + 1), ring(0, j)]);
    }
    for i in 0..rings - 1 {
        for j in 0..m {
            let (a, b, c, d) = (ring(i, j), ring(i, j + 1), ring(i + 1, j + 1), ring(i + 1, j));
            triangles.push([a, b, c]);
            triangles.push([a, c, d]);
        }
    }
    for j in 0..m {
        triangles.push([ring(rings - 1, j), ring(rings - 1, j + 1), tail]);
    }
    Ok(Mesh { vertices, triangles })
}
