//! Run configuration file (TOML).
//!
//! Every section is optional. Values resolve as command-line flags, then the
//! file, then the defaults of the chosen preset.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use cbo_core::acquisition::AcquisitionConfig;
use cbo_core::evaluator::FlowConditions;
use cbo_core::gp::FitConfig;
use cbo_core::hull::{BaselineGeometry, DEFAULT_CONTAINMENT_SAMPLES};
use cbo_core::optimize::{ExperimentPreset, HullParam, ParamBound, RunConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum PresetName {
    Exp1,
    Exp2,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    Mm,
    Cm,
}

impl Units {
    pub fn to_mm(self) -> f64 {
        match self {
            Units::Mm => 1.0,
            Units::Cm => 10.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BackendKind {
    Proxy,
    External,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BackendConfig {
    pub kind: BackendKind,
    /// Shell command for the external evaluator.
    pub command: Option<String>,
    pub timeout_s: f64,
}

impl Default for BackendConfig {
    fn default() -> Self {
        BackendConfig { kind: BackendKind::Proxy, command: None, timeout_s: 3600.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BaselineSection {
    /// Units of the four lengths below.
    pub units: Units,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Default for BaselineSection {
    fn default() -> Self {
        let bg = BaselineGeometry::default();
        BaselineSection { units: Units::Mm, a: bg.a, b: bg.b, c: bg.c, d: bg.d }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FitSection {
    pub restarts: usize,
    pub lengthscale_bounds: [f64; 2],
    pub signal_variance_bounds: [f64; 2],
    pub noise_variance_bounds: [f64; 2],
}

impl Default for FitSection {
    fn default() -> Self {
        let f = FitConfig::default();
        FitSection {
            restarts: f.restarts,
            lengthscale_bounds: f.lengthscale_bounds.into(),
            signal_variance_bounds: f.signal_variance_bounds.into(),
            noise_variance_bounds: f.noise_variance_bounds.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AcquisitionSection {
    pub mc_samples: usize,
    pub refine_starts: usize,
    pub fd_step: f64,
    pub max_refine_iters: usize,
    pub local_fraction: f64,
    pub local_scale: f64,
}

impl Default for AcquisitionSection {
    fn default() -> Self {
        let a = AcquisitionConfig::default();
        AcquisitionSection {
            mc_samples: a.mc_samples,
            refine_starts: a.refine_starts,
            fd_step: a.fd_step,
            max_refine_iters: a.max_refine_iters,
            local_fraction: a.local_fraction,
            local_scale: a.local_scale,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FlowSection {
    pub speed: f64,
    pub fluid_density: f64,
    pub kinematic_viscosity: f64,
}

impl Default for FlowSection {
    fn default() -> Self {
        let f = FlowConditions::default();
        FlowSection { speed: f.speed, fluid_density: f.fluid_density, kinematic_viscosity: f.kinematic_viscosity }
    }
}

/// The configuration document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub preset: PresetName,
    pub budget: usize,
    pub init_samples: usize,
    pub seed: u64,
    pub containment_samples: usize,
    /// Free parameters `name = [min, max]` in mm / degrees. Extends or
    /// overrides the preset's ranges.
    pub bounds: BTreeMap<String, [f64; 2]>,
    /// Values for parameters that are not free. Defaults come from the baseline.
    pub fixed: BTreeMap<String, f64>,
    pub baseline: BaselineSection,
    pub flow: FlowSection,
    pub acquisition: AcquisitionSection,
    pub fit: FitSection,
    pub backend: BackendConfig,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            preset: PresetName::Exp1,
            budget: 50,
            init_samples: 8,
            seed: 0,
            containment_samples: DEFAULT_CONTAINMENT_SAMPLES,
            bounds: BTreeMap::new(),
            fixed: BTreeMap::new(),
            baseline: BaselineSection::default(),
            flow: FlowSection::default(),
            acquisition: AcquisitionSection::default(),
            fit: FitSection::default(),
            backend: BackendConfig::default(),
        }
    }
}

/// Command-line values that take precedence over the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub preset: Option<PresetName>,
    pub backend: Option<BackendKind>,
    pub command: Option<String>,
    pub budget: Option<usize>,
    pub init_samples: Option<usize>,
    pub seed: Option<u64>,
    pub units: Option<Units>,
}

fn param_key(name: &str, section: &str) -> Result<HullParam> {
    let canonical = if name == "theta_deg" { "theta" } else { name };
    HullParam::from_name(canonical)
        .with_context(|| format!("{section}.{name}: unknown parameter (expected a, b, c, d, n or theta)"))
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| anyhow::anyhow!("invalid config: {}", e.to_string().trim_end()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::from_toml(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn apply(&mut self, o: &Overrides) {
        if let Some(p) = o.preset {
            self.preset = p;
        }
        if let Some(k) = o.backend {
            self.backend.kind = k;
        }
        if let Some(c) = &o.command {
            self.backend.command = Some(c.clone());
        }
        if let Some(b) = o.budget {
            self.budget = b;
        }
        if let Some(i) = o.init_samples {
            self.init_samples = i;
        }
        if let Some(s) = o.seed {
            self.seed = s;
        }
        if let Some(u) = o.units {
            self.baseline.units = u;
        }
    }

    pub fn baseline(&self) -> Result<BaselineGeometry> {
        let s = &self.baseline;
        BaselineGeometry::new(s.a, s.b, s.c, s.d)
            .map(|bg| bg.scaled(s.units.to_mm()))
            .map_err(|e| anyhow::anyhow!("baseline: {e}"))
    }

    /// Builds and validates the run configuration.
    pub fn resolve(&self) -> Result<RunConfig> {
        let baseline = self.baseline()?;
        let mut bounds: Vec<ParamBound> = match self.preset {
            PresetName::Exp1 => ExperimentPreset::Exp1.bounds(&baseline),
            PresetName::Exp2 => ExperimentPreset::Exp2.bounds(&baseline),
            PresetName::Custom => Vec::new(),
        };
        for (name, [min, max]) in &self.bounds {
            let param = param_key(name, "bounds")?;
            if !(min.is_finite() && max.is_finite() && min < max) {
                bail!("bounds.{name}: need min < max, got [{min}, {max}]");
            }
            match bounds.iter_mut().find(|b| b.param == param) {
                Some(b) => (b.min, b.max) = (*min, *max),
                None => bounds.push(ParamBound { param, min: *min, max: *max }),
            }
        }
        if bounds.is_empty() {
            bail!("bounds: a custom preset needs at least one free parameter");
        }
        bounds.sort_by_key(|b| b.param);

        let mut fixed = ExperimentPreset::Exp1.fixed(&baseline);
        for (name, v) in &self.fixed {
            let param = param_key(name, "fixed")?;
            if !v.is_finite() {
                bail!("fixed.{name}: must be finite");
            }
            param.set(&mut fixed, *v);
        }

        let fit_defaults = FitConfig::default();
        let cfg = RunConfig {
            bounds,
            fixed,
            budget: self.budget,
            init_samples: self.init_samples,
            seed: self.seed,
            acquisition: AcquisitionConfig {
                mc_samples: self.acquisition.mc_samples,
                refine_starts: self.acquisition.refine_starts,
                fd_step: self.acquisition.fd_step,
                max_refine_iters: self.acquisition.max_refine_iters,
                local_fraction: self.acquisition.local_fraction,
                local_scale: self.acquisition.local_scale,
                seed: 0,
            },
            fit: FitConfig {
                restarts: self.fit.restarts,
                lengthscale_bounds: self.fit.lengthscale_bounds.into(),
                signal_variance_bounds: self.fit.signal_variance_bounds.into(),
                noise_variance_bounds: self.fit.noise_variance_bounds.into(),
                ..fit_defaults
            },
            flow: FlowConditions {
                speed: self.flow.speed,
                fluid_density: self.flow.fluid_density,
                kinematic_viscosity: self.flow.kinematic_viscosity,
            },
            baseline,
            containment_samples: self.containment_samples,
        };
        cfg.validate().map_err(|e| anyhow::anyhow!("{e}"))?;
        if self.fit.restarts == 0 {
            bail!("fit.restarts: must be >= 1");
        }
        if self.backend.kind == BackendKind::External && self.backend.command.as_deref().is_none_or(str::is_empty) {
            bail!("backend.command: required for the external backend");
        }
        if !(self.backend.timeout_s > 0.0 && self.backend.timeout_s.is_finite()) {
            bail!("backend.timeout_s: must be positive");
        }
        Ok(cfg)
    }

    /// The same configuration with every derived value written out: baseline
    /// in millimetres, all free ranges and all fixed values explicit.
    pub fn materialized(&self) -> Result<Config> {
        let run = self.resolve()?;
        let mut out = self.clone();
        let bg = run.baseline;
        out.baseline = BaselineSection { units: Units::Mm, a: bg.a, b: bg.b, c: bg.c, d: bg.d };
        out.bounds = run.bounds.iter().map(|b| (b.param.name().to_string(), [b.min, b.max])).collect();
        out.fixed = HullParam::ALL
            .iter()
            .filter(|p| !run.bounds.iter().any(|b| b.param == **p))
            .map(|p| (p.name().to_string(), p.get(&run.fixed)))
            .collect();
        Ok(out)
    }
}
