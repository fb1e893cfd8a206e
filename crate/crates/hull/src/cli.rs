//! Command-line driver.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cbo_core::benchmark::{
    iterations_to_within, minimize_constrained, random_search, synthetic2d, BlackBoxRun, SYNTHETIC2D_BOUNDS,
};
use cbo_core::bo::BoSettings;
use cbo_core::evaluator::{evaluate, proxy_drag, DragBackend, NoClock, ProxyBackend};
use cbo_core::hull::{containment_margin, profile, tessellate, HullParams};
use cbo_core::optimize::{resume, run_optimization, RunAborted, RunConfig, RunLog};

use crate::clock::SystemClock;
use crate::config::{BackendConfig, BackendKind, Config, Overrides, PresetName, Units};
use crate::export::{write_profile, write_summary, write_trace, SummaryRow};
use crate::external::ExternalBackend;
use crate::runlog::RunLogFile;
use crate::stl;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NO_FEASIBLE: i32 = 2;

pub const RUNLOG_FILE: &str = "runlog.json";
pub const TRACE_FILE: &str = "trace.csv";
pub const PROFILE_FILE: &str = "best_profile.csv";
pub const STL_FILE: &str = "best.stl";
pub const CONFIG_FILE: &str = "config_resolved.toml";
pub const SUMMARY_FILE: &str = "summary.csv";

const PROFILE_SEGMENTS: usize = 400;
const STL_AXIAL: usize = 256;
const STL_ANGULAR: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "cbo-hull", version, about = "Constrained Bayesian optimization of Myring hull shapes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run an optimization to its budget.
    Optimize(OptimizeArgs),
    /// Evaluate a single design.
    Evaluate(EvaluateArgs),
    /// Compare the optimizer with random search over several seeds.
    Benchmark(BenchmarkArgs),
    /// Continue an interrupted run from its output directory.
    Resume(ResumeArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    /// TOML configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    preset: Option<PresetName>,
    #[arg(long, value_enum)]
    backend: Option<BackendKind>,
    /// Shell command for the external backend.
    #[arg(long = "cmd")]
    command: Option<String>,
    /// Total evaluations, initial design included.
    #[arg(long)]
    budget: Option<usize>,
    /// Size of the initial Latin hypercube design.
    #[arg(long = "init")]
    init_samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Units of the baseline lengths in the configuration.
    #[arg(long, value_enum)]
    units: Option<Units>,
}

impl RunArgs {
    fn config(&self) -> Result<Config> {
        let mut cfg = match &self.config {
            Some(path) => Config::load(path)?,
            None => Config::default(),
        };
        cfg.apply(&Overrides {
            preset: self.preset,
            backend: self.backend,
            command: self.command.clone(),
            budget: self.budget,
            init_samples: self.init_samples,
            seed: self.seed,
            units: self.units,
        });
        Ok(cfg)
    }
}

#[derive(Debug, Args)]
struct OutArgs {
    /// Output directory. Defaults to a per-run directory under $CBO_HULL_OUT
    /// (or the current directory).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "CBO_HULL_OUT", hide_env_values = true, hide = true)]
    out_root: Option<PathBuf>,
}

impl OutArgs {
    fn dir(&self, default_name: &str) -> PathBuf {
        match (&self.out, &self.out_root) {
            (Some(dir), _) => dir.clone(),
            (None, Some(root)) => root.join(default_name),
            (None, None) => PathBuf::from(default_name),
        }
    }
}

#[derive(Debug, Args)]
struct OptimizeArgs {
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    out: OutArgs,
    /// Print the fully resolved configuration as TOML and exit.
    #[arg(long)]
    dump_config: bool,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    /// Nose length, mm.
    #[arg(long)]
    a: f64,
    /// Mid-body length, mm.
    #[arg(long)]
    b: f64,
    /// Tail length, mm.
    #[arg(long)]
    c: f64,
    /// Maximum diameter, mm.
    #[arg(long)]
    d: f64,
    /// Nose shape exponent.
    #[arg(long)]
    n: f64,
    /// Tail half-angle, degrees.
    #[arg(long)]
    theta: f64,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Synthetic2d,
    ProxyHull,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Synthetic2d => "synthetic2d",
            Suite::ProxyHull => "proxy-hull",
        }
    }
}

#[derive(Debug, Args)]
struct BenchmarkArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Number of seeds, counting up from the configured seed.
    #[arg(long, default_value_t = 20)]
    seeds: u64,
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args)]
struct ResumeArgs {
    /// Output directory of the run to continue.
    #[arg(long)]
    out: PathBuf,
    /// Replacement command for an external backend.
    #[arg(long = "cmd")]
    command: Option<String>,
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
        }
    };
    let result = match cli.command {
        Command::Optimize(a) => cmd_optimize(a),
        Command::Evaluate(a) => cmd_evaluate(a),
        Command::Benchmark(a) => cmd_benchmark(a),
        Command::Resume(a) => cmd_resume(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn make_backend(cfg: &BackendConfig) -> Result<Box<dyn DragBackend>> {
    Ok(match cfg.kind {
        BackendKind::Proxy => Box::new(ProxyBackend),
        BackendKind::External => {
            let command = cfg.command.clone().filter(|c| !c.is_empty());
            let command = command.context("backend.command: required for the external backend")?;
            Box::new(ExternalBackend { command, timeout: Duration::from_secs_f64(cfg.timeout_s) })
        }
    })
}

fn preset_name(p: PresetName) -> &'static str {
    match p {
        PresetName::Exp1 => "exp1",
        PresetName::Exp2 => "exp2",
        PresetName::Custom => "custom",
    }
}

fn cmd_optimize(args: OptimizeArgs) -> Result<i32> {
    let cfg = args.run.config()?;
    let resolved = cfg.materialized()?;
    if args.dump_config {
        print!("{}", resolved.to_toml());
        return Ok(EXIT_OK);
    }
    let run_cfg = cfg.resolve()?;
    let dir = args.out.dir(&format!("run-{}-seed{}", preset_name(cfg.preset), cfg.seed));
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    fs::write(dir.join(CONFIG_FILE), resolved.to_toml()).context("writing the resolved config")?;
    let mut backend = make_backend(&cfg.backend)?;
    drive(&dir, &cfg.backend, backend.as_mut(), |backend, observer| {
        run_optimization(run_cfg, backend, &SystemClock, observer)
    })
}

fn cmd_resume(args: ResumeArgs) -> Result<i32> {
    let path = args.out.join(RUNLOG_FILE);
    let mut doc = RunLogFile::load(&path)?;
    if let Some(c) = args.command {
        doc.backend.command = Some(c);
    }
    let mut backend = make_backend(&doc.backend)?;
    let log = doc.log;
    drive(&args.out, &doc.backend, backend.as_mut(), |backend, observer| resume(log, backend, &SystemClock, observer))
}

/// Runs `f`, persisting the log after every evaluation, then writes the
/// artifacts and reports.
fn drive<F>(dir: &Path, backend_cfg: &BackendConfig, backend: &mut dyn DragBackend, f: F) -> Result<i32>
where
    F: FnOnce(&mut dyn DragBackend, &mut dyn FnMut(&RunLog)) -> std::result::Result<RunLog, RunAborted>,
{
    let runlog_path = dir.join(RUNLOG_FILE);
    let mut save_error: Option<anyhow::Error> = None;
    let mut observer = |log: &RunLog| {
        if save_error.is_none() {
            if let Err(e) = RunLogFile::new(backend_cfg.clone(), log.clone()).save(&runlog_path) {
                save_error = Some(e);
            }
        }
    };
    let outcome = f(backend, &mut observer);
    if let Some(e) = save_error {
        return Err(e.context("persisting the run log"));
    }
    let log = match outcome {
        Ok(log) => log,
        Err(aborted) => {
            RunLogFile::new(backend_cfg.clone(), (*aborted.log).clone()).save(&runlog_path)?;
            write_trace(fs::File::create(dir.join(TRACE_FILE))?, &aborted.log)?;
            bail!("{aborted}; partial run saved in {}", dir.display());
        }
    };
    RunLogFile::new(backend_cfg.clone(), log.clone()).save(&runlog_path)?;
    write_trace(fs::File::create(dir.join(TRACE_FILE))?, &log)?;

    let mut out = std::io::stdout().lock();
    let Some((idx, best)) = log.best() else {
        writeln!(out, "no feasible design found in {} evaluations", log.records.len())?;
        writeln!(out, "output: {}", dir.display())?;
        return Ok(EXIT_NO_FEASIBLE);
    };
    write_profile(fs::File::create(dir.join(PROFILE_FILE))?, &profile(&best.params, PROFILE_SEGMENTS)?)?;
    let mesh = tessellate(&best.params, STL_AXIAL, STL_ANGULAR)?;
    stl::write_binary(std::io::BufWriter::new(fs::File::create(dir.join(STL_FILE))?), &mesh)?;
    let p = &best.params;
    writeln!(out, "best design (evaluation {} of {}):", idx + 1, log.records.len())?;
    writeln!(out, "  a_mm={} b_mm={} c_mm={} d_mm={} n={} theta_deg={}", p.a, p.b, p.c, p.d, p.n, p.theta_deg)?;
    writeln!(out, "  drag_n={} margin_mm={}", best.drag, best.margin)?;
    writeln!(out, "output: {}", dir.display())?;
    Ok(EXIT_OK)
}

fn cmd_evaluate(args: EvaluateArgs) -> Result<i32> {
    let cfg = args.run.config()?;
    let run_cfg = cfg.resolve()?;
    let p = HullParams { a: args.a, b: args.b, c: args.c, d: args.d, n: args.n, theta_deg: args.theta };
    p.validate()?;
    let mut backend = make_backend(&cfg.backend)?;
    let rec = evaluate(
        &p,
        &run_cfg.baseline,
        &run_cfg.flow,
        &[],
        backend.as_mut(),
        &SystemClock,
        run_cfg.containment_samples,
    )?;
    println!("margin_mm={}", rec.margin);
    println!("feasible={}", rec.feasible);
    println!("drag_n={}", rec.drag);
    println!("source={}", rec.source.as_str());
    Ok(EXIT_OK)
}

fn summary_row(suite: Suite, method: &str, seed: u64, trace: &[Option<f64>]) -> SummaryRow {
    SummaryRow {
        suite: suite.name().into(),
        method: method.into(),
        seed,
        best_value: trace.last().copied().flatten(),
        iters_to_2pct: iterations_to_within(trace, 0.02),
    }
}

fn median(values: impl IntoIterator<Item = Option<f64>>) -> Option<f64> {
    let mut v: Vec<f64> = values.into_iter().map(|v| v.unwrap_or(f64::INFINITY)).collect();
    if v.is_empty() {
        return None;
    }
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    Some(if v.len() % 2 == 1 { v[m] } else { 0.5 * (v[m - 1] + v[m]) })
}

fn hull_random_search(cfg: &RunConfig, seed: u64) -> Result<BlackBoxRun> {
    let d = cfg.dim();
    let problem = |u: &[f64]| {
        let p = cfg.denormalize(u);
        let margin = containment_margin(&p, &cfg.baseline, cfg.containment_samples);
        match proxy_drag(&p, &cfg.flow) {
            Ok(drag) => (drag, margin),
            Err(_) => (f64::INFINITY, f64::INFINITY),
        }
    };
    Ok(random_search(problem, &vec![0.0; d], &vec![1.0; d], cfg.budget, seed)?)
}

fn cmd_benchmark(args: BenchmarkArgs) -> Result<i32> {
    let cfg = args.run.config()?;
    if args.seeds == 0 {
        bail!("--seeds: must be at least 1");
    }
    if cfg.backend.kind != BackendKind::Proxy {
        bail!("backend: benchmarks run on the proxy backend only");
    }
    let base = cfg.resolve()?;
    let settings = BoSettings { fit: base.fit.clone(), acquisition: base.acquisition.clone() };
    let first = cfg.seed;
    let mut rows = Vec::new();
    for seed in first..first + args.seeds {
        let (bo, rs) = match args.suite {
            Suite::Synthetic2d => {
                let (lo, hi) = SYNTHETIC2D_BOUNDS;
                let bo = minimize_constrained(synthetic2d, &lo, &hi, base.budget, base.init_samples, seed, &settings)?;
                let rs = random_search(synthetic2d, &lo, &hi, base.budget, seed)?;
                (bo.best_trace, rs.best_trace)
            }
            Suite::ProxyHull => {
                let run_cfg = RunConfig { seed, ..base.clone() };
                let log = run_optimization(run_cfg.clone(), &mut ProxyBackend, &NoClock, &mut |_| {})
                    .map_err(|e| anyhow::anyhow!("{e}"))?;
                (log.best_trace, hull_random_search(&run_cfg, seed)?.best_trace)
            }
        };
        rows.push(summary_row(args.suite, "bo", seed, &bo));
        rows.push(summary_row(args.suite, "random", seed, &rs));
    }
    let dir = args.out.dir(&format!("benchmark-{}", args.suite.name()));
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    write_summary(fs::File::create(dir.join(SUMMARY_FILE))?, &rows)?;
    let med = |m: &str| median(rows.iter().filter(|r| r.method == m).map(|r| r.best_value));
    let fmt = |v: Option<f64>| v.map_or("none".to_string(), |v| v.to_string());
    println!("suite={} seeds={}", args.suite.name(), args.seeds);
    println!("median_best bo={} random={}", fmt(med("bo")), fmt(med("random")));
    println!("output: {}", dir.display());
    Ok(EXIT_OK)
}
