//! External evaluator protocol.
//!
//! The command runs under `sh -c`. It receives one JSON request on stdin:
//!
//! ```json
//! {"a_mm":555.0,"b_mm":2664.0,"c_mm":512.0,"d_mm":1026.0,"n":1.0,
//!  "theta_deg":20.0,"speed_ms":2.0,"density":998.2,"nu":1.004e-6}
//! ```
//!
//! and must exit 0 after printing `{"drag_newtons": <number>}` on stdout.
//! Other response keys are ignored.

use std::io::{Read, Write};
use std::process::{Command, Stdio};
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use cbo_core::evaluator::{DragBackend, EvalSource, FlowConditions};
use cbo_core::hull::HullParams;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Request {
    pub a_mm: f64,
    pub b_mm: f64,
    pub c_mm: f64,
    pub d_mm: f64,
    pub n: f64,
    pub theta_deg: f64,
    pub speed_ms: f64,
    pub density: f64,
    pub nu: f64,
}

impl Request {
    pub fn new(p: &HullParams, flow: &FlowConditions) -> Self {
        Request {
            a_mm: p.a,
            b_mm: p.b,
            c_mm: p.c,
            d_mm: p.d,
            n: p.n,
            theta_deg: p.theta_deg,
            speed_ms: flow.speed,
            density: flow.fluid_density,
            nu: flow.kinematic_viscosity,
        }
    }

    pub fn params(&self) -> HullParams {
        HullParams { a: self.a_mm, b: self.b_mm, c: self.c_mm, d: self.d_mm, n: self.n, theta_deg: self.theta_deg }
    }

    pub fn flow(&self) -> FlowConditions {
        FlowConditions { speed: self.speed_ms, fluid_density: self.density, kinematic_viscosity: self.nu }
    }
}

#[derive(Debug, Deserialize)]
struct Response {
    drag_newtons: f64,
}

#[derive(Debug, Error)]
pub enum ExternalError {
    #[error("could not start `{command}`: {source}")]
    Spawn { command: String, source: std::io::Error },
    #[error("`{command}` timed out after {seconds} s; stderr: {stderr}")]
    Timeout { command: String, seconds: f64, stderr: String },
    #[error("`{command}` exited with {code}; stderr: {stderr}")]
    Exit { command: String, code: String, stderr: String },
    #[error("`{command}` returned a malformed response ({reason}); stdout: {stdout:?}; stderr: {stderr}")]
    Malformed { command: String, reason: String, stdout: String, stderr: String },
}

fn drain<R: Read + Send + 'static>(r: Option<R>) -> thread::JoinHandle<String> {
    thread::spawn(move || {
        let mut buf = Vec::new();
        if let Some(mut r) = r {
            let _ = r.read_to_end(&mut buf);
        }
        String::from_utf8_lossy(&buf).into_owned()
    })
}

fn kill_tree(child: &mut std::process::Child) {
    #[cfg(unix)]
    {
        let _ = Command::new("kill")
            .args(["-KILL", "--", &format!("-{}", child.id())])
            .stderr(Stdio::null())
            .status();
    }
    let _ = child.kill();
    let _ = child.wait();
}

/// Runs one evaluation through `command`.
pub fn external_evaluate(
    p: &HullParams,
    flow: &FlowConditions,
    command: &str,
    timeout: Duration,
) -> Result<f64, ExternalError> {
    let mut cmd = Command::new("sh");
    cmd.arg("-c").arg(command).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    #[cfg(unix)]
    {
        use std::os::unix::process::CommandExt;
        // own process group so a timeout also reaches grandchildren
        cmd.process_group(0);
    }
    let mut child = cmd
        .spawn()
        .map_err(|source| ExternalError::Spawn { command: command.into(), source })?;
    let stdout = drain(child.stdout.take());
    let stderr = drain(child.stderr.take());
    if let Some(mut stdin) = child.stdin.take() {
        let body = serde_json::to_string(&Request::new(p, flow)).expect("request serializes");
        // a child that never reads its input is not an error by itself
        let _ = stdin.write_all(body.as_bytes()).and_then(|_| stdin.write_all(b"\n"));
    }

    let started = Instant::now();
    let status = loop {
        match child.try_wait() {
            Ok(Some(status)) => break status,
            Ok(None) if started.elapsed() >= timeout => {
                kill_tree(&mut child);
                return Err(ExternalError::Timeout {
                    command: command.into(),
                    seconds: timeout.as_secs_f64(),
                    stderr: stderr.join().unwrap_or_default(),
                });
            }
            Ok(None) => thread::sleep(Duration::from_millis(5)),
            Err(source) => return Err(ExternalError::Spawn { command: command.into(), source }),
        }
    };
    let out = stdout.join().unwrap_or_default();
    let err = stderr.join().unwrap_or_default();
    if !status.success() {
        let code = status.code().map_or_else(|| "a signal".to_string(), |c| format!("status {c}"));
        return Err(ExternalError::Exit { command: command.into(), code, stderr: err });
    }
    let malformed = |reason: String| ExternalError::Malformed {
        command: command.into(),
        reason,
        stdout: out.clone(),
        stderr: err.clone(),
    };
    let resp: Response = serde_json::from_str(out.trim()).map_err(|e| malformed(e.to_string()))?;
    if !resp.drag_newtons.is_finite() {
        return Err(malformed("drag_newtons is not finite".into()));
    }
    Ok(resp.drag_newtons)
}

/// [`DragBackend`] that shells out to an external solver.
#[derive(Debug, Clone)]
pub struct ExternalBackend {
    pub command: String,
    pub timeout: Duration,
}

impl DragBackend for ExternalBackend {
    fn source(&self) -> EvalSource {
        EvalSource::External
    }

    fn drag(&mut self, params: &HullParams, flow: &FlowConditions) -> cbo_core::Result<f64> {
        external_evaluate(params, flow, &self.command, self.timeout)
            .map_err(|e| cbo_core::Error::Evaluation(e.to_string()))
    }
}
