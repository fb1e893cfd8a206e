//! Run log file: the full state needed to resume a run.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use cbo_core::optimize::{RunLog, SCHEMA_VERSION};

use crate::config::BackendConfig;

pub const FORMAT: &str = "cbo-hull-runlog";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunLogFile {
    pub format: String,
    pub schema_version: u32,
    pub backend: BackendConfig,
    pub log: RunLog,
}

impl RunLogFile {
    pub fn new(backend: BackendConfig, log: RunLog) -> Self {
        RunLogFile { format: FORMAT.into(), schema_version: SCHEMA_VERSION, backend, log }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("run log serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: RunLogFile = serde_json::from_str(text).map_err(|e| {
            if e.is_eof() {
                anyhow::anyhow!("truncated run log (line {}, column {})", e.line(), e.column())
            } else {
                anyhow::anyhow!("invalid run log: {e}")
            }
        })?;
        if doc.format != FORMAT {
            bail!("format: expected \"{FORMAT}\", found {:?}", doc.format);
        }
        if doc.schema_version != SCHEMA_VERSION {
            bail!("schema_version: unsupported version {} (this build reads {SCHEMA_VERSION})", doc.schema_version);
        }
        doc.log.validate().map_err(|e| match e {
            cbo_core::Error::InvalidArgument(m) => anyhow::anyhow!("log.{m}"),
            other => anyhow::anyhow!("log: {other}"),
        })?;
        Ok(doc)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::from_json(&text).with_context(|| format!("in {}", path.display()))
    }

    /// Writes through a temporary file so a crash never leaves a partial log.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("json.tmp");
        {
            let mut f = fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
            f.write_all(self.to_json().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }
}
