//! Host side of the hull optimizer: configuration files, the external
//! evaluator process protocol, file formats (run log, trace and profile
//! CSV, binary STL) and the command-line driver.

pub mod cli;
pub mod clock;
pub mod config;
pub mod export;
pub mod external;
pub mod runlog;
pub mod stl;

pub use config::{BackendConfig, BackendKind, Config};
pub use external::{external_evaluate, ExternalBackend, ExternalError};
