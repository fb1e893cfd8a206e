//! Constrained Bayesian optimization over Myring hull designs.
//!
//! The crate is `no_std` (it needs `alloc`) and holds every numerical piece
//! of the optimizer: Gaussian process regression, the constrained expected
//! improvement acquisition and its two-stage maximizer, Myring hull geometry
//! with the payload containment constraint, the analytic drag proxy with the
//! infeasible-design heuristic, and the sequential optimization loop.
//!
//! Anything touching the operating system (processes, files, clocks, the
//! command line) lives in the companion `cbo-hull` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod acquisition;
pub mod benchmark;
pub mod bo;
pub mod error;
pub mod evaluator;
pub mod gp;
pub mod hull;
pub mod linalg;
pub mod optim;
pub mod optimize;
pub mod quadrature;
pub mod sampling;
pub mod special;

pub use acquisition::{AcquisitionConfig, CandidateResult};
pub use error::{Error, Result};
pub use evaluator::{DragBackend, EvalRecord, EvalSource, FlowConditions, ProxyBackend};
pub use gp::{FitConfig, GpModel, KernelHyperparams, PosteriorPrediction};
pub use hull::{BaselineGeometry, HullParams, Mesh, Profile};
pub use optimize::{HullParam, ParamBound, RunAborted, RunConfig, RunLog};
