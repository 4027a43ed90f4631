//! Learning-rate search and control for gradient-descent training.
//!
//! The central idea: a spectral bound on the input covariance gives the
//! largest learning rate worth trying, and hypothesis tests on the live
//! loss curve (exponential-vs-linear F-test early, negative-slope t-test
//! at plateaus) decide when to decay it. The crate also ships the
//! closed-form linear-network dynamics used to verify the controller's
//! convergence premises, a small dense-network trainer with the usual
//! baseline optimizers, and dataset ingestion for the experiments.

pub mod data_io;
pub mod linear_oracle;
pub mod lr_control;
pub mod nn_engine;
pub mod numstats;

pub use data_io::{Dataset, Split};
pub use linear_oracle::{ExpMixture, LinearProblem, PopulationDynamics};
pub use lr_control::{
    BoundSpec, ControlEvent, ControlRecord, Controller, ControllerConfig, Decision, DecisionKind,
    LossTrace, TaskKind,
};
pub use nn_engine::{
    Activation, Architecture, Budget, DenseNetwork, LossKind, OptimizerSpec, RunRecord,
};
pub use numstats::{ExponentialFit, LinearFit, TestResult};
