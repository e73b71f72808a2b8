//! Benchmark runner around `rlsa-core`: instance loading and generation,
//! hyperparameter presets, result records, and trajectory files.

pub mod config;
pub mod error;
pub mod experiment;
pub mod instance;
pub mod preset;
pub mod report;

pub use config::{Args, ExperimentConfig, GeneratorSpec, InstanceSource, SolverConfig, SolverKind};
pub use error::{BenchError, Result};
pub use experiment::{run_experiment, ExperimentOutcome};
pub use report::{emit_trajectory, trajectory_csv, ResultRecord};
