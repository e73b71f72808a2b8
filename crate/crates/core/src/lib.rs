//! Regularized Langevin simulated annealing (RLSA) for binary combinatorial
//! optimization on graphs: maximum independent set, maximum clique, maximum
//! cut, and generic QUBO energies.
//!
//! The solver core is generic over the float type through [`Scalar`]; the
//! `*F64` aliases below are what the command-line runner uses.
//!
//! ```
//! use rlsa_core::{generate_er, run_rlsa, EnergyModelF64, SamplerConfigF64};
//!
//! let graph = generate_er(40, 0.2, 7).unwrap();
//! let model = EnergyModelF64::mis(graph, 1.02).unwrap();
//! let cfg = SamplerConfigF64::new(0.01, 3, 100, 8, 42);
//! let result = run_rlsa(&model, &cfg, None).unwrap();
//! assert_eq!(result.violation, 0);
//! ```

// `!(x > 0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod energy;
pub mod error;
pub mod graph;
pub mod kernel;
pub mod ld;
pub mod postprocess;
pub mod sampler;
pub mod scalar;
pub mod solution;

pub use energy::{EnergyModel, Problem};
pub use error::{Error, Result};
pub use graph::{
    generate_ba, generate_er, parse_instance, read_instance, write_instance, Format, Graph,
};
pub use kernel::{
    flip_probabilities, kth_largest, ld_flip_probabilities, normalized_flip_probabilities, FlipRule,
};
pub use ld::{run_ld, run_ld_from, LdConfig};
pub use postprocess::{gap_trajectory, greedy_decode, primal_gap, summarize, GapRecord, Summary};
pub use sampler::{
    chain_rng, rlsa_step, run_chain, run_rlsa, temperature, ChainOutcome, ChainState, Kernel,
    RunResult, SamplerConfig, Schedule, TrajectoryPoint,
};
pub use scalar::{sigmoid, Scalar};
pub use solution::Solution;

pub type EnergyModelF64 = EnergyModel<f64>;
pub type EnergyModelF32 = EnergyModel<f32>;
pub type SamplerConfigF64 = SamplerConfig<f64>;
pub type SamplerConfigF32 = SamplerConfig<f32>;
pub type LdConfigF64 = LdConfig<f64>;
pub type LdConfigF32 = LdConfig<f32>;
pub type RunResultF64 = RunResult<f64>;
pub type RunResultF32 = RunResult<f32>;
pub type ChainStateF64 = ChainState<f64>;
