//! Constant-step discrete Langevin annealing, the unregularized baseline.
//!
//! Runs the same schedule, chain layout and random-stream discipline as
//! [`run_rlsa`](crate::sampler::run_rlsa); only the flip rule differs.

use crate::energy::EnergyModel;
use crate::error::{invalid, Result};
use crate::kernel::FlipRule;
use crate::sampler::{anneal, RunResult, Schedule};
use crate::scalar::Scalar;
use crate::solution::Solution;

#[derive(Clone, Debug, PartialEq)]
pub struct LdConfig<T> {
    pub alpha: T,
    pub tau0: T,
    pub steps: usize,
    pub chains: usize,
    pub seed: u64,
}

impl<T: Scalar> LdConfig<T> {
    pub fn new(alpha: T, tau0: T, steps: usize, chains: usize, seed: u64) -> Self {
        Self {
            alpha,
            tau0,
            steps,
            chains,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > T::zero()) {
            return Err(invalid(
                "alpha",
                format!("step size must be positive, got {}", self.alpha),
            ));
        }
        if self.chains == 0 {
            return Err(invalid("chains", "need at least one chain"));
        }
        self.schedule().validate()
    }

    pub fn schedule(&self) -> Schedule<T> {
        Schedule {
            tau0: self.tau0,
            steps: self.steps,
        }
    }

    pub fn rule(&self) -> FlipRule<T> {
        FlipRule::Langevin { alpha: self.alpha }
    }
}

pub fn run_ld<T: Scalar>(model: &EnergyModel<T>, cfg: &LdConfig<T>) -> Result<RunResult<T>> {
    run_ld_from(model, cfg, None)
}

/// [`run_ld`] with every chain started from `init`.
pub fn run_ld_from<T: Scalar>(
    model: &EnergyModel<T>,
    cfg: &LdConfig<T>,
    init: Option<&Solution>,
) -> Result<RunResult<T>> {
    cfg.validate()?;
    anneal(
        model,
        cfg.schedule(),
        cfg.rule(),
        cfg.chains,
        cfg.seed,
        init,
    )
}
