//! Regularized Langevin simulated annealing.
//!
//! Each of `K` chains starts from a uniform random point (or a supplied one)
//! and runs `T` steps of the linear schedule `τ_t = τ0 (1 - (t-1)/T)`. A step
//! computes `Δ` once, thresholds it at its `d`-th largest entry, and flips all
//! coordinates independently in parallel. The lowest-energy point each chain
//! visits is kept; the best of those is greedily decoded into the result.
//!
//! Chain `k` draws from a ChaCha8 stream seeded with the master seed and
//! positioned on stream `k`, so a run is a pure function of its inputs no
//! matter how many worker threads execute the chains. The stream is consumed
//! as: `N` draws for the random initial point (skipped when an initial point
//! is supplied), then exactly `N` uniform draws per step in ascending
//! coordinate order.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::energy::{gradient_to_delta, EnergyModel};
use crate::error::{invalid, Error, Result};
use crate::kernel::FlipRule;
use crate::postprocess::greedy_decode;
use crate::scalar::Scalar;
use crate::solution::Solution;

/// Default `ε` added to the regularized threshold.
pub const DEFAULT_EPSILON: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Kernel {
    /// Threshold at the `d`-th largest flip drop.
    #[default]
    Regularized,
    /// Normalized sigmoid scores.
    Normalized,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SamplerConfig<T> {
    pub tau0: T,
    /// Target expected number of flips per step.
    pub d: usize,
    pub epsilon: T,
    pub steps: usize,
    pub chains: usize,
    pub seed: u64,
    pub kernel: Kernel,
}

impl<T: Scalar> SamplerConfig<T> {
    pub fn new(tau0: T, d: usize, steps: usize, chains: usize, seed: u64) -> Self {
        Self {
            tau0,
            d,
            epsilon: T::from_f64_lossy(DEFAULT_EPSILON),
            steps,
            chains,
            seed,
            kernel: Kernel::Regularized,
        }
    }

    pub fn with_epsilon(mut self, epsilon: T) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_kernel(mut self, kernel: Kernel) -> Self {
        self.kernel = kernel;
        self
    }

    pub fn rule(&self) -> FlipRule<T> {
        match self.kernel {
            Kernel::Regularized => FlipRule::Regularized {
                d: self.d,
                epsilon: self.epsilon,
            },
            Kernel::Normalized => FlipRule::Normalized { d: self.d },
        }
    }

    pub fn schedule(&self) -> Schedule<T> {
        Schedule {
            tau0: self.tau0,
            steps: self.steps,
        }
    }

    /// Checks everything except `d <= N`, which needs the model.
    pub fn validate(&self) -> Result<()> {
        self.schedule().validate()?;
        if self.d == 0 {
            return Err(invalid("d", "must be a positive integer"));
        }
        if !(self.epsilon >= T::zero()) {
            return Err(invalid(
                "epsilon",
                format!("must be non-negative, got {}", self.epsilon),
            ));
        }
        if self.chains == 0 {
            return Err(invalid("chains", "need at least one chain"));
        }
        Ok(())
    }

    pub fn temperature(&self, t: usize) -> T {
        temperature(t, self.tau0, self.steps)
    }
}

/// Linear annealing schedule.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Schedule<T> {
    pub tau0: T,
    pub steps: usize,
}

impl<T: Scalar> Schedule<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.tau0 > T::zero()) || !self.tau0.is_finite() {
            return Err(invalid(
                "tau0",
                format!("must be positive and finite, got {}", self.tau0),
            ));
        }
        if self.steps == 0 {
            return Err(invalid("steps", "need at least one step"));
        }
        Ok(())
    }
}

/// `τ0 (1 - (t-1)/T)` for the 1-based step `t`; the last step runs at `τ0 / T`.
#[inline]
pub fn temperature<T: Scalar>(t: usize, tau0: T, steps: usize) -> T {
    debug_assert!(t >= 1 && t <= steps);
    let steps = T::from_usize_lossy(steps);
    tau0 * (steps - T::from_usize_lossy(t - 1)) / steps
}

/// The random stream of chain `chain` under `seed`.
pub fn chain_rng(seed: u64, chain: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chain as u64);
    rng
}

/// One annealing chain: its current point, its best point, and its random stream.
#[derive(Clone, Debug)]
pub struct ChainState<T> {
    x: Solution,
    energy: T,
    best_x: Solution,
    best_energy: T,
    rng: ChaCha8Rng,
    /// `∇H(x)` for the current `x`; reused as the Δ / probability buffer during a step.
    grad: Vec<T>,
    scratch: Vec<T>,
}

impl<T: Scalar> ChainState<T> {
    pub fn new(model: &EnergyModel<T>, x: Solution, rng: ChaCha8Rng) -> Result<Self> {
        model.check(&x)?;
        let n = x.len();
        let mut grad = vec![T::zero(); n];
        let energy = model.energy_and_gradient_into(x.as_slice(), &mut grad);
        Ok(Self {
            best_x: x.clone(),
            x,
            energy,
            best_energy: energy,
            rng,
            grad,
            scratch: vec![T::zero(); n],
        })
    }

    /// Uniform random start drawn from the chain's own stream.
    pub fn random(model: &EnergyModel<T>, seed: u64, chain: usize) -> Self {
        let mut rng = chain_rng(seed, chain);
        let bits = (0..model.num_nodes())
            .map(|_| rng.gen::<bool>() as u8)
            .collect();
        Self::new(model, Solution::new(bits).expect("binary"), rng).expect("length matches")
    }

    pub fn x(&self) -> &Solution {
        &self.x
    }

    pub fn energy(&self) -> T {
        self.energy
    }

    pub fn best_x(&self) -> &Solution {
        &self.best_x
    }

    pub fn best_energy(&self) -> T {
        self.best_energy
    }

    /// One parallel-flip step at temperature `tau` under `rule`.
    pub fn step(&mut self, model: &EnergyModel<T>, tau: T, rule: &FlipRule<T>) {
        gradient_to_delta(self.x.as_slice(), &mut self.grad);
        rule.apply_in_place(&mut self.grad, tau, &mut self.scratch);
        let bits = self.x.bits_mut();
        for (bit, p) in bits.iter_mut().zip(&self.grad) {
            let u: f64 = self.rng.gen();
            if u < p.to_f64_lossy() {
                *bit ^= 1;
            }
        }
        self.energy = model.energy_and_gradient_into(self.x.as_slice(), &mut self.grad);
        if self.energy < self.best_energy {
            self.best_energy = self.energy;
            self.best_x.clone_from(&self.x);
        }
    }
}

/// One regularized step (`Δ`, `Δ_(d)`, parallel Bernoulli flips, best tracking).
pub fn rlsa_step<T: Scalar>(
    state: &mut ChainState<T>,
    model: &EnergyModel<T>,
    tau: T,
    cfg: &SamplerConfig<T>,
) {
    state.step(model, tau, &cfg.rule());
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrajectoryPoint<T> {
    pub step: usize,
    pub tau: T,
    /// Lowest energy seen by any chain up to and including this step.
    pub best_energy: T,
    /// Mean current energy across chains after this step.
    pub mean_energy: T,
}

/// What a single chain leaves behind.
#[derive(Clone, Debug)]
pub struct ChainOutcome<T> {
    pub best_x: Solution,
    pub best_energy: T,
    /// Energy after each step.
    pub energies: Vec<T>,
    /// Best energy after each step.
    pub best_energies: Vec<T>,
}

#[derive(Clone, Debug)]
pub struct RunResult<T> {
    /// Greedy-decoded best point.
    pub best_x: Solution,
    /// `H(best_x)`.
    pub best_energy: T,
    /// Best energy before decoding.
    pub raw_best_energy: T,
    /// Set or cut size; `None` for QUBO models.
    pub objective: Option<u64>,
    pub violation: u64,
    pub trajectory: Vec<TrajectoryPoint<T>>,
    pub chain_best_energies: Vec<T>,
    /// Seconds spent in the solver, decoding included.
    pub wall_time: f64,
}

/// Runs one chain of an annealing run to completion.
pub fn run_chain<T: Scalar>(
    model: &EnergyModel<T>,
    schedule: Schedule<T>,
    rule: &FlipRule<T>,
    seed: u64,
    chain: usize,
    init: Option<&Solution>,
) -> ChainOutcome<T> {
    let mut state = match init {
        Some(x) => ChainState::new(model, x.clone(), chain_rng(seed, chain)).expect("validated"),
        None => ChainState::random(model, seed, chain),
    };
    let mut energies = Vec::with_capacity(schedule.steps);
    let mut best_energies = Vec::with_capacity(schedule.steps);
    for t in 1..=schedule.steps {
        let tau = temperature(t, schedule.tau0, schedule.steps);
        state.step(model, tau, rule);
        energies.push(state.energy);
        best_energies.push(state.best_energy);
    }
    ChainOutcome {
        best_x: state.best_x,
        best_energy: state.best_energy,
        energies,
        best_energies,
    }
}

/// Shared driver for every annealing sampler in the crate.
pub(crate) fn anneal<T: Scalar>(
    model: &EnergyModel<T>,
    schedule: Schedule<T>,
    rule: FlipRule<T>,
    chains: usize,
    seed: u64,
    init: Option<&Solution>,
) -> Result<RunResult<T>> {
    schedule.validate()?;
    if chains == 0 {
        return Err(invalid("chains", "need at least one chain"));
    }
    let n = model.num_nodes();
    if let Some(x) = init {
        model.check(x)?;
    }
    let start = Instant::now();
    if n == 0 {
        return Ok(empty_result(model, schedule, chains, start));
    }
    rule.validate(n)?;

    let outcomes: Vec<ChainOutcome<T>> = (0..chains)
        .into_par_iter()
        .map(|c| run_chain(model, schedule, &rule, seed, c, init))
        .collect();

    let chains_t = T::from_usize_lossy(chains);
    let trajectory = (0..schedule.steps)
        .map(|s| {
            let best = outcomes
                .iter()
                .map(|o| o.best_energies[s])
                .fold(T::infinity(), T::min);
            let mean = outcomes.iter().map(|o| o.energies[s]).sum::<T>() / chains_t;
            TrajectoryPoint {
                step: s + 1,
                tau: temperature(s + 1, schedule.tau0, schedule.steps),
                best_energy: best,
                mean_energy: mean,
            }
        })
        .collect();

    let mut winner = 0;
    for (c, o) in outcomes.iter().enumerate() {
        if o.best_energy < outcomes[winner].best_energy {
            winner = c;
        }
    }
    let raw_best_energy = outcomes[winner].best_energy;
    let chain_best_energies = outcomes.iter().map(|o| o.best_energy).collect();
    let best_x = greedy_decode(model, &outcomes[winner].best_x)?;
    finish(
        model,
        best_x,
        raw_best_energy,
        trajectory,
        chain_best_energies,
        start,
    )
}

fn finish<T: Scalar>(
    model: &EnergyModel<T>,
    best_x: Solution,
    raw_best_energy: T,
    trajectory: Vec<TrajectoryPoint<T>>,
    chain_best_energies: Vec<T>,
    start: Instant,
) -> Result<RunResult<T>> {
    let best_energy = model.energy(&best_x)?;
    let violation = model.violation(&best_x)?;
    let objective = match model.objective(&best_x) {
        Ok(v) => Some(v),
        Err(Error::Unsupported(_) | Error::Infeasible(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(RunResult {
        best_x,
        best_energy,
        raw_best_energy,
        objective,
        violation,
        trajectory,
        chain_best_energies,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

fn empty_result<T: Scalar>(
    model: &EnergyModel<T>,
    schedule: Schedule<T>,
    chains: usize,
    start: Instant,
) -> RunResult<T> {
    let trajectory = (1..=schedule.steps)
        .map(|t| TrajectoryPoint {
            step: t,
            tau: temperature(t, schedule.tau0, schedule.steps),
            best_energy: T::zero(),
            mean_energy: T::zero(),
        })
        .collect();
    finish(
        model,
        Solution::zeros(0),
        T::zero(),
        trajectory,
        vec![T::zero(); chains],
        start,
    )
    .expect("empty solution is valid")
}

/// Regularized Langevin simulated annealing over `cfg.chains` independent chains.
///
/// With `init`, every chain starts from that point instead of a random one.
pub fn run_rlsa<T: Scalar>(
    model: &EnergyModel<T>,
    cfg: &SamplerConfig<T>,
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
