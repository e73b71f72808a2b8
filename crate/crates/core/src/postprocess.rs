//! Greedy feasibility decoding, primal gap, and run summaries.

use serde::Serialize;

use crate::energy::{gradient_to_delta, EnergyModel};
use crate::error::{Error, Result};
use crate::sampler::RunResult;
use crate::scalar::Scalar;
use crate::solution::Solution;

/// Flips the coordinate with the largest energy drop until no flip strictly improves.
///
/// Ties go to the lowest index. For MIS/MCl with `β > 1` the fixed point is feasible.
pub fn greedy_decode<T: Scalar>(model: &EnergyModel<T>, x: &Solution) -> Result<Solution> {
    model.check(x)?;
    let mut x = x.clone();
    let mut delta = vec![T::zero(); x.len()];
    loop {
        model.energy_and_gradient_into(x.as_slice(), &mut delta);
        gradient_to_delta(x.as_slice(), &mut delta);
        let mut best: Option<(usize, T)> = None;
        for (i, &d) in delta.iter().enumerate() {
            if d > T::zero() && best.is_none_or(|(_, b)| d > b) {
                best = Some((i, d));
            }
        }
        match best {
            Some((i, _)) => x.flip(i),
            None => return Ok(x),
        }
    }
}

/// Normalized distance between a found energy `h` and a reference `h_star`, in `[0, 1]`.
///
/// `|h - h*| / max(|h|, |h*|)` when the two have the same sign (or one is zero),
/// `1` when the signs differ, and `0` when both are zero.
pub fn primal_gap<T: Scalar>(h: T, h_star: T) -> T {
    if h * h_star < T::zero() {
        return T::one();
    }
    let denom = h.abs().max(h_star.abs());
    if denom == T::zero() {
        return T::zero();
    }
    ((h - h_star).abs() / denom).min(T::one())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GapRecord<T> {
    pub step: usize,
    pub gap: T,
}

/// Per-step primal gap of a run's best-so-far energy against `h_star`.
pub fn gap_trajectory<T: Scalar>(result: &RunResult<T>, h_star: T) -> Vec<GapRecord<T>> {
    result
        .trajectory
        .iter()
        .map(|p| GapRecord {
            step: p.step,
            gap: primal_gap(p.best_energy, h_star),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub instances: usize,
    /// Objective statistics over results that have an objective (absent for QUBO).
    pub mean_objective: Option<f64>,
    pub min_objective: Option<u64>,
    pub max_objective: Option<u64>,
    pub mean_best_energy: f64,
    pub total_wall_time: f64,
    /// Mean final primal gap over instances with a reference energy.
    pub mean_primal_gap: Option<f64>,
}

/// Aggregates results; `references[i]` is the reference energy for `results[i]`, if known.
pub fn summarize<T: Scalar>(
    results: &[RunResult<T>],
    references: Option<&[Option<T>]>,
) -> Result<Summary> {
    if results.is_empty() {
        return Err(Error::EmptyResults);
    }
    if let Some(refs) = references {
        if refs.len() != results.len() {
            return Err(Error::LengthMismatch {
                expected: results.len(),
                found: refs.len(),
            });
        }
    }
    let objectives: Vec<u64> = results.iter().filter_map(|r| r.objective).collect();
    let mean_objective = (!objectives.is_empty())
        .then(|| objectives.iter().sum::<u64>() as f64 / objectives.len() as f64);
    let gaps: Vec<f64> = references
        .map(|refs| {
            results
                .iter()
                .zip(refs)
                .filter_map(|(r, h)| h.map(|h| primal_gap(r.best_energy, h).to_f64_lossy()))
                .collect()
        })
        .unwrap_or_default();
    Ok(Summary {
        instances: results.len(),
        mean_objective,
        min_objective: objectives.iter().copied().min(),
        max_objective: objectives.iter().copied().max(),
        mean_best_energy: results
            .iter()
            .map(|r| r.best_energy.to_f64_lossy())
            .sum::<f64>()
            / results.len() as f64,
        total_wall_time: results.iter().map(|r| r.wall_time).sum(),
        mean_primal_gap: (!gaps.is_empty()).then(|| gaps.iter().sum::<f64>() / gaps.len() as f64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k3_mis() -> EnergyModel<f64> {
        EnergyModel::mis(
            Graph::from_edge_list(3, [(0, 1), (1, 2), (0, 2)]).unwrap(),
            1.02,
        )
        .unwrap()
    }

    fn result_with(objective: u64, energy: f64) -> RunResult<f64> {
        RunResult {
            best_x: Solution::zeros(0),
            best_energy: energy,
            raw_best_energy: energy,
            objective: Some(objective),
            violation: 0,
            trajectory: Vec::new(),
            chain_best_energies: Vec::new(),
            wall_time: 0.5,
        }
    }

    #[test]
    fn decode_triangle() {
        let model = k3_mis();
        let x = Solution::new(vec![1, 1, 0]).unwrap();
        assert_eq!(greedy_decode(&model, &x).unwrap().as_slice(), &[0, 1, 0]);
    }

    #[test]
    fn decode_fixed_point() {
        let model = k3_mis();
        let x = Solution::new(vec![0, 0, 1]).unwrap();
        assert_eq!(greedy_decode(&model, &x).unwrap(), x);
    }

    #[test]
    fn decode_cycles_never_on_zero_gain() {
        // MCut on an isolated node: Δ = 0 forever, must stop immediately
        let model = EnergyModel::<f64>::mcut(Graph::empty(2));
        let x = Solution::new(vec![1, 0]).unwrap();
        assert_eq!(greedy_decode(&model, &x).unwrap(), x);
    }

    #[test]
    fn gap_examples() {
        assert_eq!(primal_gap(-44.0, -44.0), 0.0);
        assert!((primal_gap(-40.0_f64, -44.87) - 4.87 / 44.87).abs() < 1e-12);
        assert!((primal_gap(-40.0_f64, -44.87) - 0.10853).abs() < 1e-5);
        assert_eq!(primal_gap(2.0, -5.0), 1.0);
        assert_eq!(primal_gap(0.0, 0.0), 0.0);
        assert_eq!(primal_gap(0.0, -3.0), 1.0);
    }

    #[test]
    fn summarize_means() {
        let s = summarize(&[result_with(5, -5.0)], None).unwrap();
        assert_eq!(s.mean_objective, Some(5.0));
        let s = summarize(
            &[result_with(4, -4.0), result_with(6, -6.0)],
            Some(&[None, Some(-6.0)]),
        )
        .unwrap();
        assert_eq!(s.mean_objective, Some(5.0));
        assert_eq!(s.min_objective, Some(4));
        assert_eq!(s.max_objective, Some(6));
        assert_eq!(s.mean_best_energy, -5.0);
        assert_eq!(s.total_wall_time, 1.0);
        assert_eq!(s.mean_primal_gap, Some(0.0));
        assert!(matches!(
            summarize::<f64>(&[], None),
            Err(Error::EmptyResults)
        ));
    }
}
