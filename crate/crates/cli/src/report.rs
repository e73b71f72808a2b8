//! Result records and trajectory files.

use std::fmt::Write as _;
use std::path::Path;

use rlsa_core::{primal_gap, EnergyModel, Kernel, Problem, RunResult, Solution};
use serde::{Deserialize, Serialize};

use crate::config::{SolverConfig, SolverKind};
use crate::error::{io_err, BenchError, Result};

/// Hyperparameters echoed into every result record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub tau0: f64,
    pub steps: usize,
    pub chains: usize,
    pub beta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
}

impl ConfigEcho {
    pub fn new(solver: &SolverConfig, beta: f64) -> Self {
        match solver {
            SolverConfig::Rlsa(c) => Self {
                tau0: c.tau0,
                steps: c.steps,
                chains: c.chains,
                beta,
                d: Some(c.d),
                epsilon: Some(c.epsilon),
                kernel: Some(
                    match c.kernel {
                        Kernel::Regularized => "regularized",
                        Kernel::Normalized => "normalized",
                    }
                    .into(),
                ),
                alpha: None,
            },
            SolverConfig::Ld(c) => Self {
                tau0: c.tau0,
                steps: c.steps,
                chains: c.chains,
                beta,
                d: None,
                epsilon: None,
                kernel: None,
                alpha: Some(c.alpha),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub problem: Problem,
    pub instance: String,
    pub solver: SolverKind,
    pub config: ConfigEcho,
    pub seed: u64,
    pub best_energy: f64,
    pub objective: Option<u64>,
    pub violation: u64,
    pub wall_time_s: f64,
    /// Trajectory file name, relative to the record's directory.
    pub trajectory_path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reference_energy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub primal_gap: Option<f64>,
    pub best_x: Solution,
}

impl ResultRecord {
    pub fn new(
        instance: &str,
        problem: Problem,
        solver: &SolverConfig,
        beta: f64,
        result: &RunResult<f64>,
        reference_energy: Option<f64>,
        trajectory_path: Option<String>,
    ) -> Self {
        Self {
            problem,
            instance: instance.to_string(),
            solver: solver.kind(),
            config: ConfigEcho::new(solver, beta),
            seed: solver.seed(),
            best_energy: result.best_energy,
            objective: result.objective,
            violation: result.violation,
            wall_time_s: result.wall_time,
            trajectory_path,
            reference_energy,
            primal_gap: reference_energy.map(|h| primal_gap(result.best_energy, h)),
            best_x: result.best_x.clone(),
        }
    }

    /// Recomputes energy, objective and violation from `best_x` and compares.
    pub fn validate(&self, model: &EnergyModel<f64>) -> Result<()> {
        let fail = |reason: String| BenchError::Inconsistent {
            instance: self.instance.clone(),
            reason,
        };
        let energy = model.energy(&self.best_x)?;
        if (energy - self.best_energy).abs() > 1e-9 * energy.abs().max(1.0) {
            return Err(fail(format!(
                "energy {energy} != stored {}",
                self.best_energy
            )));
        }
        let violation = model.violation(&self.best_x)?;
        if violation != self.violation {
            return Err(fail(format!(
                "violation {violation} != stored {}",
                self.violation
            )));
        }
        let objective = model.objective(&self.best_x).ok();
        if objective != self.objective {
            return Err(fail(format!(
                "objective {objective:?} != stored {:?}",
                self.objective
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()?).map_err(io_err(path))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(io_err(path))?;
        Ok(serde_json::from_str(&text)?)
    }
}

/// CSV text `step,tau,best_energy,mean_energy[,primal_gap]`, one row per step.
pub fn trajectory_csv(result: &RunResult<f64>, reference: Option<f64>) -> String {
    let mut out = String::from("step,tau,best_energy,mean_energy");
    if reference.is_some() {
        out.push_str(",primal_gap");
    }
    out.push('\n');
    for p in &result.trajectory {
        write!(
            out,
            "{},{},{},{}",
            p.step, p.tau, p.best_energy, p.mean_energy
        )
        .unwrap();
        if let Some(h) = reference {
            write!(out, ",{}", primal_gap(p.best_energy, h)).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn emit_trajectory(result: &RunResult<f64>, path: &Path, reference: Option<f64>) -> Result<()> {
    std::fs::write(path, trajectory_csv(result, reference)).map_err(io_err(path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rlsa_core::{run_rlsa, Graph, SamplerConfig};

    fn k3_run() -> (EnergyModel<f64>, RunResult<f64>, SolverConfig) {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = EnergyModel::mis(g, 1.02).unwrap();
        let cfg = SamplerConfig::new(0.01, 2, 100, 4, 0);
        let r = run_rlsa(&m, &cfg, None).unwrap();
        (m, r, SolverConfig::Rlsa(cfg))
    }

    #[test]
    fn csv_rows_and_header() {
        let (_, r, _) = k3_run();
        let csv = trajectory_csv(&r, None);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "step,tau,best_energy,mean_energy");
        assert_eq!(lines.len(), 101);
        assert!(lines[1].starts_with("1,0.01,"));
        let with_gap = trajectory_csv(&r, Some(-1.0));
        assert!(with_gap.starts_with("step,tau,best_energy,mean_energy,primal_gap\n"));
        assert!(with_gap.lines().last().unwrap().ends_with(",0"));
    }

    #[test]
    fn record_validates_and_detects_tampering() {
        let (m, r, solver) = k3_run();
        let rec = ResultRecord::new("k3", Problem::Mis, &solver, 1.02, &r, Some(-1.0), None);
        assert_eq!(rec.objective, Some(1));
        assert_eq!(rec.primal_gap, Some(0.0));
        rec.validate(&m).unwrap();
        let back: ResultRecord = serde_json::from_str(&rec.to_json().unwrap()).unwrap();
        assert_eq!(back, rec);
        let mut bad = rec.clone();
        bad.objective = Some(2);
        assert!(bad.validate(&m).is_err());
        let mut bad = rec;
        bad.best_x = Solution::ones(3);
        assert!(bad.validate(&m).is_err());
    }
}
