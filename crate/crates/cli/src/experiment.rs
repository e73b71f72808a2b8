use std::path::Path;

use rlsa_core::{run_ld, run_rlsa, summarize, RunResult, Summary};
use serde::Serialize;

use crate::config::{ExperimentConfig, SolverConfig};
use crate::error::{io_err, BenchError, Result};
use crate::instance::{load_instances, read_references, Instance};
use crate::report::{emit_trajectory, ResultRecord};

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentOutcome {
    pub records: Vec<ResultRecord>,
    pub summary: Summary,
}

/// Loads every instance, checks the hyperparameters against each of them, then
/// solves them one after another and writes one JSON record per instance plus
/// `summary.json` into the output directory.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutcome> {
    let references = match &cfg.ref_energies {
        Some(path) => Some(read_references(path)?),
        None => None,
    };
    let instances = load_instances(cfg)?;
    let solvers = instances
        .iter()
        .map(|inst| solver_for(cfg, inst))
        .collect::<Result<Vec<_>>>()?;
    std::fs::create_dir_all(&cfg.out_dir).map_err(io_err(&cfg.out_dir))?;

    let pool = match cfg.threads {
        Some(n) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| BenchError::Config(format!("cannot start {n} threads: {e}")))?,
        ),
        None => None,
    };

    let mut results = Vec::with_capacity(instances.len());
    let mut records = Vec::with_capacity(instances.len());
    let mut refs = Vec::with_capacity(instances.len());
    for (inst, solver) in instances.iter().zip(&solvers) {
        let solve = || solve(solver, inst);
        let result = match &pool {
            Some(pool) => pool.install(solve)?,
            None => solve()?,
        };
        let reference = references.as_ref().and_then(|r| r.get(&inst.name).copied());
        let trajectory_path = if cfg.trajectory {
            let name = format!("{}.trajectory.csv", inst.name);
            emit_trajectory(&result, &cfg.out_dir.join(&name), reference)?;
            Some(name)
        } else {
            None
        };
        let record = ResultRecord::new(
            &inst.name,
            cfg.problem,
            solver,
            cfg.beta,
            &result,
            reference,
            trajectory_path,
        );
        record.write(&cfg.out_dir.join(format!("{}.json", inst.name)))?;
        records.push(record);
        refs.push(reference);
        results.push(result);
    }

    let summary = summarize(&results, Some(&refs))?;
    write_summary(&cfg.out_dir.join("summary.json"), &summary)?;
    Ok(ExperimentOutcome { records, summary })
}

/// The solver configuration for one instance. A preset's `d` is capped at the
/// instance size; an explicit `--d` larger than the instance is an error.
fn solver_for(cfg: &ExperimentConfig, inst: &Instance) -> Result<SolverConfig> {
    let n = inst.model.num_nodes();
    let mut solver = cfg.solver.clone();
    if let SolverConfig::Rlsa(c) = &mut solver {
        if cfg.d_from_preset && n > 0 {
            c.d = c.d.min(n);
        }
        if n > 0 {
            c.rule()
                .validate(n)
                .map_err(|e| BenchError::Config(format!("instance `{}`: {e}", inst.name)))?;
        }
    }
    Ok(solver)
}

fn solve(solver: &SolverConfig, inst: &Instance) -> Result<RunResult<f64>> {
    Ok(match solver {
        SolverConfig::Rlsa(c) => run_rlsa(&inst.model, c, None)?,
        SolverConfig::Ld(c) => run_ld(&inst.model, c)?,
    })
}

fn write_summary(path: &Path, summary: &Summary) -> Result<()> {
    let text = serde_json::to_string_pretty(summary)? + "\n";
    std::fs::write(path, text).map_err(io_err(path))
}
