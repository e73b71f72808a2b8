use std::process::ExitCode;

use clap::Parser;
use rlsa_cli::{preset::PRESETS, run_experiment, Args, ExperimentConfig};

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_presets {
        println!(
            "{:<14} {:<5} {:>6} {:>4} {:>6} {:>6} {:>6}",
            "name", "prob", "tau0", "d", "chains", "steps", "beta"
        );
        for p in PRESETS {
            println!(
                "{:<14} {:<5} {:>6} {:>4} {:>6} {:>6} {:>6}",
                p.name,
                p.problem.name(),
                p.tau0,
                p.d,
                p.chains,
                p.steps,
                p.beta
            );
        }
        return ExitCode::SUCCESS;
    }
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(args: &Args) -> anyhow::Result<()> {
    let cfg = ExperimentConfig::from_args(args)?;
    let outcome = run_experiment(&cfg)?;
    for r in &outcome.records {
        let objective = r.objective.map_or("-".to_string(), |o| o.to_string());
        println!(
            "{}\tenergy={}\tobjective={}\tviolation={}\ttime={:.3}s",
            r.instance, r.best_energy, objective, r.violation, r.wall_time_s
        );
    }
    let s = &outcome.summary;
    if let Some(mean) = s.mean_objective {
        println!("mean objective {mean:.4} over {} instance(s)", s.instances);
    }
    if let Some(gap) = s.mean_primal_gap {
        println!("mean primal gap {gap:.6}");
    }
    println!(
        "total solver time {:.3}s; results in {}",
        s.total_wall_time,
        cfg.out_dir.display()
    );
    Ok(())
}
