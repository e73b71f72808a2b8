use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use rlsa_core::{Format, Kernel, LdConfig, Problem, SamplerConfig};
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};
use crate::preset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Rlsa,
    Ld,
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolverKind::Rlsa => "rlsa",
            SolverKind::Ld => "ld",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KernelArg {
    Regularized,
    Normalized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    EdgeList,
    Dimacs,
    Qubo,
}

/// Random instance family for `--generate`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GeneratorSpec {
    Er { n: usize, p: f64 },
    Ba { n: usize, m: usize },
}

impl FromStr for GeneratorSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || format!("expected er:N:P or ba:N:M, got `{s}`");
        if parts.len() != 3 {
            return Err(bad());
        }
        let n: usize = parts[1].parse().map_err(|_| bad())?;
        match parts[0] {
            "er" => Ok(GeneratorSpec::Er {
                n,
                p: parts[2].parse().map_err(|_| bad())?,
            }),
            "ba" => Ok(GeneratorSpec::Ba {
                n,
                m: parts[2].parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Er { n, p } => write!(f, "er-n{n}-p{p}"),
            GeneratorSpec::Ba { n, m } => write!(f, "ba-n{n}-m{m}"),
        }
    }
}

/// Run RLSA or the discrete Langevin baseline on graph instances.
#[derive(Clone, Debug, Parser)]
#[command(name = "rlsa", version, about)]
pub struct Args {
    /// Problem to solve: mis, mcl, mcut or qubo. Implied by --preset.
    #[arg(long)]
    pub problem: Option<Problem>,

    /// Instance file, or a directory of instance files (batch mode).
    #[arg(long, conflicts_with = "generate")]
    pub instance: Option<PathBuf>,

    /// Generate instances instead: er:N:P or ba:N:M.
    #[arg(long)]
    pub generate: Option<GeneratorSpec>,

    /// Number of instances to generate.
    #[arg(long, default_value_t = 1, requires = "generate")]
    pub count: usize,

    /// Seed of the first generated instance (instance i uses graph_seed + i). Defaults to --seed.
    #[arg(long, requires = "generate")]
    pub graph_seed: Option<u64>,

    /// Instance file format; detected from the contents when omitted.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,

    #[arg(long, value_enum, default_value_t = SolverKind::Rlsa)]
    pub solver: SolverKind,

    /// Named hyperparameter preset; see --list-presets.
    #[arg(long)]
    pub preset: Option<String>,

    /// Initial temperature
    #[arg(long)]
    pub tau0: Option<f64>,

    /// Expected number of flips per step (rlsa only).
    #[arg(long)]
    pub d: Option<usize>,

    /// Constant step size (ld only).
    #[arg(long)]
    pub alpha: Option<f64>,

    /// Annealing steps per chain
    #[arg(long)]
    pub steps: Option<usize>,

    /// Independent chains per instance
    #[arg(long)]
    pub chains: Option<usize>,

    /// Penalty coefficient for mis and mcl.
    #[arg(long)]
    pub beta: Option<f64>,

    /// Threshold offset (rlsa only).
    #[arg(long)]
    pub epsilon: Option<f64>,

    /// Flip kernel (rlsa only).
    #[arg(long, value_enum)]
    pub kernel: Option<KernelArg>,

    /// Solver seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// File of `instance_name energy` lines used for primal gaps.
    #[arg(long)]
    pub ref_energies: Option<PathBuf>,

    /// Output directory
    #[arg(long, default_value = "results")]
    pub out: PathBuf,

    /// Also write a per-step trajectory CSV for every instance.
    #[arg(long)]
    pub trajectory: bool,

    /// Worker threads for the chains (default: all cores).
    #[arg(long)]
    pub threads: Option<usize>,

    /// Print the preset table and exit.
    #[arg(long)]
    pub list_presets: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum InstanceSource {
    /// A single file or a directory of files.
    Path(PathBuf),
    Generate {
        spec: GeneratorSpec,
        count: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolverConfig {
    Rlsa(SamplerConfig<f64>),
    Ld(LdConfig<f64>),
}

impl SolverConfig {
    pub fn kind(&self) -> SolverKind {
        match self {
            SolverConfig::Rlsa(_) => SolverKind::Rlsa,
            SolverConfig::Ld(_) => SolverKind::Ld,
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            SolverConfig::Rlsa(c) => c.seed,
            SolverConfig::Ld(c) => c.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub problem: Problem,
    /// `d` came from a preset rather than `--d`, so it may be lowered to fit small instances.
    pub d_from_preset: bool,
    pub source: InstanceSource,
    pub format: Option<FormatArg>,
    pub solver: SolverConfig,
    pub beta: f64,
    pub out_dir: PathBuf,
    pub trajectory: bool,
    pub threads: Option<usize>,
    pub ref_energies: Option<PathBuf>,
}

const DEFAULT_TAU0: f64 = 0.01;
const DEFAULT_D: usize = 5;
const DEFAULT_STEPS: usize = 300;
const DEFAULT_CHAINS: usize = 200;
const DEFAULT_BETA: f64 = 1.02;
const DEFAULT_ALPHA: f64 = 0.01;

impl ExperimentConfig {
    /// Resolves preset defaults and explicit overrides, and validates everything
    /// that does not depend on the instances.
    pub fn from_args(args: &Args) -> Result<Self> {
        let preset = match &args.preset {
            Some(name) => Some(
                preset::find(name)
                    .ok_or_else(|| BenchError::Config(format!("unknown preset `{name}`")))?,
            ),
            None => None,
        };
        let problem = args
            .problem
            .or(preset.map(|p| p.problem))
            .ok_or_else(|| BenchError::Config("--problem or --preset is required".into()))?;

        let source = match (&args.instance, args.generate) {
            (Some(path), None) => InstanceSource::Path(path.clone()),
            (None, Some(spec)) => {
                if problem == Problem::Qubo {
                    return Err(BenchError::Config(
                        "qubo instances are read from files, not generated".into(),
                    ));
                }
                if args.count == 0 {
                    return Err(BenchError::Config("--count must be positive".into()));
                }
                InstanceSource::Generate {
                    spec,
                    count: args.count,
                    seed: args.graph_seed.unwrap_or(args.seed),
                }
            }
            _ => {
                return Err(BenchError::Config(
                    "exactly one of --instance or --generate is required".into(),
                ))
            }
        };

        let tau0 = args.tau0.or(preset.map(|p| p.tau0)).unwrap_or(DEFAULT_TAU0);
        let steps = args
            .steps
            .or(preset.map(|p| p.steps))
            .unwrap_or(DEFAULT_STEPS);
        let chains = args
            .chains
            .or(preset.map(|p| p.chains))
            .unwrap_or(DEFAULT_CHAINS);
        let beta = args.beta.or(preset.map(|p| p.beta)).unwrap_or(DEFAULT_BETA);

        let solver = match args.solver {
            SolverKind::Rlsa => {
                if args.alpha.is_some() {
                    return Err(BenchError::Config(
                        "--alpha only applies to --solver ld".into(),
                    ));
                }
                let d = args.d.or(preset.map(|p| p.d)).unwrap_or(DEFAULT_D);
                let mut cfg = SamplerConfig::new(tau0, d, steps, chains, args.seed);
                if let Some(eps) = args.epsilon {
                    cfg = cfg.with_epsilon(eps);
                }
                if let Some(KernelArg::Normalized) = args.kernel {
                    cfg = cfg.with_kernel(Kernel::Normalized);
                }
                cfg.validate()?;
                SolverConfig::Rlsa(cfg)
            }
            SolverKind::Ld => {
                if args.d.is_some() || args.epsilon.is_some() || args.kernel.is_some() {
                    return Err(BenchError::Config(
                        "--d, --epsilon and --kernel only apply to --solver rlsa".into(),
                    ));
                }
                let cfg = LdConfig::new(
                    args.alpha.unwrap_or(DEFAULT_ALPHA),
                    tau0,
                    steps,
                    chains,
                    args.seed,
                );
                cfg.validate()?;
                SolverConfig::Ld(cfg)
            }
        };

        if problem.is_constrained() && beta.partial_cmp(&1.0) != Some(std::cmp::Ordering::Greater) {
            return Err(BenchError::Config(format!(
                "--beta must exceed 1 for {problem}, got {beta}"
            )));
        }
        if args.threads == Some(0) {
            return Err(BenchError::Config("--threads must be positive".into()));
        }
        if problem == Problem::Qubo
            && matches!(args.format, Some(FormatArg::EdgeList | FormatArg::Dimacs))
        {
            return Err(BenchError::Config(
                "qubo instances use --format qubo".into(),
            ));
        }

        Ok(Self {
            problem,
            d_from_preset: args.d.is_none() && preset.is_some(),
            source,
            format: args.format,
            solver,
            beta,
            out_dir: args.out.clone(),
            trajectory: args.trajectory,
            threads: args.threads,
            ref_energies: args.ref_energies.clone(),
        })
    }

    pub fn graph_format(&self) -> Option<Format> {
        match self.format {
            Some(FormatArg::EdgeList) => Some(Format::EdgeList),
            Some(FormatArg::Dimacs) => Some(Format::Dimacs),
            _ => None,
        }
    }
}
