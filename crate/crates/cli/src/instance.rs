//! Instance loading: graph files, directories of them, generated graphs, and QUBO files.
//!
//! QUBO text format: `#` comments, a header `N K`, then `K` lines `i j q`
//! (0-indexed). `i == j` adds `q` to the linear coefficient of `x_i`; `i != j`
//! adds `q` to the coefficient of `x_i x_j`. Repeated pairs accumulate.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rlsa_core::{generate_ba, generate_er, EnergyModel, Graph, Problem};

use crate::config::{ExperimentConfig, FormatArg, GeneratorSpec, InstanceSource};
use crate::error::{io_err, BenchError, Result};

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub model: EnergyModel<f64>,
}

pub fn load_instances(cfg: &ExperimentConfig) -> Result<Vec<Instance>> {
    match &cfg.source {
        InstanceSource::Path(path) => {
            let files = instance_files(path)?;
            files
                .iter()
                .map(|f| {
                    let model = load_model(cfg, f)?;
                    Ok(Instance {
                        name: instance_name(f),
                        model,
                    })
                })
                .collect()
        }
        InstanceSource::Generate { spec, count, seed } => (0..*count)
            .map(|i| {
                let s = seed.wrapping_add(i as u64);
                let graph = generate(*spec, s)?;
                Ok(Instance {
                    name: format!("{spec}-s{s}"),
                    model: build_model(cfg.problem, graph, cfg.beta)?,
                })
            })
            .collect(),
    }
}

pub fn generate(spec: GeneratorSpec, seed: u64) -> Result<Graph> {
    Ok(match spec {
        GeneratorSpec::Er { n, p } => generate_er(n, p, seed)?,
        GeneratorSpec::Ba { n, m } => generate_ba(n, m, seed)?,
    })
}

pub fn build_model(problem: Problem, graph: Graph, beta: f64) -> Result<EnergyModel<f64>> {
    Ok(match problem {
        Problem::Mcut => EnergyModel::mcut(graph),
        Problem::Qubo => {
            return Err(BenchError::Config(
                "qubo models are read from qubo files".into(),
            ))
        }
        p => EnergyModel::new(p, graph, beta)?,
    })
}

/// File stem used to name result files and look up reference energies.
pub fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn instance_files(path: &Path) -> Result<Vec<PathBuf>> {
    let meta = std::fs::metadata(path).map_err(io_err(path))?;
    if meta.is_file() {
        return Ok(vec![path.to_path_buf()]);
    }
    let mut files = Vec::new();
    for entry in std::fs::read_dir(path).map_err(io_err(path))? {
        let p = entry.map_err(io_err(path))?.path();
        let hidden = p
            .file_name()
            .is_some_and(|n| n.to_string_lossy().starts_with('.'));
        if p.is_file() && !hidden {
            files.push(p);
        }
    }
    files.sort();
    if files.is_empty() {
        return Err(BenchError::Config(format!(
            "{} contains no instance files",
            path.display()
        )));
    }
    Ok(files)
}

fn load_model(cfg: &ExperimentConfig, path: &Path) -> Result<EnergyModel<f64>> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    let wrap = |source| BenchError::Instance {
        path: path.to_path_buf(),
        source,
    };
    if cfg.problem == Problem::Qubo {
        return parse_qubo(&text).map_err(wrap);
    }
    if cfg.format == Some(FormatArg::Qubo) {
        return Err(BenchError::Config(
            "--format qubo requires --problem qubo".into(),
        ));
    }
    let format = cfg
        .graph_format()
        .unwrap_or_else(|| rlsa_core::Format::detect(&text));
    let graph = rlsa_core::parse_instance(&text, format).map_err(wrap)?;
    build_model(cfg.problem, graph, cfg.beta)
}

fn parse_err(line: usize, message: impl Into<String>) -> rlsa_core::Error {
    rlsa_core::Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_qubo(text: &str) -> Result<EnergyModel<f64>, rlsa_core::Error> {
    let mut n: Option<usize> = None;
    let mut linear = Vec::new();
    let mut pairs: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if toks.len() != 2 {
                    return Err(parse_err(lineno, "expected header `N K`"));
                }
                let nodes: usize = toks[0]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad node count"))?;
                n = Some(nodes);
                linear = vec![0.0; nodes];
            }
            Some(nodes) => {
                if toks.len() != 3 {
                    return Err(parse_err(lineno, "expected `i j q`"));
                }
                let i: usize = toks[0]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad index"))?;
                let j: usize = toks[1]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad index"))?;
                let q: f64 = toks[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad coefficient"))?;
                if i >= nodes || j >= nodes {
                    return Err(parse_err(lineno, format!("index outside 0..{nodes}")));
                }
                if !q.is_finite() {
                    return Err(parse_err(lineno, "coefficient is not finite"));
                }
                if i == j {
                    linear[i] += q;
                } else {
                    *pairs.entry((i.min(j), i.max(j))).or_insert(0.0) += q;
                }
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `N K` header"))?;
    let graph = Graph::from_edge_list(n, pairs.keys().copied())?;
    // H = bᵀx + Σ_{i<j} q_ij x_i x_j = bᵀx + ½ xᵀWx with W_ij = W_ji = q_ij
    let weights = (0..n)
        .flat_map(|u| {
            graph
                .neighbors(u)
                .iter()
                .map(|&v| pairs[&(u.min(v), u.max(v))])
                .collect::<Vec<_>>()
        })
        .collect();
    EnergyModel::qubo(graph, linear, 0.5, Some(weights))
}

/// Reads `instance_name energy` lines.
pub fn read_references(path: &Path) -> Result<BTreeMap<String, f64>> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    let mut refs = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let energy = match toks.as_slice() {
            [_, e] => e.parse::<f64>().ok(),
            _ => None,
        };
        match energy {
            Some(e) => {
                refs.insert(toks[0].to_string(), e);
            }
            None => {
                return Err(BenchError::Instance {
                    path: path.to_path_buf(),
                    source: parse_err(idx + 1, "expected `instance_name energy`"),
                })
            }
        }
    }
    Ok(refs)
}
