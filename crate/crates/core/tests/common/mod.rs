//! Independent reference computations for tests: dense-matrix formulas,
//! definition-level energies, and exhaustive enumeration. Nothing here goes
//! through the sparse solver code paths.
#![allow(dead_code)]

use rand::Rng;
use rlsa_core::{generate_ba, generate_er, Graph, Problem};

pub fn dense(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.num_nodes();
    let mut a = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    a
}

/// Energies straight from their sum-over-pairs definitions.
pub fn naive_energy(problem: Problem, g: &Graph, beta: f64, x: &[u8]) -> f64 {
    let n = g.num_nodes();
    let xf = |i: usize| x[i] as f64;
    let size: f64 = (0..n).map(xf).sum();
    match problem {
        Problem::Mis => -size + beta * g.edges().map(|(u, v)| xf(u) * xf(v)).sum::<f64>(),
        Problem::Mcl => {
            let mut pen = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if !g.has_edge(i, j) {
                        pen += xf(i) * xf(j);
                    }
                }
            }
            -size + beta * pen
        }
        Problem::Mcut => -g
            .edges()
            .map(|(u, v)| (1.0 - (2.0 * xf(u) - 1.0) * (2.0 * xf(v) - 1.0)) / 2.0)
            .sum::<f64>(),
        Problem::Qubo => unimplemented!("qubo oracle is built per test"),
    }
}

/// Closed-form gradients evaluated with dense matrix-vector products.
pub fn dense_gradient(problem: Problem, a: &[Vec<f64>], beta: f64, x: &[u8]) -> Vec<f64> {
    let n = a.len();
    let xf: Vec<f64> = x.iter().map(|&b| b as f64).collect();
    let ax: Vec<f64> = (0..n)
        .map(|i| (0..n).map(|j| a[i][j] * xf[j]).sum())
        .collect();
    let s: f64 = xf.iter().sum();
    match problem {
        Problem::Mis => ax.iter().map(|v| -1.0 + beta * v).collect(),
        Problem::Mcl => (0..n).map(|i| -1.0 + beta * (s - xf[i] - ax[i])).collect(),
        Problem::Mcut => (0..n)
            .map(|i| (0..n).map(|j| a[i][j] * (2.0 * xf[j] - 1.0)).sum())
            .collect(),
        Problem::Qubo => unimplemented!(),
    }
}

pub fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.num_nodes())
        .map(|i| g.neighbors(i).iter().fold(0u64, |m, &j| m | (1 << j)))
        .collect()
}

/// Exhaustive optimum objective (set, clique or cut size) for `n <= 24`.
pub fn brute_force_optimum(problem: Problem, g: &Graph) -> u64 {
    let n = g.num_nodes();
    assert!(n <= 24);
    let adj = neighbor_masks(g);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = 0u64;
    for mask in 0u64..(1 << n) {
        let value = match problem {
            Problem::Mis => {
                if (0..n).any(|i| mask >> i & 1 == 1 && mask & adj[i] != 0) {
                    continue;
                }
                mask.count_ones() as u64
            }
            Problem::Mcl => {
                if (0..n).any(|i| mask >> i & 1 == 1 && (mask & !(1 << i)) & !adj[i] != 0) {
                    continue;
                }
                mask.count_ones() as u64
            }
            Problem::Mcut => edges
                .iter()
                .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
                .count() as u64,
            Problem::Qubo => unimplemented!(),
        };
        best = best.max(value);
    }
    best
}

/// A random small graph, ER or BA with equal odds.
pub fn random_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let seed = rng.gen();
    if rng.gen_bool(0.5) {
        generate_er(n, rng.gen_range(0.1..0.7), seed).unwrap()
    } else {
        generate_ba(n, rng.gen_range(1..n), seed).unwrap()
    }
}

pub fn random_bits<R: Rng>(rng: &mut R, n: usize) -> Vec<u8> {
    (0..n).map(|_| rng.gen_range(0..=1u8)).collect()
}
