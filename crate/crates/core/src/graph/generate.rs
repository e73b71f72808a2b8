use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Erdős–Rényi `G(n, p)`.
///
/// Pairs `(u, v)`, `u < v`, are visited in lexicographic order and each consumes
/// exactly one uniform variate from a ChaCha8 stream seeded with `seed`.
pub fn generate_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges)
}

/// Barabási–Albert preferential attachment.
///
/// Starts from `m` isolated nodes. Node `v = m, m+1, ..., n-1` then attaches to
/// `m` distinct earlier nodes drawn with probability proportional to degree
/// (uniformly for the first new node, when every degree is zero), giving
/// exactly `m * (n - m)` edges.
pub fn generate_ba(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if m < 1 || m >= n {
        return Err(Error::InvalidAttachment { m, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m * (n - m));
    // every edge endpoint appended once; uniform draws from it are degree-proportional
    let mut endpoints: Vec<usize> = Vec::with_capacity(2 * m * (n - m));
    let mut targets: Vec<usize> = Vec::with_capacity(m);

    for v in m..n {
        targets.clear();
        if endpoints.is_empty() {
            targets.extend(0..m);
        } else {
            while targets.len() < m {
                let t = endpoints[rng.gen_range(0..endpoints.len())];
                if !targets.contains(&t) {
                    targets.push(t);
                }
            }
        }
        for &t in &targets {
            edges.push((t, v));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    Graph::from_edge_list(n, edges)
}
