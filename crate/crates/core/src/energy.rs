//! Penalized energies for the supported problems.
//!
//! | problem | `H(x)`                                         | `∇H(x)`                                 |
//! |---------|------------------------------------------------|-----------------------------------------|
//! | MIS     | `-1ᵀx + β xᵀAx / 2`                            | `-1 + βAx`                              |
//! | MCl     | `-1ᵀx + β ((1ᵀx)² - xᵀx - xᵀAx) / 2`           | `-1 + β((1ᵀx)1 - x - Ax)`               |
//! | MCut    | `xᵀAx - 1ᵀAx`                                  | `A(2x - 1)`                             |
//! | QUBO    | `bᵀx + c xᵀAx`                                 | `b + 2cAx`                              |
//!
//! All four are multilinear on `{0,1}^N` (the adjacency has a zero diagonal),
//! so `Δ_i = (2x_i - 1) ∇H(x)_i` is exactly the energy decrease from flipping
//! coordinate `i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;
use crate::solution::Solution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    /// Maximum independent set.
    Mis,
    /// Maximum clique.
    Mcl,
    /// Maximum cut.
    Mcut,
    /// Generic quadratic unconstrained binary objective.
    Qubo,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Mis => "mis",
            Problem::Mcl => "mcl",
            Problem::Mcut => "mcut",
            Problem::Qubo => "qubo",
        }
    }

    pub fn is_constrained(self) -> bool {
        matches!(self, Problem::Mis | Problem::Mcl)
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mis" => Ok(Problem::Mis),
            "mcl" | "clique" => Ok(Problem::Mcl),
            "mcut" | "maxcut" => Ok(Problem::Mcut),
            "qubo" => Ok(Problem::Qubo),
            other => Err(invalid("problem", format!("unknown problem `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnergyModel<T> {
    problem: Problem,
    graph: Graph,
    beta: T,
    linear: Vec<T>,
    quad_scale: T,
    /// Per-entry weights aligned with `graph.adjacency()`; `None` means all ones.
    weights: Option<Vec<T>>,
}

impl<T: Scalar> EnergyModel<T> {
    /// Model for MIS, MCl or MCut. `beta` must exceed 1 for the constrained problems;
    /// it is carried but unused for MCut.
    pub fn new(problem: Problem, graph: Graph, beta: T) -> Result<Self> {
        match problem {
            Problem::Mis | Problem::Mcl if !(beta > T::one()) => {
                return Err(invalid(
                    "beta",
                    format!("must exceed 1 for {problem}, got {beta}"),
                ));
            }
            Problem::Mcut if !(beta > T::zero()) => {
                return Err(invalid("beta", format!("must be positive, got {beta}")));
            }
            Problem::Qubo => {
                return Err(Error::Unsupported(
                    "QUBO models are built with EnergyModel::qubo",
                ));
            }
            _ => {}
        }
        Ok(Self {
            problem,
            graph,
            beta,
            linear: Vec::new(),
            quad_scale: T::zero(),
            weights: None,
        })
    }

    pub fn mis(graph: Graph, beta: T) -> Result<Self> {
        Self::new(Problem::Mis, graph, beta)
    }

    pub fn mcl(graph: Graph, beta: T) -> Result<Self> {
        Self::new(Problem::Mcl, graph, beta)
    }

    pub fn mcut(graph: Graph) -> Self {
        Self::new(Problem::Mcut, graph, T::one()).expect("unit beta is valid for mcut")
    }

    /// `H(x) = bᵀx + c·xᵀAx` where `A` is the symmetric, zero-diagonal matrix whose
    /// sparsity pattern is `graph` and whose entries are `weights` (aligned with
    /// [`Graph::adjacency`]) or all ones.
    pub fn qubo(
        graph: Graph,
        linear: Vec<T>,
        quad_scale: T,
        weights: Option<Vec<T>>,
    ) -> Result<Self> {
        let n = graph.num_nodes();
        if linear.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: linear.len(),
            });
        }
        if let Some(w) = &weights {
            if w.len() != graph.adjacency().len() {
                return Err(invalid(
                    "weights",
                    format!(
                        "expected {} entries, got {}",
                        graph.adjacency().len(),
                        w.len()
                    ),
                ));
            }
            for u in 0..n {
                let start = graph.offsets()[u];
                for (k, &v) in graph.neighbors(u).iter().enumerate() {
                    let back = graph.offsets()[v] + graph.neighbors(v).binary_search(&u).unwrap();
                    if w[start + k] != w[back] {
                        return Err(invalid(
                            "weights",
                            format!("entry ({u}, {v}) is not symmetric"),
                        ));
                    }
                }
            }
        }
        Ok(Self {
            problem: Problem::Qubo,
            graph,
            beta: T::one(),
            linear,
            quad_scale,
            weights,
        })
    }

    /// The equivalent QUBO form: MIS is `b = -1, c = β/2`, MCut is `b = -A1, c = 1`.
    pub fn to_qubo(&self) -> Result<Self> {
        match self.problem {
            Problem::Mis => Self::qubo(
                self.graph.clone(),
                vec![-T::one(); self.num_nodes()],
                self.beta * T::half(),
                None,
            ),
            Problem::Mcut => Self::qubo(
                self.graph.clone(),
                (0..self.num_nodes())
                    .map(|i| -T::from_usize_lossy(self.graph.degree(i)))
                    .collect(),
                T::one(),
                None,
            ),
            Problem::Qubo => Ok(self.clone()),
            Problem::Mcl => Err(Error::Unsupported(
                "the clique penalty has a dense global term and no sparse QUBO form",
            )),
        }
    }

    #[inline]
    pub fn problem(&self) -> Problem {
        self.problem
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn beta(&self) -> T {
        self.beta
    }

    #[inline]
    pub fn num_nodes(&self) -> usize {
        self.graph.num_nodes()
    }

    pub fn linear(&self) -> &[T] {
        &self.linear
    }

    pub fn quad_scale(&self) -> T {
        self.quad_scale
    }

    pub fn check(&self, x: &Solution) -> Result<()> {
        if x.len() != self.num_nodes() {
            return Err(Error::LengthMismatch {
                expected: self.num_nodes(),
                found: x.len(),
            });
        }
        Ok(())
    }

    pub fn energy(&self, x: &Solution) -> Result<T> {
        self.check(x)?;
        Ok(self.energy_unchecked(x.as_slice()))
    }

    pub fn gradient(&self, x: &Solution) -> Result<Vec<T>> {
        self.check(x)?;
        let mut grad = vec![T::zero(); self.num_nodes()];
        self.energy_and_gradient_into(x.as_slice(), &mut grad);
        Ok(grad)
    }

    /// `Δ = (2x - 1) ⊙ ∇H(x)`; `Δ_i = H(x) - H(flip_i(x))`.
    pub fn delta(&self, x: &Solution) -> Result<Vec<T>> {
        self.check(x)?;
        let mut delta = vec![T::zero(); self.num_nodes()];
        self.energy_and_gradient_into(x.as_slice(), &mut delta);
        gradient_to_delta(x.as_slice(), &mut delta);
        Ok(delta)
    }

    /// Set size (MIS/MCl) or cut size (MCut). Constrained problems require a feasible `x`.
    pub fn objective(&self, x: &Solution) -> Result<u64> {
        self.check(x)?;
        match self.problem {
            Problem::Mis | Problem::Mcl => {
                let v = self.violation_unchecked(x.as_slice());
                if v > 0 {
                    return Err(Error::Infeasible(v));
                }
                Ok(x.count_ones() as u64)
            }
            Problem::Mcut => {
                let bits = x.as_slice();
                Ok(self
                    .graph
                    .edges()
                    .filter(|&(u, v)| bits[u] != bits[v])
                    .count() as u64)
            }
            Problem::Qubo => Err(Error::Unsupported(
                "QUBO models have no canonical objective",
            )),
        }
    }

    /// Selected adjacent pairs (MIS), selected non-adjacent pairs (MCl), zero otherwise.
    pub fn violation(&self, x: &Solution) -> Result<u64> {
        self.check(x)?;
        Ok(self.violation_unchecked(x.as_slice()))
    }

    fn violation_unchecked(&self, x: &[u8]) -> u64 {
        match self.problem {
            Problem::Mis => self.selected_edges(x) as u64,
            Problem::Mcl => {
                let s = x.iter().filter(|&&b| b == 1).count();
                (s * s.saturating_sub(1) / 2 - self.selected_edges(x)) as u64
            }
            Problem::Mcut | Problem::Qubo => 0,
        }
    }

    fn selected_edges(&self, x: &[u8]) -> usize {
        let twice: usize = (0..self.num_nodes())
            .filter(|&i| x[i] == 1)
            .map(|i| self.selected_neighbors(x, i))
            .sum();
        twice / 2
    }

    #[inline]
    fn selected_neighbors(&self, x: &[u8], i: usize) -> usize {
        self.graph.neighbors(i).iter().map(|&j| x[j] as usize).sum()
    }

    #[inline]
    fn weighted_neighbor_sum(&self, x: &[u8], i: usize) -> T {
        let start = self.graph.offsets()[i];
        match &self.weights {
            None => T::from_usize_lossy(self.selected_neighbors(x, i)),
            Some(w) => self
                .graph
                .neighbors(i)
                .iter()
                .enumerate()
                .filter(|&(_, &j)| x[j] == 1)
                .map(|(k, _)| w[start + k])
                .sum(),
        }
    }

    pub(crate) fn energy_unchecked(&self, x: &[u8]) -> T {
        let beta = self.beta;
        match self.problem {
            Problem::Mis => {
                let s = x.iter().filter(|&&b| b == 1).count();
                let edges = self.selected_edges(x);
                -T::from_usize_lossy(s) + beta * T::from_usize_lossy(edges)
            }
            Problem::Mcl => {
                let s = x.iter().filter(|&&b| b == 1).count();
                let non_edges = s * s.saturating_sub(1) / 2 - self.selected_edges(x);
                -T::from_usize_lossy(s) + beta * T::from_usize_lossy(non_edges)
            }
            Problem::Mcut => {
                let mut xax = 0usize;
                let mut one_ax = 0usize;
                for i in (0..self.num_nodes()).filter(|&i| x[i] == 1) {
                    xax += self.selected_neighbors(x, i);
                    one_ax += self.graph.degree(i);
                }
                T::from_usize_lossy(xax) - T::from_usize_lossy(one_ax)
            }
            Problem::Qubo => (0..self.num_nodes())
                .filter(|&i| x[i] == 1)
                .map(|i| self.linear[i] + self.quad_scale * self.weighted_neighbor_sum(x, i))
                .sum(),
        }
    }

    /// Writes `∇H(x)` into `grad` and returns `H(x)`, in one `O(N + |E|)` pass.
    pub(crate) fn energy_and_gradient_into(&self, x: &[u8], grad: &mut [T]) -> T {
        let n = self.num_nodes();
        debug_assert_eq!(x.len(), n);
        debug_assert_eq!(grad.len(), n);
        let beta = self.beta;
        match self.problem {
            Problem::Mis => {
                let mut s = 0usize;
                let mut xax = 0usize;
                for i in 0..n {
                    let c = self.selected_neighbors(x, i);
                    if x[i] == 1 {
                        s += 1;
                        xax += c;
                    }
                    grad[i] = beta * T::from_usize_lossy(c) - T::one();
                }
                beta * T::from_usize_lossy(xax / 2) - T::from_usize_lossy(s)
            }
            Problem::Mcl => {
                let s = x.iter().filter(|&&b| b == 1).count();
                let mut xax = 0usize;
                for i in 0..n {
                    let c = self.selected_neighbors(x, i);
                    let xi = x[i] as usize;
                    xax += xi * c;
                    grad[i] = beta * T::from_usize_lossy(s - xi - c) - T::one();
                }
                let non_edges = (s * s - s - xax) / 2;
                beta * T::from_usize_lossy(non_edges) - T::from_usize_lossy(s)
            }
            Problem::Mcut => {
                let mut xax = 0usize;
                let mut one_ax = 0usize;
                for i in 0..n {
                    let c = self.selected_neighbors(x, i);
                    let deg = self.graph.degree(i);
                    if x[i] == 1 {
                        xax += c;
                        one_ax += deg;
                    }
                    grad[i] = T::from_usize_lossy(2 * c) - T::from_usize_lossy(deg);
                }
                T::from_usize_lossy(xax) - T::from_usize_lossy(one_ax)
            }
            Problem::Qubo => {
                let c2 = self.quad_scale + self.quad_scale;
                let mut h = T::zero();
                for i in 0..n {
                    let l = self.weighted_neighbor_sum(x, i);
                    if x[i] == 1 {
                        h += self.linear[i] + self.quad_scale * l;
                    }
                    grad[i] = self.linear[i] + c2 * l;
                }
                h
            }
        }
    }
}

/// Turns a gradient into the flip-drop vector in place.
#[inline]
pub(crate) fn gradient_to_delta<T: Scalar>(x: &[u8], grad: &mut [T]) {
    for (g, &b) in grad.iter_mut().zip(x) {
        if b == 0 {
            *g = -*g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_edge_list(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn edge() -> Graph {
        Graph::from_edge_list(2, [(0, 1)]).unwrap()
    }

    fn sol(bits: &[u8]) -> Solution {
        Solution::new(bits.to_vec()).unwrap()
    }

    fn close(a: &[f64], b: &[f64]) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < 1e-12, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn energy_examples() {
        let mis = EnergyModel::mis(k3(), 1.02_f64).unwrap();
        assert_eq!(mis.energy(&sol(&[0, 0, 0])).unwrap(), 0.0);
        assert!((mis.energy(&sol(&[1, 1, 0])).unwrap() + 0.98).abs() < 1e-12);

        let cut = EnergyModel::<f64>::mcut(edge());
        assert_eq!(cut.energy(&sol(&[1, 0])).unwrap(), -1.0);

        let mcl = EnergyModel::mcl(p3(), 1.02_f64).unwrap();
        assert!((mcl.energy(&sol(&[1, 0, 1])).unwrap() + 0.98).abs() < 1e-12);
    }

    #[test]
    fn gradient_examples() {
        let mis = EnergyModel::mis(k3(), 1.02_f64).unwrap();
        close(
            &mis.gradient(&sol(&[1, 0, 0])).unwrap(),
            &[-1.0, 0.02, 0.02],
        );
        close(&mis.gradient(&sol(&[0, 0, 0])).unwrap(), &[-1.0; 3]);

        let cut = EnergyModel::<f64>::mcut(edge());
        close(&cut.gradient(&sol(&[0, 0])).unwrap(), &[-1.0, -1.0]);
    }

    #[test]
    fn delta_examples() {
        let mis = EnergyModel::mis(k3(), 1.02_f64).unwrap();
        close(&mis.delta(&sol(&[1, 0, 0])).unwrap(), &[-1.0, -0.02, -0.02]);

        let cut = EnergyModel::<f64>::mcut(edge());
        // flipping either endpoint destroys the cut: H goes from -1 to 0
        close(&cut.delta(&sol(&[1, 0])).unwrap(), &[-1.0, -1.0]);
    }

    #[test]
    fn objective_examples() {
        let mis = EnergyModel::mis(k3(), 1.02_f64).unwrap();
        assert_eq!(mis.objective(&sol(&[1, 0, 0])).unwrap(), 1);
        assert!(matches!(
            mis.objective(&sol(&[1, 1, 0])),
            Err(Error::Infeasible(1))
        ));

        let cut = EnergyModel::<f64>::mcut(edge());
        assert_eq!(cut.objective(&sol(&[1, 0])).unwrap(), 1);
        let cut = EnergyModel::<f64>::mcut(k3());
        assert_eq!(cut.objective(&sol(&[1, 1, 0])).unwrap(), 2);

        let q = EnergyModel::qubo(edge(), vec![1.0, 1.0], 1.0, None).unwrap();
        assert!(matches!(
            q.objective(&sol(&[1, 0])),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn violation_examples() {
        let mis = EnergyModel::mis(k3(), 1.02_f64).unwrap();
        assert_eq!(mis.violation(&sol(&[1, 1, 1])).unwrap(), 3);
        let mcl = EnergyModel::mcl(k3(), 1.02).unwrap();
        assert_eq!(mcl.violation(&sol(&[1, 1, 1])).unwrap(), 0);
        let mcl = EnergyModel::mcl(p3(), 1.02_f64).unwrap();
        assert_eq!(mcl.violation(&sol(&[1, 0, 1])).unwrap(), 1);
        let cut = EnergyModel::<f64>::mcut(k3());
        assert_eq!(cut.violation(&sol(&[1, 1, 1])).unwrap(), 0);
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let mis = EnergyModel::mis(k3(), 1.02_f64).unwrap();
        let short = sol(&[1, 0]);
        assert!(matches!(
            mis.energy(&short),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        ));
        assert!(mis.gradient(&short).is_err());
        assert!(mis.delta(&short).is_err());
        assert!(mis.objective(&short).is_err());
        assert!(mis.violation(&short).is_err());
    }

    #[test]
    fn rejects_small_beta() {
        assert!(EnergyModel::mis(k3(), 1.0).is_err());
        assert!(EnergyModel::mcl(k3(), 0.5).is_err());
        assert!(EnergyModel::new(Problem::Mcut, k3(), 1.02).is_ok());
        assert!(EnergyModel::new(Problem::Qubo, k3(), 1.02).is_err());
    }

    #[test]
    fn qubo_rejects_asymmetric_weights() {
        // adjacency of the single edge is [1, 0]: entry (0,1) then (1,0)
        assert!(EnergyModel::qubo(edge(), vec![0.0; 2], 1.0, Some(vec![1.0, 2.0])).is_err());
        assert!(EnergyModel::qubo(edge(), vec![0.0; 2], 1.0, Some(vec![2.0, 2.0])).is_ok());
        assert!(EnergyModel::qubo(edge(), vec![0.0; 3], 1.0, None).is_err());
    }

    #[test]
    fn qubo_forms_agree() {
        let g = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let mis = EnergyModel::mis(g.clone(), 1.3).unwrap();
        let cut = EnergyModel::<f64>::mcut(g);
        for model in [mis, cut] {
            let q = model.to_qubo().unwrap();
            for mask in 0..32u64 {
                let x = Solution::from_mask(mask, 5);
                assert!((model.energy(&x).unwrap() - q.energy(&x).unwrap()).abs() < 1e-12);
                close(&model.gradient(&x).unwrap(), &q.gradient(&x).unwrap());
            }
        }
    }

    #[test]
    fn problem_parsing() {
        assert_eq!("MIS".parse::<Problem>().unwrap(), Problem::Mis);
        assert_eq!("mcut".parse::<Problem>().unwrap(), Problem::Mcut);
        assert!("tsp".parse::<Problem>().is_err());
    }

    #[test]
    fn f32_models_agree_with_f64() {
        let g = p3();
        let a = EnergyModel::<f32>::mcl(g.clone(), 1.02).unwrap();
        let b = EnergyModel::<f64>::mcl(g, 1.02).unwrap();
        let x = sol(&[1, 1, 1]);
        assert!((a.energy(&x).unwrap() as f64 - b.energy(&x).unwrap()).abs() < 1e-6);
    }
}
