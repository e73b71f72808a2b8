//! Per-coordinate flip probabilities.
//!
//! Both the regularized rule and the constant-step Langevin rule are the same
//! sigmoid with a different threshold on the flip-drop vector:
//!
//! ```text
//! p_i = σ((Δ_i - θ) / 2τ)      θ = Δ_(d) - ε   (regularized)
//!                              θ = τ / α       (Langevin, step size α)
//! ```

use crate::error::{invalid, Error, Result};
use crate::scalar::{sigmoid, Scalar};
use crate::solution::Solution;

/// `σ((delta - threshold) / 2τ)`.
#[inline]
pub fn threshold_flip_probability<T: Scalar>(delta: T, threshold: T, tau: T) -> T {
    sigmoid((delta - threshold) / (tau + tau))
}

/// The `d`-th largest entry of `values` (1-based, duplicates occupy consecutive ranks).
pub fn kth_largest<T: Scalar>(values: &[T], d: usize) -> Result<T> {
    if d == 0 || d > values.len() {
        return Err(Error::RankOutOfRange {
            d,
            len: values.len(),
        });
    }
    let mut scratch = values.to_vec();
    Ok(select_descending(&mut scratch, d))
}

/// Expected linear-time selection; reorders `scratch`.
#[inline]
pub(crate) fn select_descending<T: Scalar>(scratch: &mut [T], d: usize) -> T {
    let (_, kth, _) = scratch.select_nth_unstable_by(d - 1, |a, b| {
        b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal)
    });
    *kth
}

fn check_tau<T: Scalar>(tau: T) -> Result<()> {
    if tau > T::zero() {
        Ok(())
    } else {
        Err(invalid(
            "tau",
            format!("temperature must be positive, got {tau}"),
        ))
    }
}

/// Regularized flip probabilities `σ((Δ_i - Δ_(d) + ε) / 2τ)`.
pub fn flip_probabilities<T: Scalar>(delta: &[T], dth: T, epsilon: T, tau: T) -> Result<Vec<T>> {
    check_tau(tau)?;
    let threshold = dth - epsilon;
    Ok(delta
        .iter()
        .map(|&d| threshold_flip_probability(d, threshold, tau))
        .collect())
}

/// Constant-step discrete Langevin probabilities `σ(Δ_i / 2τ - 1 / 2α)`.
pub fn ld_flip_probabilities<T: Scalar>(delta: &[T], alpha: T, tau: T) -> Result<Vec<T>> {
    check_tau(tau)?;
    if !(alpha > T::zero()) {
        return Err(invalid(
            "alpha",
            format!("step size must be positive, got {alpha}"),
        ));
    }
    let threshold = tau / alpha;
    Ok(delta
        .iter()
        .map(|&d| threshold_flip_probability(d, threshold, tau))
        .collect())
}

/// Normalized-sigmoid kernel: `p̃_i = d σ(½ s_i (1 - 2x_i)) / Σ_j σ(½ s_j (1 - 2x_j))`,
/// clamped to `[0, 1]`. `score` is the EBM score `-∇H / τ`.
pub fn normalized_flip_probabilities<T: Scalar>(
    score: &[T],
    x: &Solution,
    d: usize,
) -> Result<Vec<T>> {
    if score.len() != x.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: score.len(),
        });
    }
    let mut out: Vec<T> = score
        .iter()
        .zip(x.as_slice())
        .map(|(&s, &b)| sigmoid(T::half() * if b == 1 { -s } else { s }))
        .collect();
    normalize_in_place(&mut out, d);
    Ok(out)
}

pub(crate) fn normalize_in_place<T: Scalar>(weights: &mut [T], d: usize) {
    let total: T = weights.iter().copied().sum();
    if !(total > T::zero()) {
        return;
    }
    let scale = T::from_usize_lossy(d) / total;
    for w in weights.iter_mut() {
        *w = (*w * scale).max(T::zero()).min(T::one());
    }
}

/// How a sampler turns the flip-drop vector into flip probabilities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FlipRule<T> {
    /// Threshold at the `d`-th largest drop, offset by `epsilon`.
    Regularized { d: usize, epsilon: T },
    /// Sigmoid of the score, rescaled so the probabilities sum to about `d`.
    Normalized { d: usize },
    /// Unregularized discrete Langevin with constant step size.
    Langevin { alpha: T },
}

impl<T: Scalar> FlipRule<T> {
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            FlipRule::Regularized { d, epsilon } => {
                check_rank(d, n)?;
                if !(epsilon >= T::zero()) {
                    return Err(invalid(
                        "epsilon",
                        format!("must be non-negative, got {epsilon}"),
                    ));
                }
            }
            FlipRule::Normalized { d } => check_rank(d, n)?,
            FlipRule::Langevin { alpha } => {
                if !(alpha > T::zero()) {
                    return Err(invalid(
                        "alpha",
                        format!("step size must be positive, got {alpha}"),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Overwrites `delta` with flip probabilities. `scratch` must have the same length.
    pub(crate) fn apply_in_place(&self, delta: &mut [T], tau: T, scratch: &mut [T]) {
        let threshold = match *self {
            FlipRule::Regularized { d, epsilon } => {
                scratch.copy_from_slice(delta);
                select_descending(scratch, d) - epsilon
            }
            FlipRule::Langevin { alpha } => tau / alpha,
            FlipRule::Normalized { d } => {
                // ½ s_i (1 - 2x_i) = Δ_i / 2τ
                for v in delta.iter_mut() {
                    *v = sigmoid(*v / (tau + tau));
                }
                normalize_in_place(delta, d);
                return;
            }
        };
        for v in delta.iter_mut() {
            *v = threshold_flip_probability(*v, threshold, tau);
        }
    }
}

fn check_rank(d: usize, n: usize) -> Result<()> {
    if d == 0 || d > n {
        Err(Error::RankOutOfRange { d, len: n })
    } else {
        Ok(())
    }
}
