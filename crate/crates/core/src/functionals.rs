//! Weighted mean `M_{n,p}`, the covariance-type functional `S_{n,p}`, the
//! constant `K_n(t)` and the majorization preorder.

use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::seqcore::{check_same_len, Witness};
use crate::tolerance::Tolerance;

/// Non-negative weights with positive total `P_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Weights<T: Scalar = f64>(Vec<T>);

impl<T: Scalar> Weights<T> {
    pub fn new(weights: Vec<T>) -> Result<Self> {
        for (i, &w) in weights.iter().enumerate() {
            if !w.is_finite() {
                return Err(Error::NonFinite { index: i + 1 });
            }
            if w < T::zero() {
                return Err(Error::NegativeWeight { index: i + 1 });
            }
        }
        if !(weights.iter().copied().sum::<T>() > T::zero()) {
            return Err(Error::ZeroTotalWeight);
        }
        Ok(Self(weights))
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Self::new(vec![T::one(); n])
    }

    /// Unit mass at the 1-based position `k`.
    pub fn point_mass(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, len: n });
        }
        let mut w = vec![T::zero(); n];
        w[k - 1] = T::one();
        Self::new(w)
    }

    /// `P_n`.
    pub fn total(&self) -> T {
        self.0.iter().copied().sum()
    }

    /// `p_i = p_{n+1-i}` within `tol`.
    pub fn is_symmetric(&self, tol: Tolerance<T>) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| {
            let (x, y) = (self.0[i], self.0[n - 1 - i]);
            (x - y).abs() <= tol.threshold(x.abs().max(y.abs()))
        })
    }
}

impl<T: Scalar> Deref for Weights<T> {
    type Target = [T];
    fn deref(&self) -> &[T] {
        &self.0
    }
}

/// `M_{n,p}(x) = (1 / P_n) Σ p_i x_i`.
pub fn weighted_mean<T: Scalar>(x: &[T], p: &Weights<T>) -> Result<T> {
    check_same_len(x.len(), p.len())?;
    let total = p.total();
    let sum: T = x.iter().zip(p.iter()).map(|(&xi, &pi)| pi * xi).sum();
    Ok(sum / total)
}

/// `S_{n,p}(x, y) = M_{n,p}(xy) - M_{n,p}(x) M_{n,p}(y)`.
///
/// Evaluated in the centered form `M_{n,p}((x - M(x))(y - M(y)))`, which is
/// algebraically identical and avoids cancellation.
pub fn cov_functional<T: Scalar>(x: &[T], y: &[T], p: &Weights<T>) -> Result<T> {
    check_same_len(x.len(), y.len())?;
    let mx = weighted_mean(x, p)?;
    let my = weighted_mean(y, p)?;
    let sum: T = x
        .iter()
        .zip(y)
        .zip(p.iter())
        .map(|((&xi, &yi), &pi)| pi * (xi - mx) * (yi - my))
        .sum();
    Ok(sum / p.total())
}

/// `K_n(t) = 1 / (Σ t_i² - (Σ t_i)² / n)`, computed as the reciprocal of the
/// centered sum of squares.
pub fn lupas_constant<T: Scalar>(t: &Witness<T>) -> Result<T> {
    let n = T::from_index(t.len());
    let mean = t.iter().copied().sum::<T>() / n;
    let centered: T = t.iter().map(|&ti| (ti - mean) * (ti - mean)).sum();
    if !(centered > T::zero()) {
        return Err(Error::DegenerateWitness {
            value: centered.as_f64(),
        });
    }
    Ok(T::one() / centered)
}

fn sorted_decreasing<T: Scalar>(v: &[T]) -> Vec<T> {
    let mut s = v.to_vec();
    // stable: ties keep their original order
    s.sort_by(|a, b| b.partial_cmp(a).expect("finite values"));
    s
}

/// `x ≺ y`: `y` majorizes `x`.
///
/// Decreasing-order prefix sums of `x` are bounded by those of `y`, and the
/// totals agree, all within `tol.abs + tol.rel * Σ|y_i|`.
pub fn majorizes<T: Scalar>(x: &[T], y: &[T], tol: Tolerance<T>) -> Result<bool> {
    check_same_len(x.len(), y.len())?;
    if x.is_empty() {
        return Err(Error::Length { min: 1, got: 0 });
    }
    if let Some(i) = x.iter().chain(y).position(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            index: i % x.len() + 1,
        });
    }
    let threshold = tol.threshold(y.iter().map(|v| v.abs()).sum());
    let (xs, ys) = (sorted_decreasing(x), sorted_decreasing(y));
    let (mut px, mut py) = (T::zero(), T::zero());
    for (a, b) in xs.iter().zip(&ys) {
        px += *a;
        py += *b;
        if px > py + threshold {
            return Ok(false);
        }
    }
    Ok((px - py).abs() <= threshold)
}
