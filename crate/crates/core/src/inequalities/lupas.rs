use serde::Serialize;

use super::{require_convex, require_convex_wrt, Preconditions};
use crate::error::{Error, Result};
use crate::functionals::{cov_functional, weighted_mean, Weights};
use crate::scalar::Scalar;
use crate::seqcore::{check_same_len, Seq, Witness};
use crate::tolerance::Tolerance;

/// `lhs >= rhs` within `threshold`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LupasReport<T: Scalar = f64> {
    pub lhs: T,
    pub rhs: T,
    pub holds: bool,
    pub slack: T,
    pub threshold: T,
}

impl<T: Scalar> LupasReport<T> {
    fn new(lhs: T, rhs: T, tol: Tolerance<T>) -> Self {
        let slack = lhs - rhs;
        let threshold = tol.threshold(lhs.abs().max(rhs.abs()));
        Self {
            lhs,
            rhs,
            holds: slack >= -threshold,
            slack,
            threshold,
        }
    }

    /// Both sides agree within the threshold.
    pub fn is_equality(&self) -> bool {
        self.slack.abs() <= self.threshold
    }
}

/// `S(a, b) >= S(a, t) S(b, t) / S(t, t)` for `t` in `T_a ∩ T_b`.
pub fn lupas_check<T: Scalar>(
    a: &Seq<T>,
    b: &Seq<T>,
    t: &Witness<T>,
    p: &Weights<T>,
    tol: Tolerance<T>,
    pre: Preconditions,
) -> Result<LupasReport<T>> {
    check_same_len(a.len(), b.len())?;
    check_same_len(a.len(), t.len())?;
    check_same_len(a.len(), p.len())?;
    if pre.verify() {
        require_convex_wrt("a", a, t, tol)?;
        require_convex_wrt("b", b, t, tol)?;
    }
    let positive = p.iter().filter(|&&w| w > T::zero()).count();
    let stt = cov_functional(t, t, p)?;
    let second_moment = weighted_mean(&t.iter().map(|&x| x * x).collect::<Vec<_>>(), p)?;
    if positive < 2 || !(stt > tol.rel * second_moment) {
        return Err(Error::DegenerateWitness { value: stt.as_f64() });
    }
    let lhs = cov_functional(a, b, p)?;
    let rhs = cov_functional(a, t, p)? * cov_functional(b, t, p)? / stt;
    Ok(LupasReport::new(lhs, rhs, tol))
}

/// `Σ a_i b_i - (1/n) Σ a_i Σ b_i >= 12 / (n(n²-1)) Σ c_i a_i Σ c_i b_i` with
/// `c_i = i - (n+1)/2`, for convex `a` and `b`.
///
/// Both sides are `n` times those of [`lupas_check`] with `t = (1, ..., n)`
/// and uniform weights.
pub fn pecaric_check<T: Scalar>(
    a: &Seq<T>,
    b: &Seq<T>,
    tol: Tolerance<T>,
    pre: Preconditions,
) -> Result<LupasReport<T>> {
    check_same_len(a.len(), b.len())?;
    if pre.verify() {
        require_convex("a", a, tol)?;
        require_convex("b", b, tol)?;
    }
    let n = T::from_index(a.len());
    let center = (n + T::one()) / T::lit(2.0);
    let weight = |i: usize| T::from_index(i + 1) - center;
    let sum_ab: T = a.iter().zip(b.iter()).map(|(&x, &y)| x * y).sum();
    let sum_a: T = a.iter().copied().sum();
    let sum_b: T = b.iter().copied().sum();
    let moment_a: T = a.iter().enumerate().map(|(i, &x)| weight(i) * x).sum();
    let moment_b: T = b.iter().enumerate().map(|(i, &y)| weight(i) * y).sum();
    let lhs = sum_ab - sum_a * sum_b / n;
    let rhs = T::lit(12.0) / (n * (n * n - T::one())) * moment_a * moment_b;
    Ok(LupasReport::new(lhs, rhs, tol))
}
