use super::{apply_psi, require_convex, require_convex_wrt, BoundReport, ConvexMap, Preconditions};
use crate::error::Result;
use crate::functionals::{weighted_mean, Weights};
use crate::scalar::Scalar;
use crate::seqcore::{check_same_len, Seq, Witness};
use crate::tolerance::Tolerance;

/// Hermite-Hadamard-Fejér type sandwich for `t` in `T_a` and a non-decreasing
/// convex `psi`:
///
/// `γ ψ(a_{m+1}) + (1-γ) ψ(a_m) <= M_{n,p}(ψ(a)) <= λ ψ(a_1) + (1-λ) ψ(a_n)`
///
/// with `m = ⌊M_{n,p}(t)⌋_t`, `γ = (M_{n,p}(t) - t_m) / Δt_m` and
/// `λ = (t_n - M_{n,p}(t)) / (t_n - t_1)`. When `M_{n,p}(t) = t_n` the index is
/// clamped to `m = n - 1` with `γ = 1`.
pub fn hhf_bounds<T: Scalar, M: ConvexMap<T> + ?Sized>(
    a: &Seq<T>,
    t: &Witness<T>,
    p: &Weights<T>,
    psi: &M,
    tol: Tolerance<T>,
    pre: Preconditions,
) -> Result<BoundReport<T>> {
    check_same_len(a.len(), t.len())?;
    check_same_len(a.len(), p.len())?;
    if pre.verify() {
        require_convex_wrt("a", a, t, tol)?;
    }
    let (image, warning) = apply_psi(psi, a, tol)?;
    let n = a.len();
    let (t1, tn) = (t.first(), t.last());
    let mean_t = weighted_mean(t, p)?.max(t1).min(tn);

    let mut m = t.partition_point(|&ti| ti <= mean_t);
    let gamma = if m >= n {
        m = n - 1;
        T::one()
    } else {
        ((mean_t - t[m - 1]) / (t[m] - t[m - 1])).max(T::zero()).min(T::one())
    };
    let lambda = ((tn - mean_t) / (tn - t1)).max(T::zero()).min(T::one());

    let lower = gamma * image[m] + (T::one() - gamma) * image[m - 1];
    let upper = lambda * image[0] + (T::one() - lambda) * image[n - 1];
    let value = weighted_mean(&image, p)?;

    let mut report = BoundReport::finish(Some(lower), value, upper, tol, warning);
    report.m = Some(m);
    report.gamma_t = Some(gamma);
    report.lambda_t = Some(lambda);
    Ok(report)
}

/// One-sided bound for convex `a`:
/// `Σ p_i ψ(a_i) <= (Σ (n-i)/(n-1) p_i) ψ(a_1) + (Σ (i-1)/(n-1) p_i) ψ(a_n)`.
pub fn niezgoda_bound<T: Scalar, M: ConvexMap<T> + ?Sized>(
    a: &Seq<T>,
    p: &Weights<T>,
    psi: &M,
    tol: Tolerance<T>,
    pre: Preconditions,
) -> Result<BoundReport<T>> {
    check_same_len(a.len(), p.len())?;
    if pre.verify() {
        require_convex("a", a, tol)?;
    }
    let (image, warning) = apply_psi(psi, a, tol)?;
    let n = a.len();
    let span = T::from_index(n - 1);
    let mut head = T::zero();
    let mut tail = T::zero();
    for (i, &w) in p.iter().enumerate() {
        head += T::from_index(n - 1 - i) / span * w;
        tail += T::from_index(i) / span * w;
    }
    let value: T = p.iter().zip(&image).map(|(&w, &y)| w * y).sum();
    let upper = head * image[0] + tail * image[n - 1];
    Ok(BoundReport::finish(None, value, upper, tol, warning))
}

/// Two-sided bound for convex `a`: `Φ(m, m+1) <= Σ p_i ψ(a_i) <= Φ(1, n)` with
/// `m = ⌊(1/P_n) Σ i p_i⌋` (clamped to `n - 1`) and
/// `Φ(u, v) = (Σ (i-u)/(v-u) p_i) ψ(a_v) + (Σ (v-i)/(v-u) p_i) ψ(a_u)`.
pub fn cor2_bounds<T: Scalar, M: ConvexMap<T> + ?Sized>(
    a: &Seq<T>,
    p: &Weights<T>,
    psi: &M,
    tol: Tolerance<T>,
    pre: Preconditions,
) -> Result<BoundReport<T>> {
    check_same_len(a.len(), p.len())?;
    if pre.verify() {
        require_convex("a", a, tol)?;
    }
    let (image, warning) = apply_psi(psi, a, tol)?;
    let n = a.len();
    let positions: Vec<T> = (1..=n).map(T::from_index).collect();
    let centre = weighted_mean(&positions, p)?;
    let m = centre
        .floor()
        .to_usize()
        .unwrap_or(1)
        .clamp(1, n - 1);

    let phi = |u: usize, v: usize| {
        let (fu, fv) = (T::from_index(u), T::from_index(v));
        let width = fv - fu;
        let mut to_v = T::zero();
        let mut to_u = T::zero();
        for (pos, &w) in positions.iter().zip(p.iter()) {
            to_v += (*pos - fu) / width * w;
            to_u += (fv - *pos) / width * w;
        }
        to_v * image[v - 1] + to_u * image[u - 1]
    };

    let value: T = p.iter().zip(&image).map(|(&w, &y)| w * y).sum();
    let mut report = BoundReport::finish(Some(phi(m, m + 1)), value, phi(1, n), tol, warning);
    report.m = Some(m);
    report.gamma_t = Some((centre - T::from_index(m)).max(T::zero()).min(T::one()));
    report.lambda_t = Some((T::from_index(n) - centre) / T::from_index(n - 1));
    Ok(report)
}
