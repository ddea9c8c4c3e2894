//! Per-index characterizations of `t ∈ T_a` and finite-prefix diagnostics for
//! the asymptotic behaviour of bounded relative convex sequences.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::inequalities::{apply_psi, require_convex_wrt, ConvexMap, Preconditions};
use crate::scalar::{max_abs, Scalar};
use crate::seqcore::{check_same_len, is_convex_wrt, slopes, Seq, Witness};
use crate::tolerance::{CheckReport, Tolerance, Violation};

/// Three-point form: `a_i <= (Δt_i a_{i-1} + Δt_{i-1} a_{i+1}) / (Δt_i + Δt_{i-1})`
/// at every interior `i`. The slack is measured in units of `a`.
pub fn grv_check<T: Scalar>(a: &Seq<T>, t: &Witness<T>, tol: Tolerance<T>) -> Result<CheckReport<T>> {
    check_same_len(a.len(), t.len())?;
    let slacks = (1..a.len() - 1).map(|i| {
        let left = t[i] - t[i - 1];
        let right = t[i + 1] - t[i];
        let chord = (right * a[i - 1] + left * a[i + 1]) / (left + right);
        (Violation::Index(i + 1), chord - a[i])
    });
    Ok(CheckReport::from_slacks(slacks, max_abs(a.iter().copied()), tol))
}

/// For strictly increasing `a`: `Δ²a_i / Δa_i >= Δ²t_i / Δt_i` for `i <= n - 2`.
pub fn grv2_check<T: Scalar>(a: &Seq<T>, t: &Witness<T>, tol: Tolerance<T>) -> Result<CheckReport<T>> {
    check_same_len(a.len(), t.len())?;
    let da: Vec<T> = a.windows(2).map(|w| w[1] - w[0]).collect();
    if let Some(i) = da.iter().position(|&d| !(d > tol.abs)) {
        return Err(Error::NotStrictlyIncreasing { index: i + 1 });
    }
    let dt: Vec<T> = t.windows(2).map(|w| w[1] - w[0]).collect();
    let terms: Vec<(T, T)> = (0..da.len() - 1)
        .map(|i| ((da[i + 1] - da[i]) / da[i], (dt[i + 1] - dt[i]) / dt[i]))
        .collect();
    let scale = max_abs(terms.iter().flat_map(|&(x, y)| [x, y]));
    let slacks = terms
        .iter()
        .enumerate()
        .map(|(i, &(lhs, rhs))| (Violation::Index(i + 2), lhs - rhs));
    Ok(CheckReport::from_slacks(slacks, scale, tol))
}

/// `(t_n - t_m) a_l - (t_n - t_l) a_m + (t_m - t_l) a_n` for 1-based `l < m < n`.
pub fn determinant<T: Scalar>(a: &[T], t: &[T], l: usize, m: usize, n: usize) -> T {
    let (l, m, n) = (l - 1, m - 1, n - 1);
    (t[n] - t[m]) * a[l] - (t[n] - t[l]) * a[m] + (t[m] - t[l]) * a[n]
}

/// Which index triples [`determinant_all_triples`] scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum TripleMode {
    /// `(l, l+1, l+2)` only; O(n) and equivalent for the verdict.
    #[default]
    Consecutive,
    /// Every `l < m < n`; O(n³).
    All,
}

/// Sign test on the determinants of `(t_l, a_l, 1), (t_m, a_m, 1), (t_n, a_n, 1)`.
///
/// Each determinant is divided by `(t_m - t_l)(t_n - t_m)`, which turns it into
/// the difference of the chord slopes on `[t_m, t_n]` and `[t_l, t_m]`; the
/// margin and threshold are in those slope units. The first violation is the
/// lexicographically first bad triple.
pub fn determinant_all_triples<T: Scalar>(
    a: &Seq<T>,
    t: &Witness<T>,
    tol: Tolerance<T>,
    mode: TripleMode,
) -> Result<CheckReport<T>> {
    let scale = max_abs(slopes(a, t)?);
    let n = a.len();
    let normalized = |l: usize, m: usize, k: usize| {
        let d = determinant(a, t, l, m, k);
        (Violation::Triple(l, m, k), d / ((t[m - 1] - t[l - 1]) * (t[k - 1] - t[m - 1])))
    };
    let report = match mode {
        TripleMode::Consecutive => {
            CheckReport::from_slacks((1..n.saturating_sub(1)).map(|l| normalized(l, l + 1, l + 2)), scale, tol)
        }
        TripleMode::All => {
            let triples = (1..=n).flat_map(move |l| {
                (l + 1..=n).flat_map(move |m| (m + 1..=n).map(move |k| (l, m, k)))
            });
            CheckReport::from_slacks(triples.map(|(l, m, k)| normalized(l, m, k)), scale, tol)
        }
    };
    Ok(report)
}

/// Divided differences `(a_i - a_s) / (t_i - t_s)`, `i > s`, are non-decreasing.
/// `s` is 1-based with `1 <= s < n`.
pub fn slope_from_s_check<T: Scalar>(
    a: &Seq<T>,
    t: &Witness<T>,
    s: usize,
    tol: Tolerance<T>,
) -> Result<CheckReport<T>> {
    check_same_len(a.len(), t.len())?;
    let n = a.len();
    if s == 0 || s >= n {
        return Err(Error::IndexOutOfRange { index: s, len: n - 1 });
    }
    let anchor = s - 1;
    let d: Vec<T> = (s..n)
        .map(|i| (a[i] - a[anchor]) / (t[i] - t[anchor]))
        .collect();
    let slacks = d
        .windows(2)
        .enumerate()
        .map(|(k, w)| (Violation::Index(s + k + 2), w[1] - w[0]));
    Ok(CheckReport::from_slacks(slacks, max_abs(d.iter().copied()), tol))
}

/// Conjunction of [`slope_from_s_check`] over every anchor `s`. The margin is
/// the smallest over all anchors; the first violation comes from the first
/// failing anchor.
pub fn slope_from_all_anchors<T: Scalar>(
    a: &Seq<T>,
    t: &Witness<T>,
    tol: Tolerance<T>,
) -> Result<CheckReport<T>> {
    let mut combined = CheckReport::vacuous(tol);
    for s in 1..a.len() {
        let r = slope_from_s_check(a, t, s, tol)?;
        if combined.holds && !r.holds {
            combined.holds = false;
            combined.first_violation = r.first_violation;
            combined.threshold = r.threshold;
        }
        if r.margin < combined.margin {
            combined.margin = r.margin;
            if combined.holds {
                combined.threshold = r.threshold;
            }
        }
    }
    Ok(combined)
}

/// A non-decreasing convex `psi` keeps every member of `T_a` in `T_{ψ(a)}`:
/// reports `is_convex_wrt(ψ(a), t)`.
pub fn psi_preservation_check<T: Scalar, M: ConvexMap<T> + ?Sized>(
    a: &Seq<T>,
    t: &Witness<T>,
    psi: &M,
    tol: Tolerance<T>,
    pre: Preconditions,
) -> Result<CheckReport<T>> {
    if pre.verify() {
        require_convex_wrt("a", a, t, tol)?;
    }
    let (image, _) = apply_psi(psi, a, tol)?;
    is_convex_wrt(&Seq::new(image)?, t, tol)
}

fn require_min_gap<T: Scalar>(t: &Witness<T>, alpha: T) -> Result<()> {
    if !(alpha > T::zero()) {
        return Err(Error::Precondition(format!("alpha must be positive, got {alpha}")));
    }
    if let Some(i) = t.windows(2).position(|w| !(w[1] - w[0] >= alpha)) {
        return Err(Error::NotApplicable(format!(
            "Δt_{} = {} is below alpha = {alpha}; the witness may converge",
            i + 1,
            t[i + 1] - t[i]
        )));
    }
    Ok(())
}

/// Finite-prefix form of the dichotomy for bounded-above relative convex
/// sequences: when the witness steps stay at least `alpha` apart, the sequence
/// must be non-increasing. Holds when every `Δa_i <= 0` within `tol`.
///
/// Fails with [`Error::NotApplicable`] when some `Δt_i < alpha`.
pub fn bounded_monotone_diagnostic<T: Scalar>(
    a: &Seq<T>,
    t: &Witness<T>,
    bound: T,
    alpha: T,
    tol: Tolerance<T>,
    pre: Preconditions,
) -> Result<CheckReport<T>> {
    check_same_len(a.len(), t.len())?;
    require_min_gap(t, alpha)?;
    let scale = max_abs(a.iter().copied());
    if pre.verify() {
        require_convex_wrt("a", a, t, tol)?;
        if let Some(i) = a.iter().position(|&x| x > bound + tol.threshold(scale)) {
            return Err(Error::Precondition(format!(
                "a_{} = {} exceeds the bound {bound}",
                i + 1,
                a[i]
            )));
        }
    }
    let slacks = a
        .windows(2)
        .enumerate()
        .map(|(i, w)| (Violation::Index(i + 2), w[0] - w[1]));
    Ok(CheckReport::from_slacks(slacks, scale, tol))
}

/// Prefix data for the decay of `n Δa_n / Δt_n` and the partial sums of
/// `n Δ(Δa_n / Δt_n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateReport<T: Scalar = f64> {
    /// `terms[k] = (k+1) Δa_{k+1} / Δt_{k+1}`, for `n = 1..N-1`.
    pub terms: Vec<T>,
    /// `partial_sums[k] = Σ_{j<=k+1} j (r_{j+1} - r_j)` with `r_j = Δa_j / Δt_j`.
    pub partial_sums: Vec<T>,
    /// `max |terms_n|` over `n >= tail_start`.
    pub max_tail: T,
    /// First 1-based term index of the final quarter, `⌈3N/4⌉`.
    pub tail_start: usize,
}

impl<T: Scalar> RateReport<T> {
    pub fn decays_below(&self, threshold: T) -> bool {
        self.max_tail <= threshold
    }

    /// Increments of the partial sums shrink in magnitude.
    pub fn increments_shrink(&self) -> bool {
        let inc: Vec<T> = std::iter::once(self.partial_sums.first().copied().unwrap_or(T::zero()))
            .chain(self.partial_sums.windows(2).map(|w| w[1] - w[0]))
            .collect();
        inc.windows(2).all(|w| w[1].abs() <= w[0].abs())
    }
}

fn tail_start(points: usize) -> usize {
    (3 * points).div_ceil(4).min(points.saturating_sub(1)).max(1)
}

/// Default decay threshold: 1.5 times the reference tail `max_{n >= ⌈3N/4⌉} 1/(n+1)`
/// of `a_n = -1/n, t_n = n` over a prefix of `points` terms.
pub fn reference_decay_threshold(points: usize) -> f64 {
    1.5 / (tail_start(points) as f64 + 1.0)
}

/// Computes [`RateReport`] for a relative convex, non-increasing prefix whose
/// witness steps are at least `alpha`.
pub fn rate_diagnostic<T: Scalar>(
    a: &Seq<T>,
    t: &Witness<T>,
    alpha: T,
    tol: Tolerance<T>,
    pre: Preconditions,
) -> Result<RateReport<T>> {
    check_same_len(a.len(), t.len())?;
    if pre.verify() {
        require_min_gap(t, alpha)?;
        require_convex_wrt("a", a, t, tol)?;
        let scale = max_abs(a.iter().copied());
        if let Some(i) = a.windows(2).position(|w| w[1] - w[0] > tol.threshold(scale)) {
            return Err(Error::Precondition(format!(
                "a is not non-increasing (a_{} > a_{})",
                i + 2,
                i + 1
            )));
        }
    }
    let r = slopes(a, t)?;
    let terms: Vec<T> = r
        .iter()
        .enumerate()
        .map(|(k, &x)| T::from_index(k + 1) * x)
        .collect();
    let mut partial_sums = Vec::with_capacity(r.len().saturating_sub(1));
    let mut acc = T::zero();
    for (k, w) in r.windows(2).enumerate() {
        acc += T::from_index(k + 1) * (w[1] - w[0]);
        partial_sums.push(acc);
    }
    let start = tail_start(a.len());
    let max_tail = max_abs(terms[start - 1..].iter().copied());
    Ok(RateReport {
        terms,
        partial_sums,
        max_tail,
        tail_start: start,
    })
}
