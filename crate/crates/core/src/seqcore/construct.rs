use super::shape::{classify_shape, steps, StepKind};
use super::{Seq, Witness};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// Builds a witness from a slope schedule.
///
/// `t_1 = t1` and, for each step, `t_{i+1} = t_i + (a_{i+1} - a_i) / s_k` where
/// `s_k` is the next unused schedule entry; plateau steps (|Δa| within
/// `tol.abs`) consume no entry and advance by `plateau_step`. The schedule must
/// be strictly increasing, negative on descending steps and positive on
/// ascending ones, so the slopes of `a` against the result are exactly the
/// schedule with zeros spliced in at the plateau.
pub fn construct_witness<T: Scalar>(
    a: &Seq<T>,
    schedule: &[T],
    t1: T,
    plateau_step: T,
    tol: Tolerance<T>,
) -> Result<Witness<T>> {
    if !classify_shape(a, tol).variant.is_v_shaped() {
        return Err(Error::NotStrictlyVShaped);
    }
    if !(plateau_step > T::zero()) || !plateau_step.is_finite() {
        return Err(Error::Precondition(format!(
            "plateau step must be positive, got {plateau_step}"
        )));
    }
    if !t1.is_finite() {
        return Err(Error::NonFinite { index: 1 });
    }
    let kinds = steps(a, tol);
    let expected = kinds.iter().filter(|&&k| k != StepKind::Flat).count();
    if schedule.len() != expected {
        return Err(Error::ScheduleLength {
            expected,
            got: schedule.len(),
        });
    }
    if let Some(i) = schedule.windows(2).position(|w| !(w[1] > w[0])) {
        return Err(Error::NotMonotone { index: i + 2 });
    }

    let mut t = Vec::with_capacity(a.len());
    t.push(t1);
    let mut next = schedule.iter().copied().enumerate();
    for (w, kind) in a.windows(2).zip(&kinds) {
        let prev = *t.last().unwrap();
        let step = match kind {
            StepKind::Flat => plateau_step,
            StepKind::Down | StepKind::Up => {
                let (k, s) = next.next().expect("schedule length checked");
                let ok = match kind {
                    StepKind::Down => s < T::zero(),
                    _ => s > T::zero(),
                };
                if !ok {
                    return Err(Error::Sign { index: k + 1 });
                }
                (w[1] - w[0]) / s
            }
        };
        t.push(prev + step);
    }
    Witness::new(t)
}

/// Builds a witness that subdivides `[alpha, beta]`: `t_1 = alpha` and
/// `t_n = beta` exactly.
///
/// The monotone runs of `a` (descent, plateau, ascent) get equal shares of the
/// interval. Ascending runs use the recursive slope construction with each
/// free slope taken at the midpoint of its admissible interval; descending
/// runs are handled by reflecting `x -> -x`; plateaus are subdivided
/// uniformly.
pub fn construct_witness_on_interval<T: Scalar>(
    a: &Seq<T>,
    alpha: T,
    beta: T,
    tol: Tolerance<T>,
) -> Result<Witness<T>> {
    if !(alpha < beta) || !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::Interval {
            alpha: alpha.as_f64(),
            beta: beta.as_f64(),
        });
    }
    if !classify_shape(a, tol).variant.is_v_shaped() {
        return Err(Error::NotStrictlyVShaped);
    }

    // Split the point indices into maximal runs of equal step kind.
    let kinds = steps(a, tol);
    let mut runs: Vec<(usize, usize, StepKind)> = Vec::new();
    for (i, &k) in kinds.iter().enumerate() {
        match runs.last_mut() {
            Some(run) if run.2 == k => run.1 = i + 1,
            _ => runs.push((i, i + 1, k)),
        }
    }

    let parts = T::from_index(runs.len());
    let junction = |k: usize| {
        if k == runs.len() {
            beta
        } else {
            alpha + (beta - alpha) * T::from_index(k) / parts
        }
    };

    let mut t = vec![alpha];
    for (k, &(start, end, kind)) in runs.iter().enumerate() {
        let (lo, hi) = (junction(k), junction(k + 1));
        let piece = &a[start..=end];
        let sub = match kind {
            StepKind::Up => ascending_subdivision(piece, lo, hi),
            StepKind::Down => descending_subdivision(piece, lo, hi),
            StepKind::Flat => uniform_subdivision(piece.len(), lo, hi),
        };
        t.extend_from_slice(&sub[1..]);
    }
    Witness::new(t)
}

fn uniform_subdivision<T: Scalar>(n: usize, lo: T, hi: T) -> Vec<T> {
    let last = T::from_index(n - 1);
    let mut t: Vec<T> = (0..n)
        .map(|k| lo + (hi - lo) * T::from_index(k) / last)
        .collect();
    t[n - 1] = hi;
    t
}

/// Strictly increasing `a` on `[lo, hi]`.
///
/// At step `i` with remaining span `L = hi - t_i` and rise `R = a_n - a_i`,
/// the slope must lie in `(s_{i-1}, R / L)` so that later slopes can still
/// exceed it, and above `Δa_i / L` so that `t_{i+1}` stays below `hi`. The
/// midpoint of `(s_{i-1}, R / L)` is used when it clears `Δa_i / L`, otherwise
/// the midpoint of `(max(s_{i-1}, Δa_i / L), R / L)`.
fn ascending_subdivision<T: Scalar>(a: &[T], lo: T, hi: T) -> Vec<T> {
    let n = a.len();
    let two = T::lit(2.0);
    let mut t = Vec::with_capacity(n);
    t.push(lo);
    let mut prev_slope = T::zero();
    for i in 0..n.saturating_sub(2) {
        let span = hi - t[i];
        let rise = a[n - 1] - a[i];
        let step = a[i + 1] - a[i];
        let cap = rise / span;
        let mut s = (prev_slope + cap) / two;
        if !(step / s < span) {
            s = (prev_slope.max(step / span) + cap) / two;
        }
        t.push(t[i] + step / s);
        prev_slope = s;
    }
    t.push(hi);
    t
}

fn descending_subdivision<T: Scalar>(a: &[T], lo: T, hi: T) -> Vec<T> {
    let mirrored: Vec<T> = a.iter().rev().copied().collect();
    ascending_subdivision(&mirrored, -hi, -lo)
        .into_iter()
        .rev()
        .map(|u| -u)
        .collect()
}
