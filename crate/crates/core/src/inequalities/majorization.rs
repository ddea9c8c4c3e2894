use serde::Serialize;

use super::{require_convex, require_convex_wrt, Preconditions};
use crate::error::{Error, Result};
use crate::functionals::majorizes;
use crate::polyext::Extension;
use crate::scalar::Scalar;
use crate::seqcore::{check_same_len, Seq, Witness};
use crate::tolerance::{CheckReport, Tolerance, Violation};

/// Sides of a majorization inequality `lhs <= rhs`.
///
/// `sum_p` and `sum_q` are `Σ a_t*(p_i)` and `Σ a_t*(q_i)` assembled from the
/// same floor/fractional-part terms, so `rhs - lhs = sum_q - sum_p`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MajorizationReport<T: Scalar = f64> {
    pub lhs: T,
    pub rhs: T,
    pub sum_p: T,
    pub sum_q: T,
    pub check: CheckReport<T>,
}

impl<T: Scalar> MajorizationReport<T> {
    fn new(lhs: T, rhs: T, sum_p: T, sum_q: T, tol: Tolerance<T>) -> Self {
        let scale = sum_p.abs().max(sum_q.abs());
        let check = CheckReport::from_slacks([(Violation::Aggregate, rhs - lhs)], scale, tol);
        Self {
            lhs,
            rhs,
            sum_p,
            sum_q,
            check,
        }
    }

    pub fn holds(&self) -> bool {
        self.check.holds
    }
}

/// For `t` in `T_a` and `p ≺ q` in `[t_1, t_n]^k`:
///
/// `Σ (a_{⌊p_i⌋_t} - a_{⌊q_i⌋_t}) <= Σ ({q_i}_t r_{⌊q_i⌋_t} - {p_i}_t r_{⌊p_i⌋_t})`
///
/// where `r_j = Δa_j / Δt_j` (taken as zero at `j = n`, where the fractional
/// part vanishes).
pub fn majorization_inequality_check<T: Scalar>(
    a: &Seq<T>,
    t: &Witness<T>,
    pvec: &[T],
    qvec: &[T],
    tol: Tolerance<T>,
    pre: Preconditions,
) -> Result<MajorizationReport<T>> {
    check_same_len(a.len(), t.len())?;
    check_same_len(pvec.len(), qvec.len())?;
    if pre.verify() {
        require_convex_wrt("a", a, t, tol)?;
        if !majorizes(pvec, qvec, tol)? {
            return Err(Error::Precondition("pvec is not majorized by qvec".into()));
        }
    }
    let ext = Extension::new(a, t)?.with_domain_slack(tol.abs);
    let term = |x: T| -> Result<(T, T)> {
        let k = ext.floor(x).map_err(|e| match e {
            Error::OutOfDomain { .. } if pre.verify() => {
                Error::Precondition(format!("{x} lies outside [t_1, t_n]"))
            }
            other => other,
        })?;
        let slope = ext.slopes().get(k - 1).copied().unwrap_or(T::zero());
        Ok((a[k - 1], ext.frac(x)? * slope))
    };

    let (mut lhs, mut rhs) = (T::zero(), T::zero());
    let (mut sum_p, mut sum_q) = (T::zero(), T::zero());
    for (&p, &q) in pvec.iter().zip(qvec) {
        let (ap, dp) = term(p)?;
        let (aq, dq) = term(q)?;
        lhs += ap - aq;
        rhs += dq - dp;
        sum_p += ap + dp;
        sum_q += aq + dq;
    }
    Ok(MajorizationReport::new(lhs, rhs, sum_p, sum_q, tol))
}

/// For convex `a` and integer positions `pidx ≺ qidx` (1-based):
/// `Σ a_{pidx_i} <= Σ a_{qidx_i}`.
pub fn integer_majorization_check<T: Scalar>(
    a: &Seq<T>,
    pidx: &[usize],
    qidx: &[usize],
    tol: Tolerance<T>,
    pre: Preconditions,
) -> Result<MajorizationReport<T>> {
    check_same_len(pidx.len(), qidx.len())?;
    let n = a.len();
    if let Some(&bad) = pidx.iter().chain(qidx).find(|&&i| i == 0 || i > n) {
        return Err(Error::IndexOutOfRange { index: bad, len: n });
    }
    if pre.verify() {
        require_convex("a", a, tol)?;
        let as_real = |v: &[usize]| v.iter().map(|&i| T::from_index(i)).collect::<Vec<T>>();
        if !majorizes(&as_real(pidx), &as_real(qidx), Tolerance::exact())? {
            return Err(Error::Precondition("pidx is not majorized by qidx".into()));
        }
    }
    let sum_p: T = pidx.iter().map(|&i| a[i - 1]).sum();
    let sum_q: T = qidx.iter().map(|&i| a[i - 1]).sum();
    Ok(MajorizationReport::new(sum_p, sum_q, sum_p, sum_q, tol))
}
