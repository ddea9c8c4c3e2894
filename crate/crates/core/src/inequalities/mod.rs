//! Compute-and-verify engines for the discrete inequalities satisfied by
//! relative convex sequences: the Lupas-type covariance bound, its uniform
//! weight form for convex sequences, the Hermite-Hadamard-Fejér type sandwich
//! and its special cases, and the majorization inequalities.

mod hhf;
mod lupas;
mod majorization;
mod psi;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::seqcore::{is_convex, is_convex_wrt, Seq, Witness};
use crate::tolerance::{CheckReport, Tolerance};

pub use hhf::{cor2_bounds, hhf_bounds, niezgoda_bound};
pub use lupas::{lupas_check, pecaric_check, LupasReport};
pub use majorization::{integer_majorization_check, majorization_inequality_check, MajorizationReport};
pub use psi::{spot_check, ConvexMap, Psi};

/// Whether an engine verifies its hypotheses before computing.
///
/// `Skip` is for exploring the converse directions with inputs that violate
/// the hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Preconditions {
    #[default]
    Verify,
    Skip,
}

impl Preconditions {
    pub fn verify(self) -> bool {
        self == Preconditions::Verify
    }
}

/// A two-sided (or upper-only) bound on a weighted sum of `psi(a_i)`.
///
/// `m`, `gamma_t` and `lambda_t` are the interpolation data of the sandwich;
/// they are `None` for bounds that do not use them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport<T: Scalar = f64> {
    pub lower: Option<T>,
    pub value: T,
    pub upper: T,
    pub m: Option<usize>,
    pub gamma_t: Option<T>,
    pub lambda_t: Option<T>,
    pub holds: bool,
    pub slack_lower: Option<T>,
    pub slack_upper: T,
    pub threshold: T,
    pub psi_warning: Option<String>,
}

impl<T: Scalar> BoundReport<T> {
    pub(crate) fn finish(
        lower: Option<T>,
        value: T,
        upper: T,
        tol: Tolerance<T>,
        psi_warning: Option<String>,
    ) -> Self {
        let scale = lower
            .unwrap_or(T::zero())
            .abs()
            .max(value.abs())
            .max(upper.abs());
        let threshold = tol.threshold(scale);
        let slack_lower = lower.map(|l| value - l);
        let slack_upper = upper - value;
        let holds = slack_lower.is_none_or(|s| s >= -threshold) && slack_upper >= -threshold;
        Self {
            lower,
            value,
            upper,
            m: None,
            gamma_t: None,
            lambda_t: None,
            holds,
            slack_lower,
            slack_upper,
            threshold,
            psi_warning,
        }
    }
}

pub(crate) fn require_convex_wrt<T: Scalar>(
    name: &str,
    a: &Seq<T>,
    t: &Witness<T>,
    tol: Tolerance<T>,
) -> Result<()> {
    let r = is_convex_wrt(a, t, tol)?;
    require(name, "convex w.r.t. t", &r)
}

pub(crate) fn require_convex<T: Scalar>(name: &str, a: &Seq<T>, tol: Tolerance<T>) -> Result<()> {
    require(name, "convex", &is_convex(a, tol))
}

fn require<T: Scalar>(name: &str, what: &str, r: &CheckReport<T>) -> Result<()> {
    if r.holds {
        return Ok(());
    }
    let at = r
        .first_violation
        .map(|v| format!(" (first violation at index {})", v.index()))
        .unwrap_or_default();
    Err(Error::Precondition(format!("{name} is not {what}{at}")))
}

/// Applies `psi` termwise, logging and returning a warning when the spot-check
/// of its asserted monotone convexity fails.
pub(crate) fn apply_psi<T: Scalar, M: ConvexMap<T> + ?Sized>(
    psi: &M,
    a: &[T],
    tol: Tolerance<T>,
) -> Result<(Vec<T>, Option<String>)> {
    let warning = spot_check(psi, a, tol);
    if let Some(w) = &warning {
        log::warn!("psi spot-check failed: {w}");
    }
    let image: Vec<T> = a.iter().map(|&x| psi.apply(x)).collect();
    if let Some(i) = image.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { index: i + 1 });
    }
    Ok((image, warning))
}
