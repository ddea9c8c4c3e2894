//! Sequence types, difference operators and the convexity predicates.
//!
//! A sequence `a` is *convex with respect to* a strictly increasing sequence
//! `t` when the slope sequence `Δa_i / Δt_i` is non-decreasing. The set of all
//! such `t` is written `T_a`; `a` is *relative convex* when `T_a` is non-empty,
//! which happens exactly for the strictly V-shaped sequences (see
//! [`classify_shape`]).

mod construct;
mod shape;

use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{max_abs, Scalar};
use crate::tolerance::{CheckReport, Tolerance, Violation};

pub use construct::{construct_witness, construct_witness_on_interval};
pub use shape::{classify_shape, is_relative_convex, Shape, ShapeClass, StepKind};

/// Finite sequence of finite reals with at least two terms.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Seq<T: Scalar = f64>(Vec<T>);

impl<T: Scalar> Seq<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::Length {
                min: 2,
                got: values.len(),
            });
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index: i + 1 });
        }
        Ok(Self(values))
    }

    /// `(f(first), ..., f(last))`, inclusive.
    pub fn from_fn(first: usize, last: usize, f: impl Fn(usize) -> T) -> Result<Self> {
        Self::new((first..=last).map(f).collect())
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }

    /// Applies `f` termwise; fails if the image is not finite.
    pub fn map(&self, f: impl Fn(T) -> T) -> Result<Self> {
        Self::new(self.0.iter().map(|&x| f(x)).collect())
    }
}

impl<T: Scalar> Deref for Seq<T> {
    type Target = [T];
    fn deref(&self) -> &[T] {
        &self.0
    }
}

impl<T: Scalar> TryFrom<Vec<T>> for Seq<T> {
    type Error = Error;
    fn try_from(values: Vec<T>) -> Result<Self> {
        Self::new(values)
    }
}

/// A strictly increasing sequence `t`, the abscissae against which convexity
/// of another sequence is measured.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Witness<T: Scalar = f64>(Seq<T>);

impl<T: Scalar> Witness<T> {
    /// Requires `t_{i+1} - t_i > 0` for every `i`.
    pub fn new(values: Vec<T>) -> Result<Self> {
        Self::with_min_gap(values, T::zero())
    }

    /// Requires `t_{i+1} - t_i > min_gap` for every `i`.
    pub fn with_min_gap(values: Vec<T>, min_gap: T) -> Result<Self> {
        let seq = Seq::new(values)?;
        if let Some(i) = seq.windows(2).position(|w| !(w[1] - w[0] > min_gap)) {
            return Err(Error::WitnessNotIncreasing { index: i + 1 });
        }
        Ok(Self(seq))
    }

    pub fn from_seq(seq: Seq<T>) -> Result<Self> {
        Self::new(seq.into_vec())
    }

    /// The arithmetic witness `(1, 2, ..., n)`.
    pub fn unit(n: usize) -> Result<Self> {
        Self::new((1..=n).map(T::from_index).collect())
    }

    pub fn from_fn(first: usize, last: usize, f: impl Fn(usize) -> T) -> Result<Self> {
        Self::new((first..=last).map(f).collect())
    }

    pub fn as_seq(&self) -> &Seq<T> {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0.into_vec()
    }

    pub fn first(&self) -> T {
        self.0[0]
    }

    pub fn last(&self) -> T {
        self.0[self.0.len() - 1]
    }

    /// `c * t + d`; `c` must be positive.
    pub fn affine(&self, c: T, d: T) -> Result<Self> {
        Self::new(self.0.iter().map(|&x| c * x + d).collect())
    }
}

impl<T: Scalar> Deref for Witness<T> {
    type Target = [T];
    fn deref(&self) -> &[T] {
        &self.0
    }
}

/// `(a_2 - a_1, ..., a_n - a_{n-1})`.
pub fn forward_diff<T: Scalar>(a: &[T]) -> Result<Vec<T>> {
    if a.len() < 2 {
        return Err(Error::Length {
            min: 2,
            got: a.len(),
        });
    }
    Ok(a.windows(2).map(|w| w[1] - w[0]).collect())
}

/// Slopes `Δa_i / Δt_i` of consecutive chords.
pub fn slopes<T: Scalar>(a: &Seq<T>, t: &Witness<T>) -> Result<Vec<T>> {
    check_same_len(a.len(), t.len())?;
    Ok(a
        .windows(2)
        .zip(t.windows(2))
        .map(|(da, dt)| (da[1] - da[0]) / (dt[1] - dt[0]))
        .collect())
}

pub(crate) fn check_same_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        Err(Error::LengthMismatch { left, right })
    } else {
        Ok(())
    }
}

/// Non-decreasing check on a slope sequence. The slack at interior point
/// `i + 2` (1-based) is `r_{i+1} - r_i`.
fn slope_report<T: Scalar>(r: &[T], tol: Tolerance<T>) -> CheckReport<T> {
    let scale = max_abs(r.iter().copied());
    CheckReport::from_slacks(
        r.windows(2)
            .enumerate()
            .map(|(i, w)| (Violation::Index(i + 2), w[1] - w[0])),
        scale,
        tol,
    )
}

/// Classical convexity `a_i <= (a_{i-1} + a_{i+1}) / 2`.
///
/// The verdict is computed on second differences with the same threshold as
/// [`is_convex_wrt`] against `(1, ..., n)`, so the two agree exactly. The
/// reported margin is `min_i (a_{i-1} + a_{i+1}) / 2 - a_i` and the threshold
/// is halved accordingly.
pub fn is_convex<T: Scalar>(a: &Seq<T>, tol: Tolerance<T>) -> CheckReport<T> {
    let d = forward_diff(a).expect("Seq has at least two terms");
    let two = T::lit(2.0);
    let mut report = slope_report(&d, tol);
    report.margin /= two;
    report.threshold /= two;
    report
}

/// Convexity of `a` with respect to `t`: `Δa_i / Δt_i` non-decreasing within
/// `tol.abs + tol.rel * max_i |Δa_i / Δt_i|`.
pub fn is_convex_wrt<T: Scalar>(
    a: &Seq<T>,
    t: &Witness<T>,
    tol: Tolerance<T>,
) -> Result<CheckReport<T>> {
    let r = slopes(a, t)?;
    Ok(slope_report(&r, tol))
}
