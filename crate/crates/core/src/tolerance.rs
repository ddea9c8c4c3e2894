use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Absolute/relative slack used by every floating point comparison.
///
/// A quantity that should be non-negative is accepted when it is at least
/// `-(abs + rel * scale)`, where `scale` is a magnitude chosen by each check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance<T: Scalar = f64> {
    pub abs: T,
    pub rel: T,
}

impl<T: Scalar> Tolerance<T> {
    pub fn new(abs: T, rel: T) -> Result<Self> {
        if !(abs >= T::zero() && rel >= T::zero()) || !abs.is_finite() || !rel.is_finite() {
            return Err(Error::InvalidTolerance {
                abs: abs.as_f64(),
                rel: rel.as_f64(),
            });
        }
        Ok(Self { abs, rel })
    }

    /// Zero slack: comparisons are exact.
    pub fn exact() -> Self {
        Self {
            abs: T::zero(),
            rel: T::zero(),
        }
    }

    pub fn absolute(abs: T) -> Result<Self> {
        Self::new(abs, T::zero())
    }

    /// Allowed negative slack for a quantity of magnitude `scale`.
    #[inline]
    pub fn threshold(&self, scale: T) -> T {
        self.abs + self.rel * scale.abs()
    }

    #[inline]
    pub fn accepts(&self, slack: T, scale: T) -> bool {
        slack >= -self.threshold(scale)
    }
}

impl<T: Scalar> Default for Tolerance<T> {
    fn default() -> Self {
        Self {
            abs: T::default_abs_tol(),
            rel: T::default_rel_tol(),
        }
    }
}

/// Where a check first failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    /// 1-based position in the sequence.
    Index(usize),
    /// 1-based index triple `l < m < n`.
    Triple(usize, usize, usize),
    /// A single inequality between two aggregate quantities.
    Aggregate,
}

impl Violation {
    /// The index most associated with the violation (the middle of a triple,
    /// 0 for an aggregate).
    pub fn index(&self) -> usize {
        match *self {
            Violation::Index(i) => i,
            Violation::Triple(_, m, _) => m,
            Violation::Aggregate => 0,
        }
    }
}

/// Verdict of a family of inequalities `slack_k >= 0`.
///
/// `holds` is true exactly when `margin >= -threshold`; `margin` is `+inf` when
/// the family is empty.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport<T: Scalar = f64> {
    pub holds: bool,
    pub first_violation: Option<Violation>,
    pub margin: T,
    pub threshold: T,
    pub tolerance: Tolerance<T>,
}

impl<T: Scalar> CheckReport<T> {
    /// Vacuous success.
    pub fn vacuous(tolerance: Tolerance<T>) -> Self {
        Self {
            holds: true,
            first_violation: None,
            margin: T::infinity(),
            threshold: tolerance.abs,
            tolerance,
        }
    }

    /// Builds a report from `(location, slack)` pairs sharing one scale.
    pub fn from_slacks<I>(slacks: I, scale: T, tolerance: Tolerance<T>) -> Self
    where
        I: IntoIterator<Item = (Violation, T)>,
    {
        let threshold = tolerance.threshold(scale);
        let mut margin = T::infinity();
        let mut first_violation = None;
        for (at, slack) in slacks {
            if slack < margin {
                margin = slack;
            }
            if first_violation.is_none() && !(slack >= -threshold) {
                first_violation = Some(at);
            }
        }
        Self {
            holds: first_violation.is_none(),
            first_violation,
            margin,
            threshold,
            tolerance,
        }
    }
}
