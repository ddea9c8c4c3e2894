//! The polygonal extension `a_t*` through the corner points `(t_i, a_i)`, and
//! the generalized floor and fractional part relative to a witness.

use std::io::{self, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::seqcore::{check_same_len, slopes, Seq, Witness};

/// Clamps `q` into `[t_1, t_n]` when it lies within `slack` of it.
fn clamp_to_domain<T: Scalar>(t: &Witness<T>, q: T, slack: T) -> Result<T> {
    let (lo, hi) = (t.first(), t.last());
    if !(q >= lo - slack && q <= hi + slack) {
        return Err(Error::OutOfDomain {
            x: q.as_f64(),
            lo: lo.as_f64(),
            hi: hi.as_f64(),
        });
    }
    Ok(q.max(lo).min(hi))
}

/// `⌊q⌋_t`: the 1-based index of the largest `t_i <= q`.
///
/// Points within `slack` outside `[t_1, t_n]` are clamped to the nearest end.
pub fn floor_wrt<T: Scalar>(t: &Witness<T>, q: T, slack: T) -> Result<usize> {
    let q = clamp_to_domain(t, q, slack)?;
    Ok(t.partition_point(|&ti| ti <= q))
}

/// `{q}_t = q - t_{⌊q⌋_t}`.
pub fn frac_wrt<T: Scalar>(t: &Witness<T>, q: T, slack: T) -> Result<T> {
    let q = clamp_to_domain(t, q, slack)?;
    let i = t.partition_point(|&ti| ti <= q);
    Ok(q - t[i - 1])
}

/// Piecewise linear interpolant of `(t_i, a_i)` on `[t_1, t_n]`.
///
/// It is convex exactly when `a` is convex with respect to `t`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extension<T: Scalar = f64> {
    t: Witness<T>,
    a: Seq<T>,
    slopes: Vec<T>,
    domain_slack: T,
}

impl<T: Scalar> Extension<T> {
    pub fn new(a: &Seq<T>, t: &Witness<T>) -> Result<Self> {
        check_same_len(a.len(), t.len())?;
        Ok(Self {
            slopes: slopes(a, t)?,
            t: t.clone(),
            a: a.clone(),
            domain_slack: T::default_abs_tol(),
        })
    }

    /// Sets how far outside `[t_1, t_n]` an argument may stray before
    /// evaluation fails; such arguments are clamped.
    pub fn with_domain_slack(mut self, slack: T) -> Self {
        self.domain_slack = slack.abs();
        self
    }

    pub fn breakpoints_t(&self) -> &Witness<T> {
        &self.t
    }

    pub fn breakpoints_a(&self) -> &Seq<T> {
        &self.a
    }

    /// `slopes()[i] = Δa_i / Δt_i`, 0-based.
    pub fn slopes(&self) -> &[T] {
        &self.slopes
    }

    pub fn domain(&self) -> (T, T) {
        (self.t.first(), self.t.last())
    }

    pub fn floor(&self, q: T) -> Result<usize> {
        floor_wrt(&self.t, q, self.domain_slack)
    }

    pub fn frac(&self, q: T) -> Result<T> {
        frac_wrt(&self.t, q, self.domain_slack)
    }

    /// `a_t*(x) = a_i + (Δa_i / Δt_i)(x - t_i)` on `[t_i, t_{i+1})`, and `a_n` at `t_n`.
    pub fn eval(&self, x: T) -> Result<T> {
        let x = clamp_to_domain(&self.t, x, self.domain_slack)?;
        let i = self.t.partition_point(|&ti| ti <= x) - 1;
        if i + 1 == self.t.len() {
            return Ok(self.a[i]);
        }
        Ok(self.a[i] + self.slopes[i] * (x - self.t[i]))
    }

    /// `resolution` evenly spaced samples `(x, a_t*(x))`, both endpoints included.
    pub fn sample(&self, resolution: usize) -> Vec<(T, T)> {
        let (lo, hi) = self.domain();
        let resolution = resolution.max(2);
        let last = T::from_index(resolution - 1);
        (0..resolution)
            .map(|k| {
                let x = if k + 1 == resolution {
                    hi
                } else {
                    lo + (hi - lo) * T::from_index(k) / last
                };
                (x, self.eval(x).expect("sample point inside the domain"))
            })
            .collect()
    }

    /// Writes [`Extension::sample`] as CSV with header `x,value`.
    pub fn write_samples_csv<W: Write>(&self, resolution: usize, mut out: W) -> io::Result<()> {
        writeln!(out, "x,value")?;
        for (x, v) in self.sample(resolution) {
            writeln!(out, "{x},{v}")?;
        }
        Ok(())
    }
}
