use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// A real map the caller asserts is non-decreasing and convex on an interval
/// containing every value it is applied to.
///
/// Implemented for every `Fn(T) -> T`, so closures can be passed directly.
/// Implementations may be called from several threads at once.
pub trait ConvexMap<T: Scalar> {
    fn apply(&self, x: T) -> T;
}

impl<T: Scalar, F: Fn(T) -> T> ConvexMap<T> for F {
    fn apply(&self, x: T) -> T {
        self(x)
    }
}

/// Built-in non-decreasing convex maps, parseable from `identity`, `exp`,
/// `relu@c` (`x -> max(x, c)`) and `square`.
///
/// `square` is only non-decreasing on `[0, inf)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "name", content = "param", rename_all = "snake_case")]
pub enum Psi<T: Scalar = f64> {
    Identity,
    Exp,
    Relu(T),
    Square,
}

impl<T: Scalar> ConvexMap<T> for Psi<T> {
    fn apply(&self, x: T) -> T {
        match *self {
            Psi::Identity => x,
            Psi::Exp => x.exp(),
            Psi::Relu(c) => x.max(c),
            Psi::Square => x * x,
        }
    }
}

impl<T: Scalar> fmt::Display for Psi<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Psi::Identity => f.write_str("identity"),
            Psi::Exp => f.write_str("exp"),
            Psi::Relu(c) => write!(f, "relu@{c}"),
            Psi::Square => f.write_str("square"),
        }
    }
}

impl<T: Scalar> FromStr for Psi<T> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, param) = match s.split_once('@') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        match (name.trim().to_ascii_lowercase().as_str(), param) {
            ("identity" | "id", None) => Ok(Psi::Identity),
            ("exp", None) => Ok(Psi::Exp),
            ("square", None) => Ok(Psi::Square),
            ("relu", Some(p)) => {
                let c: f64 = p
                    .trim()
                    .parse()
                    .map_err(|_| format!("invalid relu parameter {p:?}"))?;
                if !c.is_finite() {
                    return Err(format!("invalid relu parameter {p:?}"));
                }
                Ok(Psi::Relu(T::lit(c)))
            }
            ("relu", None) => Err("relu needs a parameter, e.g. relu@0.5".into()),
            _ => Err(format!(
                "unknown map {s:?}; expected identity, exp, relu@c or square"
            )),
        }
    }
}

/// Spot-checks monotonicity and convexity of `psi` on the sorted distinct
/// `values`: consecutive pairs must not decrease, each middle value must lie
/// on or below the chord of its neighbours, and each pair midpoint must lie on
/// or below the pair's chord. Returns a description of the first failure.
pub fn spot_check<T: Scalar, M: ConvexMap<T> + ?Sized>(
    psi: &M,
    values: &[T],
    tol: Tolerance<T>,
) -> Option<String> {
    let mut xs: Vec<T> = values.iter().copied().filter(|v| v.is_finite()).collect();
    xs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    xs.dedup();
    let ys: Vec<T> = xs.iter().map(|&x| psi.apply(x)).collect();
    if let Some(i) = ys.iter().position(|y| !y.is_finite()) {
        return Some(format!("map is not finite at {}", xs[i]));
    }
    let thr = tol.threshold(ys.iter().fold(T::zero(), |m, y| m.max(y.abs())));
    let two = T::lit(2.0);
    for i in 0..xs.len().saturating_sub(1) {
        let (u, w) = (xs[i], xs[i + 1]);
        let (fu, fw) = (ys[i], ys[i + 1]);
        if fu > fw + thr {
            return Some(format!("map decreases between {u} and {w}"));
        }
        if psi.apply((u + w) / two) > (fu + fw) / two + thr {
            return Some(format!("map is not midpoint convex on [{u}, {w}]"));
        }
        if i + 2 < xs.len() {
            let (v, fv) = (w, fw);
            let (w, fw) = (xs[i + 2], ys[i + 2]);
            let chord = fu + (fw - fu) * (v - u) / (w - u);
            if fv > chord + thr {
                return Some(format!("map lies above its chord at {v}"));
            }
        }
    }
    None
}
