//! Seeded random generators and independent re-evaluators for testing.
//!
//! Every generator is a pure function of its [`Seeded`] value and parameters.
//! Nothing in the engines depends on this module.

mod brute;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use brute::{brute_reeval, Instance};

use crate::error::{Error, Result};
use crate::functionals::Weights;
use crate::seqcore::{Seq, Shape, Witness};

/// Seed wrapper for the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Seeded {
    pub seed: u64,
}

impl Seeded {
    pub fn new(seed: u64) -> Self {
        Seeded { seed }
    }

    /// A fresh generator; each call restarts the stream for this seed.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// An independent seed derived from this one, for composing generators.
    pub fn derive(&self, stream: u64) -> Seeded {
        let mut rng = self.rng();
        rng.set_stream(stream);
        Seeded::new(rng.gen())
    }
}

impl From<u64> for Seeded {
    fn from(seed: u64) -> Self {
        Seeded::new(seed)
    }
}

/// Step counts `(down, flat, up)` for a pattern, each at least one where the
/// pattern requires that run.
fn split_runs(rng: &mut ChaCha8Rng, steps: usize, runs: [bool; 3]) -> [usize; 3] {
    let required: Vec<usize> = (0..3).filter(|&k| runs[k]).collect();
    let mut counts = [0usize; 3];
    for &k in &required {
        counts[k] = 1;
    }
    for _ in required.len()..steps {
        counts[*required.choose(rng).expect("at least one run")] += 1;
    }
    counts
}

/// A random sequence whose [`classify_shape`](crate::seqcore::classify_shape)
/// variant is `shape`.
///
/// Strict steps are at least 0.1 in size. `NotStrictlyVShaped` draws a peak
/// (a strict rise followed by a strict fall).
pub fn gen_shape(shape: Shape, n: usize, seeded: Seeded) -> Result<Seq<f64>> {
    if n < shape.min_len() {
        return Err(Error::InfeasibleShape {
            shape: shape.to_string(),
            n,
        });
    }
    let mut rng = seeded.rng();
    let steps = n - 1;
    let start: f64 = rng.gen_range(-5.0..5.0);
    let gap = |rng: &mut ChaCha8Rng| rng.gen_range(0.1..1.0);
    let mut values = vec![start];
    let mut push = |delta: f64| {
        let last = *values.last().expect("non-empty");
        values.push(last + delta);
    };
    match shape {
        Shape::NotStrictlyVShaped => {
            let [down, _, up] = split_runs(&mut rng, steps, [true, false, true]);
            for _ in 0..up {
                push(gap(&mut rng));
            }
            for _ in 0..down {
                push(-gap(&mut rng));
            }
        }
        _ => {
            let runs = match shape {
                Shape::StrictlyIncreasing => [false, false, true],
                Shape::StrictlyDecreasing => [true, false, false],
                Shape::Constant => [false, true, false],
                Shape::DecThenConst => [true, true, false],
                Shape::ConstThenInc => [false, true, true],
                Shape::DecThenInc => [true, false, true],
                _ => [true, true, true],
            };
            let [down, flat, up] = split_runs(&mut rng, steps, runs);
            for _ in 0..down {
                push(-gap(&mut rng));
            }
            for _ in 0..flat {
                push(0.0);
            }
            for _ in 0..up {
                push(gap(&mut rng));
            }
        }
    }
    Seq::new(values)
}

/// A random strictly increasing witness: `t_1` in `[-2, 2]`, gaps in `[0.05, 1]`.
pub fn gen_witness(n: usize, seeded: Seeded) -> Result<Witness<f64>> {
    let mut rng = seeded.rng();
    let mut t = Vec::with_capacity(n);
    let mut x: f64 = rng.gen_range(-2.0..2.0);
    for _ in 0..n {
        t.push(x);
        x += rng.gen_range(0.05..1.0);
    }
    Witness::new(t)
}

/// Families of convex functions sampled by [`gen_convex_on`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConvexFamily {
    /// Piecewise linear with sorted slopes at random knots.
    Hinge,
    Exp,
    Quadratic,
    Affine,
}

impl ConvexFamily {
    pub const ALL: [ConvexFamily; 4] = [
        ConvexFamily::Hinge,
        ConvexFamily::Exp,
        ConvexFamily::Quadratic,
        ConvexFamily::Affine,
    ];
}

/// Samples a random convex function from `family` at the points of `t`.
///
/// The function is drawn on the rescaled variable `u = (x - t_1)/(t_n - t_1)`
/// in `[0, 1]`, so values stay of moderate size (at most about 10 in
/// magnitude) whatever the span of `t`.
pub fn gen_convex_on(t: &Witness<f64>, family: ConvexFamily, seeded: Seeded) -> Result<Seq<f64>> {
    let mut rng = seeded.rng();
    let (lo, hi) = (t.first(), t.last());
    let u = |x: f64| (x - lo) / (hi - lo);
    let slope: f64 = rng.gen_range(-3.0..3.0);
    let offset: f64 = rng.gen_range(-2.0..2.0);
    let phi: Box<dyn Fn(f64) -> f64> = match family {
        ConvexFamily::Affine => Box::new(move |x| slope * x + offset),
        ConvexFamily::Quadratic => {
            let c: f64 = rng.gen_range(0.1..4.0);
            let centre: f64 = rng.gen_range(-0.25..1.25);
            Box::new(move |x| c * (x - centre) * (x - centre) + 0.5 * slope * x + offset)
        }
        ConvexFamily::Exp => {
            let c: f64 = rng.gen_range(0.1..2.0);
            let k: f64 = rng.gen_range(-2.5..2.5);
            Box::new(move |x| c * (k * x).exp() + 0.5 * slope * x + offset)
        }
        ConvexFamily::Hinge => {
            let knots: Vec<(f64, f64)> = (0..rng.gen_range(1..=4))
                .map(|_| (rng.gen_range(0.0..1.0), rng.gen_range(0.2..3.0)))
                .collect();
            Box::new(move |x| {
                knots.iter().map(|&(k, c)| c * (x - k).max(0.0)).sum::<f64>() + slope * x + offset
            })
        }
    };
    Seq::new(t.iter().map(|&x| phi(u(x))).collect())
}

/// A random member `(a, t)` of the relative convex class: a random witness and
/// a random convex function from a random family sampled on it.
pub fn gen_relative_convex_pair(n: usize, seeded: Seeded) -> Result<(Seq<f64>, Witness<f64>)> {
    let family = *ConvexFamily::ALL
        .choose(&mut seeded.derive(0).rng())
        .expect("non-empty");
    gen_relative_convex_pair_in(family, n, seeded)
}

/// [`gen_relative_convex_pair`] restricted to one family.
pub fn gen_relative_convex_pair_in(
    family: ConvexFamily,
    n: usize,
    seeded: Seeded,
) -> Result<(Seq<f64>, Witness<f64>)> {
    let t = gen_witness(n, seeded.derive(1))?;
    let a = gen_convex_on(&t, family, seeded.derive(2))?;
    Ok((a, t))
}

/// A pair `(a, t)` with `t` not in `T_a`: a member pair with one interior value
/// lifted clearly above the chord through its neighbours. Needs `n >= 3`.
pub fn gen_non_member_pair(n: usize, seeded: Seeded) -> Result<(Seq<f64>, Witness<f64>)> {
    if n < 3 {
        return Err(Error::Length { min: 3, got: n });
    }
    let (a, t) = gen_relative_convex_pair(n, seeded)?;
    let mut rng = seeded.derive(3).rng();
    let i = rng.gen_range(1..n - 1);
    let scale = a.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let (left, right) = (t[i] - t[i - 1], t[i + 1] - t[i]);
    let chord = (right * a[i - 1] + left * a[i + 1]) / (left + right);
    let lift = rng.gen_range(0.05..0.5) * (1.0 + scale);
    let mut values = a.into_vec();
    values[i] = chord + lift;
    Ok((Seq::new(values)?, t))
}

/// Random weights in `[0, 1]`; about one in five entries is zero, and at least
/// two entries are positive when `n >= 2`.
pub fn gen_weights(n: usize, seeded: Seeded) -> Result<Weights<f64>> {
    let mut rng = seeded.rng();
    let mut w: Vec<f64> = (0..n)
        .map(|_| if rng.gen_bool(0.2) { 0.0 } else { rng.gen_range(0.05..1.0) })
        .collect();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(&mut rng);
    for &i in idx.iter().take(2.min(n)) {
        if w[i] == 0.0 {
            w[i] = rng.gen_range(0.05..1.0);
        }
    }
    Weights::new(w)
}

/// Random weights with `p_i = p_{n+1-i}`.
pub fn gen_symmetric_weights(n: usize, seeded: Seeded) -> Result<Weights<f64>> {
    let mut rng = seeded.rng();
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let x = rng.gen_range(0.05..1.0);
        w[i] = x;
        w[n - 1 - i] = x;
    }
    Weights::new(w)
}

/// Replaces `(y_i, y_j)` by `(λ y_i + (1-λ) y_j, (1-λ) y_i + λ y_j)`, 0-based.
pub fn t_transform(y: &mut [f64], i: usize, j: usize, lambda: f64) {
    let (yi, yj) = (y[i], y[j]);
    y[i] = lambda * yi + (1.0 - lambda) * yj;
    y[j] = (1.0 - lambda) * yi + lambda * yj;
}

/// Default number of T-transforms for a vector of length `n`.
pub fn default_transform_count(n: usize) -> usize {
    2 * n
}

/// A vector majorized by `y`, obtained by `k_transforms` random T-transforms.
/// Entries are kept inside `[min y, max y]`.
pub fn gen_majorized_pair(y: &[f64], k_transforms: usize, seeded: Seeded) -> Result<Vec<f64>> {
    if y.len() < 2 {
        return Err(Error::Length { min: 2, got: y.len() });
    }
    let lo = y.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = y.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut rng = seeded.rng();
    let mut x = y.to_vec();
    for _ in 0..k_transforms {
        let i = rng.gen_range(0..x.len());
        let j = (i + rng.gen_range(1..x.len())) % x.len();
        t_transform(&mut x, i, j, rng.gen_range(0.0..=1.0));
        x[i] = x[i].clamp(lo, hi);
        x[j] = x[j].clamp(lo, hi);
    }
    Ok(x)
}

/// `k` uniform points in `[t_1, t_n]`.
pub fn gen_points_in(t: &Witness<f64>, k: usize, seeded: Seeded) -> Vec<f64> {
    let mut rng = seeded.rng();
    (0..k).map(|_| rng.gen_range(t.first()..=t.last())).collect()
}
