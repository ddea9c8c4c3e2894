use serde::Serialize;

use super::Seq;
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// Monotonicity pattern of a sequence.
///
/// The first six V-shaped variants are the monotone patterns a convex function
/// can follow; `Constant` is added because a constant sequence has an
/// identically zero (hence non-decreasing) slope sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    StrictlyIncreasing,
    StrictlyDecreasing,
    DecThenConst,
    ConstThenInc,
    DecThenInc,
    DecConstInc,
    Constant,
    NotStrictlyVShaped,
}

impl Shape {
    /// Every strictly V-shaped variant, in declaration order.
    pub const V_SHAPED: [Shape; 7] = [
        Shape::StrictlyIncreasing,
        Shape::StrictlyDecreasing,
        Shape::DecThenConst,
        Shape::ConstThenInc,
        Shape::DecThenInc,
        Shape::DecConstInc,
        Shape::Constant,
    ];

    pub fn is_v_shaped(self) -> bool {
        self != Shape::NotStrictlyVShaped
    }

    /// Minimum length able to exhibit the pattern.
    pub fn min_len(self) -> usize {
        match self {
            Shape::StrictlyIncreasing | Shape::StrictlyDecreasing | Shape::Constant => 2,
            Shape::DecThenConst | Shape::ConstThenInc | Shape::DecThenInc => 3,
            Shape::NotStrictlyVShaped => 3,
            Shape::DecConstInc => 4,
        }
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

/// Result of [`classify_shape`].
///
/// `breakpoints = (m, l)` locates the valley in 1-based indices: the minimum
/// value is first reached at `a_m` and held through `a_{m+l}`. It is `None`
/// for strictly monotone, constant and non-V-shaped sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShapeClass {
    pub variant: Shape,
    pub breakpoints: Option<(usize, usize)>,
}

/// Direction of one step `a_i -> a_{i+1}` under a tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Down,
    Flat,
    Up,
}

impl StepKind {
    pub(crate) fn of<T: Scalar>(from: T, to: T, tol: Tolerance<T>) -> Self {
        let d = to - from;
        if d > tol.abs {
            StepKind::Up
        } else if d < -tol.abs {
            StepKind::Down
        } else {
            StepKind::Flat
        }
    }
}

pub(crate) fn steps<T: Scalar>(a: &[T], tol: Tolerance<T>) -> Vec<StepKind> {
    a.windows(2).map(|w| StepKind::of(w[0], w[1], tol)).collect()
}

/// Classifies `a` as one of the strictly V-shaped patterns.
///
/// Strict steps need a gap larger than `tol.abs`; smaller steps count as flat.
/// The sequence is V-shaped exactly when its steps read `Down* Flat* Up*`.
pub fn classify_shape<T: Scalar>(a: &Seq<T>, tol: Tolerance<T>) -> ShapeClass {
    let steps = steps(a, tol);
    let downs = steps.iter().take_while(|&&s| s == StepKind::Down).count();
    let flats = steps[downs..]
        .iter()
        .take_while(|&&s| s == StepKind::Flat)
        .count();
    let ups = steps[downs + flats..]
        .iter()
        .take_while(|&&s| s == StepKind::Up)
        .count();

    let not_v = ShapeClass {
        variant: Shape::NotStrictlyVShaped,
        breakpoints: None,
    };
    if downs + flats + ups != steps.len() {
        return not_v;
    }
    let valley = Some((downs + 1, flats));
    let (variant, breakpoints) = match (downs > 0, flats > 0, ups > 0) {
        (true, false, false) => (Shape::StrictlyDecreasing, None),
        (false, false, true) => (Shape::StrictlyIncreasing, None),
        (false, true, false) => (Shape::Constant, None),
        (true, true, false) => (Shape::DecThenConst, valley),
        (false, true, true) => (Shape::ConstThenInc, valley),
        (true, false, true) => (Shape::DecThenInc, valley),
        (true, true, true) => (Shape::DecConstInc, valley),
        (false, false, false) => unreachable!("a Seq has at least one step"),
    };
    ShapeClass {
        variant,
        breakpoints,
    }
}

/// A sequence is relative convex exactly when it is strictly V-shaped.
pub fn is_relative_convex<T: Scalar>(a: &Seq<T>, tol: Tolerance<T>) -> bool {
    classify_shape(a, tol).variant.is_v_shaped()
}
