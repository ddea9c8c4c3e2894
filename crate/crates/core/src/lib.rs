//! Relative convex sequences.
//!
//! A real sequence `a` is *convex relative to* a strictly increasing sequence
//! `t` when the slopes `Δa_i / Δt_i` are non-decreasing. This crate
//! classifies sequences, constructs such witnesses, evaluates the polygonal
//! extension through the points `(t_i, a_i)`, and checks Lupas,
//! Hermite-Hadamard-Fejér and majorization type inequalities for them.
//!
//! # Conventions
//!
//! * All public indices (violation positions, generalized floors, index
//!   vectors, breakpoints) are 1-based.
//! * Every numeric predicate takes a [`Tolerance`] and reports a signed
//!   margin next to its verdict.
//! * The core is generic over [`Scalar`] (`f32` or `f64`); the aliases below
//!   fix the common concrete types.

// Comparisons are written as `!(x >= y)` on purpose so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod diagnostics;
pub mod error;
pub mod functionals;
pub mod inequalities;
pub mod oracles;
pub mod polyext;
pub mod scalar;
pub mod seqcore;
pub mod tolerance;

pub use error::{Error, Result};
pub use functionals::{cov_functional, lupas_constant, majorizes, weighted_mean, Weights};
pub use inequalities::{
    cor2_bounds, hhf_bounds, integer_majorization_check, lupas_check, majorization_inequality_check,
    niezgoda_bound, pecaric_check, BoundReport, ConvexMap, LupasReport, MajorizationReport,
    Preconditions, Psi,
};
pub use polyext::{floor_wrt, frac_wrt, Extension};
pub use scalar::Scalar;
pub use seqcore::{
    classify_shape, construct_witness, construct_witness_on_interval, forward_diff, is_convex,
    is_convex_wrt, is_relative_convex, slopes, Seq, Shape, ShapeClass, StepKind, Witness,
};
pub use tolerance::{CheckReport, Tolerance, Violation};

/// Double-precision sequence.
pub type RealSeq = Seq<f64>;
/// Double-precision witness.
pub type RealWitness = Witness<f64>;
/// Double-precision weight vector.
pub type WeightVec = Weights<f64>;
/// Double-precision polygonal extension.
pub type PolygonalExtension = Extension<f64>;
/// Double-precision tolerance.
pub type Tol64 = Tolerance<f64>;

/// Single-precision sequence.
pub type RealSeq32 = Seq<f32>;
/// Single-precision witness.
pub type RealWitness32 = Witness<f32>;
/// Single-precision weight vector.
pub type WeightVec32 = Weights<f32>;
/// Single-precision polygonal extension.
pub type PolygonalExtension32 = Extension<f32>;
/// Single-precision tolerance.
pub type Tol32 = Tolerance<f32>;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;
