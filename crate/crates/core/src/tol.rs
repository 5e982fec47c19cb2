//! Centralized numerical tolerances.
//!
//! Every fixed threshold used by the library and its verification suite is
//! defined here rather than inline, so the precision contract of each code
//! path can be read in one place.
//!
//! Three regimes:
//!
//! - *exact-arithmetic identities* (algebraic rearrangements of the same
//!   floating-point data): near machine precision, `1e-12` .. `1e-10`;
//! - *iterative solves* (CG, Newton, power iteration): the solver's own
//!   termination threshold plus headroom;
//! - *iterative-limit comparisons* (a solver limit against an independent
//!   dense solution): relative `1e-5`.

/// Identities that hold exactly in real arithmetic, checked elementwise.
pub const EXACT: f64 = 1e-10;

/// Tighter variant for sums of a few hundred well-scaled terms
/// (row-stochasticity, constant preservation).
pub const EXACT_TIGHT: f64 = 1e-12;

/// Relative tolerance for comparing an iterative limit against an
/// independently computed minimizer.
pub const LIMIT_REL: f64 = 1e-5;

/// Default iterate-residual threshold at which the solvers stop.
pub const RESIDUAL: f64 = 1e-8;

/// Relative residual for conjugate-gradient solves inside proximal maps.
/// Kept well below the `1e-10` contract so that near-identical inputs map to
/// near-identical outputs in operator-identity checks.
pub const PROX_CG_REL: f64 = 1e-13;

/// Absolute max-norm stationarity target for proximal maps.
pub const PROX_STATIONARITY: f64 = 1e-10;

/// Relative residual for conjugate-gradient evaluation of the regularizer.
pub const REGULARIZER_CG_REL: f64 = 1e-10;

/// Relative eigenvalue change at which power iteration is considered
/// converged.
pub const POWER_ITERATION_REL: f64 = 1e-8;

/// Multiplicative safety margin applied to the smoothness estimate.
pub const SMOOTHNESS_INFLATION: f64 = 1.01;

/// Eigenvalue range slack for kernel-filter class certification.
pub const CLASS_EIGENVALUE: f64 = 1e-10;

/// Allowed asymmetry of `DW` before a filter is treated as not self-adjoint
/// in its induced space.
pub const SELF_ADJOINT_DEFECT: f64 = 1e-10;
