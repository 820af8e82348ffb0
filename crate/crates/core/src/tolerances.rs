//! Central numerical tolerances.
//!
//! Every tolerance used by the verification layer lives here so that the
//! relationship between them stays auditable. Construction is closed-form,
//! so observed residuals sit many orders of magnitude below these bounds;
//! the bounds are chosen to fail loudly on any transcription error while
//! staying far above double-precision rounding noise.

/// Entrywise bound for matrix-algebra identities (products of exact {0, +/-i}
/// entries; exact up to rounding in 10x10 products).
pub const ALGEBRA: f64 = 1e-12;

/// Entrywise bound for reproducing the printed spin-matrix displays after a
/// basis change (entries are 0, +/-1, +/-i, +/-1/sqrt(2)).
pub const MATRIX_DISPLAY: f64 = 1e-14;

/// Scaled-residual bound for first-order radial systems evaluated with
/// analytic derivatives.
pub const SYSTEM_RESIDUAL: f64 = 1e-8;

/// Scaled-residual bound for second-order radial equations (one more
/// analytic-derivative application than the systems).
pub const ODE_RESIDUAL: f64 = 1e-9;

/// Scaled-residual bound for Wigner-recursion checks: the theta-derivative is
/// a finite difference, so accuracy is stencil-limited rather than
/// rounding-limited.
pub const RECURSION_RESIDUAL: f64 = 1e-7;

/// Default verification tolerance exposed by the CLI (`--tol`, ADS_SPIN1_TOL).
pub const DEFAULT_VERIFY: f64 = 1e-7;

/// Hyperboloid-constraint bound for chart conversions.
pub const EMBEDDING_CONSTRAINT: f64 = 1e-12;

/// Transversality bound for assembled 5-vector fields.
pub const TRANSVERSALITY: f64 = 1e-10;

/// Boost-generator eigencheck bound; limited by the O(step^2) central
/// difference along the rotation flow, not by the field evaluation.
pub const BOOST_EIGENCHECK: f64 = 1e-6;

/// Pointwise relative bound for cross-formalism profile comparisons (both
/// sides evaluate the same hypergeometric family).
pub const CROSS_FORMALISM: f64 = 1e-10;

/// A 1% single-component perturbation must push at least one residual above
/// this detection floor.
pub const MUTATION_FLOOR: f64 = 1e-4;

/// Relative slope tolerance for large-r decay-exponent fits.
pub const DECAY_FIT_REL: f64 = 0.01;

/// "alpha is a non-positive integer" detection window for the terminating
/// hypergeometric branch.
pub const POLYNOMIAL_DETECT: f64 = 1e-9;

/// Term-ratio cutoff for the general hypergeometric series.
pub const SERIES_CUTOFF: f64 = 1e-16;

/// Per-point scale floor in relative residuals (guards exact-zero bundles).
pub const RESIDUAL_SCALE_FLOOR: f64 = 1e-300;
