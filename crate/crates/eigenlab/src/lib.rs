//! Numerical laboratory for first Dirichlet eigenpairs of convex domains.
//!
//! The crate computes ground states of the Dirichlet Laplacian on convex
//! bodies with an embedded-boundary finite-difference solver, extracts the
//! geometric length scales of the body (John ellipsoid axes) and of the
//! eigenfunction (half-level-set axes), and measures how the L², gradient,
//! and eigenvalue-gap quantities scale against those lengths.
//!
//! Module map:
//! - [`geo`]: convex bodies in V/H form, hulls, cross-sections, inradius and
//!   diameter, maximum-volume inscribed (John) ellipsoids, frame
//!   canonicalization.
//! - [`zoo`]: named domain families (boxes, circular sectors, cone sectors,
//!   trapezoids, slabs, seeded random polytopes) and their one-line specs.
//! - [`grid`]: masked uniform-grid discretization with boundary-fraction
//!   corrections, ground-state solves, norms and staggered gradients,
//!   Richardson extrapolation, and 1D/2D Schrödinger surrogates.
//! - [`sections`]: cross-section ground eigenvalues μ(Y), their minima μ*,
//!   and the gaps δ.
//! - [`checks`]: the inequality measurements (Chiti, L² lower bound,
//!   directional gradients, eigenvalue sandwich, level-set volume, slice
//!   norms, variational test function).
//! - [`gj`]: planar width profiles, the length scale L, and the 1D surrogate
//!   operator comparison.
//! - [`campaign`]: config-driven sweeps, exponent fits, report persistence,
//!   and the verification suite.

pub mod error;
pub mod geo;
pub mod lp;
pub mod special;
pub mod tol;
pub mod zoo;

pub use error::{Error, Result};
