//! Global tolerance constants, fixed in one place.

/// Geometric comparisons (frame invariance, ellipsoid containment, axis ties).
pub const GEOM: f64 = 1e-6;

/// Point-membership tests against half-space constraints.
pub const MEMBER: f64 = 1e-9;

/// Orthogonality of ellipsoid directions and frame rotations.
pub const ORTHO: f64 = 1e-12;

/// Relative residual target for ground-state solves.
pub const EIG_RESIDUAL: f64 = 1e-8;

/// Relative volume gap for the inscribed-ellipsoid ascent.
pub const JOHN_GAP: f64 = 1e-12;

/// Cap on shift-invert outer iterations.
pub const EIG_MAX_OUTER: usize = 200;
