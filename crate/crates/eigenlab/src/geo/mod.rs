//! Convex geometry: bodies in vertex/half-space form, hulls, cross-sections,
//! inscribed ellipsoids, and frame canonicalization.

mod body;
mod ellipsoid;
mod hull;
mod john;

pub use body::{ConvexBody, Section};
pub use ellipsoid::Ellipsoid;
pub use hull::{hull2d, hull3d};
pub use john::{john_ellipsoid, to_john_frame, Frame};

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn dist(a: &[f64], b: &[f64]) -> f64 {
    norm(&sub(a, b))
}

pub(crate) fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

/// Lexicographic comparison with a tolerance, used for deterministic
/// tie-breaking of directions and vertices.
pub(crate) fn lex_cmp(a: &[f64], b: &[f64], tol: f64) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        if (x - y).abs() > tol {
            return x.partial_cmp(y).unwrap();
        }
    }
    std::cmp::Ordering::Equal
}
