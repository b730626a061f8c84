//! Ellipsoids by center, orthonormal axis directions, and semi-axis lengths.

use super::{dot, sub};
use crate::error::{Error, Result};
use crate::tol;

#[derive(Debug, Clone)]
pub struct Ellipsoid {
    center: Vec<f64>,
    /// Orthonormal axis directions, one row per axis, ordered with
    /// `semi_axes` (nonincreasing).
    directions: Vec<Vec<f64>>,
    semi_axes: Vec<f64>,
}

impl Ellipsoid {
    pub fn new(center: Vec<f64>, directions: Vec<Vec<f64>>, semi_axes: Vec<f64>) -> Result<Self> {
        let n = center.len();
        if directions.len() != n || semi_axes.len() != n {
            return Err(Error::InvalidParameter("ellipsoid dimension mismatch".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let d = dot(&directions[i], &directions[j]);
                let want = if i == j { 1.0 } else { 0.0 };
                if (d - want).abs() > tol::ORTHO * 1e3 {
                    return Err(Error::InvalidParameter(format!(
                        "directions not orthonormal: <v{i},v{j}> = {d}"
                    )));
                }
            }
        }
        for w in semi_axes.windows(2) {
            if w[1] > w[0] + tol::ORTHO {
                return Err(Error::InvalidParameter("semi-axes not sorted".into()));
            }
        }
        if semi_axes.iter().any(|&a| a <= 0.0) {
            return Err(Error::InvalidParameter("semi-axes must be positive".into()));
        }
        Ok(Ellipsoid {
            center,
            directions,
            semi_axes,
        })
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }
    pub fn center(&self) -> &[f64] {
        &self.center
    }
    pub fn directions(&self) -> &[Vec<f64>] {
        &self.directions
    }
    pub fn semi_axes(&self) -> &[f64] {
        &self.semi_axes
    }

    /// Value of the defining quadratic at p: <= 1 inside, = 1 on the boundary.
    pub fn quadratic(&self, p: &[f64]) -> f64 {
        let d = sub(p, &self.center);
        self.directions
            .iter()
            .zip(&self.semi_axes)
            .map(|(v, &a)| {
                let c = dot(v, &d) / a;
                c * c
            })
            .sum()
    }

    /// Membership in the `dilation`-fold dilation about the center.
    pub fn contains_dilated(&self, p: &[f64], dilation: f64, rel_tol: f64) -> bool {
        self.quadratic(p) <= dilation * dilation * (1.0 + rel_tol)
    }

    /// Point of the ellipsoid at unit-ball parameter u (|u| <= 1).
    pub fn point_at(&self, u: &[f64]) -> Vec<f64> {
        let mut p = self.center.clone();
        for (j, v) in self.directions.iter().enumerate() {
            for k in 0..p.len() {
                p[k] += self.semi_axes[j] * u[j] * v[k];
            }
        }
        p
    }

    /// Volume (dims 1-3).
    pub fn volume(&self) -> f64 {
        let prod: f64 = self.semi_axes.iter().product();
        match self.dim() {
            1 => 2.0 * prod,
            2 => std::f64::consts::PI * prod,
            3 => 4.0 * std::f64::consts::PI / 3.0 * prod,
            n => panic!("volume not supported in dimension {n}"),
        }
    }
}
