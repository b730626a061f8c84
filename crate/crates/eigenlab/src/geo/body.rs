//! Convex bodies kept simultaneously in vertex and half-space form.

use super::hull::{hull2d, hull3d, triangle_normal};
use super::{dist, dot, lex_cmp, norm, sub};
use crate::error::{Error, Result};
use crate::lp::{chebyshev_center, linear_max};
use crate::tol;

/// Bounded convex polytope with nonempty interior. Both representations are
/// populated at construction and all half-space normals are unit length.
#[derive(Debug, Clone)]
pub struct ConvexBody {
    dim: usize,
    vertices: Vec<Vec<f64>>,
    normals: Vec<Vec<f64>>,
    offsets: Vec<f64>,
}

/// Result of slicing: a lower-dimensional body, or an empty slice (which is a
/// signal during scans, not an error).
#[derive(Debug, Clone)]
pub enum Section {
    Nonempty(ConvexBody),
    Empty,
}

impl Section {
    pub fn body(self) -> Option<ConvexBody> {
        match self {
            Section::Nonempty(b) => Some(b),
            Section::Empty => None,
        }
    }
    pub fn as_body(&self) -> Option<&ConvexBody> {
        match self {
            Section::Nonempty(b) => Some(b),
            Section::Empty => None,
        }
    }
}

impl ConvexBody {
    /// Hull of a point cloud (the `convex_hull` operation). Supports
    /// dimensions 1 to 3; affinely dependent input is a flat hull.
    pub fn from_points(dim: usize, points: &[Vec<f64>]) -> Result<Self> {
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::InvalidParameter("point dimension mismatch".into()));
        }
        if points.len() < dim + 1 {
            return Err(Error::FlatHull);
        }
        match dim {
            1 => {
                let lo = points.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min);
                let hi = points.iter().map(|p| p[0]).fold(f64::NEG_INFINITY, f64::max);
                if hi - lo < 1e-12 * hi.abs().max(lo.abs()).max(1.0) {
                    return Err(Error::FlatHull);
                }
                Ok(Self::interval(lo, hi))
            }
            2 => {
                let verts = hull2d(points)?;
                let m = verts.len();
                let mut normals = Vec::with_capacity(m);
                let mut offsets = Vec::with_capacity(m);
                for k in 0..m {
                    let p = &verts[k];
                    let q = &verts[(k + 1) % m];
                    // CCW polygon: outward normal is the edge rotated -90 deg.
                    let e = sub(q, p);
                    let l = norm(&e);
                    let n = vec![e[1] / l, -e[0] / l];
                    let b = dot(&n, p);
                    normals.push(n);
                    offsets.push(b);
                }
                Self::assemble(2, verts, normals, offsets)
            }
            3 => {
                let (verts, faces) = hull3d(points)?;
                let mut normals: Vec<Vec<f64>> = Vec::new();
                let mut offsets: Vec<f64> = Vec::new();
                let scale = coord_scale_of(&verts);
                for f in &faces {
                    let n = triangle_normal(&verts[f[0]], &verts[f[1]], &verts[f[2]]);
                    let b = dot(&n, &verts[f[0]]);
                    let dup = normals.iter().zip(&offsets).any(|(n2, b2)| {
                        dist(&n, n2) < 1e-9 && (b - b2).abs() < 1e-9 * scale.max(1.0)
                    });
                    if !dup {
                        normals.push(n);
                        offsets.push(b);
                    }
                }
                Self::assemble(3, verts, normals, offsets)
            }
            _ => Err(Error::InvalidParameter(format!(
                "convex hull unsupported in dimension {dim}"
            ))),
        }
    }

    /// Build from explicit forms; validates cross-consistency and support.
    pub fn from_forms(
        dim: usize,
        vertices: Vec<Vec<f64>>,
        normals: Vec<Vec<f64>>,
        offsets: Vec<f64>,
    ) -> Result<Self> {
        let mut unit_normals = Vec::with_capacity(normals.len());
        for a in normals {
            let l = norm(&a);
            if l < 1e-14 {
                return Err(Error::DegenerateBody("zero half-space normal".into()));
            }
            unit_normals.push(a.iter().map(|x| x / l).collect());
        }
        Self::assemble(dim, vertices, unit_normals, offsets)
    }

    fn assemble(
        dim: usize,
        vertices: Vec<Vec<f64>>,
        normals: Vec<Vec<f64>>,
        offsets: Vec<f64>,
    ) -> Result<Self> {
        let body = ConvexBody {
            dim,
            vertices,
            normals,
            offsets,
        };
        body.validate()?;
        Ok(body)
    }

    fn validate(&self) -> Result<()> {
        let scale = self.coord_scale().max(1.0);
        let mtol = tol::MEMBER * scale;
        if self.vertices.is_empty() || self.normals.is_empty() {
            return Err(Error::DegenerateBody("missing representation".into()));
        }
        for v in &self.vertices {
            for (a, &b) in self.normals.iter().zip(&self.offsets) {
                if dot(a, v) - b > mtol * 10.0 {
                    return Err(Error::DegenerateBody(format!(
                        "vertex violates half-space by {:.3e}",
                        dot(a, v) - b
                    )));
                }
            }
        }
        for (a, &b) in self.normals.iter().zip(&self.offsets) {
            let touch = self
                .vertices
                .iter()
                .map(|v| (b - dot(a, v)).abs())
                .fold(f64::INFINITY, f64::min);
            if touch > mtol * 100.0 {
                return Err(Error::DegenerateBody(format!(
                    "non-supporting half-space (gap {touch:.3e})"
                )));
            }
        }
        Ok(())
    }

    /// Interval [lo, hi] as a 1D body.
    pub fn interval(lo: f64, hi: f64) -> Self {
        ConvexBody {
            dim: 1,
            vertices: vec![vec![lo], vec![hi]],
            normals: vec![vec![1.0], vec![-1.0]],
            offsets: vec![hi, -lo],
        }
    }

    /// Reconstruct a body from half-spaces alone (dims 1-3), detecting empty
    /// interior. Normals need not be unit.
    pub fn from_halfspaces(
        dim: usize,
        normals: &[Vec<f64>],
        offsets: &[f64],
    ) -> Result<Section> {
        let mut ns = Vec::new();
        let mut bs = Vec::new();
        for (a, &b) in normals.iter().zip(offsets) {
            let l = norm(a);
            if l < 1e-12 {
                if b < -1e-9 {
                    return Ok(Section::Empty);
                }
                continue;
            }
            ns.push(a.iter().map(|x| x / l).collect::<Vec<f64>>());
            bs.push(b / l);
        }
        if ns.is_empty() {
            return Err(Error::DegenerateBody("no constraints".into()));
        }
        let scale = bs.iter().fold(0.0f64, |m, &b| m.max(b.abs())).max(1.0);
        let thin = 1e-9 * scale;
        match dim {
            1 => {
                let mut lo = f64::NEG_INFINITY;
                let mut hi = f64::INFINITY;
                for (a, &b) in ns.iter().zip(&bs) {
                    if a[0] > 0.0 {
                        hi = hi.min(b / a[0]);
                    } else {
                        lo = lo.max(b / a[0]);
                    }
                }
                if !lo.is_finite() || !hi.is_finite() {
                    return Err(Error::DegenerateBody("unbounded interval".into()));
                }
                if hi - lo <= thin {
                    return Ok(Section::Empty);
                }
                Ok(Section::Nonempty(Self::interval(lo, hi)))
            }
            2 => {
                let m = ns.len();
                let mut cands: Vec<Vec<f64>> = Vec::new();
                for i in 0..m {
                    for j in (i + 1)..m {
                        let det = ns[i][0] * ns[j][1] - ns[i][1] * ns[j][0];
                        if det.abs() < 1e-12 {
                            continue;
                        }
                        let x = (bs[i] * ns[j][1] - bs[j] * ns[i][1]) / det;
                        let y = (ns[i][0] * bs[j] - ns[j][0] * bs[i]) / det;
                        let p = vec![x, y];
                        if ns
                            .iter()
                            .zip(&bs)
                            .all(|(a, &b)| dot(a, &p) <= b + 1e-7 * scale)
                        {
                            cands.push(p);
                        }
                    }
                }
                finish_from_candidates(2, cands, thin)
            }
            3 => {
                let m = ns.len();
                let mut cands: Vec<Vec<f64>> = Vec::new();
                for i in 0..m {
                    for j in (i + 1)..m {
                        for k in (j + 1)..m {
                            if let Some(p) = solve3(&ns[i], &ns[j], &ns[k], bs[i], bs[j], bs[k]) {
                                if ns
                                    .iter()
                                    .zip(&bs)
                                    .all(|(a, &b)| dot(a, &p) <= b + 1e-7 * scale)
                                {
                                    cands.push(p);
                                }
                            }
                        }
                    }
                }
                finish_from_candidates(3, cands, thin)
            }
            _ => Err(Error::InvalidParameter(format!(
                "half-space reconstruction unsupported in dimension {dim}"
            ))),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }
    pub fn normals(&self) -> &[Vec<f64>] {
        &self.normals
    }
    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    /// Endpoints of a 1D body.
    pub fn endpoints(&self) -> (f64, f64) {
        assert_eq!(self.dim, 1);
        let lo = self.vertices.iter().map(|v| v[0]).fold(f64::INFINITY, f64::min);
        let hi = self.vertices.iter().map(|v| v[0]).fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    }

    pub fn coord_scale(&self) -> f64 {
        coord_scale_of(&self.vertices)
    }

    /// Membership with boundary slack 1e-9 (scaled by coordinate size).
    pub fn contains(&self, p: &[f64]) -> bool {
        let t = tol::MEMBER * self.coord_scale().max(1.0);
        self.normals
            .iter()
            .zip(&self.offsets)
            .all(|(a, &b)| dot(a, p) <= b + t)
    }

    /// Width of the projection onto a unit direction.
    pub fn support_width(&self, direction: &[f64]) -> Result<f64> {
        let l = norm(direction);
        if (l - 1.0).abs() > tol::MEMBER {
            return Err(Error::InvalidParameter(format!(
                "direction must be unit (|d| = {l})"
            )));
        }
        let vals: Vec<f64> = self.vertices.iter().map(|v| dot(v, direction)).collect();
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Ok(hi - lo)
    }

    /// Largest support value along a (not necessarily unit) direction.
    pub fn support_max(&self, direction: &[f64]) -> f64 {
        self.vertices
            .iter()
            .map(|v| dot(v, direction))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Slice by freezing the listed axes at the given values; the result
    /// lives in the remaining coordinates (in ascending axis order).
    pub fn cross_section(&self, frozen_axes: &[usize], values: &[f64]) -> Result<Section> {
        let i = frozen_axes.len();
        if i == 0 || i >= self.dim || values.len() != i {
            return Err(Error::InvalidParameter(
                "need 1 <= #frozen axes < dim and matching values".into(),
            ));
        }
        let mut frozen = vec![false; self.dim];
        let mut value_of = vec![0.0; self.dim];
        for (&ax, &v) in frozen_axes.iter().zip(values) {
            if ax >= self.dim || frozen[ax] {
                return Err(Error::InvalidParameter("bad frozen axis".into()));
            }
            frozen[ax] = true;
            value_of[ax] = v;
        }
        let kept: Vec<usize> = (0..self.dim).filter(|&k| !frozen[k]).collect();
        let mut ns = Vec::new();
        let mut bs = Vec::new();
        for (a, &b) in self.normals.iter().zip(&self.offsets) {
            let shift: f64 = (0..self.dim)
                .filter(|&k| frozen[k])
                .map(|k| a[k] * value_of[k])
                .sum();
            ns.push(kept.iter().map(|&k| a[k]).collect::<Vec<f64>>());
            bs.push(b - shift);
        }
        Self::from_halfspaces(self.dim - i, &ns, &bs)
    }

    /// (inradius, diameter): Chebyshev-center linear program over the H-form
    /// and the max pairwise vertex distance over the V-form.
    pub fn radii(&self) -> Result<(f64, f64)> {
        let (_, r) = chebyshev_center(&self.normals, &self.offsets)?;
        if r <= 1e-12 * self.coord_scale().max(1.0) {
            return Err(Error::DegenerateBody("empty interior".into()));
        }
        let mut d = 0.0f64;
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                d = d.max(dist(&self.vertices[i], &self.vertices[j]));
            }
        }
        Ok((r, d))
    }

    /// Chebyshev center point (deepest point of the body).
    pub fn chebyshev(&self) -> Result<(Vec<f64>, f64)> {
        chebyshev_center(&self.normals, &self.offsets)
    }

    /// Exit parameter of the ray x + t d (t >= 0) through the boundary.
    pub fn ray_exit(&self, x: &[f64], d: &[f64]) -> f64 {
        let mut t = f64::INFINITY;
        for (a, &b) in self.normals.iter().zip(&self.offsets) {
            let ad = dot(a, d);
            if ad > 1e-14 {
                t = t.min((b - dot(a, x)) / ad);
            }
        }
        t.max(0.0)
    }

    /// Support value via the linear program over the H-form; used as an
    /// independent route against the vertex maximum in tests.
    pub fn support_max_lp(&self, direction: &[f64]) -> Result<f64> {
        let (v, _) = linear_max(direction, &self.normals, &self.offsets)?;
        Ok(v)
    }

    /// Axis-aligned bounding box from the vertices.
    pub fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        let mut lo = vec![f64::INFINITY; self.dim];
        let mut hi = vec![f64::NEG_INFINITY; self.dim];
        for v in &self.vertices {
            for k in 0..self.dim {
                lo[k] = lo[k].min(v[k]);
                hi[k] = hi[k].max(v[k]);
            }
        }
        (lo, hi)
    }

    /// Image under x -> s * R x + t with R given by rows.
    pub fn affine_image(&self, rot_rows: &[Vec<f64>], t: &[f64], s: f64) -> Result<Self> {
        if s <= 0.0 {
            return Err(Error::InvalidParameter("scale must be positive".into()));
        }
        let apply = |x: &[f64]| -> Vec<f64> {
            rot_rows
                .iter()
                .zip(t)
                .map(|(row, &ti)| s * dot(row, x) + ti)
                .collect()
        };
        let vertices: Vec<Vec<f64>> = self.vertices.iter().map(|v| apply(v)).collect();
        let mut normals = Vec::new();
        let mut offsets = Vec::new();
        for (a, &b) in self.normals.iter().zip(&self.offsets) {
            // x' = sRx + t, a.x <= b  =>  (Ra).x' <= s b + (Ra).t
            let ra: Vec<f64> = (0..self.dim)
                .map(|r| (0..self.dim).map(|c| rot_rows[r][c] * a[c]).sum())
                .collect();
            let off = s * b + dot(&ra, t);
            normals.push(ra);
            offsets.push(off);
        }
        Self::assemble(self.dim, vertices, normals, offsets)
    }

    pub fn translated(&self, t: &[f64]) -> Result<Self> {
        let eye: Vec<Vec<f64>> = (0..self.dim)
            .map(|r| (0..self.dim).map(|c| if r == c { 1.0 } else { 0.0 }).collect())
            .collect();
        self.affine_image(&eye, t, 1.0)
    }

    pub fn scaled(&self, s: f64) -> Result<Self> {
        let eye: Vec<Vec<f64>> = (0..self.dim)
            .map(|r| (0..self.dim).map(|c| if r == c { 1.0 } else { 0.0 }).collect())
            .collect();
        self.affine_image(&eye, &vec![0.0; self.dim], s)
    }
}

fn coord_scale_of(vs: &[Vec<f64>]) -> f64 {
    vs.iter()
        .flat_map(|v| v.iter())
        .fold(0.0f64, |m, &x| m.max(x.abs()))
}

fn finish_from_candidates(dim: usize, mut cands: Vec<Vec<f64>>, thin: f64) -> Result<Section> {
    if cands.is_empty() {
        return Ok(Section::Empty);
    }
    cands.sort_by(|a, b| lex_cmp(a, b, 0.0));
    cands.dedup_by(|a, b| dist(a, b) < thin);
    if cands.len() < dim + 1 {
        return Ok(Section::Empty);
    }
    match ConvexBody::from_points(dim, &cands) {
        Ok(b) => Ok(Section::Nonempty(b)),
        Err(Error::FlatHull) => Ok(Section::Empty),
        Err(e) => Err(e),
    }
}

fn solve3(a1: &[f64], a2: &[f64], a3: &[f64], b1: f64, b2: f64, b3: f64) -> Option<Vec<f64>> {
    let det = a1[0] * (a2[1] * a3[2] - a2[2] * a3[1]) - a1[1] * (a2[0] * a3[2] - a2[2] * a3[0])
        + a1[2] * (a2[0] * a3[1] - a2[1] * a3[0]);
    if det.abs() < 1e-10 {
        return None;
    }
    let dx = b1 * (a2[1] * a3[2] - a2[2] * a3[1]) - a1[1] * (b2 * a3[2] - a2[2] * b3)
        + a1[2] * (b2 * a3[1] - a2[1] * b3);
    let dy = a1[0] * (b2 * a3[2] - a2[2] * b3) - b1 * (a2[0] * a3[2] - a2[2] * a3[0])
        + a1[2] * (a2[0] * b3 - b2 * a3[0]);
    let dz = a1[0] * (a2[1] * b3 - b2 * a3[1]) - a1[1] * (a2[0] * b3 - b2 * a3[0])
        + b1 * (a2[0] * a3[1] - a2[1] * a3[0]);
    Some(vec![dx / det, dy / det, dz / det])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn contains_box_points() {
        let b = zoo::make_box(&[2.0, 1.0]).unwrap();
        assert!(b.contains(&[1.0, 0.5]));
        assert!(!b.contains(&[3.0, 0.5]));
        assert!(b.contains(&[2.0, 1.0])); // boundary counts as inside
    }

    #[test]
    fn contains_triangle_interior() {
        let t = ConvexBody::from_points(
            2,
            &[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]],
        )
        .unwrap();
        assert!(t.contains(&[0.25, 0.25]));
        assert!(!t.contains(&[0.6, 0.6]));
    }

    #[test]
    fn support_width_of_box() {
        let b = zoo::make_box(&[2.0, 1.0]).unwrap();
        assert!((b.support_width(&[1.0, 0.0]).unwrap() - 2.0).abs() < 1e-12);
        let s = 0.5f64.sqrt();
        let w = b.support_width(&[s, s]).unwrap();
        assert!((w - 3.0 * s).abs() < 1e-12, "w = {w}");
        assert!(b.support_width(&[0.0, 0.0]).is_err());
    }

    #[test]
    fn support_width_of_polygon_disk() {
        // 64-gon approximation of the unit disk: width 2 within 1%.
        let pts: Vec<Vec<f64>> = (0..64)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / 64.0;
                vec![t.cos(), t.sin()]
            })
            .collect();
        let b = ConvexBody::from_points(2, &pts).unwrap();
        for phi in [0.0, 0.3, 1.2, 2.0] {
            let d = vec![f64::cos(phi), f64::sin(phi)];
            let w = b.support_width(&d).unwrap();
            assert!((w - 2.0).abs() < 0.01, "w({phi}) = {w}");
        }
    }

    #[test]
    fn support_lp_matches_vertices() {
        let b = zoo::make_box(&[4.0, 1.0]).unwrap();
        for d in [[1.0, 0.0], [0.0, 1.0], [0.6, 0.8], [-0.6, 0.8]] {
            let lp = b.support_max_lp(&d).unwrap();
            let vx = b.support_max(&d);
            assert!((lp - vx).abs() < 1e-8, "{lp} vs {vx}");
        }
    }

    #[test]
    fn cross_sections_of_box_and_triangle() {
        let b = zoo::make_box(&[4.0, 1.0]).unwrap();
        let s = b.cross_section(&[0], &[2.0]).unwrap().body().unwrap();
        assert_eq!(s.dim(), 1);
        let (lo, hi) = s.endpoints();
        assert!((lo - 0.0).abs() < 1e-12 && (hi - 1.0).abs() < 1e-12);

        let t = ConvexBody::from_points(
            2,
            &[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]],
        )
        .unwrap();
        let s = t.cross_section(&[0], &[0.5]).unwrap().body().unwrap();
        let (lo, hi) = s.endpoints();
        assert!(lo.abs() < 1e-12 && (hi - 0.5).abs() < 1e-12);

        match b.cross_section(&[0], &[5.0]).unwrap() {
            Section::Empty => {}
            _ => panic!("expected empty section"),
        }
    }

    #[test]
    fn cross_section_of_3d_box_is_rectangle() {
        let b = zoo::make_box(&[8.0, 2.0, 1.0]).unwrap();
        let s = b.cross_section(&[0], &[4.0]).unwrap().body().unwrap();
        assert_eq!(s.dim(), 2);
        let (r, d) = s.radii().unwrap();
        assert!((r - 0.5).abs() < 1e-9);
        assert!((d - 5.0f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn radii_of_box_and_triangle() {
        let b = zoo::make_box(&[4.0, 1.0]).unwrap();
        let (r, d) = b.radii().unwrap();
        assert!((r - 0.5).abs() < 1e-9);
        assert!((d - 17.0f64.sqrt()).abs() < 1e-12);

        let t = ConvexBody::from_points(
            2,
            &[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]],
        )
        .unwrap();
        let (r, d) = t.radii().unwrap();
        assert!((r - (1.0 - 0.5f64.sqrt())).abs() < 1e-9, "r = {r}");
        assert!((d - 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn hull_op_square_plus_center() {
        let b = ConvexBody::from_points(
            2,
            &[
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![1.0, 1.0],
                vec![0.0, 1.0],
                vec![0.5, 0.5],
            ],
        )
        .unwrap();
        assert_eq!(b.vertices().len(), 4);
    }

    #[test]
    fn section_monotone_nesting() {
        // freezing more coordinates shrinks the section
        let b = zoo::make_box(&[8.0, 2.0, 1.0]).unwrap();
        let s1 = b.cross_section(&[0], &[3.0]).unwrap().body().unwrap();
        let s2 = b.cross_section(&[0, 1], &[3.0, 1.0]).unwrap().body().unwrap();
        // every point (1.0, z) with z in s2 must lie in s1
        let (lo, hi) = s2.endpoints();
        for i in 0..=10 {
            let z = lo + (hi - lo) * i as f64 / 10.0;
            assert!(s1.contains(&[1.0, z]));
        }
    }

    #[test]
    fn affine_image_round_trip() {
        let b = zoo::make_box(&[2.0, 1.0]).unwrap();
        let th = 0.7f64;
        let rot = vec![vec![th.cos(), -th.sin()], vec![th.sin(), th.cos()]];
        let inv = vec![vec![th.cos(), th.sin()], vec![-th.sin(), th.cos()]];
        let img = b.affine_image(&rot, &[1.0, -2.0], 3.0).unwrap();
        let back = img
            .translated(&[-1.0, 2.0])
            .unwrap()
            .affine_image(&inv, &[0.0, 0.0], 1.0 / 3.0)
            .unwrap();
        for v in b.vertices() {
            assert!(back.contains(v));
        }
        let (r0, d0) = b.radii().unwrap();
        let (r1, d1) = img.radii().unwrap();
        assert!((r1 - 3.0 * r0).abs() < 1e-8);
        assert!((d1 - 3.0 * d0).abs() < 1e-8);
    }
}
