//! Convex hulls in 2 and 3 dimensions.
//!
//! 2D: Andrew's monotone chain with strict turns, so collinear interior
//! points are dropped. 3D: incremental insertion with horizon stitching;
//! points within tolerance of the current hull are skipped, which keeps
//! facet-interior inputs out of the vertex set.

use super::{dist, dot, lex_cmp, sub};
use crate::error::{Error, Result};

/// Convex hull of planar points, counter-clockwise, extreme points only.
pub fn hull2d(points: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let scale = coord_scale(points);
    let eps = 1e-12 * scale * scale;
    let mut pts: Vec<Vec<f64>> = points.to_vec();
    pts.sort_by(|a, b| lex_cmp(a, b, 0.0));
    pts.dedup_by(|a, b| dist(a, b) < 1e-12 * scale.max(1.0));
    if pts.len() < 3 {
        return Err(Error::FlatHull);
    }
    let cross = |o: &[f64], a: &[f64], b: &[f64]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut lower: Vec<Vec<f64>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= eps
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vec<f64>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= eps
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::FlatHull);
    }
    Ok(lower)
}

/// Convex hull of points in R^3. Returns the extreme points and the facet
/// triangles (indices into the returned vertex list, outward-oriented).
pub fn hull3d(points: &[Vec<f64>]) -> Result<(Vec<Vec<f64>>, Vec<[usize; 3]>)> {
    let n = points.len();
    if n < 4 {
        return Err(Error::FlatHull);
    }
    let scale = coord_scale(points);
    let eps = 1e-10 * scale.max(1.0);

    // Deterministic initial tetrahedron: lexicographic minimum, then the
    // farthest point, then the one farthest from their line, then from the
    // plane of the first three.
    let i0 = (0..n).min_by(|&a, &b| lex_cmp(&points[a], &points[b], 0.0)).unwrap();
    let i1 = (0..n)
        .max_by(|&a, &b| {
            dist(&points[a], &points[i0])
                .partial_cmp(&dist(&points[b], &points[i0]))
                .unwrap()
        })
        .unwrap();
    if dist(&points[i1], &points[i0]) < eps {
        return Err(Error::FlatHull);
    }
    let line_dist = |p: &[f64]| {
        let d = sub(&points[i1], &points[i0]);
        let v = sub(p, &points[i0]);
        let t = dot(&v, &d) / dot(&d, &d);
        let mut w = v;
        for k in 0..3 {
            w[k] -= t * d[k];
        }
        dot(&w, &w).sqrt()
    };
    let i2 = (0..n)
        .max_by(|&a, &b| line_dist(&points[a]).partial_cmp(&line_dist(&points[b])).unwrap())
        .unwrap();
    if line_dist(&points[i2]) < eps {
        return Err(Error::FlatHull);
    }
    let nrm = triangle_normal(&points[i0], &points[i1], &points[i2]);
    let plane_dist = |p: &[f64]| (dot(&nrm, p) - dot(&nrm, &points[i0])).abs();
    let i3 = (0..n)
        .max_by(|&a, &b| plane_dist(&points[a]).partial_cmp(&plane_dist(&points[b])).unwrap())
        .unwrap();
    if plane_dist(&points[i3]) < eps {
        return Err(Error::FlatHull);
    }

    let mut faces: Vec<[usize; 3]> = vec![
        [i0, i1, i2],
        [i0, i1, i3],
        [i0, i2, i3],
        [i1, i2, i3],
    ];
    let centroid: Vec<f64> = (0..3)
        .map(|k| (points[i0][k] + points[i1][k] + points[i2][k] + points[i3][k]) / 4.0)
        .collect();
    for f in faces.iter_mut() {
        orient_outward(f, points, &centroid);
    }

    let seed = [i0, i1, i2, i3];
    for p in 0..n {
        if seed.contains(&p) {
            continue;
        }
        let visible: Vec<usize> = (0..faces.len())
            .filter(|&fi| signed_dist(&faces[fi], points, &points[p]) > eps)
            .collect();
        if visible.is_empty() {
            continue;
        }
        // Horizon: directed edges of visible faces whose undirected twin
        // appears only once among the visible set.
        let mut edge_count = std::collections::HashMap::new();
        for &fi in &visible {
            let f = faces[fi];
            for e in [[f[0], f[1]], [f[1], f[2]], [f[2], f[0]]] {
                let key = (e[0].min(e[1]), e[0].max(e[1]));
                *edge_count.entry(key).or_insert(0usize) += 1;
            }
        }
        let mut horizon: Vec<[usize; 2]> = Vec::new();
        for &fi in &visible {
            let f = faces[fi];
            for e in [[f[0], f[1]], [f[1], f[2]], [f[2], f[0]]] {
                let key = (e[0].min(e[1]), e[0].max(e[1]));
                if edge_count[&key] == 1 {
                    horizon.push(e);
                }
            }
        }
        let keep: Vec<[usize; 3]> = (0..faces.len())
            .filter(|fi| !visible.contains(fi))
            .map(|fi| faces[fi])
            .collect();
        faces = keep;
        for e in horizon {
            // Visible faces are outward-oriented, so (e0, e1, p) is too.
            let f = [e[0], e[1], p];
            if triangle_normal_raw(&points[f[0]], &points[f[1]], &points[f[2]]).iter().map(|x| x * x).sum::<f64>()
                > (eps * eps) * 1e-8
            {
                faces.push(f);
            }
        }
    }

    // Keep only true corners: a vertex needs incident face normals of rank 3.
    let mut used: Vec<usize> = faces.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    let mut keep_vertex = Vec::new();
    for &v in &used {
        let normals: Vec<Vec<f64>> = faces
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| triangle_normal(&points[f[0]], &points[f[1]], &points[f[2]]))
            .collect();
        if normal_rank(&normals) >= 3 {
            keep_vertex.push(v);
        }
    }
    if keep_vertex.len() < 4 {
        return Err(Error::FlatHull);
    }
    let mut remap = std::collections::HashMap::new();
    let mut verts = Vec::new();
    for (new_idx, &v) in keep_vertex.iter().enumerate() {
        remap.insert(v, new_idx);
        verts.push(points[v].clone());
    }
    // Faces may reference filtered (edge-interior) points when near-coplanar
    // triangles slipped in; snap those references to the nearest kept vertex.
    let faces: Vec<[usize; 3]> = faces
        .iter()
        .map(|f| {
            let mut g = [0usize; 3];
            for (k, &v) in f.iter().enumerate() {
                g[k] = *remap.get(&v).unwrap_or_else(|| {
                    let nearest = keep_vertex
                        .iter()
                        .enumerate()
                        .min_by(|(_, &a), (_, &b)| {
                            dist(&points[a], &points[v])
                                .partial_cmp(&dist(&points[b], &points[v]))
                                .unwrap()
                        })
                        .unwrap()
                        .0;
                    &remap[&keep_vertex[nearest]]
                });
            }
            g
        })
        .filter(|f| f[0] != f[1] && f[1] != f[2] && f[0] != f[2])
        .collect();
    Ok((verts, faces))
}

fn coord_scale(points: &[Vec<f64>]) -> f64 {
    points
        .iter()
        .flat_map(|p| p.iter())
        .fold(0.0f64, |m, &x| m.max(x.abs()))
        .max(1e-300)
}

fn triangle_normal_raw(a: &[f64], b: &[f64], c: &[f64]) -> [f64; 3] {
    let u = sub(b, a);
    let v = sub(c, a);
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

pub(crate) fn triangle_normal(a: &[f64], b: &[f64], c: &[f64]) -> Vec<f64> {
    let r = triangle_normal_raw(a, b, c);
    let n = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    if n == 0.0 {
        return vec![0.0, 0.0, 0.0];
    }
    vec![r[0] / n, r[1] / n, r[2] / n]
}

fn signed_dist(face: &[usize; 3], points: &[Vec<f64>], p: &[f64]) -> f64 {
    let n = triangle_normal(&points[face[0]], &points[face[1]], &points[face[2]]);
    dot(&n, p) - dot(&n, &points[face[0]])
}

fn orient_outward(face: &mut [usize; 3], points: &[Vec<f64>], interior: &[f64]) {
    if signed_dist(face, points, interior) > 0.0 {
        face.swap(1, 2);
    }
}

fn normal_rank(normals: &[Vec<f64>]) -> usize {
    // Gram-Schmidt with a loose tolerance; normals are unit vectors.
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for n in normals {
        let mut v = n.clone();
        for b in &basis {
            let c = dot(&v, b);
            for k in 0..v.len() {
                v[k] -= c * b[k];
            }
        }
        let l = dot(&v, &v).sqrt();
        if l > 1e-6 {
            for x in v.iter_mut() {
                *x /= l;
            }
            basis.push(v);
        }
        if basis.len() == 3 {
            break;
        }
    }
    basis.len()
}
