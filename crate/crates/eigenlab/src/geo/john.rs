//! Maximum-volume inscribed (John) ellipsoid and frame canonicalization.
//!
//! For a fixed interior center z the inscribed ellipsoid
//! {x : (x-z)' Q^{-1} (x-z) <= 1} fits inside {a_i . x <= b_i} exactly when
//! a_i' Q a_i <= h_i^2 with h_i = b_i - a_i . z, so the shape Q solves
//!     maximize log det Q   s.t.   a_i' Q a_i <= h_i^2,
//! a determinant maximization under constraints linear in Q. That inner
//! problem is solved by a primal log-barrier Newton iteration in the
//! n(n+1)/2 matrix coordinates (a direct reduced-Newton pass over the dual
//! of the polar enclosing problem). The center is then optimized in an
//! outer loop: a coarse pattern search on the concave volume objective
//! followed by Newton steps on the dual force balance sum_i lam_i h_i a_i = 0.

use super::{dot, lex_cmp, ConvexBody, Ellipsoid};
use crate::error::{Error, Result};
use nalgebra::DMatrix;

/// Rigid motion plus dilation recording how a body was canonicalized:
/// canonical coordinates are y = R (x - translation) / scale and the frame
/// maps back via x = scale * R' y + translation.
#[derive(Debug, Clone)]
pub struct Frame {
    /// Orthogonal matrix, one row per canonical axis.
    pub rotation: Vec<Vec<f64>>,
    pub translation: Vec<f64>,
    pub scale: f64,
}

impl Frame {
    pub fn to_canonical(&self, x: &[f64]) -> Vec<f64> {
        let d: Vec<f64> = x
            .iter()
            .zip(&self.translation)
            .map(|(a, b)| a - b)
            .collect();
        self.rotation
            .iter()
            .map(|row| dot(row, &d) / self.scale)
            .collect()
    }

    pub fn to_original(&self, y: &[f64]) -> Vec<f64> {
        let n = y.len();
        let mut x = self.translation.clone();
        for (j, row) in self.rotation.iter().enumerate() {
            for k in 0..n {
                x[k] += self.scale * row[k] * y[j];
            }
        }
        x
    }
}

struct CenterSolve {
    /// Shape matrix in units of r0^2 (row-major n x n).
    q: [f64; 16],
    /// log det of the unscaled shape matrix.
    logdet: f64,
    /// Barrier dual weights lam_i (scaled units): Q^{-1} = sum lam a a'.
    lam: Vec<f64>,
}

/// Maximal-volume inscribed ellipsoid of a convex body.
pub fn john_ellipsoid(body: &ConvexBody) -> Result<Ellipsoid> {
    let n = body.dim();
    if n == 1 {
        let (lo, hi) = body.endpoints();
        return Ellipsoid::new(vec![0.5 * (lo + hi)], vec![vec![1.0]], vec![0.5 * (hi - lo)]);
    }
    if n > 4 {
        return Err(Error::InvalidParameter(format!(
            "inscribed ellipsoid unsupported in dimension {n}"
        )));
    }
    let (z0, r0) = body.chebyshev()?;
    if r0 <= 1e-12 * body.coord_scale().max(1.0) {
        return Err(Error::DegenerateBody("empty interior".into()));
    }
    let normals = body.normals();
    let offsets = body.offsets();

    // The vertex centroid is interior and usually much closer to the optimal
    // center than the Chebyshev point (whose optimal face can be large).
    let mut z = vec![0.0; n];
    for v in body.vertices() {
        for k in 0..n {
            z[k] += v[k] / body.vertices().len() as f64;
        }
    }
    if gaps(normals, offsets, &z, r0).is_none() {
        z = z0.clone();
    }

    let mut warm_q: Option<[f64; 16]> = None;
    let mut solve = |z: &[f64], warm: &mut Option<[f64; 16]>, tight: bool| -> Option<CenterSolve> {
        let s = mvie_fixed_center(normals, offsets, z, r0, *warm, tight)?;
        *warm = Some(s.q);
        Some(s)
    };

    let mut best = solve(&z, &mut warm_q, false)
        .ok_or_else(|| Error::DegenerateBody("centroid solve failed".into()))?
        .logdet;

    // Stage 1: coarse pattern search.
    let dirs = search_directions(n);
    let (blo, bhi) = body.bounding_box();
    let extent = blo
        .iter()
        .zip(&bhi)
        .map(|(l, h)| h - l)
        .fold(0.0f64, f64::max);
    let mut step = 0.25 * extent.max(r0);
    while step > 1e-4 * r0 {
        for _ in 0..64 {
            let mut best_cand: Option<(f64, Vec<f64>, Option<[f64; 16]>)> = None;
            for d in &dirs {
                let cand: Vec<f64> = z.iter().zip(d).map(|(zi, di)| zi + step * di).collect();
                let mut wq = warm_q;
                if let Some(s) = solve(&cand, &mut wq, false) {
                    if s.logdet > best + 1e-9 * best.abs().max(1.0)
                        && best_cand.as_ref().map_or(true, |(bv, _, _)| s.logdet > *bv)
                    {
                        best_cand = Some((s.logdet, cand, wq));
                    }
                }
            }
            match best_cand {
                Some((v, cand, wq)) => {
                    best = v;
                    z = cand;
                    warm_q = wq;
                }
                None => break,
            }
        }
        step *= 0.5;
    }

    // Stage 2: Newton polish on the force balance sum lam_i h_i a_i = 0
    // (the z-gradient of the volume objective up to a factor -2).
    let mut cur = solve(&z, &mut warm_q, true)
        .ok_or_else(|| Error::DegenerateBody("center solve failed".into()))?;
    let mut v_cur = cur.logdet;
    for _ in 0..60 {
        let hs = match gaps(normals, offsets, &z, r0) {
            Some(h) => h,
            None => break,
        };
        let mut force = vec![0.0; n];
        let mut jac = [0.0f64; 16];
        for (i, a) in normals.iter().enumerate() {
            let l = cur.lam[i];
            if l <= 0.0 {
                continue;
            }
            let ht = hs[i] / r0;
            for r in 0..n {
                force[r] += l * ht * a[r];
                for c in 0..n {
                    jac[r * n + c] += l * a[r] * a[c];
                }
            }
        }
        let mut jinv = [0.0f64; 16];
        if sym_inverse(&jac, n, &mut jinv).is_none() {
            break;
        }
        let mut delta = vec![0.0; n];
        for r in 0..n {
            for c in 0..n {
                delta[r] += jinv[r * n + c] * force[c] * r0;
            }
        }
        let dlen = delta.iter().map(|d| d * d).sum::<f64>().sqrt();
        if dlen <= 1e-11 * r0 {
            break;
        }
        let mut t = 1.0f64;
        let mut moved = false;
        while t > 1e-6 {
            let cand: Vec<f64> = z.iter().zip(&delta).map(|(zi, di)| zi + t * di).collect();
            let mut wq = warm_q;
            if let Some(s) = solve(&cand, &mut wq, true) {
                if s.logdet >= v_cur - 1e-13 * v_cur.abs().max(1.0) {
                    moved = s.logdet > v_cur;
                    z = cand;
                    warm_q = wq;
                    v_cur = s.logdet;
                    cur = s;
                    break;
                }
            }
            t *= 0.25;
        }
        if !moved || t <= 1e-6 {
            break;
        }
    }

    // Assemble the ellipsoid from the scaled shape matrix, shrinking so every
    // support constraint holds exactly.
    let mut q = DMatrix::<f64>::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            q[(r, c)] = cur.q[r * n + c] * r0 * r0;
        }
    }
    let mut worst: f64 = 0.0;
    for (a, &b) in normals.iter().zip(offsets) {
        let h = b - dot(a, &z);
        let mut qa = vec![0.0; n];
        for r in 0..n {
            for c in 0..n {
                qa[r] += q[(r, c)] * a[c];
            }
        }
        let s = dot(a, &qa).max(0.0).sqrt() / h;
        worst = worst.max(s);
    }
    if worst > 0.0 {
        q /= worst * worst;
    }
    ellipsoid_from_shape(&z, &q)
}

/// Canonicalize: rotate John axes onto coordinate axes (lengths
/// nonincreasing), translate the John center to the origin, dilate so the
/// smallest semi-axis is exactly 1. Returns the canonical body, the frame
/// mapping canonical coordinates back to the original ones, and the
/// canonical semi-axis lengths N (N_n = 1).
pub fn to_john_frame(body: &ConvexBody) -> Result<(ConvexBody, Frame, Vec<f64>)> {
    let e = john_ellipsoid(body)?;
    let n = body.dim();
    let s = e.semi_axes()[n - 1];
    let frame = Frame {
        rotation: e.directions().to_vec(),
        translation: e.center().to_vec(),
        scale: s,
    };
    // y = R (x - c) / s: apply as affine image with rows R/s and shift.
    let shift: Vec<f64> = (0..n)
        .map(|j| -dot(&frame.rotation[j], &frame.translation) / s)
        .collect();
    let canonical = body.affine_image(&frame.rotation, &shift, 1.0 / s)?;
    let mut axes: Vec<f64> = e.semi_axes().iter().map(|a| a / s).collect();
    axes[n - 1] = 1.0;
    Ok((canonical, frame, axes))
}

fn gaps(normals: &[Vec<f64>], offsets: &[f64], z: &[f64], r0: f64) -> Option<Vec<f64>> {
    let mut hs = Vec::with_capacity(normals.len());
    for (a, &b) in normals.iter().zip(offsets) {
        let h = b - dot(a, z);
        if h <= 1e-10 * r0 {
            return None;
        }
        hs.push(h);
    }
    Some(hs)
}

/// Log-barrier Newton solve of max log det Q s.t. a_i' Q a_i <= h_i^2, in
/// units of r0 (h~ = h/r0, Q~ = Q/r0^2). Returns the scaled shape, the
/// unscaled log det, and the barrier dual weights.
fn mvie_fixed_center(
    normals: &[Vec<f64>],
    offsets: &[f64],
    z: &[f64],
    r0: f64,
    warm: Option<[f64; 16]>,
    tight: bool,
) -> Option<CenterSolve> {
    let n = z.len();
    let m = normals.len();
    let hs = gaps(normals, offsets, z, r0)?;
    let ht: Vec<f64> = hs.iter().map(|h| h / r0).collect();
    let h2: Vec<f64> = ht.iter().map(|h| h * h).collect();

    // Symmetric-matrix coordinates: diagonal entries then off-diagonals.
    let d = n * (n + 1) / 2;
    let mut pairs = Vec::with_capacity(d);
    for r in 0..n {
        pairs.push((r, r));
    }
    for r in 0..n {
        for c in (r + 1)..n {
            pairs.push((r, c));
        }
    }
    // c_{ik} = a' E_k a for basis element k.
    let mut cmat = vec![0.0f64; m * d];
    for (i, a) in normals.iter().enumerate() {
        for (k, &(r, c)) in pairs.iter().enumerate() {
            cmat[i * d + k] = if r == c { a[r] * a[r] } else { 2.0 * a[r] * a[c] };
        }
    }

    let slacks = |q: &[f64; 16], out: &mut Vec<f64>| -> bool {
        for (i, a) in normals.iter().enumerate() {
            let mut qa = [0.0f64; 4];
            for r in 0..n {
                let mut s = 0.0;
                for c in 0..n {
                    s += q[r * n + c] * a[c];
                }
                qa[r] = s;
            }
            let v: f64 = (0..n).map(|r| a[r] * qa[r]).sum();
            out[i] = h2[i] - v;
            if out[i] <= 0.0 {
                return false;
            }
        }
        true
    };

    // Feasible start: warm shape shrunk until strictly inside, else a ball.
    let mut q = [0.0f64; 16];
    let mut s = vec![0.0f64; m];
    let mut have = false;
    if let Some(mut w) = warm {
        for _ in 0..60 {
            if slacks(&w, &mut s) && sym_logdet(&w, n).is_some() {
                q = w;
                have = true;
                break;
            }
            for x in w.iter_mut() {
                *x *= 0.7;
            }
        }
    }
    if !have {
        let t = 0.4 * h2.iter().cloned().fold(f64::INFINITY, f64::min);
        if !(t > 0.0) {
            return None;
        }
        for r in 0..n {
            q[r * n + r] = t;
        }
        if !slacks(&q, &mut s) {
            return None;
        }
    }

    // Barrier duality gap is about mu * m; these floors put the relative
    // volume gap at 1e-11 (tight) / 1e-8 (search).
    let mu_end = if tight { 1e-11 / m as f64 } else { 1e-8 / m as f64 };
    let mut mu = if warm.is_some() && have { 1e-4 } else { 1.0 };
    let mut qinv = [0.0f64; 16];
    loop {
        // Newton iterations at this barrier weight.
        for _ in 0..40 {
            if sym_inverse(&q, n, &mut qinv).is_none() {
                break;
            }
            // gradient and Hessian in matrix coordinates
            let mut g = vec![0.0f64; d];
            for (k, &(r, c)) in pairs.iter().enumerate() {
                g[k] = if r == c { qinv[r * n + r] } else { 2.0 * qinv[r * n + c] };
            }
            for i in 0..m {
                let w = mu / s[i];
                for k in 0..d {
                    g[k] -= w * cmat[i * d + k];
                }
            }
            // H = -(d2 logdet) - mu sum c c^T / s^2; we assemble -H (SPD).
            let mut hmat = vec![0.0f64; d * d];
            for (k, &(rk, ck)) in pairs.iter().enumerate() {
                // A_k = Qinv E_k Qinv
                let mut ak = [0.0f64; 16];
                for r in 0..n {
                    for c in 0..n {
                        let v = if rk == ck {
                            qinv[r * n + rk] * qinv[ck * n + c]
                        } else {
                            qinv[r * n + rk] * qinv[ck * n + c]
                                + qinv[r * n + ck] * qinv[rk * n + c]
                        };
                        ak[r * n + c] = v;
                    }
                }
                for (l, &(rl, cl)) in pairs.iter().enumerate() {
                    let tr = if rl == cl {
                        ak[rl * n + rl]
                    } else {
                        ak[rl * n + cl] + ak[cl * n + rl]
                    };
                    hmat[k * d + l] = tr;
                }
            }
            for i in 0..m {
                let w = mu / (s[i] * s[i]);
                for k in 0..d {
                    let cik = cmat[i * d + k];
                    if cik == 0.0 {
                        continue;
                    }
                    for l in 0..d {
                        hmat[k * d + l] += w * cik * cmat[i * d + l];
                    }
                }
            }
            // Ridge fallback: at tiny mu the Hessian is stiff enough that
            // Cholesky can fail on roundoff; the iterate is still feasible.
            let delta = match solve_spd(&hmat, &g, d).or_else(|| {
                let mut ridged = hmat.clone();
                let trace: f64 = (0..d).map(|k| hmat[k * d + k]).sum();
                for k in 0..d {
                    ridged[k * d + k] += 1e-12 * trace;
                }
                solve_spd(&ridged, &g, d)
            }) {
                Some(x) => x,
                None => break,
            };
            // Newton decrement for termination.
            let dec: f64 = delta.iter().zip(&g).map(|(a, b)| a * b).sum();
            let mut t = 1.0f64;
            let f0 = barrier_value(&q, n, &s, mu);
            let mut stepped = false;
            while t > 1e-10 {
                let mut qn = q;
                for (k, &(r, c)) in pairs.iter().enumerate() {
                    qn[r * n + c] += t * delta[k];
                    if r != c {
                        qn[c * n + r] += t * delta[k];
                    }
                }
                let mut sn = vec![0.0f64; m];
                if slacks(&qn, &mut sn) && sym_logdet(&qn, n).is_some() {
                    let f1 = barrier_value(&qn, n, &sn, mu);
                    if f1 > f0 + 1e-14 * f0.abs().max(1.0) || (t == 1.0 && dec.abs() < 1e-12) {
                        q = qn;
                        s = sn;
                        stepped = true;
                        break;
                    }
                    if f1 >= f0 - 1e-13 * f0.abs().max(1.0) && t < 1.0 {
                        q = qn;
                        s = sn;
                        stepped = true;
                        break;
                    }
                }
                t *= 0.5;
            }
            if !stepped || dec.abs() <= 1e-12 {
                break;
            }
        }
        if mu <= mu_end {
            break;
        }
        mu = (mu / 8.0).max(mu_end);
    }

    let logdet_scaled = sym_logdet(&q, n)?;
    let lam: Vec<f64> = (0..m).map(|i| mu / s[i]).collect();
    Some(CenterSolve {
        q,
        logdet: logdet_scaled + 2.0 * (n as f64) * r0.ln(),
        lam,
    })
}

fn barrier_value(q: &[f64; 16], n: usize, s: &[f64], mu: f64) -> f64 {
    let ld = sym_logdet(q, n).unwrap_or(f64::NEG_INFINITY);
    ld + mu * s.iter().map(|x| x.ln()).sum::<f64>()
}

fn sym_logdet(a: &[f64; 16], n: usize) -> Option<f64> {
    let mut l = [0.0f64; 16];
    chol(a, n, &mut l)?;
    Some(2.0 * (0..n).map(|i| l[i * n + i].ln()).sum::<f64>())
}

fn chol(a: &[f64; 16], n: usize, l: &mut [f64; 16]) -> Option<()> {
    l.iter_mut().for_each(|x| *x = 0.0);
    for i in 0..n {
        for j in 0..=i {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            if i == j {
                if s <= 0.0 || !s.is_finite() {
                    return None;
                }
                l[i * n + i] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    Some(())
}

/// Inverse and log-determinant of a small SPD matrix (row-major, n <= 4).
fn sym_inverse(a: &[f64; 16], n: usize, out: &mut [f64; 16]) -> Option<f64> {
    let mut l = [0.0f64; 16];
    chol(a, n, &mut l)?;
    let logdet = 2.0 * (0..n).map(|i| l[i * n + i].ln()).sum::<f64>();
    let mut li = [0.0f64; 16];
    for i in 0..n {
        li[i * n + i] = 1.0 / l[i * n + i];
        for j in 0..i {
            let mut s = 0.0;
            for k in j..i {
                s -= l[i * n + k] * li[k * n + j];
            }
            li[i * n + j] = s / l[i * n + i];
        }
    }
    for r in 0..n {
        for c in 0..n {
            let mut s = 0.0;
            for k in r.max(c)..n {
                s += li[k * n + r] * li[k * n + c];
            }
            out[r * n + c] = s;
        }
    }
    Some(logdet)
}

/// Dense SPD solve (row-major d x d, d <= 10) via Cholesky.
fn solve_spd(a: &[f64], b: &[f64], d: usize) -> Option<Vec<f64>> {
    let mut l = vec![0.0f64; d * d];
    for i in 0..d {
        for j in 0..=i {
            let mut s = a[i * d + j];
            for k in 0..j {
                s -= l[i * d + k] * l[j * d + k];
            }
            if i == j {
                if s <= 0.0 || !s.is_finite() {
                    return None;
                }
                l[i * d + i] = s.sqrt();
            } else {
                l[i * d + j] = s / l[j * d + j];
            }
        }
    }
    let mut y = vec![0.0f64; d];
    for i in 0..d {
        let mut s = b[i];
        for k in 0..i {
            s -= l[i * d + k] * y[k];
        }
        y[i] = s / l[i * d + i];
    }
    let mut x = vec![0.0f64; d];
    for i in (0..d).rev() {
        let mut s = y[i];
        for k in (i + 1)..d {
            s -= l[k * d + i] * x[k];
        }
        x[i] = s / l[i * d + i];
    }
    Some(x)
}

fn search_directions(n: usize) -> Vec<Vec<f64>> {
    let mut dirs = Vec::new();
    for j in 0..n {
        for s in [1.0, -1.0] {
            let mut d = vec![0.0; n];
            d[j] = s;
            dirs.push(d);
        }
    }
    let inv = 0.5f64.sqrt();
    for i in 0..n {
        for j in (i + 1)..n {
            for (si, sj) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                let mut d = vec![0.0; n];
                d[i] = si * inv;
                d[j] = sj * inv;
                dirs.push(d);
            }
        }
    }
    dirs
}

fn ellipsoid_from_shape(z: &[f64], q: &DMatrix<f64>) -> Result<Ellipsoid> {
    let n = z.len();
    let sym = (q + q.transpose()) * 0.5;
    let eig = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    // Sort by semi-axis (sqrt eigenvalue) descending; break ties on the
    // lexicographic order of the sign-canonicalized directions.
    let dirs: Vec<Vec<f64>> = (0..n)
        .map(|j| {
            let col: Vec<f64> = (0..n).map(|i| eig.eigenvectors[(i, j)]).collect();
            canonical_sign(col)
        })
        .collect();
    let semis: Vec<f64> = (0..n).map(|j| eig.eigenvalues[j].max(0.0).sqrt()).collect();
    order.sort_by(|&a, &b| {
        let d = semis[b].partial_cmp(&semis[a]).unwrap();
        if (semis[a] - semis[b]).abs() > 1e-9 * semis[a].max(semis[b]) {
            d
        } else {
            lex_cmp(&dirs[a], &dirs[b], 0.0)
        }
    });
    let semi_axes: Vec<f64> = order.iter().map(|&j| semis[j]).collect();
    if semi_axes.iter().any(|&a| a <= 0.0) {
        return Err(Error::DegenerateBody("flat inscribed ellipsoid".into()));
    }
    let mut directions: Vec<Vec<f64>> = order.iter().map(|&j| dirs[j].clone()).collect();
    // Orthogonal, not necessarily special-orthogonal; flip the last axis if
    // needed so the frame is a proper rotation.
    if det_rows(&directions) < 0.0 {
        for x in directions[n - 1].iter_mut() {
            *x = -*x;
        }
    }
    Ellipsoid::new(z.to_vec(), directions, semi_axes)
}

fn canonical_sign(mut v: Vec<f64>) -> Vec<f64> {
    let mut k = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[k].abs() + 1e-12 {
            k = i;
        }
    }
    if v[k] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
    v
}

fn det_rows(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    m.determinant()
}

/// Gram-Schmidt residual check used in tests and invariants.
#[cfg(test)]
pub(crate) fn max_orthonormality_defect(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((dot(&rows[i], &rows[j]) - want).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geo::norm;
    use crate::zoo;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn john_of_symmetric_box() {
        let b = zoo::make_box(&[4.0, 2.0]).unwrap().translated(&[-2.0, -1.0]).unwrap();
        let e = john_ellipsoid(&b).unwrap();
        assert!(norm(e.center()) < 1e-6, "center {:?}", e.center());
        assert!((e.semi_axes()[0] - 2.0).abs() < 1e-5, "{:?}", e.semi_axes());
        assert!((e.semi_axes()[1] - 1.0).abs() < 1e-5);
        // axis-aligned
        assert!(e.directions()[0][0].abs() > 1.0 - 1e-6);
    }

    #[test]
    fn john_of_triangle_is_steiner_inellipse() {
        let t = ConvexBody::from_points(
            2,
            &[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]],
        )
        .unwrap();
        let e = john_ellipsoid(&t).unwrap();
        assert!(
            (e.center()[0] - 1.0 / 3.0).abs() < 1e-3 && (e.center()[1] - 1.0 / 3.0).abs() < 1e-3,
            "center {:?}",
            e.center()
        );
        // Steiner inellipse area = pi/(3 sqrt 3) * triangle area
        let area = std::f64::consts::PI * e.semi_axes()[0] * e.semi_axes()[1];
        let expect = std::f64::consts::PI / (3.0 * 3.0f64.sqrt()) * 0.5;
        assert!((area - expect).abs() < 1e-3 * expect, "area {area} vs {expect}");
    }

    #[test]
    fn john_of_fine_polygon_ball() {
        let pts: Vec<Vec<f64>> = (0..256)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / 256.0;
                vec![t.cos(), t.sin()]
            })
            .collect();
        let b = ConvexBody::from_points(2, &pts).unwrap();
        let e = john_ellipsoid(&b).unwrap();
        assert!(norm(e.center()) < 1e-4);
        for &a in e.semi_axes() {
            assert!((a - 1.0).abs() < 0.01, "semi {a}");
        }
    }

    #[test]
    fn john_sandwich_on_random_polytopes() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for trial in 0..6 {
            let dim = if trial % 2 == 0 { 2 } else { 3 };
            let m = 10 + 4 * trial;
            let pts: Vec<Vec<f64>> = (0..m)
                .map(|_| (0..dim).map(|k| rng.gen_range(-1.0..1.0) * (1 + k * 3) as f64).collect())
                .collect();
            let b = match ConvexBody::from_points(dim, &pts) {
                Ok(b) => b,
                Err(_) => continue,
            };
            let e = john_ellipsoid(&b).unwrap();
            // E inside body: sampled points
            for _ in 0..2000 {
                let u: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let l = norm(&u);
                if l > 1.0 {
                    continue;
                }
                let p = e.point_at(&u);
                assert!(b.contains(&p), "ellipsoid point escaped (dim {dim})");
            }
            // body inside n*E
            for v in b.vertices() {
                assert!(
                    e.contains_dilated(v, dim as f64, 1e-6),
                    "vertex outside {}E: q = {}",
                    dim,
                    e.quadratic(v)
                );
            }
        }
    }

    #[test]
    fn john_frame_canonicalizes_rotated_box() {
        let b = zoo::make_box(&[8.0, 2.0]).unwrap();
        let (canon, _, axes) = to_john_frame(&b).unwrap();
        assert!((axes[0] - 4.0).abs() < 1e-5, "axes {axes:?}");
        assert!((axes[1] - 1.0).abs() < 1e-12);
        // canonical body is the box centered at the origin
        let (lo, hi) = canon.bounding_box();
        assert!((lo[0] + 4.0).abs() < 1e-5 && (hi[0] - 4.0).abs() < 1e-5);
        assert!((lo[1] + 1.0).abs() < 1e-5 && (hi[1] - 1.0).abs() < 1e-5);

        // the same box rotated by 30 degrees canonicalizes to the same N
        let th = 30f64.to_radians();
        let rot = vec![vec![th.cos(), -th.sin()], vec![th.sin(), th.cos()]];
        let br = b.affine_image(&rot, &[3.0, -1.0], 1.0).unwrap();
        let (_, _, axes_r) = to_john_frame(&br).unwrap();
        for (a, b) in axes.iter().zip(&axes_r) {
            assert!((a - b).abs() < 1e-5, "{axes:?} vs {axes_r:?}");
        }
    }

    #[test]
    fn john_frame_of_canonical_body_is_identityish() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pts: Vec<Vec<f64>> = (0..24)
            .map(|_| vec![rng.gen_range(-4.0..4.0), rng.gen_range(-1.0..1.0)])
            .collect();
        let b = ConvexBody::from_points(2, &pts).unwrap();
        let (canon, _, axes) = to_john_frame(&b).unwrap();
        let e = john_ellipsoid(&canon).unwrap();
        assert!(norm(e.center()) < 1e-5, "center {:?}", e.center());
        assert!((e.semi_axes()[1] - 1.0).abs() < 1e-5);
        for (a, b) in axes.iter().zip(e.semi_axes()) {
            assert!((a - b).abs() < 1e-4);
        }
        assert!(max_orthonormality_defect(e.directions()) < 1e-10);
    }
}
