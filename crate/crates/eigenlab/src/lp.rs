//! Dense two-phase simplex for the small linear programs the geometry layer
//! needs: Chebyshev centers (inradius), support values over H-forms, and
//! feasibility probes. Bland's rule, so it terminates on degenerate bodies.

use crate::error::{Error, Result};

const EPS: f64 = 1e-11;

/// Maximize `c·x` over `{x free : rows[i]·x <= b[i]}`.
///
/// Returns the optimal value and one maximizer. Errors on infeasible or
/// unbounded programs.
pub fn linear_max(c: &[f64], rows: &[Vec<f64>], b: &[f64]) -> Result<(f64, Vec<f64>)> {
    let n = c.len();
    let m = rows.len();
    if m == 0 {
        return Err(Error::LinearProgram("no constraints (unbounded)".into()));
    }
    // Free variables split as x = u - v, u,v >= 0, then slacks, then
    // artificials for rows whose rhs had to be negated.
    let nx = 2 * n;
    let ncols = nx + m + m; // worst case: one artificial per row
    let mut t = vec![vec![0.0; ncols + 1]; m + 1];
    let mut basis = vec![0usize; m];
    let mut n_art = 0usize;
    for i in 0..m {
        let flip = b[i] < 0.0;
        let s = if flip { -1.0 } else { 1.0 };
        for j in 0..n {
            t[i][2 * j] = s * rows[i][j];
            t[i][2 * j + 1] = -s * rows[i][j];
        }
        t[i][nx + i] = s; // slack
        t[i][ncols] = s * b[i];
        if flip {
            t[i][nx + m + n_art] = 1.0;
            basis[i] = nx + m + n_art;
            n_art += 1;
        } else {
            basis[i] = nx + i;
        }
    }
    let art_start = nx + m;
    let ncols_used = nx + m + n_art;

    // Phase 1: minimize the sum of artificials.
    if n_art > 0 {
        for j in 0..=ncols {
            t[m][j] = 0.0;
        }
        for j in art_start..art_start + n_art {
            t[m][j] = 1.0;
        }
        for i in 0..m {
            if basis[i] >= art_start {
                let row = t[i].clone();
                for j in 0..=ncols {
                    t[m][j] -= row[j];
                }
            }
        }
        simplex_iterate(&mut t, &mut basis, ncols_used, ncols, usize::MAX)?;
        if t[m][ncols] < -1e-7 {
            return Err(Error::LinearProgram("infeasible".into()));
        }
        // Pivot any artificial still in the basis out (degenerate rows).
        for i in 0..m {
            if basis[i] >= art_start {
                if let Some(j) = (0..art_start).find(|&j| t[i][j].abs() > 1e-9) {
                    pivot(&mut t, &mut basis, i, j, ncols);
                }
            }
        }
    }

    // Phase 2: minimize -c·x with artificials barred from entering.
    for j in 0..=ncols {
        t[m][j] = 0.0;
    }
    for j in 0..n {
        t[m][2 * j] = -c[j];
        t[m][2 * j + 1] = c[j];
    }
    for i in 0..m {
        if basis[i] < art_start && t[m][basis[i]].abs() > 0.0 {
            let coef = t[m][basis[i]];
            let row = t[i].clone();
            for j in 0..=ncols {
                t[m][j] -= coef * row[j];
            }
        }
    }
    simplex_iterate(&mut t, &mut basis, ncols_used, ncols, art_start)?;

    let mut x = vec![0.0; n];
    for i in 0..m {
        let bi = basis[i];
        if bi < nx {
            let v = t[i][ncols];
            if bi % 2 == 0 {
                x[bi / 2] += v;
            } else {
                x[bi / 2] -= v;
            }
        }
    }
    let value = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();
    Ok((value, x))
}

fn simplex_iterate(
    t: &mut [Vec<f64>],
    basis: &mut [usize],
    ncols_used: usize,
    rhs: usize,
    barred_from: usize,
) -> Result<()> {
    let m = basis.len();
    // Bland's rule cannot cycle, but guard against tolerance-driven stalls.
    let max_pivots = 2000 + 50 * (m + ncols_used);
    for _ in 0..max_pivots {
        // Bland: smallest-index column with negative reduced cost.
        let mut enter = None;
        for j in 0..ncols_used {
            if j >= barred_from {
                break;
            }
            if t[m][j] < -EPS {
                enter = Some(j);
                break;
            }
        }
        let Some(j) = enter else { return Ok(()) };
        // Ratio test; Bland tie-break on the smallest basis index.
        let mut leave: Option<(usize, f64)> = None;
        for i in 0..m {
            if t[i][j] > EPS {
                let ratio = t[i][rhs] / t[i][j];
                match leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < lr - EPS || (ratio < lr + EPS && basis[i] < basis[li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((i, _)) = leave else {
            return Err(Error::LinearProgram("unbounded".into()));
        };
        pivot(t, basis, i, j, rhs);
    }
    Err(Error::LinearProgram("pivot cap exceeded".into()))
}

fn pivot(t: &mut [Vec<f64>], basis: &mut [usize], i: usize, j: usize, rhs: usize) {
    let m = basis.len();
    let piv = t[i][j];
    for col in 0..=rhs {
        t[i][col] /= piv;
    }
    for r in 0..=m {
        if r != i && t[r][j].abs() > 0.0 {
            let f = t[r][j];
            for col in 0..=rhs {
                t[r][col] -= f * t[i][col];
            }
        }
    }
    basis[i] = j;
}

/// Chebyshev center of `{x : normals[i]·x <= offsets[i]}` with unit normals:
/// maximize r subject to `normals[i]·x + r <= offsets[i]`.
///
/// Returns `(center, radius)`. A nonpositive radius means empty interior.
pub fn chebyshev_center(normals: &[Vec<f64>], offsets: &[f64]) -> Result<(Vec<f64>, f64)> {
    let n = normals
        .first()
        .ok_or_else(|| Error::LinearProgram("no constraints".into()))?
        .len();
    let mut rows = Vec::with_capacity(normals.len());
    for a in normals {
        let mut row = a.clone();
        row.push(1.0);
        rows.push(row);
    }
    let mut c = vec![0.0; n + 1];
    c[n] = 1.0;
    let (r, x) = linear_max(&c, &rows, offsets)?;
    Ok((x[..n].to_vec(), r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn box2d(a: f64, b: f64) -> (Vec<Vec<f64>>, Vec<f64>) {
        // [0,a] x [0,b]
        (
            vec![
                vec![1.0, 0.0],
                vec![-1.0, 0.0],
                vec![0.0, 1.0],
                vec![0.0, -1.0],
            ],
            vec![a, 0.0, b, 0.0],
        )
    }

    #[test]
    fn support_of_box() {
        let (rows, b) = box2d(2.0, 1.0);
        let (v, x) = linear_max(&[1.0, 1.0], &rows, &b).unwrap();
        assert!((v - 3.0).abs() < 1e-9, "v = {v}");
        assert!((x[0] - 2.0).abs() < 1e-9 && (x[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn chebyshev_center_of_box() {
        let (rows, b) = box2d(4.0, 1.0);
        let (c, r) = chebyshev_center(&rows, &b).unwrap();
        assert!((r - 0.5).abs() < 1e-9, "r = {r}");
        assert!((c[1] - 0.5).abs() < 1e-9);
        // x-coordinate of the center is anywhere in [0.5, 3.5]; just containment:
        assert!(c[0] > 0.5 - 1e-9 && c[0] < 3.5 + 1e-9);
    }

    #[test]
    fn chebyshev_center_of_right_triangle() {
        // x >= 0, y >= 0, x + y <= 1: inradius 1 - sqrt(2)/2
        let s = 0.5f64.sqrt();
        let rows = vec![vec![-1.0, 0.0], vec![0.0, -1.0], vec![s, s]];
        let b = vec![0.0, 0.0, s];
        let (c, r) = chebyshev_center(&rows, &b).unwrap();
        let expect = 1.0 - 0.5f64.sqrt();
        assert!((r - expect).abs() < 1e-9, "r = {r}, expect {expect}");
        assert!((c[0] - r).abs() < 1e-9 && (c[1] - r).abs() < 1e-9);
    }

    #[test]
    fn negative_offsets_need_phase_one() {
        // Shifted box [10,11] x [10,11]: all four offsets force phase 1.
        let rows = vec![
            vec![1.0, 0.0],
            vec![-1.0, 0.0],
            vec![0.0, 1.0],
            vec![0.0, -1.0],
        ];
        let b = vec![11.0, -10.0, 11.0, -10.0];
        let (c, r) = chebyshev_center(&rows, &b).unwrap();
        assert!((r - 0.5).abs() < 1e-9);
        assert!((c[0] - 10.5).abs() < 1e-9 && (c[1] - 10.5).abs() < 1e-9);
    }

    #[test]
    fn unbounded_detected() {
        let rows = vec![vec![-1.0, 0.0]];
        let b = vec![0.0];
        assert!(linear_max(&[1.0, 0.0], &rows, &b).is_err());
    }

    #[test]
    fn infeasible_detected() {
        let rows = vec![vec![1.0], vec![-1.0]];
        let b = vec![-1.0, 0.0]; // x <= -1 and x >= 0
        assert!(linear_max(&[1.0], &rows, &b).is_err());
    }
}
