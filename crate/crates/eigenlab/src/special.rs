//! Bessel J0/J1 by power series (only needed on [0, j01]), the first J0
//! zero, and the ball eigenfunction norm ratios used by the Chiti check.

use crate::error::{Error, Result};

/// J0 by its power series; accurate to machine precision for |x| <= 12,
/// which covers every use here (arguments stay below j01 ~ 2.405).
pub fn bessel_j0(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        term *= q / ((k * k) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// J1 by its power series.
pub fn bessel_j1(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 0.5 * x;
    let mut sum = term;
    for k in 1..60 {
        term *= q / ((k * (k + 1)) as f64);
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// First positive zero of J0, by bisection on the power series.
pub fn j0_first_zero() -> f64 {
    let mut lo = 2.0;
    let mut hi = 3.0;
    // J0(2) > 0 > J0(3)
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if bessel_j0(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// ||u||_2 / ||u||_inf for the sup-normalized ground state of the unit ball,
/// from the radial profile by adaptive Simpson quadrature.
///
/// n = 2: u = J0(j01 r); n = 3: u = sin(pi r) / (pi r).
pub fn chiti_constant(n: usize) -> Result<f64> {
    match n {
        2 => {
            let j01 = j0_first_zero();
            // l2^2 = 2 pi  Int_0^1 J0(j01 r)^2 r dr
            let i = simpson(|r| bessel_j0(j01 * r).powi(2) * r, 0.0, 1.0, 1e-12);
            Ok((2.0 * std::f64::consts::PI * i).sqrt())
        }
        3 => {
            // l2^2 = 4 pi Int_0^1 (sin(pi r)/(pi r))^2 r^2 dr = (4/pi) Int sin^2
            let i = simpson(
                |r| {
                    let s = (std::f64::consts::PI * r).sin();
                    s * s
                },
                0.0,
                1.0,
                1e-12,
            );
            Ok((4.0 / std::f64::consts::PI * i).sqrt())
        }
        other => Err(Error::InvalidParameter(format!(
            "Chiti constant only for n in {{2,3}}, got {other}"
        ))),
    }
}

/// Radius where the ball ground state crosses level c (n = 2), from
/// J0(j01 r) = c by bisection.
pub fn ball_level_radius(c: f64) -> f64 {
    let j01 = j0_first_zero();
    let mut lo = 0.0;
    let mut hi = 1.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if bessel_j0(j01 * mid) > c {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Composite adaptive Simpson on [a, b].
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: usize,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if depth == 0 || (left + right - whole).abs() < 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    rec(&f, a, b, fa, fm, fb, whole, tol, 40)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values computed independently (30-digit arithmetic):
    // j01 = 2.40482555769577276862163187933
    // J1(j01) = 0.519147497289466788140202640209
    // c2* = sqrt(pi) |J1(j01)| = 0.920164980758676352413580647113
    // c3* = sqrt(2/pi) = 0.797884560802865355879892119869

    #[test]
    fn first_zero_of_j0() {
        let z = j0_first_zero();
        assert!((z - 2.404825557695773).abs() < 1e-12, "j01 = {z}");
    }

    #[test]
    fn j1_at_the_zero() {
        let z = j0_first_zero();
        assert!((bessel_j1(z) - 0.5191474972894667).abs() < 1e-12);
    }

    #[test]
    fn chiti_constants_match_bessel_identities() {
        // The quadrature route must agree with the closed forms
        // Int_0^1 J0(j01 r)^2 r dr = J1(j01)^2 / 2 and Int sin^2 = 1/2.
        let c2 = chiti_constant(2).unwrap();
        assert!((c2 - 0.9201649807586764).abs() < 1e-9, "c2* = {c2}");
        let c3 = chiti_constant(3).unwrap();
        assert!((c3 - 0.7978845608028654).abs() < 1e-9, "c3* = {c3}");
        assert!(chiti_constant(4).is_err());
    }

    #[test]
    fn half_level_radius_of_disk_state() {
        let r = ball_level_radius(0.5);
        assert!((r - 0.6325382116806330).abs() < 1e-10, "r = {r}");
    }

    #[test]
    fn simpson_exactness() {
        let i = simpson(|x| x * x, 0.0, 2.0, 1e-14);
        assert!((i - 8.0 / 3.0).abs() < 1e-12);
    }
}
