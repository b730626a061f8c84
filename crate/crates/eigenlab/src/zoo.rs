//! Named domain families and seeded random convex test bodies.
//!
//! Smooth boundaries (sector arcs, cone caps) are approximated by polygonal
//! arcs with at least 256 chords; the sagitta error R(1 - cos(pi/chords)) is
//! second order in the chord count and stays far below the eigensolver's
//! discretization error.

use crate::error::{Error, Result};
use crate::geo::ConvexBody;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

pub const SECTOR_CHORDS: usize = 256;

/// One-line description of a corpus body; round-trips through its
/// `Display`/`parse` text form exactly.
#[derive(Debug, Clone, PartialEq)]
pub enum DomainSpec {
    /// `box 4x1` or `box 8x2x1`
    Box { lengths: Vec<f64> },
    /// `sector2d R=32 eps=0.0322...`
    Sector2d { radius: f64, half_angle: f64 },
    /// `cone n=3 R=16`
    ConeSector { dim: usize, radius: f64 },
    /// `trapezoid R=10 T=1000`
    Trapezoid { plateau: f64, ramp: f64 },
    /// `slab3d a=8 b=8 h0=1 sx=0.0625 sy=0` (rectangular base a x b,
    /// height h0 - sx*x1 - sy*x2)
    Slab3d { a: f64, b: f64, h0: f64, sx: f64, sy: f64 },
    /// `random n=2 m=64 seed=3`
    RandomPolytope { dim: usize, m: usize, seed: u64 },
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainSpec::Box { lengths } => {
                write!(f, "box ")?;
                for (i, l) in lengths.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{l}")?;
                }
                Ok(())
            }
            DomainSpec::Sector2d { radius, half_angle } => {
                write!(f, "sector2d R={radius} eps={half_angle}")
            }
            DomainSpec::ConeSector { dim, radius } => write!(f, "cone n={dim} R={radius}"),
            DomainSpec::Trapezoid { plateau, ramp } => write!(f, "trapezoid R={plateau} T={ramp}"),
            DomainSpec::Slab3d { a, b, h0, sx, sy } => {
                write!(f, "slab3d a={a} b={b} h0={h0} sx={sx} sy={sy}")
            }
            DomainSpec::RandomPolytope { dim, m, seed } => {
                write!(f, "random n={dim} m={m} seed={seed}")
            }
        }
    }
}

impl std::str::FromStr for DomainSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.split_whitespace();
        let kind = it.next().ok_or_else(|| Error::Parse("empty domain spec".into()))?;
        let rest: Vec<&str> = it.collect();
        let kv = |key: &str| -> Result<f64> {
            for tok in &rest {
                if let Some(v) = tok.strip_prefix(&format!("{key}=")) {
                    return v
                        .parse::<f64>()
                        .map_err(|e| Error::Parse(format!("bad {key}: {e}")));
                }
            }
            Err(Error::Parse(format!("missing {key}= in '{s}'")))
        };
        match kind {
            "box" => {
                let dims = rest
                    .first()
                    .ok_or_else(|| Error::Parse("box needs lengths like 4x1".into()))?;
                let lengths = dims
                    .split('x')
                    .map(|t| t.parse::<f64>().map_err(|e| Error::Parse(format!("{e}"))))
                    .collect::<Result<Vec<f64>>>()?;
                Ok(DomainSpec::Box { lengths })
            }
            "sector2d" => Ok(DomainSpec::Sector2d {
                radius: kv("R")?,
                half_angle: kv("eps")?,
            }),
            "cone" => Ok(DomainSpec::ConeSector {
                dim: kv("n")? as usize,
                radius: kv("R")?,
            }),
            "trapezoid" => Ok(DomainSpec::Trapezoid {
                plateau: kv("R")?,
                ramp: kv("T")?,
            }),
            "slab3d" => Ok(DomainSpec::Slab3d {
                a: kv("a")?,
                b: kv("b")?,
                h0: kv("h0")?,
                sx: kv("sx")?,
                sy: kv("sy")?,
            }),
            "random" => Ok(DomainSpec::RandomPolytope {
                dim: kv("n")? as usize,
                m: kv("m")? as usize,
                seed: kv("seed")? as u64,
            }),
            other => Err(Error::Parse(format!("unknown domain kind '{other}'"))),
        }
    }
}

impl DomainSpec {
    pub fn build(&self) -> Result<ConvexBody> {
        match self {
            DomainSpec::Box { lengths } => make_box(lengths),
            DomainSpec::Sector2d { radius, half_angle } => make_sector2d(*radius, *half_angle),
            DomainSpec::ConeSector { dim, radius } => make_cone_sector(*dim, *radius),
            DomainSpec::Trapezoid { plateau, ramp } => make_trapezoid(*plateau, *ramp),
            DomainSpec::Slab3d { a, b, h0, sx, sy } => {
                let base = make_box(&[*a, *b])?;
                let heights: Vec<f64> = base
                    .vertices()
                    .iter()
                    .map(|v| h0 - sx * v[0] - sy * v[1])
                    .collect();
                make_slab3d(&base, &heights)
            }
            DomainSpec::RandomPolytope { dim, m, seed } => random_polytope(*dim, *m, *seed),
        }
    }
}

/// Axis-aligned box [0, l1] x ... x [0, ln].
pub fn make_box(lengths: &[f64]) -> Result<ConvexBody> {
    let n = lengths.len();
    if n == 0 || lengths.iter().any(|&l| l <= 0.0) {
        return Err(Error::InvalidParameter("box lengths must be positive".into()));
    }
    let mut vertices = Vec::with_capacity(1 << n);
    for mask in 0..(1usize << n) {
        let v: Vec<f64> = (0..n)
            .map(|k| if mask >> k & 1 == 1 { lengths[k] } else { 0.0 })
            .collect();
        vertices.push(v);
    }
    let mut normals = Vec::with_capacity(2 * n);
    let mut offsets = Vec::with_capacity(2 * n);
    for k in 0..n {
        let mut plus = vec![0.0; n];
        plus[k] = 1.0;
        normals.push(plus);
        offsets.push(lengths[k]);
        let mut minus = vec![0.0; n];
        minus[k] = -1.0;
        normals.push(minus);
        offsets.push(0.0);
    }
    ConvexBody::from_forms(n, vertices, normals, offsets)
}

/// Circular sector {0 < r < R, |theta| <= eps} about the positive x1-axis,
/// with the arc approximated by `SECTOR_CHORDS` chords.
pub fn make_sector2d(radius: f64, half_angle: f64) -> Result<ConvexBody> {
    make_sector2d_with(radius, half_angle, SECTOR_CHORDS)
}

pub fn make_sector2d_with(radius: f64, half_angle: f64, chords: usize) -> Result<ConvexBody> {
    if radius <= 0.0 {
        return Err(Error::InvalidParameter("sector radius must be positive".into()));
    }
    if half_angle <= 0.0 || half_angle >= std::f64::consts::FRAC_PI_2 {
        return Err(Error::InvalidParameter(
            "sector half-angle must lie in (0, pi/2)".into(),
        ));
    }
    let mut pts = vec![vec![0.0, 0.0]];
    for k in 0..=chords {
        let t = -half_angle + 2.0 * half_angle * k as f64 / chords as f64;
        pts.push(vec![radius * t.cos(), radius * t.sin()]);
    }
    ConvexBody::from_points(2, &pts)
}

/// Cone sector: apex at the origin, opening half-angle 0.5 about the
/// x1-axis, truncated at radius N1. For n = 2 this is `make_sector2d(N1, 0.5)`;
/// for n = 3 the angular disc is realized as a regular 16-gon cap.
pub fn make_cone_sector(dim: usize, radius: f64) -> Result<ConvexBody> {
    if radius <= 2.0 {
        return Err(Error::InvalidParameter("cone radius must exceed 2".into()));
    }
    match dim {
        2 => make_sector2d(radius, 0.5),
        3 => {
            let theta: f64 = 0.5;
            let gon = 16;
            let mut pts = vec![vec![0.0, 0.0, 0.0], vec![radius, 0.0, 0.0]];
            for k in 0..gon {
                let phi = 2.0 * std::f64::consts::PI * k as f64 / gon as f64;
                pts.push(vec![
                    radius * theta.cos(),
                    radius * theta.sin() * phi.cos(),
                    radius * theta.sin() * phi.sin(),
                ]);
            }
            ConvexBody::from_points(3, &pts)
        }
        other => Err(Error::InvalidParameter(format!(
            "cone sector unsupported in dimension {other}"
        ))),
    }
}

/// Plateau-ramp body {0 <= x1 <= R+T, 0 <= x2 <= h(x1)} with h = 1 on [0,R]
/// and ramping linearly to 0 at R+T.
pub fn make_trapezoid(plateau: f64, ramp: f64) -> Result<ConvexBody> {
    if plateau < 0.0 || ramp <= 0.0 {
        return Err(Error::InvalidParameter(
            "trapezoid needs R >= 0 and T > 0".into(),
        ));
    }
    let pts = if plateau > 0.0 {
        vec![
            vec![0.0, 0.0],
            vec![plateau + ramp, 0.0],
            vec![plateau, 1.0],
            vec![0.0, 1.0],
        ]
    } else {
        vec![vec![0.0, 0.0], vec![ramp, 0.0], vec![0.0, 1.0]]
    };
    ConvexBody::from_points(2, &pts)
}

/// Slab over a 2D convex base: {(x1,x2) in base, 0 <= x3 <= h(x1,x2)} with h
/// affine-interpolated from its values at the base vertices. The height
/// samples must be concave (each lifted point on the upper hull).
pub fn make_slab3d(base: &ConvexBody, heights: &[f64]) -> Result<ConvexBody> {
    if base.dim() != 2 {
        return Err(Error::InvalidParameter("slab base must be 2D".into()));
    }
    if heights.len() != base.vertices().len() {
        return Err(Error::InvalidParameter(
            "need one height per base vertex".into(),
        ));
    }
    if heights.iter().any(|&h| h < 0.0) {
        return Err(Error::InvalidParameter("heights must be nonnegative".into()));
    }
    if heights.iter().all(|&h| h < 1e-12) {
        return Err(Error::DegenerateBody("flat slab".into()));
    }
    let mut pts = Vec::new();
    for v in base.vertices() {
        pts.push(vec![v[0], v[1], 0.0]);
    }
    for (v, &h) in base.vertices().iter().zip(heights) {
        pts.push(vec![v[0], v[1], h]);
    }
    let body = ConvexBody::from_points(3, &pts)?;
    // Concavity audit: each lifted sample must lie on the hull, i.e. nudging
    // it upward must leave the body.
    let zscale = heights.iter().cloned().fold(0.0f64, f64::max).max(1.0);
    for (i, (v, &h)) in base.vertices().iter().zip(heights).enumerate() {
        if h > 1e-12 && body.contains(&[v[0], v[1], h + 1e-6 * zscale]) {
            return Err(Error::HeightNotConcave(i));
        }
    }
    Ok(body)
}

/// Hull of m points drawn uniformly in a seed-derived anisotropic box with
/// per-axis aspect in [1, 32]. Deterministic for a fixed seed.
pub fn random_polytope(dim: usize, m: usize, seed: u64) -> Result<ConvexBody> {
    if m < dim + 1 {
        return Err(Error::InvalidParameter("need at least dim+1 points".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let aspect: Vec<f64> = (0..dim).map(|_| rng.gen_range(1.0..32.0)).collect();
    for _attempt in 0..8 {
        let pts: Vec<Vec<f64>> = (0..m)
            .map(|_| (0..dim).map(|k| rng.gen_range(0.0..aspect[k])).collect())
            .collect();
        match ConvexBody::from_points(dim, &pts) {
            Ok(b) => return Ok(b),
            Err(Error::FlatHull) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::DegenerateBody(
        "random polytope degenerate after retries".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_radii() {
        let b = make_box(&[4.0, 1.0]).unwrap();
        let (r, d) = b.radii().unwrap();
        assert!((r - 0.5).abs() < 1e-9);
        assert!((d - 17f64.sqrt()).abs() < 1e-12);
        assert!(make_box(&[1.0, -1.0]).is_err());
    }

    #[test]
    fn cube_john_axes() {
        let b = make_box(&[1.0, 1.0, 1.0]).unwrap();
        let e = crate::geo::john_ellipsoid(&b).unwrap();
        for &a in e.semi_axes() {
            assert!((a - 0.5).abs() < 1e-5, "{:?}", e.semi_axes());
        }
        let b = make_box(&[8.0, 2.0, 1.0]).unwrap();
        let e = crate::geo::john_ellipsoid(&b).unwrap();
        let expect = [4.0, 1.0, 0.5];
        for (a, w) in e.semi_axes().iter().zip(expect) {
            assert!((a - w).abs() < 1e-5, "{:?}", e.semi_axes());
        }
    }

    #[test]
    fn sector_inradius_formula() {
        let b = make_sector2d(1.0, std::f64::consts::FRAC_PI_4).unwrap();
        let (r, _) = b.radii().unwrap();
        let expect = (std::f64::consts::FRAC_PI_4).sin() / (1.0 + (std::f64::consts::FRAC_PI_4).sin());
        assert!((r - expect).abs() < 0.01 * expect, "r = {r}, expect {expect}");

        // R = 32 with sin(eps) = 1/31 gives inradius 1
        let eps = (1.0f64 / 31.0).asin();
        let b = make_sector2d(32.0, eps).unwrap();
        let (r, _) = b.radii().unwrap();
        assert!((r - 1.0).abs() < 0.01, "r = {r}");
    }

    #[test]
    fn sector_membership_spot_checks() {
        let b = make_sector2d(1.0, std::f64::consts::FRAC_PI_3).unwrap();
        let t = std::f64::consts::FRAC_PI_3 * 0.9;
        assert!(b.contains(&[0.9 * t.cos(), 0.9 * t.sin()]));
        assert!(!b.contains(&[0.9 * (2.0 * t).cos(), 0.9 * (2.0 * t).sin()]));
        assert!(!b.contains(&[1.05, 0.0]));
    }

    #[test]
    fn cone_sector_dims() {
        let c2 = make_cone_sector(2, 16.0).unwrap();
        let s2 = make_sector2d(16.0, 0.5).unwrap();
        let (r2, d2) = c2.radii().unwrap();
        let (rs, ds) = s2.radii().unwrap();
        assert!((r2 - rs).abs() < 1e-9 && (d2 - ds).abs() < 1e-9);

        let c3 = make_cone_sector(3, 16.0).unwrap();
        let e = crate::geo::john_ellipsoid(&c3).unwrap();
        let ax = e.semi_axes();
        assert!(ax[0] > 4.0, "major {ax:?}");
        assert!(ax[1] / ax[2] < 2.0, "cross axes comparable: {ax:?}");

        let c3 = make_cone_sector(3, 8.0).unwrap();
        let s2 = make_sector2d(8.0, 0.5).unwrap();
        let (r3, _) = c3.radii().unwrap();
        let (r2, _) = s2.radii().unwrap();
        assert!(r3 / r2 < 2.0 && r2 / r3 < 2.0, "r3 = {r3}, r2 = {r2}");

        assert!(make_cone_sector(4, 16.0).is_err());
        assert!(make_cone_sector(3, 1.0).is_err());
    }

    #[test]
    fn trapezoid_profile_values() {
        let b = make_trapezoid(10.0, 1000.0).unwrap();
        // width at x: 1 on plateau, linear ramp after
        for (x, want) in [(0.0, 1.0), (10.0, 1.0), (510.0, 0.5), (1009.999999, 1e-8)] {
            let s = b.cross_section(&[0], &[x]).unwrap().body();
            match s {
                Some(sec) => {
                    let (lo, hi) = sec.endpoints();
                    assert!((hi - lo - want).abs() < 1e-6, "width({x}) = {}", hi - lo);
                }
                None => assert!(want < 1e-6),
            }
        }
        assert!(make_trapezoid(0.0, 8.0).is_ok());
        assert!(make_trapezoid(0.0, 0.0).is_err());

        // near-degenerate ramp approximates the rectangle
        let b = make_trapezoid(8.0, 1e-6).unwrap();
        let (r, d) = b.radii().unwrap();
        assert!((r - 0.5).abs() < 1e-5);
        assert!((d - 65f64.sqrt()).abs() < 1e-4);
    }

    #[test]
    fn slab_box_and_wedge() {
        let base = make_box(&[4.0, 4.0]).unwrap();
        let slab = make_slab3d(&base, &[1.0, 1.0, 1.0, 1.0]).unwrap();
        let (r, _) = slab.radii().unwrap();
        assert!((r - 0.5).abs() < 1e-9);

        // h = 1 - x1/8 over the square base
        let heights: Vec<f64> = base.vertices().iter().map(|v| 1.0 - v[0] / 8.0).collect();
        let prism = make_slab3d(&base, &heights).unwrap();
        assert!(prism.contains(&[0.0, 2.0, 0.99]));
        assert!(!prism.contains(&[4.0, 2.0, 0.6]));
        assert!(prism.contains(&[4.0, 2.0, 0.49]));

        // saddle corner data: the roof is the concave envelope (a tent over
        // the diagonal whose endpoints carry the high values)
        let heights: Vec<f64> = base
            .vertices()
            .iter()
            .map(|v| if (v[0] > 2.0) != (v[1] > 2.0) { 1.0 } else { 0.0 })
            .collect();
        let saddle = make_slab3d(&base, &heights).unwrap();
        assert!(saddle.contains(&[2.0, 2.0, 0.99]));
        assert!(!saddle.contains(&[2.0, 2.0, 1.01]));
    }

    #[test]
    fn random_polytope_deterministic_and_valid() {
        let a = random_polytope(2, 12, 7).unwrap();
        let b = random_polytope(2, 12, 7).unwrap();
        assert_eq!(a.vertices().len(), b.vertices().len());
        for (u, v) in a.vertices().iter().zip(b.vertices()) {
            assert_eq!(u, v);
        }
        let c = random_polytope(3, 20, 1).unwrap();
        let (r, _) = c.radii().unwrap();
        assert!(r > 0.0);
    }

    #[test]
    fn spec_round_trip() {
        let specs = [
            "box 4x1",
            "box 8x2x1",
            "sector2d R=32 eps=0.03226",
            "trapezoid R=10 T=1000",
            "cone n=3 R=16",
            "slab3d a=8 b=8 h0=1 sx=0.0625 sy=0",
            "random n=2 m=64 seed=3",
        ];
        for s in specs {
            let d: DomainSpec = s.parse().unwrap();
            assert_eq!(d.to_string(), s, "round trip of '{s}'");
            let d2: DomainSpec = d.to_string().parse().unwrap();
            assert_eq!(d, d2);
        }
        assert!("pentagon R=1".parse::<DomainSpec>().is_err());
    }
}
