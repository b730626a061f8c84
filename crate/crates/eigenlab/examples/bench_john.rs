use eigenlab::{geo, zoo};
use std::time::Instant;
fn main() {
    for spec in ["box 8x2x1", "box 4x2", "sector2d R=32 eps=0.0322636616682470", "random n=2 m=24 seed=3", "random n=3 m=24 seed=5"] {
        let d: eigenlab::zoo::DomainSpec = spec.parse().unwrap();
        let b = d.build().unwrap();
        let t0 = Instant::now();
        let e = geo::john_ellipsoid(&b).unwrap();
        println!("{spec}: {:?} semi={:?} center={:?}", t0.elapsed(), e.semi_axes(), e.center());
    }
    let _ = zoo::make_box(&[1.0]);
}
