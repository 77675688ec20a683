//! Invariants of lattice-preserving affine maps.
//!
//! `cargo run --example unimodular`

use lattice_trig::curvature::{chord_curvature, BrokenLine};
use lattice_trig::lattice::{int, int_distance, int_length, int_sine, LatticePoint, RationalAngle, UnimodularMap};
use lattice_trig::sails::itan;

fn main() {
    let (a, b, c, d) = (LatticePoint::new(4, -1), LatticePoint::new(0, 0), LatticePoint::new(2, 3), LatticePoint::new(3, 3));
    let maps = [
        UnimodularMap::shear(int(3)),
        UnimodularMap::reflection(),
        UnimodularMap::central_symmetry(),
        UnimodularMap::new(int(5), int(2), int(2), int(1), int(-4), int(9)).unwrap(),
    ];
    let report = |a: &LatticePoint, b: &LatticePoint, c: &LatticePoint, d: &LatticePoint| {
        let angle = RationalAngle::new(a.clone(), b.clone(), c.clone()).unwrap();
        format!(
            "itan {} isin {} il(BC) {} id(D,AB) {} curvature {}",
            itan(&angle).unwrap(),
            int_sine(&angle).unwrap(),
            int_length(b, c).unwrap(),
            int_distance(d, (a, b)).unwrap(),
            chord_curvature(a, b, c, d).unwrap()
        )
    };
    println!("original:  {}", report(&a, &b, &c, &d));
    for m in &maps {
        let line = BrokenLine::open(vec![a.clone(), b.clone(), c.clone(), d.clone()]).mapped(m);
        let v = &line.vertices;
        let kind = if m.preserves_orientation() { "proper" } else { "improper" };
        println!("{kind:>9}: {}", report(&v[0], &v[1], &v[2], &v[3]));
    }
}
