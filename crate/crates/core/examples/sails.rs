//! Sails of lattice angles: from continued fractions and by brute force.
//!
//! `cargo run --example sails`

use lattice_trig::lattice::{int, LatticePoint, RationalAngle};
use lattice_trig::oracle::sail_bruteforce;
use lattice_trig::sails::{iarctan_angle, normalize_angle, sail_vertices};

fn main() {
    let angle = iarctan_angle(&int(7), &int(5)).unwrap();
    let sail = sail_vertices(&angle).unwrap();
    println!("iarctan(7/5)");
    println!("  sail vertices: {}", sail.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
    println!("  lls: {}", sail.lls);

    // an angle at an arbitrary vertex, in arbitrary position
    let angle = RationalAngle::new(LatticePoint::new(5, 3), LatticePoint::new(1, 1), LatticePoint::new(-2, 4)).unwrap();
    let normal = normalize_angle(&angle).unwrap();
    println!("angle (5,3)-(1,1)-(-2,4)");
    println!("  itan = {}, lls = {}", normal.itan(), normal.lls());

    let fast = sail_vertices(&angle).unwrap();
    let slow = sail_bruteforce(&angle).unwrap();
    println!("  continued fractions: {}", fast.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
    println!("  convex hull:         {}", slow.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
    assert_eq!(fast, slow);
}
