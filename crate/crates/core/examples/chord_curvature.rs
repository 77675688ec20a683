//! Chord curvature of a convex quadrangle, computed two ways.
//!
//! `cargo run --example chord_curvature`

use lattice_trig::curvature::{chord_curvature, chord_curvature_via_diagram, BrokenLine};

fn main() {
    let quad = BrokenLine::from_coords(&[(4, -1), (0, 0), (2, 3), (3, 3)], true);
    let v = &quad.vertices;
    let n = v.len();
    for i in 0..n {
        let (a, b, c, d) = (&v[i], &v[(i + 1) % n], &v[(i + 2) % n], &v[(i + 3) % n]);
        let by_sails = chord_curvature(a, b, c, d).unwrap();
        let by_diagram = chord_curvature_via_diagram(a, b, c, d).unwrap();
        println!("edge {b} -> {c}: curvature {by_sails} (diagram: {by_diagram})");
    }
}
