//! Building a polygon from a feasible angle-curvature sequence.
//!
//! `cargo run --example synthesize`

use lattice_trig::curvature::{sequence_of_polygon, AngleCurvatureSequence};
use lattice_trig::synthesis::{close_fan, directions_from_sequence, synthesize_polygon};

fn main() {
    let s = AngleCurvatureSequence::from_tangents(&[(3, 2), (1, 1), (3, 1), (1, 1), (1, 1)], &[-2, -4, -2, -3, 0], true).unwrap();
    let fan = directions_from_sequence(&s).unwrap();
    println!("edge directions: {}", fan.directions().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "));
    let weights = close_fan(&fan).unwrap();
    println!("edge lengths:    {}", weights.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" "));

    let poly = synthesize_polygon(&s).unwrap();
    println!("vertices:        {}", poly.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
    let back = sequence_of_polygon(&poly).unwrap();
    println!("round trip: {}", back == s);
}
