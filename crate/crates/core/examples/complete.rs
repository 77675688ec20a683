//! Completing an open sequence (α1, κ1, ..., αn) to a closed polygon.
//!
//! `cargo run --example complete`

use lattice_trig::curvature::{sequence_of_polygon, AngleCurvatureSequence, BrokenLine};
use lattice_trig::theorems::{check_feasibility, complete_sequence};

fn main() {
    let open = AngleCurvatureSequence::from_lls(&[&[1, 3, 1, 1, 1], &[3], &[1, 2, 1]], &[-1, -2], false).unwrap();
    let c = complete_sequence(&open).unwrap();
    println!("open:  {open}");
    println!("x = {}, beta = {} (lls {}), y = {}", c.x, c.beta, c.beta.lls(), c.y);
    let closed = c.assemble(&open).unwrap();
    println!("closed: {closed}, feasible {}", check_feasibility(&closed).unwrap().feasible);

    // drop the last angle of a hexagon and get it back
    let hex = BrokenLine::from_coords(&[(0, 0), (3, 0), (5, 1), (5, 3), (2, 4), (0, 2)], true);
    let s = sequence_of_polygon(&hex).unwrap();
    let n = s.len();
    let open = AngleCurvatureSequence::new(s.angles[..n - 1].to_vec(), s.curvatures[..n - 2].to_vec(), false).unwrap();
    let c = complete_sequence(&open).unwrap();
    println!("hexagon: {s}");
    println!("recovered x = {}, beta = {}, y = {}", c.x, c.beta, c.y);
    assert_eq!(c.assemble(&open).unwrap(), s);
}
