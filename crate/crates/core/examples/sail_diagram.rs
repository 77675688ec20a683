//! The sail diagram of a pentagon and its winding.
//!
//! `cargo run --example sail_diagram`

use lattice_trig::curvature::{sail_diagram, sequence_of_polygon, BrokenLine};

fn main() {
    let pent = BrokenLine::from_coords(&[(8, 0), (0, 0), (2, 3), (3, 4), (5, 3)], true);
    let d = sail_diagram(&pent).unwrap();
    for (i, v) in d.vertices().iter().enumerate() {
        let mark = if d.is_edge_vertex(i) { "edge vertex" } else { "" };
        println!("{i:>2} {v} {mark}");
    }
    println!("lls of the diagram: {}", d.lls);
    println!("lls of the sequence: {}", sequence_of_polygon(&pent).unwrap().lls());
    println!("winding: {} half-turns", d.winding_half_turns().unwrap());
}
