//! The angle-curvature sequence of a polygon and its invariance.
//!
//! `cargo run --example analyze_polygon`

use lattice_trig::curvature::{prefix_continuants, sequence_of_polygon, sign_changes, BrokenLine};
use lattice_trig::lattice::{int, UnimodularMap};

fn main() {
    let quad = BrokenLine::from_coords(&[(4, -1), (0, 0), (2, 3), (3, 3)], true);
    let s = sequence_of_polygon(&quad).unwrap();
    println!("sequence: {s}");
    println!("lls:      {}", s.lls());
    let prefix = prefix_continuants(&s);
    println!("prefix continuants {prefix}, {} sign changes", sign_changes(&prefix));

    let m = UnimodularMap::new(int(3), int(2), int(1), int(1), int(-7), int(2)).unwrap();
    let image = quad.mapped(&m);
    let t = sequence_of_polygon(&image).unwrap();
    println!("image {:?}", image.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    println!("same sequence: {}", s == t);

    // listing the polygon from another vertex rotates the sequence
    let r = sequence_of_polygon(&quad.rotated(1)).unwrap();
    println!("listed from the next vertex: {r}");
    println!("rotations matching: {:?}", s.rotations_matching(&r));
}
