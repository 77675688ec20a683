//! Triangle congruence by two angles, the side between them and its curvature.
//!
//! `cargo run --example asca`

use lattice_trig::oracle::triangles_congruent;
use lattice_trig::theorems::{asca_congruent, asca_signature, Triangle};

fn main() {
    // same angles at A and B, same side AB, different areas
    let t1 = Triangle::from_coords((0, 0), (2, 0), (1, 1)).unwrap();
    let t2 = Triangle::from_coords((0, 0), (2, 0), (0, 2)).unwrap();
    for (name, t) in [("t1", &t1), ("t2", &t2)] {
        let s = asca_signature(t).unwrap();
        println!(
            "{name}: itan B = {}/{}, itan A = {}/{}, il(AB) = {}, curvature {}, area {}/2",
            s.angle_b.0, s.angle_b.1, s.angle_a.0, s.angle_a.1, s.side, s.curvature, t.double_area()
        );
    }
    println!("congruent by signature: {}", asca_congruent(&t1, &t2).unwrap());
    println!("congruent by normal form: {}", triangles_congruent(&t1, &t2));

    let t3 = Triangle::from_coords((1, 1), (3, 2), (1, 2)).unwrap();
    let t4 = Triangle::from_coords((0, 0), (2, 1), (0, 1)).unwrap();
    println!("translate: signature {}, normal form {}", asca_congruent(&t3, &t4).unwrap(), triangles_congruent(&t3, &t4));
}
