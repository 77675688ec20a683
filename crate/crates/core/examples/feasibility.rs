//! Which cyclic angle-curvature sequences come from convex polygons.
//!
//! `cargo run --example feasibility`

use lattice_trig::curvature::AngleCurvatureSequence;
use lattice_trig::theorems::check_feasibility;

fn show(label: &str, s: &AngleCurvatureSequence) {
    let r = check_feasibility(s).unwrap();
    println!("{label}: {s}");
    println!("  closure continuant {} ({})", r.closure.continuant, r.closure.ok);
    match &r.curvature.expected {
        Some(k) => println!("  last curvature {} should be {k} ({})", r.curvature.kappa_n, r.curvature.ok),
        None => println!("  last curvature undetermined, denominator is zero"),
    }
    println!("  {} sign changes, {} required ({})", r.winding.sign_changes, r.winding.required, r.winding.ok);
    println!("  feasible: {} {:?}", r.feasible, r.failures());
}

fn main() {
    let quad = AngleCurvatureSequence::from_tangents(&[(14, 11), (3, 1), (4, 3), (15, 4)], &[-1, -2, -1, -1], true).unwrap();
    show("quadrangle", &quad);

    let mut wrong = quad.clone();
    wrong.curvatures[3] = (-2).into();
    show("one curvature off", &wrong);

    let flat = AngleCurvatureSequence::from_tangents(&[(1, 1), (1, 1), (1, 1), (1, 1)], &[0, 0, 0, 0], true).unwrap();
    show("right angles, zero curvatures", &flat);

    let square = AngleCurvatureSequence::from_tangents(&[(1, 1), (1, 1), (1, 1), (1, 1)], &[-2, -2, -2, -2], true).unwrap();
    show("unit square", &square);
}
