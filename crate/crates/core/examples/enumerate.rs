//! Every convex lattice polygon in a small box satisfies the feasibility
//! conditions.
//!
//! `cargo run --release --example enumerate -- 4`

use lattice_trig::curvature::{sail_diagram, sequence_of_polygon};
use lattice_trig::oracle::for_each_convex_polygon;
use lattice_trig::theorems::check_feasibility;

fn main() {
    let bbox: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    for n in 3..=6 {
        let (mut count, mut feasible, mut winding_ok) = (0, 0, 0);
        for_each_convex_polygon(bbox, n, |p| {
            count += 1;
            let s = sequence_of_polygon(p).unwrap();
            if check_feasibility(&s).unwrap().feasible {
                feasible += 1;
            }
            if sail_diagram(p).unwrap().winding_half_turns().unwrap() == n - 2 {
                winding_ok += 1;
            }
        });
        println!("box [0,{bbox}]², {n} vertices: {count} polygons, {feasible} feasible, {winding_ok} with winding {}", n - 2);
    }
}
