//! Continuants and continued fractions with exact integers.
//!
//! `cargo run --example continuants`

use lattice_trig::contfrac::{cf_eval, cf_expand_odd, continuant, IntSeq};
use lattice_trig::lattice::int;

fn main() {
    let s = IntSeq::from_i64s(&[1, 2, 3, 4]);
    println!("K{s} = {}", continuant(&s));
    println!("[{s}] = {}", cf_eval(&s));

    // 7/5 = 1 + 1/(2 + 1/2), and the odd-length form 1 + 1/(2 + 1/(1 + 1/1))
    let odd = cf_expand_odd(&int(7), &int(5)).unwrap();
    println!("odd expansion of 7/5: {odd}");

    // negative entries are fine
    let mixed = IntSeq::from_i64s(&[-1, 3, -2, 5, 1]);
    println!("K{mixed} = {}", continuant(&mixed));

    // long sequences stay exact
    let fib = IntSeq::from_i64s(&[1; 120]);
    println!("K(1 x 120) = {}", continuant(&fib));
}
