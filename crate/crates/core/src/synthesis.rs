//! Explicit convex lattice polygons realizing feasible angle-curvature
//! sequences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::curvature::{full_turns, AngleCurvatureSequence, BrokenLine};
use crate::error::{Error, Result};
use crate::lattice::{det, primitive, Int, LatticePoint, LatticeVector};
use crate::sails::normal_sail_vertices;
use crate::theorems::check_feasibility;

/// Primitive edge directions turning strictly counterclockwise, each step
/// by less than a half-turn, once around in total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDirectionFan {
    directions: Vec<LatticeVector>,
}

impl EdgeDirectionFan {
    pub fn new(directions: Vec<LatticeVector>) -> Result<Self> {
        let n = directions.len();
        if n < 3 {
            return Err(Error::InvalidFan(format!("{n} directions")));
        }
        for (i, d) in directions.iter().enumerate() {
            if !d.is_primitive() {
                return Err(Error::InvalidFan(format!("direction {i} is not primitive")));
            }
        }
        for i in 0..n {
            if !det(&directions[i], &directions[(i + 1) % n]).is_positive() {
                return Err(Error::InvalidFan(format!("directions {i} and {} do not turn counterclockwise", (i + 1) % n)));
            }
        }
        let turns = full_turns(&directions);
        if turns != 1 {
            return Err(Error::InvalidFan(format!("directions wind {turns} times")));
        }
        Ok(EdgeDirectionFan { directions })
    }

    pub fn directions(&self) -> &[LatticeVector] {
        &self.directions
    }
}

/// Edge directions of a polygon realizing `s`, read from the edge vertices
/// `B0, ..., Bn` of the sail diagram built from `lls(s)`.
///
/// The diagram's `Bi` points along the edge `Ai A(i+1)`, negated for even
/// `i` to undo the central symmetry. The diagram is positively oriented, so
/// these directions turn clockwise; they are mirrored in the x-axis, which
/// keeps the sequence and makes the fan counterclockwise.
pub fn directions_from_sequence(s: &AngleCurvatureSequence) -> Result<EdgeDirectionFan> {
    if !check_feasibility(s)?.feasible {
        return Err(Error::Infeasible);
    }
    let diagram = normal_sail_vertices(&s.lls());
    let mut index = 0;
    let mut directions = Vec::with_capacity(s.len());
    for (i, angle) in s.angles.iter().enumerate() {
        index += angle.lls().len().div_ceil(2);
        let b = diagram[index].to_vector();
        let d = if i % 2 == 0 { b } else { -&b };
        let d = primitive(&d)?;
        directions.push(LatticeVector { dx: d.dx, dy: -d.dy });
    }
    EdgeDirectionFan::new(directions)
}

/// Positive integer weights `t` with `Σ ti di = 0`, reduced by their gcd.
pub fn close_fan(fan: &EdgeDirectionFan) -> Result<Vec<Int>> {
    let d = fan.directions();
    let n = d.len();
    let rat = |v: &BigInt| BigRational::from_integer(v.clone());
    let mut t: Vec<BigRational> = vec![BigRational::one(); n];
    let mut rx: BigRational = d.iter().map(|v| rat(&v.dx)).sum();
    let mut ry: BigRational = d.iter().map(|v| rat(&v.dy)).sum();
    // one bracketing step zeroes the residual; the loop guards the invariant
    while !(rx.is_zero() && ry.is_zero()) {
        let (mx, my) = (-&rx, -&ry);
        let cross = |v: &LatticeVector, x: &BigRational, y: &BigRational| rat(&v.dx) * y - rat(&v.dy) * x;
        let j = (0..n)
            .find(|&j| {
                let next = &d[(j + 1) % n];
                !cross(&d[j], &mx, &my).is_negative() && !(-cross(next, &mx, &my)).is_negative()
            })
            .ok_or_else(|| Error::InvalidFan("no pair of directions brackets the residual".into()))?;
        let k = (j + 1) % n;
        let base = rat(&det(&d[j], &d[k]));
        let a = -cross(&d[k], &mx, &my) / &base;
        let b = cross(&d[j], &mx, &my) / &base;
        rx += &a * rat(&d[j].dx) + &b * rat(&d[k].dx);
        ry += &a * rat(&d[j].dy) + &b * rat(&d[k].dy);
        t[j] += a;
        t[k] += b;
    }
    let lcm = t.iter().fold(Int::one(), |acc, w| acc.lcm(w.denom()));
    let ints: Vec<Int> = t.iter().map(|w| (w * rat(&lcm)).to_integer()).collect();
    let g = ints.iter().fold(Int::zero(), |acc, w| acc.gcd(w));
    Ok(ints.into_iter().map(|w| w / &g).collect())
}

/// A counterclockwise convex polygon whose angle-curvature sequence is `s`,
/// listed as `An, A1, ..., A(n-1)` with `A1` at the origin and the edge
/// `A1 A2` along `d1`.
pub fn synthesize_polygon(s: &AngleCurvatureSequence) -> Result<BrokenLine> {
    let fan = directions_from_sequence(s)?;
    let weights = close_fan(&fan)?;
    let mut vertices = vec![LatticePoint::origin()];
    for (d, t) in fan.directions().iter().zip(&weights).take(weights.len() - 1) {
        let last = vertices.last().expect("non-empty");
        vertices.push(last + &d.scale(t));
    }
    vertices.rotate_right(1);
    Ok(BrokenLine::polygon(vertices))
}
