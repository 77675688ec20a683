//! Brute-force ground truth: sails as convex hulls, exhaustive enumeration
//! of small convex polygons, and congruence tests by canonical forms.

use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::curvature::{sequence_of_polygon, BrokenLine};
use crate::error::Result;
use crate::lattice::{det, primitive, Int, LatticePoint, LatticeVector, Orientation, RationalAngle};
use crate::sails::{sail_readings, Sail};
use crate::theorems::Triangle;

/// Sail of a proper angle as the part of the convex hull of the lattice
/// points in the angle (vertex excluded) that faces the vertex.
///
/// Every sail vertex lies in the triangle spanned by the vertex and the
/// first lattice points `u`, `w` on the two edges, so only that triangle is
/// scanned. Points are sorted by their direction from the vertex and the
/// chain is built like a monotone-chain hull, keeping strict turns away
/// from the vertex.
pub fn sail_bruteforce(angle: &RationalAngle) -> Result<Sail> {
    angle.require_proper()?;
    let mut u = primitive(&angle.ray_a())?;
    let mut w = primitive(&angle.ray_b())?;
    let flipped = angle.orientation() == Orientation::Negative;
    if flipped {
        std::mem::swap(&mut u, &mut w);
    }
    // u to w is now counterclockwise
    let xs = [Int::zero(), u.dx.clone(), w.dx.clone()];
    let ys = [Int::zero(), u.dy.clone(), w.dy.clone()];
    let (x0, x1) = (xs.iter().min().unwrap().to_i64().unwrap(), xs.iter().max().unwrap().to_i64().unwrap());
    let (y0, y1) = (ys.iter().min().unwrap().to_i64().unwrap(), ys.iter().max().unwrap().to_i64().unwrap());
    let uw = &w - &u;
    let mut points: Vec<LatticeVector> = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            let v = LatticeVector::new(x, y);
            if v.is_zero() {
                continue;
            }
            let inside = !det(&u, &v).is_negative() && !det(&v, &w).is_negative() && !det(&uw, &(&v - &u)).is_negative();
            if inside {
                points.push(v);
            }
        }
    }
    // by direction, then nearest first
    points.sort_by(|a, b| {
        let d = det(a, b);
        if d.is_positive() {
            Ordering::Less
        } else if d.is_negative() {
            Ordering::Greater
        } else {
            a.dot(a).cmp(&b.dot(b))
        }
    });
    points.dedup_by(|later, earlier| det(earlier, later).is_zero());
    let mut chain: Vec<LatticeVector> = Vec::new();
    for pt in points {
        while chain.len() >= 2 {
            let (a, b) = (&chain[chain.len() - 2], &chain[chain.len() - 1]);
            if det(&(b - a), &(&pt - b)).is_negative() {
                break;
            }
            chain.pop();
        }
        chain.push(pt);
    }
    if flipped {
        chain.reverse();
    }
    let vertices: Vec<LatticePoint> = chain.iter().map(|v| &angle.vertex + v).collect();
    let lls = sail_readings(&vertices)?;
    Ok(Sail { vertices, lls })
}

/// All convex lattice `n`-gons with vertices in `[0, bbox]²`, no three
/// consecutive vertices collinear, listed counterclockwise from the
/// lexicographically smallest vertex. Each translation class appears once:
/// the one touching both coordinate axes.
pub fn enumerate_convex_polygons(bbox: i64, n: usize) -> Vec<BrokenLine> {
    let mut out = Vec::new();
    for_each_convex_polygon(bbox, n, |p| out.push(p.clone()));
    out
}

/// Streaming form of [`enumerate_convex_polygons`].
pub fn for_each_convex_polygon(bbox: i64, n: usize, mut f: impl FnMut(&BrokenLine)) {
    if n < 3 || bbox < 1 {
        return;
    }
    let all: Vec<(i64, i64)> = (0..=bbox).flat_map(|x| (0..=bbox).map(move |y| (x, y))).collect();
    for sy in 0..=bbox {
        let start = (0, sy);
        // candidates lie lexicographically after the start vertex
        let mut rest: Vec<(i64, i64)> = all.iter().copied().filter(|&p| p > start).collect();
        let rel = |p: (i64, i64)| (p.0 - start.0, p.1 - start.1);
        rest.sort_by(|&a, &b| {
            let (a, b) = (rel(a), rel(b));
            0.cmp(&(a.0 * b.1 - a.1 * b.0)).then((a.0 * a.0 + a.1 * a.1).cmp(&(b.0 * b.0 + b.1 * b.1)))
        });
        let mut path = vec![start];
        extend(&rest, 0, n, &mut path, &mut |poly| {
            if poly.iter().map(|p| p.1).min() == Some(0) {
                f(&BrokenLine::polygon(poly.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect()));
            }
        });
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn extend(rest: &[(i64, i64)], from: usize, n: usize, path: &mut Vec<(i64, i64)>, emit: &mut impl FnMut(&[(i64, i64)])) {
    let start = path[0];
    if path.len() == n {
        let (prev, last) = (path[n - 2], path[n - 1]);
        if cross(prev, last, start) > 0 && cross(last, start, path[1]) > 0 {
            emit(path);
        }
        return;
    }
    for i in from..rest.len() {
        let next = rest[i];
        let last = *path.last().expect("path starts with the start vertex");
        if path.len() >= 2 {
            // strictly increasing direction around the start, left turn at last
            if cross(start, last, next) <= 0 || cross(path[path.len() - 2], last, next) <= 0 {
                continue;
            }
        }
        path.push(next);
        extend(rest, i + 1, n, path, emit);
        path.pop();
    }
}

/// Integer congruence of convex polygons: some cyclic relabelling of `q`,
/// possibly reversed, has the same angle-curvature sequence and the same
/// integer edge lengths as `p`.
pub fn canonical_congruence(p: &BrokenLine, q: &BrokenLine) -> Result<bool> {
    if p.len() != q.len() {
        return Ok(false);
    }
    let (sp, lp) = (sequence_of_polygon(p)?, p.edge_lengths()?);
    for candidate in [q.clone(), q.reversed()] {
        for k in 0..q.len() {
            let r = candidate.rotated(k);
            if r.edge_lengths()? == lp && sequence_of_polygon(&r)? == sp {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Canonical form of a labelled triangle `(A, B, C)` under lattice-preserving
/// affine maps: `B - A ↦ (g, 0)` with `g = il(AB)`, and `C - A ↦ (r, h)`
/// with `h > 0` and `0 <= r < h`. Two labelled triangles are congruent with
/// `A ↦ A'`, `B ↦ B'`, `C ↦ C'` exactly when their forms agree.
pub fn triangle_canonical_form(t: &Triangle) -> (Int, Int, Int) {
    let u = &t.b - &t.a;
    let v = &t.c - &t.a;
    let g = u.dx.gcd(&u.dy);
    let e = LatticeVector { dx: &u.dx / &g, dy: &u.dy / &g };
    // a unimodular M with M e = (1, 0) has second row (-e.dy, e.dx) up to
    // sign, and first row (s, t) with s e.dx + t e.dy = 1
    let ext = e.dx.extended_gcd(&e.dy);
    let (s, tt) = if ext.gcd.is_negative() { (-ext.x, -ext.y) } else { (ext.x, ext.y) };
    let a = &s * &v.dx + &tt * &v.dy;
    let h = det(&e, &v).abs();
    (g, a.mod_floor(&h), h)
}

/// Labelled congruence of triangles by canonical forms.
pub fn triangles_congruent(t1: &Triangle, t2: &Triangle) -> bool {
    triangle_canonical_form(t1) == triangle_canonical_form(t2)
}

/// Every labelled lattice triangle with vertices in `[0, size]²` touching
/// both coordinate axes, so that each translation class appears once.
pub fn enumerate_triangles(size: i64) -> Vec<Triangle> {
    let pts: Vec<(i64, i64)> = (0..=size).flat_map(|x| (0..=size).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    for &a in &pts {
        for &b in &pts {
            for &c in &pts {
                if cross(a, b, c) == 0 {
                    continue;
                }
                if a.0.min(b.0).min(c.0) != 0 || a.1.min(b.1).min(c.1) != 0 {
                    continue;
                }
                out.push(Triangle::from_coords(a, b, c).expect("non-collinear"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, UnimodularMap};
    use crate::sails::sail_vertices;
    use crate::theorems::check_feasibility;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn angle(a: LatticePoint, v: LatticePoint, b: LatticePoint) -> RationalAngle {
        RationalAngle::new(a, v, b).unwrap()
    }

    #[test]
    fn hull_sail_examples() {
        let s = sail_bruteforce(&angle(p(1, 0), p(0, 0), p(5, 7))).unwrap();
        assert_eq!(s.vertices, vec![p(1, 0), p(1, 1), p(5, 7)]);
        assert_eq!(s.lls, crate::contfrac::IntSeq::from_i64s(&[1, 2, 2]));
        let s = sail_bruteforce(&angle(p(1, 0), p(0, 0), p(1, 1))).unwrap();
        assert_eq!(s.vertices, vec![p(1, 0), p(1, 1)]);
    }

    #[test]
    fn hull_sail_matches_continuant_sail() {
        let cases = [
            (p(3, -2), p(1, 1), p(-4, 6)),
            (p(-4, 6), p(1, 1), p(3, -2)),
            (p(10, 1), p(0, 0), p(-3, -7)),
            (p(0, 5), p(2, 2), p(9, 3)),
            (p(-1, 0), p(0, 0), p(-2, -1)),
        ];
        for (a, v, b) in cases {
            let ang = angle(a, v, b);
            assert_eq!(sail_bruteforce(&ang).unwrap(), sail_vertices(&ang).unwrap());
        }
    }

    #[test]
    fn smallest_triangles_enumerated() {
        let tris = enumerate_convex_polygons(2, 3);
        let unit = BrokenLine::from_coords(&[(0, 0), (1, 0), (0, 1)], true);
        assert!(tris.contains(&unit));
        for t in &tris {
            let x0 = t.vertices.iter().map(|v| v.x.clone()).min().unwrap();
            let y0 = t.vertices.iter().map(|v| v.y.clone()).min().unwrap();
            assert_eq!((x0, y0), (int(0), int(0)));
        }
        let squares = enumerate_convex_polygons(2, 4);
        assert!(squares.contains(&BrokenLine::from_coords(&[(0, 0), (1, 0), (1, 1), (0, 1)], true)));
    }

    #[test]
    fn enumeration_counts_in_unit_box() {
        // the four right triangles and the square
        assert_eq!(enumerate_convex_polygons(1, 3).len(), 4);
        assert_eq!(enumerate_convex_polygons(1, 4).len(), 1);
        assert_eq!(enumerate_convex_polygons(1, 5).len(), 0);
    }

    #[test]
    fn enumerated_polygons_are_convex_and_feasible() {
        for n in 3..=4 {
            for poly in enumerate_convex_polygons(4, n) {
                let s = sequence_of_polygon(&poly).unwrap();
                assert!(check_feasibility(&s).unwrap().feasible, "{poly:?}");
            }
        }
    }

    #[test]
    fn congruence_examples() {
        let quad = BrokenLine::from_coords(&[(4, -1), (0, 0), (2, 3), (3, 3)], true);
        let m = UnimodularMap::new(int(3), int(1), int(2), int(1), int(7), int(-2)).unwrap();
        assert!(canonical_congruence(&quad, &quad.mapped(&m)).unwrap());
        assert!(canonical_congruence(&quad, &quad.mapped(&UnimodularMap::reflection()).reversed().rotated(2)).unwrap());
        let t1 = BrokenLine::from_coords(&[(0, 0), (2, 0), (1, 1)], true);
        let t2 = BrokenLine::from_coords(&[(0, 0), (2, 0), (0, 2)], true);
        assert!(!canonical_congruence(&t1, &t2).unwrap());
        let doubled = BrokenLine::from_coords(&[(8, -2), (0, 0), (4, 6), (6, 6)], true);
        assert_eq!(sequence_of_polygon(&doubled).unwrap(), sequence_of_polygon(&quad).unwrap());
        assert!(!canonical_congruence(&quad, &doubled).unwrap());
    }

    #[test]
    fn triangle_forms() {
        let t = Triangle::from_coords((0, 0), (2, 0), (1, 1)).unwrap();
        assert_eq!(triangle_canonical_form(&t), (int(2), int(0), int(1)));
        let m = UnimodularMap::new(int(1), int(4), int(1), int(5), int(-3), int(2)).unwrap();
        let image = Triangle::new(m.apply(&t.a), m.apply(&t.b), m.apply(&t.c)).unwrap();
        assert!(triangles_congruent(&t, &image));
        let mirrored = Triangle::from_coords((0, 0), (2, 0), (1, -1)).unwrap();
        assert!(triangles_congruent(&t, &mirrored));
        let t2 = Triangle::from_coords((0, 0), (2, 0), (0, 2)).unwrap();
        assert!(!triangles_congruent(&t, &t2));
    }
}
