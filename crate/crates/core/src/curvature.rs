//! Chord curvatures and angle-curvature sequences of locally convex broken
//! lines and convex polygons, sail diagrams, vortex broken lines and their
//! LLS sequences, and winding numbers.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::contfrac::{continuant, IntSeq};
use crate::error::{Error, Result};
use crate::lattice::{det, int_length, primitive, Int, LatticePoint, LatticeVector, Orientation, RationalAngle, UnimodularMap};
use crate::sails::{normal_sail_vertices, normalize_angle, NormalizedAngle};

/// A broken line `A0 ... Am`, or a polygon when `closed`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrokenLine {
    pub vertices: Vec<LatticePoint>,
    pub closed: bool,
}

impl BrokenLine {
    pub fn polygon(vertices: Vec<LatticePoint>) -> Self {
        BrokenLine { vertices, closed: true }
    }

    pub fn open(vertices: Vec<LatticePoint>) -> Self {
        BrokenLine { vertices, closed: false }
    }

    pub fn from_coords(coords: &[(i64, i64)], closed: bool) -> Self {
        let vertices = coords.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect();
        BrokenLine { vertices, closed }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The same vertices starting from index `start` (polygons only).
    pub fn rotated(&self, start: usize) -> BrokenLine {
        let n = self.vertices.len();
        let vertices = (0..n).map(|i| self.vertices[(start + i) % n].clone()).collect();
        BrokenLine { vertices, closed: self.closed }
    }

    pub fn reversed(&self) -> BrokenLine {
        BrokenLine { vertices: self.vertices.iter().rev().cloned().collect(), closed: self.closed }
    }

    pub fn mapped(&self, m: &UnimodularMap) -> BrokenLine {
        BrokenLine { vertices: self.vertices.iter().map(|v| m.apply(v)).collect(), closed: self.closed }
    }

    /// Edge vectors `A(i+1) - Ai`, including the closing edge of a polygon.
    pub fn edges(&self) -> Vec<LatticeVector> {
        let n = self.vertices.len();
        let count = if self.closed { n } else { n.saturating_sub(1) };
        (0..count).map(|i| &self.vertices[(i + 1) % n] - &self.vertices[i]).collect()
    }

    /// Integer lengths of the edges, in the order of [`BrokenLine::edges`].
    pub fn edge_lengths(&self) -> Result<Vec<Int>> {
        self.edges()
            .iter()
            .map(|e| if e.is_zero() { Err(Error::CoincidentPoints) } else { Ok(crate::lattice::gcd(&e.dx, &e.dy)) })
            .collect()
    }

    /// The angles `∠A(i-1) Ai A(i+1)` at every vertex that has two
    /// neighbours, starting from the second listed vertex. A polygon listed
    /// as `A0 A1 ... A(n-1)` is read as `An = A0`, so its first angle sits at
    /// `A1` just like for an open broken line.
    pub fn angles(&self) -> Result<Vec<RationalAngle>> {
        let n = self.vertices.len();
        let idx: Vec<(usize, usize, usize)> = if self.closed {
            (1..=n).map(|i| (i - 1, i % n, (i + 1) % n)).collect()
        } else {
            (1..n.saturating_sub(1)).map(|i| (i - 1, i, i + 1)).collect()
        };
        idx.into_iter()
            .map(|(a, v, b)| RationalAngle::new(self.vertices[a].clone(), self.vertices[v].clone(), self.vertices[b].clone()))
            .collect()
    }

    /// Checks local convexity and returns the common orientation of the
    /// angles. Polygons must also be convex, i.e. turn around exactly once.
    pub fn convexity(&self) -> Result<Orientation> {
        let needed = 3;
        if self.vertices.len() < needed {
            return Err(Error::TooFewVertices { needed, got: self.vertices.len() });
        }
        let n = self.vertices.len();
        let mut common = Orientation::None;
        for (i, angle) in self.angles()?.iter().enumerate() {
            let o = angle.orientation();
            if o == Orientation::None {
                return Err(Error::CollinearVertices((i + 1) % n));
            }
            if common == Orientation::None {
                common = o;
            } else if o != common {
                return Err(Error::NotLocallyConvex((i + 1) % n));
            }
        }
        if self.closed {
            let mut edges = self.edges();
            if common == Orientation::Positive {
                // positively oriented angles turn clockwise
                for e in edges.iter_mut() {
                    e.dy = -&e.dy;
                }
            }
            let turns = full_turns(&edges);
            if turns != 1 {
                return Err(Error::NotSimple(turns));
            }
        }
        Ok(common)
    }
}

/// Number of full counterclockwise turns of a cyclic list of directions in
/// which each consecutive pair turns counterclockwise by less than a
/// half-turn.
pub(crate) fn full_turns(directions: &[LatticeVector]) -> usize {
    let upper = |v: &LatticeVector| v.dy.is_positive() || (v.dy.is_zero() && v.dx.is_positive());
    let n = directions.len();
    (0..n).filter(|&i| !upper(&directions[i]) && upper(&directions[(i + 1) % n])).count()
}

/// Sail information at one vertex: the normal form of the angle and the two
/// lattice points of the sail adjacent to its endpoints.
#[derive(Clone, Debug)]
struct VertexSail {
    angle: NormalizedAngle,
    /// Sail point next to the endpoint on the first edge.
    first_inner: LatticePoint,
    /// Sail point next to the endpoint on the second edge.
    last_inner: LatticePoint,
}

fn vertex_sail(angle: &RationalAngle) -> Result<VertexSail> {
    let normal = normalize_angle(angle)?;
    let lls = normal.lls();
    let back = normal.map.inverse();
    let vertices = normal_sail_vertices(&lls);
    let m = vertices.len();
    let first_inner = back.apply(&LatticePoint::new(1, 1));
    let (end, before) = (&vertices[m - 1], &vertices[m - 2]);
    let step = primitive(&(before - end))?;
    let last_inner = back.apply(&(end + &step));
    Ok(VertexSail { angle: normal, first_inner, last_inner })
}

fn curvature_between(b: &LatticePoint, c: &LatticePoint, at_b: &VertexSail, at_c: &VertexSail) -> Result<Int> {
    let bc = c - b;
    let e = primitive(&bc)?;
    let shift = &at_c.first_inner - &at_b.last_inner;
    debug_assert!(det(&e, &shift).is_zero(), "B'C' is parallel to BC");
    // shift = t e for the signed integer length t of B'C' along BC
    let t = if e.dx.is_zero() { &shift.dy / &e.dy } else { &shift.dx / &e.dx };
    Ok(int_length(b, c)? - t - Int::from(2))
}

fn check_quadruple(a: &LatticePoint, b: &LatticePoint, c: &LatticePoint, d: &LatticePoint) -> Result<(RationalAngle, RationalAngle)> {
    let first = RationalAngle::new(a.clone(), b.clone(), c.clone())?;
    let second = RationalAngle::new(b.clone(), c.clone(), d.clone())?;
    if first.orientation() == Orientation::None {
        return Err(Error::CollinearVertices(1));
    }
    if second.orientation() == Orientation::None {
        return Err(Error::CollinearVertices(2));
    }
    if first.orientation() != second.orientation() {
        return Err(Error::NotLocallyConvex(2));
    }
    Ok((first, second))
}

/// Chord curvature of a locally convex broken line `ABCD`.
///
/// `B'` is the sail point of `∠ABC` next to the sail endpoint on the ray
/// `BC`, and `C'` the sail point of `∠BCD` next to the endpoint on the ray
/// `CB`. Both lie on the line parallel to `BC` at unit integer distance, and
/// the curvature is `il(BC) - t - 2` where `t` is the signed integer length
/// of `B'C'` measured along `BC` (zero when `B' = C'`).
pub fn chord_curvature(a: &LatticePoint, b: &LatticePoint, c: &LatticePoint, d: &LatticePoint) -> Result<Int> {
    let (first, second) = check_quadruple(a, b, c, d)?;
    curvature_between(b, c, &vertex_sail(&first)?, &vertex_sail(&second)?)
}

/// Chord curvature read as the LLS entry at the junction of the local sail
/// diagram of `ABCD`: the sail of `∠ABC` shifted to the origin followed by
/// the centrally symmetric sail of `∠BCD`.
pub fn chord_curvature_via_diagram(a: &LatticePoint, b: &LatticePoint, c: &LatticePoint, d: &LatticePoint) -> Result<Int> {
    let (first, second) = check_quadruple(a, b, c, d)?;
    let flip = if first.orientation() == Orientation::Negative { UnimodularMap::reflection() } else { UnimodularMap::identity() };
    let first = first.mapped(&flip);
    let second = second.mapped(&flip);
    let s1 = crate::sails::sail_vertices(&first)?;
    let s2 = crate::sails::sail_vertices(&second)?;
    let mut points: Vec<LatticePoint> = s1.vertices.iter().map(|v| (v - &first.vertex).to_point()).collect();
    let junction = points.len() - 1;
    points.extend(s2.vertices.iter().skip(1).map(|v| (&second.vertex - v).to_point()));
    let line = VortexBrokenLine::new(points, LatticePoint::origin())?;
    let lls = lls_of_vortex(&line)?;
    Ok(lls[2 * junction - 1].clone())
}

/// Alternating angles and chord curvatures `(α1, κ1, ..., αn[, κn])`.
///
/// Open sequences (broken lines) carry one curvature fewer than angles;
/// cyclic sequences (polygons) carry one curvature per angle, `κi` sitting
/// between `αi` and `α(i+1)`.
#[derive(Clone, Debug)]
pub struct AngleCurvatureSequence {
    pub angles: Vec<NormalizedAngle>,
    pub curvatures: Vec<Int>,
    pub cyclic: bool,
}

impl AngleCurvatureSequence {
    pub fn new(angles: Vec<NormalizedAngle>, curvatures: Vec<Int>, cyclic: bool) -> Result<Self> {
        let expected = if cyclic { angles.len() } else { angles.len().saturating_sub(1) };
        if angles.is_empty() || curvatures.len() != expected {
            return Err(Error::MalformedSequence(format!(
                "{} angles need {} curvatures in {} form, got {}",
                angles.len(),
                expected,
                if cyclic { "cyclic" } else { "open" },
                curvatures.len()
            )));
        }
        Ok(AngleCurvatureSequence { angles, curvatures, cyclic })
    }

    /// Builds a sequence from integer tangents `(p, q)` and curvatures.
    pub fn from_tangents(tangents: &[(i64, i64)], curvatures: &[i64], cyclic: bool) -> Result<Self> {
        let angles = tangents
            .iter()
            .map(|&(p, q)| NormalizedAngle::from_tangent(Int::from(p), Int::from(q)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(angles, curvatures.iter().map(|&k| Int::from(k)).collect(), cyclic)
    }

    /// Builds a sequence from angle LLS sequences and curvatures.
    pub fn from_lls(lls: &[&[i64]], curvatures: &[i64], cyclic: bool) -> Result<Self> {
        let angles = lls
            .iter()
            .map(|s| NormalizedAngle::from_lls(&IntSeq::from_i64s(s)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(angles, curvatures.iter().map(|&k| Int::from(k)).collect(), cyclic)
    }

    /// Number of angles.
    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// `lls(α1) ∘ (κ1) ∘ ... ∘ lls(αn)`.
    pub fn lls(&self) -> IntSeq {
        lls_of_acs(self, 1, self.len()).expect("full range is valid")
    }

    /// The cyclic sequence re-anchored so that angle `start` (0-based) comes
    /// first.
    pub fn rotated(&self, start: usize) -> Result<Self> {
        if !self.cyclic {
            return Err(Error::MalformedSequence("only cyclic sequences can be rotated".into()));
        }
        let n = self.len();
        let pick = |i: usize| (start + i) % n;
        Ok(AngleCurvatureSequence {
            angles: (0..n).map(|i| self.angles[pick(i)].clone()).collect(),
            curvatures: (0..n).map(|i| self.curvatures[pick(i)].clone()).collect(),
            cyclic: true,
        })
    }

    /// Equality of angle classes and curvatures, anchored.
    pub fn same_as(&self, other: &AngleCurvatureSequence) -> bool {
        self.cyclic == other.cyclic
            && self.len() == other.len()
            && self.curvatures == other.curvatures
            && self.angles.iter().zip(&other.angles).all(|(a, b)| a.congruent(b))
    }

    /// Anchor offsets `k` with `self.rotated(k) == other`.
    pub fn rotations_matching(&self, other: &AngleCurvatureSequence) -> Vec<usize> {
        if !self.cyclic || !other.cyclic || self.len() != other.len() {
            return Vec::new();
        }
        (0..self.len()).filter(|&k| self.rotated(k).map(|r| r.same_as(other)).unwrap_or(false)).collect()
    }

    pub fn equals_up_to_rotation(&self, other: &AngleCurvatureSequence) -> bool {
        if self.cyclic {
            !self.rotations_matching(other).is_empty()
        } else {
            self.same_as(other)
        }
    }
}

impl PartialEq for AngleCurvatureSequence {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for AngleCurvatureSequence {}

impl fmt::Display for AngleCurvatureSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, angle) in self.angles.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{angle}")?;
            if let Some(k) = self.curvatures.get(i) {
                write!(f, ", {k}")?;
            }
        }
        write!(f, ")")
    }
}

/// Angle-curvature sequence of a locally convex broken line `A0 A1 ...
/// A(n+1)` (open) or of a convex polygon listed as `A0 A1 ... A(n-1)` with
/// `An = A0` (closed). Either way the first angle is `∠A0 A1 A2`.
///
/// Either traversal direction of a polygon is accepted.
pub fn sequence_of_polygon(line: &BrokenLine) -> Result<AngleCurvatureSequence> {
    line.convexity()?;
    let n = line.vertices.len();
    let sails = line.angles()?.iter().map(vertex_sail).collect::<Result<Vec<_>>>()?;
    let m = sails.len();
    let count = if line.closed { m } else { m.saturating_sub(1) };
    let mut curvatures = Vec::new();
    // sails[i] is the angle at vertex i + 1
    for i in 0..count {
        let (b, c) = (&line.vertices[(i + 1) % n], &line.vertices[(i + 2) % n]);
        curvatures.push(curvature_between(b, c, &sails[i], &sails[(i + 1) % m])?);
    }
    let angles = sails.into_iter().map(|s| s.angle).collect();
    AngleCurvatureSequence::new(angles, curvatures, line.closed)
}

/// `lls(αj) ∘ (κj) ∘ ... ∘ (κ(k-1)) ∘ lls(αk)` for `1 <= j <= k <= n`.
pub fn lls_of_acs(s: &AngleCurvatureSequence, j: usize, k: usize) -> Result<IntSeq> {
    let n = s.len();
    if j < 1 || j > k || k > n {
        return Err(Error::IndexOutOfRange { j, k, n });
    }
    let mut out = IntSeq::new();
    for i in j..=k {
        if i > j {
            out.push(s.curvatures[i - 2].clone());
        }
        out.extend_from(&s.angles[i - 1].lls());
    }
    Ok(out)
}

/// `(K(lls(S_1^j)))` for `j = 1..=n`.
pub fn prefix_continuants(s: &AngleCurvatureSequence) -> IntSeq {
    let mut prev = Int::zero();
    let mut cur = Int::one();
    let mut out = IntSeq::new();
    let step = |x: &Int, prev: &mut Int, cur: &mut Int| {
        let next = x * &*cur + &*prev;
        *prev = std::mem::replace(cur, next);
    };
    for (i, angle) in s.angles.iter().enumerate() {
        if i > 0 {
            step(&s.curvatures[i - 1], &mut prev, &mut cur);
        }
        for x in angle.lls().iter() {
            step(x, &mut prev, &mut cur);
        }
        out.push(cur.clone());
    }
    out
}

/// Number of sign changes after deleting zeros.
pub fn sign_changes(s: &[Int]) -> usize {
    let signs: Vec<bool> = s.iter().filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// A broken line turning strictly counterclockwise about `center`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VortexBrokenLine {
    vertices: Vec<LatticePoint>,
    center: LatticePoint,
}

impl VortexBrokenLine {
    pub fn new(vertices: Vec<LatticePoint>, center: LatticePoint) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::TooFewVertices { needed: 2, got: vertices.len() });
        }
        for (i, pair) in vertices.windows(2).enumerate() {
            if !det(&(&pair[0] - &center), &(&pair[1] - &center)).is_positive() {
                return Err(Error::NotVortex(i));
            }
        }
        Ok(VortexBrokenLine { vertices, center })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn center(&self) -> &LatticePoint {
        &self.center
    }

    /// All lattice points on the line, in order.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let mut out = vec![self.vertices[0].clone()];
        for pair in self.vertices.windows(2) {
            let edge = &pair[1] - &pair[0];
            let step = primitive(&edge).expect("consecutive vortex vertices differ");
            let mut cur = pair[0].clone();
            while cur != pair[1] {
                cur = &cur + &step;
                out.push(cur.clone());
            }
        }
        out
    }
}

/// LLS sequence of a vortex broken line `A0 ... Am` about its center `O`.
///
/// Even entries are `a(2k) = det(OAk, OA(k+1))`; the odd entry at an inner
/// vertex `Ak` is `det(AkA(k-1), AkA(k+1)) / (a(2k-2) a(2k))`.
pub fn lls_of_vortex(line: &VortexBrokenLine) -> Result<IntSeq> {
    let o = &line.center;
    let v = &line.vertices;
    let lengths: Vec<Int> = v.windows(2).map(|w| det(&(&w[0] - o), &(&w[1] - o))).collect();
    let mut out = IntSeq::new();
    for k in 0..lengths.len() {
        if k > 0 {
            let turn = det(&(&v[k - 1] - &v[k]), &(&v[k + 1] - &v[k]));
            let denom = &lengths[k - 1] * &lengths[k];
            if !(&turn % &denom).is_zero() {
                return Err(Error::NonIntegerLls(k));
            }
            out.push(turn / denom);
        }
        out.push(lengths[k].clone());
    }
    Ok(out)
}

/// Number of half-turns `2ω` made about the center by a vortex line whose
/// endpoints both lie on the horizontal axis through the center.
///
/// Counted exactly: every segment between consecutive lattice points spans
/// less than a half-turn, so each sign change of the y-coordinate along the
/// lattice refinement is one crossing of the axis.
pub fn winding_half_turns(line: &VortexBrokenLine) -> Result<usize> {
    let o = &line.center;
    let first = &line.vertices[0];
    let last = &line.vertices[line.vertices.len() - 1];
    if first.y != o.y || last.y != o.y {
        return Err(Error::EndpointsOffAxis);
    }
    let ys: Vec<Int> = line.lattice_points().iter().map(|p| &p.y - &o.y).collect();
    Ok(sign_changes(&ys) + 1)
}

/// The sails of the consecutive angles of a broken line, each shifted so
/// that its vertex sits at the origin, with the even-numbered ones
/// (counting from 1) taken through the central symmetry.
///
/// Coordinates are normalized by the map of the first angle, so the diagram
/// starts at `(1, 0)` and `(1, a0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SailDiagram {
    pub line: VortexBrokenLine,
    /// Positions in `line` of the sail endpoints `B0, ..., Bn`.
    pub edge_vertex_indices: Vec<usize>,
    pub lls: IntSeq,
}

impl SailDiagram {
    pub fn vertices(&self) -> &[LatticePoint] {
        self.line.vertices()
    }

    pub fn edge_vertices(&self) -> Vec<LatticePoint> {
        self.edge_vertex_indices.iter().map(|&i| self.line.vertices()[i].clone()).collect()
    }

    pub fn is_edge_vertex(&self, index: usize) -> bool {
        self.edge_vertex_indices.contains(&index)
    }

    pub fn winding_half_turns(&self) -> Result<usize> {
        winding_half_turns(&self.line)
    }
}

pub fn sail_diagram(line: &BrokenLine) -> Result<SailDiagram> {
    line.convexity()?;
    let angles = line.angles()?;
    let first = normalize_angle(&angles[0])?;
    let linear = UnimodularMap { tx: Int::zero(), ty: Int::zero(), ..first.map };
    let mut points: Vec<LatticePoint> = Vec::new();
    let mut edge_vertex_indices = Vec::new();
    for (i, angle) in angles.iter().enumerate() {
        let sail = crate::sails::sail_vertices(angle)?;
        let shifted: Vec<LatticePoint> = sail
            .vertices
            .iter()
            .map(|v| {
                let rel = v - &angle.vertex;
                let rel = if i % 2 == 1 { -&rel } else { rel };
                linear.apply_vector(&rel).to_point()
            })
            .collect();
        if i == 0 {
            edge_vertex_indices.push(0);
            points.push(shifted[0].clone());
        } else {
            debug_assert_eq!(points.last(), Some(&shifted[0]), "consecutive sails share an endpoint");
        }
        points.extend(shifted.into_iter().skip(1));
        edge_vertex_indices.push(points.len() - 1);
    }
    let line = VortexBrokenLine::new(points, LatticePoint::origin())?;
    let lls = lls_of_vortex(&line)?;
    Ok(SailDiagram { line, edge_vertex_indices, lls })
}

/// `K(lls(S_1^i) ∘ (1))`, the y-coordinate predicted for the point
/// `B̂i = Bi + (Bi - Bi⁻)` of a normalized sail diagram.
pub fn hat_point_height(s: &AngleCurvatureSequence, i: usize) -> Result<Int> {
    Ok(continuant(&lls_of_acs(s, 1, i)?.with(Int::one())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn quadrangle() -> BrokenLine {
        BrokenLine::from_coords(&[(4, -1), (0, 0), (2, 3), (3, 3)], true)
    }

    fn pentagon() -> BrokenLine {
        BrokenLine::from_coords(&[(8, 0), (0, 0), (2, 3), (3, 4), (5, 3)], true)
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn chord_curvature_example() {
        let k = chord_curvature(&p(0, 2), &p(4, 0), &p(0, 0), &p(2, 3)).unwrap();
        assert_eq!(k, int(1));
        assert_eq!(chord_curvature_via_diagram(&p(0, 2), &p(4, 0), &p(0, 0), &p(2, 3)).unwrap(), int(1));
    }

    #[test]
    fn chord_curvature_inner_points_of_example() {
        let first = RationalAngle::new(p(0, 2), p(4, 0), p(0, 0)).unwrap();
        let second = RationalAngle::new(p(4, 0), p(0, 0), p(2, 3)).unwrap();
        assert_eq!(vertex_sail(&first).unwrap().last_inner, p(2, 1));
        assert_eq!(vertex_sail(&second).unwrap().first_inner, p(1, 1));
    }

    #[test]
    fn chord_curvature_rejects_bad_configurations() {
        assert_eq!(chord_curvature(&p(0, 0), &p(1, 0), &p(2, 0), &p(2, 1)), Err(Error::CollinearVertices(1)));
        // zigzag: orientations disagree
        assert_eq!(chord_curvature(&p(0, 1), &p(0, 0), &p(1, 0), &p(1, 1)).is_ok(), true);
        assert_eq!(chord_curvature(&p(0, 1), &p(0, 0), &p(1, 0), &p(1, -1)), Err(Error::NotLocallyConvex(2)));
    }

    #[test]
    fn quadrangle_curvatures() {
        let s = sequence_of_polygon(&quadrangle()).unwrap();
        assert_eq!(s.curvatures, ints(&[-1, -2, -1, -1]));
        let q = quadrangle();
        let v = &q.vertices;
        for i in 0..4 {
            let (a, b, c, d) = (&v[i], &v[(i + 1) % 4], &v[(i + 2) % 4], &v[(i + 3) % 4]);
            assert_eq!(chord_curvature_via_diagram(a, b, c, d).unwrap(), s.curvatures[i]);
        }
    }

    #[test]
    fn quadrangle_sequence() {
        let s = sequence_of_polygon(&quadrangle()).unwrap();
        let expected = AngleCurvatureSequence::from_tangents(&[(14, 11), (3, 1), (4, 3), (15, 4)], &[-1, -2, -1, -1], true).unwrap();
        assert_eq!(s, expected);
        assert_eq!(s.angles[0].lls(), IntSeq::from_i64s(&[1, 3, 1, 1, 1]));
        assert_eq!(s.angles[2].lls(), IntSeq::from_i64s(&[1, 2, 1]));
        assert_eq!(s.angles[3].lls(), IntSeq::from_i64s(&[3, 1, 3]));
    }

    #[test]
    fn pentagon_sequence() {
        let s = sequence_of_polygon(&pentagon()).unwrap();
        let expected =
            AngleCurvatureSequence::from_tangents(&[(3, 2), (1, 1), (3, 1), (1, 1), (1, 1)], &[-2, -4, -2, -3, 0], true).unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn listing_order_sets_the_anchor() {
        let listed = BrokenLine::from_coords(&[(0, 0), (2, 3), (3, 3), (4, -1)], true);
        let s = sequence_of_polygon(&listed).unwrap();
        let anchored = sequence_of_polygon(&quadrangle()).unwrap();
        assert!(!s.same_as(&anchored));
        assert_eq!(s.rotations_matching(&anchored), vec![3]);
        assert_eq!(sequence_of_polygon(&listed.rotated(3)).unwrap(), anchored);
    }

    #[test]
    fn mirrored_polygon_has_same_sequence() {
        let mirrored = quadrangle().mapped(&UnimodularMap::reflection());
        let s = sequence_of_polygon(&mirrored).unwrap();
        assert_eq!(s, sequence_of_polygon(&quadrangle()).unwrap());
    }

    #[test]
    fn unit_triangle_sequence() {
        let tri = BrokenLine::from_coords(&[(0, 0), (1, 0), (0, 1)], true);
        let s = sequence_of_polygon(&tri).unwrap();
        assert!(s.angles.iter().all(|a| a.p == int(1) && a.q == int(1)));
        // independent reading from the local sail diagrams
        let v = &tri.vertices;
        for i in 0..3 {
            let k = chord_curvature_via_diagram(&v[i], &v[(i + 1) % 3], &v[(i + 2) % 3], &v[i]).unwrap();
            assert_eq!(s.curvatures[i], k);
        }
        assert_eq!(s.curvatures, ints(&[-1, -1, -1]));
    }

    #[test]
    fn non_convex_polygons_rejected() {
        let dart = BrokenLine::from_coords(&[(0, 0), (4, 0), (1, 1), (0, 4)], true);
        assert!(matches!(sequence_of_polygon(&dart), Err(Error::NotLocallyConvex(_))));
        let with_collinear = BrokenLine::from_coords(&[(0, 0), (1, 0), (2, 0), (0, 2)], true);
        assert_eq!(sequence_of_polygon(&with_collinear), Err(Error::CollinearVertices(1)));
        // pentagram: locally convex but winds twice
        let star = BrokenLine::from_coords(&[(0, 3), (2, -3), (-3, 1), (3, 1), (-2, -3)], true);
        assert_eq!(sequence_of_polygon(&star).map(|_| ()), Err(Error::NotSimple(2)));
    }

    #[test]
    fn open_broken_line_sequence() {
        // A0..A5 along the quadrangle, wrapping once: angles at the four vertices
        let open = BrokenLine::from_coords(&[(4, -1), (0, 0), (2, 3), (3, 3), (4, -1), (0, 0)], false);
        let s = sequence_of_polygon(&open).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.curvatures, ints(&[-1, -2, -1]));
        assert!(!s.cyclic);
    }

    #[test]
    fn lls_of_acs_examples() {
        let s = sequence_of_polygon(&quadrangle()).unwrap();
        assert_eq!(lls_of_acs(&s, 1, 4).unwrap(), IntSeq::from_i64s(&[1, 3, 1, 1, 1, -1, 3, -2, 1, 2, 1, -1, 3, 1, 3]));
        assert_eq!(lls_of_acs(&s, 2, 4).unwrap(), IntSeq::from_i64s(&[3, -2, 1, 2, 1, -1, 3, 1, 3]));
        assert_eq!(lls_of_acs(&s, 3, 3).unwrap(), IntSeq::from_i64s(&[1, 2, 1]));
        assert!(lls_of_acs(&s, 3, 2).is_err());
        assert!(lls_of_acs(&s, 0, 2).is_err());
        assert!(lls_of_acs(&s, 1, 5).is_err());
    }

    #[test]
    fn sign_change_examples() {
        assert_eq!(sign_changes(&ints(&[14, -1, -15, 0])), 1);
        assert_eq!(sign_changes(&ints(&[1, 0, -1, 0, 1])), 2);
        assert_eq!(sign_changes(&[]), 0);
    }

    #[test]
    fn prefix_continuant_examples() {
        let s = sequence_of_polygon(&quadrangle()).unwrap();
        assert_eq!(prefix_continuants(&s), IntSeq::from_i64s(&[14, -1, -15, 0]));
        let single = AngleCurvatureSequence::from_lls(&[&[1]], &[], false).unwrap();
        assert_eq!(prefix_continuants(&single), IntSeq::from_i64s(&[1]));
        // pentagon, by the recurrence on (1,1,1,-2,1,-4,3,-2,1,-3,1)
        let s = sequence_of_polygon(&pentagon()).unwrap();
        assert_eq!(prefix_continuants(&s), IntSeq::from_i64s(&[3, -1, -1, 1, 0]));
    }

    #[test]
    fn pentagon_sail_diagram() {
        let d = sail_diagram(&pentagon()).unwrap();
        let expected = vec![p(1, 0), p(1, 1), p(2, 3), p(-1, -1), p(2, -1), p(-1, 1), p(-1, 0)];
        assert_eq!(d.vertices(), expected.as_slice());
        let non_edge: Vec<usize> = (0..expected.len()).filter(|&i| !d.is_edge_vertex(i)).collect();
        assert_eq!(non_edge, vec![1]);
        assert_eq!(d.winding_half_turns().unwrap(), 3);
        let s = sequence_of_polygon(&pentagon()).unwrap();
        assert_eq!(d.lls, s.lls());
    }

    #[test]
    fn quadrangle_sail_diagram() {
        let d = sail_diagram(&quadrangle()).unwrap();
        assert_eq!(d.vertices()[0], p(1, 0));
        let ys: Vec<Int> = d.edge_vertices().iter().skip(1).map(|v| v.y.clone()).collect();
        assert_eq!(ys, ints(&[14, -1, -15, 0]));
        assert_eq!(d.vertices().last(), Some(&p(1, 0)));
        assert_eq!(d.winding_half_turns().unwrap(), 2);
        assert_eq!(d.lls, sequence_of_polygon(&quadrangle()).unwrap().lls());
    }

    #[test]
    fn triangle_sail_diagram_ends_opposite() {
        let d = sail_diagram(&BrokenLine::from_coords(&[(0, 0), (3, 1), (1, 2)], true)).unwrap();
        assert_eq!(d.vertices()[0], p(1, 0));
        assert_eq!(d.vertices().last(), Some(&p(-1, 0)));
        assert_eq!(d.winding_half_turns().unwrap(), 1);
    }

    #[test]
    fn vortex_lls_examples() {
        let line = VortexBrokenLine::new(vec![p(1, 0), p(1, 1), p(5, 7)], p(0, 0)).unwrap();
        assert_eq!(lls_of_vortex(&line).unwrap(), IntSeq::from_i64s(&[1, 2, 2]));
        let line = VortexBrokenLine::new(vec![p(1, 0), p(1, 1)], p(0, 0)).unwrap();
        assert_eq!(lls_of_vortex(&line).unwrap(), IntSeq::from_i64s(&[1]));
        assert_eq!(VortexBrokenLine::new(vec![p(1, 1), p(1, 0)], p(0, 0)), Err(Error::NotVortex(0)));
    }

    #[test]
    fn vortex_lls_rejects_non_integer_entries() {
        // edges at distance 2 from the origin
        let line = VortexBrokenLine::new(vec![p(2, 0), p(2, 1), p(1, 2)], p(0, 0)).unwrap();
        assert_eq!(lls_of_vortex(&line), Err(Error::NonIntegerLls(1)));
    }

    #[test]
    fn winding_requires_axis_endpoints() {
        let line = VortexBrokenLine::new(vec![p(1, 0), p(1, 1)], p(0, 0)).unwrap();
        assert_eq!(winding_half_turns(&line), Err(Error::EndpointsOffAxis));
    }

    #[test]
    fn hat_point_heights_in_quadrangle_diagram() {
        let s = sequence_of_polygon(&quadrangle()).unwrap();
        let d = sail_diagram(&quadrangle()).unwrap();
        let pts = d.line.lattice_points();
        for i in 1..4 {
            let b = &d.edge_vertices()[i];
            let pos = pts.iter().position(|x| x == b).unwrap();
            let before = &pts[pos - 1];
            let hat = b + &(b - before);
            assert_eq!(hat.y, hat_point_height(&s, i).unwrap());
        }
    }
}
