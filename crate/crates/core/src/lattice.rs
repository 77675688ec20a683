//! Exact lattice primitives: points, vectors, unimodular affine maps and the
//! elementary integer invariants (length, area, sine, distance).
//!
//! Every quantity is an arbitrary-precision integer, so nothing here can
//! overflow.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used for every coordinate and invariant.
pub type Int = BigInt;

/// Shorthand for building an [`Int`] from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: Int,
    pub y: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub dx: Int,
    pub dy: Int,
}

impl LatticePoint {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> Self {
        LatticePoint { x: x.into(), y: y.into() }
    }

    pub fn origin() -> Self {
        LatticePoint::new(0, 0)
    }

    /// Position vector of the point relative to the origin.
    pub fn to_vector(&self) -> LatticeVector {
        LatticeVector { dx: self.x.clone(), dy: self.y.clone() }
    }
}

impl LatticeVector {
    pub fn new(dx: impl Into<Int>, dy: impl Into<Int>) -> Self {
        LatticeVector { dx: dx.into(), dy: dy.into() }
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }

    pub fn is_primitive(&self) -> bool {
        gcd(&self.dx, &self.dy).is_one()
    }

    pub fn to_point(&self) -> LatticePoint {
        LatticePoint { x: self.dx.clone(), y: self.dy.clone() }
    }

    pub fn scale(&self, k: &Int) -> LatticeVector {
        LatticeVector { dx: &self.dx * k, dy: &self.dy * k }
    }

    pub fn dot(&self, other: &LatticeVector) -> Int {
        &self.dx * &other.dx + &self.dy * &other.dy
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.dx, self.dy)
    }
}

impl<'a> Sub<&'a LatticePoint> for &'a LatticePoint {
    type Output = LatticeVector;
    fn sub(self, rhs: &'a LatticePoint) -> LatticeVector {
        LatticeVector { dx: &self.x - &rhs.x, dy: &self.y - &rhs.y }
    }
}

impl<'a> Add<&'a LatticeVector> for &'a LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &'a LatticeVector) -> LatticePoint {
        LatticePoint { x: &self.x + &rhs.dx, y: &self.y + &rhs.dy }
    }
}

impl<'a> Sub<&'a LatticeVector> for &'a LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &'a LatticeVector) -> LatticePoint {
        LatticePoint { x: &self.x - &rhs.dx, y: &self.y - &rhs.dy }
    }
}

impl<'a> Add<&'a LatticeVector> for &'a LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &'a LatticeVector) -> LatticeVector {
        LatticeVector { dx: &self.dx + &rhs.dx, dy: &self.dy + &rhs.dy }
    }
}

impl<'a> Sub<&'a LatticeVector> for &'a LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &'a LatticeVector) -> LatticeVector {
        LatticeVector { dx: &self.dx - &rhs.dx, dy: &self.dy - &rhs.dy }
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector { dx: -&self.dx, dy: -&self.dy }
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint { x: -&self.x, y: -&self.y }
    }
}

/// Nonnegative greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// The vector divided by the gcd of its coordinates.
pub fn primitive(v: &LatticeVector) -> Result<LatticeVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = gcd(&v.dx, &v.dy);
    Ok(LatticeVector { dx: &v.dx / &g, dy: &v.dy / &g })
}

/// Oriented area of the parallelogram spanned by `u` and `v`.
pub fn det(u: &LatticeVector, v: &LatticeVector) -> Int {
    &u.dx * &v.dy - &u.dy * &v.dx
}

/// Number of lattice segments composing `pq`.
pub fn int_length(p: &LatticePoint, q: &LatticePoint) -> Result<Int> {
    if p == q {
        return Err(Error::CoincidentPoints);
    }
    let v = q - p;
    Ok(gcd(&v.dx, &v.dy))
}

/// Integer distance from `p` to the integer line through `line.0` and `line.1`.
pub fn int_distance(p: &LatticePoint, line: (&LatticePoint, &LatticePoint)) -> Result<Int> {
    let (l1, l2) = line;
    if l1 == l2 {
        return Err(Error::DegenerateLine);
    }
    let dir = primitive(&(l2 - l1))?;
    Ok(det(&dir, &(p - l1)).abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Negative,
    None,
}

impl Orientation {
    pub fn of_sign(value: &Int) -> Self {
        if value.is_positive() {
            Orientation::Positive
        } else if value.is_negative() {
            Orientation::Negative
        } else {
            Orientation::None
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AngleKind {
    /// Both edges on the same ray.
    Zero,
    /// Edges on opposite rays.
    Straight,
    Proper,
}

/// An integer angle given by a point on each edge and its vertex.
///
/// Rational by construction: both edges contain the integer points `edge_a`
/// and `edge_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    pub edge_a: LatticePoint,
    pub vertex: LatticePoint,
    pub edge_b: LatticePoint,
}

impl RationalAngle {
    pub fn new(edge_a: LatticePoint, vertex: LatticePoint, edge_b: LatticePoint) -> Result<Self> {
        if edge_a == vertex || edge_b == vertex {
            return Err(Error::CoincidentPoints);
        }
        Ok(RationalAngle { edge_a, vertex, edge_b })
    }

    pub fn ray_a(&self) -> LatticeVector {
        &self.edge_a - &self.vertex
    }

    pub fn ray_b(&self) -> LatticeVector {
        &self.edge_b - &self.vertex
    }

    pub fn kind(&self) -> AngleKind {
        let (a, b) = (self.ray_a(), self.ray_b());
        if !det(&a, &b).is_zero() {
            AngleKind::Proper
        } else if a.dot(&b).is_positive() {
            AngleKind::Zero
        } else {
            AngleKind::Straight
        }
    }

    /// Fails with the matching error unless the angle is proper.
    pub fn require_proper(&self) -> Result<()> {
        match self.kind() {
            AngleKind::Proper => Ok(()),
            AngleKind::Zero => Err(Error::ZeroAngle),
            AngleKind::Straight => Err(Error::StraightAngle),
        }
    }

    pub fn orientation(&self) -> Orientation {
        Orientation::of_sign(&det(&self.ray_a(), &self.ray_b()))
    }

    /// The same angle with its edges swapped.
    pub fn transposed(&self) -> RationalAngle {
        RationalAngle {
            edge_a: self.edge_b.clone(),
            vertex: self.vertex.clone(),
            edge_b: self.edge_a.clone(),
        }
    }

    pub fn mapped(&self, m: &UnimodularMap) -> RationalAngle {
        RationalAngle {
            edge_a: m.apply(&self.edge_a),
            vertex: m.apply(&self.vertex),
            edge_b: m.apply(&self.edge_b),
        }
    }
}

/// `|det|` of the primitive edge vectors of a proper angle.
pub fn int_sine(angle: &RationalAngle) -> Result<Int> {
    angle.require_proper()?;
    let a = primitive(&angle.ray_a())?;
    let b = primitive(&angle.ray_b())?;
    Ok(det(&a, &b).abs())
}

pub fn orientation(angle: &RationalAngle) -> Orientation {
    angle.orientation()
}

/// Affine map `p -> L p + t` with an integer linear part of determinant ±1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d: Int,
    pub tx: Int,
    pub ty: Int,
}

impl UnimodularMap {
    /// Builds the map `(x, y) -> (a x + b y + tx, c x + d y + ty)`.
    pub fn new(a: Int, b: Int, c: Int, d: Int, tx: Int, ty: Int) -> Result<Self> {
        let m = UnimodularMap { a, b, c, d, tx, ty };
        let det = m.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det));
        }
        Ok(m)
    }

    pub fn linear(a: Int, b: Int, c: Int, d: Int) -> Result<Self> {
        Self::new(a, b, c, d, Int::zero(), Int::zero())
    }

    pub fn identity() -> Self {
        UnimodularMap {
            a: Int::one(),
            b: Int::zero(),
            c: Int::zero(),
            d: Int::one(),
            tx: Int::zero(),
            ty: Int::zero(),
        }
    }

    pub fn translation(v: &LatticeVector) -> Self {
        UnimodularMap { tx: v.dx.clone(), ty: v.dy.clone(), ..Self::identity() }
    }

    /// `(x, y) -> (x, -y)`.
    pub fn reflection() -> Self {
        UnimodularMap { d: -Int::one(), ..Self::identity() }
    }

    /// `(x, y) -> (-x, -y)`.
    pub fn central_symmetry() -> Self {
        UnimodularMap { a: -Int::one(), d: -Int::one(), ..Self::identity() }
    }

    /// `(x, y) -> (x + k y, y)`.
    pub fn shear(k: Int) -> Self {
        UnimodularMap { b: k, ..Self::identity() }
    }

    pub fn det(&self) -> Int {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn preserves_orientation(&self) -> bool {
        self.det().is_positive()
    }

    pub fn apply(&self, p: &LatticePoint) -> LatticePoint {
        LatticePoint {
            x: &self.a * &p.x + &self.b * &p.y + &self.tx,
            y: &self.c * &p.x + &self.d * &p.y + &self.ty,
        }
    }

    /// Applies only the linear part.
    pub fn apply_vector(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector {
            dx: &self.a * &v.dx + &self.b * &v.dy,
            dy: &self.c * &v.dx + &self.d * &v.dy,
        }
    }

    /// The map `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &UnimodularMap) -> UnimodularMap {
        let t = self.apply(&LatticePoint { x: first.tx.clone(), y: first.ty.clone() });
        UnimodularMap {
            a: &self.a * &first.a + &self.b * &first.c,
            b: &self.a * &first.b + &self.b * &first.d,
            c: &self.c * &first.a + &self.d * &first.c,
            d: &self.c * &first.b + &self.d * &first.d,
            tx: t.x,
            ty: t.y,
        }
    }

    /// Exact inverse via the adjugate; the determinant is ±1.
    pub fn inverse(&self) -> UnimodularMap {
        let det = self.det();
        let (a, b, c, d) = (&self.d * &det, -&self.b * &det, -&self.c * &det, &self.a * &det);
        let tx = -(&a * &self.tx + &b * &self.ty);
        let ty = -(&c * &self.tx + &d * &self.ty);
        UnimodularMap { a, b, c, d, tx, ty }
    }
}

pub fn apply_map(m: &UnimodularMap, p: &LatticePoint) -> LatticePoint {
    m.apply(p)
}
