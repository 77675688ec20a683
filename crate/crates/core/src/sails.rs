//! Normal forms of rational angles, their sails and LLS sequences.
//!
//! Every proper rational angle is integer congruent to exactly one angle
//! `iarctan(p/q) = ∠((1,0), (0,0), (q,p))` with coprime `p >= q >= 1`. The
//! fraction `p/q` is the integer tangent of the angle; its odd-length
//! continued fraction expansion is the LLS sequence, which in turn encodes
//! the sail (the bounded part of the boundary of the convex hull of the
//! lattice points inside the angle, vertex excluded).
//!
//! Angles are ordered: `edge_a` is sent to the ray through `(1, 0)`. They are
//! normalized up to reflections as well, and [`NormalizedAngle`] records
//! whether a reflection was needed.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::contfrac::{cf_eval, cf_expand_odd, continuant, continuant_pair, IntSeq, ProjRational};
use crate::error::{Error, Result};
use crate::lattice::{gcd, primitive, Int, LatticePoint, RationalAngle, UnimodularMap};

/// A rational angle in normal form, together with the map achieving it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalizedAngle {
    pub p: Int,
    pub q: Int,
    /// Sends the source vertex to the origin, the first edge onto the ray of
    /// `(1, 0)` and the second edge onto the ray of `(q, p)`.
    pub map: UnimodularMap,
    pub orientation_flipped: bool,
}

impl NormalizedAngle {
    /// The canonical angle `iarctan(p/q)`, normalized by the identity map.
    pub fn from_tangent(p: Int, q: Int) -> Result<Self> {
        validate_tangent(&p, &q)?;
        Ok(NormalizedAngle { p, q, map: UnimodularMap::identity(), orientation_flipped: false })
    }

    /// The angle whose LLS sequence is `lls` (odd length, positive entries).
    pub fn from_lls(lls: &IntSeq) -> Result<Self> {
        if lls.len() % 2 == 0 {
            return Err(Error::InvalidLls(format!("{lls} has even length")));
        }
        if lls.iter().any(|a| !a.is_positive()) {
            return Err(Error::InvalidLls(format!("{lls} has a non-positive entry")));
        }
        let value = cf_eval(lls);
        Self::from_tangent(value.num().clone(), value.den().clone())
    }

    pub fn tangent(&self) -> (&Int, &Int) {
        (&self.p, &self.q)
    }

    pub fn itan(&self) -> ProjRational {
        ProjRational::new(self.p.clone(), self.q.clone()).expect("p is positive")
    }

    pub fn lls(&self) -> IntSeq {
        cf_expand_odd(&self.p, &self.q).expect("normal form is a valid tangent")
    }

    pub fn canonical_angle(&self) -> RationalAngle {
        iarctan_angle(&self.p, &self.q).expect("normal form is a valid tangent")
    }

    /// Same congruence class (the normalizing maps may differ).
    pub fn congruent(&self, other: &NormalizedAngle) -> bool {
        self.p == other.p && self.q == other.q
    }
}

impl fmt::Display for NormalizedAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "iarctan({}/{})", self.p, self.q)
    }
}

fn validate_tangent(p: &Int, q: &Int) -> Result<()> {
    if q.is_positive() && p >= q && gcd(p, q).is_one() {
        Ok(())
    } else {
        Err(Error::InvalidTangent { p: p.clone(), q: q.clone() })
    }
}

/// Brings a proper angle to the form `∠((1,0), (0,0), (q,p))` with
/// `1 <= q <= p`.
pub fn normalize_angle(angle: &RationalAngle) -> Result<NormalizedAngle> {
    angle.require_proper()?;
    let u = primitive(&angle.ray_a())?;
    let w = primitive(&angle.ray_b())?;

    // s u.dx + t u.dy = 1, so [[s, t], [-u.dy, u.dx]] sends u to (1, 0)
    let eg = u.dx.extended_gcd(&u.dy);
    let (s, t) = if eg.gcd.is_one() { (eg.x, eg.y) } else { (-eg.x, -eg.y) };
    let mut linear = UnimodularMap::linear(s, t, -&u.dy, u.dx.clone())?;

    let mut image = linear.apply_vector(&w);
    let mut flipped = false;
    if image.dy.is_negative() {
        linear = UnimodularMap::reflection().after(&linear);
        image = linear.apply_vector(&w);
        flipped = true;
    }
    let p = image.dy.clone();
    // representative of q0 mod p in 1..=p
    let q = (&image.dx - Int::one()).mod_floor(&p) + Int::one();
    let k = (&q - &image.dx) / &p;
    let linear = UnimodularMap::shear(k).after(&linear);

    let to_origin = UnimodularMap::translation(&(-&angle.vertex.to_vector()));
    let map = linear.after(&to_origin);
    debug_assert_eq!(map.apply(&angle.vertex), LatticePoint::origin());
    Ok(NormalizedAngle { p, q, map, orientation_flipped: flipped })
}

/// The integer tangent `p/q` of a proper angle.
pub fn itan(angle: &RationalAngle) -> Result<ProjRational> {
    Ok(normalize_angle(angle)?.itan())
}

pub fn lls_of_angle(angle: &RationalAngle) -> Result<IntSeq> {
    Ok(normalize_angle(angle)?.lls())
}

/// Sail of an angle: its vertices from the first edge to the second, and
/// the LLS sequence read along it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sail {
    pub vertices: Vec<LatticePoint>,
    pub lls: IntSeq,
}

/// Vertices of the sail of the normal form `iarctan(p/q)` with LLS
/// `(a0, ..., a2n)`: `(1, 0)` followed by `(K(a1..a(2i-2)), K(a0..a(2i-2)))`
/// for `i = 1..=n+1`.
pub fn normal_sail_vertices(lls: &IntSeq) -> Vec<LatticePoint> {
    let mut vertices = vec![LatticePoint::new(1, 0)];
    for end in (0..lls.len()).step_by(2) {
        let prefix = &lls[..=end];
        vertices.push(LatticePoint { x: continuant(&prefix[1..]), y: continuant(prefix) });
    }
    vertices
}

/// Sail of a proper angle, computed from continuants in normal coordinates
/// and mapped back.
pub fn sail_vertices(angle: &RationalAngle) -> Result<Sail> {
    let normal = normalize_angle(angle)?;
    let lls = normal.lls();
    let back = normal.map.inverse();
    let vertices = normal_sail_vertices(&lls).iter().map(|v| back.apply(v)).collect();
    Ok(Sail { vertices, lls })
}

/// The angle `∠((1,0), (0,0), (q,p))`.
pub fn iarctan_angle(p: &Int, q: &Int) -> Result<RationalAngle> {
    validate_tangent(p, q)?;
    RationalAngle::new(LatticePoint::new(1, 0), LatticePoint::origin(), LatticePoint::new(q.clone(), p.clone()))
}

/// The angle swept by a vortex broken line with LLS sequence `s` that starts
/// at `(1, 0)` and `(1, s0)`.
///
/// The line ends at `C = (K(s1..), K(s0..))`. When `C` lies below the
/// x-axis the swept angle exceeds a half-turn; it is reduced by the central
/// symmetry, i.e. measured from the ray of `(-1, 0)`.
pub fn angle_from_sequence(s: &IntSeq) -> Result<NormalizedAngle> {
    if s.len() % 2 == 0 {
        return Err(Error::MalformedSequence(format!("{s} must have odd length")));
    }
    let (cx, cy) = continuant_pair(s);
    if cy.is_zero() {
        return Err(Error::DegenerateSequenceAngle);
    }
    let end = if cy.is_negative() { LatticePoint { x: -cx, y: -cy } } else { LatticePoint { x: cx, y: cy } };
    let angle = RationalAngle::new(LatticePoint::new(1, 0), LatticePoint::origin(), end)?;
    normalize_angle(&angle)
}

/// Like [`angle_from_sequence`] but always measuring `∠((1,0), O, C)` and
/// normalizing with a reflection when `C` is below the x-axis.
pub fn angle_from_sequence_reflected(s: &IntSeq) -> Result<NormalizedAngle> {
    let (cx, cy) = continuant_pair(s);
    if cy.is_zero() {
        return Err(Error::DegenerateSequenceAngle);
    }
    let angle = RationalAngle::new(LatticePoint::new(1, 0), LatticePoint::origin(), LatticePoint { x: cx, y: cy })?;
    normalize_angle(&angle)
}

/// The LLS sequence read off a chain of sail vertices: integer lengths of
/// the edges alternating with integer sines at the inner vertices.
pub fn sail_readings(vertices: &[LatticePoint]) -> Result<IntSeq> {
    let mut out = IntSeq::new();
    for (i, pair) in vertices.windows(2).enumerate() {
        if i > 0 {
            let angle = RationalAngle::new(vertices[i - 1].clone(), pair[0].clone(), pair[1].clone())?;
            out.push(crate::lattice::int_sine(&angle)?);
        }
        out.push(crate::lattice::int_length(&pair[0], &pair[1])?);
    }
    Ok(out)
}
