//! Feasibility of angle-curvature sequences, completion of open sequences to
//! cyclic ones, and the ASCA congruence rule for lattice triangles.

use num_traits::{One, Zero};

use crate::contfrac::{continuant, floor_div, IntSeq};
use crate::curvature::{chord_curvature, lls_of_acs, prefix_continuants, sign_changes, AngleCurvatureSequence};
use crate::error::{Error, Result};
use crate::lattice::{det, int_length, Int, LatticePoint, RationalAngle};
use crate::sails::{angle_from_sequence, normalize_angle, NormalizedAngle};

/// `K(lls(S_1^n)) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureCondition {
    pub ok: bool,
    pub continuant: Int,
}

/// `κn = -⌊K(lls(S_2^n) ∘ (1)) / K(lls(S_2^n))⌋`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureCondition {
    pub ok: bool,
    pub kappa_n: Int,
    pub numerator: Int,
    pub denominator: Int,
    /// `None` when the denominator vanishes.
    pub expected: Option<Int>,
}

/// The prefix continuants change sign exactly `n - 3` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindingCondition {
    pub ok: bool,
    pub prefix_continuants: IntSeq,
    pub sign_changes: usize,
    pub required: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub closure: ClosureCondition,
    pub curvature: CurvatureCondition,
    pub winding: WindingCondition,
    pub feasible: bool,
}

impl FeasibilityReport {
    /// Names of the conditions that fail.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.closure.ok {
            out.push("closure");
        }
        if !self.curvature.ok {
            out.push("curvature");
        }
        if !self.winding.ok {
            out.push("winding");
        }
        out
    }
}

fn neg_floor_ratio(seq: &IntSeq) -> (Int, Int, Option<Int>) {
    let numerator = continuant(&seq.with(Int::one()));
    let denominator = continuant(seq);
    let value = floor_div(&numerator, &denominator).ok().map(|v| -v);
    (numerator, denominator, value)
}

/// Checks the three conditions under which a cyclic angle-curvature
/// sequence with `n >= 3` angles is realized by a convex polygon.
pub fn check_feasibility(s: &AngleCurvatureSequence) -> Result<FeasibilityReport> {
    if !s.cyclic {
        return Err(Error::MalformedSequence("feasibility needs a cyclic sequence".into()));
    }
    let n = s.len();
    if n < 3 {
        return Err(Error::MalformedSequence(format!("need at least 3 angles, got {n}")));
    }

    let full = continuant(&s.lls());
    let closure = ClosureCondition { ok: full.is_zero(), continuant: full };

    let (numerator, denominator, expected) = neg_floor_ratio(&lls_of_acs(s, 2, n)?);
    let kappa_n = s.curvatures[n - 1].clone();
    let curvature = CurvatureCondition { ok: expected.as_ref() == Some(&kappa_n), kappa_n, numerator, denominator, expected };

    let prefix = prefix_continuants(s);
    let changes = sign_changes(&prefix);
    let winding = WindingCondition { ok: changes == n - 3, prefix_continuants: prefix, sign_changes: changes, required: n - 3 };

    let feasible = closure.ok && curvature.ok && winding.ok;
    Ok(FeasibilityReport { closure, curvature, winding, feasible })
}

/// The data `(x, β, y)` closing an open sequence `(α1, κ1, ..., αn)` into
/// the cyclic sequence `(α1, κ1, ..., αn, x, β, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub x: Int,
    pub beta: NormalizedAngle,
    pub y: Int,
}

impl Completion {
    pub fn assemble(&self, open: &AngleCurvatureSequence) -> Result<AngleCurvatureSequence> {
        if open.cyclic {
            return Err(Error::MalformedSequence("completion applies to open sequences".into()));
        }
        let mut angles = open.angles.clone();
        angles.push(self.beta.clone());
        let mut curvatures = open.curvatures.clone();
        curvatures.push(self.x.clone());
        curvatures.push(self.y.clone());
        AngleCurvatureSequence::new(angles, curvatures, true)
    }
}

/// Completes an open sequence with `n >= 2` angles.
///
/// With `U = lls(α1, κ1, ..., αn)`: `x = -⌊K(U∘(1)) / K(U)⌋`, `β` is the
/// angle swept by `-Uᵗ`, and `y = -⌊K(V∘(1)) / K(V)⌋` for
/// `V = lls(α2, ..., αn) ∘ (x) ∘ lls(β)`.
pub fn complete_sequence(open: &AngleCurvatureSequence) -> Result<Completion> {
    if open.cyclic {
        return Err(Error::MalformedSequence("completion applies to open sequences".into()));
    }
    let n = open.len();
    if n < 2 {
        return Err(Error::MalformedSequence(format!("need at least 2 angles, got {n}")));
    }
    let u = open.lls();
    let (_, _, x) = neg_floor_ratio(&u);
    let x = x.ok_or(Error::DegenerateSequenceAngle)?;
    let beta = angle_from_sequence(&u.reversed().negated())?;
    let mut v = lls_of_acs(open, 2, n)?;
    v.push(x.clone());
    v.extend_from(&beta.lls());
    let (_, _, y) = neg_floor_ratio(&v);
    let y = y.ok_or(Error::DegenerateSequenceAngle)?;
    Ok(Completion { x, beta, y })
}

/// A lattice triangle with labelled vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangle {
    pub a: LatticePoint,
    pub b: LatticePoint,
    pub c: LatticePoint,
}

impl Triangle {
    pub fn new(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<Self> {
        if det(&(&b - &a), &(&c - &a)).is_zero() {
            return Err(Error::CollinearVertices(0));
        }
        Ok(Triangle { a, b, c })
    }

    pub fn from_coords(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Result<Self> {
        Self::new(LatticePoint::new(a.0, a.1), LatticePoint::new(b.0, b.1), LatticePoint::new(c.0, c.1))
    }

    /// Twice the Euclidean area, i.e. the integer area.
    pub fn double_area(&self) -> Int {
        use num_traits::Signed;
        det(&(&self.b - &self.a), &(&self.c - &self.a)).abs()
    }

    pub fn vertices(&self) -> [LatticePoint; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }
}

/// The invariants compared by the ASCA rule: `itan ∠ABC`, `itan ∠BAC`,
/// `il(AB)` and the chord curvature of the closed walk `CABC` at `AB`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AscaSignature {
    pub angle_b: (Int, Int),
    pub angle_a: (Int, Int),
    pub side: Int,
    pub curvature: Int,
}

pub fn asca_signature(t: &Triangle) -> Result<AscaSignature> {
    let at_b = normalize_angle(&RationalAngle::new(t.a.clone(), t.b.clone(), t.c.clone())?)?;
    let at_a = normalize_angle(&RationalAngle::new(t.b.clone(), t.a.clone(), t.c.clone())?)?;
    Ok(AscaSignature {
        angle_b: (at_b.p, at_b.q),
        angle_a: (at_a.p, at_a.q),
        side: int_length(&t.a, &t.b)?,
        curvature: chord_curvature(&t.c, &t.a, &t.b, &t.c)?,
    })
}

/// Integer angle-side-curvature-angle rule: `ABC ≅ A'B'C'` with `A ↦ A'`,
/// `B ↦ B'`, `C ↦ C'`.
pub fn asca_congruent(t1: &Triangle, t2: &Triangle) -> Result<bool> {
    Ok(asca_signature(t1)? == asca_signature(t2)?)
}
