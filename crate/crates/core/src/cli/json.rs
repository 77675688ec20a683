//! JSON documents read and written by the command-line tool.

use num_traits::{Signed, ToPrimitive};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer};
use serde_json::{json, Value};

use crate::contfrac::IntSeq;
use crate::curvature::{AngleCurvatureSequence, BrokenLine, SailDiagram};
use crate::error::Result;
use crate::lattice::{Int, LatticePoint, RationalAngle};
use crate::sails::{normalize_angle, NormalizedAngle, Sail};
use crate::theorems::{Completion, FeasibilityReport};

const SAFE_BITS: u64 = 53;

/// An integer that may arrive as a JSON number, a decimal string, or
/// `{"bigint": true, "value": "<decimal>"}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub Int);

#[derive(Deserialize)]
#[serde(untagged)]
enum RawInt {
    Num(i64),
    Text(String),
    Big { bigint: bool, value: String },
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = match RawInt::deserialize(d)? {
            RawInt::Num(v) => return Ok(JsonInt(Int::from(v))),
            RawInt::Text(s) => s,
            RawInt::Big { bigint: true, value } => value,
            RawInt::Big { bigint: false, .. } => return Err(D::Error::custom("the bigint marker must be true")),
        };
        text.trim().parse::<Int>().map(JsonInt).map_err(|_| D::Error::custom(format!("not an integer: {text:?}")))
    }
}

/// Numbers up to 53 bits stay plain JSON numbers.
pub fn int_json(v: &Int) -> Value {
    if v.abs().bits() <= SAFE_BITS {
        json!(v.to_i64().expect("53-bit value fits in i64"))
    } else {
        json!({"bigint": true, "value": v.to_string()})
    }
}

pub fn ints_json(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

pub fn point_json(p: &LatticePoint) -> Value {
    json!([int_json(&p.x), int_json(&p.y)])
}

pub fn points_json(v: &[LatticePoint]) -> Value {
    Value::Array(v.iter().map(point_json).collect())
}

pub fn angle_json(a: &NormalizedAngle) -> Value {
    json!({"itan": [int_json(&a.p), int_json(&a.q)], "lls": ints_json(&a.lls())})
}

fn point_of(p: &[JsonInt; 2]) -> LatticePoint {
    LatticePoint { x: p[0].0.clone(), y: p[1].0.clone() }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonDocument {
    pub vertices: Vec<[JsonInt; 2]>,
}

impl PolygonDocument {
    pub fn polygon(&self) -> BrokenLine {
        BrokenLine::polygon(self.vertices.iter().map(point_of).collect())
    }

    pub fn of(line: &BrokenLine) -> Value {
        json!({"vertices": points_json(&line.vertices)})
    }
}

/// An angle given by its integer tangent, its LLS sequence, or three points.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum AngleSpec {
    Itan { itan: [JsonInt; 2] },
    Lls { lls: Vec<JsonInt> },
    Points { points: [[JsonInt; 2]; 3] },
}

impl AngleSpec {
    pub fn rational_angle(&self) -> Result<RationalAngle> {
        match self {
            AngleSpec::Points { points } => {
                let [a, v, b] = points;
                RationalAngle::new(point_of(a), point_of(v), point_of(b))
            }
            _ => self.normalized().map(|n| n.canonical_angle()),
        }
    }

    pub fn normalized(&self) -> Result<NormalizedAngle> {
        match self {
            AngleSpec::Itan { itan } => NormalizedAngle::from_tangent(itan[0].0.clone(), itan[1].0.clone()),
            AngleSpec::Lls { lls } => NormalizedAngle::from_lls(&lls.iter().map(|v| v.0.clone()).collect::<IntSeq>()),
            AngleSpec::Points { .. } => {
                let angle = self.rational_angle()?;
                angle.require_proper()?;
                normalize_angle(&angle)
            }
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceDocument {
    pub angles: Vec<AngleSpec>,
    pub curvatures: Vec<JsonInt>,
    #[serde(default)]
    pub cyclic: Option<bool>,
}

impl SequenceDocument {
    pub fn sequence(&self, default_cyclic: bool) -> Result<AngleCurvatureSequence> {
        let angles = self.angles.iter().map(AngleSpec::normalized).collect::<Result<Vec<_>>>()?;
        let curvatures = self.curvatures.iter().map(|k| k.0.clone()).collect();
        AngleCurvatureSequence::new(angles, curvatures, self.cyclic.unwrap_or(default_cyclic))
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDocument {
    pub first: PolygonDocument,
    pub second: PolygonDocument,
}

pub fn sequence_json(s: &AngleCurvatureSequence) -> Value {
    json!({
        "angles": s.angles.iter().map(angle_json).collect::<Vec<_>>(),
        "curvatures": ints_json(&s.curvatures),
        "cyclic": s.cyclic,
        "lls": ints_json(&s.lls()),
    })
}

pub fn report_json(r: &FeasibilityReport) -> Value {
    json!({
        "feasible": r.feasible,
        "failed": r.failures(),
        "closure": {"ok": r.closure.ok, "continuant": int_json(&r.closure.continuant)},
        "curvature": {
            "ok": r.curvature.ok,
            "kappa_n": int_json(&r.curvature.kappa_n),
            "numerator": int_json(&r.curvature.numerator),
            "denominator": int_json(&r.curvature.denominator),
            "expected": r.curvature.expected.as_ref().map(int_json),
        },
        "winding": {
            "ok": r.winding.ok,
            "prefix_continuants": ints_json(&r.winding.prefix_continuants),
            "sign_changes": r.winding.sign_changes,
            "required": r.winding.required,
        },
    })
}

pub fn completion_json(c: &Completion) -> Value {
    json!({"x": int_json(&c.x), "beta": angle_json(&c.beta), "y": int_json(&c.y)})
}

pub fn sail_json(angle: &NormalizedAngle, sail: &Sail) -> Value {
    json!({
        "itan": [int_json(&angle.p), int_json(&angle.q)],
        "vertices": points_json(&sail.vertices),
        "lls": ints_json(&sail.lls),
    })
}

pub fn diagram_json(d: &SailDiagram) -> Result<Value> {
    let vertices: Vec<Value> = d
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| json!({"point": point_json(v), "edge_vertex": d.is_edge_vertex(i)}))
        .collect();
    Ok(json!({
        "vertices": vertices,
        "lls": ints_json(&d.lls),
        "winding_half_turns": d.winding_half_turns()?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int;

    #[test]
    fn integers_round_trip() {
        let small: JsonInt = serde_json::from_str("-17").unwrap();
        assert_eq!(small.0, int(-17));
        let text: JsonInt = serde_json::from_str("\"123456789012345678901234567890\"").unwrap();
        let big: JsonInt = serde_json::from_str(r#"{"bigint": true, "value": "123456789012345678901234567890"}"#).unwrap();
        assert_eq!(text, big);
        assert_eq!(int_json(&big.0), json!({"bigint": true, "value": "123456789012345678901234567890"}));
        assert_eq!(int_json(&int((1 << 53) - 1)), json!(9007199254740991i64));
        assert!(int_json(&int(1 << 53)).is_object());
        assert!(serde_json::from_str::<JsonInt>("1.5").is_err());
    }

    #[test]
    fn angle_specs() {
        let specs: Vec<AngleSpec> =
            serde_json::from_str(r#"[{"itan": [7, 5]}, {"lls": [1, 2, 2]}, {"points": [[1, 0], [0, 0], [5, 7]]}]"#).unwrap();
        for s in &specs {
            let n = s.normalized().unwrap();
            assert_eq!((n.p, n.q), (int(7), int(5)));
        }
    }

    #[test]
    fn sequence_document_counts() {
        let doc: SequenceDocument =
            serde_json::from_str(r#"{"angles": [{"itan": [1, 1]}, {"itan": [1, 1]}], "curvatures": [-1, -1, -1]}"#).unwrap();
        assert!(doc.sequence(true).is_err());
        assert!(doc.sequence(false).is_err());
    }
}
