use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use jsonschema::JSONSchema;
use serde_json::{json, Value};

const BIN: &str = env!("CARGO_BIN_EXE_lattice-trig");

struct Run {
    code: i32,
    stdout: String,
    json: Value,
}

fn run(args: &[&str], input: &str) -> Run {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {stdout}"));
    Run { code: out.status.code().unwrap(), stdout, json }
}

fn schema(name: &str) -> JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    JSONSchema::compile(&doc).unwrap()
}

fn assert_valid(name: &str, value: &Value) {
    let s = schema(name);
    if let Err(errors) = s.validate(value) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{name} schema rejects output: {msgs:?}\n{value}");
    };
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn assert_svg(path: &Path, needle: &str) {
    let text = std::fs::read_to_string(path).unwrap();
    let doc = roxmltree::Document::parse(&text).expect("well-formed SVG");
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    assert!(doc.descendants().any(|n| n.attribute("class") == Some(needle)), "no {needle} element");
    assert!(doc.descendants().any(|n| n.attribute("class") == Some("dot")), "no lattice dots");
    assert!(doc.descendants().any(|n| n.attribute("class") == Some("origin")), "no origin marker");
}

const QUAD: &str = r#"{"vertices": [[4, -1], [0, 0], [2, 3], [3, 3]]}"#;
const PENT: &str = r#"{"vertices": [[8, 0], [0, 0], [2, 3], [3, 4], [5, 3]]}"#;
const QUAD_SEQ: &str =
    r#"{"angles": [{"itan": [14, 11]}, {"itan": [3, 1]}, {"itan": [4, 3]}, {"itan": [15, 4]}], "curvatures": [-1, -2, -1, -1]}"#;

#[test]
fn analyze_quadrangle() {
    let r = run(&["analyze"], QUAD);
    assert_eq!(r.code, 0);
    assert_valid("analyze", &r.json);
    assert_eq!(r.json["sequence"]["curvatures"], json!([-1, -2, -1, -1]));
    assert_eq!(r.json["prefix_continuants"], json!([14, -1, -15, 0]));
    assert_eq!(r.json["feasibility"]["feasible"], json!(true));
    assert_eq!(r.json["sequence"]["angles"][0]["itan"], json!([14, 11]));
}

#[test]
fn analyze_pentagon_with_svg() {
    let svg = scratch("pentagon.svg");
    let r = run(&["analyze", "--svg", svg.to_str().unwrap()], PENT);
    assert_eq!(r.code, 0);
    assert_valid("analyze", &r.json);
    assert_eq!(r.json["sequence"]["curvatures"], json!([-2, -4, -2, -3, 0]));
    assert_eq!(r.json["winding_half_turns"], json!(3));
    assert_svg(&svg, "polygon");
}

#[test]
fn anchor_relists_the_polygon() {
    let r = run(&["analyze", "--anchor", "2"], QUAD);
    assert_eq!(r.code, 0);
    assert_eq!(r.json["sequence"]["angles"][0]["itan"], json!([3, 1]));
    let r = run(&["analyze", "--anchor", "9"], QUAD);
    assert_eq!(r.code, 2);
    assert_valid("error", &r.json);
}

#[test]
fn non_convex_polygon_is_a_geometry_error() {
    let r = run(&["analyze"], r#"{"vertices": [[0, 0], [4, 0], [1, 1], [0, 4]]}"#);
    assert_eq!(r.code, 3);
    assert_valid("error", &r.json);
    assert!(r.json["error"]["message"].as_str().unwrap().contains("not locally convex"));
}

#[test]
fn check_exit_codes() {
    let r = run(&["check"], QUAD_SEQ);
    assert_eq!(r.code, 0);
    assert_valid("check", &r.json);

    let bad = QUAD_SEQ.replace("-1, -2, -1, -1", "-1, -2, -1, -2");
    let r = run(&["check"], &bad);
    assert_eq!(r.code, 1);
    assert_valid("check", &r.json);
    assert_eq!(r.json["failed"], json!(["curvature"]));

    let zero = QUAD_SEQ.replace(r#"{"itan": [3, 1]}"#, r#"{"points": [[1, 0], [0, 0], [2, 0]]}"#);
    let r = run(&["check"], &zero);
    assert_eq!(r.code, 3);
    assert_valid("error", &r.json);
}

#[test]
fn complete_example() {
    let r = run(&["complete"], r#"{"angles": [{"lls": [1, 3, 1, 1, 1]}, {"lls": [3]}, {"lls": [1, 2, 1]}], "curvatures": [-1, -2]}"#);
    assert_eq!(r.code, 0);
    assert_valid("complete", &r.json);
    assert_eq!(r.json["x"], json!(-1));
    assert_eq!(r.json["beta"], json!({"itan": [15, 4], "lls": [3, 1, 3]}));
    assert_eq!(r.json["y"], json!(-1));
    assert_eq!(r.json["check"]["feasible"], json!(true));
}

#[test]
fn complete_minimal_and_malformed() {
    let r = run(&["complete"], r#"{"angles": [{"itan": [1, 1]}, {"itan": [2, 1]}], "curvatures": [-1]}"#);
    assert!(r.code == 0 || r.code == 3, "exit {}", r.code);
    if r.code == 0 {
        assert_valid("complete", &r.json);
        assert_eq!(r.json["check"]["feasible"], json!(true));
    }
    let r = run(&["complete"], r#"{"angles": [{"itan": [1, 1]}, {"itan": [2, 1]}], "curvatures": [-1, -1]}"#);
    assert_eq!(r.code, 2);
    assert_valid("error", &r.json);
}

#[test]
fn synthesize_round_trip() {
    let svg = scratch("synth.svg");
    let r = run(&["synthesize", "--svg", svg.to_str().unwrap()], QUAD_SEQ);
    assert_eq!(r.code, 0);
    assert_valid("synthesize", &r.json);
    assert_valid("polygon", &r.json);
    assert_svg(&svg, "polygon");
    let back = run(&["analyze"], &r.stdout);
    assert_eq!(back.code, 0);
    let expected: Value = serde_json::from_str(QUAD_SEQ).unwrap();
    assert_eq!(back.json["sequence"]["curvatures"], expected["curvatures"]);
    let itans: Vec<Value> = back.json["sequence"]["angles"].as_array().unwrap().iter().map(|a| json!({"itan": a["itan"]})).collect();
    assert_eq!(Value::Array(itans), expected["angles"]);
}

#[test]
fn synthesize_infeasible() {
    let r = run(&["synthesize"], &QUAD_SEQ.replace("-1, -2, -1, -1", "-1, -2, -1, -2"));
    assert_eq!(r.code, 1);
    assert_valid("synthesize", &r.json);
}

#[test]
fn sail_of_seven_fifths() {
    let svg = scratch("sail.svg");
    let r = run(&["sail", "--svg", svg.to_str().unwrap()], r#"{"points": [[1, 0], [0, 0], [5, 7]]}"#);
    assert_eq!(r.code, 0);
    assert_valid("sail", &r.json);
    assert_eq!(r.json["vertices"], json!([[1, 0], [1, 1], [5, 7]]));
    assert_eq!(r.json["lls"], json!([1, 2, 2]));
    assert_svg(&svg, "sail");
}

#[test]
fn diagram_of_pentagon() {
    let svg = scratch("diagram.svg");
    let r = run(&["diagram", "--svg", svg.to_str().unwrap()], PENT);
    assert_eq!(r.code, 0);
    assert_valid("diagram", &r.json);
    let points: Vec<Value> = r.json["vertices"].as_array().unwrap().iter().map(|v| v["point"].clone()).collect();
    assert_eq!(Value::Array(points), json!([[1, 0], [1, 1], [2, 3], [-1, -1], [2, -1], [-1, 1], [-1, 0]]));
    let flags: Vec<bool> = r.json["vertices"].as_array().unwrap().iter().map(|v| v["edge_vertex"].as_bool().unwrap()).collect();
    assert_eq!(flags, vec![true, false, true, true, true, true, true]);
    assert_svg(&svg, "diagram");
}

#[test]
fn congruent_triangles() {
    let r = run(&["congruent"], r#"{"first": {"vertices": [[0, 0], [2, 0], [1, 1]]}, "second": {"vertices": [[0, 0], [2, 0], [0, 2]]}}"#);
    assert_eq!(r.code, 1);
    assert_valid("congruent", &r.json);
    assert_eq!(r.json["congruent"], json!(false));
    assert_eq!(r.json["triangle_normal_form_agrees"], json!(true));
    let r = run(&["congruent"], &format!(r#"{{"first": {QUAD}, "second": {{"vertices": [[7, 2], [3, 3], [5, 6], [6, 6]]}}}}"#));
    assert_eq!(r.code, 0);
    assert_eq!(r.json["congruent"], json!(true));
}

#[test]
fn enumerate_unit_box() {
    let r = run(&["enumerate", "--bbox", "1", "--n", "3"], "");
    assert_eq!(r.code, 0);
    assert_valid("enumerate", &r.json);
    assert_eq!(r.json["count"], json!(4));
}

#[test]
fn parse_errors() {
    for verb in ["analyze", "check", "complete", "synthesize", "sail", "diagram", "congruent"] {
        let r = run(&[verb], "{not json");
        assert_eq!(r.code, 2, "{verb}");
        assert_valid("error", &r.json);
    }
}

#[test]
fn input_file_and_big_integers() {
    let path = scratch("big.json");
    let big = "123456789012345678901234567";
    std::fs::write(&path, format!(r#"{{"itan": [{{"bigint": true, "value": "{big}"}}, 1]}}"#)).unwrap();
    let r = run(&["sail", "--input", path.to_str().unwrap()], "");
    assert_eq!(r.code, 0);
    assert_valid("sail", &r.json);
    assert_eq!(r.json["itan"][0], json!({"bigint": true, "value": big}));
}

#[test]
fn output_is_deterministic() {
    for (args, input) in [(vec!["analyze"], QUAD), (vec!["diagram"], PENT), (vec!["synthesize"], QUAD_SEQ)] {
        let a = run(&args, input);
        let b = run(&args, input);
        assert_eq!(a.stdout, b.stdout);
    }
    let compact = run(&["analyze", "--json-indent", "0"], QUAD);
    assert_eq!(compact.stdout.trim_end().lines().count(), 1);
}
