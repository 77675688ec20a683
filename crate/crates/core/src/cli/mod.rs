//! The `lattice-trig` command-line tool: JSON in, JSON (and optional SVG)
//! out.
//!
//! Exit codes: 0 success or feasible, 1 a checked negative (infeasible,
//! not congruent), 2 unreadable or malformed input, 3 geometrically invalid
//! input.

pub mod json;
pub mod svg;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::curvature::{prefix_continuants, sail_diagram, sequence_of_polygon, sign_changes, BrokenLine};
use crate::error::Error;
use crate::lattice::Orientation;
use crate::oracle::{canonical_congruence, enumerate_convex_polygons, triangles_congruent};
use crate::sails::sail_vertices;
use crate::synthesis::synthesize_polygon;
use crate::theorems::{check_feasibility, complete_sequence, Triangle};

use json::*;

#[derive(Debug, Parser)]
#[command(name = "lattice-trig", version, about = "Lattice trigonometry of convex integer polygons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input JSON document, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    pub input: String,
    /// Also write an SVG rendering to this file.
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
    /// Put the first angle at this (0-based) listed polygon vertex, or start
    /// cyclic sequences at this angle.
    #[arg(long, global = true)]
    pub anchor: Option<usize>,
    /// Spaces of JSON indentation; 0 prints one line.
    #[arg(long, global = true, default_value_t = 2)]
    pub json_indent: usize,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Angle-curvature sequence, diagram data and feasibility of a polygon.
    Analyze,
    /// Check whether a cyclic angle-curvature sequence comes from a convex polygon.
    Check,
    /// Complete an open sequence (α1, κ1, ..., αn) with (x, β, y).
    Complete,
    /// Build a convex polygon with the given cyclic sequence.
    Synthesize,
    /// Sail and LLS sequence of one angle.
    Sail,
    /// Sail diagram of a polygon.
    Diagram,
    /// Integer congruence of two convex polygons.
    Congruent,
    /// List convex lattice polygons in a box, up to translation.
    Enumerate {
        /// Vertices lie in [0, bbox]².
        #[arg(long)]
        bbox: i64,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Print at most this many polygons (the count is always complete).
        #[arg(long)]
        limit: Option<usize>,
    },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub json: Value,
    pub code: i32,
    pub svg: Option<String>,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, code: 0, svg: None }
    }

    fn with_svg(mut self, svg: String) -> Self {
        self.svg = Some(svg);
        self
    }

    fn failure(kind: &str, code: i32, message: String) -> Self {
        Outcome { json: json!({"error": {"kind": kind, "message": message}}), code, svg: None }
    }

    fn parse(message: impl ToString) -> Self {
        Self::failure("parse", 2, message.to_string())
    }

    fn usage(message: impl ToString) -> Self {
        Self::failure("usage", 2, message.to_string())
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        match e {
            Error::MalformedSequence(_) | Error::IndexOutOfRange { .. } => Outcome::failure("parse", 2, e.to_string()),
            _ => Outcome::failure("geometry", 3, e.to_string()),
        }
    }
}

type Step<T> = std::result::Result<T, Outcome>;

fn parse<T: DeserializeOwned>(text: &str) -> Step<T> {
    serde_json::from_str(text).map_err(Outcome::parse)
}

fn anchored_polygon(cli: &Cli, line: BrokenLine) -> Step<BrokenLine> {
    match cli.anchor {
        None => Ok(line),
        Some(k) if k < line.len() => Ok(line.rotated((k + line.len() - 1) % line.len())),
        Some(k) => Err(Outcome::usage(format!("anchor {k} is out of range for {} vertices", line.len()))),
    }
}

fn analyze(cli: &Cli, text: &str) -> Step<Outcome> {
    let doc: PolygonDocument = parse(text)?;
    let poly = anchored_polygon(cli, doc.polygon())?;
    let orientation = poly.convexity()?;
    let s = sequence_of_polygon(&poly)?;
    let diagram = sail_diagram(&poly)?;
    let prefix = prefix_continuants(&s);
    let report = check_feasibility(&s)?;
    let out = json!({
        "vertices": points_json(&poly.vertices),
        "orientation": if orientation == Orientation::Positive { "positive" } else { "negative" },
        "edge_lengths": ints_json(&poly.edge_lengths()?),
        "sequence": sequence_json(&s),
        "prefix_continuants": ints_json(&prefix),
        "sign_changes": sign_changes(&prefix),
        "winding_half_turns": diagram.winding_half_turns()?,
        "feasibility": report_json(&report),
    });
    let mut outcome = Outcome::ok(out);
    if cli.svg.is_some() {
        let sails = poly.angles()?.iter().map(sail_vertices).collect::<Result<Vec<_>, _>>()?;
        outcome = outcome.with_svg(svg::polygon_svg(&poly, &sails));
    }
    Ok(outcome)
}

fn check(cli: &Cli, text: &str) -> Step<Outcome> {
    let doc: SequenceDocument = parse(text)?;
    let mut s = doc.sequence(true)?;
    if let Some(k) = cli.anchor {
        if k >= s.len() {
            return Err(Outcome::usage(format!("anchor {k} is out of range for {} angles", s.len())));
        }
        s = s.rotated(k)?;
    }
    let report = check_feasibility(&s)?;
    let code = if report.feasible { 0 } else { 1 };
    Ok(Outcome { json: report_json(&report), code, svg: None })
}

fn complete(text: &str) -> Step<Outcome> {
    let doc: SequenceDocument = parse(text)?;
    if doc.cyclic == Some(true) {
        return Err(Outcome::parse("completion takes an open sequence"));
    }
    let open = doc.sequence(false)?;
    let c = complete_sequence(&open)?;
    let assembled = c.assemble(&open)?;
    let mut out = completion_json(&c);
    if assembled.len() >= 3 {
        out["check"] = report_json(&check_feasibility(&assembled)?);
    }
    Ok(Outcome::ok(out))
}

fn synthesize(cli: &Cli, text: &str) -> Step<Outcome> {
    let doc: SequenceDocument = parse(text)?;
    let mut s = doc.sequence(true)?;
    if let Some(k) = cli.anchor {
        if k >= s.len() {
            return Err(Outcome::usage(format!("anchor {k} is out of range for {} angles", s.len())));
        }
        s = s.rotated(k)?;
    }
    let report = check_feasibility(&s)?;
    if !report.feasible {
        return Ok(Outcome { json: json!({"feasibility": report_json(&report)}), code: 1, svg: None });
    }
    let poly = synthesize_polygon(&s)?;
    let mut outcome = Outcome::ok(PolygonDocument::of(&poly));
    if cli.svg.is_some() {
        outcome = outcome.with_svg(svg::polygon_svg(&poly, &[]));
    }
    Ok(outcome)
}

fn sail(cli: &Cli, text: &str) -> Step<Outcome> {
    let spec: AngleSpec = parse(text)?;
    let angle = spec.rational_angle()?;
    let normal = spec.normalized()?;
    let sail = sail_vertices(&angle)?;
    let mut outcome = Outcome::ok(sail_json(&normal, &sail));
    if cli.svg.is_some() {
        outcome = outcome.with_svg(svg::sail_svg(&angle.vertex, &sail));
    }
    Ok(outcome)
}

fn diagram(cli: &Cli, text: &str) -> Step<Outcome> {
    let doc: PolygonDocument = parse(text)?;
    let poly = anchored_polygon(cli, doc.polygon())?;
    let d = sail_diagram(&poly)?;
    let mut outcome = Outcome::ok(diagram_json(&d)?);
    if cli.svg.is_some() {
        outcome = outcome.with_svg(svg::diagram_svg(&d));
    }
    Ok(outcome)
}

fn congruent(text: &str) -> Step<Outcome> {
    let doc: PairDocument = parse(text)?;
    let (p, q) = (doc.first.polygon(), doc.second.polygon());
    let verdict = canonical_congruence(&p, &q)?;
    let mut out = json!({"congruent": verdict});
    if p.len() == 3 && q.len() == 3 {
        let t = Triangle::new(p.vertices[0].clone(), p.vertices[1].clone(), p.vertices[2].clone())?;
        let labellings = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];
        let mut matched = false;
        for l in labellings {
            let u = Triangle::new(q.vertices[l[0]].clone(), q.vertices[l[1]].clone(), q.vertices[l[2]].clone())?;
            matched |= triangles_congruent(&t, &u);
        }
        out["triangle_normal_form_agrees"] = json!(matched == verdict);
    }
    Ok(Outcome { json: out, code: if verdict { 0 } else { 1 }, svg: None })
}

fn enumerate(bbox: i64, n: usize, limit: Option<usize>) -> Step<Outcome> {
    if n < 3 || bbox < 1 {
        return Err(Outcome::usage("need --n >= 3 and --bbox >= 1"));
    }
    let all = enumerate_convex_polygons(bbox, n);
    let shown: Vec<Value> = all.iter().take(limit.unwrap_or(usize::MAX)).map(|p| points_json(&p.vertices)).collect();
    Ok(Outcome::ok(json!({"bbox": bbox, "n": n, "count": all.len(), "polygons": shown})))
}

/// Runs one command on the given input text.
pub fn execute(cli: &Cli, text: &str) -> Outcome {
    let step = match &cli.command {
        Command::Analyze => analyze(cli, text),
        Command::Check => check(cli, text),
        Command::Complete => complete(text),
        Command::Synthesize => synthesize(cli, text),
        Command::Sail => sail(cli, text),
        Command::Diagram => diagram(cli, text),
        Command::Congruent => congruent(text),
        Command::Enumerate { bbox, n, limit } => enumerate(*bbox, *n, *limit),
    };
    step.unwrap_or_else(|e| e)
}

fn read_input(cli: &Cli) -> std::io::Result<String> {
    if matches!(cli.command, Command::Enumerate { .. }) {
        return Ok(String::new());
    }
    if cli.input == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(&cli.input)
    }
}

pub fn render(value: &Value, indent: usize) -> String {
    if indent == 0 {
        return value.to_string();
    }
    let pad = vec![b' '; indent];
    let formatter = serde_json::ser::PrettyFormatter::with_indent(&pad);
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, formatter);
    serde::Serialize::serialize(value, &mut ser).expect("JSON values serialize");
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

/// Parses the process arguments, runs the command, prints the result and
/// returns the exit code.
pub fn main_with_args() -> i32 {
    let cli = Cli::parse();
    let outcome = match read_input(&cli) {
        Ok(text) => execute(&cli, &text),
        Err(e) => Outcome::parse(format!("cannot read {}: {e}", cli.input)),
    };
    println!("{}", render(&outcome.json, cli.json_indent));
    if let Some(message) = outcome.json.pointer("/error/message").and_then(Value::as_str) {
        eprintln!("error: {message}");
    }
    if let (Some(path), Some(svg)) = (&cli.svg, &outcome.svg) {
        if let Err(e) = std::fs::write(path, svg) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    outcome.code
}
