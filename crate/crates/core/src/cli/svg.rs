//! Static SVG rendering of polygons, sails and sail diagrams.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::curvature::{BrokenLine, SailDiagram};
use crate::lattice::LatticePoint;
use crate::sails::Sail;

const UNIT: f64 = 24.0;
const MARGIN: f64 = 1.0;
const MAX_DOTS: i64 = 40_000;

struct Path {
    points: Vec<(f64, f64)>,
    closed: bool,
    class: &'static str,
}

/// Shapes collected in lattice coordinates, rendered with y pointing up.
#[derive(Default)]
pub struct Scene {
    paths: Vec<Path>,
    marks: Vec<((f64, f64), &'static str)>,
}

fn coords(p: &LatticePoint) -> (f64, f64) {
    (p.x.to_f64().unwrap_or(f64::NAN), p.y.to_f64().unwrap_or(f64::NAN))
}

impl Scene {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn polyline(&mut self, points: &[LatticePoint], closed: bool, class: &'static str) -> &mut Self {
        self.paths.push(Path { points: points.iter().map(coords).collect(), closed, class });
        self
    }

    pub fn mark(&mut self, p: &LatticePoint, class: &'static str) -> &mut Self {
        self.marks.push((coords(p), class));
        self
    }

    pub fn render(&self) -> String {
        let all = self.paths.iter().flat_map(|p| p.points.iter()).chain(self.marks.iter().map(|m| &m.0));
        let (mut x0, mut y0, mut x1, mut y1) = (0f64, 0f64, 0f64, 0f64);
        for &(x, y) in all {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        let (x0, y0, x1, y1) = (x0.floor() - MARGIN, y0.floor() - MARGIN, x1.ceil() + MARGIN, y1.ceil() + MARGIN);
        let tx = |x: f64| (x - x0) * UNIT;
        let ty = |y: f64| (y1 - y) * UNIT;
        let (w, h) = ((x1 - x0) * UNIT, (y1 - y0) * UNIT);

        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        );
        let _ = writeln!(
            out,
            "<style>.dot{{fill:#bbb}} .polygon{{fill:#e8f0fe;stroke:#1a56db;stroke-width:2}} .sail{{fill:none;stroke:#c2410c;stroke-width:2}} .diagram{{fill:none;stroke:#15803d;stroke-width:2}} .ray{{fill:none;stroke:#555;stroke-width:1;stroke-dasharray:4 3}} .vertex{{fill:#1a56db}} .edge-vertex{{fill:#15803d}} .origin{{fill:none;stroke:#000;stroke-width:1.5}}</style>"
        );
        let cols = (x1 - x0) as i64 + 1;
        let rows = (y1 - y0) as i64 + 1;
        if cols.saturating_mul(rows) <= MAX_DOTS {
            let _ = writeln!(out, r#"<g class="lattice">"#);
            for i in 0..cols {
                for j in 0..rows {
                    let (x, y) = (x0 + i as f64, y0 + j as f64);
                    let _ = writeln!(out, r#"<circle class="dot" cx="{}" cy="{}" r="1.5"/>"#, tx(x), ty(y));
                }
            }
            let _ = writeln!(out, "</g>");
        }
        for p in &self.paths {
            let pts: Vec<String> = p.points.iter().map(|&(x, y)| format!("{},{}", tx(x), ty(y))).collect();
            let tag = if p.closed { "polygon" } else { "polyline" };
            let _ = writeln!(out, r#"<{tag} class="{}" points="{}"/>"#, p.class, pts.join(" "));
        }
        for &((x, y), class) in &self.marks {
            let _ = writeln!(out, r#"<circle class="{class}" cx="{}" cy="{}" r="3.5"/>"#, tx(x), ty(y));
        }
        let _ = writeln!(out, r#"<circle class="origin" cx="{}" cy="{}" r="6"/>"#, tx(0.0), ty(0.0));
        out.push_str("</svg>\n");
        out
    }
}

pub fn polygon_svg(poly: &BrokenLine, sails: &[Sail]) -> String {
    let mut scene = Scene::new();
    scene.polyline(&poly.vertices, poly.closed, "polygon");
    for sail in sails {
        scene.polyline(&sail.vertices, false, "sail");
    }
    for v in &poly.vertices {
        scene.mark(v, "vertex");
    }
    scene.render()
}

pub fn sail_svg(vertex: &LatticePoint, sail: &Sail) -> String {
    let mut scene = Scene::new();
    let first = &sail.vertices[0];
    let last = &sail.vertices[sail.vertices.len() - 1];
    scene.polyline(&[first.clone(), vertex.clone(), last.clone()], false, "ray");
    scene.polyline(&sail.vertices, false, "sail");
    scene.mark(vertex, "vertex");
    scene.render()
}

pub fn diagram_svg(d: &SailDiagram) -> String {
    let mut scene = Scene::new();
    scene.polyline(d.vertices(), false, "diagram");
    for v in d.edge_vertices() {
        scene.mark(&v, "edge-vertex");
    }
    scene.render()
}
