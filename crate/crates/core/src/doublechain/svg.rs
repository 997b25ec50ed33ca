//! SVG drawings on a fixed 640×480 viewport.

use std::fmt::Write;

use num_traits::ToPrimitive;

use super::graph::{ChainGraph, EdgeKind};
use super::realization::{realize, ChainRealization};
use crate::geometry::{Label, PathPartition};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 40.0;

struct Canvas {
    body: String,
}

impl Canvas {
    fn new() -> Self {
        Canvas { body: String::new() }
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), color: &str) {
        let _ = writeln!(
            self.body,
            r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="2"/>"#,
            a.0, a.1, b.0, b.1
        );
    }

    fn point(&mut self, p: (f64, f64), label: Label) {
        let _ = writeln!(
            self.body,
            r#"  <circle cx="{:.2}" cy="{:.2}" r="4" fill="black"/>"#,
            p.0, p.1
        );
        let _ = writeln!(
            self.body,
            r#"  <text x="{:.2}" y="{:.2}" font-size="11" font-family="sans-serif">{label}</text>"#,
            p.0 + 6.0,
            p.1 - 6.0
        );
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.body
        )
    }
}

/// Maps points into the viewport, preserving aspect ratio and flipping y.
fn fit(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let sx = (WIDTH - 2.0 * MARGIN) / (x1 - x0).max(1e-9);
    let sy = (HEIGHT - 2.0 * MARGIN) / (y1 - y0).max(1e-9);
    points
        .iter()
        .map(|&(x, y)| (MARGIN + (x - x0) * sx, HEIGHT - MARGIN - (y - y0) * sy))
        .collect()
}

fn screen(real: &ChainRealization) -> Vec<(f64, f64)> {
    let config = real.config();
    let mut raw = vec![(0.0, 0.0)];
    for l in config.labels() {
        let (x, y) = real.point(l).expect("complete realization");
        raw.push((x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0)));
    }
    let mut fitted = fit(&raw[1..]);
    fitted.insert(0, (0.0, 0.0));
    fitted
}

pub fn render_realization(real: &ChainRealization) -> String {
    let pts = screen(real);
    let mut canvas = Canvas::new();
    for l in real.config().labels() {
        canvas.point(pts[l], l);
    }
    canvas.finish()
}

/// Draws the graph on the standard realization. Chain edges are dark,
/// alternating edges red.
pub fn render_graph(graph: &ChainGraph) -> String {
    let pts = screen(&realize(graph.config()));
    let mut canvas = Canvas::new();
    for &e in graph.edges() {
        let color = match graph.kind(e) {
            EdgeKind::Alternating => "#c0392b",
            _ => "#2c3e50",
        };
        canvas.line(pts[e.0], pts[e.1], color);
    }
    for l in graph.config().labels() {
        canvas.point(pts[l], l);
    }
    canvas.finish()
}

/// Draws a partition with its points clockwise on a circle, 1 at the top.
pub fn render_partition(p: &PathPartition) -> String {
    let n = p.n();
    let (cx, cy, r) = (WIDTH / 2.0, HEIGHT / 2.0, HEIGHT / 2.0 - MARGIN);
    let pos = |v: Label| {
        let t = 2.0 * std::f64::consts::PI * (v - 1) as f64 / n as f64;
        (cx + r * t.sin(), cy - r * t.cos())
    };
    let mut canvas = Canvas::new();
    for (a, b) in p.edges() {
        canvas.line(pos(a), pos(b), "#2c3e50");
    }
    for v in 1..=n {
        canvas.point(pos(v), v);
    }
    canvas.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublechain::DoubleChainConfig;

    #[test]
    fn renders_are_well_formed_and_deterministic() {
        let cfg = DoubleChainConfig::new(2, 3).unwrap();
        let g = ChainGraph::new(cfg, [(1, 2), (1, 3), (2, 5), (3, 4), (4, 5)]).unwrap();
        let svg = render_graph(&g);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<line").count(), 5);
        assert_eq!(svg.matches("<circle").count(), 5);
        assert_eq!(svg, render_graph(&g));
        assert_eq!(render_realization(&realize(cfg)).matches("<circle").count(), 5);
        let p = PathPartition::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(render_partition(&p).matches("<line").count(), 1);
    }
}
