//! SVG 1.1 figures of a drawing and its obstacle faces.
//!
//! Coordinates are rounded to three decimals; the JSON report stays exact.

use std::fmt::Write;

use obstacle_core::arrangement::Arrangement;
use obstacle_core::geometry::Point;
use obstacle_core::Rational;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 20.0;

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl Frame {
    fn new(points: &[Point<Rational>]) -> Frame {
        let xy: Vec<(f64, f64)> = points.iter().map(Point::to_f64).collect();
        let fold = |f: fn(f64, f64) -> f64, init: f64, pick: fn(&(f64, f64)) -> f64| {
            xy.iter().map(pick).fold(init, f)
        };
        let min_x = fold(f64::min, f64::INFINITY, |p| p.0);
        let max_x = fold(f64::max, f64::NEG_INFINITY, |p| p.0);
        let min_y = fold(f64::min, f64::INFINITY, |p| p.1);
        let max_y = fold(f64::max, f64::NEG_INFINITY, |p| p.1);
        let span = (max_x - min_x).max(max_y - min_y);
        let scale = if span > 0.0 && span.is_finite() {
            SIZE / span
        } else {
            1.0
        };
        Frame {
            min_x: if min_x.is_finite() { min_x } else { 0.0 },
            max_y: if max_y.is_finite() { max_y } else { 0.0 },
            scale,
        }
    }

    fn map(&self, p: &Point<Rational>) -> (f64, f64) {
        let (x, y) = p.to_f64();
        (
            MARGIN + (x - self.min_x) * self.scale,
            MARGIN + (self.max_y - y) * self.scale,
        )
    }
}

fn num(v: f64) -> String {
    let r = (v * 1000.0).round() / 1000.0;
    if r == 0.0 {
        "0".into()
    } else {
        format!("{r}")
    }
}

fn ring(frame: &Frame, pts: &[Point<Rational>]) -> String {
    let mut d = String::new();
    for (i, p) in pts.iter().enumerate() {
        let (x, y) = frame.map(p);
        let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, num(x), num(y));
    }
    d.push('Z');
    d
}

/// The drawing of the arrangement's graph with the given faces shaded.
pub fn render(arr: &Arrangement<Rational>, shaded: &[usize]) -> String {
    let frame = Frame::new(arr.points());
    let full = SIZE + 2.0 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="0 0 {w} {w}">"#,
        w = num(full)
    );
    for &f in shaded {
        let face = arr.face(f);
        let mut d = String::new();
        if !face.bounded {
            let _ = write!(d, "M0 0 L{w} 0 L{w} {w} L0 {w} Z ", w = num(full));
        }
        for walk in &face.boundary {
            d.push_str(&ring(&frame, &arr.walk_points(walk)));
            d.push(' ');
        }
        let _ = writeln!(
            out,
            r##"  <path class="obstacle" data-face="{f}" d="{}" fill="#c8c8c8" fill-rule="evenodd" stroke="none"/>"##,
            d.trim_end()
        );
    }
    for (u, w) in arr.graph().edges() {
        let (x1, y1) = frame.map(&arr.points()[u]);
        let (x2, y2) = frame.map(&arr.points()[w]);
        let _ = writeln!(
            out,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1.5"/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        );
    }
    for (i, p) in arr.points().iter().enumerate() {
        let (x, y) = frame.map(p);
        let _ = writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="4" fill="black"/>"#,
            num(x),
            num(y)
        );
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="12" font-family="sans-serif">{}</text>"#,
            num(x + 6.0),
            num(y - 6.0),
            i + 1
        );
    }
    out.push_str("</svg>\n");
    out
}
