//! SVG rendering of a polygon with its cover.

use std::fmt::Write as _;

use crate::geom::Point;
use crate::polygon::ConvexPolygon;
use crate::stream::CoverSolution;

/// Polygon, covering rectangle and both disks in one SVG document.
pub fn render_svg(p: &ConvexPolygon, sol: &CoverSolution) -> String {
    let mut pts: Vec<Point> = p.vertices().to_vec();
    pts.extend(sol.rect.corners());
    for d in &sol.disks {
        pts.push(Point::new(d.center.x - d.radius, d.center.y - d.radius));
        pts.push(Point::new(d.center.x + d.radius, d.center.y + d.radius));
    }
    let x0 = pts.iter().map(|q| q.x).fold(f64::INFINITY, f64::min);
    let x1 = pts.iter().map(|q| q.x).fold(f64::NEG_INFINITY, f64::max);
    let y0 = pts.iter().map(|q| q.y).fold(f64::INFINITY, f64::min);
    let y1 = pts.iter().map(|q| q.y).fold(f64::NEG_INFINITY, f64::max);
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let pad = 0.05 * span;
    let stroke = 0.004 * span;

    let ring = |vs: &[Point]| {
        vs.iter()
            .map(|q| format!("{},{}", q.x, q.y))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="800" height="800">"#,
        x0 - pad,
        -(y1 + pad),
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad
    )
    .unwrap();
    // y grows upward in the input, downward in SVG
    writeln!(
        s,
        r#"<g transform="scale(1,-1)" fill="none" stroke-width="{stroke}">"#
    )
    .unwrap();
    writeln!(
        s,
        r##"<polygon points="{}" stroke="#444" stroke-dasharray="{} {}"/>"##,
        ring(&sol.rect.corners()),
        2.0 * stroke,
        stroke
    )
    .unwrap();
    for (d, colour) in sol.disks.iter().zip(["#1f77b4", "#d62728"]) {
        writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="{}" stroke="{colour}" fill="{colour}" fill-opacity="0.12"/>"#,
            d.center.x, d.center.y, d.radius
        )
        .unwrap();
    }
    writeln!(
        s,
        r##"<polygon points="{}" stroke="#000" fill="#2ca02c" fill-opacity="0.25"/>"##,
        ring(p.vertices())
    )
    .unwrap();
    s.push_str("</g>\n</svg>\n");
    s
}
