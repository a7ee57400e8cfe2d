//! Verification that two disks cover a convex polygon.
//!
//! Each edge is tested exactly by intersecting it with both disks. When
//! the boundary is covered the interior is too: from an interior point
//! outside a disk, the directions that reach that disk span less than a
//! half-turn, so two disks cannot account for every direction to the
//! boundary.

use crate::geom::{disk_contains, segment_disk_interval, Disk, Interval, Point, Segment};
use crate::polygon::ConvexPolygon;
use crate::stream::CoverSolution;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeCoverage {
    pub covered: bool,
    /// Midpoint parameter of the widest uncovered gap.
    pub witness: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolygonCoverage {
    pub covered: bool,
    /// First uncovered boundary point (or interior grid point) found.
    pub witness: Option<Point>,
}

/// Whether `d1 ∪ d2`, each grown by `eps`, contains all of `s`.
pub fn edge_coverage(s: &Segment, d1: &Disk, d2: &Disk, eps: f64) -> EdgeCoverage {
    let (g1, g2) = (d1.inflate(eps), d2.inflate(eps));
    let mut parts: Vec<Interval> = [segment_disk_interval(s, &g1), segment_disk_interval(s, &g2)]
        .into_iter()
        .flatten()
        .collect();
    parts.sort_by(|a, b| a.lo.total_cmp(&b.lo));

    let mut gaps: Vec<(f64, f64)> = Vec::new();
    let mut reach = 0.0;
    for iv in &parts {
        if iv.lo > reach {
            gaps.push((reach, iv.lo));
        }
        reach = f64::max(reach, iv.hi);
    }
    if reach < 1.0 {
        gaps.push((reach, 1.0));
    }
    // Gap endpoints sit on a disk boundary; a sliver whose midpoint still
    // lands inside a grown disk is rounding noise.
    let real = gaps.into_iter().filter(|&(lo, hi)| {
        let q = s.at(0.5 * (lo + hi));
        !disk_contains(d1, q, eps) && !disk_contains(d2, q, eps)
    });
    match real.max_by(|a, b| (a.1 - a.0).total_cmp(&(b.1 - b.0))) {
        None => EdgeCoverage {
            covered: true,
            witness: None,
        },
        Some((lo, hi)) => EdgeCoverage {
            covered: false,
            witness: Some(0.5 * (lo + hi)),
        },
    }
}

pub fn polygon_covered(p: &ConvexPolygon, sol: &CoverSolution, eps: f64) -> PolygonCoverage {
    let [d1, d2] = &sol.disks;
    for e in p.edges() {
        let c = edge_coverage(&e, d1, d2, eps);
        if let Some(t) = c.witness {
            return PolygonCoverage {
                covered: false,
                witness: Some(e.at(t)),
            };
        }
    }
    PolygonCoverage {
        covered: true,
        witness: None,
    }
}

/// [`polygon_covered`] followed by a `grid × grid` scan of interior points.
pub fn polygon_covered_with_grid(
    p: &ConvexPolygon,
    sol: &CoverSolution,
    eps: f64,
    grid: usize,
) -> PolygonCoverage {
    let boundary = polygon_covered(p, sol, eps);
    if !boundary.covered {
        return boundary;
    }
    match uncovered_grid_point(p, &sol.disks, eps, grid) {
        Some(w) => PolygonCoverage {
            covered: false,
            witness: Some(w),
        },
        None => boundary,
    }
}

/// First point of a regular grid over the bounding box that lies inside `p`
/// but outside both disks.
pub fn uncovered_grid_point(
    p: &ConvexPolygon,
    disks: &[Disk; 2],
    eps: f64,
    grid: usize,
) -> Option<Point> {
    let v = p.vertices();
    let (mut x0, mut x1, mut y0, mut y1) = (
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    );
    for q in v {
        x0 = x0.min(q.x);
        x1 = x1.max(q.x);
        y0 = y0.min(q.y);
        y1 = y1.max(q.y);
    }
    for a in 0..grid {
        for b in 0..grid {
            let q = Point::new(
                x0 + (x1 - x0) * (a as f64 + 0.5) / grid as f64,
                y0 + (y1 - y0) * (b as f64 + 0.5) / grid as f64,
            );
            if p.contains(q, 0.0) && !disks.iter().any(|d| disk_contains(d, q, eps)) {
                return Some(q);
            }
        }
    }
    None
}
