//! Convex polygon model, validation, boundary sampling and generators.

use std::f64::consts::{PI, TAU};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{dist, signed_area, Point, Segment};

const DUP_TOL: f64 = 1e-12;
const TURN_TOL: f64 = 1e-12;

/// A strictly convex polygon stored counter-clockwise.
///
/// The only non-strict instance is the two-vertex segment polygon built by
/// [`ConvexPolygon::segment`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Validates a vertex ring given in either orientation.
    ///
    /// Consecutive duplicates and collinear vertices are dropped. A clockwise
    /// ring is reversed in place, keeping its first vertex first.
    pub fn validate(ring: &[Point]) -> Result<Self> {
        if ring.len() < 3 {
            return Err(Error::TooFewPoints {
                need: 3,
                got: ring.len(),
            });
        }
        if let Some(p) = ring.iter().find(|p| !p.is_finite()) {
            return Err(Error::NonFinite(format!("({}, {})", p.x, p.y)));
        }

        let mut pts: Vec<Point> = Vec::with_capacity(ring.len());
        for &p in ring {
            if pts.last().is_none_or(|&q| dist(p, q) > DUP_TOL) {
                pts.push(p);
            }
        }
        while pts.len() > 1 && dist(pts[0], *pts.last().unwrap()) <= DUP_TOL {
            pts.pop();
        }
        if pts.len() < 3 {
            return Err(Error::Degenerate(format!(
                "{} distinct vertices",
                pts.len()
            )));
        }

        let area = signed_area(&pts)?;
        if area == 0.0 {
            return Err(Error::Degenerate("zero area".into()));
        }
        if area < 0.0 {
            pts[1..].reverse();
        }

        drop_collinear(&mut pts)?;
        if pts.len() < 3 {
            return Err(Error::Degenerate("all vertices collinear".into()));
        }

        // All left turns is not enough: a pentagram turns left everywhere.
        let n = pts.len();
        let mut winding = 0.0;
        for i in 0..n {
            let e0 = pts[i] - pts[(i + n - 1) % n];
            let e1 = pts[(i + 1) % n] - pts[i];
            winding += e0.cross(e1).atan2(e0.dot(e1));
        }
        if (winding - TAU).abs() > 1e-6 {
            return Err(Error::NonConvex { index: 0 });
        }
        Ok(ConvexPolygon { vertices: pts })
    }

    /// The degenerate two-vertex "polygon" covering a single segment.
    pub fn segment(a: Point, b: Point) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFinite(format!("{a:?} {b:?}")));
        }
        if dist(a, b) <= DUP_TOL {
            return Err(Error::Degenerate("segment endpoints coincide".into()));
        }
        Ok(ConvexPolygon {
            vertices: vec![a, b],
        })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Boundary edges in ring order; the segment polygon has a single edge.
    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        let n = self.vertices.len();
        let count = if n == 2 { 1 } else { n };
        (0..count).map(move |i| Segment::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|e| e.length()).sum()
    }

    pub fn area(&self) -> f64 {
        if self.is_segment() {
            0.0
        } else {
            signed_area(&self.vertices).unwrap_or(0.0)
        }
    }

    /// Applies `f` to every vertex and revalidates.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<Self> {
        let pts: Vec<Point> = self.vertices.iter().map(|&p| f(p)).collect();
        if self.is_segment() {
            ConvexPolygon::segment(pts[0], pts[1])
        } else {
            ConvexPolygon::validate(&pts)
        }
    }

    /// Point-in-polygon test with absolute tolerance.
    pub fn contains(&self, p: Point, eps: f64) -> bool {
        self.edges().all(|e| {
            let d = e.q - e.p;
            d.cross(p - e.p) >= -eps * d.norm()
        })
    }
}

fn drop_collinear(pts: &mut Vec<Point>) -> Result<()> {
    loop {
        let n = pts.len();
        if n < 3 {
            return Ok(());
        }
        let mut drop = None;
        for i in 0..n {
            let e0 = pts[i] - pts[(i + n - 1) % n];
            let e1 = pts[(i + 1) % n] - pts[i];
            let rel = e0.cross(e1) / (e0.norm() * e1.norm());
            if rel.abs() <= TURN_TOL {
                if e0.dot(e1) < 0.0 {
                    // Spike: the boundary doubles back on itself.
                    return Err(Error::NonConvex { index: i });
                }
                drop = Some(i);
                break;
            }
            if rel < -TURN_TOL {
                return Err(Error::NonConvex { index: i });
            }
        }
        match drop {
            Some(i) => {
                pts.remove(i);
            }
            None => return Ok(()),
        }
    }
}

/// Points on the polygon boundary in ring order.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySample {
    pub points: Vec<Point>,
    pub includes_vertices: bool,
}

/// All `n` vertices plus `m - n` edge points allotted proportionally to edge
/// length and spaced evenly within each edge.
///
/// Samples are nested under doubling: whenever `m / 2 >= 2n`, the sample for
/// `m` is the sample for `m / 2` plus the midpoint of every gap.
pub fn sample_boundary(p: &ConvexPolygon, m: usize) -> Result<BoundarySample> {
    let n = p.len();
    if m < n {
        return Err(Error::InvalidArgument(format!(
            "sample count {m} below vertex count {n}"
        )));
    }
    let edges: Vec<Segment> = p.edges().collect();
    let lens: Vec<f64> = edges.iter().map(|e| e.length()).collect();
    // The segment polygon walks its edge out and back.
    let walk: Vec<(Segment, f64)> = if p.is_segment() {
        vec![
            (edges[0], lens[0]),
            (Segment::new(edges[0].q, edges[0].p), lens[0]),
        ]
    } else {
        edges.iter().copied().zip(lens.iter().copied()).collect()
    };
    let total: f64 = walk.iter().map(|w| w.1).sum();
    let weights: Vec<f64> = walk.iter().map(|w| w.1 / total).collect();
    let counts = edge_counts(&weights, n, m);

    let mut points = Vec::with_capacity(m);
    for ((seg, _), &k) in walk.iter().zip(&counts) {
        points.push(seg.p);
        for j in 1..=k {
            points.push(seg.at(j as f64 / (k + 1) as f64));
        }
    }
    Ok(BoundarySample {
        points,
        includes_vertices: true,
    })
}

/// Interior point count per edge. Largest-remainder rounding of the
/// proportional share, or the refinement `2c + 1` of the half-size allocation
/// when that one is itself at least twice the vertex count.
fn edge_counts(weights: &[f64], n: usize, m: usize) -> Vec<usize> {
    if m.is_multiple_of(2) && m / 2 >= 2 * n {
        return edge_counts(weights, n, m / 2)
            .into_iter()
            .map(|c| 2 * c + 1)
            .collect();
    }
    let extra = m - n;
    let ideal: Vec<f64> = weights.iter().map(|w| extra as f64 * w).collect();
    let mut counts: Vec<usize> = ideal.iter().map(|x| x.floor() as usize).collect();
    let mut left = extra - counts.iter().sum::<usize>();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| {
        let fa = ideal[a] - ideal[a].floor();
        let fb = ideal[b] - ideal[b].floor();
        fb.total_cmp(&fa).then(a.cmp(&b))
    });
    for &i in order.iter().cycle() {
        if left == 0 {
            break;
        }
        counts[i] += 1;
        left -= 1;
    }
    counts
}

/// Regular `n`-gon centred at the origin with a horizontal bottom edge:
/// vertex `k` sits at angle `(2k + 1)π / n`.
pub fn gen_regular(n: usize, circumradius: f64) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "regular polygon needs n >= 3, got {n}"
        )));
    }
    if !(circumradius > 0.0 && circumradius.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "circumradius must be positive, got {circumradius}"
        )));
    }
    let pts: Vec<Point> = (0..n)
        .map(|k| {
            let a = (2 * k + 1) as f64 * PI / n as f64;
            Point::new(circumradius * a.cos(), circumradius * a.sin())
        })
        .collect();
    ConvexPolygon::validate(&pts)
}

/// Random convex polygon with exactly `n` vertices inside `[0, 1]²`.
///
/// Valtr's construction: random x- and y-increment sequences are paired,
/// sorted by angle and chained. Deterministic per seed.
pub fn gen_random_convex(n: usize, seed: u64) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "random polygon needs n >= 3, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let (xs, x_lo) = increments(n, &mut rng);
        let (mut ys, y_lo) = increments(n, &mut rng);
        ys.shuffle(&mut rng);
        let mut vecs: Vec<Point> = xs
            .into_iter()
            .zip(ys)
            .map(|(x, y)| Point::new(x, y))
            .collect();
        vecs.sort_by(|a, b| a.y.atan2(a.x).total_cmp(&b.y.atan2(b.x)));

        let mut pts = Vec::with_capacity(n);
        let mut cur = Point::new(0.0, 0.0);
        for v in &vecs {
            pts.push(cur);
            cur = cur + *v;
        }
        let min_x = pts.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
        let min_y = pts.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
        let shift = Point::new(x_lo - min_x, y_lo - min_y);
        let pts: Vec<Point> = pts.into_iter().map(|p| p + shift).collect();

        match ConvexPolygon::validate(&pts) {
            Ok(poly) if poly.len() == n => return Ok(poly),
            // Rare: a collinear triple was merged away. Draw again.
            _ => continue,
        }
    }
}

/// Signed increments of a random chain split into two monotone halves.
/// Returns them with the smallest sampled coordinate.
fn increments(n: usize, rng: &mut ChaCha8Rng) -> (Vec<f64>, f64) {
    let mut v: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    v.sort_by(f64::total_cmp);
    let (lo, hi) = (v[0], v[n - 1]);
    let mut out = Vec::with_capacity(n);
    let (mut last_a, mut last_b) = (lo, lo);
    for &x in &v[1..n - 1] {
        if rng.gen::<bool>() {
            out.push(x - last_a);
            last_a = x;
        } else {
            out.push(last_b - x);
            last_b = x;
        }
    }
    out.push(hi - last_a);
    out.push(last_b - hi);
    (out, lo)
}

/// Four-vertex member of the square-covered diamond family: the diameter
/// `ac` is horizontal of length 1 and the covering rectangle is the unit
/// square. `b` sits on the top side at `x = ½ + t(√3/2 − ½)`, `d` directly
/// below it on the bottom side. `t = 1` gives the extreme where `|ab| = 1`
/// (an equilateral triangle `abd`); `t = 0` gives the square diamond.
///
/// Emitted counter-clockwise starting at `c`, so the lexicographic diameter
/// tie-break selects `ac`.
pub fn gen_square_diamond(t: f64) -> Result<ConvexPolygon> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidArgument(format!(
            "diamond parameter must lie in [0, 1], got {t}"
        )));
    }
    let xb = 0.5 + t * (3f64.sqrt() / 2.0 - 0.5);
    ConvexPolygon::validate(&[
        Point::new(1.0, 0.5),
        Point::new(xb, 1.0),
        Point::new(0.0, 0.5),
        Point::new(xb, 0.0),
    ])
}
