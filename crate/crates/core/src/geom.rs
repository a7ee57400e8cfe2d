//! Floating-point geometric primitives shared by the cover algorithms.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default absolute tolerance for unit-scale data.
pub const EPS_GEOM: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Checked constructor: rejects NaN and infinities.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Point { x, y })
        } else {
            Err(Error::NonFinite(format!("({x}, {y})")))
        }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 2-D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(
            self.x + t * (other.x - self.x),
            self.y + t * (other.y - self.y),
        )
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

/// Orientation of the triple `(a, b, c)`: positive for a left turn.
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub const fn new(p: Point, q: Point) -> Self {
        Segment { p, q }
    }

    pub fn length(&self) -> f64 {
        dist(self.p, self.q)
    }

    pub fn at(&self, t: f64) -> Point {
        self.p.lerp(self.q, t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub const fn new(center: Point, radius: f64) -> Self {
        Disk { center, radius }
    }

    pub fn contains(&self, p: Point, eps: f64) -> bool {
        disk_contains(self, p, eps)
    }

    pub fn inflate(&self, delta: f64) -> Disk {
        Disk::new(self.center, self.radius + delta)
    }
}

/// A rectangle whose long axis makes `frame_angle` radians with the x-axis.
///
/// `length` runs along the long axis, `width` across it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub frame_angle: f64,
    pub center: Point,
    pub length: f64,
    pub width: f64,
}

impl Rect {
    /// Unit vector along the long axis.
    pub fn axis(&self) -> Point {
        Point::new(self.frame_angle.cos(), self.frame_angle.sin())
    }

    /// Unit vector along the short axis.
    pub fn normal(&self) -> Point {
        let a = self.axis();
        Point::new(-a.y, a.x)
    }

    /// Corners in counter-clockwise order.
    pub fn corners(&self) -> [Point; 4] {
        let u = self.axis() * (0.5 * self.length);
        let v = self.normal() * (0.5 * self.width);
        let c = self.center;
        [c - u - v, c + u - v, c + u + v, c - u + v]
    }

    /// The two congruent halves obtained by cutting perpendicular to the long axis.
    pub fn halves(&self) -> [Rect; 2] {
        let off = self.axis() * (0.25 * self.length);
        let half = |center| Rect {
            frame_angle: self.frame_angle,
            center,
            length: 0.5 * self.length,
            width: self.width,
        };
        [half(self.center - off), half(self.center + off)]
    }
}

/// Normalizes an angle into `[0, π)`, the range of an undirected axis.
pub fn axis_angle(theta: f64) -> f64 {
    let a = theta.rem_euclid(PI);
    if a >= PI {
        0.0
    } else {
        a
    }
}

pub fn dist(a: Point, b: Point) -> f64 {
    (a.x - b.x).hypot(a.y - b.y)
}

/// Coordinates of `p` in axes rotated counter-clockwise by `theta`.
pub fn rotate_frame(p: Point, theta: f64) -> Point {
    let (s, c) = theta.sin_cos();
    Point::new(p.x * c + p.y * s, -p.x * s + p.y * c)
}

/// Shoelace signed area; positive iff the ring is counter-clockwise.
pub fn signed_area(ring: &[Point]) -> Result<f64> {
    if ring.len() < 3 {
        return Err(Error::TooFewPoints {
            need: 3,
            got: ring.len(),
        });
    }
    let n = ring.len();
    let twice: f64 = (0..n).map(|i| ring[i].cross(ring[(i + 1) % n])).sum();
    Ok(0.5 * twice)
}

pub fn circumdisk_of_rect(r: &Rect) -> Disk {
    Disk::new(r.center, 0.5 * r.length.hypot(r.width))
}

pub fn disk_contains(d: &Disk, p: Point, eps: f64) -> bool {
    dist(d.center, p) <= d.radius + eps
}

/// Closed parameter interval `[lo, hi]` within `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, t: f64) -> bool {
        self.lo <= t && t <= self.hi
    }
}

/// Parameters `t ∈ [0, 1]` with `s(t)` inside the closed disk, or `None`.
///
/// Tangency produces a degenerate interval rather than `None`.
pub fn segment_disk_interval(s: &Segment, d: &Disk) -> Option<Interval> {
    let dir = s.q - s.p;
    let off = s.p - d.center;
    let a = dir.dot(dir);
    let c = off.dot(off) - d.radius * d.radius;
    if a == 0.0 {
        return (c <= 0.0).then_some(Interval { lo: 0.0, hi: 1.0 });
    }
    let half_b = dir.dot(off);
    let disc = half_b * half_b - a * c;
    if disc < 0.0 {
        return None;
    }
    let root = disc.sqrt();
    // Cancellation-free pair of roots.
    let (t1, t2) = if half_b > 0.0 {
        let q = -(half_b + root);
        (q / a, if q != 0.0 { c / q } else { 0.0 })
    } else {
        let q = -half_b + root;
        (if q != 0.0 { c / q } else { 0.0 }, q / a)
    };
    let (t1, t2) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
    let lo = t1.max(0.0);
    let hi = t2.min(1.0);
    (lo <= hi).then_some(Interval { lo, hi })
}
