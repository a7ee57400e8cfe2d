//! Reference two-center radius for measuring approximation ratios.
//!
//! The polygon boundary is sampled and the samples are split into two
//! contiguous runs; the best split minimizes the larger of the two smallest
//! enclosing circles. Any two disks covering the polygon cover the samples,
//! so the result never exceeds the optimum and approaches it as the
//! sampling gets denser.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{Disk, Point};
use crate::mec::{min_enclosing_circle, min_enclosing_circle_in_place};
use crate::polygon::{sample_boundary, ConvexPolygon};
use crate::stream::CoverSolution;

/// Largest point count accepted by [`brute_two_center`].
pub const BRUTE_MAX_POINTS: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleResult {
    pub radius: f64,
    /// Cut positions `a < b`: one run is `a..b`, the other wraps from `b` to `a`.
    pub split: (usize, usize),
    pub m: usize,
    /// Smallest enclosing circles of the two runs at `split`.
    pub disks: [Disk; 2],
}

#[derive(Clone, Copy)]
struct Candidate {
    radius: f64,
    split: (usize, usize),
}

impl Candidate {
    fn better(self, other: Candidate) -> Candidate {
        match self
            .radius
            .total_cmp(&other.radius)
            .then(self.split.cmp(&other.split))
        {
            std::cmp::Ordering::Greater => other,
            _ => self,
        }
    }
}

/// Smallest enclosing circle of the cyclic run `start .. start + len`.
fn arc_mec(ring: &[Point], start: usize, len: usize, scratch: &mut Vec<Point>) -> Disk {
    let m = ring.len();
    scratch.clear();
    scratch.extend((0..len).map(|k| ring[(start + k) % m]));
    min_enclosing_circle_in_place(scratch)
}

fn split_of(m: usize, start: usize, len: usize) -> (usize, usize) {
    let a = start;
    let b = (start + len) % m;
    (a.min(b), a.max(b))
}

/// Best contiguous split among those starting at `start`.
///
/// The leading run's circle only grows with its length and the trailing
/// run's only shrinks, so the optimum sits where they cross.
fn best_from(ring: &[Point], start: usize, scratch: &mut Vec<Point>) -> Candidate {
    let m = ring.len();
    let eval = |len: usize, scratch: &mut Vec<Point>| {
        let f = arc_mec(ring, start, len, scratch).radius;
        let g = arc_mec(ring, start + len, m - len, scratch).radius;
        (f, g)
    };
    let (mut lo, mut hi) = (1, m - 1);
    // smallest len with f >= g, or m - 1 if none
    while lo < hi {
        let mid = (lo + hi) / 2;
        let (f, g) = eval(mid, scratch);
        if f >= g {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let mut best: Option<Candidate> = None;
    for len in [lo.saturating_sub(1), lo] {
        if len == 0 {
            continue;
        }
        let (f, g) = eval(len, scratch);
        let c = Candidate {
            radius: f.max(g),
            split: split_of(m, start, len),
        };
        best = Some(best.map_or(c, |b| b.better(c)));
    }
    best.expect("ring has at least two points")
}

fn finish(ring: &[Point], best: Candidate) -> OracleResult {
    let (a, b) = best.split;
    let m = ring.len();
    let mut scratch = Vec::with_capacity(m);
    let d0 = arc_mec(ring, a, b - a, &mut scratch);
    let d1 = arc_mec(ring, b, m - (b - a), &mut scratch);
    OracleResult {
        radius: d0.radius.max(d1.radius),
        split: best.split,
        m,
        disks: [d0, d1],
    }
}

/// Best split of cyclically ordered points into two contiguous runs,
/// in O(m² log m) expected time.
pub fn arc_two_center_ring(ring: &[Point], parallel: bool) -> Result<OracleResult> {
    let m = ring.len();
    if m < 2 {
        return Err(Error::TooFewPoints { need: 2, got: m });
    }
    let best = if parallel {
        (0..m)
            .into_par_iter()
            .map_init(
                || Vec::with_capacity(m),
                |scratch, i| best_from(ring, i, scratch),
            )
            .reduce_with(Candidate::better)
            .unwrap()
    } else {
        let mut scratch = Vec::with_capacity(m);
        (0..m)
            .map(|i| best_from(ring, i, &mut scratch))
            .reduce(Candidate::better)
            .unwrap()
    };
    Ok(finish(ring, best))
}

/// Exhaustive O(m³) version of [`arc_two_center_ring`]: every cut pair, fresh circles.
pub fn arc_two_center_naive(ring: &[Point]) -> Result<OracleResult> {
    let m = ring.len();
    if m < 2 {
        return Err(Error::TooFewPoints { need: 2, got: m });
    }
    let mut scratch = Vec::with_capacity(m);
    let mut best: Option<Candidate> = None;
    for a in 0..m {
        for b in a + 1..m {
            let f = arc_mec(ring, a, b - a, &mut scratch).radius;
            let g = arc_mec(ring, b, m - (b - a), &mut scratch).radius;
            let c = Candidate {
                radius: f.max(g),
                split: (a, b),
            };
            best = Some(best.map_or(c, |x| x.better(c)));
        }
    }
    Ok(finish(ring, best.unwrap()))
}

/// Oracle radius for `p` from `m` boundary samples.
pub fn arc_two_center(p: &ConvexPolygon, m: usize) -> Result<OracleResult> {
    arc_two_center_with(p, m, false)
}

pub fn arc_two_center_with(p: &ConvexPolygon, m: usize, parallel: bool) -> Result<OracleResult> {
    let need = p.len().max(4);
    if m < need {
        return Err(Error::InvalidArgument(format!(
            "sample count {m} below minimum {need}"
        )));
    }
    let sample = sample_boundary(p, m)?;
    arc_two_center_ring(&sample.points, parallel)
}

/// Exact two-center radius of a small point set by trying every bipartition.
pub fn brute_two_center(points: &[Point]) -> Result<f64> {
    let n = points.len();
    if !(2..=BRUTE_MAX_POINTS).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "brute force takes 2..={BRUTE_MAX_POINTS} points, got {n}"
        )));
    }
    let mec = |set: &[Point]| {
        if set.is_empty() {
            Ok(0.0)
        } else {
            min_enclosing_circle(set).map(|d| d.radius)
        }
    };
    let mut best = f64::INFINITY;
    let (mut a, mut b) = (Vec::with_capacity(n), Vec::with_capacity(n));
    // point 0 always lands in the first group
    for mask in 0u32..(1 << (n - 1)) {
        a.clear();
        b.clear();
        a.push(points[0]);
        for (k, &p) in points[1..].iter().enumerate() {
            if mask >> k & 1 == 1 {
                a.push(p);
            } else {
                b.push(p);
            }
        }
        best = best.min(mec(&a)?.max(mec(&b)?));
    }
    Ok(best)
}

/// `sol.radius` over the oracle radius; never below the true ratio.
pub fn empirical_ratio(p: &ConvexPolygon, sol: &CoverSolution, m: usize) -> Result<f64> {
    let oracle = arc_two_center(p, m)?;
    ratio_against(sol, &oracle)
}

pub fn ratio_against(sol: &CoverSolution, oracle: &OracleResult) -> Result<f64> {
    if oracle.radius <= 0.0 {
        return Err(Error::UndefinedRatio);
    }
    Ok(sol.radius / oracle.radius)
}
