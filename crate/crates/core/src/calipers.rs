//! Polygon diameter by rotating calipers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{dist, orient, Point};
use crate::polygon::ConvexPolygon;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiameterResult {
    /// Vertex indices with `i < j`.
    pub i: usize,
    pub j: usize,
    pub length: f64,
    /// Unit vector from vertex `i` to vertex `j`.
    pub direction: Point,
}

struct Best {
    pair: (usize, usize),
    length: f64,
}

impl Best {
    fn offer(&mut self, a: usize, b: usize, length: f64) {
        let pair = if a < b { (a, b) } else { (b, a) };
        if length > self.length || (length == self.length && pair < self.pair) {
            self.pair = pair;
            self.length = length;
        }
    }
}

/// Longest vertex-to-vertex distance; ties go to the lexicographically
/// smallest index pair.
///
/// Walks the antipodal pairs in O(n). Each probe also checks the calipers'
/// neighbours on either side, so rounding in the area comparisons cannot
/// skip the farthest pair.
pub fn diameter(p: &ConvexPolygon) -> Result<DiameterResult> {
    let v = p.vertices();
    let n = v.len();
    if n < 2 {
        return Err(Error::TooFewPoints { need: 2, got: n });
    }
    let mut best = Best {
        pair: (0, 1),
        length: f64::NEG_INFINITY,
    };

    if n <= 4 {
        for a in 0..n {
            for b in a + 1..n {
                best.offer(a, b, dist(v[a], v[b]));
            }
        }
    } else {
        let next = |k: usize| (k + 1) % n;
        let prev = |k: usize| (k + n - 1) % n;
        let mut j = 1;
        let mut steps = 0;
        for i in 0..n {
            let ni = next(i);
            while orient(v[i], v[ni], v[next(j)]) > orient(v[i], v[ni], v[j]) && steps < 2 * n {
                j = next(j);
                steps += 1;
            }
            for k in [prev(j), j, next(j)] {
                best.offer(i, k, dist(v[i], v[k]));
                best.offer(ni, k, dist(v[ni], v[k]));
            }
        }
    }

    let (i, j) = best.pair;
    let d = v[j] - v[i];
    let direction = if best.length > 0.0 {
        d * (1.0 / best.length)
    } else {
        Point::new(1.0, 0.0)
    };
    Ok(DiameterResult {
        i,
        j,
        length: best.length,
        direction,
    })
}
