//! Per-instance lower bounds on the optimal two-center radius.
//!
//! Any two disks covering the polygon cover every segment and triangle
//! inside it. Two disks covering a segment of length `s` have radius at
//! least `s / 4`; two disks covering the corners of a triangle put two
//! corners in one disk, so the radius is at least half the triangle's
//! shortest side. Both bounds are evaluated on the vertices that attain
//! the axis-parallel extremes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{dist, Point, Segment};
use crate::polygon::ConvexPolygon;
use crate::stream::CoverSolution;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubpolygonKind {
    Quad,
    Triangle,
    Segment,
}

/// The polygon spanned by the vertices touching the sides of the
/// axis-parallel bounding box. It is covered exactly by the same box.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremeSubpolygon {
    pub kind: SubpolygonKind,
    pub vertices: Vec<Point>,
    /// Positions of `vertices` in the source polygon, ascending.
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    Segment {
        segment: Segment,
    },
    Triangle {
        vertices: [Point; 3],
        shortest_side: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LowerBoundCert {
    pub rho: f64,
    pub witness: Witness,
}

// At most this many tied candidates per side are considered.
const MAX_TIED: usize = 3;

pub fn extreme_subpolygon(p: &ConvexPolygon) -> ExtremeSubpolygon {
    let v = p.vertices();
    let xs = v.iter().map(|q| q.x);
    let ys = v.iter().map(|q| q.y);
    let min_x = xs.clone().fold(f64::INFINITY, f64::min);
    let max_x = xs.fold(f64::NEG_INFINITY, f64::max);
    let min_y = ys.clone().fold(f64::INFINITY, f64::min);
    let max_y = ys.fold(f64::NEG_INFINITY, f64::max);
    let tol = 1e-12 * (max_x - min_x).max(max_y - min_y);

    let tied = |key: &dyn Fn(&Point) -> f64, target: f64| -> Vec<usize> {
        let mut c: Vec<usize> = (0..v.len())
            .filter(|&i| (key(&v[i]) - target).abs() <= tol)
            .collect();
        c.truncate(MAX_TIED);
        c
    };
    let roles = [
        tied(&|q| q.x, min_x),
        tied(&|q| q.x, max_x),
        tied(&|q| q.y, min_y),
        tied(&|q| q.y, max_y),
    ];

    // Pick one vertex per side, preferring the most distinct vertices;
    // among equals the first combination in lexicographic order wins.
    let mut best: Vec<usize> = Vec::new();
    for &a in &roles[0] {
        for &b in &roles[1] {
            for &c in &roles[2] {
                for &d in &roles[3] {
                    let mut pick = vec![a, b, c, d];
                    pick.sort_unstable();
                    pick.dedup();
                    if pick.len() > best.len() {
                        best = pick;
                    }
                }
            }
        }
    }

    let kind = match best.len() {
        4 => SubpolygonKind::Quad,
        3 => SubpolygonKind::Triangle,
        _ => SubpolygonKind::Segment,
    };
    ExtremeSubpolygon {
        kind,
        vertices: best.iter().map(|&i| v[i]).collect(),
        indices: best,
    }
}

/// Largest of `|pq| / 4` over vertex pairs and `ℓ / 2` over vertex triples
/// (`ℓ` the triple's shortest side). Earlier candidates win ties.
pub fn lower_bound_rho(sub: &ExtremeSubpolygon) -> LowerBoundCert {
    let v = &sub.vertices;
    let n = v.len();
    let mut best = LowerBoundCert {
        rho: f64::NEG_INFINITY,
        witness: Witness::Segment {
            segment: Segment::new(v[0], v[0]),
        },
    };
    for a in 0..n {
        for b in a + 1..n {
            let rho = dist(v[a], v[b]) / 4.0;
            if rho > best.rho {
                best = LowerBoundCert {
                    rho,
                    witness: Witness::Segment {
                        segment: Segment::new(v[a], v[b]),
                    },
                };
            }
        }
    }
    if sub.kind != SubpolygonKind::Segment {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let ell = dist(v[a], v[b]).min(dist(v[b], v[c])).min(dist(v[a], v[c]));
                    if ell / 2.0 > best.rho {
                        best = LowerBoundCert {
                            rho: ell / 2.0,
                            witness: Witness::Triangle {
                                vertices: [v[a], v[b], v[c]],
                                shortest_side: ell,
                            },
                        };
                    }
                }
            }
        }
    }
    best.rho = best.rho.max(0.0);
    best
}

/// Lower-bound certificate for `p`.
pub fn certificate(p: &ConvexPolygon) -> LowerBoundCert {
    lower_bound_rho(&extreme_subpolygon(p))
}

/// `r / ρ`: an upper bound on the achieved approximation factor.
pub fn certified_ratio(sol: &CoverSolution, cert: &LowerBoundCert) -> Result<f64> {
    if cert.rho <= 0.0 {
        return Err(Error::UndefinedRatio);
    }
    Ok(sol.radius / cert.rho)
}
