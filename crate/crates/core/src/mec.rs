//! Smallest enclosing circle by randomized incremental construction.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{dist, Disk, Point};

const SHUFFLE_SEED: u64 = 0x5eed_2c1e;

// Relative slack on containment while building; keeps cocircular inputs
// from re-triggering the inner loops on rounding noise.
const REL_SLACK: f64 = 1e-12;

/// Smallest disk containing every point. Expected O(n), deterministic.
pub fn min_enclosing_circle(pts: &[Point]) -> Result<Disk> {
    if pts.is_empty() {
        return Err(Error::TooFewPoints { need: 1, got: 0 });
    }
    let mut buf = pts.to_vec();
    Ok(min_enclosing_circle_in_place(&mut buf))
}

/// Same as [`min_enclosing_circle`], reusing the caller's buffer (which gets shuffled).
pub(crate) fn min_enclosing_circle_in_place(pts: &mut [Point]) -> Disk {
    debug_assert!(!pts.is_empty());
    let mut rng = ChaCha8Rng::seed_from_u64(SHUFFLE_SEED);
    pts.shuffle(&mut rng);

    let mut c = Disk::new(pts[0], 0.0);
    for i in 1..pts.len() {
        if inside(&c, pts[i]) {
            continue;
        }
        c = Disk::new(pts[i], 0.0);
        for j in 0..i {
            if inside(&c, pts[j]) {
                continue;
            }
            c = diameter_disk(pts[i], pts[j]);
            for k in 0..j {
                if !inside(&c, pts[k]) {
                    c = circle_through(pts[i], pts[j], pts[k]);
                }
            }
        }
    }
    c
}

fn inside(c: &Disk, p: Point) -> bool {
    dist(c.center, p) <= c.radius * (1.0 + REL_SLACK)
}

pub(crate) fn diameter_disk(a: Point, b: Point) -> Disk {
    Disk::new(a.midpoint(b), 0.5 * dist(a, b))
}

/// Circumcircle of three points; for (near-)collinear triples, the
/// diameter disk of the farthest pair.
pub(crate) fn circle_through(a: Point, b: Point, c: Point) -> Disk {
    let bx = b.x - a.x;
    let by = b.y - a.y;
    let cx = c.x - a.x;
    let cy = c.y - a.y;
    let d = 2.0 * (bx * cy - by * cx);
    let scale = (bx * bx + by * by).max(cx * cx + cy * cy);
    if d.abs() <= 1e-14 * scale {
        let pairs = [(a, b), (a, c), (b, c)];
        let (p, q) = pairs
            .into_iter()
            .max_by(|x, y| dist(x.0, x.1).total_cmp(&dist(y.0, y.1)))
            .unwrap();
        return diameter_disk(p, q);
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    let center = Point::new(a.x + ux, a.y + uy);
    let radius = dist(center, a).max(dist(center, b)).max(dist(center, c));
    Disk::new(center, radius)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    /// Exhaustive minimum over every pair- and triple-defined circle.
    fn brute_mec(pts: &[Point]) -> f64 {
        let n = pts.len();
        if n == 1 {
            return 0.0;
        }
        let covers = |d: &Disk| {
            pts.iter()
                .all(|&p| dist(d.center, p) <= d.radius * (1.0 + 1e-12) + 1e-15)
        };
        let mut best = f64::INFINITY;
        for i in 0..n {
            for j in i + 1..n {
                let d = diameter_disk(pts[i], pts[j]);
                if covers(&d) {
                    best = best.min(d.radius);
                }
                for k in j + 1..n {
                    let d = circle_through(pts[i], pts[j], pts[k]);
                    if covers(&d) {
                        best = best.min(d.radius);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn examples() {
        assert!(min_enclosing_circle(&[]).is_err());
        assert_eq!(
            min_enclosing_circle(&[Point::new(0.0, 0.0)]).unwrap(),
            Disk::new(Point::new(0.0, 0.0), 0.0)
        );
        let d = min_enclosing_circle(&[Point::new(0.0, 0.0), Point::new(2.0, 0.0)]).unwrap();
        assert_eq!(d, Disk::new(Point::new(1.0, 0.0), 1.0));
        let d = min_enclosing_circle(&[
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(dist(d.center, Point::new(0.5, 0.5)) < 1e-12);
        assert!((d.radius - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn matches_exhaustive_minimum() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let n = rng.gen_range(1..=10);
            let pts: Vec<Point> = (0..n)
                .map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let d = min_enclosing_circle(&pts).unwrap();
            let want = brute_mec(&pts);
            assert!(
                (d.radius - want).abs() <= 1e-9,
                "{} vs {want} for {pts:?}",
                d.radius
            );
            for p in &pts {
                assert!(dist(d.center, *p) <= d.radius * (1.0 + 1e-9));
            }
        }
    }

    #[test]
    fn collinear_and_duplicate_points() {
        let pts = [
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(3.0, 0.0),
            Point::new(3.0, 0.0),
            Point::new(2.0, 0.0),
        ];
        let d = min_enclosing_circle(&pts).unwrap();
        assert!((d.radius - 1.5).abs() < 1e-12);
        assert!(dist(d.center, Point::new(1.5, 0.0)) < 1e-12);
    }
}
