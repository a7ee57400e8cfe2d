//! Linear-time cover aligned with the polygon's diameter.

use crate::calipers::diameter;
use crate::error::Result;
use crate::geom::{axis_angle, rotate_frame, Rect};
use crate::polygon::ConvexPolygon;
use crate::stream::{CoverSolution, Method};

/// Bounding box of `p` in the frame whose x-axis is the diameter direction,
/// split across the diameter and circumscribed. Disk centres are reported
/// in the input frame.
pub fn batch_cover(p: &ConvexPolygon) -> Result<CoverSolution> {
    let d = diameter(p)?;
    let angle = axis_angle(d.direction.y.atan2(d.direction.x));

    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for &v in p.vertices() {
        let q = rotate_frame(v, angle);
        x0 = x0.min(q.x);
        x1 = x1.max(q.x);
        y0 = y0.min(q.y);
        y1 = y1.max(q.y);
    }
    let mid = crate::geom::Point::new(0.5 * (x0 + x1), 0.5 * (y0 + y1));
    let rect = Rect {
        frame_angle: angle,
        center: rotate_frame(mid, -angle),
        length: x1 - x0,
        width: y1 - y0,
    };
    Ok(CoverSolution::from_rect(rect, Method::Batch))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{dist, Point};
    use crate::stream::half_rect_radius;

    #[test]
    fn equilateral_triangle() {
        let h = 3f64.sqrt() / 2.0;
        let p = ConvexPolygon::validate(&[
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, h),
        ])
        .unwrap();
        let sol = batch_cover(&p).unwrap();
        assert!((sol.rect.length - 1.0).abs() < 1e-12);
        assert!((sol.rect.width - h).abs() < 1e-12);
        assert!((sol.radius - 0.5).abs() < 1e-12);
        assert_eq!(sol.method, Method::Batch);
    }

    #[test]
    fn unit_square() {
        let p = ConvexPolygon::validate(&[
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let sol = batch_cover(&p).unwrap();
        // Independent recomputation: project onto the diagonal and its normal.
        let u = Point::new(1.0, 1.0) * (1.0 / 2f64.sqrt());
        let nrm = Point::new(-u.y, u.x);
        let span = |dir: Point| {
            let proj: Vec<f64> = p.vertices().iter().map(|v| v.dot(dir)).collect();
            proj.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
                - proj.iter().cloned().fold(f64::INFINITY, f64::min)
        };
        let (len, wid) = (span(u), span(nrm));
        assert!((sol.radius - half_rect_radius(len, wid)).abs() < 1e-12);
        assert!((sol.radius - 0.7905694150).abs() < 1e-10);
        assert!(dist(sol.disks[0].center, Point::new(0.25, 0.25)) < 1e-12);
        assert!(dist(sol.disks[1].center, Point::new(0.75, 0.75)) < 1e-12);
    }

    #[test]
    fn segment_polygon() {
        let p = ConvexPolygon::segment(Point::new(0.0, 0.0), Point::new(2.0, 0.0)).unwrap();
        let sol = batch_cover(&p).unwrap();
        assert_eq!((sol.rect.length, sol.rect.width), (2.0, 0.0));
        assert_eq!(sol.radius, 0.5);
        assert_eq!(sol.disks[0].center, Point::new(0.5, 0.0));
        assert_eq!(sol.disks[1].center, Point::new(1.5, 0.0));
    }
}
