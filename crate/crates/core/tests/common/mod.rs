#![allow(dead_code)]

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twodisc::geom::{dist, rotate_frame};
use twodisc::{gen_random_convex, gen_regular, gen_square_diamond, ConvexPolygon, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Regular,
    Random,
    SquareDiamond,
}

pub struct Case {
    pub family: Family,
    pub seed: u64,
    pub poly: ConvexPolygon,
}

/// Rotates by `theta` about the origin and shifts by `shift`.
pub fn rigid(p: &ConvexPolygon, theta: f64, shift: Point) -> ConvexPolygon {
    p.map(|v| rotate_frame(v, -theta) + shift).unwrap()
}

/// Mixed corpus: 4 in 10 regular, 5 in 10 Valtr-random, 1 in 10 square
/// diamonds; n drawn from 3..=512, most instances randomly rotated.
pub fn corpus(count: usize) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0_4915);
    (0..count)
        .map(|i| {
            let seed = i as u64;
            let n = rng.gen_range(3..=512usize);
            let theta = rng.gen_range(0.0..TAU);
            let shift = Point::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let (family, poly) = match i % 10 {
                0..=3 => {
                    let r = rng.gen_range(0.1..10.0);
                    (
                        Family::Regular,
                        rigid(&gen_regular(n, r).unwrap(), theta, shift),
                    )
                }
                4..=8 => {
                    let p = gen_random_convex(n, seed).unwrap();
                    let p = if i % 2 == 0 {
                        rigid(&p, theta, shift)
                    } else {
                        p
                    };
                    (Family::Random, p)
                }
                _ => {
                    let t = rng.gen_range(0.0..=1.0);
                    let p = gen_square_diamond(t).unwrap();
                    let p = if i % 20 == 9 {
                        p
                    } else {
                        rigid(&p, theta, shift)
                    };
                    (Family::SquareDiamond, p)
                }
            };
            Case { family, seed, poly }
        })
        .collect()
}

/// O(n²) maximum vertex distance; ties go to the first pair in
/// lexicographic order.
pub fn brute_diameter(p: &ConvexPolygon) -> (usize, usize, f64) {
    let v = p.vertices();
    let mut best = (0, 1, f64::NEG_INFINITY);
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            let d = dist(v[a], v[b]);
            if d > best.2 {
                best = (a, b, d);
            }
        }
    }
    best
}

pub fn unit_square() -> ConvexPolygon {
    ConvexPolygon::validate(&[
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ])
    .unwrap()
}

pub fn eq_triangle() -> ConvexPolygon {
    ConvexPolygon::validate(&[
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(0.5, 3f64.sqrt() / 2.0),
    ])
    .unwrap()
}
