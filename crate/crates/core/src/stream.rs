//! Single-pass, constant-space two-disk cover.
//!
//! The stream keeps only the four coordinate extremes seen so far. The
//! final cover splits their bounding box across its longer side and
//! circumscribes each half.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{circumdisk_of_rect, Disk, Point, Rect};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Stream,
    Batch,
}

/// Two congruent disks together with the rectangle they circumscribe.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverSolution {
    pub disks: [Disk; 2],
    pub radius: f64,
    pub rect: Rect,
    pub method: Method,
}

impl CoverSolution {
    /// Splits `rect` perpendicular to its long axis and circumscribes the halves.
    pub fn from_rect(rect: Rect, method: Method) -> Self {
        let [h0, h1] = rect.halves();
        let d0 = circumdisk_of_rect(&h0);
        let d1 = circumdisk_of_rect(&h1);
        CoverSolution {
            disks: [d0, d1],
            radius: d0.radius,
            rect,
            method,
        }
    }

    /// Same centres, both radii scaled by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = *self;
        out.radius *= factor;
        for d in &mut out.disks {
            d.radius *= factor;
        }
        out
    }
}

/// `¼√(L² + 4W²)`: radius of the disks circumscribing the halves of an `L × W` rectangle.
pub fn half_rect_radius(length: f64, width: f64) -> f64 {
    0.25 * (length * length + 4.0 * width * width).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extreme {
    pub value: f64,
    pub witness: Point,
}

/// Running extremes of a point stream. Fixed size regardless of input length.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct StreamState {
    pub min_x: Option<Extreme>,
    pub max_x: Option<Extreme>,
    pub min_y: Option<Extreme>,
    pub max_y: Option<Extreme>,
    pub count: u64,
}

/// Length of [`StreamState::to_bytes`].
pub const STREAM_STATE_BYTES: usize = 8 + 4 * 25;

fn take(slot: &mut Option<Extreme>, value: f64, witness: Point, better: impl Fn(f64, f64) -> bool) {
    match slot {
        Some(e) if !better(value, e.value) => {}
        _ => *slot = Some(Extreme { value, witness }),
    }
}

impl StreamState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Feeds one point. Extremes change only on strict improvement, so the
    /// first witness of a tie is kept.
    pub fn push(&mut self, p: Point) -> Result<()> {
        if !p.is_finite() {
            return Err(Error::NonFinite(format!("({}, {})", p.x, p.y)));
        }
        take(&mut self.min_x, p.x, p, |a, b| a < b);
        take(&mut self.max_x, p.x, p, |a, b| a > b);
        take(&mut self.min_y, p.y, p, |a, b| a < b);
        take(&mut self.max_y, p.y, p, |a, b| a > b);
        self.count += 1;
        Ok(())
    }

    /// Combines states built over disjoint parts of one input. Ties keep `self`'s witness.
    pub fn merge(&self, other: &StreamState) -> StreamState {
        let mut out = *self;
        let pairs = [
            (&mut out.min_x, other.min_x, true),
            (&mut out.max_x, other.max_x, false),
            (&mut out.min_y, other.min_y, true),
            (&mut out.max_y, other.max_y, false),
        ];
        for (slot, theirs, is_min) in pairs {
            if let Some(e) = theirs {
                if is_min {
                    take(slot, e.value, e.witness, |a, b| a < b);
                } else {
                    take(slot, e.value, e.witness, |a, b| a > b);
                }
            }
        }
        out.count = self.count + other.count;
        out
    }

    /// Fixed-layout little-endian encoding: the count, then per extreme a
    /// presence byte, the value and the witness coordinates.
    pub fn to_bytes(&self) -> [u8; STREAM_STATE_BYTES] {
        let mut buf = [0u8; STREAM_STATE_BYTES];
        buf[..8].copy_from_slice(&self.count.to_le_bytes());
        for (k, slot) in self.extremes().iter().enumerate() {
            let off = 8 + 25 * k;
            if let Some(e) = slot {
                buf[off] = 1;
                buf[off + 1..off + 9].copy_from_slice(&e.value.to_le_bytes());
                buf[off + 9..off + 17].copy_from_slice(&e.witness.x.to_le_bytes());
                buf[off + 17..off + 25].copy_from_slice(&e.witness.y.to_le_bytes());
            }
        }
        buf
    }

    pub fn from_bytes(buf: &[u8; STREAM_STATE_BYTES]) -> Self {
        let f = |o: usize| f64::from_le_bytes(buf[o..o + 8].try_into().unwrap());
        let slot = |k: usize| {
            let off = 8 + 25 * k;
            (buf[off] == 1).then(|| Extreme {
                value: f(off + 1),
                witness: Point::new(f(off + 9), f(off + 17)),
            })
        };
        StreamState {
            count: u64::from_le_bytes(buf[..8].try_into().unwrap()),
            min_x: slot(0),
            max_x: slot(1),
            min_y: slot(2),
            max_y: slot(3),
        }
    }

    pub fn extremes(&self) -> [Option<Extreme>; 4] {
        [self.min_x, self.max_x, self.min_y, self.max_y]
    }

    /// Axis-parallel bounding rectangle, long axis along x unless strictly taller than wide.
    pub fn bounding_rect(&self) -> Result<Rect> {
        let (Some(x0), Some(x1), Some(y0), Some(y1)) =
            (self.min_x, self.max_x, self.min_y, self.max_y)
        else {
            return Err(Error::EmptyStream);
        };
        let w = x1.value - x0.value;
        let h = y1.value - y0.value;
        let center = Point::new(0.5 * (x0.value + x1.value), 0.5 * (y0.value + y1.value));
        Ok(if w >= h {
            Rect {
                frame_angle: 0.0,
                center,
                length: w,
                width: h,
            }
        } else {
            Rect {
                frame_angle: FRAC_PI_2,
                center,
                length: h,
                width: w,
            }
        })
    }

    pub fn finalize(&self) -> Result<CoverSolution> {
        Ok(CoverSolution::from_rect(
            self.bounding_rect()?,
            Method::Stream,
        ))
    }
}

pub fn stream_update(state: StreamState, p: Point) -> Result<StreamState> {
    let mut s = state;
    s.push(p)?;
    Ok(s)
}

pub fn stream_finalize(state: &StreamState) -> Result<CoverSolution> {
    state.finalize()
}

/// Runs the whole stream over `points`.
pub fn stream_cover<I: IntoIterator<Item = Point>>(points: I) -> Result<CoverSolution> {
    let mut s = StreamState::new();
    for p in points {
        s.push(p)?;
    }
    s.finalize()
}
